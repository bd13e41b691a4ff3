//! Exact computations on consecutive-sum polytopes in `[0,1]^n` and the total
//! cyclic orders that extend chain conditions on consecutive integers.
//!
//! Three independent routes reach the same numbers: lattice-point counting
//! ([`polytope`]), enumeration of cyclic words ([`cyclic`]) and the
//! simplex-array recurrence ([`boustrophedon`]). The [`transfer`] module holds
//! the map that explains why they agree, [`parking`] the bijection behind the
//! Narayana limit, and [`sequences`] the classical oracles.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use cyclic_polytope::cyclic::{count_chain_class, ChainSet};
//! use cyclic_polytope::polytope::{hstar, normalized_volume, ConstraintSystem};
//!
//! let sys = ConstraintSystem::hat(2, 7)?;
//! assert_eq!(normalized_volume(&sys)?.to_string(), "272");
//! assert_eq!(count_chain_class(&ChainSet::hat(2, 7)?).to_string(), "272");
//! assert_eq!(hstar(&ConstraintSystem::hat(3, 6)?)?.to_string(), "z^3+6z^2+6z+1");
//! # Ok::<(), cyclic_polytope::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boustrophedon;
pub mod cyclic;
pub mod error;
pub mod parking;
pub mod poly;
pub mod polytope;
pub mod sequences;
pub mod transfer;

pub use error::{Error, Result};
pub use poly::{IntPolynomial, RatPolynomial};
