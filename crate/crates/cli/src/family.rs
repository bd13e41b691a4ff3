//! The three polytope families a command can target.

use cyclic_polytope::cyclic::{ChainSet, SignWord};
use cyclic_polytope::polytope::ConstraintSystem;
use cyclic_polytope::Result;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `B̂_{k,n}`: every `k` consecutive coordinates sum to at most one.
    Hat { k: usize, n: usize },
    /// `B_{I,n}`.
    Chain(ChainSet),
    /// `B̃_s`, of dimension `len(s) + 1`.
    Sign(SignWord),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Params {
    Hat { k: usize },
    Chain { pairs: String },
    Sign { signword: String },
}

impl Family {
    /// Checks the preconditions of the underlying constructors.
    pub fn hat(k: usize, n: usize) -> Result<Self> {
        ChainSet::hat(k, n)?;
        Ok(Family::Hat { k, n })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Family::Hat { .. } => "hat",
            Family::Chain(_) => "I",
            Family::Sign(_) => "tilde",
        }
    }

    /// Ambient dimension of the polytope.
    pub fn n(&self) -> usize {
        match self {
            Family::Hat { n, .. } => *n,
            Family::Chain(cs) => cs.n(),
            Family::Sign(s) => s.len() + 1,
        }
    }

    pub fn params(&self) -> Params {
        match self {
            Family::Hat { k, .. } => Params::Hat { k: *k },
            Family::Chain(cs) => Params::Chain {
                pairs: cs.to_string(),
            },
            Family::Sign(s) => Params::Sign {
                signword: s.to_string(),
            },
        }
    }

    pub fn system(&self) -> Result<ConstraintSystem> {
        match self {
            Family::Hat { k, n } => ConstraintSystem::hat(*k, *n),
            Family::Chain(cs) => Ok(ConstraintSystem::from_chain_set(cs)),
            Family::Sign(s) => Ok(ConstraintSystem::from_sign_word(s)),
        }
    }

    /// The chain set whose circular extensions this polytope measures, if any.
    pub fn chain_set(&self) -> Result<Option<ChainSet>> {
        match self {
            Family::Hat { k, n } => ChainSet::hat(*k, *n).map(Some),
            Family::Chain(cs) => Ok(Some(cs.clone())),
            Family::Sign(_) => Ok(None),
        }
    }
}
