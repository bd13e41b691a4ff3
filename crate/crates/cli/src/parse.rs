//! Text forms accepted on the command line.

use cyclic_polytope::cyclic::{ChainSet, SignWord};
use cyclic_polytope::transfer::RationalPoint;
use cyclic_polytope::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid rational {0:?}: expected `p/q` or an integer")]
    Rational(String),
    #[error("invalid polynomial term {0:?}")]
    Polynomial(String),
    #[error(transparent)]
    Domain(#[from] cyclic_polytope::Error),
}

/// `p/q`, or a bare integer.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseError> {
    let bad = || ParseError::Rational(text.to_string());
    let text = text.trim();
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

/// Comma-separated rationals, each in `[0,1)`.
pub fn parse_point(text: &str) -> Result<RationalPoint, ParseError> {
    let coords = text
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalPoint::new(coords)?)
}

pub fn parse_chain_set(text: &str, n: usize) -> Result<ChainSet, ParseError> {
    Ok(cyclic_polytope::cyclic::parse_chain_set(text, n)?)
}

pub fn parse_sign_word(text: &str) -> Result<SignWord, ParseError> {
    Ok(text.trim().parse()?)
}

/// Polynomials in `z` written like `z^3 + 7z^2 + 7z + 1`.
pub fn parse_polynomial(text: &str) -> Result<IntPolynomial, ParseError> {
    let compact: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '$')
        .collect();
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'+' => (false, &rest[1..]),
            b'-' => (true, &rest[1..]),
            _ => (false, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let bad = || ParseError::Polynomial(term.to_string());
        let (coef, degree) = match term.split_once('z') {
            None => (term.parse::<BigInt>().map_err(|_| bad())?, 0usize),
            Some((c, power)) => {
                let c = if c.is_empty() {
                    BigInt::from(1)
                } else {
                    c.parse().map_err(|_| bad())?
                };
                let d = match power.strip_prefix('^') {
                    Some(d) => d.parse().map_err(|_| bad())?,
                    None if power.is_empty() => 1,
                    None => return Err(bad()),
                };
                (c, d)
            }
        };
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, BigInt::zero());
        }
        coeffs[degree] += if neg { -coef } else { coef };
    }
    Ok(IntPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("3/4").unwrap(),
            BigRational::new(3.into(), 4.into())
        );
        assert_eq!(
            parse_rational(" 2 ").unwrap(),
            BigRational::from_integer(2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
    }

    #[test]
    fn points() {
        let p = parse_point("1/2,3/4,0").unwrap();
        assert_eq!(p.dim(), 3);
        assert!(parse_point("1/2,1").is_err());
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            parse_polynomial("z^3 + 7z^2 + 7z + 1").unwrap(),
            IntPolynomial::from_i64s(&[1, 7, 7, 1])
        );
        assert_eq!(parse_polynomial("$1$").unwrap(), IntPolynomial::one());
        assert_eq!(
            parse_polynomial("z+1").unwrap(),
            IntPolynomial::from_i64s(&[1, 1])
        );
        assert_eq!(
            parse_polynomial("-2z^2-1").unwrap(),
            IntPolynomial::from_i64s(&[-1, 0, -2])
        );
        assert!(parse_polynomial("z^x").is_err());
        for p in ["z^5+57z^4+302z^3+302z^2+57z+1", "z"] {
            assert_eq!(parse_polynomial(p).unwrap().to_string(), p);
        }
    }

    #[test]
    fn chain_sets_and_sign_words() {
        assert_eq!(parse_chain_set("0-2,1-3,2-4", 4).unwrap().pairs().len(), 3);
        assert!(parse_chain_set("0-5", 4).is_err());
        assert_eq!(parse_sign_word("++-+").unwrap().len(), 4);
        assert!(parse_sign_word("+*").is_err());
    }
}
