//! Arbitrary precision rational numbers.
//!
//! The representation is `num_rational::BigRational`, which already keeps
//! every value in lowest terms with a positive denominator. This module pins
//! down the constructors, parsing and formatting the rest of the crate
//! relies on, so the invariants are tested here rather than re-derived.

use alloc::string::{String, ToString};

use num_bigint::BigInt;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

/// Builds `n / d` in canonical form.
///
/// # Panics
///
/// Panics when `d` is zero.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Embeds an integer.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Error produced when a string is not a valid rational literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRatError {
    pub input: String,
    pub reason: &'static str,
}

impl core::fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "invalid rational `{}`: {}", self.input, self.reason)
    }
}

/// Parses `a` or `a/b` with optional leading sign, e.g. `-3/4`.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let err = |reason| ParseRatError {
        input: s.to_string(),
        reason,
    };
    let t = s.trim();
    if t.is_empty() {
        return Err(err("empty string"));
    }
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num: BigInt = num_str.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| err("bad denominator"))?,
        None => BigInt::from(1),
    };
    if den == BigInt::from(0) {
        return Err(err("zero denominator"));
    }
    Ok(Rat::new(num, den))
}

/// Canonical rendering: `a` for integers, `a/b` otherwise.
pub fn format_rat(q: &Rat) -> String {
    q.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Pow, Signed, Zero};

    #[test]
    fn construction_normalizes() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(-2, -4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert!(rat(1, -2).denom() > &BigInt::zero());
        assert_eq!(rat(0, 7), int(0));
    }

    #[test]
    #[should_panic]
    fn zero_denominator_panics() {
        let _ = rat(1, 0);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(1, 2) - rat(1, 2), int(0));
        assert_eq!(rat(2, 3) * rat(3, 4), rat(1, 2));
        assert_eq!(rat(1, 2) / rat(3, 2), rat(1, 3));
        assert_eq!(-rat(1, 2), rat(-1, 2));
        assert!(rat(1, 3) < rat(1, 2));
        assert!(rat(-1, 2).is_negative());
    }

    #[test]
    fn powers() {
        assert_eq!(rat(2, 3).pow(3i32), rat(8, 27));
        assert_eq!(rat(2, 3).pow(-2i32), rat(9, 4));
        assert_eq!(rat(5, 7).pow(0i32), int(1));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rat("5/6").unwrap(), rat(5, 6));
        assert_eq!(parse_rat("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rat("7").unwrap(), int(7));
        assert_eq!(parse_rat(" 2 / 4 ").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("4/-6").unwrap(), rat(-2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1/2/3").is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rat(&rat(-3, 4)), "-3/4");
        assert_eq!(format_rat(&int(17)), "17");
        assert_eq!(format_rat(&rat(6, 2)), "3");
        assert_eq!(format_rat(&int(0)), "0");
    }

    #[test]
    fn parse_format_round_trip() {
        for n in -20i64..20 {
            for d in 1i64..8 {
                let q = rat(n, d);
                assert_eq!(parse_rat(&format_rat(&q)).unwrap(), q);
            }
        }
    }

    #[test]
    fn one_and_zero() {
        assert!(int(1).is_one());
        assert!(int(0).is_zero());
        assert!(!rat(1, 2).is_one());
    }
}
