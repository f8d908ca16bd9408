//! Exact rational scalars shared by every module.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p"`, `"-p"` or `"p/q"` exactly. Surrounding whitespace is ignored.
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    let text = text.trim();
    let bad = || AlgebraError::InvalidRational(text.to_string());
    match text.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => BigInt::from_str(text)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Writes `c` as the coefficient of a non-unit monomial in a signed sum.
/// `first` controls whether a leading `+` is suppressed.
pub(crate) fn write_signed_term(
    out: &mut String,
    coefficient: &Rational,
    monomial: &str,
    first: bool,
) {
    let negative = coefficient.is_negative();
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let magnitude = coefficient.abs();
    if monomial.is_empty() {
        out.push_str(&magnitude.to_string());
    } else if magnitude.is_one() {
        out.push_str(monomial);
    } else {
        out.push_str(&magnitude.to_string());
        out.push(' ');
        out.push_str(monomial);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational(" -4/6 ").unwrap(), rat(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
