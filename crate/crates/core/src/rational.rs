//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// `a / b` as a rational.
pub fn ratio(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

pub fn int(a: i64) -> Rational {
    Rational::from_integer(BigInt::from(a))
}

/// Parses `"a/b"` (with `b > 0`) or a plain integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::invalid(format!("malformed rational {s:?}, expected a/b with b > 0"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if !den.is_positive() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(num))
        }
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact fraction followed by a decimal approximation, e.g. `1/7 (0.1428571429)`.
pub fn display(x: &Rational) -> String {
    format!("{} ({:.10})", x, to_f64(x))
}

/// `ceil(a / b)` for positive `b`.
pub fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

pub(crate) fn check_unit_interval(p: &Rational) -> Result<()> {
    if p.is_negative() || *p > Rational::one() {
        return Err(Error::invalid(format!("p = {p} is outside [0, 1]")));
    }
    Ok(())
}

pub(crate) fn check_open_unit_interval(p: &Rational) -> Result<()> {
    if !p.is_positive() || *p >= Rational::one() {
        return Err(Error::invalid(format!("p = {p} is outside (0, 1)")));
    }
    Ok(())
}

pub(crate) fn sum<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Rational {
    xs.into_iter().fold(Rational::zero(), |acc, x| acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("1/7").unwrap(), ratio(1, 7));
        assert_eq!(parse_rational(" 2/4 ").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("1").unwrap(), int(1));
        assert_eq!(parse_rational("-3/9").unwrap(), ratio(-1, 3));
    }

    #[test]
    fn rejects_malformed_rationals() {
        for s in ["1/0", "1/-2", "a/b", "", "1/2/3", "0.5"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn display_has_fraction_then_decimal() {
        assert_eq!(display(&ratio(1, 8)), "1/8 (0.1250000000)");
    }
}
