//! Exact rationals and probability parsing.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num / den` as an exact rational.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A parsed probability and whether it came from a decimal literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedProbability {
    pub value: Rational,
    /// Decimal input `0.3` becomes `3/10`; flagged so reports can say so.
    pub from_decimal: bool,
}

/// Parses `"num/den"`, an integer, or a plain decimal `"0.125"` into an
/// exact rational. Decimals become `digits / 10^d`.
pub fn parse_rational(text: &str) -> Result<ParsedProbability> {
    let s = text.trim();
    let bad = || Error::Parse(alloc::format!("not a rational number: {text:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::Parse(alloc::format!("zero denominator in {text:?}")));
        }
        return Ok(ParsedProbability { value: Rational::new(num, den), from_decimal: false });
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if (int_digits.is_empty() && frac.is_empty())
            || !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let mut digits = String::from(int_digits);
        digits.push_str(frac);
        let mut num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
        if neg {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10u8), frac.len());
        return Ok(ParsedProbability { value: Rational::new(num, den), from_decimal: true });
    }
    let num: BigInt = s.parse().map_err(|_| bad())?;
    Ok(ParsedProbability { value: Rational::from_integer(num), from_decimal: false })
}

/// Errors unless `0 <= p <= 1`.
pub fn check_closed_unit(p: &Rational) -> Result<()> {
    if p.is_negative() || *p > Rational::one() {
        return Err(Error::ProbabilityOutOfRange(p.to_string()));
    }
    Ok(())
}

/// Errors unless `0 < p < 1`.
pub fn check_open_unit(p: &Rational) -> Result<()> {
    if !p.is_positive() || *p >= Rational::one() {
        return Err(Error::ProbabilityOutOfRange(p.to_string()));
    }
    Ok(())
}

/// Nearest `f64` (for display only).
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `base^exp` for a rational base.
pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}
