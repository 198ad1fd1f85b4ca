//! Helpers around [`BigRational`]: the `"num/den"` wire format and a few
//! integer utilities shared by the counting code.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn big(value: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(value.into())
}

/// Serializes as `"num/den"`, always with an explicit denominator.
pub fn format_rational(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Accepts `"num/den"` or a bare integer.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational: `{text}`"));
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    (0..r).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `a (a-1) ... (a-len+1)`; zero as soon as the last factor is not positive.
pub fn falling_factorial(a: i64, len: u64) -> BigInt {
    if len == 0 {
        return BigInt::one();
    }
    if a - len as i64 + 1 <= 0 {
        return BigInt::zero();
    }
    (0..len as i64).fold(BigInt::one(), |acc, i| acc * (a - i))
}

/// Integer power with a possibly negative exponent.
pub fn rational_pow(base: &BigRational, exp: i64) -> Result<BigRational> {
    if exp >= 0 {
        return Ok(num_traits::pow(base.clone(), exp as usize));
    }
    if base.is_zero() {
        return Err(Error::InvalidInput(
            "zero raised to a negative power".into(),
        ));
    }
    Ok(num_traits::pow(base.recip(), exp.unsigned_abs() as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format_round_trips() {
        assert_eq!(format_rational(&rat(6, 4)), "3/2");
        assert_eq!(format_rational(&int(10)), "10/1");
        assert_eq!(format_rational(&rat(-1, 3)), "-1/3");
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn falling_factorial_vanishes_past_zero() {
        assert_eq!(falling_factorial(5, 3), BigInt::from(60));
        assert_eq!(falling_factorial(1, 2), BigInt::zero());
        assert_eq!(falling_factorial(-1, 1), BigInt::zero());
        assert_eq!(falling_factorial(-3, 0), BigInt::one());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
