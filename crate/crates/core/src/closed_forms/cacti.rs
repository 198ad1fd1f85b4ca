//! Counts of polygon cacti.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{falling_factorial, rational_pow};
use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::monodromy::{constellation_degree, passport_aut, Passport};

/// Cacti with one polygon of each color: `n^(k-2)`, `n = sum n_i - k + 1`.
/// A single polygon gives `1/n`.
pub fn cacti_distinct(sizes: &[usize]) -> Result<BigRational> {
    if sizes.is_empty() || sizes.iter().any(|&s| s < 2) {
        return Err(Error::InvalidInput("sizes must be at least 2".into()));
    }
    let k = sizes.len() as i64;
    let n = sizes.iter().sum::<usize>() as i64 - k + 1;
    rational_pow(&BigRational::from_integer(n.into()), k - 2)
}

/// `(n_1_1 + ... + n_k_1 - k + 1)^(k-2)` over the size variables.
pub fn cacti_distinct_symbolic(k: usize) -> Result<Polynomial> {
    if k < 2 {
        return Err(Error::InvalidInput("symbolic form needs k >= 2".into()));
    }
    let n: Polynomial = (1..=k).map(|i| Polynomial::var(&format!("n_{i}_1"))).sum();
    let n = &n - &Polynomial::constant(BigRational::from_integer(BigInt::from(k as i64 - 1)));
    n.pow(k as i32 - 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Falling factorial of length `p_i - 1` ending at `n - n_i + 1`.
    #[default]
    Corrected,
    /// Falling factorial of length `p_i` ending at `n - n_i`.
    Printed,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corrected" => Ok(Variant::Corrected),
            "printed" => Ok(Variant::Printed),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

/// `1/|Sym|`-weighted number of cacti with passport `x`.
pub fn cacti_passport(x: &Passport, variant: Variant) -> Result<BigRational> {
    let n = constellation_degree(x, 0, 1)? as i64;
    let mut value = rational_pow(&BigRational::from_integer(n.into()), x.k() as i64 - 2)?;
    for c in x.colors() {
        let (ni, pi) = (c.sum() as i64, c.len() as u64);
        let ff = match variant {
            Variant::Corrected => falling_factorial(n - ni + pi as i64 - 1, pi - 1),
            Variant::Printed => falling_factorial(n - ni, pi),
        };
        value *= BigRational::new(ff, passport_aut(c));
    }
    Ok(value)
}

/// Labeled trees on `k` vertices: `k^(k-2)`, and 1 for `k = 1`.
pub fn cayley(k: usize) -> BigInt {
    if k <= 2 {
        return BigInt::one();
    }
    num_traits::pow(BigInt::from(k), k - 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn pp(s: &str) -> Passport {
        Passport::parse(s).unwrap()
    }

    #[test]
    fn distinct() {
        assert_eq!(cacti_distinct(&[3, 4, 5]).unwrap(), int(10));
        assert_eq!(cacti_distinct(&[2, 2, 2, 2]).unwrap(), int(25));
        assert_eq!(cacti_distinct(&[5]).unwrap(), rat(1, 5));
        let p = cacti_distinct_symbolic(3).unwrap();
        assert_eq!(p.to_string(), "n_1_1 + n_2_1 + n_3_1 - 2");
    }

    #[test]
    fn passport_variants() {
        assert_eq!(
            cacti_passport(&pp("3;4;5"), Variant::Corrected).unwrap(),
            int(10)
        );
        assert_eq!(
            cacti_passport(&pp("3;4;5"), Variant::Printed).unwrap(),
            int(10 * 7 * 6 * 5)
        );
        assert_eq!(
            cacti_passport(&pp("2,2;3"), Variant::Corrected).unwrap(),
            int(1)
        );
        assert_eq!(
            cacti_passport(&pp("2,2;3"), Variant::Printed).unwrap(),
            int(0)
        );
        assert_eq!(
            cacti_passport(&pp("2,2"), Variant::Corrected).unwrap(),
            int(0)
        );
    }

    #[test]
    fn trees() {
        assert_eq!(cayley(3), BigInt::from(3));
        assert_eq!(cayley(2), BigInt::from(1));
        assert_eq!(cayley(5), BigInt::from(125));
    }
}
