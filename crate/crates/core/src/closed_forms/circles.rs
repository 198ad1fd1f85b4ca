//! Volumes of spaces of circle cacti.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::rational::factorial;
use crate::algebra::Polynomial;
use crate::circles::{CircleSet, Length};
use crate::error::{Error, Result};

/// `(l_1 + ... + l_k)^(k-2)` for one circle per color.
pub fn circle_cacti_distinct(lengths: &[Polynomial]) -> Result<Polynomial> {
    if lengths.len() < 2 {
        return Err(Error::InvalidInput("need at least two circles".into()));
    }
    let l: Polynomial = lengths.iter().cloned().sum();
    l.pow(lengths.len() as i32 - 2)
}

/// Permutations of the circles of one color preserving their lengths.
pub fn length_automorphisms(lengths: &[Length]) -> BigInt {
    let mut counts: BTreeMap<&Length, u64> = BTreeMap::new();
    for l in lengths {
        *counts.entry(l).or_default() += 1;
    }
    counts.values().map(|&c| factorial(c)).product()
}

/// `l^(k-2) prod_i (l - l_i)^(m_i - 1) / |Aut_i|`.
pub fn circle_cacti_multi(set: &CircleSet) -> Result<Polynomial> {
    let k = set.k();
    if k < 2 {
        return Err(Error::InvalidInput("need at least two colors".into()));
    }
    let l = set.total_length();
    let mut volume = l.pow(k as i32 - 2)?;
    for (i, (_, lengths)) in set.colors().iter().enumerate() {
        let rest = &l - &set.color_length(i);
        let aut = BigRational::new(1.into(), length_automorphisms(lengths));
        volume = &volume * &rest.pow(lengths.len() as i32 - 1)?.scale(&aut);
    }
    Ok(volume)
}

/// `4g - 4 + m + 2p`.
pub fn stratum_dimension(genus: usize, m: usize, faces: usize) -> i64 {
    4 * genus as i64 - 4 + m as i64 + 2 * faces as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn v(s: &str) -> Polynomial {
        Polynomial::var(s)
    }

    #[test]
    fn distinct() {
        let three = circle_cacti_distinct(&[v("l1"), v("l2"), v("l3")]).unwrap();
        assert_eq!(three.to_string(), "l1 + l2 + l3");
        assert_eq!(
            circle_cacti_distinct(&[v("l1"), v("l2")]).unwrap(),
            Polynomial::one()
        );
        let four = circle_cacti_distinct(&[v("a"), v("b"), v("c"), v("d")]).unwrap();
        assert_eq!(four, (v("a") + v("b") + v("c") + v("d")).pow(2).unwrap());
    }

    #[test]
    fn multi() {
        let set = CircleSet::parse("1:a,b;2:c").unwrap();
        assert_eq!(circle_cacti_multi(&set).unwrap(), v("c"));
        let set = CircleSet::parse("1:u,u;2:v").unwrap();
        assert_eq!(circle_cacti_multi(&set).unwrap(), v("v").scale(&rat(1, 2)));
        let set = CircleSet::parse("1:x;2:y;3:z").unwrap();
        assert_eq!(circle_cacti_multi(&set).unwrap(), v("x") + v("y") + v("z"));
    }

    #[test]
    fn dimensions() {
        assert_eq!(stratum_dimension(0, 5, 1), 3);
        assert_eq!(stratum_dimension(0, 2, 2), 2);
        assert_eq!(stratum_dimension(1, 1, 1), 3);
    }
}
