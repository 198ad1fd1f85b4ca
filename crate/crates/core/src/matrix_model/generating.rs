//! The generating functions `f` (closed form at N = 1) and `F` (sum over
//! topological types), and the truncated Wick expansion linking `F` to the
//! Gaussian integral over the state space.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::state_space::{model_forms, Cx, StateSpace};
use super::wick::{covariance, pairing_sum};
use crate::algebra::polynomial::N_SYMBOL;
use crate::algebra::rational::factorial;
use crate::algebra::series::truncated_exp;
use crate::algebra::Polynomial;
use crate::circles::{CircleSet, Length};
use crate::error::{Error, Result};
use crate::oracle::{enumerate_topological_types, type_volume, TypeQuery};

/// One inclusion-exclusion term `sign * e^{exponent}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FTerm {
    pub sign: i8,
    #[serde(serialize_with = "polynomial_json")]
    pub exponent: Polynomial,
}

fn polynomial_json<S: Serializer>(p: &Polynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.to_json().serialize(s)
}

fn need_two_colors(set: &CircleSet) -> Result<()> {
    if set.k() < 2 {
        return Err(Error::InvalidInput("need at least two colors".into()));
    }
    Ok(())
}

/// All `2^m` terms: circles split into `U` (kept) and `V`, sign `(-1)^|V|`,
/// exponent `sum_{i<j} L_i L_j` with `L_i` the `U`-length of color `i`.
pub fn f_closed(set: &CircleSet) -> Result<Vec<FTerm>> {
    need_two_colors(set)?;
    let circles = set.circles();
    let m = circles.len();
    if m >= 32 {
        return Err(Error::InvalidInput("too many circles".into()));
    }
    let positions: BTreeMap<usize, usize> = set
        .colors()
        .iter()
        .enumerate()
        .map(|(i, c)| (c.0, i))
        .collect();
    let lengths: Vec<Polynomial> = circles.iter().map(|c| c.length.to_polynomial()).collect();
    Ok((0u32..1 << m)
        .into_par_iter()
        .map(|kept| {
            let mut per_color = vec![Polynomial::zero(); set.k()];
            for (b, c) in circles.iter().enumerate() {
                if kept >> b & 1 == 1 {
                    let slot = &mut per_color[positions[&c.color]];
                    *slot = &*slot + &lengths[b];
                }
            }
            let mut exponent = Polynomial::zero();
            for i in 0..per_color.len() {
                for j in i + 1..per_color.len() {
                    exponent = &exponent + &(&per_color[i] * &per_color[j]);
                }
            }
            let removed = m as u32 - kept.count_ones();
            FTerm {
                sign: if removed % 2 == 0 { 1 } else { -1 },
                exponent,
            }
        })
        .collect())
}

fn symbol_powers(set: &CircleSet) -> Result<Vec<(String, i32)>> {
    let mut powers: BTreeMap<String, i32> = BTreeMap::new();
    for c in set.circles() {
        match c.length {
            Length::Symbol(s) => *powers.entry(s).or_default() += 1,
            Length::Value(_) => {
                return Err(Error::InvalidInput(
                    "series expansion needs symbolic lengths".into(),
                ))
            }
        }
    }
    Ok(powers.into_iter().collect())
}

/// `f` expanded to total degree `max_degree` in the lengths.
pub fn f_series(set: &CircleSet, max_degree: usize) -> Result<Polynomial> {
    let powers = symbol_powers(set)?;
    let m = set.total_circles() as i64;
    let bound = max_degree as i64 + m;
    let terms = f_closed(set)?;
    let expanded: Vec<Polynomial> = terms
        .par_iter()
        .map(|t| {
            let e = truncated_exp(&t.exponent, bound)?;
            Ok(if t.sign < 0 { -&e } else { e })
        })
        .collect::<Result<_>>()?;
    let sum: Polynomial = expanded.into_iter().sum();
    let named: Vec<(&str, i32)> = powers.iter().map(|(s, e)| (s.as_str(), *e)).collect();
    Ok(sum.div_monomial(&named)?.truncate(max_degree as i64))
}

/// `sum_C Vol(C) N^chi(C)` over types without isolated circles and
/// `sum (k - 1) <= max_degree`.
pub fn big_f_series(set: &CircleSet, max_degree: usize) -> Result<Polynomial> {
    need_two_colors(set)?;
    let query = TypeQuery {
        max_grade: Some(max_degree),
        ..TypeQuery::default()
    };
    let types = enumerate_topological_types(set, &query)?;
    Ok(types
        .par_iter()
        .map(|t| {
            let n = Polynomial::monomial(
                BigRational::one(),
                &[(N_SYMBOL, t.euler_characteristic() as i32)],
            );
            &type_volume(t, set) * &n
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum())
}

/// Both sides of the truncated matrix-integral identity at integer `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WickFCheck {
    pub wick: Polynomial,
    pub types: Polynomial,
}

impl WickFCheck {
    pub fn passed(&self) -> bool {
        self.wick == self.types
    }
}

/// Contact vectors `d >= 1` per circle with `sum (d - 1) <= grade`.
fn contact_vectors(m: usize, grade: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        for extra in 0..=left {
            prefix.push(extra + 1);
            rec(m, left - extra, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, grade, &mut Vec::new(), &mut out);
    out
}

/// Expands `prod_c N Tr (e^{l_c A_c} - 1)/l_c` to grade `max_degree` and
/// integrates term by term against `exp(-N H/2)`.
pub fn wick_f_expansion(set: &CircleSet, max_degree: usize, n: usize) -> Result<Polynomial> {
    need_two_colors(set)?;
    let k = set.k();
    let space = StateSpace::new(n, k)?;
    let (h, _) = model_forms(n, k)?;
    let cov = h.scale(&BigRational::from_integer(n.into())).inverse()?;
    // Entry (color, a, b) at index (color * n + a) * n + b.
    let entries: Vec<Vec<Cx>> = (0..k)
        .flat_map(|i| (0..n).flat_map(move |a| (0..n).map(move |b| (i, a, b))))
        .map(|(i, a, b)| space.entry_form(i, a, b))
        .collect();
    let table: Vec<Vec<Cx>> = entries
        .iter()
        .map(|u| entries.iter().map(|v| covariance(&cov, u, v)).collect())
        .collect();
    let positions: BTreeMap<usize, usize> = set
        .colors()
        .iter()
        .enumerate()
        .map(|(i, c)| (c.0, i))
        .collect();
    let circles = set.circles();
    let colors: Vec<usize> = circles.iter().map(|c| positions[&c.color]).collect();
    let lengths: Vec<Polynomial> = circles.iter().map(|c| c.length.to_polynomial()).collect();
    let nr = BigRational::from_integer(n.into());
    let terms = contact_vectors(circles.len(), max_degree)
        .into_par_iter()
        .map(|d| -> Result<Polynomial> {
            let total: usize = d.iter().sum();
            if total % 2 == 1 {
                return Ok(Polynomial::zero());
            }
            let moment = trace_moment(&table, n, &colors, &d);
            if !moment.im.is_zero() {
                return Err(Error::InvalidInput(
                    "trace moment has an imaginary part".into(),
                ));
            }
            let mut weight = moment.re;
            let mut poly = Polynomial::one();
            for (c, &dc) in d.iter().enumerate() {
                weight = weight * &nr / BigRational::from_integer(factorial(dc as u64 - 1) * dc);
                poly = &poly * &lengths[c].pow(dc as i32 - 1)?;
            }
            Ok(poly.scale(&weight))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(terms.into_iter().sum())
}

/// `<prod_c Tr A_{color_c}^{d_c}>` by summing over index sequences.
fn trace_moment(table: &[Vec<Cx>], n: usize, colors: &[usize], d: &[usize]) -> Cx {
    let total: usize = d.iter().sum();
    let mut idx = vec![0usize; total];
    let mut sum = Cx::zero();
    loop {
        let mut seq = Vec::with_capacity(total);
        let mut start = 0;
        for (&c, &dc) in colors.iter().zip(d) {
            for t in 0..dc {
                let a = idx[start + t];
                let b = idx[start + (t + 1) % dc];
                seq.push((c * n + a) * n + b);
            }
            start += dc;
        }
        sum += pairing_sum(total, &|i, j| table[seq[i]][seq[j]].clone());
        let mut p = 0;
        loop {
            if p == total {
                return sum;
            }
            idx[p] += 1;
            if idx[p] < n {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

pub fn wick_f_check(set: &CircleSet, max_degree: usize, n: usize) -> Result<WickFCheck> {
    let wick = wick_f_expansion(set, max_degree, n)?;
    let types = big_f_series(set, max_degree)?
        .substitute_value(N_SYMBOL, &BigRational::from_integer(n.into()))?;
    Ok(WickFCheck { wick, types })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn two_by_two() -> CircleSet {
        CircleSet::parse("1:l1,l2;2:s1,s2").unwrap()
    }

    #[test]
    fn closed_terms_one_pair() {
        let set = CircleSet::parse("1:l;2:s").unwrap();
        let terms = f_closed(&set).unwrap();
        assert_eq!(terms.len(), 4);
        let ls = &Polynomial::var("l") * &Polynomial::var("s");
        assert!(terms.iter().any(|t| t.sign == 1 && t.exponent == ls));
        assert_eq!(terms.iter().filter(|t| t.exponent.is_zero()).count(), 3);
        let json = serde_json::to_string(&terms[0]).unwrap();
        assert!(json.starts_with("{\"sign\":"));
    }

    #[test]
    fn series_one_pair() {
        let set = CircleSet::parse("1:l;2:s").unwrap();
        let f = f_series(&set, 4).unwrap();
        assert_eq!(f.constant_term(), int(1));
        assert_eq!(f.coefficient(&[("l", 1), ("s", 1)]), rat(1, 2));
        assert_eq!(f.coefficient(&[("l", 2), ("s", 2)]), rat(1, 6));
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn series_two_by_two() {
        let f = f_series(&two_by_two(), 4).unwrap();
        assert_eq!(f.constant_term(), int(2));
        assert_eq!(f.coefficient(&[("l1", 1), ("s1", 1)]), rat(3, 2));
        assert_eq!(f.coefficient(&[("l1", 2), ("s1", 2)]), rat(2, 3));
        assert_eq!(f.coefficient(&[("l1", 1), ("l2", 1), ("s1", 2)]), int(1));
        assert_eq!(
            f.coefficient(&[("l1", 1), ("l2", 1), ("s1", 1), ("s2", 1)]),
            rat(3, 2)
        );
    }

    #[test]
    fn types_match_closed_form_at_one() {
        for set in [CircleSet::parse("1:l;2:s").unwrap(), two_by_two()] {
            let big = big_f_series(&set, 2).unwrap();
            let at_one = big.substitute_value(N_SYMBOL, &int(1)).unwrap();
            assert_eq!(at_one, f_series(&set, 2).unwrap(), "{set}");
        }
    }

    #[test]
    fn one_pair_grade_two_is_planar() {
        let set = CircleSet::parse("1:l;2:s").unwrap();
        let big = big_f_series(&set, 2).unwrap();
        for (powers, _) in big.named_terms() {
            let n = powers
                .iter()
                .find(|(v, _)| v == N_SYMBOL)
                .map_or(0, |p| p.1);
            assert_eq!(n, 2);
        }
    }

    #[test]
    fn wick_against_types() {
        let set = CircleSet::parse("1:l;2:s").unwrap();
        let check = wick_f_check(&set, 2, 1).unwrap();
        assert!(check.passed());
        assert_eq!(check.wick.coefficient(&[("l", 1), ("s", 1)]), rat(1, 2));
        assert!(wick_f_check(&set, 3, 2).unwrap().passed());
    }
}
