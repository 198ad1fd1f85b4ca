//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are named. The distinguished symbol [`N_SYMBOL`] may carry
//! negative exponents (the genus expansion is Laurent in `N`); every other
//! variable is polynomial. Values are kept normalized: no zero coefficients,
//! no unused variables, and variables sorted in natural order, so structural
//! equality is mathematical equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, parse_rational};
use crate::error::{Error, Result};

pub const N_SYMBOL: &str = "N";

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponents(pub Vec<i32>);

impl Exponents {
    fn total(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Natural order on variable names: digit runs compare numerically, so
/// `l_1_2 < l_1_10`.
pub fn compare_var_names(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(cb.iter()) {
        let ord = if *da && *db {
            let (ta, tb) = (sa.trim_start_matches('0'), sb.trim_start_matches('0'));
            ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb))
        } else {
            sa.cmp(sb)
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, BigRational>,
}

impl Default for Polynomial {
    fn default() -> Self {
        Self::zero()
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(value: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Exponents(Vec::new()), value);
        }
        Polynomial {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(BigRational::one(), &[(name, 1)])
    }

    /// `coef * prod(name^exp)`; repeated names multiply.
    pub fn monomial(coef: BigRational, powers: &[(&str, i32)]) -> Self {
        let mut vars: Vec<String> = powers.iter().map(|(v, _)| v.to_string()).collect();
        vars.sort_by(|a, b| compare_var_names(a, b));
        vars.dedup();
        let mut exps = vec![0; vars.len()];
        for (v, e) in powers {
            let i = vars.iter().position(|x| x == v).unwrap();
            exps[i] += e;
        }
        Self::from_raw(vars, [(exps, coef)])
    }

    /// Builds from `(exponents, coefficient)` pairs over `vars`; equal
    /// exponent vectors are summed.
    pub fn from_terms(
        vars: &[String],
        terms: impl IntoIterator<Item = (Vec<i32>, BigRational)>,
    ) -> Self {
        Self::from_raw(vars.to_vec(), terms)
    }

    fn from_raw(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Vec<i32>, BigRational)>,
    ) -> Self {
        let mut map: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        for (exps, coef) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length");
            let slot = map.entry(Exponents(exps)).or_insert_with(BigRational::zero);
            *slot += coef;
        }
        map.retain(|_, c| !c.is_zero());
        Polynomial { vars, terms: map }.normalized()
    }

    /// Sorts variables, merges duplicate names and drops variables that no
    /// term uses.
    fn normalized(self) -> Self {
        let mut order: Vec<usize> = (0..self.vars.len()).collect();
        order.sort_by(|&a, &b| compare_var_names(&self.vars[a], &self.vars[b]));
        let mut vars: Vec<String> = Vec::new();
        let mut target = vec![0usize; self.vars.len()];
        for &i in &order {
            if vars.last() != Some(&self.vars[i]) {
                vars.push(self.vars[i].clone());
            }
            target[i] = vars.len() - 1;
        }
        let mut used = vec![false; vars.len()];
        let mut remapped: Vec<(Vec<i32>, BigRational)> = Vec::with_capacity(self.terms.len());
        for (exps, coef) in self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &x) in exps.0.iter().enumerate() {
                e[target[i]] += x;
            }
            for (u, &x) in used.iter_mut().zip(&e) {
                *u |= x != 0;
            }
            remapped.push((e, coef));
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|&i| used[i]).collect();
        let mut terms: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        for (e, coef) in remapped {
            let key = Exponents(keep.iter().map(|&i| e[i]).collect());
            let slot = terms.entry(key).or_insert_with(BigRational::zero);
            *slot += coef;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial {
            vars: keep.iter().map(|&i| vars[i].clone()).collect(),
            terms,
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.0.as_slice(), c))
    }

    /// Terms as `(variable powers, coefficient)` with zero powers omitted.
    pub fn named_terms(&self) -> Vec<(Vec<(String, i32)>, BigRational)> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let powers = self
                    .vars
                    .iter()
                    .zip(&e.0)
                    .filter(|(_, &x)| x != 0)
                    .map(|(v, &x)| (v.clone(), x))
                    .collect();
                (powers, c.clone())
            })
            .collect()
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&Exponents(vec![0; self.vars.len()]))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.vars.is_empty() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    fn n_index(&self) -> Option<usize> {
        self.vars.iter().position(|v| v == N_SYMBOL)
    }

    fn grade_of(&self, exps: &Exponents, n_index: Option<usize>) -> i64 {
        exps.0
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != n_index)
            .map(|(_, &e)| e as i64)
            .sum()
    }

    /// Total degree counting every variable except `N`; `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        let n = self.n_index();
        self.terms.keys().map(|e| self.grade_of(e, n)).max()
    }

    pub fn coefficient(&self, powers: &[(&str, i32)]) -> BigRational {
        let mut exps = vec![0; self.vars.len()];
        for (v, e) in powers {
            if *e == 0 {
                continue;
            }
            match self.vars.iter().position(|x| x == v) {
                Some(i) => exps[i] += e,
                None => return BigRational::zero(),
            }
        }
        self.terms
            .get(&Exponents(exps))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn unify(&self, other: &Polynomial) -> (Vec<String>, Vec<usize>, Vec<usize>) {
        let mut vars: Vec<String> = self.vars.iter().chain(&other.vars).cloned().collect();
        vars.sort_by(|a, b| compare_var_names(a, b));
        vars.dedup();
        let pos = |v: &String| vars.iter().position(|x| x == v).unwrap();
        let a = self.vars.iter().map(pos).collect();
        let b = other.vars.iter().map(pos).collect();
        (vars, a, b)
    }

    fn embed(exps: &[i32], map: &[usize], width: usize) -> Vec<i32> {
        let mut out = vec![0; width];
        for (&x, &i) in exps.iter().zip(map) {
            out[i] = x;
        }
        out
    }

    pub fn scale(&self, factor: &BigRational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    fn add_impl(&self, other: &Polynomial) -> Polynomial {
        let (vars, ma, mb) = self.unify(other);
        let w = vars.len();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (Self::embed(&e.0, &ma, w), c.clone()))
            .chain(
                other
                    .terms
                    .iter()
                    .map(|(e, c)| (Self::embed(&e.0, &mb, w), c.clone())),
            );
        Self::from_raw(vars, terms)
    }

    fn mul_impl(&self, other: &Polynomial, max_grade: Option<i64>) -> Polynomial {
        let (vars, ma, mb) = self.unify(other);
        let w = vars.len();
        let n = vars.iter().position(|v| v == N_SYMBOL);
        let left: Vec<(Vec<i32>, &BigRational)> = self
            .terms
            .iter()
            .map(|(e, c)| (Self::embed(&e.0, &ma, w), c))
            .collect();
        let right: Vec<(Vec<i32>, &BigRational)> = other
            .terms
            .iter()
            .map(|(e, c)| (Self::embed(&e.0, &mb, w), c))
            .collect();
        let mut acc: BTreeMap<Exponents, BigRational> = BTreeMap::new();
        for (ea, ca) in &left {
            for (eb, cb) in &right {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if let Some(limit) = max_grade {
                    let g: i64 = e
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| Some(*i) != n)
                        .map(|(_, &x)| x as i64)
                        .sum();
                    if g > limit {
                        continue;
                    }
                }
                let slot = acc.entry(Exponents(e)).or_insert_with(BigRational::zero);
                *slot += *ca * *cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial { vars, terms: acc }.normalized()
    }

    /// Product with every term of grade above `max_grade` discarded.
    pub fn mul_truncated(&self, other: &Polynomial, max_grade: i64) -> Polynomial {
        self.mul_impl(other, Some(max_grade))
    }

    /// Drops terms whose grade (degree ignoring `N`) exceeds `max_grade`.
    pub fn truncate(&self, max_grade: i64) -> Polynomial {
        let n = self.n_index();
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| self.grade_of(e, n) <= max_grade)
            .map(|(e, c)| (e.0.clone(), c.clone()));
        Self::from_raw(self.vars.clone(), terms)
    }

    /// The homogeneous component of the given grade.
    pub fn homogeneous_component(&self, grade: i64) -> Polynomial {
        let n = self.n_index();
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| self.grade_of(e, n) == grade)
            .map(|(e, c)| (e.0.clone(), c.clone()));
        Self::from_raw(self.vars.clone(), terms)
    }

    /// Integer power. Negative exponents are only defined for a single term
    /// in `N` alone.
    pub fn pow(&self, exp: i32) -> Result<Polynomial> {
        if exp >= 0 {
            let mut result = Polynomial::one();
            let mut base = self.clone();
            let mut e = exp as u32;
            while e > 0 {
                if e & 1 == 1 {
                    result = &result * &base;
                }
                e >>= 1;
                if e > 0 {
                    base = &base * &base;
                }
            }
            return Ok(result);
        }
        if self.terms.len() != 1 {
            let culprit = self.vars.iter().find(|v| *v != N_SYMBOL).cloned();
            return Err(Error::NegativeExponent(
                culprit.unwrap_or_else(|| "(sum)".into()),
            ));
        }
        if let Some(v) = self.vars.iter().find(|v| *v != N_SYMBOL) {
            return Err(Error::NegativeExponent(v.clone()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let k = -exp;
        let exps = e.0.iter().map(|x| x * exp).collect();
        let coef = num_traits::pow(c.recip(), k as usize);
        Ok(Self::from_raw(self.vars.clone(), [(exps, coef)]))
    }

    /// Replaces `var` by `value` everywhere.
    pub fn substitute(&self, var: &str, value: &Polynomial) -> Result<Polynomial> {
        let Some(idx) = self.vars.iter().position(|v| v == var) else {
            return Ok(self.clone());
        };
        // Group terms by the exponent of `var` so each power is computed once.
        let mut by_power: BTreeMap<i32, Vec<(Vec<i32>, BigRational)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.0.clone();
            let p = rest[idx];
            rest[idx] = 0;
            by_power.entry(p).or_default().push((rest, c.clone()));
        }
        let mut out = Polynomial::zero();
        for (p, rest) in by_power {
            let cofactor = Self::from_raw(self.vars.clone(), rest);
            let power = if p < 0 && var != N_SYMBOL {
                return Err(Error::NegativeExponent(var.to_string()));
            } else {
                value.pow(p)?
            };
            out = &out + &(&cofactor * &power);
        }
        Ok(out)
    }

    pub fn substitute_value(&self, var: &str, value: &BigRational) -> Result<Polynomial> {
        self.substitute(var, &Polynomial::constant(value.clone()))
    }

    /// Evaluates with every variable assigned.
    pub fn evaluate(&self, values: &BTreeMap<String, BigRational>) -> Result<BigRational> {
        let mut p = self.clone();
        for v in self.vars.iter() {
            let value = values
                .get(v)
                .ok_or_else(|| Error::InvalidInput(format!("no value for `{v}`")))?;
            p = p.substitute_value(v, value)?;
        }
        Ok(p.constant_term())
    }

    pub fn rename(&self, f: impl Fn(&str) -> String) -> Polynomial {
        let vars = self.vars.iter().map(|v| f(v)).collect();
        Self::from_raw(
            vars,
            self.terms.iter().map(|(e, c)| (e.0.clone(), c.clone())),
        )
    }

    /// Sum of the terms of maximal total degree.
    pub fn top_homogeneous_part(&self) -> Result<Polynomial> {
        if self.n_index().is_some() {
            return Err(Error::ContainsN);
        }
        let top = self.total_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_component(top))
    }

    /// Exact division by the monomial `prod(name^exp)`.
    pub fn div_monomial(&self, powers: &[(&str, i32)]) -> Result<Polynomial> {
        let divisor = Polynomial::monomial(BigRational::one(), powers);
        let (vars, ma, mb) = self.unify(&divisor);
        let w = vars.len();
        let (de, _) = divisor.terms.iter().next().expect("monomial");
        let d = Self::embed(&de.0, &mb, w);
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut x = Self::embed(&e.0, &ma, w);
            for (i, xi) in x.iter_mut().enumerate() {
                *xi -= d[i];
                if *xi < 0 && vars[i] != N_SYMBOL {
                    return Err(Error::NotDivisible(divisor.to_string()));
                }
            }
            out.push((x, c.clone()));
        }
        Ok(Self::from_raw(vars, out))
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exps: e.0.clone(),
                    coef: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            if t.exps.len() != json.vars.len() {
                return Err(Error::Parse("exponent vector length mismatch".into()));
            }
            for (v, &e) in json.vars.iter().zip(&t.exps) {
                if e < 0 && v != N_SYMBOL {
                    return Err(Error::NegativeExponent(v.clone()));
                }
            }
            terms.push((t.exps.clone(), parse_rational(&t.coef)?));
        }
        Ok(Self::from_raw(json.vars.clone(), terms))
    }
}

/// Wire form: `{"vars":[..],"terms":[{"exps":[..],"coef":"num/den"}..]}`,
/// terms in ascending graded-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<i32>,
    pub coef: String,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = PolynomialJson::deserialize(d)?;
        Polynomial::from_json(&json).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Polynomial {
    /// Highest terms first, e.g. `x^2 - y^2` or `3/2*l1*s1 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (v, &x) in self.vars.iter().zip(&e.0) {
                match x {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{x}")),
                }
            }
            if factors.is_empty() || !abs.is_one() {
                factors.insert(0, abs.to_string());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_impl(rhs)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        self.add_impl(&rhs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_impl(&-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self.add_impl(&-&rhs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_impl(rhs, None)
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        self.mul_impl(&rhs, None)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn v(name: &str) -> Polynomial {
        Polynomial::var(name)
    }

    fn c(n: i64) -> Polynomial {
        Polynomial::constant(int(n))
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = (v("x"), v("y"));
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &x.pow(2).unwrap() - &y.pow(2).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "x^2 - y^2");
    }

    #[test]
    fn substitute_number() {
        let x = v("x");
        let p = &x.pow(2).unwrap() + &x;
        assert_eq!(p.substitute_value("x", &int(2)).unwrap(), c(6));
    }

    #[test]
    fn substitute_lengths_of_three_circles() {
        let p = v("l1") + v("l2") + v("l3");
        let values: BTreeMap<String, BigRational> = [("l1", 3), ("l2", 4), ("l3", 5)]
            .iter()
            .map(|(k, x)| (k.to_string(), int(*x)))
            .collect();
        assert_eq!(p.evaluate(&values).unwrap(), int(12));
    }

    #[test]
    fn substitute_polynomial_for_variable() {
        let p = &v("x").pow(2).unwrap() + &v("y");
        let q = p.substitute("x", &(&v("y") + &c(1))).unwrap();
        // (y+1)^2 + y
        let expected = &(&v("y").pow(2).unwrap() + &v("y").scale(&int(3))) + &c(1);
        assert_eq!(q, expected);
    }

    #[test]
    fn negative_powers_only_for_n() {
        let n = v(N_SYMBOL);
        let inv = n.pow(-2).unwrap();
        assert_eq!(inv.coefficient(&[(N_SYMBOL, -2)]), int(1));
        assert_eq!(&inv * &n.pow(2).unwrap(), Polynomial::one());
        assert_eq!(v("x").pow(-1), Err(Error::NegativeExponent("x".into())));
        assert!((&n + &c(1)).pow(-1).is_err());
        assert_eq!(
            n.scale(&int(2))
                .pow(-1)
                .unwrap()
                .coefficient(&[(N_SYMBOL, -1)]),
            rat(1, 2)
        );
    }

    #[test]
    fn top_homogeneous_examples() {
        let p = v("n1") + v("n2") + v("n3") - c(2);
        assert_eq!(
            p.top_homogeneous_part().unwrap(),
            v("n1") + v("n2") + v("n3")
        );
        assert_eq!(c(5).top_homogeneous_part().unwrap(), c(5));
        let q = &(&v("x").pow(2).unwrap() + &(&v("x") * &v("y"))) + &v("x");
        assert_eq!(
            q.top_homogeneous_part().unwrap(),
            &v("x").pow(2).unwrap() + &(&v("x") * &v("y"))
        );
        assert_eq!(
            Polynomial::zero().top_homogeneous_part(),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(v(N_SYMBOL).top_homogeneous_part(), Err(Error::ContainsN));
    }

    #[test]
    fn variables_sort_naturally_and_unused_are_dropped() {
        let p = v("l_1_10") + v("l_1_2");
        assert_eq!(p.vars(), ["l_1_2", "l_1_10"]);
        let q = &(&v("x") + &v("y")) - &v("y");
        assert_eq!(q.vars(), ["x"]);
        assert_eq!(q, v("x"));
    }

    #[test]
    fn json_schema_and_order() {
        let p = &(&v("x").pow(2).unwrap().scale(&rat(3, 2)) - &v("y")) + &c(1);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(
            text,
            r#"{"vars":["x","y"],"terms":[{"exps":[0,0],"coef":"1/1"},{"exps":[0,1],"coef":"-1/1"},{"exps":[2,0],"coef":"3/2"}]}"#
        );
        let back: Polynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn monomial_division() {
        let p = &(&v("l") * &v("s")).scale(&int(2)) + &(&v("l").pow(2).unwrap() * &v("s"));
        let q = p.div_monomial(&[("l", 1), ("s", 1)]).unwrap();
        assert_eq!(q, &c(2) + &v("l"));
        assert!(p.div_monomial(&[("l", 2)]).is_err());
    }

    #[test]
    fn truncated_product() {
        let x = &v("x") + &c(1);
        let sq = x.mul_truncated(&x, 1);
        assert_eq!(sq, &v("x").scale(&int(2)) + &c(1));
        let with_n = &v(N_SYMBOL).pow(4).unwrap() * &v("x");
        assert_eq!(with_n.truncate(1), with_n);
        assert_eq!(with_n.total_degree(), Some(1));
    }
}
