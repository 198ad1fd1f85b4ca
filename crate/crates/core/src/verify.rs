//! Cross-validation suites: every closed form against its oracle.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::algebra::rational::{factorial, format_rational, int};
use crate::algebra::{Polynomial, N_SYMBOL};
use crate::circles::{CircleSet, Length};
use crate::closed_forms::{
    asymptotic_check, cacti_distinct, cacti_passport, cayley, circle_cacti_distinct,
    circle_cacti_multi, constellations_1n_closed, constellations_1n_intermediate,
    constellations_1n_reduced, constellations_1n_sum, fit_p, stratum_dimension, volume_q, Variant,
};
use crate::error::{Error, Result};
use crate::matrix_model::{
    big_f_series, f_series, form_product, gaussian_shift_check, is_positive_definite, model_forms,
    wick, wick_f_check,
};
use crate::monodromy::{Partition, Passport};
use crate::oracle::merging::all_markings;
use crate::oracle::plane_cactus::weighted_total;
use crate::oracle::{
    decode_cactus, encode_cactus, enumerate_plane_cacti, enumerate_topological_types, face_trace,
    total_volume, weighted_1n_count, weighted_cactus_count, TypeQuery,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl Check {
    fn equal<T: PartialEq + Show>(name: impl Into<String>, lhs: &T, rhs: &T) -> Check {
        Check {
            name: name.into(),
            lhs: lhs.show(),
            rhs: rhs.show(),
            pass: lhs == rhs,
        }
    }

    fn differ<T: PartialEq + Show>(name: impl Into<String>, lhs: &T, rhs: &T) -> Check {
        Check {
            pass: lhs != rhs,
            ..Check::equal(name, lhs, rhs)
        }
    }

    fn holds(name: impl Into<String>, ok: bool) -> Check {
        Check {
            name: name.into(),
            lhs: ok.to_string(),
            rhs: "true".into(),
            pass: ok,
        }
    }
}

trait Show {
    fn show(&self) -> String;
}

impl Show for BigRational {
    fn show(&self) -> String {
        format_rational(self)
    }
}

impl Show for Polynomial {
    fn show(&self) -> String {
        self.to_string()
    }
}

impl Show for usize {
    fn show(&self) -> String {
        self.to_string()
    }
}

impl Show for i64 {
    fn show(&self) -> String {
        self.to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: impl Into<String>, checks: Vec<Check>) -> Report {
        let pass = checks.iter().all(|c| c.pass);
        Report {
            suite: suite.into(),
            checks,
            pass,
        }
    }
}

/// Problem sizes: `Full` runs the complete acceptance ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Quick,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Thm1polyg,
    Thm2polyg,
    Thm3polyg,
    Thm1circ,
    Thm2circ,
    Asymptotic,
    Matrixmodel,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Thm1polyg,
        Suite::Thm2polyg,
        Suite::Thm3polyg,
        Suite::Thm1circ,
        Suite::Thm2circ,
        Suite::Asymptotic,
        Suite::Matrixmodel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1polyg => "thm1polyg",
            Suite::Thm2polyg => "thm2polyg",
            Suite::Thm3polyg => "thm3polyg",
            Suite::Thm1circ => "thm1circ",
            Suite::Thm2circ => "thm2circ",
            Suite::Asymptotic => "asymptotic",
            Suite::Matrixmodel => "matrixmodel",
            Suite::All => "all",
        }
    }

    /// Criteria run by the suite, numbered as in [`criterion`].
    pub fn criteria(self) -> Vec<usize> {
        match self {
            Suite::Thm1polyg => vec![1, 2],
            Suite::Thm2polyg => vec![3],
            Suite::Thm3polyg => vec![4],
            Suite::Thm1circ => vec![5, 8],
            Suite::Thm2circ => vec![6],
            Suite::Asymptotic => vec![7],
            Suite::Matrixmodel => vec![9, 10, 11, 12, 13],
            Suite::All => (1..=13).collect(),
        }
    }

    /// Rough cost in seconds at full scale, used to fit a time budget.
    pub fn full_cost(self) -> u64 {
        match self {
            Suite::Thm2polyg | Suite::Matrixmodel => 5,
            Suite::All => Suite::EACH.iter().map(|s| s.full_cost()).sum(),
            _ => 2,
        }
    }

    /// Full scale when the budget covers it.
    pub fn scale_for(self, budget_secs: u64) -> Scale {
        if budget_secs >= self.full_cost() {
            Scale::Full
        } else {
            Scale::Quick
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .iter()
            .copied()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

pub fn run_suite(suite: Suite, scale: Scale) -> Result<Report> {
    let mut checks = Vec::new();
    for c in suite.criteria() {
        checks.extend(criterion(c, scale)?);
    }
    Ok(Report::new(suite.name(), checks))
}

/// Short description of each criterion.
pub fn criterion_title(c: usize) -> &'static str {
    match c {
        1 => "distinct-color cactus counts equal n^(k-2)",
        2 => "merging bijection round trip and image size",
        3 => "passport cactus formula against the oracle",
        4 => "(1,n)-constellation counts equal (k-1) n^(k-2)",
        5 => "connected planar circle volumes equal (sum l)^(k-2)",
        6 => "circle cactus volumes with repeated colors",
        7 => "top part of polygon counts equals circle volumes",
        8 => "stratum dimension and one disc face per circle",
        9 => "model forms positive definite and mutually inverse",
        10 => "Gaussian moments and the shift identity",
        11 => "expansion of f on two circles per color",
        12 => "f equals F at N = 1",
        13 => "truncated matrix integral equals F",
        _ => "unknown",
    }
}

pub fn criterion(c: usize, scale: Scale) -> Result<Vec<Check>> {
    let full = scale == Scale::Full;
    match c {
        1 => distinct_cacti(if full { 9 } else { 7 }),
        2 => merging(if full { 9 } else { 7 }),
        3 => passports(if full { 7 } else { 5 }),
        4 => one_n(full),
        5 => circle_trees(if full { 5 } else { 4 }, if full { 6 } else { 5 }),
        6 => repeated_colors(full),
        7 => asymptotics(full),
        8 => dimensions(full),
        9 => model_forms_check(if full { 4 } else { 2 }, if full { 6 } else { 4 }),
        10 => moments(if full { 4 } else { 3 }),
        11 => two_by_two_expansion(),
        12 => f_equals_big_f(if full { 6 } else { 4 }),
        13 => wick_vs_types(full),
        _ => Err(Error::InvalidInput(format!("no criterion {c}"))),
    }
}

fn rat_int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn pow(n: usize, e: usize) -> BigRational {
    rat_int(num_traits::pow(BigInt::from(n), e))
}

/// Ordered size lists with `k` entries `>= 2` and total at most `max_total`.
fn size_lists(k: usize, max_total: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        let reserve = 2 * (k - prefix.len() - 1);
        for s in 2..=left.saturating_sub(reserve) {
            prefix.push(s);
            rec(k, left - s, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, max_total, &mut Vec::new(), &mut out);
    out
}

fn list(sizes: &[usize]) -> String {
    sizes
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn distinct_cacti(max_total: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 2..=4 {
        for sizes in size_lists(k, max_total) {
            let n = sizes.iter().sum::<usize>() + 1 - k;
            let expected = pow(n, k - 2);
            let x = Passport::distinct(&sizes)?;
            let tag = list(&sizes);
            checks.push(Check::equal(
                format!("factorizations {tag}"),
                &weighted_cactus_count(&x)?,
                &expected,
            ));
            let cacti = enumerate_plane_cacti(&sizes)?;
            checks.push(Check::equal(
                format!("plane cacti {tag}"),
                &weighted_total(&cacti),
                &expected,
            ));
            checks.push(Check::equal(
                format!("closed form {tag}"),
                &cacti_distinct(&sizes)?,
                &expected,
            ));
        }
    }
    Ok(checks)
}

fn merging(max_total: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 2..=4 {
        for sizes in size_lists(k, max_total) {
            let n = sizes.iter().sum::<usize>() + 1 - k;
            let tag = list(&sizes);
            let cacti = enumerate_plane_cacti(&sizes)?;
            let mut image = BTreeSet::new();
            let mut round_trips = true;
            for c in &cacti {
                let m = encode_cactus(c)?;
                round_trips &= decode_cactus(&m, &sizes).as_ref() == Ok(c);
                image.insert(m);
            }
            checks.push(Check::holds(format!("decode(encode) {tag}"), round_trips));
            checks.push(Check::equal(
                format!("image size {tag}"),
                &image.len(),
                &num_traits::pow(n, k - 2),
            ));
            let all: BTreeSet<_> = all_markings(n, k).into_iter().collect();
            checks.push(Check::holds(
                format!("image is every marking {tag}"),
                image == all,
            ));
        }
    }
    Ok(checks)
}

/// Partitions with parts `>= 2` and `sum - len = excess`.
fn parts_with_excess(excess: usize) -> Vec<Partition> {
    Partition::all_of(excess)
        .into_iter()
        .map(|p| Partition::new(p.parts().iter().map(|x| x + 1).collect()))
        .collect()
}

/// Every passport of cacti of degree `n`.
fn cactus_passports(n: usize) -> Vec<Passport> {
    fn rec(left: usize, n: usize, prefix: &mut Vec<Partition>, out: &mut Vec<Passport>) {
        if left == 0 {
            if !prefix.is_empty() {
                out.push(Passport::new(prefix.clone()).expect("valid colors"));
            }
            return;
        }
        for e in 1..=left {
            for p in parts_with_excess(e) {
                if p.sum() <= n {
                    prefix.push(p);
                    rec(left - e, n, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(n - 1, n, &mut Vec::new(), &mut out);
    out
}

fn passports(max_n: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 2..=max_n {
        for x in cactus_passports(n) {
            checks.push(Check::equal(
                format!("passport {x}"),
                &cacti_passport(&x, Variant::Corrected)?,
                &weighted_cactus_count(&x)?,
            ));
        }
    }
    let x = Passport::parse("2,2;3")?;
    checks.push(Check::differ(
        "printed variant disagrees on 2,2;3",
        &cacti_passport(&x, Variant::Printed)?,
        &weighted_cactus_count(&x)?,
    ));
    Ok(checks)
}

fn one_n(full: bool) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let ranges: &[(usize, std::ops::RangeInclusive<usize>)] = if full {
        &[(3, 2..=6), (4, 3..=5)]
    } else {
        &[(3, 2..=4), (4, 3..=3)]
    };
    for (k, ns) in ranges {
        let k = *k;
        for n in ns.clone() {
            let expected = rat_int(constellations_1n_closed(k, n)?);
            checks.push(Check::equal(
                format!("(k-1) n^(k-2) k={k} n={n}"),
                &expected,
                &(rat_int(k - 1) * pow(n, k - 2)),
            ));
            checks.push(Check::equal(
                format!("reduced k={k} n={n}"),
                &constellations_1n_reduced(k, n)?,
                &expected,
            ));
            checks.push(Check::equal(
                format!("single sum k={k} n={n}"),
                &constellations_1n_intermediate(k, n)?,
                &expected,
            ));
            for sizes in multisets(k, n + k + 1) {
                let tag = list(&sizes);
                checks.push(Check::equal(
                    format!("oracle {tag}"),
                    &weighted_1n_count(&sizes)?,
                    &expected,
                ));
                checks.push(Check::equal(
                    format!("double sum {tag}"),
                    &constellations_1n_sum(&sizes)?,
                    &expected,
                ));
            }
        }
    }
    let (max_k, max_n) = if full { (5, 12) } else { (4, 8) };
    for k in 2..=max_k {
        for n in 1..=max_n {
            let lists = multisets(k, n + k + 1);
            if lists.is_empty() {
                continue;
            }
            let values: BTreeSet<BigRational> = lists
                .iter()
                .map(|s| constellations_1n_sum(s))
                .collect::<Result<_>>()?;
            checks.push(Check::equal(
                format!("double sum depends on k={k} n={n} only"),
                &values.len(),
                &1,
            ));
        }
    }
    Ok(checks)
}

/// Non-increasing lists of `k` sizes `>= 2` with the given total.
fn multisets(k: usize, total: usize) -> Vec<Vec<usize>> {
    size_lists(k, total)
        .into_iter()
        .filter(|s| s.iter().sum::<usize>() == total && s.windows(2).all(|w| w[0] >= w[1]))
        .collect()
}

fn planar_connected() -> TypeQuery {
    TypeQuery {
        genus: Some(0),
        faces: Some(1),
        connected: true,
        ..TypeQuery::default()
    }
}

fn unit_circles(k: usize) -> Result<CircleSet> {
    CircleSet::new(
        (1..=k)
            .map(|c| (c, vec![Length::Value(BigRational::one())]))
            .collect(),
    )
}

fn circle_trees(max_symbolic: usize, max_trees: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for k in 2..=max_symbolic {
        let set = CircleSet::symbolic(&vec![1; k])?;
        let lengths: Vec<Polynomial> = set
            .circles()
            .iter()
            .map(|c| c.length.to_polynomial())
            .collect();
        checks.push(Check::equal(
            format!("symbolic volume k={k}"),
            &total_volume(&set, &planar_connected())?,
            &circle_cacti_distinct(&lengths)?,
        ));
        checks.push(Check::equal(
            format!("unit volume k={k}"),
            &total_volume(&unit_circles(k)?, &planar_connected())?,
            &Polynomial::constant(rat_int(cayley(k))),
        ));
    }
    for k in 2..=max_trees {
        let set = CircleSet::symbolic(&vec![1; k])?;
        let trees: BTreeSet<_> = enumerate_topological_types(&set, &planar_connected())?
            .iter()
            .map(|t| t.adjacency())
            .collect();
        checks.push(Check::equal(
            format!("underlying trees k={k}"),
            &rat_int(trees.len()),
            &rat_int(cayley(k)),
        ));
    }
    Ok(checks)
}

fn repeated_colors(full: bool) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut patterns = vec![vec![2, 1], vec![2, 2], vec![3, 1]];
    if !full {
        patterns.truncate(1);
    }
    for pattern in patterns {
        let set = CircleSet::symbolic(&pattern)?;
        checks.push(Check::equal(
            format!("multiplicities {}", list(&pattern)),
            &total_volume(&set, &planar_connected())?,
            &circle_cacti_multi(&set)?,
        ));
    }
    let set = CircleSet::parse("1:l,l;2:s")?;
    checks.push(Check::equal(
        format!("equal lengths {set}"),
        &total_volume(&set, &planar_connected())?,
        &circle_cacti_multi(&set)?,
    ));
    Ok(checks)
}

fn asymptotics(full: bool) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut cases: Vec<(Vec<usize>, usize, usize)> = vec![(vec![1, 1, 1], 0, 1)];
    if full {
        cases.push((vec![1, 1], 0, 2));
    }
    for (shape, g, p) in cases {
        let tag = format!("shape {} g={g} p={p}", list(&shape));
        let fit = fit_p(&shape, g, p, None)?;
        let m: usize = shape.iter().sum();
        checks.push(Check::equal(
            format!("degree {tag}"),
            &(fit.degree as i64),
            &stratum_dimension(g, m, p),
        ));
        checks.push(Check::equal(
            format!("fitted degree {tag}"),
            &fit.polynomial.total_degree().unwrap_or(0),
            &stratum_dimension(g, m, p),
        ));
        let q = volume_q(&shape, g, p)?;
        checks.push(Check {
            name: format!("top part equals volume {tag}"),
            lhs: fit.polynomial.to_string(),
            rhs: q.to_string(),
            pass: asymptotic_check(&fit.polynomial, &q)?,
        });
        if shape == [1, 1, 1] {
            let sum: Polynomial = ["n_1_1", "n_2_1", "n_3_1"]
                .iter()
                .map(|v| Polynomial::var(v))
                .sum();
            let expected = &sum - &Polynomial::constant(int(2));
            checks.push(Check::equal(
                format!("polynomial {tag}"),
                &fit.polynomial,
                &expected,
            ));
        }
    }
    Ok(checks)
}

fn dimensions(full: bool) -> Result<Vec<Check>> {
    let mut cases: Vec<(CircleSet, usize, usize)> = Vec::new();
    let max_k = if full { 6 } else { 4 };
    for k in 2..=max_k {
        cases.push((CircleSet::symbolic(&vec![1; k])?, 0, 1));
    }
    for pattern in [[2, 1], [2, 2], [3, 1]] {
        cases.push((CircleSet::symbolic(&pattern)?, 0, 1));
    }
    cases.push((CircleSet::symbolic(&[1, 1])?, 0, 2));
    cases.push((CircleSet::parse("1:l,l;2:s")?, 0, 1));
    let mut checks = Vec::new();
    for (set, g, p) in cases {
        let types = enumerate_topological_types(
            &set,
            &TypeQuery {
                genus: Some(g),
                faces: Some(p),
                connected: true,
                ..TypeQuery::default()
            },
        )?;
        let m = set.total_circles();
        let mut dims = true;
        let mut discs = true;
        for t in &types {
            let excess = t.contact_counts().iter().sum::<usize>() as i64 - m as i64;
            dims &= excess == stratum_dimension(t.genus, m, t.faces);
            let trace = face_trace(&t.contacts, &t.matching)?;
            discs &= trace.disc_faces == m && t.disc_faces == m;
        }
        let tag = format!("{set} g={g} p={p} ({} types)", types.len());
        checks.push(Check::holds(
            format!("dimension {tag}"),
            dims && !types.is_empty(),
        ));
        checks.push(Check::holds(format!("disc faces {tag}"), discs));
    }
    Ok(checks)
}

fn model_forms_check(max_n: usize, max_k: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        for k in 2..=max_k {
            let (h, h_inv) = model_forms(n, k)?;
            checks.push(Check::holds(
                format!("H positive definite N={n} k={k}"),
                is_positive_definite(&h),
            ));
            checks.push(Check::holds(
                format!("H^-1 positive definite N={n} k={k}"),
                is_positive_definite(&h_inv),
            ));
            let product = form_product(n, k)?;
            let identity = (0..product.len()).all(|i| {
                (0..product.len()).all(|j| product[i][j] == if i == j { int(1) } else { int(0) })
            });
            checks.push(Check::holds(format!("H H^-1 = id N={n} k={k}"), identity));
        }
    }
    Ok(checks)
}

fn moments(max_m: usize) -> Result<Vec<Check>> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut checks = Vec::new();
    for (n, k) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
        let (h, _) = model_forms(n, k)?;
        let dim = h.matrix.len();
        for trial in 0..2 {
            let lambda: Vec<BigRational> = (0..dim)
                .map(|_| {
                    BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into())
                })
                .collect();
            let cov = h.inverse()?;
            let q = crate::algebra::matrix::bilinear(&cov, &lambda, &lambda);
            for m in 1..=max_m {
                let double_factorial = factorial(2 * m as u64) / (factorial(m as u64) << m);
                let mut expected = rat_int(double_factorial);
                for _ in 0..m {
                    expected *= &q;
                }
                checks.push(Check::equal(
                    format!("<l^{}> N={n} k={k} trial {trial}", 2 * m),
                    &wick(&h, &vec![lambda.clone(); 2 * m])?,
                    &expected,
                ));
            }
            checks.push(Check::holds(
                format!("shift identity N={n} k={k} trial {trial}"),
                gaussian_shift_check(&h, &lambda, 4)?,
            ));
        }
    }
    Ok(checks)
}

pub fn two_by_two() -> CircleSet {
    CircleSet::parse("1:l1,l2;2:s1,s2").expect("valid circles")
}

fn two_by_two_expansion() -> Result<Vec<Check>> {
    let f = f_series(&two_by_two(), 4)?;
    let mut expected: Vec<(Vec<(&str, i32)>, BigRational)> = vec![(vec![], int(2))];
    for l in ["l1", "l2"] {
        for s in ["s1", "s2"] {
            expected.push((vec![(l, 1), (s, 1)], BigRational::new(3.into(), 2.into())));
            expected.push((vec![(l, 2), (s, 2)], BigRational::new(2.into(), 3.into())));
        }
    }
    for s in ["s1", "s2"] {
        expected.push((vec![("l1", 1), ("l2", 1), (s, 2)], int(1)));
    }
    for l in ["l1", "l2"] {
        expected.push((vec![(l, 2), ("s1", 1), ("s2", 1)], int(1)));
    }
    expected.push((
        vec![("l1", 1), ("l2", 1), ("s1", 1), ("s2", 1)],
        BigRational::new(3.into(), 2.into()),
    ));
    Ok(expected
        .into_iter()
        .map(|(powers, value)| {
            let name = if powers.is_empty() {
                "constant term".to_string()
            } else {
                let m: Vec<String> = powers
                    .iter()
                    .map(|(v, e)| {
                        if *e == 1 {
                            v.to_string()
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
                format!("coefficient of {}", m.join("*"))
            };
            Check::equal(name, &f.coefficient(&powers), &value)
        })
        .collect())
}

fn f_equals_big_f(max_degree: usize) -> Result<Vec<Check>> {
    let sets = [
        CircleSet::parse("1:l;2:s")?,
        CircleSet::parse("1:l;2:s;3:t")?,
        two_by_two(),
    ];
    let mut checks = Vec::new();
    for set in sets {
        let f = f_series(&set, max_degree)?;
        let big = big_f_series(&set, max_degree)?.substitute_value(N_SYMBOL, &int(1))?;
        checks.push(Check::equal(
            format!("{set} to degree {max_degree}"),
            &f,
            &big,
        ));
    }
    Ok(checks)
}

fn wick_vs_types(full: bool) -> Result<Vec<Check>> {
    let one_pair = CircleSet::parse("1:l;2:s")?;
    let mut cases = vec![
        (one_pair.clone(), 4, 1),
        (one_pair, if full { 4 } else { 2 }, 2),
    ];
    if full {
        cases.push((two_by_two(), 3, 1));
    }
    let mut checks = Vec::new();
    for (set, grade, n) in cases {
        let check = wick_f_check(&set, grade, n)?;
        checks.push(Check::equal(
            format!("{set} grade {grade} N={n}"),
            &check.wick,
            &check.types,
        ));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn passport_listing() {
        // n = 3: 2;2 and 3.
        let names: Vec<String> = cactus_passports(3).iter().map(|x| x.to_string()).collect();
        assert_eq!(names, vec!["2;2", "3"]);
        assert!(cactus_passports(5).iter().any(|x| x.to_string() == "2,2;3"));
    }

    #[test]
    fn size_listing() {
        assert_eq!(size_lists(2, 5), vec![vec![2, 2], vec![2, 3], vec![3, 2]]);
        assert_eq!(multisets(3, 7), vec![vec![3, 2, 2]]);
    }

    #[test]
    fn suite_names() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("thm9".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_suites_pass() {
        for s in [Suite::Thm1polyg, Suite::Thm3polyg, Suite::Matrixmodel] {
            let r = run_suite(s, Scale::Quick).unwrap();
            let failed: Vec<_> = r.checks.iter().filter(|c| !c.pass).collect();
            assert!(r.pass, "{failed:?}");
        }
    }

    #[test]
    fn zero_is_shown_plainly() {
        assert_eq!(BigRational::zero().show(), "0/1");
    }
}
