use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::algebra::rational::factorial;
use crate::error::{Error, Result};

/// A multiset of positive integers, stored non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts`; zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Appends 1s up to total `n`.
    pub fn padded(&self, n: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat(1).take(n.saturating_sub(self.sum())));
        Partition { parts }
    }

    /// Drops parts equal to 1.
    pub fn without_ones(&self) -> Partition {
        Partition {
            parts: self.parts.iter().copied().filter(|&x| x > 1).collect(),
        }
    }

    /// Part value -> number of occurrences.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &x in &self.parts {
            *counts.entry(x).or_insert(0) += 1;
        }
        counts
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(left: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=left.min(max)).rev() {
                prefix.push(part);
                rec(left - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of `n` with every part at least `min`.
    pub fn all_with_min_part(n: usize, min: usize) -> Vec<Partition> {
        Self::all_of(n)
            .into_iter()
            .filter(|p| p.parts.iter().all(|&x| x >= min))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", body.join(","))
    }
}

/// `prod_j a_j!` where `a_j` is the multiplicity of part `j`.
pub fn passport_aut(x: &Partition) -> BigInt {
    x.multiplicities()
        .values()
        .map(|&a| factorial(a as u64))
        .product()
}

/// Per-color partitions, every part at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passport {
    colors: Vec<Partition>,
}

impl Passport {
    pub fn new(colors: Vec<Partition>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::InvalidInput(
                "passport needs at least one color".into(),
            ));
        }
        for (i, c) in colors.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "color {} has no polygons",
                    i + 1
                )));
            }
            if c.parts.iter().any(|&x| x < 2) {
                return Err(Error::InvalidInput(format!(
                    "color {} has a part below 2",
                    i + 1
                )));
            }
        }
        Ok(Passport { colors })
    }

    /// One polygon per color.
    pub fn distinct(sizes: &[usize]) -> Result<Self> {
        Self::new(sizes.iter().map(|&s| Partition::new(vec![s])).collect())
    }

    /// Parses `"2,2;3"`: colors split by `;`, parts by `,`.
    pub fn parse(text: &str) -> Result<Self> {
        if let Some(c) = text
            .chars()
            .find(|c| !(c.is_ascii_digit() || *c == ',' || *c == ';'))
        {
            return Err(Error::Parse(format!(
                "unexpected character {c:?} in passport"
            )));
        }
        let mut colors = Vec::new();
        for chunk in text.split(';') {
            let mut parts = Vec::new();
            for item in chunk.split(',') {
                let part: usize = item
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad part {item:?} in passport")))?;
                parts.push(part);
            }
            colors.push(Partition::new(parts));
        }
        Self::new(colors).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn colors(&self) -> &[Partition] {
        &self.colors
    }

    pub fn k(&self) -> usize {
        self.colors.len()
    }

    pub fn max_part(&self) -> usize {
        self.colors
            .iter()
            .map(Partition::max_part)
            .max()
            .unwrap_or(0)
    }

    /// True when every color has exactly one polygon.
    pub fn is_distinct(&self) -> bool {
        self.colors.iter().all(|c| c.len() == 1)
    }
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", body.join(";"))
    }
}

/// Ground-set size forced by Riemann-Hurwitz: `2 - 2g - p + sum(n_i - p_i)`.
pub fn constellation_degree(x: &Passport, genus: usize, faces: usize) -> Result<usize> {
    let excess: i64 = x.colors.iter().map(|c| (c.sum() - c.len()) as i64).sum();
    let n = 2 - 2 * genus as i64 - faces as i64 + excess;
    if n < 1 || (n as usize) < x.max_part() {
        return Err(Error::NoSuchConstellation(format!(
            "passport {x} with genus {genus} and {faces} faces gives degree {n}"
        )));
    }
    Ok(n as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aut_orders() {
        assert_eq!(
            passport_aut(&Partition::new(vec![2, 2, 3])),
            BigInt::from(2)
        );
        assert_eq!(passport_aut(&Partition::new(vec![5])), BigInt::from(1));
        assert_eq!(
            passport_aut(&Partition::new(vec![2, 2, 2, 2])),
            BigInt::from(24)
        );
    }

    #[test]
    fn parse_grammar() {
        let x = Passport::parse("2,2;3").unwrap();
        assert_eq!(x.colors()[0].parts(), &[2, 2]);
        assert_eq!(x.colors()[1].parts(), &[3]);
        assert_eq!(x.to_string(), "2,2;3");
        for bad in ["", "2, 2", "2;;3", "1;3", "2;x", "2,;3", "-2"] {
            assert!(
                matches!(Passport::parse(bad), Err(Error::Parse(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn degrees() {
        let d = |s: &str, g, p| constellation_degree(&Passport::parse(s).unwrap(), g, p);
        assert_eq!(d("3;4;5", 0, 1), Ok(10));
        assert_eq!(d("2;2;2", 0, 2), Ok(3));
        assert_eq!(d("2,2;3", 0, 1), Ok(5));
        assert!(d("5", 0, 2).is_err());
        assert!(d("2", 0, 3).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
