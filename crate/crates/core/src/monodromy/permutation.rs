use std::fmt;

use super::partition::Partition;
use crate::error::{Error, Result};

/// A bijection of `{0..n-1}` (displayed 1-based in cycle notation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

/// Permutations act on at most this many points.
pub const MAX_POINTS: usize = 32;

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_POINTS {
            return Err(Error::InvalidInput(format!("at most {MAX_POINTS} points")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidInput("images do not form a bijection".into()));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    /// Builds from 1-based cycles; unmentioned points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n || seen[x - 1] {
                    return Err(Error::InvalidInput(format!("bad cycle entry {x}")));
                }
                seen[x - 1] = true;
                images[x - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    /// The long cycle `(1 2 ... n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| ((i + 1) % n) as u8).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.images
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Cycles including fixed points, each starting at its least element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn num_cycles(&self) -> usize {
        cycle_count(&self.images)
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len()).collect())
    }
}

pub(crate) fn cycle_count(images: &[u8]) -> usize {
    let mut seen: u64 = 0;
    let mut count = 0;
    for start in 0..images.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        count += 1;
        let mut x = start;
        while seen >> x & 1 == 0 {
            seen |= 1 << x;
            x = images[x] as usize;
        }
    }
    count
}

/// Histogram of cycle lengths, indexed by length.
pub(crate) fn cycle_histogram(images: &[u8], out: &mut [u8; MAX_POINTS + 1]) {
    out.fill(0);
    let mut seen: u64 = 0;
    for start in 0..images.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while seen >> x & 1 == 0 {
            seen |= 1 << x;
            x = images[x] as usize;
            len += 1;
        }
        out[len] += 1;
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            let body: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Every permutation of `{0..n-1}` with a given cycle type, in
/// lexicographic order of image arrays.
#[derive(Clone, Debug)]
pub struct CycleClass {
    n: usize,
    members: Vec<Permutation>,
}

impl CycleClass {
    /// `lambda` may omit fixed points: it is padded with 1s up to `n`.
    pub fn new(n: usize, lambda: &Partition) -> Result<Self> {
        let sum = lambda.sum();
        if sum > n || n > MAX_POINTS {
            return Err(Error::SizeMismatch { sum, expected: n });
        }
        let lambda = lambda.padded(n);
        let mut members = Vec::new();
        let mut images = vec![usize::MAX; n];
        let mut remaining: Vec<usize> = lambda.parts().to_vec();
        build_class(&mut images, &mut remaining, &mut members);
        members.sort();
        Ok(CycleClass { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Permutation> {
        self.members.get(index)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.members.iter()
    }

    /// Resumes the stream at `index`, for splitting work across threads.
    pub fn iter_from(&self, index: usize) -> std::slice::Iter<'_, Permutation> {
        self.members[index.min(self.members.len())..].iter()
    }
}

fn build_class(images: &mut Vec<usize>, remaining: &mut Vec<usize>, out: &mut Vec<Permutation>) {
    let Some(start) = images.iter().position(|&x| x == usize::MAX) else {
        out.push(Permutation {
            images: images.iter().map(|&x| x as u8).collect(),
        });
        return;
    };
    // The cycle through the least free point takes each distinct remaining
    // length once, so equal-length cycles are never produced twice.
    let mut lengths = remaining.clone();
    lengths.sort_unstable();
    lengths.dedup();
    for len in lengths {
        let pos = remaining.iter().position(|&l| l == len).unwrap();
        remaining.swap_remove(pos);
        let mut cycle = vec![start];
        images[start] = start; // reserve
        extend_cycle(images, &mut cycle, len, remaining, out);
        images[start] = usize::MAX;
        remaining.push(len);
    }
}

fn extend_cycle(
    images: &mut Vec<usize>,
    cycle: &mut Vec<usize>,
    len: usize,
    remaining: &mut Vec<usize>,
    out: &mut Vec<Permutation>,
) {
    if cycle.len() == len {
        for i in 0..len {
            images[cycle[i]] = cycle[(i + 1) % len];
        }
        build_class(images, remaining, out);
        for &x in cycle.iter().skip(1) {
            images[x] = usize::MAX;
        }
        images[cycle[0]] = cycle[0];
        return;
    }
    for next in 0..images.len() {
        if images[next] != usize::MAX {
            continue;
        }
        images[next] = next; // reserve
        cycle.push(next);
        extend_cycle(images, cycle, len, remaining, out);
        cycle.pop();
        images[next] = usize::MAX;
    }
}

/// Streams each permutation of cycle type `lambda` once.
pub fn iterate_cycle_type(n: usize, lambda: &Partition) -> Result<std::vec::IntoIter<Permutation>> {
    if lambda.sum() != n {
        return Err(Error::SizeMismatch {
            sum: lambda.sum(),
            expected: n,
        });
    }
    Ok(CycleClass::new(n, lambda)?.members.into_iter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::factorial;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(4).cycle_type(), p(&[1, 1, 1, 1]));
        assert_eq!(
            Permutation::from_cycles(3, &[&[1, 2]])
                .unwrap()
                .cycle_type(),
            p(&[2, 1])
        );
        assert_eq!(Permutation::long_cycle(5).cycle_type(), p(&[5]));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(iterate_cycle_type(3, &p(&[2, 1])).unwrap().count(), 3);
        assert_eq!(iterate_cycle_type(3, &p(&[3])).unwrap().count(), 2);
        assert_eq!(iterate_cycle_type(4, &p(&[2, 2])).unwrap().count(), 3);
        assert!(iterate_cycle_type(4, &p(&[2, 1])).is_err());
    }

    /// Centralizer order `prod i^{a_i} a_i!`, computed from the multiplicities.
    fn centralizer(lambda: &Partition) -> u64 {
        let mut counts = std::collections::BTreeMap::new();
        for &x in lambda.parts() {
            *counts.entry(x).or_insert(0u64) += 1;
        }
        counts
            .iter()
            .map(|(&len, &a)| (len as u64).pow(a as u32) * (1..=a).product::<u64>())
            .product()
    }

    #[test]
    fn class_size_is_n_factorial_over_centralizer() {
        for n in 1..=7 {
            for lambda in Partition::all_of(n) {
                let class = CycleClass::new(n, &lambda).unwrap();
                let expected = factorial(n as u64) / centralizer(&lambda);
                assert_eq!(
                    num_bigint::BigInt::from(class.len()),
                    expected,
                    "{lambda:?}"
                );
                assert!(class.iter().all(|q| q.cycle_type() == lambda));
                assert!(class.iter().zip(class.iter().skip(1)).all(|(a, b)| a < b));
            }
        }
    }

    #[test]
    fn composition_order() {
        let a = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3, so a.then(b) sends 1 to 3.
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(a.then(&a.inverse()), Permutation::identity(3));
        assert_eq!(a.then(&b).to_string(), "(1 3 2)");
    }
}
