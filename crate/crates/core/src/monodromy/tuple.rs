use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Permutations `sigma_1..sigma_k` of a common ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyTuple {
    n: usize,
    sigma: Vec<Permutation>,
}

impl MonodromyTuple {
    pub fn new(n: usize, sigma: Vec<Permutation>) -> Result<Self> {
        if sigma.iter().any(|s| s.n() != n) {
            return Err(Error::InvalidInput(format!(
                "all permutations must act on {n} points"
            )));
        }
        Ok(MonodromyTuple { n, sigma })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> &[Permutation] {
        &self.sigma
    }

    /// `sigma_1` applied first, `sigma_k` last.
    pub fn product(&self) -> Permutation {
        self.sigma
            .iter()
            .fold(Permutation::identity(self.n), |acc, s| acc.then(s))
    }

    pub fn sigma_infinity(&self) -> Permutation {
        self.product().inverse()
    }

    pub fn is_transitive(&self) -> bool {
        is_transitive(self.n, self.sigma.iter().map(Permutation::bytes))
    }

    /// `(genus, faces)` with faces the cycle count of `sigma_infinity`.
    pub fn euler_data(&self) -> Result<(usize, usize)> {
        if !self.is_transitive() {
            return Err(Error::InvalidInput("tuple is not transitive".into()));
        }
        let n = self.n as i64;
        let faces = self.sigma_infinity().num_cycles();
        let moved: i64 = self
            .sigma
            .iter()
            .map(|s| n - s.num_cycles() as i64)
            .sum::<i64>()
            + (n - faces as i64);
        let chi = 2 * n - moved;
        assert!(
            chi % 2 == 0 && chi <= 2,
            "impossible tuple: Euler characteristic {chi}"
        );
        Ok((((2 - chi) / 2) as usize, faces))
    }
}

pub(crate) fn is_transitive<'a>(n: usize, gens: impl Iterator<Item = &'a [u8]> + Clone) -> bool {
    if n <= 1 {
        return true;
    }
    let mut reached: u64 = 1;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for g in gens.clone() {
            let y = g[x] as usize;
            if reached >> y & 1 == 0 {
                reached |= 1 << y;
                stack.push(y);
            }
        }
    }
    reached.count_ones() as usize == n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuple(n: usize, cycles: &[&[&[usize]]]) -> MonodromyTuple {
        let sigma = cycles
            .iter()
            .map(|c| Permutation::from_cycles(n, c).unwrap())
            .collect();
        MonodromyTuple::new(n, sigma).unwrap()
    }

    #[test]
    fn transitivity() {
        assert!(tuple(3, &[&[&[1, 2]], &[&[2, 3]]]).is_transitive());
        assert!(!tuple(3, &[&[&[1, 2]], &[&[1, 2]]]).is_transitive());
        assert!(tuple(1, &[&[], &[]]).is_transitive());
    }

    #[test]
    fn euler() {
        assert_eq!(tuple(3, &[&[&[1, 2]], &[&[2, 3]]]).euler_data(), Ok((0, 1)));
        assert_eq!(tuple(5, &[&[&[1, 2, 3, 4, 5]]]).euler_data(), Ok((0, 1)));
        // (1 2 3)^3 is the identity, so sigma_infinity has three fixed points.
        let t = tuple(3, &[&[&[1, 2, 3]], &[&[1, 2, 3]], &[&[1, 2, 3]]]);
        assert_eq!(t.euler_data(), Ok((1, 3)));
    }

    /// Face count by walking the faces of the hypermap directly: darts are
    /// pairs (point, color) and each face is an orbit of the step below.
    fn traced_faces(t: &MonodromyTuple) -> usize {
        let n = t.n();
        // Starting at point x before color 1, pass through every color in
        // turn; the point reached after color k starts the next corner.
        let mut seen = vec![false; n];
        let mut faces = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                for s in t.sigma() {
                    x = s.apply(x);
                }
            }
        }
        faces
    }

    #[test]
    fn faces_match_walk() {
        let t = tuple(3, &[&[&[1, 2, 3]], &[&[1, 2, 3]], &[&[1, 2, 3]]]);
        assert_eq!(t.euler_data().unwrap().1, traced_faces(&t));
        let t = tuple(4, &[&[&[1, 2]], &[&[2, 3]], &[&[3, 4]]]);
        assert_eq!(t.euler_data().unwrap().1, traced_faces(&t));
    }
}
