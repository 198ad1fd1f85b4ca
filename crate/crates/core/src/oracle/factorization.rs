//! Exhaustive counting of permutation factorizations.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::algebra::rational::factorial;
use crate::error::{Error, Result};
use crate::monodromy::permutation::{cycle_count, cycle_histogram, MAX_POINTS};
use crate::monodromy::tuple::is_transitive;
use crate::monodromy::{constellation_degree, CycleClass, Partition, Passport, Permutation};

type Buf = [u8; MAX_POINTS];

fn identity_buf(n: usize) -> Buf {
    let mut b = [0u8; MAX_POINTS];
    for (i, x) in b.iter_mut().enumerate().take(n) {
        *x = i as u8;
    }
    b
}

fn then(a: &Buf, b: &[u8], n: usize) -> Buf {
    let mut out = [0u8; MAX_POINTS];
    for i in 0..n {
        out[i] = b[a[i] as usize];
    }
    out
}

fn inverse(a: &[u8], n: usize) -> Buf {
    let mut out = [0u8; MAX_POINTS];
    for i in 0..n {
        out[a[i] as usize] = i as u8;
    }
    out
}

fn histogram_of(lambda: &Partition) -> [u8; MAX_POINTS + 1] {
    let mut h = [0u8; MAX_POINTS + 1];
    for &x in lambda.parts() {
        h[x] += 1;
    }
    h
}

/// What to do with the tuple after the enumerated colors are chosen.
enum Mode {
    /// Solve color `solved` from a fixed product.
    Target {
        target: Vec<u8>,
        solved: usize,
        hist: [u8; MAX_POINTS + 1],
    },
    /// Require `sigma_infinity` to have this many cycles.
    Faces(usize),
}

/// Counts transitive tuples whose color `i` has cycle type `types[i]`
/// (padded to `n`). Colors listed in `fixed` take the given permutation
/// instead of ranging over their class.
struct Search {
    n: usize,
    classes: Vec<Option<CycleClass>>,
    fixed: Vec<Option<Permutation>>,
    mode: Mode,
}

impl Search {
    fn count(&self) -> u64 {
        let k = self.classes.len();
        let free: Vec<usize> = (0..k).filter(|&i| self.classes[i].is_some()).collect();
        let Some(&first) = free.first() else {
            return self.leaf(&vec![None; k]) as u64;
        };
        let class = self.classes[first].as_ref().unwrap();
        (0..class.len())
            .into_par_iter()
            .map(|idx| {
                let mut chosen: Vec<Option<&[u8]>> = vec![None; k];
                chosen[first] = Some(class.get(idx).unwrap().bytes());
                self.descend(&free[1..], &mut chosen)
            })
            .sum()
    }

    fn descend<'a>(&'a self, free: &[usize], chosen: &mut Vec<Option<&'a [u8]>>) -> u64 {
        let Some((&color, rest)) = free.split_first() else {
            return self.leaf(chosen) as u64;
        };
        let mut total = 0;
        for p in self.classes[color].as_ref().unwrap().iter() {
            chosen[color] = Some(p.bytes());
            total += self.descend(rest, chosen);
        }
        chosen[color] = None;
        total
    }

    fn leaf(&self, chosen: &[Option<&[u8]>]) -> bool {
        let n = self.n;
        let get = |i: usize, chosen: &[Option<&[u8]>]| -> Buf {
            let mut b = [0u8; MAX_POINTS];
            let src = match &self.fixed[i] {
                Some(p) => p.bytes(),
                None => chosen[i].unwrap(),
            };
            b[..n].copy_from_slice(src);
            b
        };
        let k = self.classes.len();
        let mut perms: Vec<Buf> = Vec::with_capacity(k);
        match &self.mode {
            Mode::Target {
                target,
                solved,
                hist,
            } => {
                let mut left = identity_buf(n);
                let mut right = identity_buf(n);
                for i in 0..k {
                    if i == *solved {
                        perms.push([0; MAX_POINTS]);
                        continue;
                    }
                    let p = get(i, chosen);
                    if i < *solved {
                        left = then(&left, &p, n);
                    } else {
                        right = then(&right, &p, n);
                    }
                    perms.push(p);
                }
                let sigma = then(&then(&inverse(&left, n), target, n), &inverse(&right, n), n);
                let mut h = [0u8; MAX_POINTS + 1];
                cycle_histogram(&sigma[..n], &mut h);
                if &h != hist {
                    return false;
                }
                perms[*solved] = sigma;
            }
            Mode::Faces(faces) => {
                let mut prod = identity_buf(n);
                for i in 0..k {
                    let p = get(i, chosen);
                    prod = then(&prod, &p, n);
                    perms.push(p);
                }
                if cycle_count(&prod[..n]) != *faces {
                    return false;
                }
            }
        }
        is_transitive(n, perms.iter().map(|p| &p[..n]))
    }
}

fn padded_types(x: &Passport, n: usize) -> Option<Vec<Partition>> {
    x.colors()
        .iter()
        .map(|c| (c.sum() <= n).then(|| c.padded(n)))
        .collect()
}

fn target_search(types: &[Partition], n: usize, target: &Permutation) -> Result<u64> {
    // Solve for the color with the largest class; iterate the others.
    let sizes: Vec<BigInt> = types.iter().map(|t| class_size(n, t)).collect();
    let solved = (0..types.len())
        .max_by(|&a, &b| sizes[a].cmp(&sizes[b]).then(b.cmp(&a)))
        .unwrap();
    let mut classes = Vec::new();
    for (i, t) in types.iter().enumerate() {
        classes.push(if i == solved {
            None
        } else {
            Some(CycleClass::new(n, t)?)
        });
    }
    let search = Search {
        n,
        fixed: vec![None; types.len()],
        classes,
        mode: Mode::Target {
            target: target.bytes().to_vec(),
            solved,
            hist: histogram_of(&types[solved]),
        },
    };
    Ok(search.count())
}

fn class_size(n: usize, lambda: &Partition) -> BigInt {
    let z: BigInt = lambda
        .padded(n)
        .multiplicities()
        .iter()
        .map(|(&len, &a)| num_traits::pow(BigInt::from(len), a) * factorial(a as u64))
        .product();
    factorial(n as u64) / z
}

/// `1/|Sym|`-weighted number of cacti with passport `x`: factorizations of
/// the long cycle `(1 2 ... n)` divided by `n`.
pub fn weighted_cactus_count(x: &Passport) -> Result<BigRational> {
    let n = constellation_degree(x, 0, 1)?;
    check_size(n)?;
    let Some(types) = padded_types(x, n) else {
        return Ok(BigRational::from_integer(0.into()));
    };
    let count = target_search(&types, n, &Permutation::long_cycle(n))?;
    Ok(BigRational::new(count.into(), n.into()))
}

/// `1/|Sym|`-weighted number of constellations of genus `genus` with `faces`
/// faces: transitive tuples divided by `n!`.
pub fn weighted_constellation_count(
    x: &Passport,
    genus: usize,
    faces: usize,
) -> Result<BigRational> {
    let n = constellation_degree(x, genus, faces)?;
    check_size(n)?;
    let Some(types) = padded_types(x, n) else {
        return Ok(BigRational::from_integer(0.into()));
    };
    // Conjugation fixes sigma_1 to one class member, scaled by the class size.
    let first = CycleClass::new(n, &types[0])?;
    let mut classes = vec![None];
    for t in &types[1..] {
        classes.push(Some(CycleClass::new(n, t)?));
    }
    let mut fixed = vec![None; types.len()];
    fixed[0] = Some(first.get(0).unwrap().clone());
    let search = Search {
        n,
        classes,
        fixed,
        mode: Mode::Faces(faces),
    };
    let count = BigInt::from(search.count()) * BigInt::from(first.len());
    Ok(BigRational::new(count, factorial(n as u64)))
}

/// Number of `(1,n)`-constellations with one polygon of each given size:
/// factorizations of `(1 2 ... n)(n+1)` into single cycles, divided by `n`.
pub fn weighted_1n_count(sizes: &[usize]) -> Result<BigRational> {
    let k = sizes.len();
    let total: usize = sizes.iter().sum();
    if sizes.iter().any(|&s| s < 2) || total < k + 2 {
        return Err(Error::NoSuchConstellation(format!(
            "sizes {sizes:?} give n < 1"
        )));
    }
    let n = total - k - 1;
    check_size(n + 1)?;
    if sizes.iter().any(|&s| s > n + 1) {
        return Ok(BigRational::from_integer(0.into()));
    }
    let types: Vec<Partition> = sizes
        .iter()
        .map(|&s| Partition::new(vec![s]).padded(n + 1))
        .collect();
    let mut target: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    target.push(n);
    let count = target_search(&types, n + 1, &Permutation::from_images(target)?)?;
    Ok(BigRational::new(count.into(), n.into()))
}

fn check_size(n: usize) -> Result<()> {
    if n > 12 {
        return Err(Error::InvalidInput(format!(
            "degree {n} is too large for exhaustive search"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn pp(s: &str) -> Passport {
        Passport::parse(s).unwrap()
    }

    #[test]
    fn cactus_counts() {
        assert_eq!(weighted_cactus_count(&pp("2;2")).unwrap(), int(1));
        assert_eq!(weighted_cactus_count(&pp("2;2;2")).unwrap(), int(4));
        assert_eq!(weighted_cactus_count(&pp("2,2;3")).unwrap(), int(1));
        assert_eq!(weighted_cactus_count(&pp("5")).unwrap(), rat(1, 5));
        assert_eq!(weighted_cactus_count(&pp("2,2")).unwrap(), int(0));
    }

    #[test]
    fn constellation_counts() {
        assert_eq!(
            weighted_constellation_count(&pp("3;4;5"), 0, 1).unwrap(),
            int(10)
        );
        assert_eq!(
            weighted_constellation_count(&pp("2;2"), 0, 2).unwrap(),
            rat(1, 2)
        );
        assert_eq!(
            weighted_constellation_count(&pp("2"), 0, 1).unwrap(),
            rat(1, 2)
        );
        assert!(weighted_constellation_count(&pp("2"), 0, 3).is_err());
    }

    #[test]
    fn one_n_counts() {
        assert_eq!(weighted_1n_count(&[2, 2, 2]).unwrap(), int(4));
        assert_eq!(weighted_1n_count(&[3, 3, 3]).unwrap(), int(10));
        assert_eq!(weighted_1n_count(&[2, 2]).unwrap(), int(1));
        assert!(weighted_1n_count(&[2]).is_err());
    }

    #[test]
    fn thread_count_does_not_matter() {
        let x = pp("2,2;3;2");
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let single = pool.install(|| weighted_cactus_count(&x).unwrap());
        assert_eq!(single, weighted_cactus_count(&x).unwrap());
    }
}
