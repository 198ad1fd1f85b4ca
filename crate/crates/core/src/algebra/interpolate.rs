//! Exact multivariate polynomial interpolation on integer sample points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{bareiss_echelon, clear_denominators};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// All exponent vectors in `nvars` variables with total degree at most `bound`.
pub fn monomials_up_to(nvars: usize, bound: usize) -> Vec<Vec<i32>> {
    fn rec(prefix: &mut Vec<i32>, left: usize, remaining_vars: usize, out: &mut Vec<Vec<i32>>) {
        if remaining_vars == 0 {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=left {
            prefix.push(e as i32);
            rec(prefix, left - e, remaining_vars - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), bound, nvars, &mut out);
    out
}

/// The rectangular grid `values^nvars` in lexicographic order.
pub fn grid_points(nvars: usize, values: &[i64]) -> Vec<Vec<i64>> {
    let mut points: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..nvars {
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    points
}

/// Finds the unique polynomial of total degree at most `degree_bound` in
/// `vars` taking the given values at the given points.
///
/// Fails with [`Error::InconsistentSamples`] when no such polynomial exists
/// and [`Error::Underdetermined`] when the points do not pin it down.
pub fn interpolate(
    vars: &[String],
    samples: &[(Vec<i64>, BigRational)],
    degree_bound: usize,
) -> Result<Polynomial> {
    let monomials = monomials_up_to(vars.len(), degree_bound);
    let unknowns = monomials.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(samples.len());
    for (point, value) in samples {
        if point.len() != vars.len() {
            return Err(Error::InvalidInput("sample point dimension".into()));
        }
        let mut row: Vec<BigRational> = monomials
            .iter()
            .map(|m| {
                let v = point.iter().zip(m).fold(BigInt::one(), |acc, (&x, &e)| {
                    acc * num_traits::pow(BigInt::from(x), e as usize)
                });
                BigRational::from_integer(v)
            })
            .collect();
        row.push(value.clone());
        rows.push(clear_denominators(&row));
    }
    let pivots = bareiss_echelon(&mut rows, unknowns);
    let rank = pivots.len();
    if rows[rank..].iter().any(|r| !r[unknowns].is_zero()) {
        return Err(Error::InconsistentSamples(degree_bound));
    }
    if rank < unknowns {
        return Err(Error::Underdetermined(degree_bound));
    }
    // Back substitution; the echelon block is square and upper triangular.
    let mut solution = vec![BigRational::zero(); unknowns];
    for i in (0..rank).rev() {
        let row = &rows[i];
        let mut acc = BigRational::from_integer(row[unknowns].clone());
        for j in i + 1..unknowns {
            acc -= BigRational::from_integer(row[j].clone()) * &solution[j];
        }
        solution[i] = acc / BigRational::from_integer(row[i].clone());
    }
    Ok(Polynomial::from_terms(
        vars,
        monomials.into_iter().zip(solution),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn recovers_square() {
        let vars = vec!["n".to_string()];
        let samples: Vec<_> = (0..3).map(|n| (vec![n], int(n * n))).collect();
        let p = interpolate(&vars, &samples, 2).unwrap();
        assert_eq!(p, Polynomial::var("n").pow(2).unwrap());
    }

    #[test]
    fn contradictory_samples() {
        let vars = vec!["n".to_string()];
        let samples = vec![(vec![0], int(0)), (vec![0], int(1))];
        assert!(matches!(
            interpolate(&vars, &samples, 0),
            Err(Error::InconsistentSamples(0))
        ));
    }

    #[test]
    fn too_few_points() {
        let vars = vec!["n".to_string()];
        let samples = vec![(vec![1], int(0))];
        assert_eq!(
            interpolate(&vars, &samples, 1),
            Err(Error::Underdetermined(1))
        );
    }

    #[test]
    fn degree_too_low_is_detected() {
        let vars = vec!["x".to_string(), "y".to_string()];
        let samples: Vec<_> = grid_points(2, &[0, 1])
            .into_iter()
            .map(|p| {
                let v = int(p[0] * p[1]);
                (p, v)
            })
            .collect();
        assert!(interpolate(&vars, &samples, 1).is_err());
        let xy = interpolate(&vars, &samples, 2);
        // A 2x2 grid cannot separate x^2 from x.
        assert_eq!(xy, Err(Error::Underdetermined(2)));
    }

    #[test]
    fn monomial_count() {
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(grid_points(2, &[2, 3, 4]).len(), 9);
    }
}
