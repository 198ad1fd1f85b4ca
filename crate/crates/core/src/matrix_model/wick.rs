//! Gaussian moments by summing over pairings.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::state_space::{Cx, QuadForm};
use crate::algebra::matrix::{bilinear, RatMatrix};
use crate::algebra::rational::factorial;
use crate::error::Result;

/// `H^{-1}(u, v)`, extended bilinearly to complex forms.
pub fn covariance(cov: &RatMatrix, u: &[Cx], v: &[Cx]) -> Cx {
    let re = |w: &[Cx]| w.iter().map(|c| c.re.clone()).collect::<Vec<_>>();
    let im = |w: &[Cx]| w.iter().map(|c| c.im.clone()).collect::<Vec<_>>();
    let (ur, ui, vr, vi) = (re(u), im(u), re(v), im(v));
    Cx::new(
        bilinear(cov, &ur, &vr) - bilinear(cov, &ui, &vi),
        bilinear(cov, &ur, &vi) + bilinear(cov, &ui, &vr),
    )
}

/// Sum over perfect matchings of `0..n` of the product of `pair(i, j)`.
pub fn pairing_sum<T, F>(n: usize, pair: &F) -> T
where
    T: Clone + Zero + One + for<'a> std::ops::Mul<&'a T, Output = T>,
    F: Fn(usize, usize) -> T,
{
    fn rec<T, F>(left: &mut Vec<usize>, pair: &F) -> T
    where
        T: Clone + Zero + One + for<'a> std::ops::Mul<&'a T, Output = T>,
        F: Fn(usize, usize) -> T,
    {
        if left.is_empty() {
            return T::one();
        }
        let first = left.remove(0);
        let mut total = T::zero();
        for idx in 0..left.len() {
            let other = left.remove(idx);
            let p = pair(first, other);
            if !p.is_zero() {
                total = total + rec(left, pair) * &p;
            }
            left.insert(idx, other);
        }
        left.insert(0, first);
        total
    }
    if n % 2 == 1 {
        return T::zero();
    }
    rec(&mut (0..n).collect(), pair)
}

/// `<prod_i lambda_i>` for the Gaussian `exp(-h(v)/2)`.
pub fn wick_complex(h: &QuadForm, forms: &[Vec<Cx>]) -> Result<Cx> {
    let cov = h.inverse()?;
    Ok(pairing_sum(forms.len(), &|i, j| {
        covariance(&cov, &forms[i], &forms[j])
    }))
}

pub fn wick(h: &QuadForm, forms: &[Vec<BigRational>]) -> Result<BigRational> {
    if forms.len() % 2 == 1 {
        return Ok(BigRational::zero());
    }
    let cov = h.inverse()?;
    Ok(pairing_sum(forms.len(), &|i, j| {
        bilinear(&cov, &forms[i], &forms[j])
    }))
}

/// One order of the moment-generating identity `<e^lambda> = e^{q/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTerm {
    pub order: usize,
    pub moment: BigRational,
    pub expected: BigRational,
}

/// Compares `<lambda^j>/j!` with the coefficient of `t^j` in
/// `exp(t^2 H^{-1}(lambda)/2)` for `j <= 2 max_order`.
pub fn gaussian_shift_terms(
    h: &QuadForm,
    lambda: &[BigRational],
    max_order: usize,
) -> Result<Vec<ShiftTerm>> {
    let cov = h.inverse()?;
    let q = bilinear(&cov, lambda, lambda);
    let half_q = q / BigRational::from_integer(2.into());
    let mut out = Vec::new();
    for j in 0..=2 * max_order {
        let forms = vec![lambda.to_vec(); j];
        let moment = wick(h, &forms)? / BigRational::from_integer(factorial(j as u64));
        let expected = if j % 2 == 1 {
            BigRational::zero()
        } else {
            let m = j / 2;
            let mut p = BigRational::one();
            for _ in 0..m {
                p *= &half_q;
            }
            p / BigRational::from_integer(factorial(m as u64))
        };
        out.push(ShiftTerm {
            order: j,
            moment,
            expected,
        });
    }
    Ok(out)
}

pub fn gaussian_shift_check(
    h: &QuadForm,
    lambda: &[BigRational],
    max_order: usize,
) -> Result<bool> {
    Ok(gaussian_shift_terms(h, lambda, max_order)?
        .iter()
        .all(|t| t.moment == t.expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::matrix_model::state_space::{model_forms, StateSpace};

    fn diag(xs: &[i64]) -> QuadForm {
        let n = xs.len();
        QuadForm {
            matrix: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { int(xs[i]) } else { int(0) })
                        .collect()
                })
                .collect(),
        }
    }

    #[test]
    fn low_moments() {
        let h = diag(&[2, 3]);
        let l = vec![int(1), int(2)];
        let q = rat(1, 2) + rat(4, 3);
        assert_eq!(wick(&h, &[l.clone(), l.clone()]).unwrap(), q.clone());
        assert_eq!(wick(&h, &vec![l.clone(); 4]).unwrap(), int(3) * &q * &q);
        assert_eq!(wick(&h, &vec![l.clone(); 3]).unwrap(), int(0));
        assert_eq!(wick(&h, &[]).unwrap(), int(1));
    }

    #[test]
    fn smallest_model_pairings() {
        let (h, _) = model_forms(1, 2).unwrap();
        let space = StateSpace::new(1, 2).unwrap();
        let a1 = space.entry_form(0, 0, 0);
        let a2 = space.entry_form(1, 0, 0);
        let m = wick_complex(&h, &[a1.clone(), a1.clone(), a2.clone(), a2.clone()]).unwrap();
        assert_eq!(m, Cx::new(int(2), int(0)));
        assert_eq!(
            wick_complex(&h, &[a1.clone(), a2.clone()]).unwrap(),
            Cx::new(int(1), int(0))
        );
        assert!(wick_complex(&h, &[a1.clone(), a1]).unwrap().is_zero());
    }

    #[test]
    fn shift_identity() {
        let (h, _) = model_forms(1, 2).unwrap();
        assert!(gaussian_shift_check(&h, &[int(1), int(1)], 4).unwrap());
        assert!(gaussian_shift_check(&h, &[int(0), int(0)], 3).unwrap());
        let (h, _) = model_forms(2, 3).unwrap();
        let lambda: Vec<_> = (0..h.matrix.len()).map(|i| rat(i as i64 - 3, 2)).collect();
        assert!(gaussian_shift_check(&h, &lambda, 3).unwrap());
    }
}
