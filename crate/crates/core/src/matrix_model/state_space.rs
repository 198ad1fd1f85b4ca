//! The space of color tuples `A_i = X + Y_i` with `X` hermitian, `Y_i`
//! skew-hermitian and `sum Y_i = 0`, in real coordinates.

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::matrix::{bilinear, inverse, leading_minors_positive, mat_mul, RatMatrix};
use crate::error::{Error, Result};

pub type Cx = Complex<BigRational>;

fn cx(re: BigRational, im: BigRational) -> Cx {
    Complex::new(re, im)
}

/// Coordinates: the `N^2` real coordinates of `X` (diagonal, then real and
/// imaginary parts above the diagonal), then the same for each hermitian
/// `Z_i` with `Y_i = i Z_i`, `i < k`. `Y_k = -sum Y_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSpace {
    pub n: usize,
    pub k: usize,
}

impl StateSpace {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidInput("need N >= 1 and k >= 1".into()));
        }
        Ok(StateSpace { n, k })
    }

    pub fn dimension(&self) -> usize {
        self.k * self.n * self.n
    }

    /// Coefficients of a hermitian matrix entry `(a, b)` over its block.
    fn hermitian_entry(&self, a: usize, b: usize, offset: usize, out: &mut [Cx]) {
        let n = self.n;
        if a == b {
            out[offset + a].re += BigRational::one();
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        // Pairs above the diagonal, row-major.
        let pair = (0..lo).map(|r| n - 1 - r).sum::<usize>() + (hi - lo - 1);
        let re = offset + n + 2 * pair;
        out[re].re += BigRational::one();
        let sign = if a < b {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        out[re + 1].im += sign;
    }

    /// Entry `(a, b)` of `A_color` (colors from 0) as a complex linear form.
    pub fn entry_form(&self, color: usize, a: usize, b: usize) -> Vec<Cx> {
        let block = self.n * self.n;
        let mut out = vec![cx(BigRational::zero(), BigRational::zero()); self.dimension()];
        self.hermitian_entry(a, b, 0, &mut out);
        let mut z = vec![cx(BigRational::zero(), BigRational::zero()); self.dimension()];
        if color + 1 < self.k {
            self.hermitian_entry(a, b, block * (color + 1), &mut z);
        } else {
            for i in 0..self.k - 1 {
                let mut zi = vec![cx(BigRational::zero(), BigRational::zero()); self.dimension()];
                self.hermitian_entry(a, b, block * (i + 1), &mut zi);
                for (acc, x) in z.iter_mut().zip(zi) {
                    *acc -= x;
                }
            }
        }
        // Y = i Z.
        let i = cx(BigRational::zero(), BigRational::one());
        for (o, zc) in out.iter_mut().zip(z) {
            *o += zc * &i;
        }
        out
    }

    /// Matrix of `A -> sum_ij s_ij Tr(A_i A_j)` in coordinates.
    pub fn form_of(&self, s: &RatMatrix) -> QuadForm {
        let dim = self.dimension();
        let n = self.n;
        let forms: Vec<Vec<Vec<Vec<Cx>>>> = (0..self.k)
            .map(|i| {
                (0..n)
                    .map(|a| (0..n).map(|b| self.entry_form(i, a, b)).collect())
                    .collect()
            })
            .collect();
        let mut m = vec![vec![cx(BigRational::zero(), BigRational::zero()); dim]; dim];
        for i in 0..self.k {
            for j in 0..self.k {
                if s[i][j].is_zero() {
                    continue;
                }
                for a in 0..n {
                    for b in 0..n {
                        let (u, v) = (&forms[i][a][b], &forms[j][b][a]);
                        for c in (0..dim).filter(|&c| !u[c].is_zero()) {
                            for d in (0..dim).filter(|&d| !v[d].is_zero()) {
                                m[c][d] += &u[c] * &v[d] * cx(s[i][j].clone(), BigRational::zero());
                            }
                        }
                    }
                }
            }
        }
        let half = BigRational::new(1.into(), 2.into());
        let matrix = (0..dim)
            .map(|c| {
                (0..dim)
                    .map(|d| {
                        let sym = (&m[c][d] + &m[d][c]) * cx(half.clone(), BigRational::zero());
                        assert!(
                            sym.im.is_zero(),
                            "trace form must be real on the state space"
                        );
                        sym.re
                    })
                    .collect()
            })
            .collect();
        QuadForm { matrix }
    }

    /// `sum_i Tr(A_i B_i)`, identifying the space with its dual.
    pub fn trace_pairing(&self) -> QuadForm {
        self.form_of(&scaled_identity(self.k, BigRational::one()))
    }
}

fn scaled_identity(k: usize, x: BigRational) -> RatMatrix {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        x.clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// A symmetric form `v -> v^T M v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadForm {
    pub matrix: RatMatrix,
}

impl QuadForm {
    pub fn evaluate(&self, v: &[BigRational]) -> BigRational {
        bilinear(&self.matrix, v, v)
    }

    pub fn scale(&self, x: &BigRational) -> QuadForm {
        QuadForm {
            matrix: self
                .matrix
                .iter()
                .map(|r| r.iter().map(|e| e * x).collect())
                .collect(),
        }
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        inverse(&self.matrix)
    }
}

pub fn is_positive_definite(q: &QuadForm) -> bool {
    leading_minors_positive(&q.matrix)
}

/// The color matrices of the model: `(J - (k-1) I)/(k-1)` and `J - I`.
pub fn color_matrices(k: usize) -> (RatMatrix, RatMatrix) {
    let km1 = BigRational::from_integer((k as i64 - 1).into());
    let h = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { BigRational::zero() - &km1 + BigRational::one() } else { BigRational::one() } / &km1)
                .collect()
        })
        .collect();
    let h_inv = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        BigRational::zero()
                    } else {
                        BigRational::one()
                    }
                })
                .collect()
        })
        .collect();
    (h, h_inv)
}

/// Coordinate forms of `H` and `H^{-1}`.
pub fn model_forms(n: usize, k: usize) -> Result<(QuadForm, QuadForm)> {
    if k < 2 {
        return Err(Error::InvalidInput("the model needs k >= 2".into()));
    }
    let space = StateSpace::new(n, k)?;
    let (h, h_inv) = color_matrices(k);
    Ok((space.form_of(&h), space.form_of(&h_inv)))
}

/// `G^{-1} M_H G^{-1} M_{H^{-1}}`, which should be the identity.
pub fn form_product(n: usize, k: usize) -> Result<RatMatrix> {
    let space = StateSpace::new(n, k)?;
    let g_inv = space.trace_pairing().inverse()?;
    let (h, h_inv) = model_forms(n, k)?;
    Ok(mat_mul(
        &mat_mul(&g_inv, &h.matrix),
        &mat_mul(&g_inv, &h_inv.matrix),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::identity;
    use crate::algebra::rational::int;

    #[test]
    fn smallest_model() {
        let (h, h_inv) = model_forms(1, 2).unwrap();
        let diag2 = vec![vec![int(2), int(0)], vec![int(0), int(2)]];
        assert_eq!(h_inv.matrix, diag2);
        assert_eq!(h.matrix, diag2);
        assert_eq!(StateSpace::new(1, 3).unwrap().dimension(), 3);
        assert!(model_forms(2, 1).is_err());
    }

    #[test]
    fn mutually_inverse_and_positive() {
        for n in 1..=2 {
            for k in 2..=4 {
                assert_eq!(
                    form_product(n, k).unwrap(),
                    identity(k * n * n),
                    "N={n} k={k}"
                );
                let (h, h_inv) = model_forms(n, k).unwrap();
                assert!(is_positive_definite(&h) && is_positive_definite(&h_inv));
            }
        }
    }

    #[test]
    fn entries_realize_the_space() {
        // Sum over colors of A_i - A_i^dagger vanishes and A_i - Y_i is X.
        let space = StateSpace::new(2, 3).unwrap();
        let dim = space.dimension();
        for a in 0..2 {
            for b in 0..2 {
                let mut skew_sum = vec![Cx::zero(); dim];
                for i in 0..3 {
                    let e = space.entry_form(i, a, b);
                    let t = space.entry_form(i, b, a);
                    for c in 0..dim {
                        skew_sum[c] += &e[c] - t[c].conj();
                    }
                }
                assert!(skew_sum.iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn indefinite_is_rejected() {
        let q = QuadForm {
            matrix: vec![vec![int(1), int(0)], vec![int(0), int(-1)]],
        };
        assert!(!is_positive_definite(&q));
    }
}
