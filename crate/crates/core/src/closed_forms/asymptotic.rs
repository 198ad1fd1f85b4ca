//! Polygon counts as polynomials in the side counts, and their top-degree
//! comparison with circle volumes.

use num_rational::BigRational;
use num_traits::Zero;

use super::circles::stratum_dimension;
use crate::algebra::{grid_points, interpolate, Polynomial};
use crate::circles::CircleSet;
use crate::error::{Error, Result};
use crate::monodromy::{passport_aut, Partition, Passport};
use crate::oracle::topology::{total_volume, TypeQuery};
use crate::oracle::weighted_constellation_count;

pub struct FitP {
    pub polynomial: Polynomial,
    /// The claimed degree `4g - 4 + m + 2p`.
    pub degree: usize,
    pub samples: Vec<(Vec<i64>, BigRational)>,
}

/// Side-count variables `n_<color>_<j>` for `shape[i]` polygons of color `i + 1`.
pub fn size_variables(shape: &[usize]) -> Vec<String> {
    shape
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| (1..=m).map(move |j| format!("n_{}_{}", i + 1, j)))
        .collect()
}

/// Number of constellations with labeled polygons, `shape[i]` polygons of
/// color `i + 1`, sampled over a grid and interpolated at the claimed degree.
/// The default grid is `2..=d+3` per variable, one point more than needed so
/// that a wrong degree shows up as inconsistent samples.
pub fn fit_p(shape: &[usize], genus: usize, faces: usize, grid: Option<&[i64]>) -> Result<FitP> {
    let m: usize = shape.iter().sum();
    if shape.is_empty() || shape.contains(&0) {
        return Err(Error::InvalidInput("every color needs a polygon".into()));
    }
    let d = stratum_dimension(genus, m, faces);
    if d < 0 {
        return Err(Error::InvalidInput(format!("dimension {d} is negative")));
    }
    let d = d as usize;
    let default: Vec<i64> = (2..=d as i64 + 3).collect();
    let values = grid.unwrap_or(&default);
    let vars = size_variables(shape);
    let mut samples = Vec::new();
    for point in grid_points(m, values) {
        let mut colors = Vec::new();
        let mut offset = 0;
        for &mi in shape {
            colors.push(Partition::new(
                point[offset..offset + mi]
                    .iter()
                    .map(|&x| x as usize)
                    .collect(),
            ));
            offset += mi;
        }
        let x = Passport::new(colors)?;
        let value = match weighted_constellation_count(&x, genus, faces) {
            Ok(w) => {
                let labelings: num_bigint::BigInt = x.colors().iter().map(passport_aut).product();
                w * BigRational::from_integer(labelings)
            }
            Err(Error::NoSuchConstellation(_)) => BigRational::zero(),
            Err(e) => return Err(e),
        };
        samples.push((point, value));
    }
    let polynomial = interpolate(&vars, &samples, d)?;
    Ok(FitP {
        polynomial,
        degree: d,
        samples,
    })
}

/// Volume polynomial over circles named `l_<color>_<j>`.
pub fn volume_q(shape: &[usize], genus: usize, faces: usize) -> Result<Polynomial> {
    let set = CircleSet::symbolic(shape)?;
    let query = TypeQuery {
        genus: Some(genus),
        faces: Some(faces),
        connected: true,
        ..Default::default()
    };
    total_volume(&set, &query)
}

/// The top homogeneous part of `p` with `n_*` renamed `l_*`.
pub fn top_part_as_lengths(p: &Polynomial) -> Result<Polynomial> {
    Ok(p.top_homogeneous_part()?
        .rename(|v| match v.strip_prefix("n_") {
            Some(rest) => format!("l_{rest}"),
            None => v.to_string(),
        }))
}

pub fn asymptotic_check(p: &Polynomial, q: &Polynomial) -> Result<bool> {
    Ok(&top_part_as_lengths(p)? == q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_colors_one_face() {
        let fit = fit_p(&[1, 1], 0, 1, None).unwrap();
        assert_eq!(fit.polynomial, Polynomial::one());
        let q = volume_q(&[1, 1], 0, 1).unwrap();
        assert_eq!(q, Polynomial::one());
        assert!(asymptotic_check(&fit.polynomial, &q).unwrap());
    }

    #[test]
    fn two_colors_two_faces() {
        let fit = fit_p(&[1, 1], 0, 2, None).unwrap();
        assert_eq!(fit.polynomial.total_degree(), Some(2));
        let q = volume_q(&[1, 1], 0, 2).unwrap();
        assert!(
            asymptotic_check(&fit.polynomial, &q).unwrap(),
            "{} vs {q}",
            fit.polynomial
        );
    }
}
