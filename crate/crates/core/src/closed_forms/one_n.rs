//! Three forms of the `(1,n)`-constellation count.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::rational::{binomial, factorial, rational_pow};
use crate::error::{Error, Result};

/// `(k-1) n^(k-2)`.
pub fn constellations_1n_closed(k: usize, n: usize) -> Result<BigInt> {
    if k < 2 || n < 1 {
        return Err(Error::InvalidInput("need k >= 2 and n >= 1".into()));
    }
    Ok(BigInt::from(k - 1) * num_traits::pow(BigInt::from(n), k - 2))
}

fn r(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// `x * y^e` where `x = y` is forced whenever `e = -1`; the product is then 1
/// even at `y = 0`.
fn times_power(x: i64, y: i64, e: i64) -> Result<BigRational> {
    if e == -1 {
        debug_assert_eq!(x, y);
        return Ok(r(1));
    }
    Ok(r(x) * rational_pow(&r(y), e)?)
}

/// The double sum over small-cycle polygons (`p`) and polygons touching the
/// small cycle (`q`), summed over every choice of those polygons.
pub fn constellations_1n_sum(sizes: &[usize]) -> Result<BigRational> {
    let k = sizes.len();
    let total: usize = sizes.iter().sum();
    if k < 2 || sizes.iter().any(|&s| s < 2) || total < k + 2 {
        return Err(Error::InvalidInput(
            "need k >= 2 sizes >= 2 with n >= 1".into(),
        ));
    }
    let n = (total - k - 1) as i64;
    let mut sum = BigRational::zero();
    for subset in 1u32..(1 << k) {
        let chosen = subset.count_ones() as i64;
        let m: i64 = (0..k)
            .filter(|i| subset >> i & 1 == 1)
            .map(|i| sizes[i] as i64)
            .sum();
        for p in 2..=chosen {
            let q = chosen - p;
            let e = k as i64 - p - q - 1;
            let weight = BigRational::from_integer(binomial(chosen as u64, p as u64))
                * r((p - 1).pow(q as u32));
            sum += weight * times_power(m - 2 * p - q, n + 1 - p, e)?;
        }
    }
    Ok(sum)
}

/// The single sum after averaging over choices of polygons.
pub fn constellations_1n_intermediate(k: usize, n: usize) -> Result<BigRational> {
    if k < 2 || n < 1 {
        return Err(Error::InvalidInput("need k >= 2 and n >= 1".into()));
    }
    let (ki, ni) = (k as i64, n as i64);
    let mut sum = BigRational::zero();
    for p in 2..=ki {
        for q in 0..=ki - p {
            let multinomial = BigRational::new(
                factorial(k as u64),
                factorial(p as u64) * factorial(q as u64) * factorial((ki - p - q) as u64),
            );
            let bracket = ni * p + ni * q + p + q - ki * p;
            let e = ki - p - q - 1;
            // At p + q = k the bracket is k (n + 1 - p).
            let tail = if e == -1 {
                r(ki)
            } else {
                r(bracket) * rational_pow(&r(ni - p + 1), e)?
            };
            sum += multinomial * r((p - 1).pow(q as u32)) * tail;
        }
    }
    Ok(sum / r(ki))
}

/// `(1/(nk)) sum_p C(k,p) [np + p - k] n^(k-p)`.
pub fn constellations_1n_reduced(k: usize, n: usize) -> Result<BigRational> {
    if k < 2 || n < 1 {
        return Err(Error::InvalidInput("need k >= 2 and n >= 1".into()));
    }
    let (ki, ni) = (k as i64, n as i64);
    let mut sum = BigRational::zero();
    for p in 2..=ki {
        let c: BigInt = binomial(k as u64, p as u64);
        sum += BigRational::from_integer(c) * r(ni * p + p - ki) * rational_pow(&r(ni), ki - p)?;
    }
    Ok(sum / r(ni * ki))
}
