use num_rational::BigRational;
use num_traits::Zero;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// `sum_{m>=0} q^m / m!` truncated to grade `max_degree`.
pub fn truncated_exp(q: &Polynomial, max_degree: i64) -> Result<Polynomial> {
    if !q.constant_term().is_zero() {
        return Err(Error::ConstantTerm);
    }
    let mut total = Polynomial::one().truncate(max_degree);
    let mut power = Polynomial::one();
    let mut m: i64 = 1;
    loop {
        power = power
            .mul_truncated(q, max_degree)
            .scale(&BigRational::new(1.into(), m.into()));
        if power.is_zero() {
            break;
        }
        total = &total + &power;
        m += 1;
    }
    Ok(total)
}
