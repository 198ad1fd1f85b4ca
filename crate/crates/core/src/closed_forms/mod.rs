//! Closed-form counts and volumes.

pub mod asymptotic;
pub mod cacti;
pub mod circles;
pub mod one_n;

pub use asymptotic::{asymptotic_check, fit_p, volume_q, FitP};
pub use cacti::{cacti_distinct, cacti_distinct_symbolic, cacti_passport, cayley, Variant};
pub use circles::{circle_cacti_distinct, circle_cacti_multi, stratum_dimension};
pub use one_n::{
    constellations_1n_closed, constellations_1n_intermediate, constellations_1n_reduced,
    constellations_1n_sum,
};
