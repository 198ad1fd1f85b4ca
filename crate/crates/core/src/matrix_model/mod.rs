mod generating;
mod state_space;
mod wick;

pub use generating::{
    big_f_series, f_closed, f_series, wick_f_check, wick_f_expansion, FTerm, WickFCheck,
};
pub use state_space::{
    color_matrices, form_product, is_positive_definite, model_forms, Cx, QuadForm, StateSpace,
};
pub use wick::{
    covariance, gaussian_shift_check, gaussian_shift_terms, pairing_sum, wick, wick_complex,
    ShiftTerm,
};
