pub mod algebra;
pub mod circles;
pub mod closed_forms;
pub mod error;
pub mod matrix_model;
pub mod monodromy;
pub mod oracle;
pub mod verify;
