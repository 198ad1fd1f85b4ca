//! Permutations, partitions, passports and monodromy tuples.

pub mod partition;
pub mod permutation;
pub mod tuple;

pub use partition::{constellation_degree, passport_aut, Partition, Passport};
pub use permutation::{iterate_cycle_type, CycleClass, Permutation, MAX_POINTS};
pub use tuple::MonodromyTuple;
