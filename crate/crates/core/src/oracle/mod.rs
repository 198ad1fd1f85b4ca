//! Brute-force enumeration engines, independent of the closed forms.

pub mod factorization;
pub mod merging;
pub mod plane_cactus;

pub use factorization::{weighted_1n_count, weighted_cactus_count, weighted_constellation_count};
pub use merging::{decode_cactus, encode_cactus, MarkedPolygon};
pub use plane_cactus::{enumerate_plane_cacti, PlaneCactus};
pub mod topology;

pub use topology::{
    enumerate_topological_types, face_trace, total_volume, type_volume, TopologicalType, TypeQuery,
};
