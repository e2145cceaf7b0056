//! Finite stages of the p-adic and symmetric-group towers, their
//! connecting morphisms, and the obstruction checks that separate the odd
//! and even symmetric limits.

mod finsym;
mod padic;
mod partitions;
mod stage;
mod symmetric;

pub use finsym::finsym_check;
pub use padic::{equal_length_check, padic_map, padic_tower, PadicTower, PADIC_MAX_ORDER, PADIC_PRIMES};
pub use partitions::{partition_tower_check, reflection_obstruction, ObstructionData, PARTITION_MAX_TRUNCATION};
pub use stage::{equivariance_check, group_map_check, triple_compatibility, ConnectingPair, TowerStage};
pub use symmetric::{
    connecting_step_check, gamma_embedding_check, inclusion_map, length_one_check, nonexistence_scan,
    symmetric_tower, tower_ground, tower_group, NonexistenceScan, SymmetricTower, SYMMETRIC_TOWER_MAX_N,
};
