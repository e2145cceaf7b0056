//! Finite cyclic and symmetric groups, word lengths and automorphisms.

mod automorphism;
mod group;
mod length;
mod permutation;

pub use automorphism::{
    automorphism_group, conjugate_in_aut, even_reflection, even_relabel, even_relabel_inverse,
    homomorphism_from_generators, kappa_even, reflection, reversal, Center, GroupAutomorphism,
    MAX_AUT_SEARCH_ORDER,
};
pub use group::{Elem, FiniteGroup, GroupKind, MAX_SYMMETRIC_DEGREE};
pub use length::{bfs_lengths, word_length_bfs, GeneratingSet, LengthFunction, LengthKind};
pub use permutation::{interval, signed_ground, Parity, Permutation};
