//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use qdouble::perm::interval;
use qdouble::{double, DoubledHopf, FiniteGroup, GroupAlgebra, GroupAutomorphism};

/// Doubling of `ℂ[Sₙ]` (ground `1..n`) by the flip.
pub fn doubled_symmetric(n: i64) -> DoubledHopf {
    let g = FiniteGroup::symmetric(interval(1, n)).expect("degree within guard");
    let theta = GroupAutomorphism::flip(&g).expect("degree at least 2");
    double(&GroupAlgebra::new(Arc::new(g)), &theta).expect("flip is an involution")
}

/// Doubling of `ℂ[ℤ/l]` by inversion.
pub fn doubled_cyclic(l: u64) -> DoubledHopf {
    let g = FiniteGroup::cyclic(l).expect("positive modulus");
    let theta = GroupAutomorphism::inverse(&g).expect("cyclic groups are abelian");
    double(&GroupAlgebra::new(Arc::new(g)), &theta).expect("inversion is an involution")
}
