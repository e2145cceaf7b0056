//! Exact finite-dimensional linear algebra over tagged bases.

mod elimination;
mod map;
mod vector;

pub use elimination::{bareiss_rank, solve_affine, span_rank, AffineSolution, Echelon};
pub use map::{tensor_map, LinearMap};
pub use vector::{extend_bilinear, Vector};
