//! Exact computations with group Hopf *-algebras, their doublings by
//! order-two automorphisms, coactions on filtered group algebras, and the
//! finite stages of p-adic and symmetric-group towers.

pub mod doubling;
pub mod error;
pub mod filtration;
pub mod hopf;
pub mod linalg;
pub mod literal;
pub mod perm;
pub mod report;
pub mod scalar;
pub mod tower;

pub use doubling::{double, DoubledHopf, Tagged};
pub use hopf::{GroupAlgebra, HopfAlgebra};
pub use report::{CheckResult, Report, Status};
pub use error::{Error, ParseError, Result};
pub use linalg::{LinearMap, Vector};
pub use literal::{format_element, parse_element, LiteralLabel};
pub use perm::{Elem, FiniteGroup, GroupAutomorphism, Permutation};
pub use scalar::{Rational, Scalar};
