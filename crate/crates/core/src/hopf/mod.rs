//! Finite-dimensional Hopf *-algebras given on a basis, the group algebra
//! ℂ[Γ], and exact verifiers for the Hopf axioms, group-likes and centres.

mod axioms;
mod group_algebra;
mod grouplike;

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

pub use axioms::{
    axiom_dimension_limit, verify_hopf_axioms, Axiom, ASSOCIATIVITY_EXHAUSTIVE_DIM, DEFAULT_MAX_DIM,
    HARD_MAX_DIM, MAX_DIM_ENV,
};
pub use group_algebra::{canonical_trace, center_basis, GroupAlgebra};
pub use grouplike::{grouplikes_support_le2, is_grouplike};

use crate::error::Result;
use crate::linalg::{extend_bilinear, Vector};
use crate::literal::{parse_element, LiteralLabel};
use crate::scalar::Scalar;

/// A Hopf *-algebra specified by its structure maps on basis labels. The
/// provided methods are the (conjugate-)linear extensions.
pub trait HopfAlgebra {
    type Label: Clone + Ord + Hash + Debug + Send + Sync;

    fn dim(&self) -> usize;
    fn basis(&self) -> Vec<Self::Label>;
    fn unit(&self) -> Vector<Self::Label>;
    fn mul_basis(&self, a: &Self::Label, b: &Self::Label) -> Vector<Self::Label>;
    fn comul_basis(&self, a: &Self::Label) -> Vector<(Self::Label, Self::Label)>;
    fn counit_basis(&self, a: &Self::Label) -> Scalar;
    fn antipode_basis(&self, a: &Self::Label) -> Vector<Self::Label>;
    /// `a*` for a basis label; the involution is extended conjugate-linearly.
    fn star_basis(&self, a: &Self::Label) -> Vector<Self::Label>;
    fn label_literal(&self, a: &Self::Label) -> LiteralLabel;
    fn resolve_literal(&self, l: &LiteralLabel) -> Result<Self::Label>;

    fn mul(&self, x: &Vector<Self::Label>, y: &Vector<Self::Label>) -> Vector<Self::Label> {
        extend_bilinear(x, y, |a, b| self.mul_basis(a, b))
    }

    fn comul(&self, x: &Vector<Self::Label>) -> Vector<(Self::Label, Self::Label)> {
        x.extend_linear(|a| self.comul_basis(a))
    }

    fn counit(&self, x: &Vector<Self::Label>) -> Scalar {
        let mut acc = Scalar::ZERO;
        for (a, c) in x.iter() {
            acc += &(c * &self.counit_basis(a));
        }
        acc
    }

    fn antipode(&self, x: &Vector<Self::Label>) -> Vector<Self::Label> {
        x.extend_linear(|a| self.antipode_basis(a))
    }

    fn star(&self, x: &Vector<Self::Label>) -> Vector<Self::Label> {
        x.conj().extend_linear(|a| self.star_basis(a))
    }

    /// Product in `A ⊗ A`: `(a⊗b)(c⊗d) = ac ⊗ bd`.
    fn tensor_mul(
        &self,
        x: &Vector<(Self::Label, Self::Label)>,
        y: &Vector<(Self::Label, Self::Label)>,
    ) -> Vector<(Self::Label, Self::Label)> {
        extend_bilinear(x, y, |(a, b), (c, d)| {
            self.mul_basis(a, c).tensor(&self.mul_basis(b, d))
        })
    }

    fn format(&self, x: &Vector<Self::Label>) -> String {
        x.display_with(|a| self.label_literal(a).to_string())
    }

    fn format_tensor(&self, x: &Vector<(Self::Label, Self::Label)>) -> String {
        x.display_with(|(a, b)| format!("{}⊗{}", self.label_literal(a), self.label_literal(b)))
    }

    fn parse(&self, text: &str) -> Result<Vector<Self::Label>> {
        let v = parse_element(text)?;
        let mut terms = Vec::with_capacity(v.support_len());
        for (l, c) in v.iter() {
            terms.push((self.resolve_literal(l)?, c.clone()));
        }
        Ok(Vector::from_terms(terms))
    }
}

/// A linear functional given by its values on basis labels (missing labels
/// evaluate to zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional<L: Ord> {
    values: BTreeMap<L, Scalar>,
    pub tracial: bool,
}

impl<L: Ord + Clone> Functional<L> {
    pub fn new(values: BTreeMap<L, Scalar>, tracial: bool) -> Self {
        let values = values.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Functional { values, tracial }
    }

    pub fn value(&self, a: &L) -> Scalar {
        self.values.get(a).cloned().unwrap_or(Scalar::ZERO)
    }

    pub fn apply(&self, x: &Vector<L>) -> Scalar {
        let mut acc = Scalar::ZERO;
        for (a, c) in x.iter() {
            if let Some(v) = self.values.get(a) {
                acc += &(c * v);
            }
        }
        acc
    }

    /// `(φ ⊗ id)` applied to a tensor.
    pub fn apply_left<M: Ord + Clone>(&self, x: &Vector<(L, M)>) -> Vector<M> {
        Vector::from_terms(
            x.iter()
                .map(|((a, b), c)| (b.clone(), c * &self.value(a))),
        )
    }

    /// `(id ⊗ φ)` applied to a tensor.
    pub fn apply_right<M: Ord + Clone>(&self, x: &Vector<(M, L)>) -> Vector<M> {
        Vector::from_terms(
            x.iter()
                .map(|((a, b), c)| (a.clone(), c * &self.value(b))),
        )
    }
}
