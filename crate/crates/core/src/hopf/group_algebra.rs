use std::sync::Arc;

use super::{Functional, HopfAlgebra};
use crate::error::Result;
use crate::linalg::Vector;
use crate::literal::LiteralLabel;
use crate::perm::{Elem, FiniteGroup};
use crate::scalar::Scalar;

/// ℂ[Γ] for a finite group: `gh` product, `Δg = g⊗g`, `ε(g) = 1`,
/// `S(g) = g* = g⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebra {
    group: Arc<FiniteGroup>,
}

impl GroupAlgebra {
    pub fn new(group: Arc<FiniteGroup>) -> Self {
        GroupAlgebra { group }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Basis vector of a group element.
    pub fn elem(&self, g: Elem) -> Vector<Elem> {
        Vector::basis(g)
    }

    /// The canonical trace `τ` as a functional: 1 on `e`, 0 elsewhere.
    pub fn trace(&self) -> Functional<Elem> {
        Functional::new([(Elem::IDENTITY, Scalar::ONE)].into_iter().collect(), true)
    }
}

impl HopfAlgebra for GroupAlgebra {
    type Label = Elem;

    fn dim(&self) -> usize {
        self.group.order()
    }

    fn basis(&self) -> Vec<Elem> {
        self.group.elements().collect()
    }

    fn unit(&self) -> Vector<Elem> {
        Vector::basis(Elem::IDENTITY)
    }

    fn mul_basis(&self, a: &Elem, b: &Elem) -> Vector<Elem> {
        Vector::basis(self.group.mul(*a, *b))
    }

    fn comul_basis(&self, a: &Elem) -> Vector<(Elem, Elem)> {
        Vector::basis((*a, *a))
    }

    fn counit_basis(&self, _a: &Elem) -> Scalar {
        Scalar::ONE
    }

    fn antipode_basis(&self, a: &Elem) -> Vector<Elem> {
        Vector::basis(self.group.inv(*a))
    }

    fn star_basis(&self, a: &Elem) -> Vector<Elem> {
        Vector::basis(self.group.inv(*a))
    }

    fn label_literal(&self, a: &Elem) -> LiteralLabel {
        self.group.literal_label(*a)
    }

    fn resolve_literal(&self, l: &LiteralLabel) -> Result<Elem> {
        self.group.resolve(l)
    }
}

/// `τ(x)`: the coefficient of the identity.
pub fn canonical_trace(x: &Vector<Elem>) -> Scalar {
    x.coeff(&Elem::IDENTITY)
}

/// Class sums, one per conjugacy class, each checked to be central.
pub fn center_basis(a: &GroupAlgebra) -> Vec<Vector<Elem>> {
    let g = a.group();
    let sums: Vec<Vector<Elem>> = g
        .conjugacy_classes()
        .into_iter()
        .map(|cls| Vector::from_terms(cls.into_iter().map(|e| (e, Scalar::ONE))))
        .collect();
    for z in &sums {
        for h in g.elements() {
            let hv = Vector::basis(h);
            assert_eq!(a.mul(z, &hv), a.mul(&hv, z), "class sum must be central");
        }
    }
    sums
}
