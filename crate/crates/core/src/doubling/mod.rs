//! The doubling Ã = A ⊕ A of a group Hopf *-algebra by an order-two
//! automorphism θ: componentwise product, twisted comultiplication
//! `Δ̃ξ(a) = (ξ⊗ξ + η⊗ηθ)Δ(a)`, `Δ̃η(a) = (ξ⊗η + η⊗ξθ)Δ(a)`.

mod binomial;
mod coaction;
mod extension;
mod iso;

use std::fmt;

pub use binomial::{grouplike_binomial, BinomialScan, CoefficientRow, MuSolutions};
pub use coaction::{apply_tensor_map, Coaction};
pub use extension::{
    check_equivariant_extension, check_functoriality, check_hopf_morphism,
    check_injectivity_surjectivity, check_intertwining, check_star_homomorphism, equivariance_witness,
    extend_map, extension_report,
};
pub use iso::{iso_from_conjugate, verify_isomorphism};

use crate::error::{Error, Result};
use crate::hopf::{verify_hopf_axioms, Functional, GroupAlgebra, HopfAlgebra};
use crate::linalg::{LinearMap, Vector};
use crate::literal::LiteralLabel;
use crate::perm::{Elem, FiniteGroup, GroupAutomorphism};
use crate::report::{CheckResult, Report};
use crate::scalar::Scalar;

/// Basis label of the doubling: `ξ(g)` or `η(g)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tagged {
    Xi(Elem),
    Eta(Elem),
}

impl Tagged {
    pub fn elem(self) -> Elem {
        match self {
            Tagged::Xi(g) | Tagged::Eta(g) => g,
        }
    }
}

impl fmt::Debug for Tagged {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tagged::Xi(g) => write!(f, "ξ{g:?}"),
            Tagged::Eta(g) => write!(f, "η{g:?}"),
        }
    }
}

/// Ã for `A = ℂ[Γ]` and an automorphism θ with θ² = id.
#[derive(Clone, Debug)]
pub struct DoubledHopf {
    base: GroupAlgebra,
    theta: GroupAutomorphism,
}

/// Builds the doubling; rejects θ with θ² ≠ id.
pub fn double(base: &GroupAlgebra, theta: &GroupAutomorphism) -> Result<DoubledHopf> {
    let g = base.group();
    if theta.images().len() != g.order() {
        return Err(Error::InvalidArgument(format!(
            "automorphism defined on {} elements, group has {}",
            theta.images().len(),
            g.order()
        )));
    }
    if let Some(x) = g.elements().find(|&x| theta.apply(theta.apply(x)) != x) {
        return Err(Error::NotInvolution {
            witness: g.literal(x),
        });
    }
    Ok(DoubledHopf {
        base: base.clone(),
        theta: theta.clone(),
    })
}

impl DoubledHopf {
    pub fn base(&self) -> &GroupAlgebra {
        &self.base
    }

    pub fn group(&self) -> &FiniteGroup {
        self.base.group()
    }

    pub fn theta(&self) -> &GroupAutomorphism {
        &self.theta
    }

    pub fn xi(&self, a: &Vector<Elem>) -> Vector<Tagged> {
        a.map_labels(|&g| Tagged::Xi(g))
    }

    pub fn eta(&self, a: &Vector<Elem>) -> Vector<Tagged> {
        a.map_labels(|&g| Tagged::Eta(g))
    }

    /// θ extended linearly to A.
    pub fn theta_vec(&self, a: &Vector<Elem>) -> Vector<Elem> {
        a.map_labels(|&g| self.theta.apply(g))
    }

    pub fn xi_map(&self) -> LinearMap<Elem, Tagged> {
        LinearMap::from_fn(self.base.basis().iter(), |&g| Vector::basis(Tagged::Xi(g)))
    }

    pub fn eta_map(&self) -> LinearMap<Elem, Tagged> {
        LinearMap::from_fn(self.base.basis().iter(), |&g| Vector::basis(Tagged::Eta(g)))
    }

    /// Central projection `ξ(1)`.
    pub fn p1(&self) -> Vector<Tagged> {
        Vector::basis(Tagged::Xi(Elem::IDENTITY))
    }

    /// Central projection `η(1)`.
    pub fn p2(&self) -> Vector<Tagged> {
        Vector::basis(Tagged::Eta(Elem::IDENTITY))
    }

    /// `½(τ∘pr₁ + τ∘pr₂)`.
    pub fn haar(&self) -> Functional<Tagged> {
        let half = Scalar::ratio(1, 2);
        Functional::new(
            [
                (Tagged::Xi(Elem::IDENTITY), half.clone()),
                (Tagged::Eta(Elem::IDENTITY), half),
            ]
            .into_iter()
            .collect(),
            true,
        )
    }

    /// `α(g) = g⊗ξ(g) + θ(g)⊗η(θ(g))`, a coaction of Ã on A.
    pub fn coaction(&self) -> Coaction<Elem, Tagged> {
        let map = LinearMap::from_fn(self.base.basis().iter(), |&g| {
            let tg = self.theta.apply(g);
            Vector::from_terms([
                ((g, Tagged::Xi(g)), Scalar::ONE),
                ((tg, Tagged::Eta(tg)), Scalar::ONE),
            ])
        });
        Coaction::new(map)
    }

    /// `Ξ(a) = ξ(a) + η(θ(a))`.
    pub fn embedding_xi(&self) -> LinearMap<Elem, Tagged> {
        LinearMap::from_fn(self.base.basis().iter(), |&g| {
            Vector::from_terms([
                (Tagged::Xi(g), Scalar::ONE),
                (Tagged::Eta(self.theta.apply(g)), Scalar::ONE),
            ])
        })
    }

    /// Left and right invariance of the Haar functional on every basis
    /// element, plus normalisation `h(1) = 1`.
    pub fn check_haar(&self) -> CheckResult {
        let name = "haar two-sided invariance";
        let h = self.haar();
        let one = self.unit();
        if !h.apply(&one).is_one() {
            return CheckResult::fail(name, "h(1) ≠ 1");
        }
        for x in self.basis() {
            let d = self.comul_basis(&x);
            let hx = h.value(&x);
            let expected = one.scale(&hx);
            if h.apply_left(&d) != expected {
                return CheckResult::fail(name, format!("left invariance at {}", self.label_literal(&x)));
            }
            if h.apply_right(&d) != expected {
                return CheckResult::fail(name, format!("right invariance at {}", self.label_literal(&x)));
            }
        }
        CheckResult::pass(name)
    }

    /// `p₁, p₂` are central self-adjoint idempotents summing to 1 with
    /// `Δ̃p₁ = p₁⊗p₁ + p₂⊗p₂` and `Δ̃p₂ = p₁⊗p₂ + p₂⊗p₁`.
    pub fn check_central_projections(&self) -> CheckResult {
        let name = "central projections";
        let (p1, p2) = (self.p1(), self.p2());
        if &p1 + &p2 != self.unit() {
            return CheckResult::fail(name, "p1 + p2 ≠ 1");
        }
        for (label, p) in [("p1", &p1), ("p2", &p2)] {
            if self.mul(p, p) != *p || self.star(p) != *p {
                return CheckResult::fail(name, format!("{label} is not a self-adjoint projection"));
            }
            for x in self.basis() {
                let xv = Vector::basis(x);
                if self.mul(p, &xv) != self.mul(&xv, p) {
                    return CheckResult::fail(
                        name,
                        format!("{label} does not commute with {}", self.label_literal(&x)),
                    );
                }
            }
        }
        let d1 = &p1.tensor(&p1) + &p2.tensor(&p2);
        let d2 = &p1.tensor(&p2) + &p2.tensor(&p1);
        let got1 = self.comul(&p1);
        if got1 != d1 {
            return CheckResult::fail(name, format!("Δ(p1) = {}", self.format_tensor(&got1)));
        }
        let got2 = self.comul(&p2);
        if got2 != d2 {
            return CheckResult::fail(name, format!("Δ(p2) = {}", self.format_tensor(&got2)));
        }
        CheckResult::pass(name)
    }

    /// Ξ is an injective unital *-homomorphism with `Δ̃∘Ξ = (Ξ⊗id)∘α`.
    pub fn check_embedding(&self) -> Report {
        let emb = self.embedding_xi();
        let alpha = self.coaction();
        let mut r = Report::new();
        r.push(CheckResult::from_witness(
            "embedding injective",
            (!emb.is_injective()).then(|| format!("rank {} < {}", emb.rank(), emb.domain_dim())),
        ));
        r.push(check_star_homomorphism(&self.base, self, &emb).with_note("embedding"));
        let mut witness = None;
        for g in self.base.basis() {
            let lhs = self.comul(emb.image(&g));
            let rhs = apply_tensor_map(alpha.image(&g), |a| emb.image(a).clone(), |q| Vector::basis(*q));
            if lhs != rhs {
                witness = Some(self.base.group().literal(g));
                break;
            }
        }
        r.push(CheckResult::from_witness("embedding intertwines coaction", witness));
        r
    }

    /// Hopf axioms, Haar invariance, central projections, coaction checks
    /// and the embedding identities.
    pub fn verify(&self) -> Report {
        let mut r = verify_hopf_axioms(self);
        r.push(self.check_haar());
        r.push(self.check_central_projections());
        r.extend(self.coaction().verify(&self.base, self).entries);
        r.extend(self.check_embedding().entries);
        r
    }

    /// θ differs from the identity somewhere on Γ.
    pub fn theta_nontrivial(&self) -> bool {
        !self.theta.is_identity()
    }

    /// θ moves at least one standard generator.
    pub fn theta_moves_generator(&self) -> bool {
        self.theta.moves_any(&self.group().standard_generators())
    }
}

impl HopfAlgebra for DoubledHopf {
    type Label = Tagged;

    fn dim(&self) -> usize {
        2 * self.base.dim()
    }

    fn basis(&self) -> Vec<Tagged> {
        let b = self.base.basis();
        b.iter()
            .map(|&g| Tagged::Xi(g))
            .chain(b.iter().map(|&g| Tagged::Eta(g)))
            .collect()
    }

    fn unit(&self) -> Vector<Tagged> {
        &self.p1() + &self.p2()
    }

    fn mul_basis(&self, a: &Tagged, b: &Tagged) -> Vector<Tagged> {
        match (a, b) {
            (Tagged::Xi(x), Tagged::Xi(y)) => self.xi(&self.base.mul_basis(x, y)),
            (Tagged::Eta(x), Tagged::Eta(y)) => self.eta(&self.base.mul_basis(x, y)),
            _ => Vector::zero(),
        }
    }

    fn comul_basis(&self, a: &Tagged) -> Vector<(Tagged, Tagged)> {
        let (g, first_xi) = match *a {
            Tagged::Xi(g) => (g, true),
            Tagged::Eta(g) => (g, false),
        };
        let d = self.base.comul_basis(&g);
        let mut terms = Vec::with_capacity(2 * d.support_len());
        for ((x, y), c) in d.iter() {
            let ty = self.theta.apply(*y);
            if first_xi {
                terms.push(((Tagged::Xi(*x), Tagged::Xi(*y)), c.clone()));
                terms.push(((Tagged::Eta(*x), Tagged::Eta(ty)), c.clone()));
            } else {
                terms.push(((Tagged::Xi(*x), Tagged::Eta(*y)), c.clone()));
                terms.push(((Tagged::Eta(*x), Tagged::Xi(ty)), c.clone()));
            }
        }
        Vector::from_terms(terms)
    }

    fn counit_basis(&self, a: &Tagged) -> Scalar {
        match a {
            Tagged::Xi(g) => self.base.counit_basis(g),
            Tagged::Eta(_) => Scalar::ZERO,
        }
    }

    fn antipode_basis(&self, a: &Tagged) -> Vector<Tagged> {
        match a {
            Tagged::Xi(g) => self.xi(&self.base.antipode_basis(g)),
            Tagged::Eta(g) => self.eta(&self.theta_vec(&self.base.antipode_basis(g))),
        }
    }

    fn star_basis(&self, a: &Tagged) -> Vector<Tagged> {
        match a {
            Tagged::Xi(g) => self.xi(&self.base.star_basis(g)),
            Tagged::Eta(g) => self.eta(&self.base.star_basis(g)),
        }
    }

    fn label_literal(&self, a: &Tagged) -> LiteralLabel {
        match a {
            Tagged::Xi(g) => LiteralLabel::Xi(Box::new(self.base.label_literal(g))),
            Tagged::Eta(g) => LiteralLabel::Eta(Box::new(self.base.label_literal(g))),
        }
    }

    fn resolve_literal(&self, l: &LiteralLabel) -> Result<Tagged> {
        match l {
            LiteralLabel::Xi(inner) => Ok(Tagged::Xi(self.base.resolve_literal(inner)?)),
            LiteralLabel::Eta(inner) => Ok(Tagged::Eta(self.base.resolve_literal(inner)?)),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

/// A standard doubling choice for a group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoublingKind {
    /// `sᵢ ↦ sₙ₋ᵢ` on a symmetric group.
    Flip,
    /// `g ↦ g⁻¹` on an abelian group.
    Inverse,
    Identity,
}

/// The automorphism named by `kind` on `group`.
pub fn standard_automorphism(group: &FiniteGroup, kind: DoublingKind) -> Result<GroupAutomorphism> {
    match kind {
        DoublingKind::Flip => GroupAutomorphism::flip(group),
        DoublingKind::Inverse => GroupAutomorphism::inverse(group),
        DoublingKind::Identity => Ok(GroupAutomorphism::identity(group)),
    }
}
