use super::coaction::apply_tensor_map;
use super::extension::{check_hopf_morphism, check_star_homomorphism};
use super::{DoubledHopf, Tagged};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{LinearMap, Vector};
use crate::perm::GroupAutomorphism;
use crate::report::{CheckResult, Report};

/// `Φ: Ã₁ → Ã₂`, `ξ₁(g) ↦ ξ₂(θg)`, `η₁(g) ↦ η₂(θg)`, for θ with
/// `θ∘θ₁ = θ₂∘θ`.
pub fn iso_from_conjugate(
    d1: &DoubledHopf,
    d2: &DoubledHopf,
    theta: &GroupAutomorphism,
) -> Result<LinearMap<Tagged, Tagged>> {
    if d1.group() != d2.group() {
        return Err(Error::InvalidArgument(
            "doublings must share the underlying group".into(),
        ));
    }
    let g = d1.group();
    if theta.images().len() != g.order() {
        return Err(Error::InvalidArgument("automorphism of a different group".into()));
    }
    if let Some(x) = g
        .elements()
        .find(|&x| theta.apply(d1.theta().apply(x)) != d2.theta().apply(theta.apply(x)))
    {
        return Err(Error::NotConjugate {
            witness: g.literal(x),
        });
    }
    Ok(LinearMap::from_fn(d1.basis().iter(), |t| match *t {
        Tagged::Xi(x) => Vector::basis(Tagged::Xi(theta.apply(x))),
        Tagged::Eta(x) => Vector::basis(Tagged::Eta(theta.apply(x))),
    }))
}

/// Bijective, unital *-homomorphism, and `(Φ⊗Φ)∘Δ̃₁ = Δ̃₂∘Φ` (plus counit
/// and antipode compatibility).
pub fn verify_isomorphism(d1: &DoubledHopf, d2: &DoubledHopf, phi: &LinearMap<Tagged, Tagged>) -> Report {
    let mut r = Report::new();
    let rank = phi.rank();
    r.push(CheckResult::from_witness(
        "bijective",
        (rank != d1.dim() || d1.dim() != d2.dim())
            .then(|| format!("rank {rank}, dimensions {} → {}", d1.dim(), d2.dim())),
    ));
    r.push(check_star_homomorphism(d1, d2, phi));
    let witness = d1.basis().into_iter().find_map(|t| {
        let lhs = apply_tensor_map(&d1.comul_basis(&t), |a| phi.image(a).clone(), |b| phi.image(b).clone());
        (lhs != d2.comul(phi.image(&t))).then(|| d1.label_literal(&t).to_string())
    });
    r.push(CheckResult::from_witness("comultiplication intertwined", witness));
    r.push(check_hopf_morphism(d1, d2, phi));
    r
}
