use std::hash::Hash;

use super::coaction::{apply_tensor_map, Coaction};
use super::{DoubledHopf, Tagged};
use crate::hopf::HopfAlgebra;
use crate::linalg::LinearMap;
use crate::perm::Elem;
use crate::report::{CheckResult, Report};

/// The unique linear `f̃: Ã₁ → Ã₂` with `f̃∘ξ₁ = ξ₂∘f` and `f̃∘η₁ = η₂∘f`.
pub fn extend_map(
    f: &LinearMap<Elem, Elem>,
    d1: &DoubledHopf,
    d2: &DoubledHopf,
) -> LinearMap<Tagged, Tagged> {
    LinearMap::from_fn(d1.basis().iter(), |t| match *t {
        Tagged::Xi(g) => d2.xi(f.image(&g)),
        Tagged::Eta(g) => d2.eta(f.image(&g)),
    })
}

/// `θ₂∘f = f∘θ₁`; returns the first basis element where it fails.
pub fn equivariance_witness(
    f: &LinearMap<Elem, Elem>,
    d1: &DoubledHopf,
    d2: &DoubledHopf,
) -> Option<String> {
    d1.base().basis().into_iter().find_map(|g| {
        let lhs = d2.theta_vec(f.image(&g));
        let rhs = f.image(&d1.theta().apply(g)).clone();
        (lhs != rhs).then(|| d1.group().literal(g))
    })
}

/// Property 1: `f̃` restricts to `f` on both copies.
pub fn check_equivariant_extension(
    f: &LinearMap<Elem, Elem>,
    ft: &LinearMap<Tagged, Tagged>,
    d1: &DoubledHopf,
    d2: &DoubledHopf,
) -> CheckResult {
    let witness = d1.base().basis().into_iter().find_map(|g| {
        let ok_xi = ft.image(&Tagged::Xi(g)) == &d2.xi(f.image(&g));
        let ok_eta = ft.image(&Tagged::Eta(g)) == &d2.eta(f.image(&g));
        (!(ok_xi && ok_eta)).then(|| d1.group().literal(g))
    });
    CheckResult::from_witness("extension restricts to f on ξ and η", witness)
}

/// Property 2: `f̃` is injective (surjective) iff `f` is.
pub fn check_injectivity_surjectivity(
    f: &LinearMap<Elem, Elem>,
    ft: &LinearMap<Tagged, Tagged>,
    d1: &DoubledHopf,
    d2: &DoubledHopf,
) -> CheckResult {
    let (rf, rft) = (f.rank(), ft.rank());
    let inj = (rf == d1.base().dim(), rft == d1.dim());
    let surj = (rf == d2.base().dim(), rft == d2.dim());
    let witness = if inj.0 != inj.1 {
        Some(format!("injectivity differs: rank f = {rf}, rank f̃ = {rft}"))
    } else if surj.0 != surj.1 {
        Some(format!("surjectivity differs: rank f = {rf}, rank f̃ = {rft}"))
    } else {
        None
    };
    let note = format!(
        "f {}injective, {}surjective",
        if inj.0 { "" } else { "not " },
        if surj.0 { "" } else { "not " }
    );
    CheckResult::from_witness("extension preserves injectivity and surjectivity", witness).with_note(note)
}

/// Unital, multiplicative and *-preserving on basis elements.
pub fn check_star_homomorphism<A, B>(src: &A, dst: &B, f: &LinearMap<A::Label, B::Label>) -> CheckResult
where
    A: HopfAlgebra,
    B: HopfAlgebra,
    B::Label: Hash,
{
    let name = "unital *-homomorphism";
    if f.apply(&src.unit()) != dst.unit() {
        return CheckResult::fail(name, "f(1) ≠ 1");
    }
    let basis = src.basis();
    for a in &basis {
        if f.apply(&src.star_basis(a)) != dst.star(f.image(a)) {
            return CheckResult::fail(name, format!("f(a*) ≠ f(a)* at {}", src.label_literal(a)));
        }
    }
    for a in &basis {
        for b in &basis {
            if f.apply(&src.mul_basis(a, b)) != dst.mul(f.image(a), f.image(b)) {
                return CheckResult::fail(
                    name,
                    format!("f(ab) ≠ f(a)f(b) at a={}, b={}", src.label_literal(a), src.label_literal(b)),
                );
            }
        }
    }
    CheckResult::pass(name)
}

/// Compatible with comultiplication, counit and antipode on basis elements.
pub fn check_hopf_morphism<A, B>(src: &A, dst: &B, f: &LinearMap<A::Label, B::Label>) -> CheckResult
where
    A: HopfAlgebra,
    B: HopfAlgebra,
{
    let name = "hopf morphism";
    for a in src.basis() {
        let fa = f.image(&a);
        let lhs = dst.comul(fa);
        let rhs = apply_tensor_map(&src.comul_basis(&a), |x| f.image(x).clone(), |y| f.image(y).clone());
        let lit = src.label_literal(&a);
        if lhs != rhs {
            return CheckResult::fail(name, format!("Δf(a) ≠ (f⊗f)Δ(a) at {lit}"));
        }
        if dst.counit(fa) != src.counit_basis(&a) {
            return CheckResult::fail(name, format!("ε f(a) ≠ ε(a) at {lit}"));
        }
        if dst.antipode(fa) != f.apply(&src.antipode_basis(&a)) {
            return CheckResult::fail(name, format!("S f(a) ≠ f S(a) at {lit}"));
        }
    }
    CheckResult::pass(name)
}

/// Functoriality `g̃ ∘ f̃ = (g ∘ f)~`.
pub fn check_functoriality(
    f: &LinearMap<Elem, Elem>,
    g: &LinearMap<Elem, Elem>,
    d1: &DoubledHopf,
    d2: &DoubledHopf,
    d3: &DoubledHopf,
) -> CheckResult {
    let lhs = extend_map(f, d1, d2).then(&extend_map(g, d2, d3));
    let rhs = extend_map(&f.then(g), d1, d3);
    let witness = lhs
        .first_difference(&rhs)
        .map(|t| d1.label_literal(&t).to_string());
    CheckResult::from_witness("extension functorial", witness)
}

/// `α₂ ∘ f = (f ⊗ f̃) ∘ α₁` on every basis element.
pub fn check_intertwining(
    alpha1: &Coaction<Elem, Tagged>,
    alpha2: &Coaction<Elem, Tagged>,
    f: &LinearMap<Elem, Elem>,
    ft: &LinearMap<Tagged, Tagged>,
    d1: &DoubledHopf,
) -> CheckResult {
    let witness = d1.base().basis().into_iter().find_map(|g| {
        let lhs = alpha2.apply(f.image(&g));
        let rhs = apply_tensor_map(alpha1.image(&g), |a| f.image(a).clone(), |q| ft.image(q).clone());
        (lhs != rhs).then(|| d1.group().literal(g))
    });
    CheckResult::from_witness("coaction intertwining", witness)
}

/// All five extension properties plus the intertwining conclusion. The
/// homomorphism and Hopf checks on `f̃` only apply when `f` has the
/// corresponding property (and, for Hopf, is equivariant); otherwise they
/// are reported as skipped.
pub fn extension_report(
    f: &LinearMap<Elem, Elem>,
    d1: &DoubledHopf,
    d2: &DoubledHopf,
) -> Report {
    let ft = extend_map(f, d1, d2);
    let mut r = Report::new();
    r.push(check_equivariant_extension(f, &ft, d1, d2));
    r.push(check_injectivity_surjectivity(f, &ft, d1, d2));

    let f_hom = check_star_homomorphism(d1.base(), d2.base(), f);
    if f_hom.passed() {
        let mut c = check_star_homomorphism(d1, d2, &ft);
        c.check = "extension preserves *-homomorphisms".into();
        r.push(c);
    } else {
        r.push(CheckResult::skipped(
            "extension preserves *-homomorphisms",
            "f is not a unital *-homomorphism",
        ));
    }

    let equivariant = equivariance_witness(f, d1, d2);
    r.push(CheckResult::from_witness("f equivariant", equivariant.clone()));
    let f_hopf = check_hopf_morphism(d1.base(), d2.base(), f);
    if f_hopf.passed() && f_hom.passed() && equivariant.is_none() {
        let mut c = check_hopf_morphism(d1, d2, &ft);
        c.check = "extension preserves equivariant hopf morphisms".into();
        r.push(c);
        r.push(check_intertwining(&d1.coaction(), &d2.coaction(), f, &ft, d1));
    } else {
        r.push(CheckResult::skipped(
            "extension preserves equivariant hopf morphisms",
            "f is not an equivariant Hopf *-morphism",
        ));
    }
    r.push(check_functoriality(
        &LinearMap::<Elem, Elem>::identity(d1.base().basis().iter()),
        f,
        d1,
        d1,
        d2,
    ));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubling::double;
    use crate::linalg::Vector;
    use crate::hopf::GroupAlgebra;
    use crate::perm::{homomorphism_from_generators, interval, FiniteGroup, GroupAutomorphism};
    use std::sync::Arc;

    fn sym_double(lo: i64, hi: i64) -> DoubledHopf {
        let g = FiniteGroup::symmetric(interval(lo, hi)).unwrap();
        let th = GroupAutomorphism::flip(&g).unwrap();
        double(&GroupAlgebra::new(Arc::new(g)), &th).unwrap()
    }

    #[test]
    fn identity_extends_to_identity() {
        let d = sym_double(1, 3);
        let id = LinearMap::<Elem, Elem>::identity(d.base().basis().iter());
        let ft = extend_map(&id, &d, &d);
        assert!(ft.first_difference(&LinearMap::<Tagged, Tagged>::identity(d.basis().iter())).is_none());
    }

    #[test]
    fn phi3_extension() {
        let d3 = sym_double(-1, 1);
        let d5 = sym_double(-2, 2);
        let (g3, g5) = (d3.group(), d5.group());
        let gens = g3.standard_generators();
        let imgs: Vec<Elem> = (1..=gens.len())
            .map(|i| g5.adjacent_transposition(i + 1).unwrap())
            .collect();
        let map = homomorphism_from_generators(g3, g5, &gens, &imgs).unwrap();
        let f = LinearMap::from_fn(d3.base().basis().iter(), |g| Vector::basis(map[g.index()]));
        let r = extension_report(&f, &d3, &d5);
        assert!(!r.any_failed(), "{r}");
        assert_eq!(r.entries.iter().filter(|e| e.passed()).count(), r.entries.len(), "{r}");
    }
}
