use std::sync::Arc;

use crate::doubling::{double, Tagged};
use crate::error::{Error, Result};
use crate::hopf::{GroupAlgebra, HopfAlgebra};
use crate::linalg::Vector;
use crate::perm::{Elem, FiniteGroup, GroupAutomorphism};
use crate::report::{CheckResult, Report};

/// Doubling of `ℂ[ℤ/l]` by inversion, with `A = ξ(λ₁)`, `B = η(λ₁)`:
/// `Δ(A) = A⊗A + B⊗B*`, `Δ(B) = A⊗B + B⊗A*`, commutativity, and
/// `α(λ₁) = λ₁⊗A + λ_{l−1}⊗B*`.
pub fn finsym_check(l: u64) -> Result<Report> {
    if l < 3 {
        return Err(Error::InvalidArgument(format!("l must be at least 3, got {l}")));
    }
    let g = Arc::new(FiniteGroup::cyclic(l)?);
    let d = double(&GroupAlgebra::new(g.clone()), &GroupAutomorphism::inverse(&g)?)?;
    let a = Vector::basis(Tagged::Xi(Elem(1)));
    let b = Vector::basis(Tagged::Eta(Elem(1)));
    let (a_star, b_star) = (d.star(&a), d.star(&b));

    let mut r = Report::new();
    let mut formula = |name: &str, got: Vector<(Tagged, Tagged)>, want: Vector<(Tagged, Tagged)>| {
        let witness = (got != want).then(|| {
            format!("got {}, expected {}", d.format_tensor(&got), d.format_tensor(&want))
        });
        r.push(CheckResult::from_witness(name, witness));
    };
    formula("comultiplication of A", d.comul(&a), &a.tensor(&a) + &b.tensor(&b_star));
    formula("comultiplication of B", d.comul(&b), &a.tensor(&b) + &b.tensor(&a_star));

    let basis = d.basis();
    let witness = basis.iter().enumerate().find_map(|(i, x)| {
        basis[i + 1..].iter().find_map(|y| {
            (d.mul_basis(x, y) != d.mul_basis(y, x))
                .then(|| format!("{} and {}", d.label_literal(x), d.label_literal(y)))
        })
    });
    r.push(CheckResult::from_witness("carrier commutative", witness));

    let alpha = d.coaction();
    let lambda1 = Vector::basis(Elem(1));
    let lambda_last = Vector::basis(Elem((l - 1) as u32));
    let want = &lambda1.tensor(&a) + &lambda_last.tensor(&b_star);
    let got = alpha.apply(&lambda1);
    r.push(CheckResult::from_witness(
        "coaction on the generator",
        (got != want).then(|| format!("{got:?}")),
    ));
    if l == 4 {
        r = r
            .entries
            .into_iter()
            .map(|e| e.with_note("l = 4 lies outside the classification range; formulas only"))
            .collect();
    }
    Ok(r.tag("finsym", &format!("Z/{l}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_match() {
        for l in [3, 4, 5, 6] {
            let r = finsym_check(l).unwrap();
            assert!(!r.any_failed(), "{r}");
            assert_eq!(r.entries.len(), 4);
        }
        assert!(finsym_check(4).unwrap().entries[0].note.is_some());
    }

    #[test]
    fn rejects_tiny_l() {
        assert!(finsym_check(2).is_err());
    }

    #[test]
    fn z3_carrier_oracle() {
        // independent check: componentwise product of the two copies of ℂ[ℤ/3]
        let g = Arc::new(FiniteGroup::cyclic(3).unwrap());
        let d = double(&GroupAlgebra::new(g.clone()), &GroupAutomorphism::inverse(&g).unwrap()).unwrap();
        assert_eq!(d.dim(), 6);
        for x in 0..3u32 {
            for y in 0..3u32 {
                let z = Elem((x + y) % 3);
                assert_eq!(
                    d.mul_basis(&Tagged::Xi(Elem(x)), &Tagged::Xi(Elem(y))),
                    Vector::basis(Tagged::Xi(z))
                );
                assert!(d.mul_basis(&Tagged::Xi(Elem(x)), &Tagged::Eta(Elem(y))).is_zero());
            }
        }
    }
}
