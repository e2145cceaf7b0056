use super::HopfAlgebra;
use crate::linalg::Vector;
use crate::scalar::Scalar;

/// `x ≠ 0`, `Δx = x⊗x` and `ε(x) = 1`.
pub fn is_grouplike<H: HopfAlgebra>(h: &H, x: &Vector<H::Label>) -> bool {
    !x.is_zero() && h.counit(x).is_one() && h.comul(x) == x.tensor(x)
}

/// All group-like vectors among those supported on at most two basis
/// elements with coefficients in `{±1, ±i}`.
pub fn grouplikes_support_le2<H: HopfAlgebra>(h: &H) -> Vec<Vector<H::Label>> {
    let units = [
        Scalar::ONE,
        Scalar::from_integer(-1),
        Scalar::I,
        -Scalar::I,
    ];
    let mut basis = h.basis();
    basis.sort();
    let mut found = Vec::new();
    for (i, a) in basis.iter().enumerate() {
        for c in &units {
            let x = Vector::monomial(a.clone(), c.clone());
            if is_grouplike(h, &x) {
                found.push(x);
            }
        }
        for b in &basis[i + 1..] {
            for c in &units {
                for d in &units {
                    let x = Vector::from_terms([(a.clone(), c.clone()), (b.clone(), d.clone())]);
                    if is_grouplike(h, &x) {
                        found.push(x);
                    }
                }
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::GroupAlgebra;
    use crate::perm::{interval, Elem, FiniteGroup};
    use std::sync::Arc;

    #[test]
    fn basis_elements_only() {
        let a = GroupAlgebra::new(Arc::new(FiniteGroup::symmetric(interval(1, 3)).unwrap()));
        for g in a.basis() {
            assert!(is_grouplike(&a, &Vector::basis(g)));
        }
        let x = Vector::from_terms([(Elem(0), Scalar::ONE), (Elem(1), Scalar::ONE)]);
        assert!(!is_grouplike(&a, &x));
        let found = grouplikes_support_le2(&a);
        let expected: Vec<_> = a.basis().into_iter().map(Vector::basis).collect();
        assert_eq!(found, expected);
    }
}
