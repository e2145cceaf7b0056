use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::hopf::HopfAlgebra;
use crate::linalg::{Echelon, LinearMap, Vector};
use crate::report::{CheckResult, Report};
use crate::scalar::Scalar;

/// `(f ⊗ g)` applied to a tensor, with `f`, `g` given on basis labels.
pub fn apply_tensor_map<A, B, C, D>(
    x: &Vector<(A, B)>,
    mut f: impl FnMut(&A) -> Vector<C>,
    mut g: impl FnMut(&B) -> Vector<D>,
) -> Vector<(C, D)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    D: Ord + Clone,
{
    x.extend_linear(|(a, b)| f(a).tensor(&g(b)))
}

/// A coaction `α: A → A ⊗ Q` stored on the basis of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction<L: Ord, M: Ord> {
    map: LinearMap<L, (L, M)>,
}

impl<L, M> Coaction<L, M>
where
    L: Ord + Clone + Hash + Debug,
    M: Ord + Clone + Hash + Debug,
{
    pub fn new(map: LinearMap<L, (L, M)>) -> Self {
        Coaction { map }
    }

    pub fn map(&self) -> &LinearMap<L, (L, M)> {
        &self.map
    }

    pub fn image(&self, a: &L) -> &Vector<(L, M)> {
        self.map.image(a)
    }

    pub fn apply(&self, x: &Vector<L>) -> Vector<(L, M)> {
        self.map.apply(x)
    }

    /// Action equation, counit law, unital *-homomorphism property and the
    /// Podleś spanning condition.
    pub fn verify<A, Q>(&self, a: &A, q: &Q) -> Report
    where
        A: HopfAlgebra<Label = L>,
        Q: HopfAlgebra<Label = M>,
    {
        let mut r = Report::new();
        let lit = |l: &L| a.label_literal(l).to_string();
        let basis = a.basis();

        let mut witness = None;
        for l in &basis {
            let x = self.image(l);
            let lhs: Vector<(L, M, M)> = x.extend_linear(|(b, m)| {
                self.image(b)
                    .map_labels(|(c, n)| (c.clone(), n.clone(), m.clone()))
            });
            let rhs: Vector<(L, M, M)> = x.extend_linear(|(b, m)| {
                q.comul_basis(m)
                    .map_labels(|(n1, n2)| (b.clone(), n1.clone(), n2.clone()))
            });
            if lhs != rhs {
                witness = Some(lit(l));
                break;
            }
        }
        r.push(CheckResult::from_witness("action equation", witness));

        let mut witness = None;
        for l in &basis {
            let back = Vector::from_terms(
                self.image(l)
                    .iter()
                    .map(|((b, m), c)| (b.clone(), c * &q.counit_basis(m))),
            );
            if back != Vector::basis(l.clone()) {
                witness = Some(lit(l));
                break;
            }
        }
        r.push(CheckResult::from_witness("counit law", witness));

        r.push(self.check_homomorphism(a, q));

        let rank = self.podles_rank(q);
        let full = a.dim() * q.dim();
        r.push(CheckResult::from_witness(
            "podles condition",
            (rank != full).then(|| format!("span rank {rank} < {full}")),
        ));
        r
    }

    fn tensor_product<A, Q>(&self, a: &A, q: &Q, x: &Vector<(L, M)>, y: &Vector<(L, M)>) -> Vector<(L, M)>
    where
        A: HopfAlgebra<Label = L>,
        Q: HopfAlgebra<Label = M>,
    {
        crate::linalg::extend_bilinear(x, y, |(l1, m1), (l2, m2)| {
            a.mul_basis(l1, l2).tensor(&q.mul_basis(m1, m2))
        })
    }

    fn check_homomorphism<A, Q>(&self, a: &A, q: &Q) -> CheckResult
    where
        A: HopfAlgebra<Label = L>,
        Q: HopfAlgebra<Label = M>,
    {
        let name = "coaction unital *-homomorphism";
        let one = a.unit().tensor(&q.unit());
        if self.apply(&a.unit()) != one {
            return CheckResult::fail(name, "α(1) ≠ 1⊗1");
        }
        let basis = a.basis();
        for l in &basis {
            let x = self.image(l);
            let star_x = x
                .conj()
                .extend_linear(|(b, m)| a.star_basis(b).tensor(&q.star_basis(m)));
            if self.apply(&a.star_basis(l)) != star_x {
                return CheckResult::fail(name, format!("α(a*) ≠ α(a)* at {}", a.label_literal(l)));
            }
        }
        for l1 in &basis {
            for l2 in &basis {
                let lhs = self.apply(&a.mul_basis(l1, l2));
                let rhs = self.tensor_product(a, q, self.image(l1), self.image(l2));
                if lhs != rhs {
                    return CheckResult::fail(
                        name,
                        format!("α(ab) ≠ α(a)α(b) at a={}, b={}", a.label_literal(l1), a.label_literal(l2)),
                    );
                }
            }
        }
        CheckResult::pass(name)
    }

    /// `dim span{α(a)(1⊗q)}` over basis `a`, `q`.
    pub fn podles_rank<Q: HopfAlgebra<Label = M>>(&self, q: &Q) -> usize {
        let qb = q.basis();
        let mut ech = Echelon::new();
        for (_, x) in self.map.images() {
            for m in &qb {
                let v = x.extend_linear(|(b, n)| {
                    q.mul_basis(n, m).map_labels(|k| (b.clone(), k.clone()))
                });
                ech.insert(&v);
            }
        }
        ech.rank()
    }

    /// Slices `(δ_k ⊗ id)α(a)` for coordinate functionals `δ_k`, keyed by
    /// `(k, a)`; zero slices are omitted.
    pub fn slices(&self) -> Vec<((L, L), Vector<M>)> {
        let mut out = Vec::new();
        for (a, x) in self.map.images() {
            let mut by_k: BTreeMap<L, Vec<(M, Scalar)>> = BTreeMap::new();
            for ((k, m), c) in x.iter() {
                by_k.entry(k.clone()).or_default().push((m.clone(), c.clone()));
            }
            for (k, terms) in by_k {
                let v = Vector::from_terms(terms);
                if !v.is_zero() {
                    out.push(((k, a.clone()), v));
                }
            }
        }
        out
    }

    /// Dimension of the linear span of all slices.
    pub fn slice_span_dimension(&self) -> usize {
        crate::linalg::span_rank(self.slices().into_iter().map(|(_, v)| v))
    }

    /// Dimension of the unital subalgebra of `Q` generated by all slices,
    /// by closing the span under right multiplication with the slices.
    pub fn generated_dimension<Q: HopfAlgebra<Label = M>>(&self, q: &Q) -> usize {
        let gens: Vec<Vector<M>> = self.slices().into_iter().map(|(_, v)| v).collect();
        let mut ech = Echelon::new();
        let mut queue: Vec<Vector<M>> = Vec::new();
        for v in std::iter::once(q.unit()).chain(gens.iter().cloned()) {
            if ech.insert(&v) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for g in &gens {
                let w = q.mul(&v, g);
                if ech.insert(&w) {
                    queue.push(w);
                }
            }
        }
        ech.rank()
    }
}
