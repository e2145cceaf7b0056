use std::collections::BTreeSet;

use serde::Serialize;

use super::{DoubledHopf, Tagged};
use crate::hopf::{is_grouplike, HopfAlgebra};
use crate::linalg::{solve_affine, AffineSolution, Vector};
use crate::perm::Elem;
use crate::scalar::Scalar;

/// One coefficient of `Δ̃(x) − x⊗x` (or of `ε(x) − 1`) for
/// `x = ξ(g) + μη(h)`, as the polynomial `a + bμ + cμ²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientRow {
    pub label: String,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl CoefficientRow {
    fn eval(&self, mu: &Scalar) -> Scalar {
        &(&self.a + &(&self.b * mu)) + &(&self.c * &(mu * mu))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MuSolutions {
    /// Exactly these μ (possibly none).
    Finite(Vec<Scalar>),
    /// Every μ works.
    All,
    /// Common roots exist but lie outside ℚ(i); the common factor is
    /// reported low-degree first.
    Irrational(Vec<Scalar>),
}

/// Result of [`grouplike_binomial`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialScan {
    pub g: String,
    pub h: String,
    pub solutions: MuSolutions,
    /// Coefficient whose equation cannot be met, when no μ exists.
    pub witness: Option<String>,
    pub table: Vec<CoefficientRow>,
}

impl BinomialScan {
    pub fn is_empty(&self) -> bool {
        matches!(&self.solutions, MuSolutions::Finite(v) if v.is_empty())
    }

    pub fn finite(&self) -> Option<&[Scalar]> {
        match &self.solutions {
            MuSolutions::Finite(v) => Some(v),
            _ => None,
        }
    }
}

/// All μ for which `ξ(g) + μη(h)` is group-like in Ã, by exact expansion
/// of `Δ̃` and coefficient comparison.
pub fn grouplike_binomial(d: &DoubledHopf, g: Elem, h: Elem) -> BinomialScan {
    let xg = Vector::basis(Tagged::Xi(g));
    let yh = Vector::basis(Tagged::Eta(h));
    // Δ̃x − x⊗x = A + μB + μ²C
    let a = &d.comul(&xg) - &xg.tensor(&xg);
    let b = &(&d.comul(&yh) - &xg.tensor(&yh)) - &yh.tensor(&xg);
    let c = -&yh.tensor(&yh);
    let labels: BTreeSet<(Tagged, Tagged)> = a
        .labels()
        .chain(b.labels())
        .chain(c.labels())
        .cloned()
        .collect();
    let mut table: Vec<CoefficientRow> = vec![CoefficientRow {
        label: "ε(x) − 1".into(),
        a: &d.counit(&xg) - &Scalar::ONE,
        b: d.counit(&yh),
        c: Scalar::ZERO,
    }];
    for l in &labels {
        table.push(CoefficientRow {
            label: format!("{}⊗{}", d.label_literal(&l.0), d.label_literal(&l.1)),
            a: a.coeff(l),
            b: b.coeff(l),
            c: c.coeff(l),
        });
    }
    table.retain(|r| !(r.a.is_zero() && r.b.is_zero() && r.c.is_zero()));

    let (g_lit, h_lit) = (d.group().literal(g), d.group().literal(h));
    let scan = |solutions, witness| BinomialScan {
        g: g_lit.clone(),
        h: h_lit.clone(),
        solutions,
        witness,
        table: table.clone(),
    };

    // linear relaxation in (μ, μ²): a quick certificate of infeasibility
    let constraints: Vec<(Vector<u8>, Scalar)> = table
        .iter()
        .map(|r| {
            (
                Vector::from_terms([(0u8, r.b.clone()), (1u8, r.c.clone())]),
                -&r.a,
            )
        })
        .collect();
    if let AffineSolution::Infeasible { row } = solve_affine(&constraints) {
        return scan(MuSolutions::Finite(vec![]), Some(table[row].label.clone()));
    }

    let mut common: Option<Vec<Scalar>> = None;
    for r in &table {
        let p = trim(vec![r.a.clone(), r.b.clone(), r.c.clone()]);
        let next = match &common {
            None => p,
            Some(q) => poly_gcd(q.clone(), p),
        };
        if next.len() == 1 {
            return scan(MuSolutions::Finite(vec![]), Some(r.label.clone()));
        }
        common = Some(next);
    }
    let Some(f) = common else {
        return scan(MuSolutions::All, None);
    };
    let roots = match f.len() {
        2 => vec![-&(&f[0] / &f[1])],
        3 => {
            // μ = (−b ± √(b² − 4ac)) / 2a
            let (c0, c1, c2) = (&f[0], &f[1], &f[2]);
            let disc = &(c1 * c1) - &(&Scalar::from_integer(4) * &(c2 * c0));
            match disc.sqrt_exact() {
                Some(s) => {
                    let two_a = &Scalar::from_integer(2) * c2;
                    let r1 = &(&(-c1) + &s) / &two_a;
                    let r2 = &(&(-c1) - &s) / &two_a;
                    let mut v = vec![r1, r2];
                    v.sort();
                    v.dedup();
                    v
                }
                None => return scan(MuSolutions::Irrational(f), None),
            }
        }
        _ => unreachable!("degree at most two"),
    };
    for mu in &roots {
        debug_assert!(table.iter().all(|r| r.eval(mu).is_zero()));
        debug_assert!(is_grouplike(d, &(&xg + &yh.scale(mu))));
    }
    scan(MuSolutions::Finite(roots), None)
}

fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

/// Remainder of `p` modulo a nonzero `q`.
fn poly_rem(mut p: Vec<Scalar>, q: &[Scalar]) -> Vec<Scalar> {
    let lead = q.last().expect("nonzero divisor").recip();
    while p.len() >= q.len() {
        let shift = p.len() - q.len();
        let factor = p.last().expect("nonempty") * &lead;
        for (i, qc) in q.iter().enumerate() {
            let t = &p[shift + i] - &(&factor * qc);
            p[shift + i] = t;
        }
        p = trim(p);
        if p.is_empty() {
            break;
        }
    }
    p
}

/// Monic gcd; the zero polynomial is the empty vector.
fn poly_gcd(mut p: Vec<Scalar>, mut q: Vec<Scalar>) -> Vec<Scalar> {
    p = trim(p);
    q = trim(q);
    while !q.is_empty() {
        let r = poly_rem(p, &q);
        p = q;
        q = r;
    }
    if let Some(l) = p.last() {
        let inv = l.recip();
        p = p.iter().map(|c| c * &inv).collect();
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubling::double;
    use crate::hopf::GroupAlgebra;
    use crate::perm::{interval, FiniteGroup, GroupAutomorphism};
    use std::sync::Arc;

    fn sym_double(n: i64) -> DoubledHopf {
        let g = FiniteGroup::symmetric(interval(1, n)).unwrap();
        let th = GroupAutomorphism::flip(&g).unwrap();
        double(&GroupAlgebra::new(Arc::new(g)), &th).unwrap()
    }

    #[test]
    fn gcd_basics() {
        let s = |v: &[i64]| v.iter().map(|&x| Scalar::from_integer(x)).collect::<Vec<_>>();
        // (μ−1)(μ+1) and (μ−1)
        assert_eq!(poly_gcd(s(&[-1, 0, 1]), s(&[-1, 1])), s(&[-1, 1]));
        assert_eq!(poly_gcd(s(&[1, 0, 1]), s(&[-1, 1])), s(&[1]));
    }

    #[test]
    fn middle_generator_of_s4() {
        let d = sym_double(4);
        let s2 = d.group().adjacent_transposition(2).unwrap();
        let r = grouplike_binomial(&d, s2, s2);
        assert_eq!(
            r.solutions,
            MuSolutions::Finite(vec![Scalar::from_integer(-1), Scalar::ONE])
        );
    }

    #[test]
    fn odd_degree_has_no_fixed_generator() {
        let d = sym_double(5);
        for k in 1..=4 {
            let s = d.group().adjacent_transposition(k).unwrap();
            let r = grouplike_binomial(&d, s, s);
            assert!(r.is_empty(), "k={k}: {r:?}");
            assert!(r.witness.is_some());
        }
    }

    #[test]
    fn mismatched_lengths_give_nothing() {
        let d = sym_double(4);
        let s1 = d.group().adjacent_transposition(1).unwrap();
        let w0: crate::perm::Permutation = "perm{ground=1..4; (1 4)(2 3)}".parse().unwrap();
        let long = d.group().elem_of_perm(&w0).unwrap();
        assert!(grouplike_binomial(&d, s1, long).is_empty());
    }
}
