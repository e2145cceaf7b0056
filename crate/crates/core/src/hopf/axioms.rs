use std::collections::HashMap;
use std::fmt;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::HopfAlgebra;
use crate::linalg::Vector;
use crate::report::{CheckResult, Report};

/// Soft limit on the algebra dimension for the axiom suite.
pub const DEFAULT_MAX_DIM: usize = 1000;
/// The soft limit may be raised up to this value.
pub const HARD_MAX_DIM: usize = 1440;
/// Environment variable overriding [`DEFAULT_MAX_DIM`].
pub const MAX_DIM_ENV: &str = "QSGD_MAX_DIM";
/// Up to this dimension associativity is checked on all basis triples;
/// above it, on seeded random triples.
pub const ASSOCIATIVITY_EXHAUSTIVE_DIM: usize = 250;
const RANDOM_TRIPLES: usize = 200_000;
const TABLE_DIM: usize = 250;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    Antipode,
    ComultiplicationMultiplicative,
    StarCompatibility,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Associativity,
        Axiom::Unit,
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::Antipode,
        Axiom::ComultiplicationMultiplicative,
        Axiom::StarCompatibility,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::Antipode => "antipode",
            Axiom::ComultiplicationMultiplicative => "comultiplication multiplicative",
            Axiom::StarCompatibility => "star compatibility",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The soft dimension limit: [`MAX_DIM_ENV`] if set and valid, capped at
/// [`HARD_MAX_DIM`]; otherwise [`DEFAULT_MAX_DIM`].
pub fn axiom_dimension_limit() -> usize {
    std::env::var(MAX_DIM_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_MAX_DIM, |v| v.min(HARD_MAX_DIM))
}

/// Checks all Hopf *-algebra axioms on basis elements, one report entry per
/// axiom with the first failing basis element(s) as witness.
pub fn verify_hopf_axioms<H: HopfAlgebra>(h: &H) -> Report {
    verify_hopf_axioms_with_limit(h, axiom_dimension_limit())
}

pub fn verify_hopf_axioms_with_limit<H: HopfAlgebra>(h: &H, limit: usize) -> Report {
    let d = h.dim();
    if d > limit.min(HARD_MAX_DIM) {
        let note = format!("dimension {d} exceeds the axiom guard {}", limit.min(HARD_MAX_DIM));
        return Axiom::ALL
            .iter()
            .map(|a| CheckResult::skipped(a.name(), note.clone()))
            .collect();
    }
    let ctx = Ctx::new(h);
    let mut report = Report::new();
    report.push(ctx.associativity());
    report.push(ctx.unit());
    report.push(ctx.coassociativity());
    report.push(ctx.counit());
    report.push(ctx.antipode());
    report.push(ctx.comul_multiplicative());
    report.push(ctx.star());
    report
}

struct Ctx<'a, H: HopfAlgebra> {
    h: &'a H,
    basis: Vec<H::Label>,
    idx: HashMap<H::Label, u32>,
    table: Option<Vec<Vector<u32>>>,
}

impl<'a, H: HopfAlgebra> Ctx<'a, H> {
    fn new(h: &'a H) -> Self {
        let mut basis = h.basis();
        basis.sort();
        let idx = basis
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect();
        let mut ctx = Ctx {
            h,
            basis,
            idx,
            table: None,
        };
        let d = ctx.basis.len();
        if d <= TABLE_DIM {
            let mut t = Vec::with_capacity(d * d);
            for i in 0..d {
                for j in 0..d {
                    t.push(ctx.compute_prod(i as u32, j as u32));
                }
            }
            ctx.table = Some(t);
        }
        ctx
    }

    fn lit(&self, i: u32) -> String {
        self.h.label_literal(&self.basis[i as usize]).to_string()
    }

    fn to_idx(&self, v: &Vector<H::Label>) -> Vector<u32> {
        v.map_labels(|l| self.idx[l])
    }

    fn compute_prod(&self, i: u32, j: u32) -> Vector<u32> {
        self.to_idx(&self.h.mul_basis(&self.basis[i as usize], &self.basis[j as usize]))
    }

    fn prod(&self, i: u32, j: u32) -> Vector<u32> {
        match &self.table {
            Some(t) => t[i as usize * self.basis.len() + j as usize].clone(),
            None => self.compute_prod(i, j),
        }
    }

    fn triple_fails(&self, i: u32, j: u32, k: u32) -> bool {
        let lhs = self.prod(i, j).extend_linear(|&m| self.prod(m, k));
        let rhs = self.prod(j, k).extend_linear(|&m| self.prod(i, m));
        lhs != rhs
    }

    fn associativity(&self) -> CheckResult {
        let name = Axiom::Associativity.name();
        let d = self.basis.len() as u32;
        let witness = |i, j, k| {
            format!("a={}, b={}, c={}", self.lit(i), self.lit(j), self.lit(k))
        };
        if self.basis.len() <= ASSOCIATIVITY_EXHAUSTIVE_DIM {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        if self.triple_fails(i, j, k) {
                            return CheckResult::fail(name, witness(i, j, k));
                        }
                    }
                }
            }
            CheckResult::pass(name)
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..RANDOM_TRIPLES {
                let (i, j, k) = (
                    rng.random_range(0..d),
                    rng.random_range(0..d),
                    rng.random_range(0..d),
                );
                if self.triple_fails(i, j, k) {
                    return CheckResult::fail(name, witness(i, j, k));
                }
            }
            CheckResult::pass(name).with_note(format!("{RANDOM_TRIPLES} seeded random basis triples"))
        }
    }

    fn unit(&self) -> CheckResult {
        let u = self.h.unit();
        for a in &self.basis {
            let x = Vector::basis(a.clone());
            if self.h.mul(&u, &x) != x || self.h.mul(&x, &u) != x {
                return CheckResult::fail(Axiom::Unit.name(), self.h.label_literal(a).to_string());
            }
        }
        CheckResult::pass(Axiom::Unit.name())
    }

    fn coassociativity(&self) -> CheckResult {
        for a in &self.basis {
            let d = self.h.comul_basis(a);
            let lhs = d.extend_linear(|(x, y)| {
                self.h
                    .comul_basis(x)
                    .map_labels(|(p, q)| (p.clone(), q.clone(), y.clone()))
            });
            let rhs = d.extend_linear(|(x, y)| {
                self.h
                    .comul_basis(y)
                    .map_labels(|(p, q)| (x.clone(), p.clone(), q.clone()))
            });
            if lhs != rhs {
                return CheckResult::fail(
                    Axiom::Coassociativity.name(),
                    self.h.label_literal(a).to_string(),
                );
            }
        }
        CheckResult::pass(Axiom::Coassociativity.name())
    }

    fn counit(&self) -> CheckResult {
        for a in &self.basis {
            let d = self.h.comul_basis(a);
            let left: Vector<H::Label> =
                Vector::from_terms(d.iter().map(|((x, y), c)| (y.clone(), c * &self.h.counit_basis(x))));
            let right: Vector<H::Label> =
                Vector::from_terms(d.iter().map(|((x, y), c)| (x.clone(), c * &self.h.counit_basis(y))));
            let x = Vector::basis(a.clone());
            if left != x || right != x {
                return CheckResult::fail(Axiom::Counit.name(), self.h.label_literal(a).to_string());
            }
        }
        CheckResult::pass(Axiom::Counit.name())
    }

    fn antipode(&self) -> CheckResult {
        let u = self.h.unit();
        for a in &self.basis {
            let d = self.h.comul_basis(a);
            let expected = u.scale(&self.h.counit_basis(a));
            let left = d.extend_linear(|(x, y)| {
                self.h.mul(&self.h.antipode_basis(x), &Vector::basis(y.clone()))
            });
            let right = d.extend_linear(|(x, y)| {
                self.h.mul(&Vector::basis(x.clone()), &self.h.antipode_basis(y))
            });
            if left != expected || right != expected {
                return CheckResult::fail(Axiom::Antipode.name(), self.h.label_literal(a).to_string());
            }
        }
        CheckResult::pass(Axiom::Antipode.name())
    }

    fn comul_multiplicative(&self) -> CheckResult {
        let name = Axiom::ComultiplicationMultiplicative.name();
        let u = self.h.unit();
        if self.h.comul(&u) != u.tensor(&u) {
            return CheckResult::fail(name, "Δ(1) ≠ 1⊗1");
        }
        if !self.h.counit(&u).is_one() {
            return CheckResult::fail(name, "ε(1) ≠ 1");
        }
        let comuls: Vec<_> = self.basis.iter().map(|a| self.h.comul_basis(a)).collect();
        let d = self.basis.len() as u32;
        for i in 0..d {
            for j in 0..d {
                let ab = self.prod(i, j);
                let ab_l: Vector<H::Label> = ab.map_labels(|&m| self.basis[m as usize].clone());
                let lhs = self.h.comul(&ab_l);
                let rhs = self.h.tensor_mul(&comuls[i as usize], &comuls[j as usize]);
                let eps = &self.h.counit_basis(&self.basis[i as usize])
                    * &self.h.counit_basis(&self.basis[j as usize]);
                if lhs != rhs || self.h.counit(&ab_l) != eps {
                    return CheckResult::fail(name, format!("a={}, b={}", self.lit(i), self.lit(j)));
                }
            }
        }
        CheckResult::pass(name)
    }

    fn star(&self) -> CheckResult {
        let name = Axiom::StarCompatibility.name();
        let stars: Vec<Vector<H::Label>> = self.basis.iter().map(|a| self.h.star_basis(a)).collect();
        for (i, a) in self.basis.iter().enumerate() {
            let x = Vector::basis(a.clone());
            if self.h.star(&stars[i]) != x {
                return CheckResult::fail(name, format!("(a*)* ≠ a for a={}", self.lit(i as u32)));
            }
            let lhs = self.h.comul(&stars[i]);
            let rhs = self
                .h
                .comul_basis(a)
                .conj()
                .extend_linear(|(p, q)| self.h.star_basis(p).tensor(&self.h.star_basis(q)));
            if lhs != rhs {
                return CheckResult::fail(name, format!("Δ(a*) ≠ (*⊗*)Δ(a) for a={}", self.lit(i as u32)));
            }
            if self.h.counit(&stars[i]) != self.h.counit_basis(a).conj() {
                return CheckResult::fail(name, format!("ε(a*) ≠ conj ε(a) for a={}", self.lit(i as u32)));
            }
        }
        let d = self.basis.len() as u32;
        for i in 0..d {
            for j in 0..d {
                let ab: Vector<H::Label> = self.prod(i, j).map_labels(|&m| self.basis[m as usize].clone());
                let lhs = self.h.star(&ab);
                let rhs = self.h.mul(&stars[j as usize], &stars[i as usize]);
                if lhs != rhs {
                    return CheckResult::fail(
                        name,
                        format!("(ab)* ≠ b*a* for a={}, b={}", self.lit(i), self.lit(j)),
                    );
                }
            }
        }
        CheckResult::pass(name)
    }
}
