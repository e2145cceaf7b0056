use std::collections::HashSet;
use std::sync::Arc;

use crate::doubling::{
    check_intertwining, double, extend_map, extension_report, Coaction, DoubledHopf, Tagged,
};
use crate::error::{Error, Result};
use crate::filtration::{filtration_from_partition, filtration_violation, OrthogonalFiltration, Partition};
use crate::hopf::{verify_hopf_axioms, GroupAlgebra, HopfAlgebra};
use crate::linalg::{LinearMap, Vector};
use crate::perm::{Elem, FiniteGroup, GroupAutomorphism};
use crate::report::{CheckResult, Report};

pub(crate) const UNIQUENESS_NOTE: &str =
    "π is the doubling extension of ρ; uniqueness among all Hopf morphisms is not searched";

/// One level of a tower: the group algebra with its filtration, the
/// doubling, and the doubling coaction.
#[derive(Clone, Debug)]
pub struct TowerStage {
    pub level: usize,
    pub name: String,
    pub algebra: GroupAlgebra,
    pub partition: Partition,
    pub filtration: OrthogonalFiltration,
    pub doubled: DoubledHopf,
    pub coaction: Coaction<Elem, Tagged>,
}

impl TowerStage {
    pub fn new(
        level: usize,
        name: impl Into<String>,
        partition: Partition,
        theta: &GroupAutomorphism,
    ) -> Result<Self> {
        let algebra = GroupAlgebra::new(partition.group_arc().clone());
        let filtration = filtration_from_partition(&algebra, &partition)?;
        let doubled = double(&algebra, theta)?;
        let coaction = doubled.coaction();
        Ok(TowerStage {
            level,
            name: name.into(),
            algebra,
            partition,
            filtration,
            doubled,
            coaction,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        self.algebra.group()
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        self.algebra.group_arc()
    }

    /// Axioms of the doubling, Haar functional, central projections,
    /// coaction laws and filtration preservation.
    pub fn verify(&self) -> Report {
        let mut r = verify_hopf_axioms(&self.doubled);
        r.push(self.doubled.check_haar());
        r.push(self.doubled.check_central_projections());
        r.extend(self.coaction.verify(&self.algebra, &self.doubled).entries);
        r.push(CheckResult::from_witness(
            "coaction preserves filtration",
            filtration_violation(&self.coaction, &self.filtration),
        ));
        r
    }
}

/// Connecting morphisms between two stages: `ρ` induced by a group map and
/// its doubling extension `π`.
#[derive(Clone, Debug)]
pub struct ConnectingPair {
    pub from: usize,
    pub to: usize,
    pub group_map: Vec<Elem>,
    pub rho: LinearMap<Elem, Elem>,
    pub pi: LinearMap<Tagged, Tagged>,
}

impl ConnectingPair {
    pub fn new(src: &TowerStage, dst: &TowerStage, group_map: Vec<Elem>) -> Result<Self> {
        if group_map.len() != src.group().order() {
            return Err(Error::InvalidArgument(format!(
                "group map defined on {} elements, source has {}",
                group_map.len(),
                src.group().order()
            )));
        }
        let rho = LinearMap::from_fn(src.algebra.basis().iter(), |g| {
            Vector::basis(group_map[g.index()])
        });
        let pi = extend_map(&rho, &src.doubled, &dst.doubled);
        Ok(ConnectingPair {
            from: src.level,
            to: dst.level,
            group_map,
            rho,
            pi,
        })
    }

    /// Injectivity and homomorphism property of the group map, then every
    /// extension property including intertwining of the coactions.
    pub fn verify(&self, src: &TowerStage, dst: &TowerStage) -> Report {
        let mut r = Report::new();
        r.push(group_map_check(src.group(), dst.group(), &self.group_map));
        let rank = self.rho.rank();
        r.push(CheckResult::from_witness(
            "rho injective",
            (rank != src.algebra.dim()).then(|| format!("rank {rank} < {}", src.algebra.dim())),
        ));
        let mut ext = extension_report(&self.rho, &src.doubled, &dst.doubled);
        for e in &mut ext.entries {
            if e.check.starts_with("extension preserves equivariant hopf") {
                *e = e.clone().with_note(UNIQUENESS_NOTE);
            }
        }
        r.extend(ext.entries);
        r
    }
}

/// `f` is an injective homomorphism `src → dst`, checked on all pairs.
pub fn group_map_check(src: &FiniteGroup, dst: &FiniteGroup, f: &[Elem]) -> CheckResult {
    let name = "group map injective homomorphism";
    let distinct: HashSet<Elem> = f.iter().copied().collect();
    if distinct.len() != f.len() {
        return CheckResult::fail(name, "two elements share an image");
    }
    for a in src.elements() {
        for b in src.elements() {
            if f[src.mul(a, b).index()] != dst.mul(f[a.index()], f[b.index()]) {
                return CheckResult::fail(
                    name,
                    format!("f(ab) ≠ f(a)f(b) at a={}, b={}", src.literal(a), src.literal(b)),
                );
            }
        }
    }
    CheckResult::pass(name)
}

/// `θ_dst ∘ f = f ∘ θ_src` on all elements.
pub fn equivariance_check(src: &TowerStage, dst: &TowerStage, f: &[Elem]) -> CheckResult {
    let witness = src
        .group()
        .elements()
        .find(|&g| dst.doubled.theta().apply(f[g.index()]) != f[src.doubled.theta().apply(g).index()])
        .map(|g| src.group().literal(g));
    CheckResult::from_witness("group map equivariant", witness)
}

/// For every triple `i < j < k`: `π_{j,k} ∘ π_{i,j} = π_{i,k}` where each
/// `π` is the extension of the directly defined group map, plus
/// intertwining for the long composite.
pub fn triple_compatibility(
    stages: &[TowerStage],
    direct: impl Fn(usize, usize) -> Result<Vec<Elem>>,
) -> Result<Report> {
    let mut r = Report::new();
    let n = stages.len();
    let mut pairs = std::collections::BTreeMap::new();
    for i in 0..n {
        for k in i + 1..n {
            pairs.insert((i, k), ConnectingPair::new(&stages[i], &stages[k], direct(i, k)?)?);
        }
    }
    for i in 0..n {
        for k in i + 2..n {
            let long = &pairs[&(i, k)];
            let tag = format!("{}→{}", stages[i].name, stages[k].name);
            let c = check_intertwining(
                &stages[i].coaction,
                &stages[k].coaction,
                &long.rho,
                &long.pi,
                &stages[i].doubled,
            );
            r.push(c.with_stage(tag.clone()));
            for j in i + 1..k {
                let composite = pairs[&(i, j)].pi.then(&pairs[&(j, k)].pi);
                let witness = composite
                    .first_difference(&long.pi)
                    .map(|t| stages[i].doubled.label_literal(&t).to_string());
                r.push(
                    CheckResult::from_witness("triple compatibility", witness)
                        .with_stage(format!("{}→{}→{}", stages[i].name, stages[j].name, stages[k].name))
                        .with_note(UNIQUENESS_NOTE),
                );
            }
        }
    }
    Ok(r)
}
