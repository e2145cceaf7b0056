use std::sync::Arc;

use serde::Serialize;

use super::stage::{equivariance_check, group_map_check, triple_compatibility, ConnectingPair, TowerStage};
use crate::doubling::{double, grouplike_binomial, BinomialScan, DoubledHopf};
use crate::error::{Error, Result};
use crate::filtration::Partition;
use crate::filtration::BlockIndex;
use crate::hopf::GroupAlgebra;
use crate::perm::{
    interval, kappa_even, signed_ground, Center, Elem, FiniteGroup, GroupAutomorphism, LengthFunction,
    LengthKind, Parity,
};
use crate::report::{CheckResult, Report};
use crate::scalar::Scalar;

pub const SYMMETRIC_TOWER_MAX_N: usize = 6;

/// Ground set of `Sₙ` in the towers: `{−m..m}` for `n = 2m+1`, `±{1..k}`
/// for `n = 2k`.
pub fn tower_ground(n: usize) -> Vec<i64> {
    let h = (n / 2) as i64;
    if n % 2 == 1 {
        interval(-h, h)
    } else {
        signed_ground(h)
    }
}

pub fn tower_group(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    Ok(Arc::new(FiniteGroup::symmetric(tower_ground(n))?))
}

/// Group map induced by the inclusion of ground sets.
pub fn inclusion_map(src: &FiniteGroup, dst: &FiniteGroup) -> Result<Vec<Elem>> {
    let ground = dst
        .ground()
        .ok_or_else(|| Error::InvalidArgument("inclusion needs symmetric groups".into()))?
        .to_vec();
    src.elements()
        .map(|g| {
            let p = src
                .perm(g)
                .ok_or_else(|| Error::InvalidArgument("inclusion needs symmetric groups".into()))?
                .extend(ground.clone())?;
            dst.elem_of_perm(&p)
                .ok_or_else(|| Error::GroundMismatch(format!("{p} not in {}", dst.name())))
        })
        .collect()
}

fn coxeter_partition(g: Arc<FiniteGroup>) -> Result<Partition> {
    let len = LengthFunction::compute(&g, LengthKind::Coxeter)?;
    Partition::from_key(g, |x| BlockIndex::Level(len.of(x)))
}

fn parity_of(n: usize) -> Parity {
    if n % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Stages `Sₙ` of one parity with the flip θₙ and the Coxeter filtration,
/// connected by `φₙ: Sₙ → Sₙ₊₂`.
#[derive(Clone, Debug)]
pub struct SymmetricTower {
    pub parity: Parity,
    pub stages: Vec<TowerStage>,
    pub pairs: Vec<ConnectingPair>,
}

pub fn symmetric_tower(parity: Parity, max_n: usize) -> Result<SymmetricTower> {
    if max_n > SYMMETRIC_TOWER_MAX_N {
        return Err(Error::SizeGuard {
            what: "symmetric tower degree".into(),
            actual: max_n,
            limit: SYMMETRIC_TOWER_MAX_N,
        });
    }
    let first = match parity {
        Parity::Odd => 3,
        Parity::Even => 2,
    };
    let mut stages = Vec::new();
    for n in (first..=max_n).step_by(2) {
        let g = tower_group(n)?;
        let theta = GroupAutomorphism::flip(&g)?;
        stages.push(TowerStage::new(n, format!("S{n}"), coxeter_partition(g)?, &theta)?);
    }
    if stages.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "no {parity:?} stage of degree ≤ {max_n}"
        )));
    }
    let pairs = stages
        .windows(2)
        .map(|w| ConnectingPair::new(&w[0], &w[1], inclusion_map(w[0].group(), w[1].group())?))
        .collect::<Result<_>>()?;
    Ok(SymmetricTower {
        parity,
        stages,
        pairs,
    })
}

/// `θ` agrees with conjugation by the reflection of the ground set on
/// every standard generator.
fn flip_is_reflection(stage: &TowerStage) -> Result<CheckResult> {
    let g = stage.group();
    let kappa = match parity_of(stage.level) {
        Parity::Odd => GroupAutomorphism::reflection_conjugation(g, Center::Zero)?,
        Parity::Even => kappa_even(g)?,
    };
    let witness = g
        .standard_generators()
        .into_iter()
        .find(|&s| kappa.apply(s) != stage.doubled.theta().apply(s))
        .map(|s| g.literal(s));
    Ok(CheckResult::from_witness("flip equals reflection on generators", witness))
}

/// `f(sᵢ) = sᵢ₊₁` for every standard generator.
fn shift_on_generators(src: &FiniteGroup, dst: &FiniteGroup, f: &[Elem]) -> CheckResult {
    let witness = (1..src.ground().map_or(0, <[i64]>::len)).find_map(|i| {
        let s = src.adjacent_transposition(i).expect("generator");
        (dst.adjacent_transposition(i + 1) != Some(f[s.index()])).then(|| {
            format!("s{i} ↦ {}", dst.literal(f[s.index()]))
        })
    });
    CheckResult::from_witness("phi shifts generators", witness)
}

/// Elements of length one go to elements of length one.
pub fn length_one_check(src: &FiniteGroup, dst: &FiniteGroup, f: &[Elem]) -> Result<CheckResult> {
    let (ls, ld) = (
        LengthFunction::compute(src, LengthKind::Coxeter)?,
        LengthFunction::compute(dst, LengthKind::Coxeter)?,
    );
    let witness = src
        .elements()
        .filter(|&g| ls.of(g) == 1)
        .find(|&g| ld.of(f[g.index()]) != 1)
        .map(|g| {
            format!(
                "{} ↦ {} of length {}",
                src.literal(g),
                dst.literal(f[g.index()]),
                ld.of(f[g.index()])
            )
        });
    Ok(CheckResult::from_witness("length one preserved", witness))
}

impl SymmetricTower {
    pub fn name(&self) -> String {
        match self.parity {
            Parity::Odd => "symmetric-odd".into(),
            Parity::Even => "symmetric-even".into(),
        }
    }

    /// Per-stage checks, per-pair checks and triple compatibility.
    pub fn verify(&self) -> Result<Report> {
        let tower = self.name();
        let mut out = Report::new();
        for s in &self.stages {
            let mut r = s.verify();
            r.push(flip_is_reflection(s)?);
            out.extend(r.tag(&tower, &s.name).entries);
        }
        for (pair, w) in self.pairs.iter().zip(self.stages.windows(2)) {
            out.extend(self.pair_report(pair, &w[0], &w[1])?.tag(&tower, &format!("{}→{}", w[0].name, w[1].name)).entries);
        }
        let stages = &self.stages;
        let triples = triple_compatibility(stages, |i, k| inclusion_map(stages[i].group(), stages[k].group()))?;
        for mut e in triples.entries {
            e.tower = Some(tower.clone());
            out.push(e);
        }
        Ok(out)
    }

    /// Checks on one connecting pair `(φ, ψ)`.
    pub fn pair_report(&self, pair: &ConnectingPair, src: &TowerStage, dst: &TowerStage) -> Result<Report> {
        let mut r = Report::new();
        r.push(shift_on_generators(src.group(), dst.group(), &pair.group_map));
        r.push(equivariance_check(src, dst, &pair.group_map));
        r.push(length_one_check(src.group(), dst.group(), &pair.group_map)?);
        r.extend(pair.verify(src, dst).entries);
        Ok(r)
    }
}

/// The connecting step `Sₙ → Sₙ₊₂` alone: φ equivariance, length one,
/// hopf and coaction compatibility of `(φ, ψ)`. Skips per-stage checks.
pub fn connecting_step_check(n: usize) -> Result<Report> {
    if n + 2 > SYMMETRIC_TOWER_MAX_N {
        return Err(Error::SizeGuard {
            what: "target degree".into(),
            actual: n + 2,
            limit: SYMMETRIC_TOWER_MAX_N,
        });
    }
    let mk = |m: usize| -> Result<TowerStage> {
        let g = tower_group(m)?;
        let theta = GroupAutomorphism::flip(&g)?;
        TowerStage::new(m, format!("S{m}"), coxeter_partition(g)?, &theta)
    };
    let (src, dst) = (mk(n)?, mk(n + 2)?);
    let pair = ConnectingPair::new(&src, &dst, inclusion_map(src.group(), dst.group())?)?;
    let tower = SymmetricTower {
        parity: parity_of(n),
        stages: vec![],
        pairs: vec![],
    };
    let name = tower.name();
    Ok(tower
        .pair_report(&pair, &src, &dst)?
        .tag(&name, &format!("{}→{}", src.name, dst.name)))
}

/// `γ₂ₖ: S₂ₖ → S₂ₖ₊₁` from `±{1..k} ⊂ {−k..k}`: injective equivariant
/// homomorphism that sends the middle generator to a Coxeter-length-3
/// transposition.
pub fn gamma_embedding_check(k: usize) -> Result<Report> {
    if k == 0 || 2 * k + 1 > 7 {
        return Err(Error::InvalidArgument(format!("need 1 ≤ k and 2k+1 ≤ 7, got k={k}")));
    }
    let src = tower_group(2 * k)?;
    let dst = tower_group(2 * k + 1)?;
    let f = inclusion_map(&src, &dst)?;
    let mut r = Report::new();
    r.push(group_map_check(&src, &dst, &f));
    let (ts, td) = (GroupAutomorphism::flip(&src)?, GroupAutomorphism::flip(&dst)?);
    let witness = src
        .elements()
        .find(|&g| td.apply(f[g.index()]) != f[ts.apply(g).index()])
        .map(|g| src.literal(g));
    r.push(CheckResult::from_witness("gamma equivariant", witness));

    let ld = LengthFunction::compute(&dst, LengthKind::Coxeter)?;
    let mid = src.adjacent_transposition(k).expect("middle generator");
    let image = f[mid.index()];
    let len = ld.of(image);
    let expected = dst
        .elem_of_perm(&crate::perm::Permutation::transposition(dst.ground().expect("ground").to_vec(), -1, 1)?)
        .expect("transposition");
    r.push(CheckResult::from_witness(
        "gamma middle generator is (-1 1) of length 3",
        (image != expected || len != 3).then(|| format!("{} of length {len}", dst.literal(image))),
    ));
    let lone = length_one_check(&src, &dst, &f)?;
    r.push(match lone.witness {
        Some(w) => CheckResult::pass("gamma does not preserve length one").with_note(w),
        None => CheckResult::fail("gamma does not preserve length one", "every length-one element kept length one"),
    });
    Ok(r.tag("gamma", &format!("S{}→S{}", 2 * k, 2 * k + 1)))
}

/// Binomial group-like scan: for the doubling of `ℂ[Sₙ₊₁]` no
/// `ξ(sₖ) + μη(sₖ)` is group-like; for the doubling of `ℂ[Sₙ]` exactly
/// `k = n/2` admits `μ = ±1`.
#[derive(Clone, Debug, Serialize)]
pub struct NonexistenceScan {
    pub n: usize,
    pub scans: Vec<BinomialScan>,
    pub control: Vec<BinomialScan>,
}

fn flip_double(n: usize) -> Result<DoubledHopf> {
    let g = Arc::new(FiniteGroup::symmetric(interval(1, n as i64))?);
    let theta = GroupAutomorphism::flip(&g)?;
    double(&GroupAlgebra::new(g), &theta)
}

fn binomial_scans(d: &DoubledHopf) -> Vec<BinomialScan> {
    let degree = d.group().ground().map_or(0, <[i64]>::len);
    (1..degree)
        .map(|k| {
            let s = d.group().adjacent_transposition(k).expect("generator");
            grouplike_binomial(d, s, s)
        })
        .collect()
}

pub fn nonexistence_scan(n: usize) -> Result<NonexistenceScan> {
    if !(4..=6).contains(&n) || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!("n must be 4 or 6, got {n}")));
    }
    Ok(NonexistenceScan {
        n,
        scans: binomial_scans(&flip_double(n + 1)?),
        control: binomial_scans(&flip_double(n)?),
    })
}

impl NonexistenceScan {
    pub fn report(&self) -> Report {
        let mut r = Report::new();
        let n = self.n;
        for (k, s) in self.scans.iter().enumerate() {
            let k = k + 1;
            let c = if s.is_empty() {
                CheckResult::pass(format!("no group-like binomial for k={k}"))
                    .with_note(s.witness.clone().unwrap_or_default())
            } else {
                CheckResult::fail(format!("no group-like binomial for k={k}"), format!("{:?}", s.solutions))
            };
            r.push(c.with_tower("nonexistence").with_stage(format!("S{}", n + 1)));
        }
        let pm_one = vec![-Scalar::ONE, Scalar::ONE];
        for (k, s) in self.control.iter().enumerate() {
            let k = k + 1;
            let c = if k == n / 2 {
                let ok = s.finite() == Some(pm_one.as_slice());
                CheckResult::from_witness(
                    format!("control admits k={k} with mu=±1"),
                    (!ok).then(|| format!("{:?}", s.solutions)),
                )
            } else {
                CheckResult::from_witness(
                    format!("control rejects k={k}"),
                    (!s.is_empty()).then(|| format!("{:?}", s.solutions)),
                )
            };
            r.push(c.with_tower("nonexistence").with_stage(format!("S{n}")));
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::is_grouplike;
    use crate::doubling::Tagged;
    use crate::linalg::Vector;

    #[test]
    fn grounds() {
        assert_eq!(tower_ground(5), vec![-2, -1, 0, 1, 2]);
        assert_eq!(tower_ground(4), vec![-2, -1, 1, 2]);
    }

    #[test]
    fn phi3_on_generators() {
        let (a, b) = (tower_group(3).unwrap(), tower_group(5).unwrap());
        let f = inclusion_map(&a, &b).unwrap();
        assert_eq!(f[a.adjacent_transposition(1).unwrap().index()], b.adjacent_transposition(2).unwrap());
        assert!(shift_on_generators(&a, &b, &f).passed());
    }

    #[test]
    fn odd_tower_small() {
        let t = symmetric_tower(Parity::Odd, 5).unwrap();
        let r = t.verify().unwrap();
        assert!(!r.any_failed(), "{r}");
        assert!(r.find("coaction intertwining").unwrap().passed());
    }

    #[test]
    fn even_tower_small() {
        let t = symmetric_tower(Parity::Even, 4).unwrap();
        let r = t.verify().unwrap();
        assert!(!r.any_failed(), "{r}");
        let h = t.stages[1].doubled.haar();
        assert_eq!(h.value(&Tagged::Xi(Elem::IDENTITY)), Scalar::ratio(1, 2));
    }

    #[test]
    fn tower_guard() {
        assert!(matches!(symmetric_tower(Parity::Odd, 7), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn gamma_cases() {
        for k in 1..=2 {
            let r = gamma_embedding_check(k).unwrap();
            assert!(!r.any_failed(), "{r}");
        }
        let r = gamma_embedding_check(1).unwrap();
        let e = r.find("gamma does not preserve length one").unwrap();
        assert!(e.note.as_deref().unwrap().contains("length 3"));
    }

    #[test]
    fn gamma_of_s2_is_s1s2s1() {
        let (a, b) = (tower_group(2).unwrap(), tower_group(3).unwrap());
        let f = inclusion_map(&a, &b).unwrap();
        let (s1, s2) = (b.adjacent_transposition(1).unwrap(), b.adjacent_transposition(2).unwrap());
        assert_eq!(f[1], b.mul(s1, b.mul(s2, s1)));
    }

    #[test]
    fn nonexistence_four() {
        let s = nonexistence_scan(4).unwrap();
        assert_eq!(s.scans.len(), 4);
        assert!(s.scans.iter().all(BinomialScan::is_empty));
        let r = s.report();
        assert!(!r.any_failed(), "{r}");
    }

    #[test]
    fn control_element_is_grouplike() {
        let d = flip_double(4).unwrap();
        let s2 = d.group().adjacent_transposition(2).unwrap();
        let c4 = Vector::from_terms([(Tagged::Xi(s2), Scalar::ONE), (Tagged::Eta(s2), Scalar::ONE)]);
        assert!(is_grouplike(&d, &c4));
    }

    #[test]
    fn nonexistence_rejects_odd() {
        assert!(nonexistence_scan(5).is_err());
    }
}
