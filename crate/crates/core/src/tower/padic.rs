use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::stage::{equivariance_check, triple_compatibility, ConnectingPair, TowerStage};
use crate::error::{Error, Result};
use crate::filtration::wordlength_partition;
use crate::perm::{Elem, FiniteGroup, GeneratingSet, GroupAutomorphism, LengthFunction, LengthKind};
use crate::report::{CheckResult, Report};

pub const PADIC_PRIMES: [u64; 4] = [2, 3, 5, 7];
pub const PADIC_MAX_ORDER: u64 = 400;

/// Stages `ℤ/pⁿ` (`n = 1..=stages`) and connecting pairs for `x ↦ px`.
#[derive(Clone, Debug)]
pub struct PadicTower {
    pub p: u64,
    pub stages: Vec<TowerStage>,
    pub pairs: Vec<ConnectingPair>,
}

/// `ĵ: ℤ/pⁿ → ℤ/pᵐ`, `x ↦ p^{m−n}·x`, tabulated.
pub fn padic_map(p: u64, n: u32, m: u32) -> Vec<Elem> {
    let (src, dst) = (p.pow(n), p.pow(m));
    let factor = p.pow(m - n);
    (0..src).map(|x| Elem(((x * factor) % dst) as u32)).collect()
}

pub fn padic_tower(p: u64, stages: u32) -> Result<PadicTower> {
    if !PADIC_PRIMES.contains(&p) {
        return Err(Error::InvalidArgument(format!("p must be one of {PADIC_PRIMES:?}, got {p}")));
    }
    if stages == 0 {
        return Err(Error::InvalidArgument("at least one stage is required".into()));
    }
    let top = p.checked_pow(stages).unwrap_or(u64::MAX);
    if top > PADIC_MAX_ORDER {
        return Err(Error::SizeGuard {
            what: format!("p^stages for p={p}"),
            actual: top.min(usize::MAX as u64) as usize,
            limit: PADIC_MAX_ORDER as usize,
        });
    }
    let mut built = Vec::new();
    for n in 1..=stages {
        let g = Arc::new(FiniteGroup::cyclic(p.pow(n))?);
        let part = wordlength_partition(g.clone(), &GeneratingSet::plus_minus_one(&g)?)?;
        let theta = GroupAutomorphism::inverse(&g)?;
        built.push(TowerStage::new(n as usize, format!("Z/{}", p.pow(n)), part, &theta)?);
    }
    let pairs = built
        .windows(2)
        .map(|w| ConnectingPair::new(&w[0], &w[1], padic_map(p, w[0].level as u32, w[1].level as u32)))
        .collect::<Result<_>>()?;
    Ok(PadicTower {
        p,
        stages: built,
        pairs,
    })
}

/// Whenever `g, g′` have equal word length, so do their images.
pub fn equal_length_check(src: &FiniteGroup, dst: &FiniteGroup, f: &[Elem]) -> Result<CheckResult> {
    let ls = LengthFunction::compute(src, LengthKind::Bfs(GeneratingSet::plus_minus_one(src)?))?;
    let ld = LengthFunction::compute(dst, LengthKind::Bfs(GeneratingSet::plus_minus_one(dst)?))?;
    let mut images: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
    for g in src.elements() {
        images.entry(ls.of(g)).or_default().insert(ld.of(f[g.index()]));
    }
    let witness = images.iter().find(|(_, s)| s.len() > 1).map(|(l, s)| {
        format!("length {l} maps to lengths {s:?}")
    });
    Ok(CheckResult::from_witness("equal word length preserved", witness))
}

impl PadicTower {
    pub fn name(&self) -> String {
        format!("padic-{}", self.p)
    }

    pub fn verify(&self) -> Result<Report> {
        let tower = self.name();
        let mut out = Report::new();
        for s in &self.stages {
            out.extend(s.verify().tag(&tower, &s.name).entries);
        }
        for (pair, w) in self.pairs.iter().zip(self.stages.windows(2)) {
            let (src, dst) = (&w[0], &w[1]);
            let stage = format!("{}→{}", src.name, dst.name);
            let mut r = Report::new();
            let one = pair.group_map[1];
            r.push(CheckResult::from_witness(
                "iota on the generator",
                (one != Elem(self.p as u32)).then(|| {
                    format!("λ1 ↦ {}", dst.group().literal(one))
                }),
            ));
            r.push(equivariance_check(src, dst, &pair.group_map));
            r.push(equal_length_check(src.group(), dst.group(), &pair.group_map)?);
            r.extend(pair.verify(src, dst).entries);
            out.extend(r.tag(&tower, &stage).entries);
        }
        let p = self.p;
        let levels: Vec<u32> = self.stages.iter().map(|s| s.level as u32).collect();
        let triples = triple_compatibility(&self.stages, |i, k| Ok(padic_map(p, levels[i], levels[k])))?;
        for mut e in triples.entries {
            e.tower = Some(tower.clone());
            out.push(e);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iota_for_p3() {
        let m = padic_map(3, 1, 2);
        assert_eq!(m, vec![Elem(0), Elem(3), Elem(6)]);
        let g9 = FiniteGroup::cyclic(9).unwrap();
        let l = LengthFunction::compute(&g9, LengthKind::Bfs(GeneratingSet::plus_minus_one(&g9).unwrap())).unwrap();
        assert_eq!((l.of(Elem(3)), l.of(Elem(6))), (3, 3));
    }

    #[test]
    fn guard_and_prime_checks() {
        assert!(matches!(padic_tower(3, 6), Err(Error::SizeGuard { .. })));
        assert!(matches!(padic_tower(4, 2), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn equal_lengths_exhaustive_small() {
        for p in [2u64, 3, 5] {
            for n in 1..=3u32 {
                let src = FiniteGroup::cyclic(p.pow(n)).unwrap();
                let dst = FiniteGroup::cyclic(p.pow(n + 1)).unwrap();
                let f = padic_map(p, n, n + 1);
                // oracle: lengths min(x, q−x) and the pairwise statement itself
                let len = |x: u64, q: u64| x.min(q - x);
                for a in 0..p.pow(n) {
                    for b in 0..p.pow(n) {
                        if len(a, p.pow(n)) == len(b, p.pow(n)) {
                            assert_eq!(
                                len(f[a as usize].0 as u64, p.pow(n + 1)),
                                len(f[b as usize].0 as u64, p.pow(n + 1))
                            );
                        }
                    }
                }
                assert!(equal_length_check(&src, &dst, &f).unwrap().passed());
            }
        }
    }

    #[test]
    fn non_padic_map_breaks_length_check() {
        // x ↦ 2x into ℤ/9 from ℤ/3 is not even a homomorphism, but the
        // length check alone must still see lengths 1 and 1 ↦ 2 and 4
        let src = FiniteGroup::cyclic(3).unwrap();
        let dst = FiniteGroup::cyclic(9).unwrap();
        let f = vec![Elem(0), Elem(2), Elem(5)];
        assert!(equal_length_check(&src, &dst, &f).unwrap().failed());
    }

    #[test]
    fn p2_tower_passes() {
        let t = padic_tower(2, 3).unwrap();
        let r = t.verify().unwrap();
        assert!(!r.any_failed(), "{r}");
        assert!(r.find("triple compatibility").is_some());
    }
}
