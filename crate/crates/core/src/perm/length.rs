use std::collections::VecDeque;

use super::group::{Elem, FiniteGroup, GroupKind};
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// A symmetric generating subset (`s ∈ S ⇒ s⁻¹ ∈ S`, `e ∉ S`), kept in the
/// input order so that breadth-first traversal is reproducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingSet {
    gens: Vec<Elem>,
}

impl GeneratingSet {
    pub fn new(group: &FiniteGroup, gens: Vec<Elem>) -> Result<Self> {
        for &s in &gens {
            if !group.contains(s) {
                return Err(Error::InvalidArgument(format!("{s:?} is not a group element")));
            }
            if s == Elem::IDENTITY {
                return Err(Error::InvalidArgument(
                    "generating set must not contain the identity".into(),
                ));
            }
            if !gens.contains(&group.inv(s)) {
                return Err(Error::InvalidArgument(format!(
                    "generating set is not symmetric: inverse of {} missing",
                    group.literal(s)
                )));
            }
        }
        Ok(GeneratingSet { gens })
    }

    /// `{1, l−1}` in ℤ/l (just `{1}` when l = 2, empty when l = 1).
    pub fn plus_minus_one(group: &FiniteGroup) -> Result<Self> {
        let l = group
            .modulus()
            .ok_or_else(|| Error::InvalidArgument("±1 generators need a cyclic group".into()))?;
        let mut gens = Vec::new();
        if l > 1 {
            gens.push(Elem(1));
        }
        if l > 2 {
            gens.push(Elem((l - 1) as u32));
        }
        Self::new(group, gens)
    }

    /// Nearest-neighbour transpositions `s₁..sₙ₋₁`.
    pub fn adjacent_transpositions(group: &FiniteGroup) -> Result<Self> {
        if group.ground().is_none() {
            return Err(Error::InvalidArgument(
                "adjacent transpositions need a symmetric group".into(),
            ));
        }
        Self::new(group, group.standard_generators())
    }

    /// All transpositions, ordered by their pair of points.
    pub fn all_transpositions(group: &FiniteGroup) -> Result<Self> {
        let ground = group.ground().ok_or_else(|| {
            Error::InvalidArgument("transpositions need a symmetric group".into())
        })?;
        let mut gens = Vec::new();
        for (i, &a) in ground.iter().enumerate() {
            for &b in &ground[i + 1..] {
                let t = Permutation::transposition(ground.to_vec(), a, b)?;
                gens.push(group.elem_of_perm(&t).expect("transposition is a group element"));
            }
        }
        Self::new(group, gens)
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }
}

/// Cayley-graph distances from the identity for every element.
pub fn bfs_lengths(group: &FiniteGroup, s: &GeneratingSet) -> Result<Vec<u32>> {
    let mut dist = vec![u32::MAX; group.order()];
    dist[0] = 0;
    let mut queue = VecDeque::from([Elem::IDENTITY]);
    while let Some(g) = queue.pop_front() {
        for &t in s.generators() {
            let h = group.mul(g, t);
            if dist[h.index()] == u32::MAX {
                dist[h.index()] = dist[g.index()] + 1;
                queue.push_back(h);
            }
        }
    }
    if let Some(i) = dist.iter().position(|&d| d == u32::MAX) {
        return Err(Error::NotGenerating {
            coset: format!("{}·⟨S⟩", group.literal(Elem(i as u32))),
        });
    }
    Ok(dist)
}

/// Graph distance from `e` to `g` in the Cayley graph of `(G, S)`.
pub fn word_length_bfs(group: &FiniteGroup, s: &GeneratingSet, g: Elem) -> Result<u32> {
    Ok(bfs_lengths(group, s)?[g.index()])
}

/// Which word length is meant; every length-taking API names it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LengthKind {
    Bfs(GeneratingSet),
    /// Adjacent transpositions (inversion count).
    Coxeter,
    /// All transpositions (Σ cycle length − 1).
    AllTranspositions,
}

/// Tabulated word-length function of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthFunction {
    pub kind: LengthKind,
    values: Vec<u32>,
}

impl LengthFunction {
    pub fn compute(group: &FiniteGroup, kind: LengthKind) -> Result<Self> {
        let values = match &kind {
            LengthKind::Bfs(s) => bfs_lengths(group, s)?,
            LengthKind::Coxeter | LengthKind::AllTranspositions => {
                if !matches!(group.kind(), GroupKind::Symmetric(_)) {
                    return Err(Error::InvalidArgument(
                        "permutation lengths need a symmetric group".into(),
                    ));
                }
                group
                    .elements()
                    .map(|g| {
                        let p = group.perm(g).expect("symmetric group element");
                        if kind == LengthKind::Coxeter {
                            p.coxeter_length() as u32
                        } else {
                            p.transposition_length() as u32
                        }
                    })
                    .collect()
            }
        };
        Ok(LengthFunction { kind, values })
    }

    pub fn of(&self, g: Elem) -> u32 {
        self.values[g.index()]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn max(&self) -> u32 {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutation::interval;
    use proptest::prelude::*;

    #[test]
    fn cycle_distances() {
        let z9 = FiniteGroup::cyclic(9).unwrap();
        let s = GeneratingSet::plus_minus_one(&z9).unwrap();
        assert_eq!(word_length_bfs(&z9, &s, Elem(3)).unwrap(), 3);
        assert_eq!(word_length_bfs(&z9, &s, Elem(0)).unwrap(), 0);
        for t in 0..9u32 {
            assert_eq!(word_length_bfs(&z9, &s, Elem(t)).unwrap(), t.min(9 - t));
        }
    }

    #[test]
    fn longest_element_of_s3() {
        let s3 = FiniteGroup::symmetric(interval(1, 3)).unwrap();
        let s = GeneratingSet::adjacent_transpositions(&s3).unwrap();
        let w0: Permutation = "perm{ground=1..3; (1 3)}".parse().unwrap();
        let g = s3.elem_of_perm(&w0).unwrap();
        assert_eq!(word_length_bfs(&s3, &s, g).unwrap(), 3);
        // one-line form [3,2,1] has three inversions
        assert_eq!(w0.coxeter_length(), 3);
    }

    #[test]
    fn non_generating_set_reports_coset() {
        let z9 = FiniteGroup::cyclic(9).unwrap();
        let s = GeneratingSet::new(&z9, vec![Elem(3), Elem(6)]).unwrap();
        match bfs_lengths(&z9, &s) {
            Err(Error::NotGenerating { coset }) => assert!(coset.starts_with("c9:1")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(GeneratingSet::new(&z9, vec![Elem(1)]).is_err());
        assert!(GeneratingSet::new(&z9, vec![Elem(0)]).is_err());
    }

    #[test]
    fn closed_forms_match_bfs_up_to_s6() {
        for n in 1..=6 {
            let g = FiniteGroup::symmetric(interval(1, n)).unwrap();
            let adj = bfs_lengths(&g, &GeneratingSet::adjacent_transpositions(&g).unwrap()).unwrap();
            let all = bfs_lengths(&g, &GeneratingSet::all_transpositions(&g).unwrap()).unwrap();
            let cox = LengthFunction::compute(&g, LengthKind::Coxeter).unwrap();
            let tr = LengthFunction::compute(&g, LengthKind::AllTranspositions).unwrap();
            assert_eq!(cox.values(), adj.as_slice(), "S{n} Coxeter");
            assert_eq!(tr.values(), all.as_slice(), "S{n} transpositions");
        }
    }

    fn s5_lengths() -> (FiniteGroup, Vec<LengthFunction>) {
        let g = FiniteGroup::symmetric(interval(1, 5)).unwrap();
        let fs = vec![
            LengthFunction::compute(&g, LengthKind::Coxeter).unwrap(),
            LengthFunction::compute(&g, LengthKind::AllTranspositions).unwrap(),
        ];
        (g, fs)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn length_axioms(a in 0u32..120, b in 0u32..120) {
            thread_local!(static DATA: (FiniteGroup, Vec<LengthFunction>) = s5_lengths());
            DATA.with(|(g, fs)| {
                for f in fs {
                    let (a, b) = (Elem(a), Elem(b));
                    assert_eq!(f.of(a), f.of(g.inv(a)));
                    assert!(f.of(g.mul(a, b)) <= f.of(a) + f.of(b));
                    assert_eq!(f.of(Elem::IDENTITY), 0);
                }
            });
        }
    }
}
