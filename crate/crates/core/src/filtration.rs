//! Partitions of finite groups, the orthogonal filtrations of `ℂ[Γ]` they
//! induce, and exact checks for filtration preservation and faithfulness
//! of coactions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::doubling::{Coaction, DoubledHopf, Tagged};
use crate::error::{Error, Result};
use crate::hopf::{canonical_trace, Functional, GroupAlgebra, HopfAlgebra};
use crate::linalg::{span_rank, Echelon, Vector};
use crate::perm::{bfs_lengths, interval, signed_ground, Elem, FiniteGroup, GeneratingSet, Parity};

/// Index of a partition block. Word-length partitions use levels; the
/// `F`/`F′` partitions of finitary permutations use pairs `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockIndex {
    Level(u32),
    Pair(u32, u32),
}

impl BlockIndex {
    pub fn is_zero(self) -> bool {
        matches!(self, BlockIndex::Level(0) | BlockIndex::Pair(0, 0))
    }
}

impl fmt::Display for BlockIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockIndex::Level(a) => write!(f, "{a}"),
            BlockIndex::Pair(a, b) => write!(f, "{a},{b}"),
        }
    }
}

/// A partition of a finite group into labelled blocks. Disjointness and
/// covering are enforced on construction; whether the zero block is `{e}`
/// is left to [`Partition::identity_singleton`] so that malformed
/// filtrations can still be built and rejected downstream.
#[derive(Clone, Debug)]
pub struct Partition {
    group: Arc<FiniteGroup>,
    blocks: BTreeMap<BlockIndex, Vec<Elem>>,
}

impl Partition {
    pub fn new(group: Arc<FiniteGroup>, blocks: BTreeMap<BlockIndex, Vec<Elem>>) -> Result<Self> {
        let mut owner: Vec<Option<BlockIndex>> = vec![None; group.order()];
        for (&i, block) in &blocks {
            if block.is_empty() {
                return Err(Error::NotAPartition(format!("block {i} is empty")));
            }
            for &g in block {
                if !group.contains(g) {
                    return Err(Error::NotAPartition(format!("{g:?} is not in {}", group.name())));
                }
                if let Some(j) = owner[g.index()] {
                    return Err(Error::NotAPartition(format!(
                        "{} lies in blocks {j} and {i}",
                        group.literal(g)
                    )));
                }
                owner[g.index()] = Some(i);
            }
        }
        if let Some(g) = owner.iter().position(Option::is_none) {
            return Err(Error::NotAPartition(format!(
                "{} is not covered",
                group.literal(Elem(g as u32))
            )));
        }
        let blocks = blocks
            .into_iter()
            .map(|(i, mut b)| {
                b.sort();
                (i, b)
            })
            .collect();
        Ok(Partition { group, blocks })
    }

    /// Groups elements by a key; the identity's key becomes the zero block
    /// only if the key function says so.
    pub fn from_key(group: Arc<FiniteGroup>, key: impl Fn(Elem) -> BlockIndex) -> Result<Self> {
        let mut blocks: BTreeMap<BlockIndex, Vec<Elem>> = BTreeMap::new();
        for g in group.elements() {
            blocks.entry(key(g)).or_default().push(g);
        }
        Self::new(group, blocks)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn blocks(&self) -> &BTreeMap<BlockIndex, Vec<Elem>> {
        &self.blocks
    }

    pub fn block(&self, i: BlockIndex) -> Option<&[Elem]> {
        self.blocks.get(&i).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, g: Elem) -> BlockIndex {
        *self
            .blocks
            .iter()
            .find(|(_, b)| b.binary_search(&g).is_ok())
            .expect("partition covers the group")
            .0
    }

    /// Block sizes in index order.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.values().map(Vec::len).collect()
    }

    /// The zero block exists and is exactly `{e}`.
    pub fn identity_singleton(&self) -> bool {
        self.blocks
            .iter()
            .find(|(i, _)| i.is_zero())
            .is_some_and(|(_, b)| b == &[Elem::IDENTITY])
    }

    /// First block not mapped onto itself by `f`, if any.
    pub fn unstable_block(&self, f: impl Fn(Elem) -> Elem) -> Option<(BlockIndex, Elem)> {
        for (&i, block) in &self.blocks {
            for &g in block {
                if block.binary_search(&f(g)).is_err() {
                    return Some((i, g));
                }
            }
        }
        None
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.blocks.len()))?;
        for (i, block) in &self.blocks {
            let lits: Vec<String> = block.iter().map(|&g| self.group.literal(g)).collect();
            m.serialize_entry(&i.to_string(), &lits)?;
        }
        m.end()
    }
}

/// Level sets of the word length for `s`.
pub fn wordlength_partition(group: Arc<FiniteGroup>, s: &GeneratingSet) -> Result<Partition> {
    let lengths = bfs_lengths(&group, s)?;
    Partition::from_key(group, |g| BlockIndex::Level(lengths[g.index()]))
}

/// Ground set of the truncation `n`: `{−n..n}` for the odd mode, `±{1..n}`
/// for the even one.
pub fn truncation_ground(mode: Parity, n: usize) -> Vec<i64> {
    match mode {
        Parity::Odd => interval(-(n as i64), n as i64),
        Parity::Even => signed_ground(n as i64),
    }
}

/// `F_{a,b}` (odd) or `F′_{a,b}` (even) restricted to the truncation `n`:
/// `a` is the transposition length and `b` the support radius.
pub fn sinfty_partition(mode: Parity, n: usize) -> Result<Partition> {
    if n == 0 {
        return Err(Error::InvalidArgument("truncation must be at least 1".into()));
    }
    let group = Arc::new(FiniteGroup::symmetric(truncation_ground(mode, n))?);
    sinfty_partition_of(group, mode)
}

/// As [`sinfty_partition`], on an already constructed symmetric group.
pub fn sinfty_partition_of(group: Arc<FiniteGroup>, mode: Parity) -> Result<Partition> {
    let mut keys = Vec::with_capacity(group.order());
    for g in group.elements() {
        let p = group
            .perm(g)
            .ok_or_else(|| Error::InvalidArgument("support radius needs a symmetric group".into()))?;
        keys.push(BlockIndex::Pair(
            p.transposition_length() as u32,
            p.support_radius(mode)? as u32,
        ));
    }
    Partition::from_key(group, |g| keys[g.index()])
}

/// Subspaces `Vᵢ ⊆ ℂ[Γ]` together with the state they are orthogonal for.
#[derive(Clone, Debug)]
pub struct OrthogonalFiltration {
    algebra: GroupAlgebra,
    state: Functional<Elem>,
    subspaces: BTreeMap<BlockIndex, Vec<Vector<Elem>>>,
}

impl OrthogonalFiltration {
    pub fn algebra(&self) -> &GroupAlgebra {
        &self.algebra
    }

    pub fn state(&self) -> &Functional<Elem> {
        &self.state
    }

    pub fn subspaces(&self) -> &BTreeMap<BlockIndex, Vec<Vector<Elem>>> {
        &self.subspaces
    }

    pub fn subspace(&self, i: BlockIndex) -> Option<&[Vector<Elem>]> {
        self.subspaces.get(&i).map(Vec::as_slice)
    }
}

/// Builds `Vᵢ = span(block i)` and verifies, against the canonical trace:
/// (1) `V₀ = ℂ1`, (2) `τ(a*b) = 0` across distinct blocks, (3) the union
/// spans the algebra. In finite dimension the span is the whole algebra, so
/// closure under `*` and products is automatic once (3) holds.
pub fn filtration_from_partition(a: &GroupAlgebra, p: &Partition) -> Result<OrthogonalFiltration> {
    if a.group() != p.group() {
        return Err(Error::InvalidArgument(
            "partition and algebra live on different groups".into(),
        ));
    }
    let g = a.group();
    let subspaces: BTreeMap<BlockIndex, Vec<Vector<Elem>>> = p
        .blocks()
        .iter()
        .map(|(&i, b)| (i, b.iter().map(|&x| Vector::basis(x)).collect()))
        .collect();

    let zero = subspaces
        .iter()
        .find(|(i, _)| i.is_zero())
        .map(|(_, v)| v.as_slice())
        .unwrap_or(&[]);
    let unit = a.unit();
    let v0_ok = span_rank(zero.iter().cloned()) == 1 && {
        let mut ech = Echelon::new();
        for v in zero {
            ech.insert(v);
        }
        ech.contains(&unit)
    };
    if !v0_ok {
        let witness = zero
            .iter()
            .find(|v| !v.labels().all(|&x| x == Elem::IDENTITY))
            .map(|v| a.format(v))
            .unwrap_or_else(|| "no zero block".into());
        return Err(Error::Filtration {
            condition: 1,
            witness: format!("V0 ≠ ℂ1: contains {witness}"),
        });
    }

    // τ(a*b) = Σ conj(a_g) b_g vanishes for disjoint supports; evaluate the
    // remaining pairs through the algebra.
    let mut by_label: HashMap<Elem, Vec<(BlockIndex, usize)>> = HashMap::new();
    for (&i, vs) in &subspaces {
        for (k, v) in vs.iter().enumerate() {
            for &x in v.labels() {
                by_label.entry(x).or_default().push((i, k));
            }
        }
    }
    let mut labels: Vec<_> = by_label.into_iter().collect();
    labels.sort_by_key(|(x, _)| *x);
    for (_, owners) in &labels {
        for (n, &(i, k)) in owners.iter().enumerate() {
            for &(j, l) in &owners[n + 1..] {
                if i == j {
                    continue;
                }
                let (u, v) = (&subspaces[&i][k], &subspaces[&j][l]);
                if !canonical_trace(&a.mul(&a.star(u), v)).is_zero() {
                    return Err(Error::Filtration {
                        condition: 2,
                        witness: format!("τ(a*b) ≠ 0 for a={} in V{i}, b={} in V{j}", a.format(u), a.format(v)),
                    });
                }
            }
        }
    }

    let rank = span_rank(subspaces.values().flatten().cloned());
    if rank != a.dim() {
        return Err(Error::Filtration {
            condition: 3,
            witness: format!("union spans {rank} of {} dimensions", g.order()),
        });
    }
    Ok(OrthogonalFiltration {
        algebra: a.clone(),
        state: a.trace(),
        subspaces,
    })
}

/// First `(block, vector)` with `α(v) ∉ Vᵢ ⊗ Q`, checked slice by slice.
pub fn filtration_violation<M>(alpha: &Coaction<Elem, M>, f: &OrthogonalFiltration) -> Option<String>
where
    M: Ord + Clone + std::hash::Hash + fmt::Debug,
{
    let a = f.algebra();
    for (&i, vs) in f.subspaces() {
        let mut ech = Echelon::new();
        for v in vs {
            ech.insert(v);
        }
        for v in vs {
            let image = alpha.apply(v);
            let mut slices: BTreeMap<M, Vec<(Elem, crate::scalar::Scalar)>> = BTreeMap::new();
            for ((x, m), c) in image.iter() {
                slices.entry(m.clone()).or_default().push((*x, c.clone()));
            }
            if let Some(bad) = slices
                .into_values()
                .map(Vector::from_terms)
                .find(|s| !ech.contains(s))
            {
                return Some(format!(
                    "{} in V{i}: slice {} leaves V{i}",
                    a.format(v),
                    a.format(&bad)
                ));
            }
        }
    }
    None
}

/// `α(Vᵢ) ⊆ Vᵢ ⊗ Q` for every block.
pub fn action_preserves_filtration<M>(alpha: &Coaction<Elem, M>, f: &OrthogonalFiltration) -> bool
where
    M: Ord + Clone + std::hash::Hash + fmt::Debug,
{
    filtration_violation(alpha, f).is_none()
}

/// Dimensions attached to the slices `(δ_k ⊗ id)α(a)` of a coaction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaithfulSpan {
    /// Unital subalgebra generated by the slices.
    pub generated: usize,
    /// Bare linear span of the slices.
    pub span: usize,
    /// Dimension of the acting algebra.
    pub total: usize,
}

impl FaithfulSpan {
    pub fn faithful(&self) -> bool {
        self.generated == self.total
    }
}

/// Faithfulness data for the doubling coaction on `ℂ[Γ]`.
pub fn action_faithful_span(d: &DoubledHopf) -> FaithfulSpan {
    let alpha: Coaction<Elem, Tagged> = d.coaction();
    FaithfulSpan {
        generated: alpha.generated_dimension(d),
        span: alpha.slice_span_dimension(),
        total: d.dim(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubling::double;
    use crate::perm::{GroupAutomorphism, LengthKind, LengthFunction};
    use proptest::prelude::*;

    fn cyclic(l: u64) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(l).unwrap())
    }

    fn literal_blocks(p: &Partition) -> Vec<Vec<String>> {
        p.blocks()
            .values()
            .map(|b| b.iter().map(|&g| p.group().literal(g)).collect())
            .collect()
    }

    #[test]
    fn z5_wordlength_blocks() {
        let g = cyclic(5);
        let p = wordlength_partition(g.clone(), &GeneratingSet::plus_minus_one(&g).unwrap()).unwrap();
        assert_eq!(
            literal_blocks(&p),
            vec![vec!["c5:0"], vec!["c5:1", "c5:4"], vec!["c5:2", "c5:3"]]
        );
        assert!(p.identity_singleton());
    }

    #[test]
    fn z2_wordlength_blocks() {
        let g = cyclic(2);
        let p = wordlength_partition(g.clone(), &GeneratingSet::plus_minus_one(&g).unwrap()).unwrap();
        assert_eq!(p.sizes(), vec![1, 1]);
    }

    #[test]
    fn s3_wordlength_sizes() {
        let g = Arc::new(FiniteGroup::symmetric(interval(1, 3)).unwrap());
        let p = wordlength_partition(g.clone(), &GeneratingSet::adjacent_transpositions(&g).unwrap()).unwrap();
        assert_eq!(p.sizes(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn non_generating_set_is_rejected() {
        let g = cyclic(6);
        let s = GeneratingSet::new(&g, vec![Elem(2), Elem(4)]).unwrap();
        assert!(matches!(
            wordlength_partition(g, &s),
            Err(Error::NotGenerating { .. })
        ));
    }

    #[test]
    fn odd_truncation_one() {
        let p = sinfty_partition(Parity::Odd, 1).unwrap();
        let f11 = p.block(BlockIndex::Pair(1, 1)).unwrap();
        assert_eq!(f11.len(), 3);
        let lits: Vec<String> = f11.iter().map(|&g| p.group().perm(g).unwrap().to_string()).collect();
        for want in ["(-1 0)", "(0 1)", "(-1 1)"] {
            assert!(lits.iter().any(|l| l.ends_with(&format!("; {want}}}"))), "{lits:?}");
        }
        assert_eq!(p.block(BlockIndex::Pair(0, 0)).unwrap(), &[Elem::IDENTITY]);
    }

    #[test]
    fn even_truncation_one() {
        let p = sinfty_partition(Parity::Even, 1).unwrap();
        assert_eq!(p.len(), 2);
        let f11 = p.block(BlockIndex::Pair(1, 1)).unwrap();
        assert_eq!(f11.len(), 1);
        assert_eq!(
            p.group().perm(f11[0]).unwrap().to_string(),
            "perm{ground=[-1,1]; (-1 1)}"
        );
    }

    #[test]
    fn sinfty_blocks_match_enumeration() {
        // oracle: count permutations by (Σ(cycle−1), max |moved point|)
        for mode in [Parity::Odd, Parity::Even] {
            for n in 1..=3 {
                let p = sinfty_partition(mode, n).unwrap();
                let g = p.group();
                let mut count: BTreeMap<(u32, u32), usize> = BTreeMap::new();
                for x in g.elements() {
                    let perm = g.perm(x).unwrap();
                    let cyc = perm.cycles();
                    let a: usize = cyc.iter().map(|c| c.len() - 1).sum();
                    let b = cyc.iter().flatten().map(|k| k.unsigned_abs()).max().unwrap_or(0);
                    *count.entry((a as u32, b as u32)).or_default() += 1;
                }
                let got: BTreeMap<(u32, u32), usize> = p
                    .blocks()
                    .iter()
                    .map(|(i, b)| match i {
                        BlockIndex::Pair(a, r) => ((*a, *r), b.len()),
                        BlockIndex::Level(_) => unreachable!(),
                    })
                    .collect();
                assert_eq!(got, count, "{mode:?} n={n}");
                assert!(p.identity_singleton());
            }
        }
    }

    #[test]
    fn reflections_preserve_sinfty_blocks() {
        for n in 1..=3 {
            let p = sinfty_partition(Parity::Odd, n).unwrap();
            let k = GroupAutomorphism::flip(p.group()).unwrap();
            assert_eq!(p.unstable_block(|g| k.apply(g)), None);
            let p = sinfty_partition(Parity::Even, n).unwrap();
            let k = crate::perm::kappa_even(p.group()).unwrap();
            assert_eq!(p.unstable_block(|g| k.apply(g)), None);
        }
    }

    #[test]
    fn overlapping_blocks_rejected() {
        let g = cyclic(3);
        let blocks = BTreeMap::from([
            (BlockIndex::Level(0), vec![Elem(0), Elem(1)]),
            (BlockIndex::Level(1), vec![Elem(1), Elem(2)]),
        ]);
        assert!(matches!(Partition::new(g, blocks), Err(Error::NotAPartition(_))));
    }

    #[test]
    fn merged_identity_block_fails_condition_one() {
        let g = cyclic(4);
        let a = GroupAlgebra::new(g.clone());
        let blocks = BTreeMap::from([
            (BlockIndex::Level(0), vec![Elem(0), Elem(2)]),
            (BlockIndex::Level(1), vec![Elem(1), Elem(3)]),
        ]);
        let p = Partition::new(g, blocks).unwrap();
        assert!(!p.identity_singleton());
        match filtration_from_partition(&a, &p) {
            Err(Error::Filtration { condition, witness }) => {
                assert_eq!(condition, 1);
                assert!(witness.contains("c4:2"), "{witness}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wordlength_filtration_is_orthogonal() {
        let g = Arc::new(FiniteGroup::symmetric(interval(1, 4)).unwrap());
        let a = GroupAlgebra::new(g.clone());
        let p = wordlength_partition(g.clone(), &GeneratingSet::adjacent_transpositions(&g).unwrap()).unwrap();
        let f = filtration_from_partition(&a, &p).unwrap();
        // brute force oracle on every pair of distinct basis elements
        for x in g.elements() {
            for y in g.elements() {
                if x != y {
                    let v = a.mul(&a.star(&Vector::basis(x)), &Vector::basis(y));
                    assert!(f.state().apply(&v).is_zero());
                }
            }
        }
        assert_eq!(f.subspaces().len(), 7);
    }

    fn doubled(g: &Arc<FiniteGroup>, theta: &GroupAutomorphism) -> DoubledHopf {
        double(&GroupAlgebra::new(g.clone()), theta).unwrap()
    }

    #[test]
    fn symmetric_doubling_preserves_coxeter_filtration() {
        for n in 2..=4 {
            let g = Arc::new(FiniteGroup::symmetric(interval(1, n)).unwrap());
            let d = doubled(&g, &GroupAutomorphism::flip(&g).unwrap());
            let len = LengthFunction::compute(&g, LengthKind::Coxeter).unwrap();
            let p = Partition::from_key(g.clone(), |x| BlockIndex::Level(len.of(x))).unwrap();
            let f = filtration_from_partition(d.base(), &p).unwrap();
            assert!(action_preserves_filtration(&d.coaction(), &f));
        }
    }

    #[test]
    fn inverse_doubling_preserves_cyclic_filtration() {
        for l in 2..=9 {
            let g = cyclic(l);
            let d = doubled(&g, &GroupAutomorphism::inverse(&g).unwrap());
            let p = wordlength_partition(g.clone(), &GeneratingSet::plus_minus_one(&g).unwrap()).unwrap();
            let f = filtration_from_partition(d.base(), &p).unwrap();
            assert!(action_preserves_filtration(&d.coaction(), &f));
        }
    }

    #[test]
    fn times_three_on_z8_breaks_filtration() {
        let g = cyclic(8);
        let theta = GroupAutomorphism::from_generators(&g, &[Elem(1)], &[Elem(3)]).unwrap();
        let d = doubled(&g, &theta);
        let p = wordlength_partition(g.clone(), &GeneratingSet::plus_minus_one(&g).unwrap()).unwrap();
        let f = filtration_from_partition(d.base(), &p).unwrap();
        let w = filtration_violation(&d.coaction(), &f).unwrap();
        assert!(w.starts_with("1*c8:1 in V1"), "{w}");
    }

    #[test]
    fn faithfulness_dichotomy_small() {
        let g = cyclic(3);
        let inv = action_faithful_span(&doubled(&g, &GroupAutomorphism::inverse(&g).unwrap()));
        assert_eq!((inv.generated, inv.total), (6, 6));
        assert!(inv.faithful());
        let id = action_faithful_span(&doubled(&g, &GroupAutomorphism::identity(&g)));
        assert_eq!(id.generated, 3);
        assert!(!id.faithful());

        let s3 = Arc::new(FiniteGroup::symmetric(interval(1, 3)).unwrap());
        let r = action_faithful_span(&doubled(&s3, &GroupAutomorphism::flip(&s3).unwrap()));
        assert_eq!(r.generated, 12);
    }

    #[test]
    fn partition_json_maps_index_to_literals() {
        let g = cyclic(3);
        let p = wordlength_partition(g.clone(), &GeneratingSet::plus_minus_one(&g).unwrap()).unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"0":["c3:0"],"1":["c3:1","c3:2"]}"#
        );
        let p = sinfty_partition(Parity::Even, 1).unwrap();
        let json = serde_json::to_value(&p).unwrap();
        assert!(json.get("1,1").is_some());
    }

    fn small_group() -> impl Strategy<Value = Arc<FiniteGroup>> {
        prop_oneof![
            (1u64..=24).prop_map(|l| Arc::new(FiniteGroup::cyclic(l).unwrap())),
            (1i64..=4).prop_map(|n| Arc::new(FiniteGroup::symmetric(interval(1, n)).unwrap())),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]

        #[test]
        fn random_partitions_give_filtrations(
            (g, assign) in small_group().prop_flat_map(|g| {
                let n = g.order();
                (Just(g), proptest::collection::vec(1u32..6, n))
            })
        ) {
            let a = GroupAlgebra::new(g.clone());
            let p = Partition::from_key(g.clone(), |x| {
                if x == Elem::IDENTITY { BlockIndex::Level(0) } else { BlockIndex::Level(assign[x.index()]) }
            }).unwrap();
            prop_assert!(p.identity_singleton());
            let total: usize = p.sizes().iter().sum();
            prop_assert_eq!(total, g.order());
            prop_assert!(filtration_from_partition(&a, &p).is_ok());
        }
    }
}
