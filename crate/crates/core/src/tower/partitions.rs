use std::collections::HashSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::doubling::{double, Tagged};
use crate::error::{Error, Result};
use crate::filtration::{sinfty_partition_of, truncation_ground};
use crate::hopf::GroupAlgebra;
use crate::linalg::Vector;
use crate::perm::{
    even_reflection, kappa_even, reflection, Center, Elem, FiniteGroup, GroupAutomorphism, Parity,
    Permutation,
};
use crate::report::{CheckResult, Report};

pub const PARTITION_MAX_TRUNCATION: usize = 3;
const CONJUGATOR_SAMPLES: usize = 100;
const CONJUGATOR_SEED: u64 = 0x5eed_0b57;

fn tower_name(mode: Parity) -> &'static str {
    match mode {
        Parity::Odd => "partition-odd",
        Parity::Even => "partition-even",
    }
}

fn kappa(mode: Parity, g: &FiniteGroup) -> Result<GroupAutomorphism> {
    match mode {
        Parity::Odd => GroupAutomorphism::reflection_conjugation(g, Center::Zero),
        Parity::Even => kappa_even(g),
    }
}

/// Partition, reflection invariance, restriction and compatibility checks
/// for the truncations `1..=n`. The truncation `n` stands in for the
/// infinite group: its doubling coaction plays the role of the limit
/// action and `φ_{m,n}` (ground inclusion) that of the embedding into the
/// limit.
pub fn partition_tower_check(mode: Parity, n: usize) -> Result<Report> {
    if n == 0 || n > PARTITION_MAX_TRUNCATION {
        return Err(Error::InvalidArgument(format!(
            "truncation must be in 1..={PARTITION_MAX_TRUNCATION}, got {n}"
        )));
    }
    let groups: Vec<Arc<FiniteGroup>> = (1..=n)
        .map(|m| FiniteGroup::symmetric(truncation_ground(mode, m)).map(Arc::new))
        .collect::<Result<_>>()?;
    let tower = tower_name(mode);
    let mut out = Report::new();

    for (m, g) in groups.iter().enumerate() {
        let m = m + 1;
        let p = sinfty_partition_of(g.clone(), mode)?;
        let stage = format!("n={m}");
        let mut r = Report::new();
        r.push(CheckResult::from_witness(
            "blocks disjoint, covering, identity singleton",
            (!p.identity_singleton()).then(|| "zero block is not {e}".to_string()),
        ).with_note(format!("{} finite blocks", p.len())));
        let k = kappa(mode, g)?;
        r.push(CheckResult::from_witness(
            "reflection preserves every block",
            p.unstable_block(|x| k.apply(x))
                .map(|(i, x)| format!("{} leaves block {i}", g.literal(x))),
        ));
        out.extend(r.tag(tower, &stage).entries);
    }

    let top = groups.last().expect("n ≥ 1");
    let d = double(&GroupAlgebra::new(top.clone()), &kappa(mode, top)?)?;
    let alpha = d.coaction();
    let embed: Vec<Vec<Elem>> = groups
        .iter()
        .map(|g| super::symmetric::inclusion_map(g, top))
        .collect::<Result<_>>()?;
    let stage = format!("top n={n}");

    // (iii): α(span{σ : t(σ) ≤ m}) ⊆ span{…} ⊗ Ã
    for (m, img) in embed.iter().enumerate() {
        let inside: HashSet<Elem> = img.iter().copied().collect();
        let witness = img.iter().find_map(|&x| {
            alpha
                .image(&x)
                .labels()
                .find(|(y, _)| !inside.contains(y))
                .map(|(y, _)| format!("{} ↦ term at {}", top.literal(x), top.literal(*y)))
        });
        out.push(
            CheckResult::from_witness(format!("restriction well defined at n={}", m + 1), witness)
                .with_tower(tower)
                .with_stage(stage.clone()),
        );
    }

    for m in 0..embed.len().saturating_sub(1) {
        let (small, big) = (&groups[m], &groups[m + 1]);
        let phi = super::symmetric::inclusion_map(small, big)?;
        let inverse = |level: usize| {
            let mut inv = vec![None; top.order()];
            for (x, &y) in embed[level].iter().enumerate() {
                inv[y.index()] = Some(Elem(x as u32));
            }
            inv
        };
        let (inv_small, inv_big) = (inverse(m), inverse(m + 1));

        // φ ∘ (φ_{m,∞})⁻¹ = (φ_{m+1,∞})⁻¹ on the image of stage m
        let witness = top.elements().find_map(|y| {
            let x = inv_small[y.index()]?;
            (Some(phi[x.index()]) != inv_big[y.index()]).then(|| top.literal(y))
        });
        out.push(
            CheckResult::from_witness(format!("inclusion inverse compatibility n={}→{}", m + 1, m + 2), witness)
                .with_tower(tower)
                .with_stage(stage.clone()),
        );

        // β_{m+1} ∘ φ = (φ ⊗ id) ∘ β_m with β_j = (φ_{j,∞}⁻¹ ⊗ id) ∘ α ∘ φ_{j,∞}
        let beta = |inv: &[Option<Elem>], img: &[Elem], x: Elem| -> Option<Vector<(Elem, Tagged)>> {
            let v = alpha.image(&img[x.index()]);
            let terms: Option<Vec<_>> = v
                .iter()
                .map(|((y, t), c)| inv[y.index()].map(|z| ((z, *t), c.clone())))
                .collect();
            terms.map(Vector::from_terms)
        };
        let witness = small.elements().find_map(|x| {
            let lhs = beta(&inv_big, &embed[m + 1], phi[x.index()]);
            let rhs = beta(&inv_small, &embed[m], x).map(|v| v.map_labels(|(z, t)| (phi[z.index()], *t)));
            (lhs.is_none() || lhs != rhs).then(|| small.literal(x))
        });
        out.push(
            CheckResult::from_witness(format!("restricted actions intertwined n={}→{}", m + 1, m + 2), witness)
                .with_tower(tower)
                .with_stage(stage.clone()),
        );
    }
    if n == 1 {
        out.push(
            CheckResult::skipped("restricted actions intertwined", "a single truncation has no connecting map")
                .with_tower(tower)
                .with_stage(stage),
        );
    }
    Ok(out)
}

/// Fixed-point data of the two reflections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionData {
    pub n: usize,
    pub odd_fixed: usize,
    pub even_fixed: usize,
}

fn fixed_count(p: &Permutation) -> usize {
    p.fixed_points().len()
}

/// The reflection about 0 on `{−n..n}` fixes one point, the reflection
/// about ½ fixes none; conjugation preserves fixed-point counts (checked on
/// seeded random conjugators), so the two are never conjugate.
pub fn reflection_obstruction(n: usize) -> Result<(ObstructionData, Report)> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let h = n as i64;
    let odd = reflection(&crate::perm::interval(-h, h), Center::Zero)?;
    let half = reflection(&crate::perm::interval(-h + 1, h), Center::Half)?;
    let even = even_reflection(h)?;
    let data = ObstructionData {
        n,
        odd_fixed: fixed_count(&odd),
        even_fixed: fixed_count(&even),
    };
    let mut r = Report::new();
    r.push(CheckResult::from_witness(
        "odd reflection fixes exactly one point",
        (data.odd_fixed != 1).then(|| format!("{} fixed points", data.odd_fixed)),
    ));
    r.push(CheckResult::from_witness(
        "even reflection fixes no point",
        (data.even_fixed != 0 || fixed_count(&half) != 0)
            .then(|| format!("{} fixed points", data.even_fixed)),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(CONJUGATOR_SEED ^ n as u64);
    let mut witness = None;
    for _ in 0..CONJUGATOR_SAMPLES {
        for p in [&odd, &even] {
            let mut images: Vec<u32> = (0..p.degree() as u32).collect();
            images.shuffle(&mut rng);
            let pi = Permutation::from_indices(p.ground().to_vec(), images)?;
            let c = p.conjugate_by(&pi);
            if fixed_count(&c) != fixed_count(p) && witness.is_none() {
                witness = Some(format!("conjugating {p} by {pi}"));
            }
        }
    }
    r.push(
        CheckResult::from_witness("conjugation preserves fixed-point count", witness)
            .with_note(format!("{CONJUGATOR_SAMPLES} seeded random conjugators per reflection")),
    );
    r.push(CheckResult::from_witness(
        "reflections not conjugate",
        (data.odd_fixed == data.even_fixed).then(|| "fixed-point counts agree".to_string()),
    ));
    Ok((data, r.tag("obstruction", &format!("n={n}"))))
}
