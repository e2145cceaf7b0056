use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::group::{Elem, FiniteGroup, GroupKind};
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Largest group for which the full automorphism group is enumerated.
pub const MAX_AUT_SEARCH_ORDER: usize = 24;

/// Extends `gens[i] ↦ images[i]` to a homomorphism `src → dst`.
///
/// The map is propagated breadth-first along Cayley edges and checked for
/// consistency on every edge, which proves it is well defined and
/// multiplicative.
pub fn homomorphism_from_generators(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    gens: &[Elem],
    images: &[Elem],
) -> Result<Vec<Elem>> {
    assert_eq!(gens.len(), images.len(), "one image per generator");
    let mut map = vec![u32::MAX; src.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([Elem::IDENTITY]);
    while let Some(g) = queue.pop_front() {
        let fg = Elem(map[g.index()]);
        for (&s, &t) in gens.iter().zip(images) {
            let h = src.mul(g, s);
            let fh = dst.mul(fg, t);
            match map[h.index()] {
                u32::MAX => {
                    map[h.index()] = fh.0;
                    queue.push_back(h);
                }
                v if v == fh.0 => {}
                v => {
                    return Err(Error::NotHomomorphism {
                        witness: format!(
                            "{} would map to both {} and {}",
                            src.literal(h),
                            dst.literal(Elem(v)),
                            dst.literal(fh)
                        ),
                    })
                }
            }
        }
    }
    if let Some(i) = map.iter().position(|&v| v == u32::MAX) {
        return Err(Error::NotGenerating {
            coset: format!("{}·⟨S⟩", src.literal(Elem(i as u32))),
        });
    }
    Ok(map.into_iter().map(Elem).collect())
}

/// An automorphism of a finite group, tabulated on all elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupAutomorphism {
    images: Vec<Elem>,
    order: usize,
}

/// Centre of a reflection of the integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Center {
    /// `k ↦ −k`.
    Zero,
    /// `k ↦ 1 − k`.
    Half,
}

impl GroupAutomorphism {
    /// Validates a tabulated map as a bijective homomorphism.
    pub fn from_images(group: &FiniteGroup, images: Vec<Elem>) -> Result<Self> {
        if images.len() != group.order() {
            return Err(Error::InvalidArgument(format!(
                "{} images for a group of order {}",
                images.len(),
                group.order()
            )));
        }
        let mut seen = vec![false; images.len()];
        for (g, &img) in images.iter().enumerate() {
            if !group.contains(img) || seen[img.index()] {
                return Err(Error::NotBijective {
                    witness: group.literal(Elem(g as u32)),
                });
            }
            seen[img.index()] = true;
        }
        // multiplicativity on generator edges suffices once the map is total
        for g in group.elements() {
            for s in group.standard_generators() {
                let lhs = images[group.mul(g, s).index()];
                let rhs = group.mul(images[g.index()], images[s.index()]);
                if lhs != rhs {
                    return Err(Error::NotHomomorphism {
                        witness: format!("{} · {}", group.literal(g), group.literal(s)),
                    });
                }
            }
        }
        Ok(Self::tabulated(group, images))
    }

    fn tabulated(group: &FiniteGroup, images: Vec<Elem>) -> Self {
        let mut order = 1;
        let mut cur = images.clone();
        while cur.iter().enumerate().any(|(i, g)| g.index() != i) {
            cur = cur.iter().map(|g| images[g.index()]).collect();
            order += 1;
        }
        debug_assert_eq!(cur.len(), group.order());
        GroupAutomorphism { images, order }
    }

    /// Defined on a generating set and extended multiplicatively.
    pub fn from_generators(group: &FiniteGroup, gens: &[Elem], images: &[Elem]) -> Result<Self> {
        let map = homomorphism_from_generators(group, group, gens, images)?;
        Self::from_images(group, map)
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupAutomorphism {
            images: group.elements().collect(),
            order: 1,
        }
    }

    /// `g ↦ h g h⁻¹`.
    pub fn inner(group: &FiniteGroup, h: Elem) -> Self {
        let hi = group.inv(h);
        let images = group
            .elements()
            .map(|g| group.mul(group.mul(h, g), hi))
            .collect();
        Self::tabulated(group, images)
    }

    /// `σ ↦ π σ π⁻¹` for a permutation `π` of the ground set (not
    /// necessarily a group element itself).
    pub fn conjugation(group: &FiniteGroup, pi: &Permutation) -> Result<Self> {
        let ground = group
            .ground()
            .ok_or_else(|| Error::InvalidArgument("conjugation needs a symmetric group".into()))?;
        if ground != pi.ground() {
            return Err(Error::GroundMismatch(format!(
                "conjugator on {:?}, group on {:?}",
                pi.ground(),
                ground
            )));
        }
        let images = group
            .elements()
            .map(|g| {
                let p = group.perm(g).expect("symmetric element").conjugate_by(pi);
                group.elem_of_perm(&p).expect("conjugate lies in the group")
            })
            .collect();
        Ok(Self::tabulated(group, images))
    }

    /// `g ↦ g⁻¹`; only a homomorphism for abelian groups.
    pub fn inverse(group: &FiniteGroup) -> Result<Self> {
        if let Some((a, b)) = group.commutation_witness() {
            return Err(Error::NotAbelian {
                witness: format!("{} and {} do not commute", group.literal(a), group.literal(b)),
            });
        }
        let images = group.elements().map(|g| group.inv(g)).collect();
        Ok(Self::tabulated(group, images))
    }

    /// `sᵢ ↦ sₙ₋ᵢ` on a symmetric group of degree `n ≥ 2`. Checked to agree
    /// with conjugation by the order-reversing permutation of the ground set.
    pub fn flip(group: &FiniteGroup) -> Result<Self> {
        let ground = group
            .ground()
            .ok_or_else(|| Error::InvalidArgument("flip needs a symmetric group".into()))?;
        let n = ground.len();
        if n < 2 {
            return Err(Error::InvalidArgument(format!("flip needs degree ≥ 2, got {n}")));
        }
        let gens = group.standard_generators();
        let images: Vec<Elem> = (1..n)
            .map(|i| group.adjacent_transposition(n - i).expect("generator"))
            .collect();
        let theta = Self::from_generators(group, &gens, &images)?;
        let reversal = reversal(ground);
        let conj = Self::conjugation(group, &reversal)?;
        if let Some(g) = theta.first_difference(&conj) {
            return Err(Error::NotHomomorphism {
                witness: format!(
                    "flip and reversal conjugation differ at {}",
                    group.literal(g)
                ),
            });
        }
        Ok(theta)
    }

    /// Conjugation by the reflection of the ground set about `center`.
    pub fn reflection_conjugation(group: &FiniteGroup, center: Center) -> Result<Self> {
        let ground = group.ground().ok_or_else(|| {
            Error::InvalidArgument("reflection conjugation needs a symmetric group".into())
        })?;
        let pi = reflection(ground, center)?;
        Self::conjugation(group, &pi)
    }

    pub fn apply(&self, g: Elem) -> Elem {
        self.images[g.index()]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    pub fn is_involution(&self) -> bool {
        self.order <= 2
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        let images: Vec<Elem> = other.images.iter().map(|&g| self.apply(g)).collect();
        let order = order_of(&images);
        GroupAutomorphism { images, order }
    }

    pub fn inverse_map(&self) -> GroupAutomorphism {
        let mut images = vec![Elem(0); self.images.len()];
        for (g, &h) in self.images.iter().enumerate() {
            images[h.index()] = Elem(g as u32);
        }
        GroupAutomorphism {
            images,
            order: self.order,
        }
    }

    pub fn first_difference(&self, other: &GroupAutomorphism) -> Option<Elem> {
        self.images
            .iter()
            .zip(&other.images)
            .position(|(a, b)| a != b)
            .map(|i| Elem(i as u32))
    }

    /// Whether `θ` moves at least one of the given generators.
    pub fn moves_any(&self, gens: &[Elem]) -> bool {
        gens.iter().any(|&s| self.apply(s) != s)
    }
}

fn order_of(images: &[Elem]) -> usize {
    let mut order = 1;
    let mut cur = images.to_vec();
    while cur.iter().enumerate().any(|(i, g)| g.index() != i) {
        cur = cur.iter().map(|g| images[g.index()]).collect();
        order += 1;
    }
    order
}

/// The order-reversing permutation of a ground set.
pub fn reversal(ground: &[i64]) -> Permutation {
    let n = ground.len() as u32;
    Permutation::from_indices(ground.to_vec(), (0..n).rev().collect())
        .expect("reversal is a bijection")
}

/// Reflection `k ↦ −k` or `k ↦ 1 − k`; the ground set must be symmetric
/// about the centre.
pub fn reflection(ground: &[i64], center: Center) -> Result<Permutation> {
    let f = |k: i64| match center {
        Center::Zero => -k,
        Center::Half => 1 - k,
    };
    if let Some(k) = ground.iter().find(|&&k| ground.binary_search(&f(k)).is_err()) {
        return Err(Error::InvalidArgument(format!(
            "ground set is not symmetric about {}: {k} has no mirror point",
            match center {
                Center::Zero => "0",
                Center::Half => "1/2",
            }
        )));
    }
    Permutation::from_fn(ground.to_vec(), f)
}

/// Order-preserving bijection `{−n+1..n} → {−n..−1, 1..n}`: `j ↦ j − 1` for
/// `j ≤ 0`, identity for `j > 0`.
pub fn even_relabel(j: i64) -> i64 {
    if j <= 0 {
        j - 1
    } else {
        j
    }
}

pub fn even_relabel_inverse(k: i64) -> i64 {
    if k < 0 {
        k + 1
    } else {
        k
    }
}

/// The reflection about ½ on `{−n+1..n}`, transported to `{−n..−1, 1..n}`
/// through [`even_relabel`].
pub fn even_reflection(n: i64) -> Result<Permutation> {
    let signed: Vec<i64> = (-n..=-1).chain(1..=n).collect();
    Permutation::from_fn(signed, |k| even_relabel(1 - even_relabel_inverse(k)))
}

/// κ^ev: conjugation by [`even_reflection`] on a group with ground
/// `{−n..−1, 1..n}`.
pub fn kappa_even(group: &FiniteGroup) -> Result<GroupAutomorphism> {
    let ground = group
        .ground()
        .ok_or_else(|| Error::InvalidArgument("κ^ev needs a symmetric group".into()))?;
    let n = (ground.len() / 2) as i64;
    let expected: Vec<i64> = (-n..=-1).chain(1..=n).collect();
    if ground != expected.as_slice() {
        return Err(Error::InvalidArgument(format!(
            "κ^ev needs the ground set ±{{1..{n}}}"
        )));
    }
    GroupAutomorphism::conjugation(group, &even_reflection(n)?)
}

/// All automorphisms of a small group, identity first.
pub fn automorphism_group(group: &FiniteGroup) -> Result<Vec<GroupAutomorphism>> {
    if group.order() > MAX_AUT_SEARCH_ORDER {
        return Err(Error::SizeGuard {
            what: "group order for automorphism search".into(),
            actual: group.order(),
            limit: MAX_AUT_SEARCH_ORDER,
        });
    }
    let gens = small_generating_set(group);
    let orders: Vec<usize> = gens.iter().map(|&g| group.element_order(g)).collect();
    let candidates: Vec<Vec<Elem>> = orders
        .iter()
        .map(|&o| {
            group
                .elements()
                .filter(|&h| group.element_order(h) == o)
                .collect()
        })
        .collect();
    let mut out = vec![GroupAutomorphism::identity(group)];
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<Elem> = choice
            .iter()
            .zip(&candidates)
            .map(|(&i, c)| c[i])
            .collect();
        if images != gens {
            if let Ok(map) = homomorphism_from_generators(group, group, &gens, &images) {
                if let Ok(a) = GroupAutomorphism::from_images(group, map) {
                    out.push(a);
                }
            }
        }
        // odometer over candidate tuples
        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Greedy generating set: repeatedly add the smallest element outside the
/// subgroup generated so far.
fn small_generating_set(group: &FiniteGroup) -> Vec<Elem> {
    if let GroupKind::Cyclic(l) = group.kind() {
        return if *l == 1 { vec![] } else { vec![Elem(1)] };
    }
    let mut gens: Vec<Elem> = Vec::new();
    let mut members = vec![false; group.order()];
    members[0] = true;
    while let Some(i) = members.iter().position(|m| !m) {
        // try the element generating the largest subgroup together with gens
        let best = (i..group.order())
            .filter(|&j| !members[j])
            .map(|j| {
                let mut trial = gens.clone();
                trial.push(Elem(j as u32));
                (closure_size(group, &trial), j)
            })
            .max_by_key(|&(size, j)| (size, std::cmp::Reverse(j)))
            .expect("some element is outside the subgroup");
        gens.push(Elem(best.1 as u32));
        members = closure(group, &gens);
    }
    gens
}

fn closure(group: &FiniteGroup, gens: &[Elem]) -> Vec<bool> {
    let mut members = vec![false; group.order()];
    members[0] = true;
    let mut queue = VecDeque::from([Elem::IDENTITY]);
    while let Some(g) = queue.pop_front() {
        for &s in gens {
            let h = group.mul(g, s);
            if !members[h.index()] {
                members[h.index()] = true;
                queue.push_back(h);
            }
        }
    }
    members
}

fn closure_size(group: &FiniteGroup, gens: &[Elem]) -> usize {
    closure(group, gens).iter().filter(|&&m| m).count()
}

/// Some `θ ∈ Aut(G)` with `θ ∘ θ₁ = θ₂ ∘ θ`, or `None`.
pub fn conjugate_in_aut(
    group: &FiniteGroup,
    theta1: &GroupAutomorphism,
    theta2: &GroupAutomorphism,
) -> Result<Option<GroupAutomorphism>> {
    let auts = automorphism_group(group)?;
    Ok(auts
        .into_iter()
        .find(|t| t.compose(theta1) == theta2.compose(t)))
}
