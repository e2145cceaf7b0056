use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::permutation::{format_ground, Permutation};
use crate::error::{Error, Result};
use crate::literal::LiteralLabel;

/// Index of a group element; the identity is always `Elem(0)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Elem(pub u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Largest ground set accepted for full enumeration of a symmetric group.
pub const MAX_SYMMETRIC_DEGREE: usize = 8;
/// Groups up to this order keep a full multiplication table.
const TABLE_LIMIT: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(u64),
    Symmetric(Vec<i64>),
}

/// A finite group with enumerated elements: residues `0..l` for cyclic
/// groups, permutations in lexicographic one-line order for symmetric ones.
#[derive(Clone)]
pub struct FiniteGroup {
    kind: GroupKind,
    order: usize,
    perms: Vec<Permutation>,
    index: HashMap<Vec<u32>, Elem>,
    table: Option<Vec<u32>>,
    inverses: Vec<u32>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// ℤ/l under addition.
    pub fn cyclic(l: u64) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidArgument("cyclic group of order 0".into()));
        }
        if l > u32::MAX as u64 {
            return Err(Error::SizeGuard {
                what: "cyclic group order".into(),
                actual: usize::MAX,
                limit: u32::MAX as usize,
            });
        }
        let order = l as usize;
        let inverses = (0..l).map(|t| ((l - t) % l) as u32).collect();
        Ok(FiniteGroup {
            kind: GroupKind::Cyclic(l),
            order,
            perms: vec![],
            index: HashMap::new(),
            table: None,
            inverses,
        })
    }

    /// All permutations of a strictly increasing ground set.
    pub fn symmetric(ground: Vec<i64>) -> Result<Self> {
        Permutation::identity(ground.clone())?;
        let n = ground.len();
        if n > MAX_SYMMETRIC_DEGREE {
            return Err(Error::SizeGuard {
                what: "symmetric group degree".into(),
                actual: n,
                limit: MAX_SYMMETRIC_DEGREE,
            });
        }
        let mut perms = Vec::new();
        let mut cur: Vec<u32> = (0..n as u32).collect();
        loop {
            perms.push(Permutation::from_indices_unchecked(ground.clone(), cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let order = perms.len();
        let index: HashMap<Vec<u32>, Elem> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.indices().to_vec(), Elem(i as u32)))
            .collect();
        let inverses = perms
            .iter()
            .map(|p| index[p.inverse().indices()].0)
            .collect();
        let mut g = FiniteGroup {
            kind: GroupKind::Symmetric(ground),
            order,
            perms,
            index,
            table: None,
            inverses,
        };
        if order <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    table.push(g.mul_uncached(Elem(a as u32), Elem(b as u32)).0);
                }
            }
            g.table = Some(table);
        }
        Ok(g)
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    /// Short name such as `Z5` or `S{-1..1}`.
    pub fn name(&self) -> String {
        match &self.kind {
            GroupKind::Cyclic(l) => format!("Z{l}"),
            GroupKind::Symmetric(g) => format!("S{{{}}}", format_ground(g)),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order as u32).map(Elem)
    }

    pub fn contains(&self, g: Elem) -> bool {
        g.index() < self.order
    }

    fn mul_uncached(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            GroupKind::Cyclic(l) => Elem(((a.0 as u64 + b.0 as u64) % l) as u32),
            GroupKind::Symmetric(_) => {
                let p = self.perms[a.index()].compose(&self.perms[b.index()]);
                self.index[p.indices()]
            }
        }
    }

    /// Group product `ab`; for permutations, `b` acts first.
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => Elem(t[a.index() * self.order + b.index()]),
            None => self.mul_uncached(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Elem {
        Elem(self.inverses[a.index()])
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        let mut acc = Elem::IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != Elem::IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.commutation_witness().is_none()
    }

    /// A non-commuting pair, if any.
    pub fn commutation_witness(&self) -> Option<(Elem, Elem)> {
        if matches!(self.kind, GroupKind::Cyclic(_)) {
            return None;
        }
        let gens = self.standard_generators();
        for &a in &gens {
            for &b in &gens {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Ground set of a symmetric group.
    pub fn ground(&self) -> Option<&[i64]> {
        match &self.kind {
            GroupKind::Symmetric(g) => Some(g),
            GroupKind::Cyclic(_) => None,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            GroupKind::Cyclic(l) => Some(l),
            GroupKind::Symmetric(_) => None,
        }
    }

    /// The permutation behind an element of a symmetric group.
    pub fn perm(&self, a: Elem) -> Option<&Permutation> {
        self.perms.get(a.index())
    }

    pub fn elem_of_perm(&self, p: &Permutation) -> Option<Elem> {
        match &self.kind {
            GroupKind::Symmetric(g) if g.as_slice() == p.ground() => {
                self.index.get(p.indices()).copied()
            }
            _ => None,
        }
    }

    pub fn elem_of_residue(&self, t: i64) -> Option<Elem> {
        self.modulus()
            .map(|l| Elem(t.rem_euclid(l as i64) as u32))
    }

    /// The `i`-th adjacent transposition `sᵢ`, swapping the `(i−1)`-th and
    /// `i`-th ground points (1-based `i`).
    pub fn adjacent_transposition(&self, i: usize) -> Option<Elem> {
        let g = self.ground()?;
        if i == 0 || i >= g.len() {
            return None;
        }
        let p = Permutation::transposition(g.to_vec(), g[i - 1], g[i]).ok()?;
        self.elem_of_perm(&p)
    }

    /// `[1]` for cyclic groups (empty for the trivial group); `s₁..sₙ₋₁` for
    /// symmetric groups.
    pub fn standard_generators(&self) -> Vec<Elem> {
        match &self.kind {
            GroupKind::Cyclic(l) => {
                if *l == 1 {
                    vec![]
                } else {
                    vec![Elem(1)]
                }
            }
            GroupKind::Symmetric(g) => (1..g.len())
                .filter_map(|i| self.adjacent_transposition(i))
                .collect(),
        }
    }

    pub fn literal_label(&self, a: Elem) -> LiteralLabel {
        match &self.kind {
            GroupKind::Cyclic(l) => LiteralLabel::Cyclic {
                modulus: *l,
                residue: a.0 as u64,
            },
            GroupKind::Symmetric(_) => LiteralLabel::Perm(self.perms[a.index()].clone()),
        }
    }

    /// Element literal: `cL:R` or `perm{..}`.
    pub fn literal(&self, a: Elem) -> String {
        self.literal_label(a).to_string()
    }

    pub fn resolve(&self, label: &LiteralLabel) -> Result<Elem> {
        let found = match (&self.kind, label) {
            (GroupKind::Cyclic(l), LiteralLabel::Cyclic { modulus, residue }) if modulus == l => {
                Some(Elem(*residue as u32))
            }
            (GroupKind::Symmetric(_), LiteralLabel::Perm(p)) => self.elem_of_perm(p),
            _ => None,
        };
        found.ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Elem>> {
        let mut class_of = vec![u32::MAX; self.order];
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        for g in self.elements() {
            if class_of[g.index()] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let mut members = Vec::new();
            for h in self.elements() {
                let c = self.mul(self.mul(h, g), self.inv(h));
                if class_of[c.index()] == u32::MAX {
                    class_of[c.index()] = id;
                    members.push(c);
                }
            }
            members.sort();
            classes.push(members);
        }
        classes
    }

    /// Cyclic subgroup generated by `a`, as a sorted list.
    pub fn cyclic_subgroup(&self, a: Elem) -> Vec<Elem> {
        let mut out = vec![Elem::IDENTITY];
        let mut x = a;
        while x != Elem::IDENTITY {
            out.push(x);
            x = self.mul(x, a);
        }
        out.sort();
        out
    }
}

/// Advances to the next permutation in lexicographic order.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
