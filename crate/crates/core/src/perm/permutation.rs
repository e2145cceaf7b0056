use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::literal::Cursor;

/// Which of the two support-radius functions to use: permutations of ℤ
/// (`Odd`) or of ℤ∖{0} (`Even`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// A bijection of a finite ordered set of integers, stored in one-line form
/// as indices into the ground set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    ground: Vec<i64>,
    images: Vec<u32>,
}

impl Permutation {
    /// Identity on `ground`, which must be strictly increasing.
    pub fn identity(ground: Vec<i64>) -> Result<Self> {
        check_ground(&ground)?;
        let images = (0..ground.len() as u32).collect();
        Ok(Permutation { ground, images })
    }

    /// Builds from one-line index form; `images[i]` is the position of the
    /// image of `ground[i]`.
    pub fn from_indices(ground: Vec<i64>, images: Vec<u32>) -> Result<Self> {
        check_ground(&ground)?;
        if images.len() != ground.len() {
            return Err(Error::InvalidPermutation(format!(
                "{} images for a ground set of size {}",
                images.len(),
                ground.len()
            )));
        }
        let mut seen = vec![false; images.len()];
        for &j in &images {
            let j = j as usize;
            if j >= seen.len() || seen[j] {
                return Err(Error::InvalidPermutation(format!(
                    "index list {images:?} is not a bijection"
                )));
            }
            seen[j] = true;
        }
        Ok(Permutation { ground, images })
    }

    pub(crate) fn from_indices_unchecked(ground: Vec<i64>, images: Vec<u32>) -> Self {
        Permutation { ground, images }
    }

    /// Builds from a point map given as a function on the ground set.
    pub fn from_fn(ground: Vec<i64>, f: impl Fn(i64) -> i64) -> Result<Self> {
        check_ground(&ground)?;
        let mut images = Vec::with_capacity(ground.len());
        for &k in &ground {
            let v = f(k);
            match ground.binary_search(&v) {
                Ok(j) => images.push(j as u32),
                Err(_) => {
                    return Err(Error::InvalidPermutation(format!(
                        "{k} maps to {v}, outside the ground set"
                    )))
                }
            }
        }
        Self::from_indices(ground, images)
    }

    /// Product of disjoint or overlapping cycles, applied right to left.
    pub fn from_cycles(ground: Vec<i64>, cycles: &[Vec<i64>]) -> Result<Self> {
        let mut acc = Permutation::identity(ground.clone())?;
        for cycle in cycles {
            let mut images: Vec<u32> = (0..ground.len() as u32).collect();
            let mut idx = Vec::with_capacity(cycle.len());
            for k in cycle {
                let j = ground.binary_search(k).map_err(|_| {
                    Error::InvalidPermutation(format!("cycle point {k} not in the ground set"))
                })?;
                if idx.contains(&j) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {k} repeated within a cycle"
                    )));
                }
                idx.push(j);
            }
            for w in 0..idx.len() {
                images[idx[w]] = idx[(w + 1) % idx.len()] as u32;
            }
            let c = Permutation {
                ground: ground.clone(),
                images,
            };
            acc = acc.compose(&c);
        }
        Ok(acc)
    }

    /// Transposition of two ground points.
    pub fn transposition(ground: Vec<i64>, a: i64, b: i64) -> Result<Self> {
        Self::from_cycles(ground, &[vec![a, b]])
    }

    pub fn ground(&self) -> &[i64] {
        &self.ground
    }

    pub fn indices(&self) -> &[u32] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.ground.len()
    }

    /// Image of a ground point; points outside the ground set are fixed.
    pub fn apply(&self, k: i64) -> i64 {
        match self.ground.binary_search(&k) {
            Ok(j) => self.ground[self.images[j] as usize],
            Err(_) => k,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.ground, other.ground);
        let images = other
            .images
            .iter()
            .map(|&j| self.images[j as usize])
            .collect();
        Permutation {
            ground: self.ground.clone(),
            images,
        }
    }

    pub fn try_compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch(format!(
                "{:?} vs {:?}",
                self.ground, other.ground
            )));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation {
            ground: self.ground.clone(),
            images,
        }
    }

    /// `π ∘ self ∘ π⁻¹`.
    pub fn conjugate_by(&self, pi: &Permutation) -> Permutation {
        pi.compose(self).compose(&pi.inverse())
    }

    /// Cycles of length ≥ 2, each starting at its smallest point, sorted by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<i64>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(self.ground[j]);
                j = self.images[j] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Points fixed by the permutation.
    pub fn fixed_points(&self) -> Vec<i64> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 == j)
            .map(|(i, _)| self.ground[i])
            .collect()
    }

    /// Number of inversions; the Coxeter length for adjacent transpositions.
    pub fn coxeter_length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Word length with respect to all transpositions: Σ (cycle length − 1).
    pub fn transposition_length(&self) -> usize {
        self.cycles().iter().map(|c| c.len() - 1).sum()
    }

    /// Largest `|k|` over moved points, 0 for the identity.
    pub fn support_radius(&self, mode: Parity) -> Result<u64> {
        if mode == Parity::Even && self.ground.binary_search(&0).is_ok() {
            return Err(Error::InvalidArgument(
                "even support radius needs a ground set without 0".into(),
            ));
        }
        Ok(self
            .images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| self.ground[i].unsigned_abs())
            .max()
            .unwrap_or(0))
    }

    /// Restricts the ground set to `ground`, which must be a superset of the
    /// moved points and a subset of the current ground set.
    pub fn restrict(&self, ground: Vec<i64>) -> Result<Permutation> {
        Self::from_fn(ground, |k| self.apply(k))
    }

    /// Extends by fixed points to a larger ground set.
    pub fn extend(&self, ground: Vec<i64>) -> Result<Permutation> {
        if let Some(k) = self.ground.iter().find(|k| ground.binary_search(k).is_err()) {
            return Err(Error::GroundMismatch(format!(
                "point {k} missing from the extended ground set"
            )));
        }
        Self::from_fn(ground, |k| self.apply(k))
    }
}

fn check_ground(ground: &[i64]) -> Result<()> {
    if ground.is_empty() {
        return Err(Error::InvalidPermutation("empty ground set".into()));
    }
    if !ground.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidPermutation(
            "ground set must be strictly increasing".into(),
        ));
    }
    if ground.len() > u32::MAX as usize {
        return Err(Error::InvalidPermutation("ground set too large".into()));
    }
    Ok(())
}

/// `lo..hi` if contiguous, else `[a,b,...]`.
pub(crate) fn format_ground(ground: &[i64]) -> String {
    let contiguous = ground.windows(2).all(|w| w[1] == w[0] + 1);
    if contiguous {
        format!("{}..{}", ground[0], ground[ground.len() - 1])
    } else {
        let parts: Vec<String> = ground.iter().map(i64::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm{{ground={}; ", format_ground(&self.ground))?;
        let cycles = self.cycles();
        if cycles.is_empty() {
            write!(f, "()")?;
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(i64::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut c = Cursor::new(s);
        let p = c.permutation()?;
        c.skip_ws();
        if !c.at_end() {
            return Err(c.error("trailing input after permutation"));
        }
        Ok(p)
    }
}

/// Strictly increasing integer interval `lo..=hi`.
pub fn interval(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).collect()
}

/// `{−k..−1, 1..k}`.
pub fn signed_ground(k: i64) -> Vec<i64> {
    (-k..=-1).chain(1..=k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn literal_round_trip_and_composition_order() {
        let a = p("perm{ground=1..3; (1 2)}");
        let b = p("perm{ground=1..3; (2 3)}");
        // apply b first: 1→1→2, 2→3→3, 3→2→1
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 3);
        assert_eq!(ab.apply(3), 1);
        assert_eq!(ab.to_string(), "perm{ground=1..3; (1 2 3)}");
        let q = p("perm{ground=[-2,-1,1,2]; (-1 1)}");
        assert_eq!(q.to_string().parse::<Permutation>().unwrap(), q);
        assert!("perm{ground=1..3; (1 4)}".parse::<Permutation>().is_err());
    }

    #[test]
    fn lengths_on_small_cases() {
        let w0 = p("perm{ground=1..3; (1 3)}");
        assert_eq!(w0.coxeter_length(), 3);
        assert_eq!(w0.transposition_length(), 1);
        let three = p("perm{ground=1..3; (1 2 3)}");
        assert_eq!(three.transposition_length(), 2);
        assert_eq!(Permutation::identity(interval(1, 4)).unwrap().coxeter_length(), 0);
    }

    #[test]
    fn support_radius_modes() {
        let s = p("perm{ground=-2..2; (-1 2)}");
        assert_eq!(s.support_radius(Parity::Odd).unwrap(), 2);
        assert!(s.support_radius(Parity::Even).is_err());
        let t = p("perm{ground=[-1,1]; (-1 1)}");
        assert_eq!(t.support_radius(Parity::Even).unwrap(), 1);
    }

    #[test]
    fn fixed_points_of_reflections() {
        let refl0 = Permutation::from_fn(interval(-3, 3), |k| -k).unwrap();
        assert_eq!(refl0.fixed_points(), vec![0]);
        let refl_half = Permutation::from_fn(interval(-2, 3), |k| 1 - k).unwrap();
        assert!(refl_half.fixed_points().is_empty());
        assert_eq!(Permutation::identity(interval(1, 4)).unwrap().fixed_points().len(), 4);
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |imgs| Permutation::from_indices(interval(-(n as i64) / 2, (n as i64 - 1) - (n as i64) / 2), imgs).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(a in arb_perm(5), b in arb_perm(5), c in arb_perm(5)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert_eq!(a.to_string().parse::<Permutation>().unwrap(), a);
        }

        #[test]
        fn radius_is_submultiplicative(a in arb_perm(5), b in arb_perm(5)) {
            let r = |x: &Permutation| x.support_radius(Parity::Odd).unwrap();
            prop_assert!(r(&a.compose(&b)) <= r(&a).max(r(&b)));
        }

        #[test]
        fn lengths_are_inverse_invariant(a in arb_perm(6)) {
            prop_assert_eq!(a.coxeter_length(), a.inverse().coxeter_length());
            prop_assert_eq!(a.transposition_length(), a.inverse().transposition_length());
        }
    }
}
