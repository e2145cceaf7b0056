use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use super::elimination::span_rank;
use super::vector::Vector;

/// A linear map stored as the images of an explicit domain basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap<D: Ord, C> {
    images: BTreeMap<D, Vector<C>>,
}

impl<D: Ord + Clone + Debug, C: Ord + Clone> LinearMap<D, C> {
    pub fn from_images<I: IntoIterator<Item = (D, Vector<C>)>>(images: I) -> Self {
        LinearMap {
            images: images.into_iter().collect(),
        }
    }

    /// Tabulates `f` on the given domain basis.
    pub fn from_fn<'a, I>(domain: I, mut f: impl FnMut(&D) -> Vector<C>) -> Self
    where
        I: IntoIterator<Item = &'a D>,
        D: 'a,
    {
        LinearMap {
            images: domain.into_iter().map(|d| (d.clone(), f(d))).collect(),
        }
    }

    pub fn identity<'a, I>(domain: I) -> LinearMap<D, D>
    where
        I: IntoIterator<Item = &'a D>,
        D: 'a,
    {
        LinearMap::from_fn(domain, |d| Vector::basis(d.clone()))
    }

    pub fn domain(&self) -> impl Iterator<Item = &D> {
        self.images.keys()
    }

    pub fn domain_dim(&self) -> usize {
        self.images.len()
    }

    /// Image of a basis label. Panics on labels outside the domain.
    pub fn image(&self, d: &D) -> &Vector<C> {
        self.images
            .get(d)
            .unwrap_or_else(|| panic!("label {d:?} outside the domain of the map"))
    }

    pub fn images(&self) -> impl Iterator<Item = (&D, &Vector<C>)> {
        self.images.iter()
    }

    pub fn apply(&self, x: &Vector<D>) -> Vector<C> {
        x.extend_linear(|d| self.image(d).clone())
    }

    /// `other ∘ self`.
    pub fn then<E: Ord + Clone>(&self, other: &LinearMap<C, E>) -> LinearMap<D, E>
    where
        C: Debug,
    {
        LinearMap {
            images: self
                .images
                .iter()
                .map(|(d, v)| (d.clone(), other.apply(v)))
                .collect(),
        }
    }

    /// Compares with another map on every domain label; returns the first
    /// label where they differ.
    pub fn first_difference(&self, other: &LinearMap<D, C>) -> Option<D> {
        for (d, v) in &self.images {
            match other.images.get(d) {
                Some(w) if w == v => {}
                _ => return Some(d.clone()),
            }
        }
        other
            .images
            .keys()
            .find(|d| !self.images.contains_key(d))
            .cloned()
    }
}

impl<D: Ord + Clone + Debug, C: Ord + Clone + Hash> LinearMap<D, C> {
    pub fn rank(&self) -> usize {
        span_rank(self.images.values().cloned())
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain_dim()
    }
}

/// `f ⊗ g` on the product basis.
pub fn tensor_map<A, B, C, D>(f: &LinearMap<A, B>, g: &LinearMap<C, D>) -> LinearMap<(A, C), (B, D)>
where
    A: Ord + Clone + Debug,
    B: Ord + Clone,
    C: Ord + Clone + Debug,
    D: Ord + Clone,
{
    let mut images = BTreeMap::new();
    for (a, fa) in f.images() {
        for (c, gc) in g.images() {
            images.insert((a.clone(), c.clone()), fa.tensor(gc));
        }
    }
    LinearMap { images }
}
