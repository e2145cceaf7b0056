use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// A finitely supported vector over an ordered label set.
///
/// Terms are kept sorted by label with no explicit zeros, so structural
/// equality is exact coordinatewise equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector<L> {
    terms: Vec<(L, Scalar)>,
}

impl<L> Default for Vector<L> {
    fn default() -> Self {
        Vector { terms: Vec::new() }
    }
}

impl<L: Ord + Clone> Vector<L> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn basis(label: L) -> Self {
        Vector {
            terms: vec![(label, Scalar::ONE)],
        }
    }

    pub fn monomial(label: L, coeff: Scalar) -> Self {
        if coeff.is_zero() {
            Vector::zero()
        } else {
            Vector {
                terms: vec![(label, coeff)],
            }
        }
    }

    /// Builds a vector from arbitrary terms, merging repeated labels.
    pub fn from_terms<I: IntoIterator<Item = (L, Scalar)>>(terms: I) -> Self {
        let mut terms: Vec<(L, Scalar)> = terms.into_iter().collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(L, Scalar)> = Vec::with_capacity(terms.len());
        for (l, c) in terms {
            match out.last_mut() {
                Some((last, acc)) if *last == l => *acc += &c,
                _ => out.push((l, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Vector { terms: out }
    }

    /// Terms already sorted by strictly increasing label; zeros are dropped.
    pub(crate) fn from_sorted(mut terms: Vec<(L, Scalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        terms.retain(|(_, c)| !c.is_zero());
        Vector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &Scalar)> {
        self.terms.iter().map(|(l, c)| (l, c))
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.terms.iter().map(|(l, _)| l)
    }

    pub fn leading(&self) -> Option<(&L, &Scalar)> {
        self.terms.first().map(|(l, c)| (l, c))
    }

    pub fn coeff(&self, label: &L) -> Scalar {
        match self.terms.binary_search_by(|(l, _)| l.cmp(label)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Scalar::ZERO,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Vector::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Vector {
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
        }
    }

    /// Complex conjugation of every coefficient.
    pub fn conj(&self) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(l, x)| (l.clone(), x.conj()))
                .collect(),
        }
    }

    /// `self + c·other`, merging sorted term lists.
    pub fn add_scaled(&self, other: &Self, c: &Scalar) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0.clone(), &b[j].1 * c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = &a[i].1 + &(&b[j].1 * c);
                    if !s.is_zero() {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(l, x)| (l.clone(), x * c)));
        Vector { terms: out }
    }

    /// Relabels through `f`, which need not be injective.
    pub fn map_labels<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> M) -> Vector<M> {
        Vector::from_terms(self.terms.iter().map(|(l, c)| (f(l), c.clone())))
    }

    /// Linear extension of a map given on labels.
    pub fn extend_linear<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> Vector<M>) -> Vector<M> {
        if let [(l, c)] = self.terms.as_slice() {
            return f(l).scale(c);
        }
        let mut acc: Vec<(M, Scalar)> = Vec::new();
        for (l, c) in &self.terms {
            for (m, x) in f(l).terms {
                acc.push((m, &x * c));
            }
        }
        Vector::from_terms(acc)
    }

    /// Tensor product; coordinates of `(i, j)` are `x_i · y_j`.
    pub fn tensor<M: Ord + Clone>(&self, other: &Vector<M>) -> Vector<(L, M)> {
        // lexicographic order on pairs is inherited from the sorted factors
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (l, a) in &self.terms {
            for (m, b) in &other.terms {
                terms.push(((l.clone(), m.clone()), a * b));
            }
        }
        Vector::from_sorted(terms)
    }

    pub fn into_terms(self) -> Vec<(L, Scalar)> {
        self.terms
    }

    /// Renders with a caller-supplied label printer as `c*label + ...`.
    pub fn display_with(&self, mut label: impl FnMut(&L) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(l, c)| format!("{c}*{}", label(l)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Bilinear extension of a map given on pairs of labels.
pub fn extend_bilinear<A, B, M>(
    x: &Vector<A>,
    y: &Vector<B>,
    mut f: impl FnMut(&A, &B) -> Vector<M>,
) -> Vector<M>
where
    A: Ord + Clone,
    B: Ord + Clone,
    M: Ord + Clone,
{
    if let ([(a, c)], [(b, d)]) = (x.terms.as_slice(), y.terms.as_slice()) {
        return f(a, b).scale(&(c * d));
    }
    let mut acc: Vec<(M, Scalar)> = Vec::new();
    for (a, c) in &x.terms {
        for (b, d) in &y.terms {
            let cd = c * d;
            for (m, v) in f(a, b).terms {
                acc.push((m, &v * &cd));
            }
        }
    }
    Vector::from_terms(acc)
}

impl<L: Ord + Clone> Add for &Vector<L> {
    type Output = Vector<L>;
    fn add(self, rhs: &Vector<L>) -> Vector<L> {
        self.add_scaled(rhs, &Scalar::ONE)
    }
}

impl<L: Ord + Clone> Add for Vector<L> {
    type Output = Vector<L>;
    fn add(self, rhs: Vector<L>) -> Vector<L> {
        &self + &rhs
    }
}

impl<L: Ord + Clone> Sub for &Vector<L> {
    type Output = Vector<L>;
    fn sub(self, rhs: &Vector<L>) -> Vector<L> {
        self.add_scaled(rhs, &Scalar::from_integer(-1))
    }
}

impl<L: Ord + Clone> Sub for Vector<L> {
    type Output = Vector<L>;
    fn sub(self, rhs: Vector<L>) -> Vector<L> {
        &self - &rhs
    }
}

impl<L: Ord + Clone> Neg for &Vector<L> {
    type Output = Vector<L>;
    fn neg(self) -> Vector<L> {
        self.scale(&Scalar::from_integer(-1))
    }
}

impl<L: Ord + Clone> Mul<&Vector<L>> for &Scalar {
    type Output = Vector<L>;
    fn mul(self, rhs: &Vector<L>) -> Vector<L> {
        rhs.scale(self)
    }
}

impl<L: Ord + Clone> FromIterator<(L, Scalar)> for Vector<L> {
    fn from_iter<I: IntoIterator<Item = (L, Scalar)>>(iter: I) -> Self {
        Vector::from_terms(iter)
    }
}

impl<L: fmt::Debug> fmt::Debug for Vector<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}*{l:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(terms: &[(u32, i64)]) -> Vector<u32> {
        Vector::from_terms(terms.iter().map(|&(l, c)| (l, Scalar::from_integer(c))))
    }

    #[test]
    fn from_terms_merges_and_drops_zeros() {
        let x = v(&[(3, 1), (1, 2), (3, -1), (2, 0)]);
        assert_eq!(x, v(&[(1, 2)]));
        assert_eq!(x.support_len(), 1);
    }

    #[test]
    fn tensor_of_units_and_bilinearity() {
        let e = Vector::basis(0u32);
        let ee = e.tensor(&e);
        assert_eq!(ee.coeff(&(0, 0)), Scalar::ONE);
        assert_eq!(ee.support_len(), 1);

        let x = v(&[(0, 1), (2, 3)]);
        let y = v(&[(1, -1), (5, 2)]);
        let two = Scalar::from_integer(2);
        assert_eq!(x.scale(&two).tensor(&y), x.tensor(&y).scale(&two));
        let z = v(&[(0, 7)]);
        assert_eq!((&x + &z).tensor(&y), &x.tensor(&y) + &z.tensor(&y));
    }

    #[test]
    fn tensor_dimension_counts() {
        // |S3 basis| * |Z2 basis|
        let a = Vector::from_terms((0..6u32).map(|l| (l, Scalar::ONE)));
        let b = Vector::from_terms((0..2u32).map(|l| (l, Scalar::ONE)));
        assert_eq!(a.tensor(&b).support_len(), 12);
    }
}
