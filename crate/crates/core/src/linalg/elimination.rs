//! Exact elimination: an incremental sparse echelon basis for spans and
//! membership tests, and fraction-free (Bareiss) dense elimination for
//! affine systems.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::hash::Hash;

use super::vector::Vector;
use crate::scalar::{Rational, Scalar};

/// Incremental row-echelon basis of a span. Each stored row is normalised
/// to leading coefficient 1 and keyed by its leading (smallest) label.
#[derive(Clone, Debug)]
pub struct Echelon<L> {
    pivots: HashMap<L, Vector<L>>,
    order: Vec<L>,
}

impl<L: Ord + Clone + Hash> Default for Echelon<L> {
    fn default() -> Self {
        Echelon {
            pivots: HashMap::new(),
            order: Vec::new(),
        }
    }
}

impl<L: Ord + Clone + Hash> Echelon<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the stored rows. The result is zero iff `v` lies
    /// in the span.
    pub fn reduce(&self, v: &Vector<L>) -> Vector<L> {
        let mut v = v.clone();
        // each step cancels the current leading label, so the leading label
        // strictly increases and the loop terminates
        loop {
            let (lead, c) = match v.leading() {
                Some((l, c)) => (l.clone(), c.clone()),
                None => return v,
            };
            match self.pivots.get(&lead) {
                Some(row) => v = v.add_scaled(row, &(-c)),
                None => {
                    // leading label is free; keep reducing the tail so the
                    // result is canonical
                    let head = Vector::monomial(lead.clone(), c.clone());
                    let tail = &v - &head;
                    let reduced_tail = self.reduce(&tail);
                    return &head + &reduced_tail;
                }
            }
        }
    }

    pub fn contains(&self, v: &Vector<L>) -> bool {
        // only the leading-term reduction is needed for membership
        let mut v = v.clone();
        while let Some((lead, c)) = v.leading() {
            match self.pivots.get(lead) {
                Some(row) => {
                    let c = c.clone();
                    v = v.add_scaled(row, &(-c));
                }
                None => return false,
            }
        }
        true
    }

    /// Adds `v` to the span; returns `true` when it was independent.
    pub fn insert(&mut self, v: &Vector<L>) -> bool {
        let mut v = v.clone();
        while let Some((lead, c)) = v.leading() {
            match self.pivots.get(lead) {
                Some(row) => {
                    let c = c.clone();
                    v = v.add_scaled(row, &(-c));
                }
                None => {
                    let lead = lead.clone();
                    let inv = c.recip();
                    let row = v.scale(&inv);
                    self.pivots.insert(lead.clone(), row);
                    self.order.push(lead);
                    return true;
                }
            }
        }
        false
    }

    /// Stored rows in insertion order.
    pub fn rows(&self) -> impl Iterator<Item = &Vector<L>> {
        self.order.iter().map(|l| &self.pivots[l])
    }
}

/// Dimension of the exact linear span of `vectors`.
pub fn span_rank<L, I>(vectors: I) -> usize
where
    L: Ord + Clone + Hash,
    I: IntoIterator<Item = Vector<L>>,
{
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(&v);
    }
    ech.rank()
}

/// Clears denominators of a row so that all entries are Gaussian integers.
fn integralize(row: &mut [Scalar]) {
    let mut lcm = num_bigint::BigInt::from(1);
    for x in row.iter() {
        for part in [&x.re, &x.im] {
            let d = part.denom();
            lcm = num_integer::Integer::lcm(&lcm, &d);
        }
    }
    if lcm != num_bigint::BigInt::from(1) {
        let m = Scalar::real(Rational::from_big(num_rational::BigRational::from_integer(lcm)));
        for x in row.iter_mut() {
            *x = &*x * &m;
        }
    }
}

/// Fraction-free Gaussian elimination in place. Returns the pivot columns
/// (in row order) and the row permutation applied (`perm[r]` = original
/// index of the row now at position `r`).
fn bareiss(m: &mut [Vec<Scalar>], cols: usize) -> (Vec<usize>, Vec<usize>) {
    for row in m.iter_mut() {
        integralize(row);
    }
    let rows = m.len();
    let mut perm: Vec<usize> = (0..rows).collect();
    let mut pivots = Vec::new();
    let mut prev = Scalar::ONE;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        perm.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            let factor = m[i][c].clone();
            for j in 0..cols.max(m[i].len()) {
                if j >= m[i].len() {
                    break;
                }
                let num = &(&pivot * &m[i][j]) - &(&factor * &m[r][j]);
                let q = &num / &prev;
                debug_assert!(q.is_gaussian_integer(), "Bareiss division must be exact");
                m[i][j] = q;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    (pivots, perm)
}

/// Rank of a dense matrix (rows of equal length) via Bareiss elimination.
pub fn bareiss_rank(matrix: &[Vec<Scalar>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut m = matrix.to_vec();
    bareiss(&mut m, cols).0.len()
}

/// Outcome of [`solve_affine`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution<L: Ord> {
    /// One exact solution; free unknowns are set to zero.
    Solution(BTreeMap<L, Scalar>),
    /// No solution exists; `row` is the index of an input constraint that
    /// reduces to `0 = c` with `c ≠ 0`.
    Infeasible { row: usize },
}

/// Solves `⟨coeffs_k, x⟩ = rhs_k` for all `k` exactly.
pub fn solve_affine<L: Ord + Clone>(constraints: &[(Vector<L>, Scalar)]) -> AffineSolution<L> {
    let unknowns: Vec<L> = constraints
        .iter()
        .flat_map(|(v, _)| v.labels().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let n = unknowns.len();
    let mut m: Vec<Vec<Scalar>> = constraints
        .iter()
        .map(|(v, b)| {
            let mut row: Vec<Scalar> = unknowns.iter().map(|u| v.coeff(u)).collect();
            row.push(b.clone());
            row
        })
        .collect();
    let (pivots, perm) = bareiss(&mut m, n + 1);
    if let Some(pos) = pivots.iter().position(|&c| c == n) {
        return AffineSolution::Infeasible { row: perm[pos] };
    }
    let mut x = vec![Scalar::ZERO; n];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let mut acc = m[r][n].clone();
        for j in c + 1..n {
            if !m[r][j].is_zero() {
                acc -= &(&m[r][j] * &x[j]);
            }
        }
        x[c] = &acc / &m[r][c];
    }
    AffineSolution::Solution(unknowns.into_iter().zip(x).collect())
}
