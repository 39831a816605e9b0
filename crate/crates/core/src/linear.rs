//! Sparse linear combinations, linear maps and incremental row reduction.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Q;

/// A finite formal linear combination of keys with rational coefficients.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Q>,
}

/// A vector expressed in some ordered basis, keyed by basis index.
pub type Vector = LinComb<usize>;

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(k, c)| (k, c.to_string())))
            .finish()
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn unit(key: K) -> Self {
        Self::term(key, Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Q {
        self.terms.get(key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn get(&self, key: &K) -> Option<&Q> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Q> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Q> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<K, Q> {
        self.terms
    }

    pub fn first(&self) -> Option<(&K, &Q)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, key: K, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn retain(&mut self, f: impl FnMut(&K, &mut Q) -> bool) {
        self.terms.retain(f);
    }

    /// Re-keys every term, merging collisions.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Applies a linear map given on keys.
    pub fn apply<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Q);
    type IntoIter = btree_map::Iter<'a, K, Q>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Q::one());
        out
    }
}

impl<K: Ord + Clone> Sub<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Q::one());
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scaled(&-Q::one())
    }
}

impl Vector {
    pub fn basis(i: usize) -> Self {
        Self::unit(i)
    }

    pub fn from_dense(entries: &[Q]) -> Self {
        entries.iter().cloned().enumerate().collect()
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); dim];
        for (i, c) in self {
            out[*i] = c.clone();
        }
        out
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }
}

/// A linear map between coordinate spaces, stored as sparse columns:
/// `columns[j]` is the image of the `j`-th source basis vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    rows: usize,
    columns: Vec<Vector>,
}

impl LinearMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            columns: vec![Vector::zero(); cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            rows: dim,
            columns: (0..dim).map(Vector::basis).collect(),
        }
    }

    /// Builds a map from its column images. Panics if a column has an
    /// entry outside `0..rows`.
    pub fn from_columns(rows: usize, columns: Vec<Vector>) -> Self {
        for col in &columns {
            if let Some(top) = col.max_index() {
                assert!(
                    top < rows,
                    "column entry {top} out of range for {rows} rows"
                );
            }
        }
        Self { rows, columns }
    }

    pub fn from_dense_rows(rows: &[Vec<Q>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut columns = vec![Vector::zero(); cols];
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (c, x) in row.iter().enumerate() {
                columns[c].add_term(r, x.clone());
            }
        }
        Self {
            rows: rows.len(),
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &Vector {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vector] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> Q {
        self.columns[col].coeff(&row)
    }

    pub fn set_entry(&mut self, row: usize, col: usize, value: Q) {
        assert!(row < self.rows && col < self.columns.len());
        let current = self.columns[col].coeff(&row);
        self.columns[col].add_term(row, value - current);
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        v.apply(|j| self.columns[*j].clone())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.cols(), other.rows(), "composition dimension mismatch");
        LinearMap {
            rows: self.rows,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                out[*r][c] = x.clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut span = Span::new();
        for c in &self.columns {
            span.insert(c.clone());
        }
        span.dim()
    }
}

/// A subspace kept in reduced row echelon form. Pivots are the smallest
/// index of each basis row; every row has coefficient 1 at its pivot and 0 at
/// every other pivot.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: BTreeMap<usize, Vector>,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.contains_key(&i)
    }

    /// Basis rows in pivot order.
    pub fn basis(&self) -> impl Iterator<Item = (usize, &Vector)> {
        self.rows.iter().map(|(p, r)| (*p, r))
    }

    /// Reduces `v` modulo the span; the result has no component on any pivot.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut out = v.clone();
        for (p, row) in &self.rows {
            let c = out.coeff(p);
            if !c.is_zero() {
                out.add_scaled(row, &-c);
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let w = self.reduce(&v);
        let Some((&pivot, lead)) = w.first() else {
            return false;
        };
        let w = w.scaled(&lead.recip());
        for row in self.rows.values_mut() {
            let c = row.coeff(&pivot);
            if !c.is_zero() {
                row.add_scaled(&w, &-c);
            }
        }
        self.rows.insert(pivot, w);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut v = Vector::basis(2);
        v.add_term(2, int(-1));
        assert!(v.is_zero());
        v.add_term(1, int(0));
        assert!(v.is_zero());
    }

    #[test]
    fn span_is_reduced() {
        let mut s = Span::new();
        assert!(s.insert(Vector::from_dense(&[int(2), int(4), int(0)])));
        assert!(s.insert(Vector::from_dense(&[int(1), int(1), int(1)])));
        assert!(!s.insert(Vector::from_dense(&[int(3), int(5), int(1)])));
        assert_eq!(s.dim(), 2);
        let pivots: Vec<_> = s.pivots().collect();
        assert_eq!(pivots, vec![0, 1]);
        let (_, r0) = s.basis().next().unwrap();
        assert_eq!(r0.coeff(&1), int(0));
        assert_eq!(r0.coeff(&2), int(2));
        assert!(s.contains(&Vector::from_dense(&[int(0), frac(1, 2), frac(-1, 2)])));
    }

    #[test]
    fn compose_and_rank() {
        let a = LinearMap::from_dense_rows(&[vec![int(1), int(1)], vec![int(0), int(0)]]);
        let b = LinearMap::identity(2);
        assert_eq!(a.compose(&b), a);
        assert_eq!(a.rank(), 1);
        assert_eq!(LinearMap::identity(3).rank(), 3);
    }
}
