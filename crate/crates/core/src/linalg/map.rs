use crate::error::{ensure_dim, Error, Result};
use crate::scalar::Scalar;

use super::Vector;

/// A square matrix acting on coordinate vectors. Column `j` holds the image
/// of the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap<S> {
    dim: usize,
    // row-major
    entries: Vec<S>,
}

impl<S: Scalar> LinearMap<S> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(vec![S::one(); dim])
    }

    pub fn diagonal(diag: Vec<S>) -> Self {
        let dim = diag.len();
        let mut m = Self::zero(dim);
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = d;
        }
        m
    }

    /// Builds a map from row-major rows.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            ensure_dim(dim, row.len())?;
            entries.extend(row);
        }
        Ok(Self { dim, entries })
    }

    /// Builds a map from the images of the basis vectors.
    pub fn from_columns(columns: Vec<Vector<S>>) -> Result<Self> {
        let dim = columns.len();
        let mut m = Self::zero(dim);
        for (j, col) in columns.into_iter().enumerate() {
            ensure_dim(dim, col.dim())?;
            for (i, v) in col.into_entries().into_iter().enumerate() {
                m.entries[i * dim + j] = v;
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: S) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim.max(1))
    }

    /// Image of the `j`-th basis vector.
    pub fn column(&self, j: usize) -> Vector<S> {
        Vector::from_vec((0..self.dim).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn apply(&self, v: &Vector<S>) -> Result<Vector<S>> {
        ensure_dim(self.dim, v.dim())?;
        Ok(self.apply_unchecked(v))
    }

    pub(crate) fn apply_unchecked(&self, v: &Vector<S>) -> Vector<S> {
        let mut out = Vector::zeros(self.dim);
        for (j, x) in v.nonzeros() {
            for i in 0..self.dim {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out.add_at(i, a.clone() * x.clone());
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        ensure_dim(self.dim, other.dim)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let slot = &mut out.entries[i * n + j];
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    /// The `n`-fold composite; `power(0)` is the identity.
    pub fn power(&self, n: u32) -> Self {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.compose_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.compose_unchecked(&base);
            }
        }
        result
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|e| e.clone() * factor.clone())
                .collect(),
        }
    }

    /// Exact Gauss-Jordan elimination. Any nonzero entry is an acceptable
    /// pivot, so the first one found in the column is used.
    pub fn invert(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(Error::NotInvertible)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[col * n + col]
                .checked_recip()
                .ok_or(Error::NotInvertible)?;
            for j in 0..n {
                a[col * n + j] = a[col * n + j].clone() * p.clone();
                inv[col * n + j] = inv[col * n + j].clone() * p.clone();
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let sa = a[col * n + j].clone();
                    let si = inv[col * n + j].clone();
                    a[r * n + j] = a[r * n + j].clone() - factor.clone() * sa;
                    inv[r * n + j] = inv[r * n + j].clone() - factor.clone() * si;
                }
            }
        }
        Ok(Self {
            dim: n,
            entries: inv,
        })
    }

    /// Kronecker product; basis vector `(i, j)` of the product sits at
    /// index `i * other.dim + j`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 * n2;
        let mut out = Self::zero(n);
        for r1 in 0..n1 {
            for c1 in 0..n1 {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..n2 {
                    for c2 in 0..n2 {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.entries[(r1 * n2 + r2) * n + c1 * n2 + c2] = a.clone() * b.clone();
                        }
                    }
                }
            }
        }
        out
    }
}
