use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{ensure_dim, Result};
use crate::scalar::Scalar;

/// Coordinates of an element in a fixed basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<S> {
    entries: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            entries: vec![S::zero(); dim],
        }
    }

    /// The `index`-th standard basis vector.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[index] = S::one();
        v
    }

    pub fn from_vec(entries: Vec<S>) -> Self {
        Self { entries }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::from_vec(values.iter().map(|&v| S::from_int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self::from_vec(
            self.entries
                .iter()
                .map(|e| e.clone() * factor.clone())
                .collect(),
        )
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        ensure_dim(self.dim(), other.dim())?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        ensure_dim(self.dim(), other.dim())?;
        Ok(self - other)
    }

    pub(crate) fn add_at(&mut self, index: usize, value: S) {
        let slot = &mut self.entries[index];
        *slot = slot.clone() + value;
    }

    /// Indices and values of the nonzero coordinates.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, &S)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
    }
}

impl<S> Index<usize> for Vector<S> {
    type Output = S;

    fn index(&self, index: usize) -> &S {
        &self.entries[index]
    }
}

impl<S: Scalar> Add for &Vector<S> {
    type Output = Vector<S>;

    fn add(self, rhs: &Vector<S>) -> Vector<S> {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector::from_vec(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Sub for &Vector<S> {
    type Output = Vector<S>;

    fn sub(self, rhs: &Vector<S>) -> Vector<S> {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector::from_vec(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<S: Scalar> Neg for &Vector<S> {
    type Output = Vector<S>;

    fn neg(self) -> Vector<S> {
        Vector::from_vec(self.entries.iter().map(|a| -a.clone()).collect())
    }
}

impl<S: Scalar> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}
