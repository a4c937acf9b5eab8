use std::collections::BTreeMap;

use crate::error::{ensure_dim, Error, Result};
use crate::scalar::Scalar;

use super::{LinearMap, Vector};

/// Largest dimension stored densely; bigger tensors use a sparse map.
pub const DENSE_LIMIT: usize = 16;

#[derive(Clone, Debug)]
enum Storage<S> {
    Dense(Vec<S>),
    Sparse(BTreeMap<(usize, usize, usize), S>),
}

/// Structure constants of a bilinear operation: `c(i, j, k)` is the
/// coefficient of `e_k` in `op(e_i, e_j)`.
#[derive(Clone, Debug)]
pub struct Trilinear<S> {
    dim: usize,
    storage: Storage<S>,
}

impl<S: Scalar> Trilinear<S> {
    pub fn zero(dim: usize) -> Self {
        let storage = if dim <= DENSE_LIMIT {
            Storage::Dense(vec![S::zero(); dim * dim * dim])
        } else {
            Storage::Sparse(BTreeMap::new())
        };
        Self { dim, storage }
    }

    /// Builds a tensor from `(i, j, k, value)` entries. Repeated indices
    /// accumulate.
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, S)>,
    {
        let mut t = Self::zero(dim);
        for (i, j, k, v) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            t.add_to(i, j, k, v);
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse(_))
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> S {
        match &self.storage {
            Storage::Dense(data) => data[self.offset(i, j, k)].clone(),
            Storage::Sparse(map) => map.get(&(i, j, k)).cloned().unwrap_or_else(S::zero),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: S) {
        assert!(
            i < self.dim && j < self.dim && k < self.dim,
            "tensor index out of range"
        );
        let offset = self.offset(i, j, k);
        match &mut self.storage {
            Storage::Dense(data) => data[offset] = value,
            Storage::Sparse(map) => {
                if value.is_zero() {
                    map.remove(&(i, j, k));
                } else {
                    map.insert((i, j, k), value);
                }
            }
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, value: S) {
        if value.is_zero() {
            return;
        }
        let current = self.get(i, j, k);
        self.set(i, j, k, current + value);
    }

    /// All nonzero entries, in lexicographic index order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, S)> {
        match &self.storage {
            Storage::Dense(data) => {
                let d = self.dim;
                data.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(o, v)| (o / (d * d), (o / d) % d, o % d, v.clone()))
                    .collect()
            }
            Storage::Sparse(map) => map
                .iter()
                .map(|(&(i, j, k), v)| (i, j, k, v.clone()))
                .collect(),
        }
    }

    /// Calls `f(k, c(i, j, k))` for every nonzero coefficient of `op(e_i, e_j)`.
    fn for_each_in_column(&self, i: usize, j: usize, mut f: impl FnMut(usize, &S)) {
        match &self.storage {
            Storage::Dense(data) => {
                let start = self.offset(i, j, 0);
                for (k, v) in data[start..start + self.dim].iter().enumerate() {
                    if !v.is_zero() {
                        f(k, v);
                    }
                }
            }
            Storage::Sparse(map) => {
                for (&(_, _, k), v) in map.range((i, j, 0)..(i, j, self.dim)) {
                    f(k, v);
                }
            }
        }
    }

    /// `op(e_i, e_j)`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector<S> {
        let mut out = Vector::zeros(self.dim);
        self.for_each_in_column(i, j, |k, v| out.add_at(k, v.clone()));
        out
    }

    /// `op(x, y)` with `result_k = Σ x_i y_j c(i, j, k)`.
    pub fn contract(&self, x: &Vector<S>, y: &Vector<S>) -> Result<Vector<S>> {
        ensure_dim(self.dim, x.dim())?;
        ensure_dim(self.dim, y.dim())?;
        Ok(self.eval(x, y))
    }

    pub(crate) fn eval(&self, x: &Vector<S>, y: &Vector<S>) -> Vector<S> {
        let mut out = Vector::zeros(self.dim);
        for (i, xi) in x.nonzeros() {
            for (j, yj) in y.nonzeros() {
                let w = xi.clone() * yj.clone();
                self.for_each_in_column(i, j, |k, c| out.add_at(k, w.clone() * c.clone()));
            }
        }
        out
    }

    fn map_entries(&self, f: impl Fn(&S) -> S) -> Self {
        let mut out = Self::zero(self.dim);
        for (i, j, k, v) in self.entries() {
            out.set(i, j, k, f(&v));
        }
        out
    }

    pub fn scale(&self, factor: &S) -> Self {
        self.map_entries(|v| v.clone() * factor.clone())
    }

    pub fn neg(&self) -> Self {
        self.map_entries(|v| -v.clone())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        ensure_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (i, j, k, v) in other.entries() {
            out.add_to(i, j, k, v);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    /// The opposite operation `op^op(x, y) = op(y, x)`.
    pub fn opposite(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (i, j, k, v) in self.entries() {
            out.set(j, i, k, v);
        }
        out
    }

    /// `m ∘ op`.
    pub fn post_map(&self, m: &LinearMap<S>) -> Result<Self> {
        ensure_dim(self.dim, m.dim())?;
        let mut out = Self::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let image = m.apply_unchecked(&self.basis_product(i, j));
                for (k, v) in image.nonzeros() {
                    out.set(i, j, k, v.clone());
                }
            }
        }
        Ok(out)
    }

    /// `op ∘ (f ⊗ f)`.
    pub fn pre_map(&self, f: &LinearMap<S>) -> Result<Self> {
        ensure_dim(self.dim, f.dim())?;
        let columns: Vec<Vector<S>> = (0..self.dim).map(|j| f.column(j)).collect();
        let mut out = Self::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let image = self.eval(&columns[i], &columns[j]);
                for (k, v) in image.nonzeros() {
                    out.set(i, j, k, v.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        match &self.storage {
            Storage::Dense(data) => data.iter().all(|v| v.is_zero()),
            Storage::Sparse(map) => map.is_empty(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries()
            .into_iter()
            .all(|(i, j, k, v)| self.get(j, i, k) == v)
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.entries()
            .into_iter()
            .all(|(i, j, k, v)| self.get(j, i, k) == -v)
    }

    /// Tensor product of two operations on `A ⊗ B`, using the
    /// [`LinearMap::kronecker`] basis layout.
    pub fn kronecker(&self, other: &Self) -> Self {
        let n2 = other.dim;
        let mut out = Self::zero(self.dim * n2);
        let rhs = other.entries();
        for (i1, j1, k1, a) in self.entries() {
            for (i2, j2, k2, b) in &rhs {
                out.add_to(
                    i1 * n2 + i2,
                    j1 * n2 + j2,
                    k1 * n2 + k2,
                    a.clone() * b.clone(),
                );
            }
        }
        out
    }
}

impl<S: Scalar> PartialEq for Trilinear<S> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries() == other.entries()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn heisenberg_bracket() -> Trilinear<Rational> {
        Trilinear::from_entries(
            3,
            [
                (0, 1, 2, Rational::from_integer(1.into())),
                (1, 0, 2, Rational::from_integer((-1).into())),
            ],
        )
        .unwrap()
    }

    #[test]
    fn contract_basics() {
        let t = heisenberg_bracket();
        let x = Vector::basis(3, 0);
        let y = Vector::basis(3, 1);
        assert_eq!(t.contract(&x, &y).unwrap(), Vector::basis(3, 2));
        assert!(t.contract(&Vector::zeros(3), &y).unwrap().is_zero());
        assert!(t.contract(&Vector::zeros(2), &y).is_err());
        assert!(t.is_antisymmetric());
        assert!(!t.is_symmetric());
    }

    #[test]
    fn out_of_range_entry() {
        let bad = Trilinear::from_entries(3, [(0, 3, 1, Rational::from_integer(1.into()))]);
        assert_eq!(bad, Err(Error::IndexOutOfRange { index: 3, dim: 3 }));
    }

    #[test]
    fn sparse_storage_above_limit() {
        let mut t = Trilinear::<Rational>::zero(DENSE_LIMIT + 1);
        assert!(t.is_sparse());
        assert!(!Trilinear::<Rational>::zero(DENSE_LIMIT).is_sparse());
        t.set(16, 2, 5, Rational::from_integer(3.into()));
        let x = Vector::basis(17, 16);
        let y = Vector::basis(17, 2);
        assert_eq!(
            t.contract(&x, &y).unwrap()[5],
            Rational::from_integer(3.into())
        );
        t.set(16, 2, 5, Rational::from_integer(0.into()));
        assert!(t.is_zero());
    }

    #[test]
    fn dense_and_sparse_agree_through_kronecker() {
        let h = heisenberg_bracket();
        let big = h.kronecker(&h).kronecker(&h);
        assert!(big.is_sparse());
        assert_eq!(big.entries().len(), 8);
        assert_eq!(big.opposite().opposite(), big);
    }
}
