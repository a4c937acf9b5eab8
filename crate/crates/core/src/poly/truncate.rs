//! Finite-dimensional quotients `k[x]/(degree ≥ N)` of polynomial Poisson
//! algebras. The ideal of polynomials of degree at least `N` is closed under
//! the product and under any bracket that does not raise degree beyond
//! `deg F + deg G − 1`, so the quotient inherits the Poisson structure.

use std::collections::HashMap;

use crate::algebra::HomPoissonAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Trilinear, Vector};
use crate::scalar::Scalar;

use super::{Generators, Monomial, PoissonBracket, Polynomial, Substitution};

/// Monomials of degree below a bound, in graded-lexicographic order.
#[derive(Clone, Debug)]
pub struct TruncatedBasis {
    generators: Generators,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl TruncatedBasis {
    pub fn new(generators: &Generators, degree_bound: u32) -> Self {
        let n = generators.len();
        let mut monomials = Vec::new();
        let mut current = vec![0u32; n];
        enumerate(&mut current, 0, degree_bound, &mut monomials);
        monomials.sort();
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Self {
            generators: generators.clone(),
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.monomials
            .iter()
            .map(|m| m.render(&self.generators))
            .collect()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of `p` modulo the truncation ideal.
    pub fn coordinates<S: Scalar>(&self, p: &Polynomial<S>) -> Vector<S> {
        let mut v = Vector::zeros(self.len());
        for (m, c) in p.terms() {
            if let Some(i) = self.position(m) {
                v.add_at(i, c.clone());
            }
        }
        v
    }

    pub fn polynomial<S: Scalar>(&self, index: usize) -> Polynomial<S> {
        Polynomial::monomial(&self.generators, self.monomials[index].clone(), S::one())
    }
}

fn enumerate(current: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos == current.len() {
        out.push(Monomial::from_exponents(current.clone()));
        return;
    }
    for e in 0..remaining {
        current[pos] = e;
        enumerate(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

/// The truncation of `(k[x], {,}, ·)` to monomials of degree below
/// `degree_bound`, with identity twisting map.
pub fn truncated_algebra<S, B>(
    structure: &B,
    degree_bound: u32,
) -> Result<(TruncatedBasis, HomPoissonAlgebra<S>)>
where
    S: Scalar,
    B: PoissonBracket<S>,
{
    if degree_bound == 0 {
        return Err(Error::InvalidParameter {
            name: "degree".into(),
            reason: "degree bound must be positive".into(),
        });
    }
    let basis = TruncatedBasis::new(structure.generators(), degree_bound);
    let dim = basis.len();
    let polys: Vec<Polynomial<S>> = (0..dim).map(|i| basis.polynomial(i)).collect();
    let mut mu = Trilinear::zero(dim);
    let mut bracket = Trilinear::zero(dim);
    for i in 0..dim {
        for j in 0..dim {
            let prod = basis.coordinates(&polys[i].try_mul(&polys[j])?);
            for (k, v) in prod.nonzeros() {
                mu.set(i, j, k, v.clone());
            }
            let br = basis.coordinates(&structure.bracket(&polys[i], &polys[j])?);
            for (k, v) in br.nonzeros() {
                bracket.set(i, j, k, v.clone());
            }
        }
    }
    let algebra =
        HomPoissonAlgebra::new(basis.names(), bracket, mu, LinearMap::identity(dim), true)?;
    Ok((basis, algebra))
}

/// Matrix of a linear substitution acting on the truncated quotient.
pub fn truncated_map<S: Scalar>(
    basis: &TruncatedBasis,
    s: &Substitution<S>,
) -> Result<LinearMap<S>> {
    if !s.is_linear() {
        return Err(Error::Precondition(
            "only linear substitutions preserve the truncation ideal".into(),
        ));
    }
    let columns = (0..basis.len())
        .map(|j| Ok(basis.coordinates(&s.apply(&basis.polynomial(j))?)))
        .collect::<Result<Vec<_>>>()?;
    LinearMap::from_columns(columns)
}
