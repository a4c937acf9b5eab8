//! Sparse multivariate polynomials with exact coefficients, and the Poisson
//! structures built on them.

mod poisson;
mod substitution;
mod truncate;

pub use poisson::{
    check_poisson_substitution, manifold_nonrigidity_check, twisted_associator,
    LiePoissonStructure, ManifoldCertificate, PoissonBracket, SymplecticStructure, TwistedPoisson,
};
pub use substitution::Substitution;
pub use truncate::{truncated_algebra, truncated_map, TruncatedBasis};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Results with more terms than this are refused.
pub const MAX_TERMS: usize = 1_000_000;

/// Ordered generator names shared by the polynomials of one ring.
pub type Generators = Arc<[String]>;

pub fn generators<I, T>(names: I) -> Generators
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    names.into_iter().map(Into::into).collect::<Vec<_>>().into()
}

pub(crate) fn same_ring(a: &Generators, b: &Generators) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Self(vec![0; vars])
    }

    pub fn var(vars: usize, index: usize) -> Self {
        let mut e = vec![0; vars];
        e[index] = 1;
        Self(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn render(&self, names: &[String]) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| {
                if *e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over named commuting generators. Zero coefficients are
/// never stored.
#[derive(Clone, Debug)]
pub struct Polynomial<S> {
    generators: Generators,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> PartialEq for Polynomial<S> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.generators, &other.generators) && self.terms == other.terms
    }
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(generators: &Generators) -> Self {
        Self {
            generators: generators.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(generators: &Generators, c: S) -> Self {
        let mut p = Self::zero(generators);
        p.add_term(Monomial::one(generators.len()), c);
        p
    }

    pub fn one(generators: &Generators) -> Self {
        Self::constant(generators, S::one())
    }

    /// The generator at `index`.
    pub fn var(generators: &Generators, index: usize) -> Self {
        let mut p = Self::zero(generators);
        p.add_term(Monomial::var(generators.len(), index), S::one());
        p
    }

    /// The generator with the given name.
    pub fn generator(generators: &Generators, name: &str) -> Result<Self> {
        let index = generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(Self::var(generators, index))
    }

    pub fn monomial(generators: &Generators, m: Monomial, c: S) -> Self {
        let mut p = Self::zero(generators);
        p.add_term(m, c);
        p
    }

    pub fn generators(&self) -> &Generators {
        &self.generators
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Whether every term has total degree exactly `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn ensure_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.generators, &other.generators) {
            Ok(())
        } else {
            Err(Error::GeneratorMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.ensure_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(&self.generators);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.ensure_ring(other)?;
        let mut out = Self::zero(&self.generators);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
            out.guard()?;
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut out = Self::one(&self.generators);
        for _ in 0..n {
            out = out.try_mul(self)?;
        }
        Ok(out)
    }

    pub(crate) fn guard(&self) -> Result<()> {
        if self.terms.len() > MAX_TERMS {
            Err(Error::ResourceLimit(format!(
                "polynomial exceeds {MAX_TERMS} terms"
            )))
        } else {
            Ok(())
        }
    }

    /// Partial derivative with respect to the generator at `index`.
    pub fn diff(&self, index: usize) -> Result<Self> {
        if index >= self.generators.len() {
            return Err(Error::IndexOutOfRange {
                index,
                dim: self.generators.len(),
            });
        }
        let mut out = Self::zero(&self.generators);
        for (m, c) in &self.terms {
            let e = m.0[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[index] -= 1;
            out.add_term(Monomial(exps), c.clone() * S::from_int(e as i64));
        }
        Ok(out)
    }

    /// Partial derivative with respect to a named generator.
    pub fn diff_by(&self, name: &str) -> Result<Self> {
        let index = self
            .generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        self.diff(index)
    }

    /// Value at a point given in generator order.
    pub fn eval(&self, point: &[S]) -> Result<S> {
        crate::error::ensure_dim(self.generators.len(), point.len())?;
        let mut total = S::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    term = term * x.clone();
                }
            }
            total = total + term;
        }
        Ok(total)
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            let body = if m.degree() == 0 {
                magnitude.to_string()
            } else if magnitude.is_one() {
                m.render(&self.generators)
            } else {
                format!("{magnitude}*{}", m.render(&self.generators))
            };
            match (n, negative) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn int(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial(vec![0, 2]);
        let b = Monomial(vec![1, 0]);
        let c = Monomial(vec![1, 1]);
        assert!(b < a);
        assert!(a < c);
        assert!(Monomial(vec![0, 1]) < Monomial(vec![1, 0]));
    }

    #[test]
    fn product_with_one_and_power_rule() {
        let g = generators(["e", "f", "h"]);
        let e = Polynomial::<Rational>::var(&g, 0);
        let h = Polynomial::var(&g, 2);
        let f = e.try_mul(&h.pow(2).unwrap()).unwrap();
        assert_eq!(f.try_mul(&Polynomial::one(&g)).unwrap(), f);
        let d = f.diff_by("h").unwrap();
        assert_eq!(d, e.try_mul(&h).unwrap().scale(&int(2)));
        assert_eq!(d.to_string(), "2*e*h");
    }

    #[test]
    fn cube_oracle() {
        let g = generators(["X"]);
        let x = Polynomial::<Rational>::var(&g, 0);
        let two_plus_x = x.try_add(&Polynomial::constant(&g, int(2))).unwrap();
        let cube = two_plus_x.pow(3).unwrap();
        // expected coefficients by repeated multiplication: X^3 + 6X^2 + 12X + 8
        for (e, c) in [(3, 1), (2, 6), (1, 12), (0, 8)] {
            assert_eq!(cube.coefficient(&Monomial(vec![e])), int(c));
        }
        assert_eq!(cube.to_string(), "X^3 + 6*X^2 + 12*X + 8");
    }

    #[test]
    fn mismatch_and_display() {
        let g1 = generators(["X"]);
        let g2 = generators(["Y"]);
        let x = Polynomial::<Rational>::var(&g1, 0);
        let y = Polynomial::<Rational>::var(&g2, 0);
        assert_eq!(x.try_mul(&y), Err(Error::GeneratorMismatch));
        assert!(x.diff(3).is_err());
        let p = x
            .try_sub(&Polynomial::constant(
                &g1,
                Rational::new(1.into(), 2.into()),
            ))
            .unwrap();
        assert_eq!(p.to_string(), "X - 1/2");
        assert_eq!(p.neg().to_string(), "-X + 1/2");
        assert_eq!(Polynomial::<Rational>::zero(&g1).to_string(), "0");
        assert_eq!(
            p.eval(&[int(3)]).unwrap(),
            Rational::new(5.into(), 2.into())
        );
    }
}
