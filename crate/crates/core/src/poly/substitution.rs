use crate::error::{ensure_dim, Error, Result};
use crate::scalar::Scalar;

use super::{same_ring, Generators, Polynomial};

/// The algebra endomorphism sending the `i`-th generator to `images[i]`.
#[derive(Clone, Debug)]
pub struct Substitution<S> {
    generators: Generators,
    images: Vec<Polynomial<S>>,
}

impl<S: Scalar> PartialEq for Substitution<S> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.generators, &other.generators) && self.images == other.images
    }
}

impl<S: Scalar> Substitution<S> {
    pub fn new(generators: &Generators, images: Vec<Polynomial<S>>) -> Result<Self> {
        ensure_dim(generators.len(), images.len())?;
        if images
            .iter()
            .any(|p| !same_ring(p.generators(), generators))
        {
            return Err(Error::GeneratorMismatch);
        }
        Ok(Self {
            generators: generators.clone(),
            images,
        })
    }

    pub fn identity(generators: &Generators) -> Self {
        let images = (0..generators.len())
            .map(|i| Polynomial::var(generators, i))
            .collect();
        Self {
            generators: generators.clone(),
            images,
        }
    }

    /// `x_i ↦ Σ_j a_{ji} x_j`: column `i` of `columns` gives the image of
    /// generator `i`.
    pub fn linear(generators: &Generators, columns: &[Vec<S>]) -> Result<Self> {
        ensure_dim(generators.len(), columns.len())?;
        let mut images = Vec::with_capacity(columns.len());
        for col in columns {
            ensure_dim(generators.len(), col.len())?;
            let mut p = Polynomial::zero(generators);
            for (j, a) in col.iter().enumerate() {
                p = p.try_add(&Polynomial::var(generators, j).scale(a))?;
            }
            images.push(p);
        }
        Self::new(generators, images)
    }

    /// `x_i ↦ x_i + c_i`, the pullback along a translation.
    pub fn translation(generators: &Generators, shift: &[S]) -> Result<Self> {
        ensure_dim(generators.len(), shift.len())?;
        let images = shift
            .iter()
            .enumerate()
            .map(|(i, c)| {
                Polynomial::var(generators, i).try_add(&Polynomial::constant(generators, c.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(generators, images)
    }

    pub fn generators(&self) -> &Generators {
        &self.generators
    }

    pub fn images(&self) -> &[Polynomial<S>] {
        &self.images
    }

    pub fn image(&self, index: usize) -> &Polynomial<S> {
        &self.images[index]
    }

    /// Every image is homogeneous of degree one (or zero).
    pub fn is_linear(&self) -> bool {
        self.images.iter().all(|p| p.is_homogeneous(1))
    }

    /// Every image has degree at most one.
    pub fn is_affine(&self) -> bool {
        self.images
            .iter()
            .all(|p| p.degree().is_none_or(|d| d <= 1))
    }

    /// Simultaneous substitution of the images into `f`.
    pub fn apply(&self, f: &Polynomial<S>) -> Result<Polynomial<S>> {
        if !same_ring(f.generators(), &self.generators) {
            return Err(Error::GeneratorMismatch);
        }
        let n = self.generators.len();
        // powers[i][e] = images[i]^e, grown on demand
        let mut powers: Vec<Vec<Polynomial<S>>> = vec![vec![Polynomial::one(&self.generators)]; n];
        let mut out = Polynomial::zero(&self.generators);
        for (m, c) in f.terms() {
            let mut term = Polynomial::constant(&self.generators, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i]
                        .last()
                        .expect("nonempty")
                        .try_mul(&self.images[i])?;
                    powers[i].push(next);
                }
                term = term.try_mul(&powers[i][e as usize])?;
            }
            out = out.try_add(&term)?;
            out.guard()?;
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let images = other
            .images
            .iter()
            .map(|p| self.apply(p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.generators, images)
    }

    /// `n`-fold composite; `power(0)` is the identity.
    pub fn power(&self, n: u32) -> Result<Self> {
        let mut out = Self::identity(&self.generators);
        for _ in 0..n {
            out = self.compose(&out)?;
        }
        Ok(out)
    }
}
