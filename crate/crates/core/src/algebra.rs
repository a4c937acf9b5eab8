//! Hom-algebras and (non-commutative) Hom-Poisson algebras given by
//! structure constants, with the element-level identities used by the
//! checkers.

use std::collections::HashSet;

use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{LinearMap, Trilinear, Vector};
use crate::scalar::Scalar;

/// `(xy)α(z) − α(x)(yz)` for the operation `op`.
pub fn associator<S: Scalar>(
    op: &Trilinear<S>,
    alpha: &LinearMap<S>,
    x: &Vector<S>,
    y: &Vector<S>,
    z: &Vector<S>,
) -> Vector<S> {
    let left = op.eval(&op.eval(x, y), &alpha.apply_unchecked(z));
    let right = op.eval(&alpha.apply_unchecked(x), &op.eval(y, z));
    &left - &right
}

/// `(xy)α(z) + (zx)α(y) + (yz)α(x)` for the operation `op`.
pub fn jacobian<S: Scalar>(
    op: &Trilinear<S>,
    alpha: &LinearMap<S>,
    x: &Vector<S>,
    y: &Vector<S>,
    z: &Vector<S>,
) -> Vector<S> {
    let term = |a: &Vector<S>, b: &Vector<S>, c: &Vector<S>| {
        op.eval(&op.eval(a, b), &alpha.apply_unchecked(c))
    };
    let mut out = term(x, y, z);
    out = &out + &term(z, x, y);
    &out + &term(y, z, x)
}

/// `{α(x), yz} − {x,y}α(z) − α(y){x,z}`.
pub fn leibniz_defect<S: Scalar>(
    bracket: &Trilinear<S>,
    mu: &Trilinear<S>,
    alpha: &LinearMap<S>,
    x: &Vector<S>,
    y: &Vector<S>,
    z: &Vector<S>,
) -> Vector<S> {
    let ax = alpha.apply_unchecked(x);
    let ay = alpha.apply_unchecked(y);
    let az = alpha.apply_unchecked(z);
    let lhs = bracket.eval(&ax, &mu.eval(y, z));
    let r1 = mu.eval(&bracket.eval(x, y), &az);
    let r2 = mu.eval(&ay, &bracket.eval(x, z));
    &(&lhs - &r1) - &r2
}

fn validate_basis(dim: usize, basis: &[String]) -> Result<()> {
    if dim == 0 {
        return Err(Error::InvalidBasis("dimension must be positive".into()));
    }
    ensure_dim(dim, basis.len())?;
    let mut seen = HashSet::new();
    for name in basis {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidBasis(format!("bad basis name `{name}`")));
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::InvalidBasis(format!(
                "duplicate basis name `{name}`"
            )));
        }
    }
    Ok(())
}

/// Default basis names `e1..en`.
pub fn default_basis(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

/// Operations and twisting map shared by every structure that can be
/// checked for multiplicativity or compared by a morphism.
pub trait Operations<S: Scalar> {
    fn dim(&self) -> usize;
    fn alpha(&self) -> &LinearMap<S>;
    /// Named bilinear operations, in a fixed order.
    fn operations(&self) -> Vec<(&'static str, &Trilinear<S>)>;
}

/// A Hom-algebra `(A, μ, α)`.
#[derive(Clone, Debug)]
pub struct HomAlgebra<S> {
    basis: Vec<String>,
    mu: Trilinear<S>,
    alpha: LinearMap<S>,
}

impl<S: Scalar> HomAlgebra<S> {
    pub fn new(basis: Vec<String>, mu: Trilinear<S>, alpha: LinearMap<S>) -> Result<Self> {
        validate_basis(mu.dim(), &basis)?;
        ensure_dim(mu.dim(), alpha.dim())?;
        Ok(Self { basis, mu, alpha })
    }

    /// An ordinary algebra, regarded as a Hom-algebra with `α = Id`.
    pub fn untwisted(basis: Vec<String>, mu: Trilinear<S>) -> Result<Self> {
        let alpha = LinearMap::identity(mu.dim());
        Self::new(basis, mu, alpha)
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn mu(&self) -> &Trilinear<S> {
        &self.mu
    }

    pub fn alpha(&self) -> &LinearMap<S> {
        &self.alpha
    }

    pub fn product(&self, x: &Vector<S>, y: &Vector<S>) -> Result<Vector<S>> {
        self.mu.contract(x, y)
    }

    pub fn hom_associator(&self, x: &Vector<S>, y: &Vector<S>, z: &Vector<S>) -> Result<Vector<S>> {
        self.ensure_args(&[x, y, z])?;
        Ok(associator(&self.mu, &self.alpha, x, y, z))
    }

    /// Hom-Jacobian of `μ` itself.
    pub fn hom_jacobian(&self, x: &Vector<S>, y: &Vector<S>, z: &Vector<S>) -> Result<Vector<S>> {
        self.ensure_args(&[x, y, z])?;
        Ok(jacobian(&self.mu, &self.alpha, x, y, z))
    }

    /// `as(x,y,z) + as(z,x,y) + as(y,z,x)`.
    pub fn cyclic_associator_sum(
        &self,
        x: &Vector<S>,
        y: &Vector<S>,
        z: &Vector<S>,
    ) -> Result<Vector<S>> {
        self.ensure_args(&[x, y, z])?;
        let a = associator(&self.mu, &self.alpha, x, y, z);
        let b = associator(&self.mu, &self.alpha, z, x, y);
        let c = associator(&self.mu, &self.alpha, y, z, x);
        Ok(&(&a + &b) + &c)
    }

    fn ensure_args(&self, args: &[&Vector<S>]) -> Result<()> {
        args.iter()
            .try_for_each(|v| ensure_dim(self.dim(), v.dim()))
    }

    pub fn with_alpha(&self, alpha: LinearMap<S>) -> Result<Self> {
        Self::new(self.basis.clone(), self.mu.clone(), alpha)
    }

    pub fn with_mu(&self, mu: Trilinear<S>) -> Result<Self> {
        Self::new(self.basis.clone(), mu, self.alpha.clone())
    }
}

impl<S: Scalar> PartialEq for HomAlgebra<S> {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.mu == other.mu && self.alpha == other.alpha
    }
}

impl<S: Scalar> Operations<S> for HomAlgebra<S> {
    fn dim(&self) -> usize {
        self.mu.dim()
    }

    fn alpha(&self) -> &LinearMap<S> {
        &self.alpha
    }

    fn operations(&self) -> Vec<(&'static str, &Trilinear<S>)> {
        vec![("mu", &self.mu)]
    }
}

/// A (non-commutative) Hom-Poisson algebra `(A, {,}, μ, α)`.
///
/// `commutative` is a claim about `μ`; it is verified by
/// [`check_hom_poisson`](crate::check::check_hom_poisson), not enforced here.
#[derive(Clone, Debug)]
pub struct HomPoissonAlgebra<S> {
    basis: Vec<String>,
    bracket: Trilinear<S>,
    mu: Trilinear<S>,
    alpha: LinearMap<S>,
    commutative: bool,
}

impl<S: Scalar> HomPoissonAlgebra<S> {
    pub fn new(
        basis: Vec<String>,
        bracket: Trilinear<S>,
        mu: Trilinear<S>,
        alpha: LinearMap<S>,
        commutative: bool,
    ) -> Result<Self> {
        validate_basis(mu.dim(), &basis)?;
        ensure_dim(mu.dim(), bracket.dim())?;
        ensure_dim(mu.dim(), alpha.dim())?;
        Ok(Self {
            basis,
            bracket,
            mu,
            alpha,
            commutative,
        })
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn bracket(&self) -> &Trilinear<S> {
        &self.bracket
    }

    pub fn mu(&self) -> &Trilinear<S> {
        &self.mu
    }

    pub fn alpha(&self) -> &LinearMap<S> {
        &self.alpha
    }

    pub fn is_commutative_claimed(&self) -> bool {
        self.commutative
    }

    /// Index of a basis element by name.
    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    /// The basis vector with the given name.
    pub fn element(&self, name: &str) -> Option<Vector<S>> {
        self.basis_index(name).map(|i| Vector::basis(self.dim(), i))
    }

    pub fn hom_associator(&self, x: &Vector<S>, y: &Vector<S>, z: &Vector<S>) -> Result<Vector<S>> {
        self.ensure_args(&[x, y, z])?;
        Ok(associator(&self.mu, &self.alpha, x, y, z))
    }

    /// Hom-Jacobian of the bracket.
    pub fn hom_jacobian(&self, x: &Vector<S>, y: &Vector<S>, z: &Vector<S>) -> Result<Vector<S>> {
        self.ensure_args(&[x, y, z])?;
        Ok(jacobian(&self.bracket, &self.alpha, x, y, z))
    }

    pub fn hom_leibniz_defect(
        &self,
        x: &Vector<S>,
        y: &Vector<S>,
        z: &Vector<S>,
    ) -> Result<Vector<S>> {
        self.ensure_args(&[x, y, z])?;
        Ok(leibniz_defect(
            &self.bracket,
            &self.mu,
            &self.alpha,
            x,
            y,
            z,
        ))
    }

    fn ensure_args(&self, args: &[&Vector<S>]) -> Result<()> {
        args.iter()
            .try_for_each(|v| ensure_dim(self.dim(), v.dim()))
    }

    /// `(A, μ, α)`.
    pub fn product_algebra(&self) -> HomAlgebra<S> {
        HomAlgebra {
            basis: self.basis.clone(),
            mu: self.mu.clone(),
            alpha: self.alpha.clone(),
        }
    }

    /// `(A, {,}, α)`.
    pub fn bracket_algebra(&self) -> HomAlgebra<S> {
        HomAlgebra {
            basis: self.basis.clone(),
            mu: self.bracket.clone(),
            alpha: self.alpha.clone(),
        }
    }

    pub fn with_alpha(&self, alpha: LinearMap<S>) -> Result<Self> {
        Self::new(
            self.basis.clone(),
            self.bracket.clone(),
            self.mu.clone(),
            alpha,
            self.commutative,
        )
    }

    pub fn with_bracket(&self, bracket: Trilinear<S>) -> Result<Self> {
        Self::new(
            self.basis.clone(),
            bracket,
            self.mu.clone(),
            self.alpha.clone(),
            self.commutative,
        )
    }

    pub fn with_mu(&self, mu: Trilinear<S>) -> Result<Self> {
        Self::new(
            self.basis.clone(),
            self.bracket.clone(),
            mu,
            self.alpha.clone(),
            self.commutative,
        )
    }
}

impl<S: Scalar> PartialEq for HomPoissonAlgebra<S> {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.bracket == other.bracket
            && self.mu == other.mu
            && self.alpha == other.alpha
            && self.commutative == other.commutative
    }
}

impl<S: Scalar> Operations<S> for HomPoissonAlgebra<S> {
    fn dim(&self) -> usize {
        self.mu.dim()
    }

    fn alpha(&self) -> &LinearMap<S> {
        &self.alpha
    }

    fn operations(&self) -> Vec<(&'static str, &Trilinear<S>)> {
        vec![("bracket", &self.bracket), ("mu", &self.mu)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn int(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn rejects_bad_bases() {
        let mu = Trilinear::<Rational>::zero(2);
        assert!(HomAlgebra::untwisted(names(&["a", "a"]), mu.clone()).is_err());
        assert!(HomAlgebra::untwisted(names(&["a"]), mu.clone()).is_err());
        assert!(HomAlgebra::new(names(&["a", "b"]), mu, LinearMap::identity(3)).is_err());
    }

    #[test]
    fn p31_associator_vanishes_at_xyz() {
        // XY = YX = Z with zeta = 1
        let mu = Trilinear::from_entries(3, [(0, 1, 2, int(1)), (1, 0, 2, int(1))]).unwrap();
        let a = HomAlgebra::untwisted(names(&["X", "Y", "Z"]), mu).unwrap();
        let (x, y, z) = (
            Vector::basis(3, 0),
            Vector::basis(3, 1),
            Vector::basis(3, 2),
        );
        assert!(a.hom_associator(&x, &y, &z).unwrap().is_zero());
        assert!(a.hom_associator(&x, &y, &Vector::zeros(2)).is_err());
    }

    #[test]
    fn heisenberg_jacobian_vanishes() {
        let br = Trilinear::from_entries(3, [(0, 1, 2, int(1)), (1, 0, 2, int(-1))]).unwrap();
        let p = HomPoissonAlgebra::new(
            names(&["X", "Y", "Z"]),
            br,
            Trilinear::zero(3),
            LinearMap::identity(3),
            true,
        )
        .unwrap();
        let (x, y, z) = (
            Vector::basis(3, 0),
            Vector::basis(3, 1),
            Vector::basis(3, 2),
        );
        assert!(p.hom_jacobian(&x, &y, &z).unwrap().is_zero());
        assert_eq!(p.element("Z"), Some(z));
    }
}
