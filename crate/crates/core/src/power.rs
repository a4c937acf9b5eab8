//! Hom-powers `xⁿ = xⁿ⁻¹αⁿ⁻²(x)` and Hom-power associativity.
//!
//! Identities quantified over all `x` are decided on a [`GenericElement`],
//! whose coordinates are independent indeterminates `t1..td`. Over an
//! infinite field a polynomial identity holds everywhere iff it holds
//! generically.

use crate::algebra::HomAlgebra;
use crate::check::check_multiplicative;
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{LinearMap, Trilinear, Vector};
use crate::poly::{generators, Polynomial};
use crate::report::{CheckReport, Residual, Witness, MAX_WITNESSES};
use crate::scalar::Scalar;

/// Largest power and dimension accepted by the generic-element checks.
pub const MAX_GENERIC: usize = 8;

/// An element whose coordinates are polynomials.
#[derive(Clone, Debug)]
pub struct GenericElement<S> {
    coordinates: Vec<Polynomial<S>>,
}

impl<S: Scalar> GenericElement<S> {
    /// `x = t1·e1 + … + td·ed`.
    pub fn new(dim: usize) -> Self {
        let gens = generators((1..=dim).map(|i| format!("t{i}")));
        let coordinates = (0..dim).map(|i| Polynomial::var(&gens, i)).collect();
        Self { coordinates }
    }

    pub fn from_coordinates(coordinates: Vec<Polynomial<S>>) -> Self {
        Self { coordinates }
    }

    pub fn coordinates(&self) -> &[Polynomial<S>] {
        &self.coordinates
    }

    pub fn into_coordinates(self) -> Vec<Polynomial<S>> {
        self.coordinates
    }

    /// Specializes the indeterminates to `point`.
    pub fn eval(&self, point: &[S]) -> Result<Vector<S>> {
        let entries = self
            .coordinates
            .iter()
            .map(|p| p.eval(point))
            .collect::<Result<Vec<_>>>()?;
        Ok(Vector::from_vec(entries))
    }
}

impl<S: Scalar> PartialEq for GenericElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.coordinates == other.coordinates
    }
}

/// Elements that a Hom-algebra can multiply and twist.
pub trait Element<S: Scalar>: Clone {
    fn dim(&self) -> usize;
    fn multiply(mu: &Trilinear<S>, x: &Self, y: &Self) -> Result<Self>;
    fn twist(alpha: &LinearMap<S>, x: &Self) -> Result<Self>;
    fn difference(&self, other: &Self) -> Result<Self>;
    fn is_zero(&self) -> bool;
    fn residual(self) -> Residual<S>;
}

impl<S: Scalar> Element<S> for Vector<S> {
    fn dim(&self) -> usize {
        Vector::dim(self)
    }

    fn multiply(mu: &Trilinear<S>, x: &Self, y: &Self) -> Result<Self> {
        mu.contract(x, y)
    }

    fn twist(alpha: &LinearMap<S>, x: &Self) -> Result<Self> {
        alpha.apply(x)
    }

    fn difference(&self, other: &Self) -> Result<Self> {
        self.try_sub(other)
    }

    fn is_zero(&self) -> bool {
        Vector::is_zero(self)
    }

    fn residual(self) -> Residual<S> {
        Residual::Vector(self)
    }
}

impl<S: Scalar> Element<S> for GenericElement<S> {
    fn dim(&self) -> usize {
        self.coordinates.len()
    }

    fn multiply(mu: &Trilinear<S>, x: &Self, y: &Self) -> Result<Self> {
        ensure_dim(mu.dim(), x.dim())?;
        ensure_dim(mu.dim(), y.dim())?;
        let zero = match x.coordinates.first() {
            Some(p) => Polynomial::zero(p.generators()),
            None => return Ok(x.clone()),
        };
        let mut out = vec![zero; mu.dim()];
        for (i, j, k, c) in mu.entries() {
            if x.coordinates[i].is_zero() || y.coordinates[j].is_zero() {
                continue;
            }
            let term = x.coordinates[i].try_mul(&y.coordinates[j])?.scale(&c);
            out[k] = out[k].try_add(&term)?;
        }
        Ok(Self { coordinates: out })
    }

    fn twist(alpha: &LinearMap<S>, x: &Self) -> Result<Self> {
        ensure_dim(alpha.dim(), x.dim())?;
        let coordinates = alpha
            .rows()
            .map(|row| {
                let zero = Polynomial::zero(x.coordinates[0].generators());
                row.iter()
                    .zip(&x.coordinates)
                    .try_fold(zero, |acc, (a, p)| {
                        if a.is_zero() {
                            Ok(acc)
                        } else {
                            acc.try_add(&p.scale(a))
                        }
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coordinates })
    }

    fn difference(&self, other: &Self) -> Result<Self> {
        ensure_dim(self.dim(), other.dim())?;
        let coordinates = self
            .coordinates
            .iter()
            .zip(&other.coordinates)
            .map(|(a, b)| a.try_sub(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coordinates })
    }

    fn is_zero(&self) -> bool {
        self.coordinates.iter().all(Polynomial::is_zero)
    }

    fn residual(self) -> Residual<S> {
        Residual::Polynomials(self.coordinates)
    }
}

fn twist_times<S: Scalar, E: Element<S>>(alpha: &LinearMap<S>, x: &E, times: usize) -> Result<E> {
    (0..times).try_fold(x.clone(), |acc, _| E::twist(alpha, &acc))
}

/// The Hom-powers `x¹, …, xⁿ`, in order.
pub fn hom_powers<S: Scalar, E: Element<S>>(a: &HomAlgebra<S>, x: &E, n: usize) -> Result<Vec<E>> {
    if n == 0 {
        return Err(Error::InvalidParameter {
            name: "n".into(),
            reason: "Hom-powers start at 1".into(),
        });
    }
    ensure_dim(a.dim(), x.dim())?;
    let mut powers = vec![x.clone()];
    // twisted[m] = αᵐ(x)
    let mut twisted = x.clone();
    for _ in 2..=n {
        let next = E::multiply(a.mu(), powers.last().expect("nonempty"), &twisted)?;
        powers.push(next);
        twisted = E::twist(a.alpha(), &twisted)?;
    }
    Ok(powers)
}

pub fn hom_power<S: Scalar, E: Element<S>>(a: &HomAlgebra<S>, x: &E, n: usize) -> Result<E> {
    Ok(hom_powers(a, x, n)?.pop().expect("n ≥ 1"))
}

/// `x^{i,j} = α^{j−1}(xⁱ) α^{i−1}(xʲ)`.
pub fn hom_power_pair<S: Scalar, E: Element<S>>(
    a: &HomAlgebra<S>,
    x: &E,
    i: usize,
    j: usize,
) -> Result<E> {
    if i == 0 || j == 0 {
        return Err(Error::InvalidParameter {
            name: "i, j".into(),
            reason: "exponents must be positive".into(),
        });
    }
    let powers = hom_powers(a, x, i.max(j))?;
    pair_from(a, &powers, i, j)
}

fn pair_from<S: Scalar, E: Element<S>>(
    a: &HomAlgebra<S>,
    powers: &[E],
    i: usize,
    j: usize,
) -> Result<E> {
    let left = twist_times(a.alpha(), &powers[i - 1], j - 1)?;
    let right = twist_times(a.alpha(), &powers[j - 1], i - 1)?;
    E::multiply(a.mu(), &left, &right)
}

fn guard(a: &HomAlgebra<impl Scalar>, n: usize) -> Result<()> {
    if n > MAX_GENERIC || a.dim() > MAX_GENERIC {
        return Err(Error::ResourceLimit(format!(
            "generic power checks are limited to n ≤ {MAX_GENERIC} and dim ≤ {MAX_GENERIC} (got n = {n}, dim = {})",
            a.dim()
        )));
    }
    Ok(())
}

/// Passes iff `xⁿ = x^{n−i,i}` for the generic `x` and every `1 ≤ i < n`.
/// Witness locations are `[n, i]` with polynomial residuals.
pub fn check_nth_power_assoc<S: Scalar>(a: &HomAlgebra<S>, n: usize) -> Result<CheckReport<S>> {
    if n < 2 {
        return Err(Error::InvalidParameter {
            name: "n".into(),
            reason: "power associativity starts at n = 2".into(),
        });
    }
    guard(a, n)?;
    let x = GenericElement::new(a.dim());
    let powers = hom_powers(a, &x, n)?;
    let top = &powers[n - 1];
    let mut witnesses = Vec::new();
    for i in 1..n {
        let r = top.difference(&pair_from(a, &powers, n - i, i)?)?;
        if !r.is_zero() && witnesses.len() < MAX_WITNESSES {
            witnesses.push(Witness::at(vec![n, i], r.residual()));
        }
    }
    Ok(CheckReport::from_witnesses(
        format!("power-assoc-{n}"),
        witnesses,
    ))
}

/// Aggregates [`check_nth_power_assoc`] for `n = 2..=max_n`.
pub fn check_power_assoc_up_to<S: Scalar>(
    a: &HomAlgebra<S>,
    max_n: usize,
) -> Result<CheckReport<S>> {
    let parts = (2..=max_n)
        .map(|n| check_nth_power_assoc(a, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::aggregate("hom-power-associative", parts)
        .with_detail("max-n", max_n.to_string()))
}

/// The two identities `x²α(x) = α(x)x²` and `x⁴ = α(x²)α(x²)`, which for a
/// multiplicative Hom-algebra characterize Hom-power associativity.
pub fn check_criterion_34<S: Scalar>(a: &HomAlgebra<S>) -> Result<CheckReport<S>> {
    if !check_multiplicative(a).passed {
        return Err(Error::Precondition(
            "Hom-algebra must be multiplicative".into(),
        ));
    }
    guard(a, 4)?;
    let x = GenericElement::new(a.dim());
    let powers = hom_powers(a, &x, 4)?;
    let ax = GenericElement::twist(a.alpha(), &x)?;
    let x2 = &powers[1];
    let third = GenericElement::multiply(a.mu(), x2, &ax)?
        .difference(&GenericElement::multiply(a.mu(), &ax, x2)?)?;
    let ax2 = GenericElement::twist(a.alpha(), x2)?;
    let fourth = powers[3].difference(&GenericElement::multiply(a.mu(), &ax2, &ax2)?)?;
    let part = |name: &str, r: GenericElement<S>| {
        let witnesses = if r.is_zero() {
            Vec::new()
        } else {
            vec![Witness::at(Vec::new(), r.residual())]
        };
        CheckReport::from_witnesses(name, witnesses)
    };
    Ok(CheckReport::aggregate(
        "power-criterion",
        vec![part("third-power", third), part("fourth-power", fourth)],
    ))
}

/// The four expressions `(x²α(x))α²(x)`, `(α(x)x²)α²(x)`,
/// `α²(x)(x²α(x))`, `α²(x)(α(x)x²)` for the generic `x`.
pub fn fourth_power_chain<S: Scalar>(a: &HomAlgebra<S>) -> Result<[GenericElement<S>; 4]> {
    guard(a, 4)?;
    let mu = a.mu();
    let x = GenericElement::new(a.dim());
    let ax = GenericElement::twist(a.alpha(), &x)?;
    let a2x = GenericElement::twist(a.alpha(), &ax)?;
    let x2 = GenericElement::multiply(mu, &x, &x)?;
    let l = GenericElement::multiply(mu, &x2, &ax)?;
    let r = GenericElement::multiply(mu, &ax, &x2)?;
    Ok([
        GenericElement::multiply(mu, &l, &a2x)?,
        GenericElement::multiply(mu, &r, &a2x)?,
        GenericElement::multiply(mu, &a2x, &l)?,
        GenericElement::multiply(mu, &a2x, &r)?,
    ])
}
