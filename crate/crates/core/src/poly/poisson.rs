use crate::algebra::HomPoissonAlgebra;
use crate::check::{check_antisymmetry, check_hom_jacobi};
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{LinearMap, Trilinear};
use crate::report::{CheckReport, Residual, Witness, MAX_WITNESSES};
use crate::scalar::Scalar;

use super::{generators, same_ring, Generators, Polynomial, Substitution};

/// A Poisson bracket on a polynomial ring.
pub trait PoissonBracket<S: Scalar> {
    fn generators(&self) -> &Generators;

    fn bracket(&self, f: &Polynomial<S>, g: &Polynomial<S>) -> Result<Polynomial<S>>;

    /// Rejects substitutions for which checking generator pairs does not
    /// settle whether they preserve the bracket.
    fn admits(&self, s: &Substitution<S>) -> Result<()>;

    fn ensure_ring(&self, p: &Polynomial<S>) -> Result<()> {
        if same_ring(p.generators(), self.generators()) {
            Ok(())
        } else {
            Err(Error::GeneratorMismatch)
        }
    }
}

/// The linear Poisson structure on the symmetric algebra of a Lie algebra
/// with structure constants `c(i, j, k)`.
#[derive(Clone, Debug)]
pub struct LiePoissonStructure<S> {
    generators: Generators,
    constants: Trilinear<S>,
}

impl<S: Scalar> LiePoissonStructure<S> {
    /// Verifies antisymmetry and the Jacobi identity of the constants.
    pub fn new(generators: &Generators, constants: Trilinear<S>) -> Result<Self> {
        ensure_dim(generators.len(), constants.dim())?;
        let lie = Self::lie_algebra_of(generators, &constants)?;
        for report in [check_antisymmetry(&lie), check_hom_jacobi(&lie)] {
            if !report.passed {
                return Err(Error::Precondition(format!(
                    "structure constants fail {}",
                    report.identity
                )));
            }
        }
        Ok(Self {
            generators: generators.clone(),
            constants,
        })
    }

    fn lie_algebra_of(
        generators: &Generators,
        constants: &Trilinear<S>,
    ) -> Result<HomPoissonAlgebra<S>> {
        let n = constants.dim();
        HomPoissonAlgebra::new(
            generators.to_vec(),
            constants.clone(),
            Trilinear::zero(n),
            LinearMap::identity(n),
            true,
        )
    }

    /// `sl₂` on generators `e, f, h` with `[h,e] = 2e`, `[h,f] = −2f`,
    /// `[e,f] = h`.
    pub fn sl2() -> Self {
        let (e, f, h) = (0, 1, 2);
        let entries = [
            (h, e, e, 2),
            (e, h, e, -2),
            (h, f, f, -2),
            (f, h, f, 2),
            (e, f, h, 1),
            (f, e, h, -1),
        ]
        .map(|(i, j, k, v)| (i, j, k, S::from_int(v)));
        let constants = Trilinear::from_entries(3, entries).expect("indices in range");
        Self::new(&generators(["e", "f", "h"]), constants).expect("sl2 is a Lie algebra")
    }

    /// The Heisenberg Lie algebra `[X,Y] = Z`.
    pub fn heisenberg() -> Self {
        let entries = [(0, 1, 2, S::one()), (1, 0, 2, -S::one())];
        let constants = Trilinear::from_entries(3, entries).expect("indices in range");
        Self::new(&generators(["X", "Y", "Z"]), constants).expect("Heisenberg is a Lie algebra")
    }

    pub fn constants(&self) -> &Trilinear<S> {
        &self.constants
    }

    /// The underlying Lie algebra as a structure with zero product.
    pub fn lie_algebra(&self) -> HomPoissonAlgebra<S> {
        Self::lie_algebra_of(&self.generators, &self.constants).expect("validated at construction")
    }
}

impl<S: Scalar> PoissonBracket<S> for LiePoissonStructure<S> {
    fn generators(&self) -> &Generators {
        &self.generators
    }

    /// `½ Σ c(i,j,k) e_k (∂_i F ∂_j G − ∂_j F ∂_i G)`.
    fn bracket(&self, f: &Polynomial<S>, g: &Polynomial<S>) -> Result<Polynomial<S>> {
        self.ensure_ring(f)?;
        self.ensure_ring(g)?;
        let n = self.generators.len();
        let df = (0..n).map(|i| f.diff(i)).collect::<Result<Vec<_>>>()?;
        let dg = (0..n).map(|i| g.diff(i)).collect::<Result<Vec<_>>>()?;
        let half = S::one() / S::from_int(2);
        let mut out = Polynomial::zero(&self.generators);
        for i in 0..n {
            for j in 0..n {
                let mut linear = Polynomial::zero(&self.generators);
                for k in 0..n {
                    let c = self.constants.get(i, j, k);
                    if !c.is_zero() {
                        linear.add_term(super::Monomial::var(n, k), c);
                    }
                }
                if linear.is_zero() {
                    continue;
                }
                let cross = df[i].try_mul(&dg[j])?.try_sub(&df[j].try_mul(&dg[i])?)?;
                out = out.try_add(&linear.try_mul(&cross)?.scale(&half))?;
            }
        }
        Ok(out)
    }

    fn admits(&self, s: &Substitution<S>) -> Result<()> {
        if !same_ring(s.generators(), &self.generators) {
            return Err(Error::GeneratorMismatch);
        }
        if s.is_linear() {
            Ok(())
        } else {
            Err(Error::Precondition(
                "substitution images must be linear in the generators".into(),
            ))
        }
    }
}

/// The canonical bracket on `x_1..x_{2n}`:
/// `Σ_i ∂_{x_i} f ∂_{x_{i+n}} g − ∂_{x_{i+n}} f ∂_{x_i} g`.
#[derive(Clone, Debug)]
pub struct SymplecticStructure {
    half_dim: usize,
    generators: Generators,
}

impl SymplecticStructure {
    pub fn new(half_dim: usize) -> Result<Self> {
        if half_dim == 0 {
            return Err(Error::InvalidParameter {
                name: "n".into(),
                reason: "half-dimension must be at least 1".into(),
            });
        }
        Ok(Self {
            half_dim,
            generators: generators((1..=2 * half_dim).map(|i| format!("x{i}"))),
        })
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }
}

impl<S: Scalar> PoissonBracket<S> for SymplecticStructure {
    fn generators(&self) -> &Generators {
        &self.generators
    }

    fn bracket(&self, f: &Polynomial<S>, g: &Polynomial<S>) -> Result<Polynomial<S>> {
        self.ensure_ring(f)?;
        self.ensure_ring(g)?;
        let n = self.half_dim;
        let mut out = Polynomial::zero(&self.generators);
        for i in 0..n {
            let a = f.diff(i)?.try_mul(&g.diff(i + n)?)?;
            let b = f.diff(i + n)?.try_mul(&g.diff(i)?)?;
            out = out.try_add(&a.try_sub(&b)?)?;
        }
        Ok(out)
    }

    fn admits(&self, s: &Substitution<S>) -> Result<()> {
        if !same_ring(s.generators(), &self.generators) {
            return Err(Error::GeneratorMismatch);
        }
        if s.is_affine() {
            Ok(())
        } else {
            Err(Error::Precondition(
                "substitution images must have degree at most one".into(),
            ))
        }
    }
}

/// Checks `s{x_i, x_j} = {s(x_i), s(x_j)}` on all generator pairs, which by
/// the Leibniz rule certifies that `s` preserves the bracket.
pub fn check_poisson_substitution<S, B>(b: &B, s: &Substitution<S>) -> Result<CheckReport<S>>
where
    S: Scalar,
    B: PoissonBracket<S>,
{
    b.admits(s)?;
    let gens = b.generators();
    let n = gens.len();
    let mut witnesses = Vec::new();
    'outer: for i in 0..n {
        for j in 0..n {
            let xi = Polynomial::var(gens, i);
            let xj = Polynomial::var(gens, j);
            let lhs = s.apply(&b.bracket(&xi, &xj)?)?;
            let rhs = b.bracket(s.image(i), s.image(j))?;
            let r = lhs.try_sub(&rhs)?;
            if !r.is_zero() {
                witnesses.push(Witness::at(vec![i, j], Residual::Polynomials(vec![r])));
                if witnesses.len() == MAX_WITNESSES {
                    break 'outer;
                }
            }
        }
    }
    Ok(CheckReport::from_witnesses(
        "poisson-substitution",
        witnesses,
    ))
}

/// Associator of the twisted product `μ_s(F, G) = s(FG)` at `(F, G, H)`:
/// `μ_s(μ_s(F,G), H) − μ_s(F, μ_s(G,H))`.
pub fn twisted_associator<S: Scalar>(
    s: &Substitution<S>,
    f: &Polynomial<S>,
    g: &Polynomial<S>,
    h: &Polynomial<S>,
) -> Result<Polynomial<S>> {
    let mu = |a: &Polynomial<S>, b: &Polynomial<S>| s.apply(&a.try_mul(b)?);
    mu(&mu(f, g)?, h)?.try_sub(&mu(f, &mu(g, h)?)?)
}

/// The Hom-Poisson structure `(β{,}, βμ, β)` obtained by twisting a
/// polynomial Poisson algebra along a bracket-preserving substitution `β`.
pub struct TwistedPoisson<'a, S, B> {
    structure: &'a B,
    twist: &'a Substitution<S>,
}

impl<'a, S: Scalar, B: PoissonBracket<S>> TwistedPoisson<'a, S, B> {
    /// Fails unless `twist` passes [`check_poisson_substitution`].
    pub fn new(structure: &'a B, twist: &'a Substitution<S>) -> Result<Self> {
        let report = check_poisson_substitution(structure, twist)?;
        if !report.passed {
            return Err(Error::Precondition(
                "substitution does not preserve the bracket".into(),
            ));
        }
        Ok(Self { structure, twist })
    }

    pub fn alpha(&self, f: &Polynomial<S>) -> Result<Polynomial<S>> {
        self.twist.apply(f)
    }

    pub fn bracket(&self, f: &Polynomial<S>, g: &Polynomial<S>) -> Result<Polynomial<S>> {
        self.twist.apply(&self.structure.bracket(f, g)?)
    }

    pub fn product(&self, f: &Polynomial<S>, g: &Polynomial<S>) -> Result<Polynomial<S>> {
        self.twist.apply(&f.try_mul(g)?)
    }

    /// `(FG)α(H) − α(F)(GH)`.
    pub fn hom_associator(
        &self,
        f: &Polynomial<S>,
        g: &Polynomial<S>,
        h: &Polynomial<S>,
    ) -> Result<Polynomial<S>> {
        let left = self.product(&self.product(f, g)?, &self.alpha(h)?)?;
        let right = self.product(&self.alpha(f)?, &self.product(g, h)?)?;
        left.try_sub(&right)
    }

    pub fn hom_jacobian(
        &self,
        f: &Polynomial<S>,
        g: &Polynomial<S>,
        h: &Polynomial<S>,
    ) -> Result<Polynomial<S>> {
        let term = |a, b, c| self.bracket(&self.bracket(a, b)?, &self.alpha(c)?);
        term(f, g, h)?
            .try_add(&term(h, f, g)?)?
            .try_add(&term(g, h, f)?)
    }

    /// `{α(F), GH} − {F,G}α(H) − α(G){F,H}` in the twisted operations.
    pub fn hom_leibniz_defect(
        &self,
        f: &Polynomial<S>,
        g: &Polynomial<S>,
        h: &Polynomial<S>,
    ) -> Result<Polynomial<S>> {
        let lhs = self.bracket(&self.alpha(f)?, &self.product(g, h)?)?;
        let r1 = self.product(&self.bracket(f, g)?, &self.alpha(h)?)?;
        let r2 = self.product(&self.alpha(g)?, &self.bracket(f, h)?)?;
        lhs.try_sub(&r1)?.try_sub(&r2)
    }
}

/// Values entering the non-rigidity test for a pullback along `φ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ManifoldCertificate<S> {
    /// `f(φ(x)), f(φ²(x)), f(φ³(x))`.
    pub orbit_values: [S; 3],
    /// Trace condition value `f(φ²(x))`.
    pub trace: S,
    /// Determinant condition value `f(φ²(x))² − f(φ(x)) f(φ³(x))`.
    pub det: S,
    /// Both conditions are nonzero, certifying non-rigidity.
    pub verdict: bool,
}

/// Evaluates the trace and determinant conditions for `f` along the orbit
/// of `point` under `φ`, where `phi` is the pullback `f ↦ f∘φ`.
pub fn manifold_nonrigidity_check<S: Scalar>(
    structure: &SymplecticStructure,
    phi: &Substitution<S>,
    f: &Polynomial<S>,
    point: &[S],
) -> Result<ManifoldCertificate<S>> {
    let report = check_poisson_substitution(structure, phi)?;
    if !report.passed {
        return Err(Error::Precondition("map is not a Poisson map".into()));
    }
    PoissonBracket::<S>::ensure_ring(structure, f)?;
    let mut pulled = f.clone();
    let mut values = Vec::with_capacity(3);
    for _ in 0..3 {
        pulled = phi.apply(&pulled)?;
        values.push(pulled.eval(point)?);
    }
    let [v1, v2, v3]: [S; 3] = values.try_into().expect("three values");
    let det = v2.clone() * v2.clone() - v1.clone() * v3.clone();
    let verdict = !v2.is_zero() && !det.is_zero();
    Ok(ManifoldCertificate {
        trace: v2.clone(),
        orbit_values: [v1, v2, v3],
        det,
        verdict,
    })
}
