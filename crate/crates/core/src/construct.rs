//! Constructions producing new (Hom-)Poisson structures from old ones.

use crate::algebra::{associator, jacobian, HomAlgebra, HomPoissonAlgebra, Operations};
use crate::check::{
    check_commutative, check_hom_associative, check_morphism, check_multiplicative,
};
use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{LinearMap, Trilinear, Vector};
use crate::report::{CheckReport, Residual, Witness};
use crate::scalar::Scalar;

fn precondition<S: Scalar>(report: &CheckReport<S>, what: &str) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} ({} fails)",
            report.identity
        )))
    }
}

/// `A⁻ = (A, μ − μ^op, μ, α)` for a Hom-associative `A`.
pub fn commutator_poisson<S: Scalar>(a: &HomAlgebra<S>) -> Result<HomPoissonAlgebra<S>> {
    precondition(&check_hom_associative(a), "input must be Hom-associative")?;
    let bracket = a.mu().try_sub(&a.mu().opposite())?;
    HomPoissonAlgebra::new(
        a.basis().to_vec(),
        bracket,
        a.mu().clone(),
        a.alpha().clone(),
        false,
    )
}

/// `A_β = (A, β{,}, βμ, βα)`; `β` must be a weak morphism of `A`.
pub fn twist<S: Scalar>(
    a: &HomPoissonAlgebra<S>,
    beta: &LinearMap<S>,
) -> Result<HomPoissonAlgebra<S>> {
    ensure_dim(a.dim(), beta.dim())?;
    precondition(
        &check_morphism(beta, a, a, true),
        "twisting map must be a weak morphism",
    )?;
    twist_unchecked(a, beta)
}

/// [`twist`] without the morphism check, for building negative examples.
pub fn twist_unchecked<S: Scalar>(
    a: &HomPoissonAlgebra<S>,
    beta: &LinearMap<S>,
) -> Result<HomPoissonAlgebra<S>> {
    ensure_dim(a.dim(), beta.dim())?;
    HomPoissonAlgebra::new(
        a.basis().to_vec(),
        a.bracket().post_map(beta)?,
        a.mu().post_map(beta)?,
        beta.compose(a.alpha())?,
        a.is_commutative_claimed(),
    )
}

/// The `n`-th derived algebra `(A, αⁿ{,}, αⁿμ, α^{n+1})` of a multiplicative
/// algebra.
pub fn derived<S: Scalar>(a: &HomPoissonAlgebra<S>, n: u32) -> Result<HomPoissonAlgebra<S>> {
    precondition(&check_multiplicative(a), "algebra must be multiplicative")?;
    twist_unchecked(a, &a.alpha().power(n))
}

fn ensure_untwisted<S: Scalar>(p: &HomPoissonAlgebra<S>) -> Result<()> {
    if p.alpha().is_identity() {
        Ok(())
    } else {
        Err(Error::Precondition(
            "algebra must have identity twisting map".into(),
        ))
    }
}

/// Twists a Poisson algebra (`α = Id`) by a self-morphism `β`, giving the
/// multiplicative Hom-Poisson algebra `(A, β{,}, βμ, β)`.
pub fn morphism_twist<S: Scalar>(
    p: &HomPoissonAlgebra<S>,
    beta: &LinearMap<S>,
) -> Result<HomPoissonAlgebra<S>> {
    ensure_untwisted(p)?;
    ensure_dim(p.dim(), beta.dim())?;
    precondition(
        &check_morphism(beta, p, p, false),
        "twisting map must be a morphism",
    )?;
    twist_unchecked(p, beta)
}

/// The untwisted pair `(β{,}, βμ)` on a Poisson algebra `base`.
#[derive(Clone, Debug)]
pub struct BetaTwisting<S> {
    base: HomPoissonAlgebra<S>,
    beta: LinearMap<S>,
    result: HomPoissonAlgebra<S>,
}

impl<S: Scalar> BetaTwisting<S> {
    pub fn base(&self) -> &HomPoissonAlgebra<S> {
        &self.base
    }

    pub fn beta(&self) -> &LinearMap<S> {
        &self.beta
    }

    pub fn bracket(&self) -> &Trilinear<S> {
        self.result.bracket()
    }

    pub fn mu(&self) -> &Trilinear<S> {
        self.result.mu()
    }

    /// The pair as a structure with identity twisting map. It need not
    /// satisfy any Poisson identity.
    pub fn as_algebra(&self) -> &HomPoissonAlgebra<S> {
        &self.result
    }

    /// Both twisted operations vanish.
    pub fn is_trivial(&self) -> bool {
        self.bracket().is_zero() && self.mu().is_zero()
    }
}

pub fn beta_twisting<S: Scalar>(
    p: &HomPoissonAlgebra<S>,
    beta: &LinearMap<S>,
) -> Result<BetaTwisting<S>> {
    ensure_untwisted(p)?;
    ensure_dim(p.dim(), beta.dim())?;
    precondition(
        &check_morphism(beta, p, p, false),
        "twisting map must be a morphism",
    )?;
    let result = HomPoissonAlgebra::new(
        p.basis().to_vec(),
        p.bracket().post_map(beta)?,
        p.mu().post_map(beta)?,
        LinearMap::identity(p.dim()),
        p.is_commutative_claimed(),
    )?;
    Ok(BetaTwisting {
        base: p.clone(),
        beta: beta.clone(),
        result,
    })
}

pub fn is_trivial_twisting<S: Scalar>(t: &BetaTwisting<S>) -> bool {
    t.is_trivial()
}

/// Passes when `f` is invertible and both `f: a → b` and `f⁻¹: b → a` are
/// morphisms.
pub fn verify_isomorphism<S: Scalar>(
    f: &LinearMap<S>,
    a: &HomPoissonAlgebra<S>,
    b: &HomPoissonAlgebra<S>,
) -> CheckReport<S> {
    if f.dim() != a.dim() || b.dim() != a.dim() {
        return CheckReport::fail("isomorphism", "dimension mismatch");
    }
    let inverse = match f.invert() {
        Ok(inv) => inv,
        Err(_) => {
            let invertible = CheckReport::fail("invertible", "map is not invertible");
            return CheckReport::aggregate("isomorphism", vec![invertible]);
        }
    };
    let mut forward = check_morphism(f, a, b, false);
    forward.identity = "forward-morphism".into();
    let mut backward = check_morphism(&inverse, b, a, false);
    backward.identity = "inverse-morphism".into();
    CheckReport::aggregate(
        "isomorphism",
        vec![CheckReport::pass("invertible"), forward, backward],
    )
}

/// Which twisted operation [`nonrigidity_witness`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonrigidityKind {
    /// The associator of `βμ`.
    Associator,
    /// The Jacobian of `β{,}`.
    Jacobian,
}

/// Associator of `βμ` (or Jacobian of `β{,}`) at the given triple; a
/// nonzero value shows the β-twisting is neither trivial nor isomorphic to
/// the original algebra.
pub fn nonrigidity_witness<S: Scalar>(
    p: &HomPoissonAlgebra<S>,
    beta: &LinearMap<S>,
    triple: (&Vector<S>, &Vector<S>, &Vector<S>),
    kind: NonrigidityKind,
) -> Result<Vector<S>> {
    let t = beta_twisting(p, beta)?;
    let (x, y, z) = triple;
    for v in [x, y, z] {
        ensure_dim(p.dim(), v.dim())?;
    }
    let id = LinearMap::identity(p.dim());
    Ok(match kind {
        NonrigidityKind::Associator => associator(t.mu(), &id, x, y, z),
        NonrigidityKind::Jacobian => jacobian(t.bracket(), &id, x, y, z),
    })
}

/// Scans `candidates` for an `X` with nonzero associator of `βμ` at
/// `(X, X, β(X))`.
pub fn search_nonrigidity_witness<S, I>(
    p: &HomPoissonAlgebra<S>,
    beta: &LinearMap<S>,
    candidates: I,
) -> Result<Option<(Vector<S>, Vector<S>)>>
where
    S: Scalar,
    I: IntoIterator<Item = Vector<S>>,
{
    let t = beta_twisting(p, beta)?;
    let id = LinearMap::identity(p.dim());
    for x in candidates {
        ensure_dim(p.dim(), x.dim())?;
        let bx = beta.apply(&x)?;
        let r = associator(t.mu(), &id, &x, &x, &bx);
        if !r.is_zero() {
            return Ok(Some((x, r)));
        }
    }
    Ok(None)
}

/// Tensor product of two Hom-Poisson algebras (both with commutative
/// product): `α = α₁⊗α₂`, `μ = μ₁⊗μ₂`,
/// `{x₁⊗x₂, y₁⊗y₂} = {x₁,y₁}⊗x₂y₂ + x₁y₁⊗{x₂,y₂}`.
/// Basis element `(i, j)` sits at index `i·dim₂ + j`.
pub fn tensor<S: Scalar>(
    a1: &HomPoissonAlgebra<S>,
    a2: &HomPoissonAlgebra<S>,
) -> Result<HomPoissonAlgebra<S>> {
    for a in [a1, a2] {
        if !a.is_commutative_claimed() || !check_commutative(a.mu()).passed {
            return Err(Error::Precondition(
                "tensor factors must have commutative products".into(),
            ));
        }
    }
    let mu = a1.mu().kronecker(a2.mu());
    let bracket = a1
        .bracket()
        .kronecker(a2.mu())
        .try_add(&a1.mu().kronecker(a2.bracket()))?;
    let alpha = a1.alpha().kronecker(a2.alpha());
    let basis = a1
        .basis()
        .iter()
        .flat_map(|b1| a2.basis().iter().map(move |b2| format!("{b1}⊗{b2}")))
        .collect();
    HomPoissonAlgebra::new(basis, bracket, mu, alpha, true)
}

/// `P(A) = (A, ½(μ − μ^op), ½(μ + μ^op), α)`.
pub fn polarize<S: Scalar>(a: &HomAlgebra<S>) -> HomPoissonAlgebra<S> {
    let half = S::one() / S::from_int(2);
    let op = a.mu().opposite();
    let bracket = a.mu().try_sub(&op).expect("same dimension").scale(&half);
    let bullet = a.mu().try_add(&op).expect("same dimension").scale(&half);
    HomPoissonAlgebra::new(a.basis().to_vec(), bracket, bullet, a.alpha().clone(), true)
        .expect("dimensions inherited from a valid algebra")
}

/// `P⁻(A) = (A, {,} + •, α)`.
pub fn depolarize<S: Scalar>(p: &HomPoissonAlgebra<S>) -> HomAlgebra<S> {
    let mu = p.bracket().try_add(p.mu()).expect("same dimension");
    HomAlgebra::new(p.basis().to_vec(), mu, p.alpha().clone())
        .expect("dimensions inherited from a valid algebra")
}

/// Compares two tensors entrywise, reporting differing `(i, j)` columns.
pub fn compare_operations<S: Scalar>(
    identity: &str,
    lhs: &Trilinear<S>,
    rhs: &Trilinear<S>,
) -> CheckReport<S> {
    if lhs.dim() != rhs.dim() {
        return CheckReport::fail(identity, "dimension mismatch");
    }
    let witnesses = (0..lhs.dim())
        .flat_map(|i| (0..lhs.dim()).map(move |j| (i, j)))
        .filter_map(|(i, j)| {
            let d = &lhs.basis_product(i, j) - &rhs.basis_product(i, j);
            (!d.is_zero()).then(|| Witness::at(vec![i, j], Residual::Vector(d)))
        })
        .take(crate::report::MAX_WITNESSES)
        .collect();
    CheckReport::from_witnesses(identity, witnesses)
}

/// Operations of two structures of the same kind agree exactly.
pub fn same_structure<S, A>(a: &A, b: &A) -> bool
where
    S: Scalar,
    A: Operations<S>,
{
    a.alpha() == b.alpha()
        && a.operations()
            .iter()
            .zip(b.operations())
            .all(|((_, x), (_, y))| *x == y)
}
