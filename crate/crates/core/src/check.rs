//! Identity checkers over basis tuples.
//!
//! Every identity here is multilinear in its arguments, so vanishing on all
//! basis tuples is equivalent to vanishing everywhere.

use crate::algebra::{
    associator, jacobian, leibniz_defect, HomAlgebra, HomPoissonAlgebra, Operations,
};
use crate::linalg::{LinearMap, Trilinear, Vector};
use crate::report::{scan_indices, scan_pairs, scan_triples, CheckReport};
use crate::scalar::Scalar;

fn basis<S: Scalar>(dim: usize) -> Vec<Vector<S>> {
    (0..dim).map(|i| Vector::basis(dim, i)).collect()
}

fn op_assoc_report<S: Scalar>(
    identity: &str,
    op: &Trilinear<S>,
    alpha: &LinearMap<S>,
) -> CheckReport<S> {
    let e = basis(op.dim());
    scan_triples(identity, op.dim(), |i, j, k| {
        associator(op, alpha, &e[i], &e[j], &e[k])
    })
}

/// `as_A = 0` on all basis triples.
pub fn check_hom_associative<S: Scalar>(a: &HomAlgebra<S>) -> CheckReport<S> {
    op_assoc_report("hom-associative", a.mu(), a.alpha())
}

/// `c(i,j,k) = −c(j,i,k)` for the bracket.
pub fn check_antisymmetry<S: Scalar>(p: &HomPoissonAlgebra<S>) -> CheckReport<S> {
    let br = p.bracket();
    scan_pairs("antisymmetry", p.dim(), |i, j| {
        &br.basis_product(i, j) + &br.basis_product(j, i)
    })
}

/// `μ = μ^op`.
pub fn check_commutative<S: Scalar>(mu: &Trilinear<S>) -> CheckReport<S> {
    scan_pairs("commutative", mu.dim(), |i, j| {
        &mu.basis_product(i, j) - &mu.basis_product(j, i)
    })
}

/// Hom-Jacobi identity of the bracket.
pub fn check_hom_jacobi<S: Scalar>(p: &HomPoissonAlgebra<S>) -> CheckReport<S> {
    check_op_hom_jacobi(p.bracket(), p.alpha())
}

pub(crate) fn check_op_hom_jacobi<S: Scalar>(
    op: &Trilinear<S>,
    alpha: &LinearMap<S>,
) -> CheckReport<S> {
    let e = basis(op.dim());
    scan_triples("hom-jacobi", op.dim(), |i, j, k| {
        jacobian(op, alpha, &e[i], &e[j], &e[k])
    })
}

/// `{α(x), yz} = {x,y}α(z) + α(y){x,z}`.
pub fn check_hom_leibniz<S: Scalar>(p: &HomPoissonAlgebra<S>) -> CheckReport<S> {
    let e = basis(p.dim());
    scan_triples("hom-leibniz", p.dim(), |i, j, k| {
        leibniz_defect(p.bracket(), p.mu(), p.alpha(), &e[i], &e[j], &e[k])
    })
}

/// Whether `f` intertwines every operation of `a` with the corresponding
/// one of `b`, and additionally `fα_a = α_b f` unless `weak`.
pub fn check_morphism<S, A>(f: &LinearMap<S>, a: &A, b: &A, weak: bool) -> CheckReport<S>
where
    S: Scalar,
    A: Operations<S>,
{
    morphism_report("morphism", f, a, b, weak)
}

fn morphism_report<S, A>(
    identity: &str,
    f: &LinearMap<S>,
    a: &A,
    b: &A,
    weak: bool,
) -> CheckReport<S>
where
    S: Scalar,
    A: Operations<S>,
{
    let dim = a.dim();
    if f.dim() != dim || b.dim() != dim {
        return CheckReport::fail(
            identity,
            format!(
                "dimension mismatch: map {}, source {}, target {}",
                f.dim(),
                dim,
                b.dim()
            ),
        );
    }
    let images: Vec<Vector<S>> = (0..dim).map(|j| f.column(j)).collect();
    let mut parts = Vec::new();
    for ((name, op_a), (_, op_b)) in a.operations().into_iter().zip(b.operations()) {
        parts.push(scan_pairs(&format!("{identity}:{name}"), dim, |i, j| {
            let lhs = f.apply_unchecked(&op_a.basis_product(i, j));
            let rhs = op_b.eval(&images[i], &images[j]);
            &lhs - &rhs
        }));
    }
    if !weak {
        let fa = f.compose_unchecked(a.alpha());
        let af = b.alpha().compose_unchecked(f);
        parts.push(scan_indices(&format!("{identity}:alpha"), dim, |j| {
            &fa.column(j) - &af.column(j)
        }));
    }
    CheckReport::aggregate(identity, parts)
}

/// `αμ = μα^{⊗2}` for every operation.
pub fn check_multiplicative<S, A>(a: &A) -> CheckReport<S>
where
    S: Scalar,
    A: Operations<S>,
{
    morphism_report("multiplicative", a.alpha(), a, a, true)
}

/// Hom-Lie bracket, Hom-associative product and Hom-Leibniz identity, plus
/// commutativity of `μ` when the algebra claims it.
pub fn check_hom_poisson<S: Scalar>(p: &HomPoissonAlgebra<S>) -> CheckReport<S> {
    let mut parts = vec![
        check_antisymmetry(p),
        check_hom_jacobi(p),
        op_assoc_report("hom-associative", p.mu(), p.alpha()),
        check_hom_leibniz(p),
    ];
    if p.is_commutative_claimed() {
        parts.push(check_commutative(p.mu()));
    }
    CheckReport::aggregate("hom-poisson", parts)
}

/// `as(x,y,z) = ⅓{(xz)α(y) − (zx)α(y) + (yz)α(x) − (yx)α(z)}`.
pub fn check_admissible<S: Scalar>(a: &HomAlgebra<S>) -> CheckReport<S> {
    let e = basis(a.dim());
    let third = S::one() / S::from_int(3);
    scan_triples("admissible", a.dim(), |i, j, k| {
        admissibility_defect(a, &e[i], &e[j], &e[k], &third)
    })
}

pub(crate) fn admissibility_defect<S: Scalar>(
    a: &HomAlgebra<S>,
    x: &Vector<S>,
    y: &Vector<S>,
    z: &Vector<S>,
    third: &S,
) -> Vector<S> {
    let mu = a.mu();
    let alpha = a.alpha();
    let t = |p: &Vector<S>, q: &Vector<S>, r: &Vector<S>| {
        mu.eval(&mu.eval(p, q), &alpha.apply_unchecked(r))
    };
    let rhs = &(&(&t(x, z, y) - &t(z, x, y)) + &t(y, z, x)) - &t(y, x, z);
    &associator(mu, alpha, x, y, z) - &rhs.scale(third)
}

/// `as(x,y,z) + as(z,y,x) = 0`.
pub fn check_hom_flexible<S: Scalar>(a: &HomAlgebra<S>) -> CheckReport<S> {
    let e = basis(a.dim());
    scan_triples("hom-flexible", a.dim(), |i, j, k| {
        &associator(a.mu(), a.alpha(), &e[i], &e[j], &e[k])
            + &associator(a.mu(), a.alpha(), &e[k], &e[j], &e[i])
    })
}

/// `S_A = as(x,y,z) + as(z,x,y) + as(y,z,x) = 0`.
pub fn check_cyclic_associator<S: Scalar>(a: &HomAlgebra<S>) -> CheckReport<S> {
    let e = basis(a.dim());
    scan_triples("cyclic-associator", a.dim(), |i, j, k| {
        a.cyclic_associator_sum(&e[i], &e[j], &e[k])
            .expect("basis vectors match dimension")
    })
}
