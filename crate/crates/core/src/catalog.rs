//! Built-in example algebras.
//!
//! Every entry is verified when built: a structure that fails the checks its
//! construction promises is reported as an error rather than returned.

use std::collections::BTreeMap;

use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{HomAlgebra, HomPoissonAlgebra};
use crate::check::{
    check_hom_associative, check_hom_poisson, check_morphism, check_multiplicative,
};
use crate::construct::morphism_twist;
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Trilinear, Vector};
use crate::poly::{
    check_poisson_substitution, generators, truncated_algebra, truncated_map, Generators,
    LiePoissonStructure, Substitution, SymplecticStructure, TruncatedBasis,
};
use crate::report::CheckReport;
use crate::{Rational, Scalar};

pub type Params = BTreeMap<String, Rational>;

pub struct CatalogEntry {
    pub name: &'static str,
    /// Parameter names with their default values as `p/q` strings.
    pub params: &'static [(&'static str, &'static str)],
    pub summary: &'static str,
}

const HEISENBERG_PARAMS: &[(&str, &str)] = &[
    ("a11", "1"),
    ("a12", "0"),
    ("a21", "0"),
    ("a22", "1"),
    ("a31", "0"),
    ("a32", "0"),
];

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "heisenberg-p31",
        params: &[
            ("zeta", "1"),
            ("a11", "1"),
            ("a12", "0"),
            ("a21", "0"),
            ("a22", "1"),
            ("a31", "0"),
            ("a32", "0"),
        ],
        summary: "Heisenberg bracket [X,Y] = Z with XY = YX = zeta Z, twisted by the a-matrix",
    },
    CatalogEntry {
        name: "heisenberg-p32",
        params: HEISENBERG_PARAMS,
        summary: "Heisenberg bracket [X,Y] = Z with X^2 = Z, twisted by the a-matrix",
    },
    CatalogEntry {
        name: "matrix",
        params: &[("n", "2")],
        summary: "associative algebra of n x n matrices on the matrix units E_ij",
    },
    CatalogEntry {
        name: "sl2-linear-poisson",
        params: &[("lambda", "2")],
        summary: "linear Poisson structure on S(sl2) with alpha(e,f,h) = (lambda e, f/lambda, h)",
    },
    CatalogEntry {
        name: "sl2-truncated",
        params: &[("degree", "3"), ("lambda", "1")],
        summary: "S(sl2) modulo polynomials of degree >= degree, twisted by the sl2 scaling map",
    },
    CatalogEntry {
        name: "symplectic",
        params: &[("n", "1"), ("c", "1")],
        summary: "canonical bracket on k[x1..x2n] with the translation by (c, ..., c)",
    },
    CatalogEntry {
        name: "free-poly",
        params: &[("shift", "1")],
        summary: "k[X] with alpha(X) = shift + X",
    },
    CatalogEntry {
        name: "unit",
        params: &[],
        summary: "one-dimensional algebra e e = e",
    },
];

/// A polynomial-level structure with its twisting substitution.
#[derive(Clone, Debug)]
pub enum CatalogObject {
    HomPoisson(HomPoissonAlgebra<Rational>),
    HomAlgebra(HomAlgebra<Rational>),
    LiePoisson {
        structure: LiePoissonStructure<Rational>,
        alpha: Substitution<Rational>,
    },
    Symplectic {
        structure: SymplecticStructure,
        phi: Substitution<Rational>,
    },
    FreePoly {
        generators: Generators,
        alpha: Substitution<Rational>,
    },
    Truncated {
        basis: TruncatedBasis,
        algebra: HomPoissonAlgebra<Rational>,
    },
}

impl CatalogObject {
    /// The finite-dimensional Hom-Poisson algebra, if this is one.
    pub fn hom_poisson(&self) -> Option<&HomPoissonAlgebra<Rational>> {
        match self {
            CatalogObject::HomPoisson(p) | CatalogObject::Truncated { algebra: p, .. } => Some(p),
            _ => None,
        }
    }

    pub fn hom_algebra(&self) -> Option<&HomAlgebra<Rational>> {
        match self {
            CatalogObject::HomAlgebra(a) => Some(a),
            _ => None,
        }
    }
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
}

struct Args<'a> {
    entry: &'static CatalogEntry,
    given: &'a Params,
}

impl Args<'_> {
    fn get(&self, name: &str) -> Rational {
        if let Some(v) = self.given.get(name) {
            return v.clone();
        }
        let (_, default) = self
            .entry
            .params
            .iter()
            .find(|(n, _)| *n == name)
            .expect("parameter declared in the entry table");
        crate::parse_scalar(default).expect("valid default")
    }

    fn count(&self, name: &str, min: usize, max: usize) -> Result<usize> {
        let v = self.get(name);
        let n = v
            .is_integer()
            .then(|| v.to_integer().to_usize())
            .flatten()
            .filter(|n| (min..=max).contains(n));
        n.ok_or_else(|| Error::InvalidParameter {
            name: name.to_string(),
            reason: format!("expected an integer between {min} and {max}, got {v}"),
        })
    }

    fn nonzero(&self, name: &str) -> Result<Rational> {
        let v = self.get(name);
        if v.is_zero() {
            return Err(Error::InvalidParameter {
                name: name.to_string(),
                reason: "must be nonzero".into(),
            });
        }
        Ok(v)
    }
}

/// Builds the named structure. Parameters not given take their defaults;
/// unknown parameter names are rejected.
pub fn build_catalog(name: &str, params: &Params) -> Result<CatalogObject> {
    let entry = entry(name)?;
    if let Some(unknown) = params
        .keys()
        .find(|k| !entry.params.iter().any(|(n, _)| n == k))
    {
        return Err(Error::InvalidParameter {
            name: unknown.clone(),
            reason: format!("not a parameter of {name}"),
        });
    }
    let args = Args {
        entry,
        given: params,
    };
    match name {
        "heisenberg-p31" => twisted_heisenberg(heisenberg_p31(&args.get("zeta")), &args),
        "heisenberg-p32" => twisted_heisenberg(heisenberg_p32(), &args),
        "matrix" => {
            let a = matrix_algebra(args.count("n", 1, 4)?);
            verified(&check_hom_associative(&a), name)?;
            Ok(CatalogObject::HomAlgebra(a))
        }
        "sl2-linear-poisson" => {
            let lambda = args.nonzero("lambda")?;
            let structure = LiePoissonStructure::sl2();
            let alpha = sl2_scaling(&lambda);
            verified(&check_poisson_substitution(&structure, &alpha)?, name)?;
            Ok(CatalogObject::LiePoisson { structure, alpha })
        }
        "sl2-truncated" => {
            let degree = args.count("degree", 1, 5)?;
            let lambda = args.nonzero("lambda")?;
            let structure = LiePoissonStructure::sl2();
            let (basis, untwisted) = truncated_algebra(&structure, degree as u32)?;
            let alpha = truncated_map(&basis, &sl2_scaling(&lambda))?;
            let algebra = morphism_twist(&untwisted, &alpha)?;
            verified(&check_hom_poisson(&algebra), name)?;
            verified(&check_multiplicative(&algebra), name)?;
            Ok(CatalogObject::Truncated { basis, algebra })
        }
        "symplectic" => {
            let structure = SymplecticStructure::new(args.count("n", 1, 8)?)?;
            let gens = crate::poly::PoissonBracket::<Rational>::generators(&structure).clone();
            let shift = vec![args.get("c"); gens.len()];
            let phi = Substitution::translation(&gens, &shift)?;
            verified(&check_poisson_substitution(&structure, &phi)?, name)?;
            Ok(CatalogObject::Symplectic { structure, phi })
        }
        "free-poly" => {
            let gens = generators(["X"]);
            let alpha = free_poly_shift(&gens, &args.get("shift"))?;
            Ok(CatalogObject::FreePoly {
                generators: gens,
                alpha,
            })
        }
        "unit" => {
            let mu = Trilinear::from_entries(1, [(0, 0, 0, Rational::one())])?;
            let p = HomPoissonAlgebra::new(
                vec!["e".into()],
                Trilinear::zero(1),
                mu,
                LinearMap::identity(1),
                true,
            )?;
            verified(&check_hom_poisson(&p), name)?;
            Ok(CatalogObject::HomPoisson(p))
        }
        _ => unreachable!("entry table and builders agree"),
    }
}

fn verified(report: &CheckReport<Rational>, name: &str) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: name.to_string(),
            reason: format!("built structure fails {}", report.identity),
        })
    }
}

fn twisted_heisenberg(p: HomPoissonAlgebra<Rational>, args: &Args<'_>) -> Result<CatalogObject> {
    let a = |n: &str| args.get(n);
    let beta = heisenberg_morphism(
        &a("a11"),
        &a("a12"),
        &a("a21"),
        &a("a22"),
        &a("a31"),
        &a("a32"),
    );
    let p = if beta.is_identity() {
        p
    } else {
        morphism_twist(&p, &beta).map_err(|_| Error::InvalidParameter {
            name: "a11..a32".into(),
            reason: "matrix is not a morphism of this Poisson algebra".into(),
        })?
    };
    verified(&check_hom_poisson(&p), args.entry.name)?;
    Ok(CatalogObject::HomPoisson(p))
}

fn xyz() -> Vec<String> {
    ["X", "Y", "Z"].iter().map(|s| s.to_string()).collect()
}

fn heisenberg_bracket<S: Scalar>() -> Trilinear<S> {
    Trilinear::from_entries(3, [(0, 1, 2, S::one()), (1, 0, 2, -S::one())])
        .expect("indices in range")
}

/// `[X,Y] = Z` with `XY = YX = ζZ`, untwisted.
pub fn heisenberg_p31<S: Scalar>(zeta: &S) -> HomPoissonAlgebra<S> {
    let mu = Trilinear::from_entries(3, [(0, 1, 2, zeta.clone()), (1, 0, 2, zeta.clone())])
        .expect("indices in range");
    HomPoissonAlgebra::new(
        xyz(),
        heisenberg_bracket(),
        mu,
        LinearMap::identity(3),
        true,
    )
    .expect("valid dimensions")
}

/// `[X,Y] = Z` with `X² = Z`, untwisted.
pub fn heisenberg_p32<S: Scalar>() -> HomPoissonAlgebra<S> {
    let mu = Trilinear::from_entries(3, [(0, 0, 2, S::one())]).expect("indices in range");
    HomPoissonAlgebra::new(
        xyz(),
        heisenberg_bracket(),
        mu,
        LinearMap::identity(3),
        true,
    )
    .expect("valid dimensions")
}

/// The Lie algebra morphism of the Heisenberg algebra with
/// `X ↦ a11 X + a21 Y + a31 Z`, `Y ↦ a12 X + a22 Y + a32 Z`, `Z ↦ b Z`,
/// where `b = a11 a22 − a21 a12`.
pub fn heisenberg_morphism<S: Scalar>(
    a11: &S,
    a12: &S,
    a21: &S,
    a22: &S,
    a31: &S,
    a32: &S,
) -> LinearMap<S> {
    let b = a11.clone() * a22.clone() - a21.clone() * a12.clone();
    LinearMap::from_rows(vec![
        vec![a11.clone(), a12.clone(), S::zero()],
        vec![a21.clone(), a22.clone(), S::zero()],
        vec![a31.clone(), a32.clone(), b],
    ])
    .expect("square matrix")
}

/// Shapes of Poisson self-morphisms of the Heisenberg Poisson algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HeisenbergFamily {
    /// Any Lie morphism; the morphisms of `P³₁(0)`.
    Lie,
    /// `a12 = a21 = 0`.
    Alpha1,
    /// `a12 ≠ 0`, `a21 = a22 = 0`.
    Alpha2,
    /// `a21 ≠ 0`, `a11 = a12 = 0`.
    Alpha3,
    /// `a11 = a12 = 0` on `P³₂`.
    Alpha4,
    /// `a12 = 0`, `a22 = a11 ≠ 0` on `P³₂`.
    Alpha5,
}

/// Which of the Heisenberg Poisson algebras a morphism acts on.
#[derive(Clone, Debug, PartialEq)]
pub enum HeisenbergTarget<S> {
    P31(S),
    P32,
}

impl<S: Scalar> HeisenbergTarget<S> {
    pub fn algebra(&self) -> HomPoissonAlgebra<S> {
        match self {
            HeisenbergTarget::P31(zeta) => heisenberg_p31(zeta),
            HeisenbergTarget::P32 => heisenberg_p32(),
        }
    }
}

/// Family of the Lie morphism with upper block `[[a11, a12], [a21, a22]]`
/// as a Poisson morphism of `target`, or `None` when it is not one.
pub fn classify_heisenberg_morphism<S: Scalar>(
    target: &HeisenbergTarget<S>,
    a11: &S,
    a12: &S,
    a21: &S,
    a22: &S,
) -> Option<HeisenbergFamily> {
    use HeisenbergFamily::*;
    match target {
        HeisenbergTarget::P31(zeta) if zeta.is_zero() => Some(Lie),
        HeisenbergTarget::P31(_) => {
            if a12.is_zero() && a21.is_zero() {
                Some(Alpha1)
            } else if !a12.is_zero() && a21.is_zero() && a22.is_zero() {
                Some(Alpha2)
            } else if !a21.is_zero() && a11.is_zero() && a12.is_zero() {
                Some(Alpha3)
            } else {
                None
            }
        }
        HeisenbergTarget::P32 if !a12.is_zero() => None,
        HeisenbergTarget::P32 if a11.is_zero() => Some(Alpha4),
        HeisenbergTarget::P32 if a22 == a11 => Some(Alpha5),
        HeisenbergTarget::P32 => None,
    }
}

/// The `n²`-dimensional algebra of `n × n` matrices, basis `E_ij` at index
/// `i·n + j`, with `E_ij E_kl = δ_jk E_il`.
pub fn matrix_algebra<S: Scalar>(n: usize) -> HomAlgebra<S> {
    let mut mu = Trilinear::zero(n * n);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                mu.set(i * n + j, j * n + l, i * n + l, S::one());
            }
        }
    }
    let basis = (0..n * n)
        .map(|k| format!("E{}{}", k / n + 1, k % n + 1))
        .collect();
    HomAlgebra::untwisted(basis, mu).expect("valid basis")
}

/// The matrix of `X ↦ D X D⁻¹` on matrix units, for diagonal `D`.
pub fn diagonal_conjugation<S: Scalar>(diag: &[S]) -> Result<LinearMap<S>> {
    let n = diag.len();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let dj = diag[j].checked_recip().ok_or(Error::NotInvertible)?;
            entries.push(diag[i].clone() * dj);
        }
    }
    Ok(LinearMap::diagonal(entries))
}

/// `e ↦ λe`, `f ↦ λ⁻¹f`, `h ↦ h` on `S(sl₂)`. `λ` must be nonzero.
pub fn sl2_scaling<S: Scalar>(lambda: &S) -> Substitution<S> {
    let inv = lambda.checked_recip().expect("nonzero lambda");
    let columns = vec![
        vec![lambda.clone(), S::zero(), S::zero()],
        vec![S::zero(), inv, S::zero()],
        vec![S::zero(), S::zero(), S::one()],
    ];
    Substitution::linear(&generators(["e", "f", "h"]), &columns).expect("three generators")
}

/// `X ↦ shift + X` on `k[X]`.
pub fn free_poly_shift<S: Scalar>(gens: &Generators, shift: &S) -> Result<Substitution<S>> {
    Substitution::translation(gens, std::slice::from_ref(shift))
}

/// Evaluates a morphism check of `f` on `target` as a Poisson map.
pub fn heisenberg_morphism_report<S: Scalar>(
    target: &HeisenbergTarget<S>,
    f: &LinearMap<S>,
) -> CheckReport<S> {
    let p = target.algebra();
    check_morphism(f, &p, &p, false)
}

/// Matrix-unit coordinates of an `n × n` matrix given row-major.
pub fn matrix_vector<S: Scalar>(rows: &[Vec<S>]) -> Vector<S> {
    Vector::from_vec(rows.iter().flatten().cloned().collect())
}
