#![allow(dead_code)]

use hompoisson::{parse_scalar, HomAlgebra, LinearMap, Rational, Scalar, Trilinear, Vector};
use num_traits::Zero;
use proptest::prelude::*;

pub fn q(s: &str) -> Rational {
    parse_scalar(s).unwrap()
}

pub fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| int(n) / int(d))
}

/// Mostly zero, so random tensors resemble real structure constants.
pub fn sparse_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![2 => Just(int(0)), 1 => small_rational()]
}

pub fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(small_rational(), dim).prop_map(Vector::from_vec)
}

pub fn map(dim: usize) -> impl Strategy<Value = LinearMap> {
    prop::collection::vec(small_rational(), dim * dim).prop_map(move |e| {
        LinearMap::from_rows(e.chunks(dim).map(|r| r.to_vec()).collect()).unwrap()
    })
}

pub fn tensor(dim: usize) -> impl Strategy<Value = Trilinear> {
    prop::collection::vec(sparse_rational(), dim * dim * dim).prop_map(move |e| {
        let mut t = Trilinear::zero(dim);
        for (n, c) in e.into_iter().enumerate() {
            t.set(n / (dim * dim), (n / dim) % dim, n % dim, c);
        }
        t
    })
}

pub fn hom_algebra(dim: usize) -> impl Strategy<Value = HomAlgebra> {
    (tensor(dim), map(dim)).prop_map(move |(mu, alpha)| {
        HomAlgebra::new(hompoisson::algebra::default_basis(dim), mu, alpha).unwrap()
    })
}

/// Brute-force structure constants: `c[i][j][k]` is the coefficient of
/// `e_k` in `e_i e_j`.
pub struct Oracle {
    pub c: Vec<Vec<Vec<Rational>>>,
    pub a: Vec<Vec<Rational>>,
}

impl Oracle {
    pub fn of(alg: &HomAlgebra) -> Self {
        let d = alg.dim();
        let c = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| alg.mu().get(i, j, k)).collect())
                    .collect()
            })
            .collect();
        let a = (0..d)
            .map(|r| (0..d).map(|s| alg.alpha().get(r, s).clone()).collect())
            .collect();
        Oracle { c, a }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![int(0); d];
        for i in (0..d).filter(|&i| !x[i].is_zero()) {
            for j in (0..d).filter(|&j| !y[j].is_zero()) {
                for k in 0..d {
                    out[k] += x[i].clone() * y[j].clone() * self.c[i][j][k].clone();
                }
            }
        }
        out
    }

    pub fn alpha(&self, x: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        (0..d)
            .map(|r| {
                (0..d)
                    .map(|s| self.a[r][s].clone() * x[s].clone())
                    .fold(int(0), |acc, v| acc + v)
            })
            .collect()
    }

    /// `(xy)α(z) − α(x)(yz)`.
    pub fn assoc(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        sub(
            &self.mul(&self.mul(x, y), &self.alpha(z)),
            &self.mul(&self.alpha(x), &self.mul(y, z)),
        )
    }
}

pub fn add(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale(c: &Rational, x: &[Rational]) -> Vec<Rational> {
    x.iter().map(|a| c * a).collect()
}

pub fn sum(terms: &[Vec<Rational>]) -> Vec<Rational> {
    terms[1..]
        .iter()
        .fold(terms[0].clone(), |acc, t| add(&acc, t))
}

pub fn basis(dim: usize, i: usize) -> Vec<Rational> {
    (0..dim)
        .map(|k| if k == i { int(1) } else { int(0) })
        .collect()
}

/// Random algebras graded by signs `s`: `e_i e_j` may involve `e_k` only
/// when `s_k = s_i s_j`, so `α = diag(s)` is multiplicative.
pub fn graded_multiplicative(dim: usize) -> impl Strategy<Value = HomAlgebra> {
    (prop::collection::vec(any::<bool>(), dim), tensor(dim)).prop_map(move |(signs, raw)| {
        let s: Vec<i64> = signs.iter().map(|&b| if b { 1 } else { -1 }).collect();
        let mut mu = Trilinear::zero(dim);
        for (i, j, k, c) in raw.entries() {
            if s[k] == s[i] * s[j] {
                mu.set(i, j, k, c);
            }
        }
        let alpha = LinearMap::diagonal(s.iter().map(|&v| int(v)).collect());
        HomAlgebra::new(hompoisson::algebra::default_basis(dim), mu, alpha).unwrap()
    })
}

fn build(name: &str, params: &[(&str, &str)]) -> hompoisson::HomPoissonAlgebra {
    let params = params.iter().map(|(k, v)| (k.to_string(), q(v))).collect();
    hompoisson::catalog::build_catalog(name, &params)
        .unwrap()
        .hom_poisson()
        .unwrap()
        .clone()
}

/// Finite-dimensional Hom-Poisson algebras (commutative products) from the
/// catalog, untwisted and twisted.
pub fn catalog_hom_poisson() -> Vec<(String, hompoisson::HomPoissonAlgebra)> {
    static CATALOG: std::sync::OnceLock<Vec<(String, hompoisson::HomPoissonAlgebra)>> =
        std::sync::OnceLock::new();
    CATALOG.get_or_init(build_catalog_list).clone()
}

fn build_catalog_list() -> Vec<(String, hompoisson::HomPoissonAlgebra)> {
    let cases: Vec<(&str, Vec<(&str, &str)>)> = vec![
        ("heisenberg-p31", vec![("zeta", "0")]),
        ("heisenberg-p31", vec![("zeta", "1")]),
        ("heisenberg-p31", vec![("zeta", "1/2")]),
        (
            "heisenberg-p31",
            vec![("zeta", "1"), ("a11", "2"), ("a22", "3")],
        ),
        (
            "heisenberg-p31",
            vec![
                ("zeta", "0"),
                ("a11", "1"),
                ("a12", "2"),
                ("a21", "-1"),
                ("a31", "1"),
            ],
        ),
        ("heisenberg-p32", vec![]),
        (
            "heisenberg-p32",
            vec![("a11", "2"), ("a22", "2"), ("a21", "1"), ("a32", "-1")],
        ),
        ("unit", vec![]),
        ("sl2-truncated", vec![("degree", "2"), ("lambda", "2")]),
        ("sl2-truncated", vec![("degree", "3"), ("lambda", "1/2")]),
    ];
    cases
        .into_iter()
        .map(|(name, params)| (format!("{name}{params:?}"), build(name, &params)))
        .collect()
}
