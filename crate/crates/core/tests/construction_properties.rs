mod common;

use common::*;
use hompoisson::catalog::{
    classify_heisenberg_morphism, diagonal_conjugation, heisenberg_morphism, matrix_algebra,
    HeisenbergFamily, HeisenbergTarget,
};
use hompoisson::check::{
    check_hom_associative, check_hom_poisson, check_morphism, check_multiplicative,
};
use hompoisson::construct::{
    commutator_poisson, derived, morphism_twist, tensor, twist, twist_unchecked, verify_isomorphism,
};
use hompoisson::{HomAlgebra, HomPoissonAlgebra, LinearMap, Rational, Vector};
use num_traits::Zero;
use proptest::prelude::*;

fn target() -> impl Strategy<Value = HeisenbergTarget<Rational>> {
    prop_oneof![
        Just(HeisenbergTarget::P31(int(0))),
        Just(HeisenbergTarget::P31(int(1))),
        Just(HeisenbergTarget::P31(q("1/2"))),
        Just(HeisenbergTarget::P32),
    ]
}

/// Forces random parameters into a Poisson-morphism shape for `t`.
fn morphism_for(t: &HeisenbergTarget<Rational>, a: [Rational; 6], shape: u8) -> LinearMap {
    let [mut a11, mut a12, mut a21, mut a22, a31, a32] = a;
    let zero = Rational::zero();
    match t {
        HeisenbergTarget::P31(z) if z.is_zero() => {}
        HeisenbergTarget::P31(_) => match shape % 3 {
            0 => (a12, a21) = (zero.clone(), zero.clone()),
            1 => (a21, a22) = (zero.clone(), zero.clone()),
            _ => (a11, a12) = (zero.clone(), zero.clone()),
        },
        HeisenbergTarget::P32 => {
            a12 = zero.clone();
            if shape % 2 == 0 {
                a11 = zero.clone();
            } else {
                a22 = a11.clone();
            }
        }
    }
    heisenberg_morphism(&a11, &a12, &a21, &a22, &a31, &a32)
}

fn params() -> impl Strategy<Value = [Rational; 6]> {
    prop::array::uniform6(small_rational())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn twisting_by_weak_morphisms_stays_hom_poisson(
        t in target(), pre in params(), pre_shape in any::<u8>(), b in params(), shape in any::<u8>(),
    ) {
        let base = t.algebra();
        let gamma = morphism_for(&t, pre, pre_shape);
        let a = morphism_twist(&base, &gamma).unwrap();
        prop_assert!(check_multiplicative(&a).passed);
        let beta = morphism_for(&t, b, shape);
        prop_assert!(check_morphism(&beta, &a, &a, true).passed);
        let twisted = twist(&a, &beta).unwrap();
        prop_assert!(check_hom_poisson(&twisted).passed);
        if check_morphism(&beta, &a, &a, false).passed {
            prop_assert!(check_multiplicative(&twisted).passed);
        }
    }

    #[test]
    fn family_shapes_are_morphisms(t in target(), a in params(), shape in any::<u8>()) {
        let beta = morphism_for(&t, a, shape);
        let p = t.algebra();
        prop_assert!(check_morphism(&beta, &p, &p, false).passed);
        let family = classify_heisenberg_morphism(&t, beta.get(0, 0), beta.get(0, 1), beta.get(1, 0), beta.get(1, 1));
        prop_assert!(family.is_some());
        if t == HeisenbergTarget::P32 {
            prop_assert!(matches!(family, Some(HeisenbergFamily::Alpha4 | HeisenbergFamily::Alpha5)));
        }
    }
}

fn kron(x: &Vector, y: &Vector) -> Vec<Rational> {
    x.entries()
        .iter()
        .flat_map(|a| y.entries().iter().map(move |b| a * b))
        .collect()
}

#[test]
fn tensor_products_match_the_defining_formula() {
    let list = catalog_hom_poisson();
    let small: Vec<&(String, HomPoissonAlgebra)> =
        list.iter().filter(|(_, p)| p.dim() <= 4).collect();
    for (n1, a1) in &small {
        for (n2, a2) in &small {
            let t = tensor(a1, a2).unwrap();
            let (d1, d2) = (a1.dim(), a2.dim());
            assert_eq!(t.alpha(), &a1.alpha().kronecker(a2.alpha()));
            for i in 0..d1 * d2 {
                for j in 0..d1 * d2 {
                    let (i1, i2, j1, j2) = (i / d2, i % d2, j / d2, j % d2);
                    let mu = kron(
                        &a1.mu().basis_product(i1, j1),
                        &a2.mu().basis_product(i2, j2),
                    );
                    assert_eq!(t.mu().basis_product(i, j).entries(), mu.as_slice());
                    let br = add(
                        &kron(
                            &a1.bracket().basis_product(i1, j1),
                            &a2.mu().basis_product(i2, j2),
                        ),
                        &kron(
                            &a1.mu().basis_product(i1, j1),
                            &a2.bracket().basis_product(i2, j2),
                        ),
                    );
                    assert_eq!(
                        t.bracket().basis_product(i, j).entries(),
                        br.as_slice(),
                        "{n1} (x) {n2}"
                    );
                }
            }
        }
    }
}

#[test]
fn tensor_products_of_catalog_algebras_are_hom_poisson() {
    let list = catalog_hom_poisson();
    let small: Vec<&(String, HomPoissonAlgebra)> =
        list.iter().filter(|(_, p)| p.dim() <= 4).collect();
    for (k, (n1, a1)) in small.iter().enumerate() {
        for (n2, a2) in &small[k..] {
            let t = tensor(a1, a2).unwrap();
            let r = check_hom_poisson(&t);
            assert!(r.passed, "{n1} (x) {n2}: {r}");
            assert!(check_multiplicative(&t).passed, "{n1} (x) {n2}");
        }
    }
}

#[test]
fn tensor_refuses_non_commutative_factor() {
    let m = commutator_poisson(&matrix_algebra(2)).unwrap();
    let h = HeisenbergTarget::P31(int(1)).algebra();
    assert!(tensor(&m, &h).is_err());
    assert!(tensor(&h, &m).is_err());
}

#[test]
fn derived_algebras_of_catalog_entries() {
    for (name, a) in catalog_hom_poisson() {
        for n in 0..=3 {
            let d = derived(&a, n).unwrap();
            assert_eq!(d, twist(&a, &a.alpha().power(n)).unwrap(), "{name}");
            assert!(check_hom_poisson(&d).passed, "{name} n={n}");
            assert!(check_multiplicative(&d).passed, "{name} n={n}");
        }
    }
}

#[test]
fn derived_requires_multiplicative() {
    let p = HeisenbergTarget::P31(int(1)).algebra();
    let skew = LinearMap::from_rows(vec![
        vec![int(1), int(1), int(0)],
        vec![int(0), int(1), int(0)],
        vec![int(0), int(0), int(1)],
    ])
    .unwrap();
    let forced = twist_unchecked(&p, &skew)
        .unwrap()
        .with_alpha(skew)
        .unwrap();
    assert!(derived(&forced, 1).is_err());
}

#[test]
fn commutator_algebras_of_matrix_algebras() {
    for n in [2, 3] {
        let a = matrix_algebra::<Rational>(n);
        let p = commutator_poisson(&a).unwrap();
        let r = check_hom_poisson(&p);
        assert!(r.passed, "{r}");
        assert!(!p.is_commutative_claimed());
        // twisted by conjugation: Hom-associative, not associative
        let mut diag = vec![int(1); n];
        diag[0] = q("1/2");
        let beta = diagonal_conjugation(&diag).unwrap();
        let twisted = HomAlgebra::new(
            a.basis().to_vec(),
            a.mu().post_map(&beta).unwrap(),
            beta.clone(),
        )
        .unwrap();
        assert!(check_hom_associative(&twisted).passed);
        assert!(
            !check_hom_associative(&twisted.with_alpha(LinearMap::identity(n * n)).unwrap()).passed
        );
        let tp = commutator_poisson(&twisted).unwrap();
        assert!(check_hom_poisson(&tp).passed);
        assert!(check_multiplicative(&tp).passed);
    }
}

#[test]
fn heisenberg_scalings_are_isomorphisms() {
    let p = HeisenbergTarget::P31(int(1)).algebra();
    for b in ["2", "-1/3"] {
        let f = LinearMap::diagonal(vec![int(1), int(1), q(b)]);
        let twisted = p.with_bracket(p.bracket().post_map(&f).unwrap()).unwrap();
        let twisted = twisted.with_mu(p.mu().post_map(&f).unwrap()).unwrap();
        assert!(verify_isomorphism(&f, &p, &twisted).passed);
        assert!(!verify_isomorphism(&LinearMap::identity(3), &p, &twisted).passed);
    }
}
