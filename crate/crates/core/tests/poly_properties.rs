mod common;

use common::*;
use hompoisson::catalog::{free_poly_shift, sl2_scaling};
use hompoisson::poly::{
    check_poisson_substitution, generators, Generators, LiePoissonStructure, Monomial,
    PoissonBracket, SymplecticStructure, TwistedPoisson,
};
use hompoisson::{Polynomial, Rational, Substitution};
use num_traits::Zero;
use proptest::prelude::*;

/// Sums of up to four terms of total degree at most `max_degree`.
fn poly(gens: Generators, max_degree: u32) -> impl Strategy<Value = Polynomial> {
    let n = gens.len();
    prop::collection::vec(
        (prop::collection::vec(0..=max_degree, n), small_rational()),
        0..=4,
    )
    .prop_map(move |terms| {
        let mut p = Polynomial::zero(&gens);
        for (mut e, c) in terms {
            while e.iter().sum::<u32>() > max_degree {
                let i = e.iter().position(|&x| x > 0).unwrap();
                e[i] -= 1;
            }
            p = p
                .try_add(&Polynomial::monomial(&gens, Monomial::from_exponents(e), c))
                .unwrap();
        }
        p
    })
}

fn sl2_gens() -> Generators {
    generators(["e", "f", "h"])
}

fn heis_gens() -> Generators {
    generators(["X", "Y", "Z"])
}

fn lie_poisson_laws(
    b: &LiePoissonStructure<Rational>,
    f: &Polynomial,
    g: &Polynomial,
    h: &Polynomial,
) {
    let fg = b.bracket(f, g).unwrap();
    assert!(fg.try_add(&b.bracket(g, f).unwrap()).unwrap().is_zero());
    let jac = b
        .bracket(&fg, h)
        .unwrap()
        .try_add(&b.bracket(&b.bracket(h, f).unwrap(), g).unwrap())
        .unwrap()
        .try_add(&b.bracket(&b.bracket(g, h).unwrap(), f).unwrap())
        .unwrap();
    assert!(jac.is_zero());
    let lhs = b.bracket(f, &g.try_mul(h).unwrap()).unwrap();
    let rhs = fg
        .try_mul(h)
        .unwrap()
        .try_add(&g.try_mul(&b.bracket(f, h).unwrap()).unwrap())
        .unwrap();
    assert_eq!(lhs, rhs);
}

/// Evaluates `s(p)` by composing with the images evaluated at `point`.
fn eval_through(s: &Substitution, p: &Polynomial, point: &[Rational]) -> Rational {
    let moved: Vec<Rational> = s
        .images()
        .iter()
        .map(|im| im.eval(point).unwrap())
        .collect();
    p.eval(&moved).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sl2_bracket_is_poisson(
        f in poly(sl2_gens(), 3), g in poly(sl2_gens(), 3), h in poly(sl2_gens(), 3),
    ) {
        lie_poisson_laws(&LiePoissonStructure::sl2(), &f, &g, &h);
    }

    #[test]
    fn heisenberg_bracket_is_poisson(
        f in poly(heis_gens(), 3), g in poly(heis_gens(), 3), h in poly(heis_gens(), 3),
    ) {
        lie_poisson_laws(&LiePoissonStructure::heisenberg(), &f, &g, &h);
    }

    #[test]
    fn substitution_is_an_algebra_endomorphism(
        f in poly(sl2_gens(), 3), g in poly(sl2_gens(), 2),
        images in prop::collection::vec(poly(sl2_gens(), 2), 3),
        point in prop::collection::vec(small_rational(), 3),
    ) {
        let s = Substitution::new(&sl2_gens(), images).unwrap();
        let fg = f.try_mul(&g).unwrap();
        prop_assert_eq!(s.apply(&fg).unwrap(), s.apply(&f).unwrap().try_mul(&s.apply(&g).unwrap()).unwrap());
        prop_assert_eq!(s.apply(&f).unwrap().eval(&point).unwrap(), eval_through(&s, &f, &point));
    }

    #[test]
    fn twisted_sl2_is_hom_poisson(
        lambda in small_rational().prop_filter("nonzero", |l| !l.is_zero()),
        f in poly(sl2_gens(), 2), g in poly(sl2_gens(), 2), h in poly(sl2_gens(), 2),
    ) {
        let structure = LiePoissonStructure::sl2();
        let beta = sl2_scaling(&lambda);
        prop_assert!(check_poisson_substitution(&structure, &beta).unwrap().passed);
        let t = TwistedPoisson::new(&structure, &beta).unwrap();
        prop_assert!(t.hom_leibniz_defect(&f, &g, &h).unwrap().is_zero());
        prop_assert!(t.hom_jacobian(&f, &g, &h).unwrap().is_zero());
        prop_assert!(t.hom_associator(&f, &g, &h).unwrap().is_zero());
    }

    #[test]
    fn twisted_symplectic_is_hom_poisson(
        shift in prop::collection::vec(small_rational(), 2),
        f in poly(generators(["x1", "x2"]), 2),
        g in poly(generators(["x1", "x2"]), 2),
        h in poly(generators(["x1", "x2"]), 2),
    ) {
        let structure = SymplecticStructure::new(1).unwrap();
        let gens = PoissonBracket::<Rational>::generators(&structure).clone();
        let (f, g, h) = (relabel(&f, &gens), relabel(&g, &gens), relabel(&h, &gens));
        let beta = Substitution::translation(&gens, &shift).unwrap();
        let t = TwistedPoisson::new(&structure, &beta).unwrap();
        prop_assert!(t.hom_leibniz_defect(&f, &g, &h).unwrap().is_zero());
        prop_assert!(t.hom_jacobian(&f, &g, &h).unwrap().is_zero());
    }
}

fn relabel(p: &Polynomial, gens: &Generators) -> Polynomial {
    p.terms().fold(Polynomial::zero(gens), |acc, (m, c)| {
        acc.try_add(&Polynomial::monomial(gens, m.clone(), c.clone()))
            .unwrap()
    })
}

#[test]
fn symplectic_bracket_on_coordinates() {
    for n in 1..=3 {
        let s = SymplecticStructure::new(n).unwrap();
        let gens = PoissonBracket::<Rational>::generators(&s).clone();
        for i in 0..2 * n {
            for j in 0..2 * n {
                let b: Polynomial = s
                    .bracket(&Polynomial::var(&gens, i), &Polynomial::var(&gens, j))
                    .unwrap();
                let expected = if j == i + n {
                    int(1)
                } else if i == j + n {
                    int(-1)
                } else {
                    int(0)
                };
                assert_eq!(b, Polynomial::constant(&gens, expected));
            }
        }
    }
}

#[test]
fn lie_poisson_bracket_on_generators() {
    let s = LiePoissonStructure::<Rational>::sl2();
    let gens = sl2_gens();
    let v = |name| Polynomial::generator(&gens, name).unwrap();
    assert_eq!(s.bracket(&v("h"), &v("e")).unwrap(), v("e").scale(&int(2)));
    assert_eq!(s.bracket(&v("h"), &v("f")).unwrap(), v("f").scale(&int(-2)));
    assert_eq!(s.bracket(&v("e"), &v("f")).unwrap(), v("h"));
}

#[test]
fn shift_powers_on_the_generator() {
    let gens = generators(["X"]);
    let alpha = free_poly_shift(&gens, &int(1)).unwrap();
    let x = Polynomial::var(&gens, 0);
    for n in 0..=6u32 {
        let expected = x
            .try_add(&Polynomial::constant(&gens, int(n as i64)))
            .unwrap();
        assert_eq!(alpha.power(n).unwrap().apply(&x).unwrap(), expected);
    }
}

#[test]
fn shifted_cube_matches_binomial_expansion() {
    let gens = generators(["X"]);
    let alpha = free_poly_shift(&gens, &int(1)).unwrap();
    let cube = Polynomial::var(&gens, 0).pow(3).unwrap();
    let shifted = alpha.power(2).unwrap().apply(&cube).unwrap();
    for (k, c) in [(0u32, 8), (1, 12), (2, 6), (3, 1)] {
        assert_eq!(
            shifted.coefficient(&Monomial::from_exponents(vec![k])),
            int(c)
        );
    }
    assert_eq!(shifted.num_terms(), 4);
    assert_eq!(shifted.to_string(), "X^3 + 6*X^2 + 12*X + 8");
}

#[test]
fn non_poisson_substitutions_are_refused() {
    let structure = LiePoissonStructure::sl2();
    let gens = sl2_gens();
    let swap = Substitution::linear(
        &gens,
        &[
            vec![int(0), int(1), int(0)],
            vec![int(1), int(0), int(0)],
            vec![int(0), int(0), int(1)],
        ],
    )
    .unwrap();
    assert!(
        !check_poisson_substitution(&structure, &swap)
            .unwrap()
            .passed
    );
    assert!(TwistedPoisson::new(&structure, &swap).is_err());
    let square = Substitution::new(
        &gens,
        vec![
            Polynomial::var(&gens, 0).pow(2).unwrap(),
            Polynomial::var(&gens, 1),
            Polynomial::var(&gens, 2),
        ],
    )
    .unwrap();
    assert!(check_poisson_substitution(&structure, &square).is_err());
}
