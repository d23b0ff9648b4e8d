use std::cmp::Ordering;
use std::collections::BTreeSet;

use proptest::prelude::*;
use raocurve::construct::{construct_curve, random_input};
use raocurve::formulas::{expected_rao_hf, g_max, rao_structure_applies, rho_ex, CurveSpec};
use raocurve::monomial_ideal::hilbert_from_numerator;
use raocurve::ops::{gin, is_saturated, saturate};
use raocurve::oracle::{graded_piece_dim, oracle_hilbert_function};
use raocurve::{free_resolution, Field, GradedIdeal, Monomial, MonomialIdeal, Polynomial, Rational, Zp32003};

const NV: usize = 4;

fn monomial(nv: usize, max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, nv).prop_map(|e| Monomial::from_exponents(&e))
}

fn homogeneous<F: Field>(nv: usize, deg: u32) -> impl Strategy<Value = Polynomial<F>> {
    let monos = Monomial::all_of_degree(nv, deg);
    let len = monos.len();
    prop::collection::vec((0..len, -5i64..=5), 1..=4).prop_map(move |ts| {
        Polynomial::from_terms(nv, ts.into_iter().map(|(k, c)| (monos[k], F::from_i64(c))).collect())
    })
}

fn ring_axioms<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>, c: &Polynomial<F>) {
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(b), b.mul(a));
    assert!(a.sub(a).is_zero());
    let p = a.mul(b);
    assert!(p.is_zero() || p.is_homogeneous());
}

/// Random homogeneous ideal with small coefficients.
fn small_ideal() -> impl Strategy<Value = Vec<Polynomial<Rational>>> {
    prop::collection::vec((1u32..=3).prop_flat_map(|d| homogeneous::<Rational>(3, d)), 1..=4)
}

/// Borel closure, the smallest strongly stable ideal containing the given monomials.
fn borel_closure(nv: usize, gens: Vec<Vec<u32>>) -> MonomialIdeal {
    let mut todo = gens;
    let mut seen = BTreeSet::new();
    while let Some(e) = todo.pop() {
        if !seen.insert(e.clone()) {
            continue;
        }
        for j in 1..nv {
            if e[j] > 0 {
                for i in 0..j {
                    let mut f = e.clone();
                    f[j] -= 1;
                    f[i] += 1;
                    todo.push(f);
                }
            }
        }
    }
    MonomialIdeal::new(nv, seen.iter().map(|e| Monomial::from_exponents(e)).collect())
}

fn strongly_stable() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=5).prop_flat_map(|nv| {
        prop::collection::vec(
            (1u32..=6).prop_flat_map(move |d| prop::collection::vec(0..nv, d as usize)),
            1..=3,
        )
        .prop_map(move |picks| {
            let gens = picks
                .into_iter()
                .map(|vars| {
                    let mut e = vec![0u32; nv];
                    for v in vars {
                        e[v] += 1;
                    }
                    e
                })
                .collect();
            borel_closure(nv, gens)
        })
    })
}

fn curve_point() -> impl Strategy<Value = (usize, u32, i64)> {
    (3usize..=6, 3u32..=8, 0i64..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn revlex_is_a_monomial_order(a in monomial(NV, 4), b in monomial(NV, 4), c in monomial(NV, 4), m in monomial(NV, 3)) {
        prop_assert_eq!(a.cmp_revlex(&b), b.cmp_revlex(&a).reverse());
        if a.cmp_revlex(&b) == Ordering::Less && b.cmp_revlex(&c) == Ordering::Less {
            prop_assert_eq!(a.cmp_revlex(&c), Ordering::Less);
        }
        if a.cmp_revlex(&b) == Ordering::Greater {
            prop_assert_eq!(m.mul(&a).cmp_revlex(&m.mul(&b)), Ordering::Greater);
        }
        prop_assert_eq!(a.cmp_revlex(&b) == Ordering::Equal, a == b);
    }

    #[test]
    fn rational_ring_axioms(
        a in homogeneous::<Rational>(NV, 2),
        b in homogeneous::<Rational>(NV, 1),
        c in homogeneous::<Rational>(NV, 1),
    ) {
        ring_axioms(&a, &b, &c);
    }

    #[test]
    fn prime_field_ring_axioms(
        a in homogeneous::<Zp32003>(NV, 3),
        b in homogeneous::<Zp32003>(NV, 2),
        c in homogeneous::<Zp32003>(NV, 2),
        x in 1i64..32003,
    ) {
        ring_axioms(&a, &b, &c);
        let x = Zp32003::new(x);
        prop_assert_eq!(x * x.inv(), Zp32003::new(1));
    }

    #[test]
    fn groebner_hf_matches_oracle(gens in small_ideal()) {
        let i = GradedIdeal::new(3, gens.clone()).unwrap();
        for j in 0..=8 {
            prop_assert_eq!(i.hilbert_function(j), oracle_hilbert_function(3, &gens, j), "j = {}", j);
            let std = Monomial::all_of_degree(3, j as u32).len() as u64 - i.hilbert_function(j);
            prop_assert_eq!(graded_piece_dim(3, &gens, j as u32), std);
        }
    }

    #[test]
    fn resolution_is_exact_and_minimal(gens in small_ideal()) {
        let i = GradedIdeal::new(3, gens).unwrap();
        let r = free_resolution(&i);
        prop_assert!(r.is_complex());
        prop_assert!(!r.has_unit_entries());
        let num = r.betti().hilbert_numerator();
        for j in 0..=10 {
            prop_assert_eq!(hilbert_from_numerator(&num, 3, j), i.hilbert_function(j));
        }
    }

    #[test]
    fn saturation_is_idempotent(gens in small_ideal()) {
        let i = GradedIdeal::new(3, gens).unwrap();
        let s = saturate(&i);
        prop_assert!(is_saturated(&s));
        prop_assert!(saturate(&s).same_ideal(&s));
        prop_assert!(s.contains_ideal(&i));
    }

    #[test]
    fn ek_matches_hochster(m in strongly_stable()) {
        prop_assert!(m.is_strongly_stable());
        prop_assert_eq!(m.ek_betti().unwrap(), m.hochster_betti());
    }

    #[test]
    fn rho_branches_agree((n, d, a) in curve_point(), j in -30i64..30) {
        let g = g_max(n, d).unwrap() - a;
        let spec = CurveSpec::new(n, d, g).unwrap();
        prop_assert_eq!(rho_ex(n, d, g, j).unwrap(), spec.rho(j));
        prop_assert!(spec.rho(j) >= 0);
    }

    #[test]
    fn rao_hf_equals_rho((n, d, a) in curve_point()) {
        let g = g_max(n, d).unwrap() - a;
        let spec = CurveSpec::new(n, d, g).unwrap();
        if rao_structure_applies(&spec) {
            let (lo, hi) = spec.window();
            for j in lo..=hi {
                prop_assert_eq!(expected_rao_hf(&spec, j).unwrap(), spec.rho(j));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn gin_of_strongly_stable_is_itself(m in strongly_stable(), seed in 0u64..1000) {
        prop_assume!(m.nvars() <= 4);
        let i = GradedIdeal::<Rational>::from_monomials(&m);
        prop_assert_eq!(gin(&i, seed).unwrap().ideal, m);
    }

    #[test]
    fn constructed_curves_are_saturated_and_nondegenerate(n in 3usize..=4, d in 3u32..=5, a in 0u32..=2, seed in 0u64..10_000) {
        let input = random_input::<Rational>(n, d, a, seed).unwrap();
        let i = construct_curve(&input).unwrap();
        prop_assert!(is_saturated(&i));
        prop_assert_eq!(i.linear_forms_dim(), 0);
    }
}

/// ρ grows strictly on negative degrees up to 0 wherever it is positive.
#[test]
fn rho_increases_on_negative_degrees() {
    for n in 3..=6 {
        for d in 3..=8 {
            for a in 0..=4 {
                let spec = CurveSpec::from_a(n, d, a).unwrap();
                let (lo, _) = spec.window();
                for j in lo..0 {
                    if spec.rho(j) > 0 {
                        assert!(spec.rho(j + 1) > spec.rho(j), "n={n} d={d} a={a} j={j}");
                    }
                }
            }
        }
    }
}
