use proptest::prelude::*;
use proptest::sample::select;

use qsum_core::arith::{is_prime, isqrt, legendre};
use qsum_core::closed_forms::{
    cornacchia, cornacchia_4p, jacobsthal_cubic, rpr_cubic, rpr_polynomial,
};
use qsum_core::master::{master_sides, CoeffMatrix3};
use qsum_core::sums::char_sum;
use qsum_core::transforms::{
    descend_depressed, descend_quartic, descend_quartic_via_depressed, descent_principle_split,
    product_quartic, remark_pipeline, ProductParams,
};
use qsum_core::{FieldElement, FiniteField, Poly};

const FIELDS: &[(u64, usize)] = &[
    (5, 1),
    (7, 1),
    (11, 1),
    (13, 1),
    (17, 1),
    (19, 1),
    (23, 1),
    (37, 1),
    (101, 1),
    (199, 1),
    (5, 2),
    (7, 2),
];

fn field_strategy() -> impl Strategy<Value = FiniteField> {
    select(FIELDS).prop_map(|(p, k)| FiniteField::new(p, k).unwrap())
}

fn elems(f: &FiniteField, n: usize) -> impl Strategy<Value = Vec<FieldElement>> {
    let f = f.clone();
    prop::collection::vec(0..f.q(), n)
        .prop_map(move |ix| ix.into_iter().map(|i| f.element(i)).collect())
}

fn field_and(n: usize) -> impl Strategy<Value = (FiniteField, Vec<FieldElement>)> {
    field_strategy().prop_flat_map(move |f| (Just(f.clone()), elems(&f, n)))
}

fn sum(f: &Poly) -> i64 {
    char_sum(f).unwrap().value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sigma_is_multiplicative((_, v) in field_and(2)) {
        prop_assert_eq!((&v[0] * &v[1]).sigma(), v[0].sigma() * v[1].sigma());
    }

    #[test]
    fn affine_substitution_preserves_sums((f, v) in field_and(7)) {
        prop_assume!(!v[5].is_zero());
        let g = Poly::new(&f, v[..5].to_vec());
        let h = g.affine_substitute(&v[5], &v[6]).unwrap();
        prop_assert_eq!(sum(&h), sum(&g));
        // h(x) = g(ux + v) pointwise, and the inverse substitution undoes it
        let x = &v[0] + &v[1];
        prop_assert_eq!(h.eval(&x), g.eval(&(&v[5] * &x + v[6].clone())));
        let inv = v[5].inv().unwrap();
        prop_assert_eq!(h.affine_substitute(&inv, &-(&v[6] * &inv)).unwrap(), g);
    }

    #[test]
    fn scaling_pulls_out_sigma((f, v) in field_and(5)) {
        let g = Poly::new(&f, v[..4].to_vec());
        prop_assert_eq!(sum(&g.scale(&v[4])), v[4].sigma() as i64 * sum(&g));
    }

    #[test]
    fn descent_principle((f, v) in field_and(4)) {
        let (sq, g, xg) = descent_principle_split(&Poly::new(&f, v));
        prop_assert_eq!(sum(&sq), sum(&g) + sum(&xg));
    }

    #[test]
    fn weil_bound_for_square_free((f, v) in field_and(5), deg in 1usize..=5) {
        let mut coeffs = v[..deg].to_vec();
        coeffs.push(f.one());
        let g = Poly::new(&f, coeffs);
        prop_assume!(g.is_square_free().unwrap());
        prop_assert_eq!(char_sum(&g).unwrap().within_weil_bound(), Some(true));
    }

    #[test]
    fn nonzero_discriminant_iff_square_free((f, v) in field_and(5), deg in 2usize..=5) {
        let mut coeffs = v[..deg].to_vec();
        coeffs.push(f.one());
        let g = Poly::new(&f, coeffs);
        let by_gcd = g.gcd(&g.derivative()).unwrap().degree() == Some(0);
        prop_assert_eq!(!g.discriminant().unwrap().is_zero(), by_gcd);
        prop_assert_eq!(g.is_square_free().unwrap(), by_gcd);
    }

    #[test]
    fn division_identity((f, v) in field_and(9)) {
        let a = Poly::new(&f, v[..5].to_vec());
        let b = Poly::new(&f, v[5..].to_vec());
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&quo * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn coefficients_are_normalised((f, v) in field_and(4)) {
        let g = Poly::new(&f, v);
        if let Some(lc) = g.leading() {
            prop_assert!(!lc.is_zero());
        }
        prop_assert_eq!((&g - &g).degree(), None);
    }

    #[test]
    fn depressed_descent_is_general_descent_with_zero_cubic_term((f, v) in field_and(3)) {
        let zero = f.zero();
        match (descend_depressed(&v[0], &v[1], &v[2]), descend_quartic(&zero, &v[0], &v[1], &v[2])) {
            (Ok(d), Ok(g)) => {
                prop_assert_eq!(d.source, g.source);
                prop_assert_eq!(d.target, g.target);
            }
            (d, g) => prop_assert!(d.is_err() && g.is_err()),
        }
    }

    #[test]
    fn general_descent_via_depression_agrees((_, v) in field_and(4)) {
        if let Ok(direct) = descend_quartic(&v[0], &v[1], &v[2], &v[3]) {
            let routed = descend_quartic_via_depressed(&v[0], &v[1], &v[2], &v[3]).unwrap();
            prop_assert_eq!(routed.target, direct.target);
        }
    }

    #[test]
    fn product_criterion_matches_gcd((_, v) in field_and(4)) {
        let quartic = product_quartic(&v[0], &v[1], &v[2], &v[3]).unwrap();
        let crit = ProductParams::new(&v[0], &v[1], &v[2], &v[3]).square_free_criterion();
        prop_assert_eq!(quartic.is_square_free().unwrap(), crit);
    }

    #[test]
    fn remark_pipeline_holds((_, v) in field_and(4)) {
        if let Ok(ok) = remark_pipeline(&v[0], &v[1], &v[2], &v[3]) {
            prop_assert!(ok);
        }
    }

    #[test]
    fn master_down_polys_are_transposed_rows((f, v) in field_and(9)) {
        let m = CoeffMatrix3::new(&f, std::array::from_fn(|r| std::array::from_fn(|c| v[3 * r + c].clone()))).unwrap();
        prop_assert_eq!(m.down_polys(), m.transpose().row_polys());
        prop_assert_eq!(m.down_discriminant(), m.transpose().row_discriminant());
    }

    #[test]
    fn master_form_expands_both_ways((f, v) in field_and(11)) {
        let m = CoeffMatrix3::new(&f, std::array::from_fn(|r| std::array::from_fn(|c| v[3 * r + c].clone()))).unwrap();
        let (u, x) = (&v[9], &v[10]);
        let (a, b, c) = m.row_polys();
        let (al, be, ga) = m.down_polys();
        let value = m.eval_form(u, x);
        prop_assert_eq!(&value, &(a.eval(x) * u.square() + b.eval(x) * u + c.eval(x)));
        prop_assert_eq!(&value, &(al.eval(u) * x.square() + be.eval(u) * x + ga.eval(u)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn master_formula_small_fields((f, v) in select(&FIELDS[..6]).prop_map(|(p, k)| FiniteField::new(p, k).unwrap())
        .prop_flat_map(|f| (Just(f.clone()), elems(&f, 9))))
    {
        let m = CoeffMatrix3::new(&f, std::array::from_fn(|r| std::array::from_fn(|c| v[3 * r + c].clone()))).unwrap();
        prop_assert!(master_sides(&m).unwrap().agree());
    }

    #[test]
    fn rpr_invariant_under_lambda_squares(p in select((5u64..600).filter(|&p| is_prime(p) && p != 19).collect::<Vec<_>>()),
        lambda in 1i64..50, t in 1i64..50)
    {
        prop_assume!(lambda % p as i64 != 0 && t % p as i64 != 0);
        // λ -> λ t^2 is x -> t^2 x up to the factor t^6
        prop_assert_eq!(rpr_cubic(p, lambda).unwrap(), rpr_cubic(p, lambda * t * t).unwrap());
        // the sign of A does not matter
        if let Ok(rep) = cornacchia_4p(p) {
            prop_assert_eq!(legendre(rep.a, 19) as i64 * rep.a, legendre(-rep.a, 19) as i64 * -rep.a);
        }
    }
}

fn primes(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&p| is_prime(p))
}

#[test]
fn cornacchia_matches_exhaustive_search() {
    for p in primes(5, 10_000) {
        let search: Vec<(u64, u64)> = (1..=isqrt(p))
            .filter_map(|a| {
                let rest = p.checked_sub(a * a)?;
                (rest > 0 && rest % 3 == 0 && isqrt(rest / 3).pow(2) == rest / 3)
                    .then(|| (a, isqrt(rest / 3)))
            })
            .collect();
        match cornacchia(p) {
            Ok(rep) => {
                assert_eq!(p % 3, 1);
                assert_eq!(rep.value(), p as i64);
                assert_eq!(rep.a.rem_euclid(3), 2, "p={p}");
                assert!(rep.b > 0);
                assert!(
                    search.contains(&(rep.a.unsigned_abs(), rep.b as u64)),
                    "p={p}"
                );
            }
            Err(_) => assert!(p % 3 == 2 && search.is_empty(), "p={p}"),
        }
        let search4: Vec<(u64, u64)> = (1..=isqrt(4 * p))
            .filter_map(|a| {
                let rest = 4 * p - a * a;
                (rest > 0 && rest % 19 == 0 && isqrt(rest / 19).pow(2) == rest / 19)
                    .then(|| (a, isqrt(rest / 19)))
            })
            .collect();
        match cornacchia_4p(p) {
            Ok(rep) => {
                assert_eq!(rep.value(), 4 * p as i64);
                assert!(rep.a > 0 && rep.b > 0);
                assert_eq!(search4, vec![(rep.a as u64, rep.b as u64)], "p={p}");
            }
            Err(_) => assert!(search4.is_empty() || p == 19, "p={p}"),
        }
    }
}

#[test]
fn cubic_closed_forms_match_enumeration() {
    for p in primes(5, 2000) {
        let f = FiniteField::prime(p).unwrap();
        assert_eq!(
            jacobsthal_cubic(p).unwrap(),
            sum(&Poly::from_descending(&f, &[1, 0, 0, 1])),
            "p={p}"
        );
        if p == 19 {
            continue;
        }
        for lambda in [1, 2, 3, -5].into_iter().filter(|l| l % p as i64 != 0) {
            assert_eq!(
                rpr_cubic(p, lambda).unwrap(),
                sum(&rpr_polynomial(&f, lambda)),
                "p={p} λ={lambda}"
            );
        }
    }
}
