use proptest::prelude::*;

use kummer_core::algebra::partial_fractions::partial_fractions;
use kummer_core::algebra::{
    factor_fp, gcd, gcdfree_basis, is_irreducible_fp, log_derivative, pth_root_mod,
    squarefree_decompose, FpPoly, FpRatFunc, Poly, PrimeField, QPoly, QRatFunc, RatFunc,
    Rationals,
};
use kummer_core::artin_schreier::{as_component_count, wp, wp_reduce, AdditiveCurve};

fn qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| Poly::from_ints(Rationals, &c))
}

fn nonzero_qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    qpoly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

fn fppoly(p: u64, max_deg: usize) -> impl Strategy<Value = FpPoly> {
    prop::collection::vec(0..p, 1..=max_deg + 1)
        .prop_map(move |c| Poly::from_coeffs(PrimeField::new(p).unwrap(), c))
}

fn fp_ratfunc(p: u64) -> impl Strategy<Value = FpRatFunc> {
    (fppoly(p, 6), fppoly(p, 4).prop_filter("nonzero", |d| !d.is_zero()))
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn squarefree_reconstructs_over_q(a in nonzero_qpoly(3), b in nonzero_qpoly(2), e in 1u32..4) {
        let f = &a * &b.pow(u64::from(e));
        let s = squarefree_decompose(&f).unwrap();
        prop_assert_eq!(s.expand(&Rationals), f);
        for (i, (g, _)) in s.parts.iter().enumerate() {
            prop_assert!(gcd(g, &g.derivative()).unwrap().is_one());
            for (h, _) in &s.parts[i + 1..] {
                prop_assert!(gcd(g, h).unwrap().is_one());
            }
        }
    }

    #[test]
    fn squarefree_reconstructs_over_fp(p in prime(), seed in any::<u64>()) {
        let field = PrimeField::new(p).unwrap();
        let c: Vec<u64> = (0..6).map(|i| (seed >> (i * 5)) % p).collect();
        let a = Poly::from_coeffs(field, c);
        prop_assume!(!a.is_zero());
        let f = &a * &(&a * &Poly::from_coeffs(field, vec![1, 1])).pow(p);
        prop_assert_eq!(squarefree_decompose(&f).unwrap().expand(&field), f);
    }

    #[test]
    fn gcdfree_basis_is_coprime_and_covers(polys in prop::collection::vec(nonzero_qpoly(3), 1..4)) {
        let b = gcdfree_basis(&polys).unwrap();
        for (i, g) in b.basis.iter().enumerate() {
            prop_assert!(!g.is_constant() && g.is_monic());
            for h in &b.basis[i + 1..] {
                prop_assert!(gcd(g, h).unwrap().is_one());
            }
        }
        for (p, row) in polys.iter().zip(&b.exponents) {
            let prod = b.basis.iter().zip(row).fold(QPoly::one(Rationals), |acc, (g, &e)| &acc * &g.pow(e));
            prop_assert_eq!(prod, p.monic());
        }
    }

    #[test]
    fn factorization_is_into_irreducibles(f in prime().prop_flat_map(|p| fppoly(p, 8))) {
        prop_assume!(!f.is_constant());
        let field = *f.field();
        let factors = factor_fp(&f).unwrap();
        let mut prod = Poly::constant(field, *f.leading_coeff().unwrap());
        for (g, e) in &factors {
            prop_assert!(g.is_monic());
            prop_assert!(is_irreducible_fp(g).unwrap());
            prod = &prod * &g.pow(*e);
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn partial_fractions_recombine(f in prime().prop_flat_map(fp_ratfunc)) {
        prop_assert_eq!(partial_fractions(&f).unwrap().recombine(), f);
    }

    #[test]
    fn pth_root_mod_is_a_root(p in prime(), seed in any::<u64>()) {
        let field = PrimeField::new(p).unwrap();
        let c = Poly::from_coeffs(field, (0..5).map(|i| (seed >> (3 * i)) % p).collect());
        let q = factor_fp(&Poly::from_coeffs(field, vec![(seed % p).max(1), 1, 0, 1, 1])).unwrap()
            .into_iter().map(|(g, _)| g).max_by_key(|g| g.degree()).unwrap();
        let e = pth_root_mod(&c, &q).unwrap();
        prop_assert!(q.divides(&(&e.pow(p) - &c)));
    }

    #[test]
    fn log_derivative_is_additive(a in nonzero_qpoly(3), b in nonzero_qpoly(3), c in nonzero_qpoly(2)) {
        let f = QRatFunc::new(a, c.clone()).unwrap();
        let g = QRatFunc::new(b, c).unwrap();
        let lhs = log_derivative(&f.mul(&g)).unwrap();
        prop_assert_eq!(lhs, log_derivative(&f).unwrap().add(&log_derivative(&g).unwrap()));
    }

    #[test]
    fn wp_reduction_certificate_and_idempotence(f in prime().prop_flat_map(fp_ratfunc)) {
        let w = wp_reduce(&f).unwrap();
        prop_assert_eq!(wp(&w.g).add(&w.r), f);
        let again = wp_reduce(&w.r).unwrap();
        prop_assert!(again.g.is_zero());
        prop_assert_eq!(again.r, w.r);
    }

    #[test]
    fn component_count_ignores_wp_shifts(
        (p, coords, h, c) in prime().prop_flat_map(|p| (
            Just(p),
            prop::collection::vec(fp_ratfunc(p), 1..=3),
            fp_ratfunc(p),
            0..p,
        ))
    ) {
        let field = PrimeField::new(p).unwrap();
        let x = AdditiveCurve::new(field, coords.clone()).unwrap();
        let mut shifted = coords;
        shifted[0] = shifted[0].add(&wp(&h)).add(&RatFunc::constant(field, c));
        let y = AdditiveCurve::new(field, shifted).unwrap();
        let n = as_component_count(&x).unwrap();
        prop_assert_eq!(&n, &as_component_count(&y).unwrap());
        // a power of p
        let mut m = n;
        while &m % p == 0u32.into() { m /= p; }
        prop_assert!(m == 1u32.into());
    }
}
