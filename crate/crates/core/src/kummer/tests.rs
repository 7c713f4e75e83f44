use num_bigint::BigInt;
use num_traits::One;

use super::*;
use crate::expr::parse_torus_curve;
use crate::lattice::{ElementaryDivisors, IntMatrix};
use crate::algebra::{Poly, QRatFunc, Rationals};

fn curve(s: &str) -> TorusCurve {
    parse_torus_curve(s).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn q(c: &[i64]) -> Poly<Rationals> {
    Poly::from_ints(Rationals, c)
}

#[test]
fn valuation_examples() {
    let vm = valuation_matrix(&curve("t, (1+t)^2")).unwrap();
    assert_eq!(vm.basis, vec![q(&[0, 1]), q(&[1, 1])]);
    assert_eq!(vm.matrix, IntMatrix::from_rows(2, &[vec![1, 0], vec![0, 2]]));

    let vm = valuation_matrix(&curve("t")).unwrap();
    assert_eq!(vm.matrix, IntMatrix::from_rows(1, &[vec![1]]));

    let vm = valuation_matrix(&curve("5, 7")).unwrap();
    assert!(vm.basis.is_empty());
    assert_eq!((vm.matrix.rows(), vm.matrix.cols()), (2, 0));
}

#[test]
fn denominators_count_negatively() {
    let vm = valuation_matrix(&curve("t^2/(t-1)^3, 3*(t-1)/t")).unwrap();
    assert_eq!(vm.basis, vec![q(&[-1, 1]), q(&[0, 1])]);
    assert_eq!(vm.matrix, IntMatrix::from_rows(2, &[vec![-3, 2], vec![1, -1]]));
}

#[test]
fn freeness_examples() {
    for (s, want) in [
        ("t, (1+t)^2", true),
        ("t^2, t^3", false),
        ("t, t", false),
        ("3, t", false),
        ("t, 1+t", true),
        ("t^2 + 1", true),
        ("t^2+1, t^2+2, (t^2+1)*(t^2+2)^3", false),
    ] {
        let c = curve(s);
        assert_eq!(is_free_rank(&c).unwrap(), want, "rank test on {s}");
        assert_eq!(is_free_alternant(&c).unwrap(), want, "alternant test on {s}");
    }
}

#[test]
fn golden_report() {
    let r = analyze(&curve("t, (1+t)^2")).unwrap();
    assert_eq!(r.divisors.as_slice(), big(&[1, 2]).as_slice());
    assert!(r.free);
    assert_eq!(r.index, Index::Finite(BigInt::from(2)));
    assert_eq!(r.exponent, Some(BigInt::from(2)));
    assert_eq!(r.obstruction_primes, big(&[2]));
    assert!(!r.kummer_generic);
    assert_eq!(stabilizing_level(&r).unwrap(), BigInt::from(2));
    assert!(!is_n_kummer_generic(&r, 2).unwrap());
    assert!(is_n_kummer_generic(&r, 3).unwrap());
    assert!(is_n_kummer_generic(&r, 1).unwrap());
    assert!(is_n_kummer_generic(&r, 0).is_err());
}

#[test]
fn whole_torus_is_kummer_generic() {
    let r = analyze(&curve("t")).unwrap();
    assert_eq!(r.divisors.as_slice(), big(&[1]).as_slice());
    assert!(r.kummer_generic && is_kummer_generic(&r));
    assert!(is_kummer_generic(&analyze(&curve("t, 1+t")).unwrap()));
}

#[test]
fn diagonal_is_not_free() {
    let r = analyze(&curve("t, t")).unwrap();
    assert_eq!(r.divisors.as_slice(), big(&[1, 0]).as_slice());
    assert!(!r.free && !r.kummer_generic && !is_kummer_generic(&r));
    assert_eq!(r.index, Index::Infinite);
    assert!(stabilizing_level(&r).is_err());
    for n in 1..12 {
        assert_eq!(component_count(&r, n).unwrap(), BigInt::from(n));
    }
}

#[test]
fn component_count_examples() {
    let r = analyze(&curve("t, (1+t)^2")).unwrap();
    assert_eq!(component_count(&r, 2).unwrap(), BigInt::from(2));
    assert_eq!(component_count(&r, 3).unwrap(), BigInt::one());
    assert!(component_count(&r, 0).is_err());
}

#[test]
fn stabilizing_examples() {
    let r = analyze(&curve("t, 1+t")).unwrap();
    assert_eq!(stabilizing_level(&r).unwrap(), BigInt::one());
    assert!(verify_stabilizing(&r, 1, 30).unwrap());

    // M = [[1,0],[3,6]]: entries have gcd 1 and det 6, so divisors (1,6)
    let c = curve("t, (1+t)^6*t^3");
    let r = analyze(&c).unwrap();
    assert_eq!(r.divisors.as_slice(), big(&[1, 6]).as_slice());
    assert_eq!(stabilizing_level(&r).unwrap(), BigInt::from(6));
    assert!(verify_stabilizing(&r, 6, 20).unwrap());
    assert!((1..6).all(|m| !verify_stabilizing(&r, m, 20).unwrap()));
    for n in 1..=12 {
        assert_eq!(oracle_component_count(&c, n).unwrap(), component_count(&r, n).unwrap());
    }

    let r = analyze(&curve("t, (1+t)^2")).unwrap();
    assert!(verify_stabilizing(&r, 2, 20).unwrap());
    assert!(!verify_stabilizing(&r, 1, 2).unwrap());
    assert!(verify_stabilizing(&r, 0, 2).is_err());
}

#[test]
fn nth_power_oracle_examples() {
    let sq = curve("(1+t)^2").coords()[0].clone();
    assert!(oracle_is_nth_power(&sq, 2).unwrap());
    let f = curve("t*(1+t)^2").coords()[0].clone();
    assert!(!oracle_is_nth_power(&f, 2).unwrap());
    let c = curve("17/3").coords()[0].clone();
    assert!(oracle_is_nth_power(&c, 5).unwrap());
    assert!(oracle_is_nth_power(&QRatFunc::zero(Rationals), 2).is_err());
    assert!(oracle_is_nth_power(&sq, 0).is_err());
}

#[test]
fn component_oracle_examples() {
    assert_eq!(oracle_component_count(&curve("t, (1+t)^2"), 2).unwrap(), BigInt::from(2));
    assert_eq!(oracle_component_count(&curve("t, 1+t"), 5).unwrap(), BigInt::one());
    assert_eq!(oracle_component_count(&curve("t, t"), 4).unwrap(), BigInt::from(4));
    assert!(matches!(
        oracle_component_count_capped(&curve("t, t, t"), 10, 999),
        Err(crate::Error::Resource { .. })
    ));
}

#[test]
fn modular_and_exact_oracles_agree() {
    for (s, ns) in [
        ("t, (1+t)^2", 2..=6),
        ("t^2 - 2, (t^2 - 2)^3*(t + 1), 1/(t + 1)^2", 2..=4),
        ("(t^2 + 1)^2/t^3, 2*(t - 1/2)^4", 2..=6),
        ("7, t^3", 2..=6),
    ] {
        let c = curve(s);
        for n in ns {
            assert_eq!(
                oracle_component_count(&c, n).unwrap(),
                oracle_component_count_exact(&c, n, 10_000).unwrap(),
                "{s}, n = {n}"
            );
        }
    }
}

#[test]
fn points_are_non_free_with_full_counts() {
    let c = curve("5, 7");
    let r = analyze(&c).unwrap();
    assert_eq!(r.divisors, ElementaryDivisors(big(&[0, 0])));
    assert!(!r.free);
    assert_eq!(component_count(&r, 3).unwrap(), BigInt::from(9));
    assert_eq!(oracle_component_count(&c, 3).unwrap(), BigInt::from(9));
}

#[test]
fn reparametrization_invariance() {
    let c = curve("t^3/(t+2)^2, (t^2+1)*(t-1)^4");
    let base = analyze(&c).unwrap();
    let t = QRatFunc::var(Rationals);
    let shift = t.add(&QRatFunc::constant(Rationals, Rationals.from_int(3)));
    let scale = t.scale(&Rationals.from_int(-2));
    for g in [shift, scale] {
        assert_eq!(analyze(&c.reparametrize(&g).unwrap()).unwrap(), base);
    }
    let inv = t.inv().unwrap();
    assert_eq!(analyze(&c.reparametrize(&inv).unwrap()).unwrap().divisors, base.divisors);
}

#[test]
fn scalar_and_automorphism_invariance() {
    let c = curve("t*(t+1)^2, (t-3)^3/t");
    let base = analyze(&c).unwrap();
    let scaled = curve("-7*t*(t+1)^2, (t-3)^3/(5*t)");
    assert_eq!(analyze(&scaled).unwrap(), base);
    let moved = c.transform(&[vec![2, 1], vec![1, 1]]).unwrap();
    let r = analyze(&moved).unwrap();
    assert_eq!((r.divisors, r.free, r.kummer_generic), (base.divisors, base.free, base.kummer_generic));
}

use crate::algebra::Field;
