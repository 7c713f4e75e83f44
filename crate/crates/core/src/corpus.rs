//! Seeded random curves for cross-checks (the CLI `selftest` and the test suites).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Poly, QRatFunc, RatFunc, Rationals};
use crate::expr::parse_torus_curve;
use crate::kummer::TorusCurve;

/// Nonzero polynomial of degree at most 3 with coefficients in [-5, 5].
pub fn random_poly(rng: &mut impl Rng) -> Poly<Rationals> {
    loop {
        let deg = rng.gen_range(0..=3);
        let c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-5..=5)).collect();
        let p = Poly::from_ints(Rationals, &c);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A curve with `k ∈ {1,2,3}`. Coordinates are a constant times one or two
/// factors drawn from a small per-curve pool, with exponents in [-3, 3], so
/// coordinates often share places.
pub fn random_curve(rng: &mut impl Rng) -> TorusCurve {
    let k = rng.gen_range(1..=3);
    let pool: Vec<_> = (0..3).map(|_| random_poly(rng)).collect();
    let coords = (0..k)
        .map(|_| {
            let mut scalar = 0;
            while scalar == 0 {
                scalar = rng.gen_range(-5..=5);
            }
            let mut f = QRatFunc::from_poly(Poly::from_ints(Rationals, &[scalar]));
            for _ in 0..rng.gen_range(1..=2) {
                let base = RatFunc::from_poly(pool[rng.gen_range(0..pool.len())].clone());
                let e = rng.gen_range(-3..=3);
                f = f.mul(&base.pow(e).expect("nonzero base"));
            }
            f
        })
        .collect();
    TorusCurve::new(coords).expect("coordinates are nonzero")
}

pub fn random_corpus(seed: u64, size: usize) -> Vec<TorusCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size).map(|_| random_curve(&mut rng)).collect()
}

/// Hand-picked edge cases: shared places, repeated coordinates, points.
pub fn engineered_curves() -> Vec<TorusCurve> {
    [
        "t^2, t^3",
        "t, t",
        "3, -2",
        "5",
        "t",
        "t, (1+t)^2",
        "t, (1+t)^6*t^3",
        "t^2 - 1, (t - 1)/(t + 1)",
        "t, 1 + t, t*(1 + t)",
        "(t^2 + 1)^3, t^4",
    ]
    .iter()
    .map(|s| parse_torus_curve(s).expect("engineered curve parses"))
    .collect()
}
