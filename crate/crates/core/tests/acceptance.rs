//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always visible; exits nonzero if any fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kummer_core::algebra::{FpRatFunc, Poly, PrimeField, QRatFunc, RatFunc, Rationals};
use kummer_core::artin_schreier::{
    as_component_count, is_as_generic_level1, is_wp_member, wp, wp_reduce, AdditiveCurve,
};
use kummer_core::cli::random_fp_ratfunc;
use kummer_core::corpus::{engineered_curves, random_corpus};
use kummer_core::expr::{parse_additive_curve, parse_torus_curve};
use kummer_core::family::{degeneration_candidates, scan, FamilySpec};
use kummer_core::kummer::{
    analyze, component_count, is_free_alternant, is_free_rank, is_n_kummer_generic,
    oracle_component_count, oracle_component_count_capped, stabilizing_level, verify_stabilizing,
    Index, TorusCurve,
};

const SEED: u64 = 20_240_601;
const CORPUS: usize = 200;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<String, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(format!("{took:.2?}"))
}

fn curve(s: &str) -> TorusCurve {
    parse_torus_curve(s).unwrap()
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

fn golden() -> Outcome {
    let start = Instant::now();
    let x = curve("t, (1+t)^2");
    let r = analyze(&x).map_err(|e| e.to_string())?;
    ensure(r.free, || "not free".into())?;
    ensure(r.divisors.as_slice() == [int(1), int(2)], || format!("divisors {}", r.divisors))?;
    ensure(r.index == Index::Finite(int(2)), || format!("index {}", r.index))?;
    ensure(!r.kummer_generic, || "reported Kummer-generic".into())?;
    ensure(!is_n_kummer_generic(&r, 2).unwrap(), || "reported 2-Kummer-generic".into())?;
    ensure(component_count(&r, 2).unwrap() == int(2), || "component_count(2) != 2".into())?;
    ensure(oracle_component_count(&x, 2).unwrap() == int(2), || "oracle count(2) != 2".into())?;
    for l in [3, 5, 7] {
        ensure(is_n_kummer_generic(&r, l).unwrap(), || format!("not {l}-Kummer-generic"))?;
    }
    ensure(stabilizing_level(&r).unwrap() == int(2), || "stabilizing level != 2".into())?;

    // [2]⁻¹X = {y² = (1+x²)²} splits as y = ±(1+x²): both branches square into X.
    let s2 = QRatFunc::from_poly(Poly::from_ints(Rationals, &[0, 0, 1]));
    let pulled = x.reparametrize(&s2).map_err(|e| e.to_string())?;
    for branch in ["s, 1 + s^2", "s, -(1 + s^2)"] {
        let y = curve(&branch.replace('s', "t"));
        let squared: Vec<_> = y.coords().iter().map(|c| c.pow(2).unwrap()).collect();
        ensure(squared == pulled.coords(), || format!("({branch}) does not map onto X"))?;
    }
    let component = analyze(&curve("t, 1 + t^2")).map_err(|e| e.to_string())?;
    ensure(component.kummer_generic, || "component (s, 1+s^2) not Kummer-generic".into())?;
    within(Duration::from_secs(1), start)
}

fn oracle_equivalence(corpus: &[TorusCurve]) -> Outcome {
    let start = Instant::now();
    let mut compared = 0;
    for x in corpus {
        let r = analyze(x).map_err(|e| e.to_string())?;
        for n in 2..=10 {
            let brute = oracle_component_count(x, n).map_err(|e| e.to_string())?;
            let snf = component_count(&r, n).unwrap();
            ensure(brute == snf, || format!("({x}) n = {n}: oracle {brute}, lattice {snf}"))?;
            compared += 1;
        }
    }
    Ok(format!("{} curves, {compared} comparisons, {}", corpus.len(), within(Duration::from_secs(60), start)?))
}

fn freeness(corpus: &[TorusCurve]) -> Outcome {
    let mut all = corpus.to_vec();
    all.extend(engineered_curves());
    all.push(curve("t^2, t^3"));
    all.push(curve("t, t"));
    all.push(curve("2, 3"));
    let mut free = 0;
    for x in &all {
        let a = is_free_rank(x).map_err(|e| e.to_string())?;
        let b = is_free_alternant(x).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("({x}): rank says {a}, alternant says {b}"))?;
        free += a as usize;
    }
    ensure(!is_free_rank(&curve("t^2, t^3")).unwrap(), || "(t^2, t^3) reported free".into())?;
    ensure(!is_free_rank(&curve("t, t")).unwrap(), || "(t, t) reported free".into())?;
    ensure(!is_free_rank(&curve("2, 3")).unwrap(), || "constants reported free".into())?;
    Ok(format!("{} curves, {free} free", all.len()))
}

fn boundedness(corpus: &[TorusCurve]) -> Outcome {
    let mut free = 0;
    for x in corpus {
        let r = analyze(x).map_err(|e| e.to_string())?;
        let counts: Vec<BigInt> = (1..=100).map(|n| component_count(&r, n).unwrap()).collect();
        match &r.index {
            Index::Finite(idx) => {
                free += 1;
                let max = counts.iter().max().unwrap();
                ensure(max == idx, || format!("({x}): max count {max}, index {idx}"))?;
                let dk = r.exponent.as_ref().unwrap().to_usize().unwrap();
                ensure(dk <= 100 && &counts[dk - 1] == idx, || {
                    format!("({x}): index {idx} not attained at n = d_k = {dk}")
                })?;
            }
            Index::Infinite => {
                for (n, c) in (1..=100).zip(&counts) {
                    ensure(*c >= int(n), || format!("({x}): non-free but c({n}) = {c}"))?;
                }
            }
        }
    }
    Ok(format!("{free} free, {} non-free", corpus.len() - free))
}

fn stabilizing(corpus: &[TorusCurve]) -> Outcome {
    let mut free = 0;
    let mut oracle_checks = 0;
    let mut levels = std::collections::BTreeSet::new();
    for x in corpus {
        let r = analyze(x).map_err(|e| e.to_string())?;
        if !r.free {
            continue;
        }
        free += 1;
        let m = stabilizing_level(&r).unwrap().to_u64().unwrap();
        levels.insert(m);
        ensure(verify_stabilizing(&r, m, 20).unwrap(), || format!("({x}): level {m} fails"))?;
        for smaller in 1..m {
            ensure(!verify_stabilizing(&r, smaller, 20).unwrap(), || {
                format!("({x}): smaller level {smaller} also passes (d_k = {m})")
            })?;
        }
        let base = component_count(&r, m).unwrap();
        for n in 1..=20u64 {
            let nm = n * m;
            if nm > 1000 {
                break;
            }
            match oracle_component_count_capped(x, nm, 20_000) {
                Ok(c) => {
                    ensure(c == base, || format!("({x}): oracle c({nm}) = {c}, c({m}) = {base}"))?;
                    oracle_checks += 1;
                }
                Err(kummer_core::Error::Resource { .. }) => break,
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(format!("{free} free curves, levels {levels:?}, {oracle_checks} oracle checks"))
}

fn random_additive(rng: &mut ChaCha8Rng, field: PrimeField, k: usize) -> AdditiveCurve {
    // Mix reduced functions, ℘-images and constants so the membership set is not always trivial.
    let p = field.modulus();
    let pieces: Vec<FpRatFunc> = (0..3)
        .map(|_| match rng.gen_range(0..3) {
            0 => random_fp_ratfunc(rng, field),
            1 => wp(&random_fp_ratfunc(rng, field)),
            _ => RatFunc::constant(field, rng.gen_range(0..p)),
        })
        .collect();
    let coords = (0..k)
        .map(|_| {
            pieces.iter().fold(FpRatFunc::zero(field), |acc, f| {
                acc.add(&f.scale(&rng.gen_range(0..p)))
            })
        })
        .collect();
    AdditiveCurve::new(field, coords).unwrap()
}

fn artin_schreier() -> Outcome {
    let x = parse_additive_curve("t, t^2 + t", 2).unwrap();
    ensure(as_component_count(&x).unwrap() == int(2), || "(t, t^2+t) count != 2".into())?;
    let y = parse_additive_curve("t, t^3", 2).unwrap();
    ensure(as_component_count(&y).unwrap() == BigInt::one(), || "(t, t^3) count != 1".into())?;
    ensure(is_as_generic_level1(&y).unwrap(), || "(t, t^3) not as-generic".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut certificates = 0;
    for p in [2, 3, 5] {
        let field = PrimeField::new(p).unwrap();
        for _ in 0..200 {
            let f = random_fp_ratfunc(&mut rng, field);
            let w = wp_reduce(&f).map_err(|e| e.to_string())?;
            ensure(wp(&w.g).add(&w.r) == f, || format!("certificate fails for {} over F_{p}", f.display_in("t")))?;
            certificates += 1;
        }
    }

    let mut subspaces = 0;
    let mut nontrivial = 0;
    for (p, k) in [(2u64, 1usize), (2, 3), (2, 5), (2, 7), (3, 2), (3, 4), (3, 5), (5, 2), (5, 3), (7, 2)] {
        let field = PrimeField::new(p).unwrap();
        for _ in 0..2 {
            let x = random_additive(&mut rng, field, k);
            let total = p.pow(k as u32) as usize;
            let vec_of = |mut i: usize| {
                (0..k)
                    .map(|_| {
                        let d = (i as u64) % p;
                        i /= p as usize;
                        d
                    })
                    .collect::<Vec<u64>>()
            };
            let index_of = |a: &[u64]| a.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize);
            let member: Vec<bool> = (0..total)
                .map(|i| {
                    let a = vec_of(i);
                    let f = x.coords().iter().zip(&a).fold(FpRatFunc::zero(field), |acc, (b, &ai)| {
                        acc.add(&b.scale(&ai))
                    });
                    is_wp_member(&f).unwrap()
                })
                .collect();
            let members: Vec<usize> = (0..total).filter(|&i| member[i]).collect();
            for &i in &members {
                let a = vec_of(i);
                for &j in &members {
                    let b = vec_of(j);
                    let sum: Vec<u64> = a.iter().zip(&b).map(|(x, y)| (x + y) % p).collect();
                    ensure(member[index_of(&sum)], || format!("not closed under addition over F_{p}, k = {k}"))?;
                }
                for s in 0..p {
                    let sa: Vec<u64> = a.iter().map(|x| x * s % p).collect();
                    ensure(member[index_of(&sa)], || format!("not closed under scaling over F_{p}, k = {k}"))?;
                }
            }
            let count = as_component_count(&x).map_err(|e| e.to_string())?;
            ensure(count == BigInt::from(members.len()), || {
                format!("count {count} vs {} members over F_{p}, k = {k}", members.len())
            })?;
            subspaces += 1;
            nontrivial += (members.len() > 1) as usize;
        }
    }
    Ok(format!("{certificates} certificates, {subspaces} exhaustive subspace checks ({nontrivial} nontrivial)"))
}

fn family() -> Outcome {
    let start = Instant::now();
    let f = FamilySpec::parse("t, (1+t)^2 + c*t", "c").map_err(|e| e.to_string())?;
    let values: Vec<_> = (-6..=6).map(|v| BigRational::from_integer(v.into())).collect();
    let s = scan(&f, &values);
    let keys: Vec<&String> = s.strata.keys().collect();
    ensure(keys == ["free:(1,1)", "free:(1,2)"], || format!("signatures {keys:?}"))?;
    let special: Vec<i64> = s.strata["free:(1,2)"].iter().map(|v| v.to_integer().to_i64().unwrap()).collect();
    ensure(special == [-4, 0], || format!("(1,2) at {special:?}"))?;
    ensure(s.strata["free:(1,1)"].len() == 11, || "(1,1) stratum size".into())?;
    let target = Poly::from_ints(Rationals, &[0, 4, 1]);
    let cands = degeneration_candidates(&f).map_err(|e| e.to_string())?;
    ensure(cands.iter().any(|c| c.monic() == target), || "c^2 + 4c missing from candidates".into())?;
    ensure(s.max_index == Some(int(2)), || format!("max index {:?}", s.max_index))?;
    within(Duration::from_secs(5), start)
}

fn main() {
    let corpus = random_corpus(SEED, CORPUS);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("golden example (t, (1+t)^2)", Box::new(golden)),
        ("oracle equivalence on random corpus, n = 2..10", Box::new(|| oracle_equivalence(&corpus))),
        ("freeness: rank test agrees with alternant test", Box::new(|| freeness(&corpus))),
        ("uniform boundedness of component counts, n <= 100", Box::new(|| boundedness(&corpus))),
        ("stabilizing level minimality", Box::new(|| stabilizing(&corpus))),
        ("Artin-Schreier examples, certificates, subspaces", Box::new(artin_schreier)),
        ("family scan (t, (1+t)^2 + c*t), c = -6..6", Box::new(family)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name} [{detail}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
