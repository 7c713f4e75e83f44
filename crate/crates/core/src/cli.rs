//! The `kummer` command line. [`run`] returns the process exit code:
//! 0 success, 1 usage or parse error, 2 domain error, 3 resource cap exceeded.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::factor_fp::DEFAULT_SEED;
use crate::algebra::{FpRatFunc, Poly, PrimeField, QRatFunc, RatFunc, Rationals};
use crate::artin_schreier::{as_component_count_capped, is_free_additive, wp, wp_reduce_seeded};
use crate::corpus::{engineered_curves, random_corpus};
use crate::expr::{parse_additive_curve, parse_torus_curve};
use crate::family::{degeneration_candidates, parse_values, scan, FamilySpec};
use crate::kummer::{
    analyze, analyze_with_valuation, component_count, is_free_alternant, is_free_rank,
    oracle_component_count_capped, stabilizing_level, verify_stabilizing, TorusCurve,
};
use crate::lattice::{enumerate_kernel_mod_n, DEFAULT_KERNEL_CAP};
use crate::wire::{AdditiveDoc, AnalyzeDoc, ScanDoc, WireInt, VERSION};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "kummer", version, about = "Component counts of isogeny pullbacks of rational curves")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized factorization and the selftest corpus.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Upper bound on exhaustive enumerations.
    #[arg(long, global = true, default_value_t = DEFAULT_KERNEL_CAP)]
    cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Valuation matrix, elementary divisors and derived invariants of a curve in G_m^k.
    Analyze {
        #[arg(long)]
        curve: String,
        /// Component counts for an inclusive range `a..b`.
        #[arg(long)]
        counts: Option<String>,
        /// Check c(m·n) = c(m) at the stabilizing level m for n up to this bound.
        #[arg(long, value_name = "N")]
        verify_stabilizing: Option<u64>,
        /// Cross-check the counts against brute-force enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Characters a mod n with ∏ b_i^a_i an n-th power, one per component of [n]⁻¹X.
    Components {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        n: u64,
    },
    /// Brute-force component count of [n]⁻¹X, compared with the lattice count.
    Oracle {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        n: u64,
    },
    /// Analyse a one-parameter family at sampled parameter values.
    Scan {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "c")]
        param: String,
        /// `a..b` or a comma-separated list of rationals.
        #[arg(long)]
        values: String,
    },
    /// Artin–Schreier analogue for a curve in G_a^k over F_p.
    As {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        curve: String,
    },
    /// Run the randomized invariant corpus.
    Selftest {
        #[arg(long, default_value_t = 40)]
        size: usize,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 1,
        Error::Domain(_) => 2,
        Error::Resource { .. } => 3,
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Analyze { curve, counts, verify_stabilizing, oracle } => {
            cmd_analyze(cli, out, curve, counts.as_deref(), *verify_stabilizing, *oracle)
        }
        Command::Components { curve, n } => cmd_components(cli, out, curve, *n),
        Command::Oracle { curve, n } => cmd_oracle(cli, out, curve, *n),
        Command::Scan { family, param, values } => cmd_scan(cli, out, family, param, values),
        Command::As { p, curve } => cmd_as(cli, out, *p, curve),
        Command::Selftest { size } => cmd_selftest(cli, out, *size),
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, column: 1, message: msg.into() }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, doc: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(doc).map_err(|e| Error::domain(e.to_string()))?;
    writeln!(out, "{s}").map_err(|e| Error::domain(e.to_string()))
}

macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        writeln!($out, $($arg)*).map_err(|e| Error::domain(e.to_string()))?
    };
}

fn positive(n: u64, what: &str) -> Result<u64> {
    if n == 0 {
        return Err(usage(format!("{what} must be at least 1")));
    }
    Ok(n)
}

fn parse_range(s: &str) -> Result<Vec<u64>> {
    let bad = || usage(format!("expected a range a..b with 1 ≤ a ≤ b, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn cmd_analyze(
    cli: &Cli,
    out: &mut dyn Write,
    text: &str,
    counts: Option<&str>,
    verify: Option<u64>,
    oracle: bool,
) -> Result<i32> {
    let curve = parse_torus_curve(text)?;
    let ns = counts.map(parse_range).transpose()?.unwrap_or_default();
    let (vm, r) = analyze_with_valuation(&curve)?;
    let component_counts = ns
        .iter()
        .map(|&n| Ok((n, component_count(&r, n)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let mut doc = AnalyzeDoc::new(&curve, &vm, &r, component_counts.clone());
    if oracle {
        let checked: Vec<u64> = if ns.is_empty() { (2..=6).collect() } else { ns.clone() };
        let mut agree = true;
        for n in checked {
            agree &= oracle_component_count_capped(&curve, n, cli.cap)? == component_count(&r, n)?;
        }
        doc.oracle_agreement = Some(agree);
    }
    if let Some(bound) = verify {
        let m = stabilizing_level(&r)?;
        let m = m
            .try_into()
            .map_err(|_| Error::domain("stabilizing level does not fit in 64 bits"))?;
        doc.stabilizing_verified = Some(verify_stabilizing(&r, m, positive(bound, "bound")?)?);
    }
    if cli.json {
        emit_json(out, &doc)?;
        return Ok(0);
    }
    say!(out, "curve: {curve}");
    let basis: Vec<String> = vm.basis.iter().map(|b| b.display_in("t").to_string()).collect();
    say!(out, "basis: [{}]", basis.join(", "));
    let rows: Vec<String> = vm
        .matrix
        .to_rows()
        .iter()
        .map(|row| format!("[{}]", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")))
        .collect();
    say!(out, "matrix: [{}]", rows.join(" "));
    say!(out, "divisors: {}", r.divisors);
    say!(out, "free: {}", r.free);
    say!(out, "index: {}", r.index);
    let opt = |v: &Option<BigInt>| v.as_ref().map_or("none".to_string(), ToString::to_string);
    say!(out, "exponent: {}", opt(&r.exponent));
    let primes: Vec<String> = r.obstruction_primes.iter().map(ToString::to_string).collect();
    say!(out, "obstruction primes: [{}]", primes.join(", "));
    say!(out, "kummer-generic: {}", r.kummer_generic);
    say!(out, "stabilizing level: {}", opt(&r.stabilizing_level));
    for (n, c) in &component_counts {
        say!(out, "components({n}): {c}");
    }
    if let Some(a) = doc.oracle_agreement {
        say!(out, "oracle agreement: {a}");
    }
    if let Some(v) = doc.stabilizing_verified {
        say!(out, "stabilizing verified: {v}");
    }
    Ok(0)
}

#[derive(Serialize)]
struct ComponentsDoc {
    version: u32,
    curve: String,
    n: u64,
    count: WireInt,
    characters: Vec<Vec<u64>>,
}

fn cmd_components(cli: &Cli, out: &mut dyn Write, text: &str, n: u64) -> Result<i32> {
    let curve = parse_torus_curve(text)?;
    let n = positive(n, "n")?;
    let (vm, r) = analyze_with_valuation(&curve)?;
    let characters = enumerate_kernel_mod_n(&vm.matrix, n, cli.cap)?;
    let doc = ComponentsDoc {
        version: VERSION,
        curve: curve.to_string(),
        n,
        count: component_count(&r, n)?.into(),
        characters,
    };
    if cli.json {
        emit_json(out, &doc)?;
        return Ok(0);
    }
    say!(out, "components of [{n}]^-1 X: {}", component_count(&r, n)?);
    for a in &doc.characters {
        let a: Vec<String> = a.iter().map(ToString::to_string).collect();
        say!(out, "  ({})", a.join(","));
    }
    Ok(0)
}

#[derive(Serialize)]
struct OracleDoc {
    version: u32,
    curve: String,
    n: u64,
    oracle_count: WireInt,
    lattice_count: WireInt,
    agreement: bool,
}

fn cmd_oracle(cli: &Cli, out: &mut dyn Write, text: &str, n: u64) -> Result<i32> {
    let curve = parse_torus_curve(text)?;
    let n = positive(n, "n")?;
    let brute = oracle_component_count_capped(&curve, n, cli.cap)?;
    let snf = component_count(&analyze(&curve)?, n)?;
    let agreement = brute == snf;
    if cli.json {
        emit_json(
            out,
            &OracleDoc {
                version: VERSION,
                curve: curve.to_string(),
                n,
                oracle_count: brute.into(),
                lattice_count: snf.into(),
                agreement,
            },
        )?;
        return Ok(0);
    }
    say!(out, "oracle count: {brute}");
    say!(out, "lattice count: {snf}");
    say!(out, "agreement: {agreement}");
    Ok(0)
}

fn cmd_scan(cli: &Cli, out: &mut dyn Write, text: &str, param: &str, values: &str) -> Result<i32> {
    if param == "t" || param.is_empty() || !param.chars().all(char::is_alphabetic) {
        return Err(usage(format!("invalid parameter name {param:?}")));
    }
    let family = FamilySpec::parse(text, param)?;
    let values = parse_values(values)
        .ok_or_else(|| usage(format!("cannot read parameter values {values:?}")))?;
    let result = scan(&family, &values);
    let candidates = degeneration_candidates(&family)?;
    let doc = ScanDoc::new(&family, &result, &candidates);
    if cli.json {
        emit_json(out, &doc)?;
        return Ok(0);
    }
    say!(out, "family: {family}");
    for row in &doc.rows {
        match (&row.signature, &row.error) {
            (Some(s), _) => say!(out, "{param} = {}: {s}", row.value),
            (None, Some(e)) => say!(out, "{param} = {}: error: {e}", row.value),
            _ => {}
        }
    }
    for (sig, vs) in &doc.strata {
        say!(out, "stratum {sig}: {{{}}}", vs.join(", "));
    }
    match &result.max_index {
        Some(m) => say!(out, "max index over free fibres: {m}"),
        None => say!(out, "max index over free fibres: none"),
    }
    let cands: Vec<String> = candidates.iter().map(|p| p.display_in(param).to_string()).collect();
    say!(out, "degeneration candidates: [{}]", cands.join("; "));
    Ok(0)
}

fn cmd_as(cli: &Cli, out: &mut dyn Write, p: u64, text: &str) -> Result<i32> {
    let x = parse_additive_curve(text, p)?;
    let reduced = x
        .coords()
        .iter()
        .map(|f| wp_reduce_seeded(f, cli.seed))
        .collect::<Result<Vec<_>>>()?;
    let count = as_component_count_capped(&x, cli.cap, cli.seed)?;
    let doc = AdditiveDoc {
        version: VERSION,
        curve: x
            .coords()
            .iter()
            .map(|c| c.display_in("t").to_string())
            .collect::<Vec<_>>()
            .join(", "),
        p,
        k: x.k(),
        reduced: reduced.iter().map(Into::into).collect(),
        free: is_free_additive(&x)?,
        as_generic: count == BigInt::from(1),
        component_count: count.into(),
    };
    if cli.json {
        emit_json(out, &doc)?;
        return Ok(0);
    }
    say!(out, "curve over F_{p}: {}", doc.curve);
    for (i, w) in doc.reduced.iter().enumerate() {
        say!(out, "b{} = wp({}) + {}", i + 1, w.g, w.r);
    }
    say!(out, "free: {}", doc.free);
    if let WireInt::Finite(c) = &doc.component_count {
        say!(out, "level-1 components: {c}");
    }
    say!(out, "as-generic: {}", doc.as_generic);
    Ok(0)
}

#[derive(Serialize)]
struct SelftestDoc {
    version: u32,
    seed: u64,
    curves: usize,
    checks: usize,
    failures: Vec<String>,
}

fn cmd_selftest(cli: &Cli, out: &mut dyn Write, size: usize) -> Result<i32> {
    let mut curves = random_corpus(cli.seed, size);
    curves.extend(engineered_curves());
    let mut checks = 0;
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: String| {
        checks += 1;
        if !ok {
            failures.push(what);
        }
    };
    let shift = QRatFunc::from_poly(Poly::from_ints(Rationals, &[1, 2]));
    for x in &curves {
        let r = analyze(x)?;
        for n in 2..=6 {
            let ok = match oracle_component_count_capped(x, n, cli.cap) {
                Ok(c) => c == component_count(&r, n)?,
                Err(Error::Resource { .. }) => continue,
                Err(e) => return Err(e),
            };
            check(ok, format!("oracle at n = {n} for ({x})"));
        }
        check(is_free_rank(x)? == is_free_alternant(x)?, format!("freeness tests for ({x})"));
        let moved: TorusCurve = x.reparametrize(&shift)?;
        check(analyze(&moved)? == r, format!("reparametrization of ({x})"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    for p in [2u64, 3, 5] {
        let field = PrimeField::new(p)?;
        for _ in 0..20 {
            let f = random_fp_ratfunc(&mut rng, field);
            let w = wp_reduce_seeded(&f, cli.seed)?;
            check(wp(&w.g).add(&w.r) == f, format!("certificate for {} over F_{p}", f.display_in("t")));
        }
    }
    let ok = failures.is_empty();
    if cli.json {
        emit_json(
            out,
            &SelftestDoc { version: VERSION, seed: cli.seed, curves: curves.len(), checks, failures },
        )?;
    } else {
        for f in &failures {
            say!(out, "FAIL {f}");
        }
        say!(out, "selftest: {} curves, {checks} checks, {} failed", curves.len(), failures.len());
    }
    Ok(if ok { 0 } else { 2 })
}

/// Random `a/b` over F_p with `deg a ≤ 6`, `deg b ≤ 4`.
pub fn random_fp_ratfunc(rng: &mut impl Rng, field: PrimeField) -> FpRatFunc {
    let p = field.modulus();
    let mut poly = |deg: usize| {
        let c: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
        Poly::from_coeffs(field, c)
    };
    let num = poly(6);
    loop {
        let den = poly(4);
        if !den.is_zero() {
            return RatFunc::new(num, den).expect("nonzero denominator");
        }
    }
}
