use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use ca_forge_core::discriminant::DiscriminantTable;
use ca_forge_core::dsub::{component_description, monomial_d_ideal, monomial_hd_ideal, verify_prop2, MonomialShape};
use ca_forge_core::exec::Exec;
use ca_forge_core::field::{parse_rational, Field, Fp, PrimeField, Rational};
use ca_forge_core::geometry::{tuple_ideal_generators, IndexTuple};
use ca_forge_core::groebner::{saturate, GroebnerBasis, MonomialOrder, DEFAULT_SPAIR_BUDGET};
use ca_forge_core::hasse::{d_power, d_total, hs_multi};
use ca_forge_core::poly::{parse_poly, parse_upoly, var_names, var_names_with_t, MPoly, UPoly, MAX_VARS};
use ca_forge_core::search::{
    bad_prime_scan, ca_check, consistency_triangle, fiber_scan, jc_lower_bound, mainprop_verify, search_counterexamples,
    tuple_regularity_sweep, SweepReport, SweepVerdict, TupleOutcome, DEFAULT_ENUMERATION_BUDGET,
};
use ca_forge_core::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Cli, Command, Common, HsKind, OrderArg};

pub const CACHE_ENV: &str = "CA_FORGE_CACHE";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(Error::Budget { .. }) => 3,
            CliError::Core(Error::Cache(_)) => 1,
            CliError::Core(_) => 2,
        }
    }

    pub fn status(&self) -> &'static str {
        match self.exit_code() {
            1 => "verification_failed",
            3 => "budget_exhausted",
            _ => "usage_error",
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    Budget,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Budget => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Failed => "verification_failed",
            Status::Budget => "budget_exhausted",
        }
    }
}

pub struct Outcome {
    pub report: Value,
    pub text: String,
    pub status: Status,
}

/// Resolved run configuration, echoed at the top of every output.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub field: String,
    pub spair_budget: u64,
    pub enumeration_budget: u64,
    pub workers: usize,
    pub seed: u64,
    pub cache: Option<String>,
    pub format: String,
    pub params: BTreeMap<String, String>,
}

impl RunConfig {
    pub fn header(&self) -> String {
        let mut s = format!("# ca-forge {}\n", env!("CARGO_PKG_VERSION"));
        let _ = writeln!(s, "# command: {}", self.command);
        let _ = writeln!(s, "# field: {}", self.field);
        let _ = writeln!(s, "# spair_budget: {}", self.spair_budget);
        let _ = writeln!(s, "# enumeration_budget: {}", self.enumeration_budget);
        let _ = writeln!(s, "# workers: {}", self.workers);
        let _ = writeln!(s, "# seed: {}", self.seed);
        let _ = writeln!(s, "# cache: {}", self.cache.as_deref().unwrap_or("none"));
        for (k, v) in &self.params {
            let _ = writeln!(s, "# {k}: {v}");
        }
        s
    }
}

#[derive(Clone, Debug)]
pub enum FieldSel {
    Rationals,
    Prime(PrimeField),
}

impl FieldSel {
    fn label(&self) -> String {
        match self {
            FieldSel::Rationals => "QQ".into(),
            FieldSel::Prime(f) => format!("GF({})", f.modulus()),
        }
    }
}

macro_rules! over_field {
    ($sel:expr, |$ctx:ident : $K:ident| $body:expr) => {
        match $sel {
            FieldSel::Rationals => {
                type $K = Rational;
                let $ctx = &();
                $body
            }
            FieldSel::Prime(pf) => {
                type $K = Fp;
                let $ctx = pf;
                $body
            }
        }
    };
}

fn resolve_field(common: &Common) -> CliResult<FieldSel> {
    let prime = |p: u32| PrimeField::new(p).map(FieldSel::Prime).map_err(CliError::Core);
    let Some(text) = common.field.as_deref() else {
        return match common.p {
            Some(p) => prime(p),
            None => Ok(FieldSel::Rationals),
        };
    };
    let t = text.trim().to_ascii_lowercase();
    match t.as_str() {
        "qq" | "q" | "rationals" => {
            if common.p.is_some() {
                return usage("--p conflicts with --field qq");
            }
            Ok(FieldSel::Rationals)
        }
        "gf" | "fp" => match common.p {
            Some(p) => prime(p),
            None => usage("--field gf needs --p"),
        },
        _ => {
            let inner = t.strip_prefix("gf(").and_then(|r| r.strip_suffix(')'));
            let Some(p) = inner.and_then(|r| r.trim().parse::<u32>().ok()) else {
                return usage(format!("unknown field `{text}`; use qq, gf or gf(p)"));
            };
            if common.p.is_some_and(|q| q != p) {
                return usage("--p disagrees with --field");
            }
            prime(p)
        }
    }
}

fn require_rationals(common: &Common, what: &str) -> CliResult<()> {
    if common.field.is_some() || common.p.is_some() {
        return usage(format!("{what} works over QQ only"));
    }
    Ok(())
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> CliResult<Vec<T>> {
    text.split(',')
        .map(|s| s.trim().parse::<T>().map_err(|_| CliError::Usage(format!("bad {what} entry `{}`", s.trim()))))
        .collect()
}

/// Largest `k` such that `x<k>` appears in any of the texts.
fn infer_nvars(texts: &[&str]) -> usize {
    let mut best = 1;
    for t in texts {
        let b = t.as_bytes();
        for (i, &c) in b.iter().enumerate() {
            if c == b'x' && (i == 0 || !b[i - 1].is_ascii_alphanumeric()) {
                let digits: String = b[i + 1..].iter().take_while(|d| d.is_ascii_digit()).map(|&d| d as char).collect();
                if let Ok(k) = digits.parse::<usize>() {
                    best = best.max(k);
                }
            }
        }
    }
    best
}

fn parse_alphas<K: Field>(text: &str, ctx: &K::Ctx) -> CliResult<Vec<K>> {
    text.split(',')
        .map(|s| {
            let r = parse_rational(s.trim())?;
            K::from_ratio(ctx, r.numer(), r.denom())
                .ok_or_else(|| CliError::Usage(format!("alpha `{}` is not defined in the field", s.trim())))
        })
        .collect()
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn strings<K: Field>(ps: &[MPoly<K>], names: &[String]) -> Vec<String> {
    ps.iter().map(|p| p.to_string_with(names)).collect()
}

pub struct Prepared {
    pub config: RunConfig,
    field: Option<FieldSel>,
    exec: Exec,
    cache: Option<PathBuf>,
}

pub fn prepare(cli: &Cli) -> CliResult<Prepared> {
    let c = &cli.common;
    let mut params = BTreeMap::new();
    let mut put = |k: &str, v: String| {
        params.insert(k.to_string(), v);
    };
    let mut field = None;
    let command = match &cli.command {
        Command::Hs(a) => {
            field = Some(resolve_field(c)?);
            if let Some(u) = &a.uni {
                put("uni", u.clone());
            }
            if let Some(p) = &a.poly {
                put("poly", p.clone());
            }
            if a.uni.is_none() && a.poly.is_none() {
                return usage("hs needs --uni or --poly");
            }
            if let Some(n) = a.n {
                put("n", n.to_string());
            }
            put("i", a.i.to_string());
            put("kind", format!("{:?}", a.kind).to_lowercase());
            "hs"
        }
        Command::Disc(a) => {
            require_rationals(c, "disc")?;
            put("n", a.n.to_string());
            if let Some(i) = a.i {
                put("i", i.to_string());
            }
            "disc"
        }
        Command::Dsub(a) => {
            require_rationals(c, "dsub")?;
            put("shape", a.shape.clone());
            put("level", a.level.to_string());
            put("verify", a.verify.to_string());
            put("hd", a.hd.to_string());
            "dsub"
        }
        Command::Geom(a) => {
            field = Some(resolve_field(c)?);
            put("n", a.n.to_string());
            put("tuple", a.tuple.clone());
            put("deformed", a.deformed.to_string());
            "geom"
        }
        Command::Gb(a) => {
            field = Some(resolve_field(c)?);
            put("polys", a.polys.clone());
            if let Some(n) = a.n {
                put("n", n.to_string());
            }
            if let Some(s) = &a.saturate {
                put("saturate", s.clone());
            }
            put("order", format!("{:?}", a.order).to_lowercase());
            "gb"
        }
        Command::CaCheck(a) => {
            field = Some(resolve_field(c)?);
            if let Some(f) = &a.f {
                put("f", f.clone());
            }
            if let Some(r) = a.random {
                put("random", r.to_string());
            }
            if let Some(n) = a.n {
                put("n", n.to_string());
            }
            "ca-check"
        }
        Command::Search(a) => {
            put("n", a.n.to_string());
            put("triangle", a.triangle.to_string());
            "search"
        }
        Command::Badprimes(a) => {
            put("n", a.n.to_string());
            "badprimes"
        }
        Command::Regseq(a) => {
            field = Some(resolve_field(c)?);
            put("n", a.n.to_string());
            put("level", a.level.unwrap_or(a.n.saturating_sub(1)).to_string());
            "regseq"
        }
        Command::Mainprop(a) => {
            field = Some(resolve_field(c)?);
            put("n", a.n.to_string());
            "mainprop"
        }
        Command::Fibers(a) => {
            field = Some(resolve_field(c)?);
            put("n", a.n.to_string());
            put("tuple", a.tuple.clone().unwrap_or_else(|| "all".into()));
            put("alphas", a.alphas.clone());
            "fibers"
        }
        Command::Jc(a) => {
            field = Some(resolve_field(c)?);
            put("n", a.n.to_string());
            put("level", a.level.unwrap_or(a.n.saturating_sub(1)).to_string());
            "jc"
        }
    };
    let field_label = match &cli.command {
        Command::Search(_) | Command::Badprimes(_) => {
            if c.field.is_some() {
                return usage("the scan field is fixed by --p");
            }
            let Some(p) = c.p else {
                return usage(format!("{command} needs --p"));
            };
            if matches!(cli.command, Command::Search(_)) {
                PrimeField::new(p)?;
                format!("GF({p})")
            } else {
                format!("GF(p), p <= {p}")
            }
        }
        _ => field.as_ref().map(FieldSel::label).unwrap_or_else(|| "QQ".into()),
    };
    let cache = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from);
    let config = RunConfig {
        command: command.into(),
        field: field_label,
        spair_budget: c.budget.unwrap_or(DEFAULT_SPAIR_BUDGET),
        enumeration_budget: c.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET),
        workers: c.workers,
        seed: c.seed,
        cache: cache.as_ref().map(|p| p.display().to_string()),
        format: if c.json { "json" } else { "text" }.into(),
        params,
    };
    Ok(Prepared { config, field, exec: Exec::with_workers(c.workers), cache })
}

pub fn execute(cli: &Cli, prep: &Prepared) -> CliResult<Outcome> {
    let cfg = &prep.config;
    let field = prep.field.as_ref().unwrap_or(&FieldSel::Rationals);
    let exec = prep.exec;
    let cache = prep.cache.as_deref();
    let sb = cfg.spair_budget;
    let eb = cfg.enumeration_budget;
    match &cli.command {
        Command::Hs(a) => over_field!(field, |ctx: K| run_hs::<K>(a, ctx)),
        Command::Disc(a) => {
            let table = DiscriminantTable::load_or_build(a.n, cache)?;
            let records: Vec<_> = table.records().into_iter().filter(|r| a.i.is_none_or(|i| r.i == i)).collect();
            if records.is_empty() {
                return usage(format!("no discriminant with i = {} for n = {}", a.i.unwrap_or(0), a.n));
            }
            let mut text = String::new();
            for r in &records {
                let _ = writeln!(text, "disc^{}_{}  weights {:?}  weighted degree {}", r.i, r.n, r.weights, r.weighted_degree);
                let _ = writeln!(text, "  poly    = {}", r.poly);
                let _ = writeln!(text, "  reduced = {}", r.reduced_poly);
            }
            Ok(Outcome { report: json!({ "n": a.n, "digest": table.digest(), "entries": records }), text, status: Status::Ok })
        }
        Command::Dsub(a) => {
            let shape = MonomialShape::new(parse_list(&a.shape, "shape")?)?;
            if a.verify {
                let r = verify_prop2(&shape, a.level, sb, exec)?;
                let mut text = String::new();
                let _ = writeln!(text, "shape {shape}, level {}", a.level);
                for g in &r.generators {
                    let _ = writeln!(text, "  generator {g}");
                }
                for comp in &r.components {
                    let _ = writeln!(text, "  component V{}  multiplicity {}", ideal_label(&comp.indices), comp.multiplicity);
                }
                let failed = r.certificates.iter().filter(|c| !c.holds).count();
                let _ = writeln!(text, "certificates: {} checked, {failed} failed", r.certificates.len());
                let _ = writeln!(text, "verified: {}", r.verified);
                let status = if r.verified { Status::Ok } else { Status::Failed };
                return Ok(Outcome { report: to_value(&r), text, status });
            }
            if a.level == 0 {
                return usage("--level must be at least 1");
            }
            let gens = if a.hd {
                monomial_hd_ideal::<Rational>(&shape, a.level - 1, &())?
            } else {
                monomial_d_ideal::<Rational>(&shape, a.level - 1, &())?
            };
            let components = component_description(&shape, a.level)?;
            let names = var_names("x", shape.k());
            let generators = strings(&gens, &names);
            let mut text = String::new();
            let _ = writeln!(text, "shape {shape}, level {}", a.level);
            for g in &generators {
                let _ = writeln!(text, "  generator {g}");
            }
            for comp in &components {
                let _ = writeln!(text, "  component V{}  multiplicity {}", ideal_label(&comp.indices), comp.multiplicity);
            }
            let report = json!({
                "shape": shape.parts(),
                "level": a.level,
                "generators": generators,
                "components": components,
                "verified": Value::Null,
                "certificates": [],
            });
            Ok(Outcome { report, text, status: Status::Ok })
        }
        Command::Geom(a) => {
            let tuple = IndexTuple::new(a.n, parse_list(&a.tuple, "tuple")?)?;
            over_field!(field, |ctx: K| {
                let gens = tuple_ideal_generators::<K>(&tuple, a.deformed, ctx)?;
                let names = if a.deformed { var_names_with_t(a.n - 1) } else { var_names("x", a.n - 1) };
                let generators = strings(&gens, &names);
                let mut text = String::new();
                for (i, g) in generators.iter().enumerate() {
                    let _ = writeln!(text, "g{} = {g}", i + 1);
                }
                let report = json!({
                    "n": a.n,
                    "tuple": tuple.entries,
                    "deformed": a.deformed,
                    "variables": names,
                    "generators": generators,
                });
                Ok(Outcome { report, text, status: Status::Ok })
            })
        }
        Command::Gb(a) => over_field!(field, |ctx: K| run_gb::<K>(a, ctx, sb)),
        Command::CaCheck(a) => over_field!(field, |ctx: K| run_ca_check::<K>(a, ctx, cfg.seed)),
        Command::Search(a) => {
            let p = cli.common.p.expect("checked in prepare");
            let table = DiscriminantTable::load_or_build(a.n, cache)?;
            let r = search_counterexamples(&table, p, eb, exec)?;
            let mut text = String::new();
            let _ = writeln!(text, "degree {} over GF({p}): {} polynomials with f(0) = 0 scanned", a.n, r.scanned);
            let _ = writeln!(text, "counterexamples: {}", r.counterexamples.len());
            for c in &r.counterexamples {
                let _ = writeln!(text, "  {}", c.f);
            }
            let _ = writeln!(text, "weighted classes: {}", r.classes.len());
            for w in &r.classes {
                let _ = writeln!(text, "  {:?}", w.coords);
            }
            let _ = writeln!(text, "X_n points: {}", r.xn_points.len());
            let _ = writeln!(text, "classes in points: {}", r.classes_in_points);
            let _ = writeln!(text, "points in classes: {}", r.points_in_classes);
            let mut ok = r.coherent();
            let mut report = json!({ "search": r });
            if a.triangle {
                let t = consistency_triangle(&table, p, eb, exec)?;
                let _ = writeln!(text, "triangle: split counterexamples {}, nonregular tuples {}, coherent {}",
                    t.split_counterexamples, t.nonregular_tuples.len(), t.coherent);
                ok &= t.coherent;
                report["triangle"] = to_value(&t);
            }
            Ok(Outcome { report, text, status: if ok { Status::Ok } else { Status::Failed } })
        }
        Command::Badprimes(a) => {
            let pmax = cli.common.p.expect("checked in prepare");
            let table = DiscriminantTable::load_or_build(a.n, cache)?;
            let entries = bad_prime_scan(&table, pmax, eb, exec)?;
            let mut text = format!("{:>6}  {:>15}  {:>8}\n", "p", "counterexamples", "classes");
            let show = |v: Option<usize>| v.map_or("skipped".to_string(), |c| c.to_string());
            for e in &entries {
                let _ = writeln!(text, "{:>6}  {:>15}  {:>8}", e.p, show(e.counterexamples), show(e.classes));
            }
            let bad: Vec<u32> = entries.iter().filter(|e| e.counterexamples.is_some_and(|c| c > 0)).map(|e| e.p).collect();
            let _ = writeln!(text, "bad primes: {bad:?}");
            let status = if entries.iter().any(|e| e.skipped) { Status::Budget } else { Status::Ok };
            Ok(Outcome { report: json!({ "n": a.n, "pmax": pmax, "primes": entries, "bad_primes": bad }), text, status })
        }
        Command::Regseq(a) => {
            let l = a.level.unwrap_or(a.n.saturating_sub(1));
            let r = over_field!(field, |ctx: K| tuple_regularity_sweep::<K>(a.n, l, ctx, sb, exec))?;
            Ok(sweep_outcome(&r))
        }
        Command::Mainprop(a) => {
            let r = over_field!(field, |ctx: K| mainprop_verify::<K>(a.n, ctx, sb, exec))?;
            Ok(sweep_outcome(&r))
        }
        Command::Fibers(a) => {
            let tuples = match &a.tuple {
                Some(t) => vec![IndexTuple::new(a.n, parse_list(t, "tuple")?)?],
                None if a.n >= 2 => IndexTuple::all(a.n, a.n - 1),
                None => return usage("degree must be at least 2"),
            };
            over_field!(field, |ctx: K| {
                let alphas = parse_alphas::<K>(&a.alphas, ctx)?;
                let mut reports = Vec::new();
                for t in &tuples {
                    reports.push(fiber_scan::<K>(t, &alphas, ctx, sb, exec)?);
                }
                let mut text = format!("{:<16}", "tuple");
                for e in &reports[0].entries {
                    let _ = write!(text, "  {:>8}", e.alpha);
                }
                text.push('\n');
                for r in &reports {
                    let _ = write!(text, "{:<16}", tuple_label(&r.tuple));
                    for e in &r.entries {
                        let cell = format!("{}{}", e.dimension, if e.singular { "*" } else { "" });
                        let _ = write!(text, "  {cell:>8}");
                    }
                    text.push('\n');
                }
                text.push_str("fiber dimensions; * marks singular fibers\n");
                Ok(Outcome { report: json!({ "n": a.n, "fibers": reports }), text, status: Status::Ok })
            })
        }
        Command::Jc(a) => {
            let lmax = a.level.unwrap_or(a.n.saturating_sub(1));
            let r = over_field!(field, |ctx: K| jc_lower_bound::<K>(a.n, lmax, ctx, sb, exec))?;
            let mut text = String::new();
            for l in &r.levels {
                let _ = writeln!(text, "length {}: {}/{} tuples regular", l.length, l.regular, l.total);
            }
            let bound = if r.stopped_by == "budget" { format!(">= {}", r.verified) } else { r.verified.to_string() };
            let _ = writeln!(text, "verified level: {bound} (stopped by {})", r.stopped_by);
            let _ = writeln!(text, "q(n): {}", r.q.map_or("none".into(), |q| q.to_string()));
            let _ = writeln!(text, "meets q(n) - 1 expectation: {}", r.meets_expectation);
            let status = if r.stopped_by == "budget" {
                Status::Budget
            } else if !r.meets_expectation {
                Status::Failed
            } else {
                Status::Ok
            };
            Ok(Outcome { report: to_value(&r), text, status })
        }
    }
}

fn ideal_label(indices: &[usize]) -> String {
    let v: Vec<String> = indices.iter().map(|i| format!("x{i}")).collect();
    format!("({})", v.join(", "))
}

fn tuple_label(entries: &[usize]) -> String {
    let v: Vec<String> = entries.iter().map(|j| j.to_string()).collect();
    format!("({})", v.join(","))
}

fn sweep_outcome(r: &SweepReport) -> Outcome {
    let mut text = format!("{:<16}  {:<11}  {:>9}  {:>8}\n", "tuple", "outcome", "dimension", "spairs");
    for t in &r.tuples {
        let outcome = match t.outcome {
            TupleOutcome::Regular => "regular",
            TupleOutcome::NonRegular => "non-regular",
            TupleOutcome::Budget => "budget",
        };
        let dim = t.dimension.map_or("-".into(), |d| d.to_string());
        let sp = t.spairs.map_or("-".into(), |d| d.to_string());
        let _ = writeln!(text, "{:<16}  {:<11}  {:>9}  {:>8}", tuple_label(&t.tuple), outcome, dim, sp);
    }
    let _ = writeln!(text, "{}/{} tuples regular", r.regular, r.total);
    let status = match r.verdict {
        SweepVerdict::AllRegular => Status::Ok,
        SweepVerdict::NotAllRegular => Status::Failed,
        SweepVerdict::Inconclusive => Status::Budget,
    };
    let verdict = match r.verdict {
        SweepVerdict::AllRegular => "all regular",
        SweepVerdict::NotAllRegular => "not all regular",
        SweepVerdict::Inconclusive => "inconclusive",
    };
    let _ = writeln!(text, "verdict: {verdict}");
    Outcome { report: to_value(r), text, status }
}

fn run_hs<K: Field>(a: &crate::args::HsArgs, ctx: &K::Ctx) -> CliResult<Outcome> {
    let (input, names, p) = match (&a.uni, &a.poly) {
        (Some(u), _) => {
            let names = vec!["X".to_string()];
            (u.clone(), names, parse_upoly::<K>(u, ctx)?.to_mpoly())
        }
        (None, Some(text)) => {
            let n = a.n.unwrap_or_else(|| infer_nvars(&[text]));
            if n > MAX_VARS {
                return usage(format!("at most {MAX_VARS} variables"));
            }
            (text.clone(), var_names("x", n), parse_poly::<K>(text, n, ctx)?)
        }
        (None, None) => return usage("hs needs --uni or --poly"),
    };
    let out = match a.kind {
        HsKind::Hs => hs_multi(&p, a.i),
        HsKind::Dpower => d_power(&p, a.i),
        HsKind::Total => d_total(&p),
    };
    let result = out.to_string_with(&names);
    let report = json!({
        "input": input,
        "kind": format!("{:?}", a.kind).to_lowercase(),
        "i": a.i,
        "variables": names,
        "result": result,
    });
    Ok(Outcome { report, text: format!("{result}\n"), status: Status::Ok })
}

fn run_gb<K: Field>(a: &crate::args::GbArgs, ctx: &K::Ctx, budget: u64) -> CliResult<Outcome> {
    let polys: Vec<String> = if a.polys.trim_start().starts_with('[') {
        serde_json::from_str(&a.polys).map_err(|e| CliError::Usage(format!("bad JSON polynomial list: {e}")))?
    } else {
        a.polys.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
    };
    let mut texts: Vec<&str> = polys.iter().map(String::as_str).collect();
    if let Some(s) = &a.saturate {
        texts.push(s);
    }
    let n = a.n.unwrap_or_else(|| infer_nvars(&texts));
    if n > MAX_VARS {
        return usage(format!("at most {MAX_VARS} variables"));
    }
    let names = var_names("x", n);
    let gens = polys.iter().map(|s| parse_poly::<K>(s, n, ctx)).collect::<Result<Vec<_>, _>>()?;
    let gens = match &a.saturate {
        Some(s) => saturate(&gens, &parse_poly::<K>(s, n, ctx)?, budget)?,
        None => gens,
    };
    let order = match a.order {
        OrderArg::Grevlex => MonomialOrder::Grevlex,
        OrderArg::Lex => MonomialOrder::Lex,
    };
    let gb = GroebnerBasis::compute(n, ctx, &gens, order, budget)?;
    let basis = strings(gb.basis(), &names);
    let mut text = String::new();
    for b in &basis {
        let _ = writeln!(text, "{b}");
    }
    let _ = writeln!(text, "dimension: {}", gb.dimension());
    let _ = writeln!(text, "unit ideal: {}", gb.is_unit());
    let report = json!({
        "variables": names,
        "order": format!("{:?}", a.order).to_lowercase(),
        "generators": polys,
        "saturate": a.saturate,
        "basis": basis,
        "dimension": gb.dimension(),
        "unit": gb.is_unit(),
        "spairs": gb.spairs_reduced(),
    });
    Ok(Outcome { report, text, status: Status::Ok })
}

fn run_ca_check<K: Field>(a: &crate::args::CaCheckArgs, ctx: &K::Ctx, seed: u64) -> CliResult<Outcome> {
    let polys: Vec<UPoly<K>> = match (&a.f, a.random) {
        (Some(f), _) => vec![parse_upoly::<K>(f, ctx)?],
        (None, Some(count)) => {
            let n = a.n.expect("clap enforces --n");
            if n < 2 {
                return usage("--n must be at least 2");
            }
            let c = K::descriptor(ctx).characteristic();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    let mut coeffs: Vec<K> = (0..n)
                        .map(|_| if c == 0 { K::from_i64(ctx, rng.gen_range(-3..=3)) } else { K::from_i64(ctx, rng.gen_range(0..c as i64)) })
                        .collect();
                    coeffs.push(K::one(ctx));
                    UPoly::new(ctx, coeffs)
                })
                .collect()
        }
        (None, None) => return usage("ca-check needs --f or --random"),
    };
    let reports = polys.iter().map(ca_check).collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "f = {}", r.f);
        let _ = writeln!(text, "  gcd degrees: {:?}", r.gcd_degrees);
        let _ = writeln!(text, "  hypothesis: {}, pure power: {}, counterexample: {}", r.satisfies_hypothesis, r.is_pure_power, r.is_counterexample);
    }
    let counterexamples = reports.iter().filter(|r| r.is_counterexample).count();
    if reports.len() > 1 {
        let _ = writeln!(text, "{counterexamples}/{} counterexamples", reports.len());
    }
    Ok(Outcome { report: json!({ "reports": reports, "counterexamples": counterexamples }), text, status: Status::Ok })
}
