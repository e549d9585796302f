//! The `extremal-zeta` command line. Exit codes: 0 ok, 2 configuration or
//! data error, 3 computation flagged (quadrature limit, domain, near a zero),
//! 4 a mathematical check failed.

use crate::analysis::{f_alpha, AlphaParam, QuadratureSpec};
use crate::arith::{default_data_dir, load_zero_table, sieve_von_mangoldt, VonMangoldtTable, ZeroTable, ZERO_FILE};
use crate::bounds::{littlewood_check, sandwich_check, theorem_branch, theorem_lower, theorem_upper, Direction, Regime};
use crate::error::Error;
use crate::explicit::ledger_with;
use crate::extremal::{ft_series, l1_distance, ExtremalFunction, ExtremalParams, Kind};
use crate::report::sig17;
use crate::verify;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;
pub const EXIT_CHECK: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "extremal-zeta", version, about = "Extremal functions for log-type kernels and explicit-formula checks for zeta")]
pub struct Cli {
    /// Data directory (zero table, sieve caches). Defaults to $EXTREMAL_ZETA_DATA.
    #[arg(long, global = true)]
    pub data_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate an extremal function, its Fourier transform or its L1 gap.
    Eval(EvalArgs),
    /// Itemized explicit formula at one height.
    ExplicitFormula(ExplicitArgs),
    /// Conditional bounds for log|zeta(alpha + it)| over a t grid.
    Bounds(BoundsArgs),
    /// Sieve (or load) a von Mangoldt table and sanity-check psi(x).
    Sieve(SieveArgs),
    /// Run the full acceptance matrix.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub delta: f64,
    #[arg(long, default_value = "minorant")]
    pub kind: String,
    /// Evaluation points, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x: Vec<f64>,
    /// Evaluate the Fourier transform at `--xi` instead.
    #[arg(long)]
    pub ft: bool,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub xi: Vec<f64>,
    /// Report the L1 distance to f_alpha.
    #[arg(long)]
    pub l1: bool,
}

#[derive(Args, Debug)]
pub struct ExplicitArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub delta: f64,
    #[arg(long, default_value = "minorant")]
    pub kind: String,
    #[arg(long)]
    pub t: f64,
    /// Zero table file; defaults to the data directory's table.
    #[arg(long)]
    pub zeros: Option<PathBuf>,
    /// Sieve limit; defaults to ceil(e^(2 pi delta)).
    #[arg(long)]
    pub sieve_limit: Option<u64>,
    /// Use only the zeros below this height.
    #[arg(long)]
    pub coverage: Option<f64>,
    /// Absolute quadrature tolerance for the archimedean term.
    #[arg(long)]
    pub abs_tol: Option<f64>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Heights: one value, a comma list, or `start:stop:step`.
    #[arg(long)]
    pub t: Option<String>,
    /// Bandwidth for the extremal sandwich in `--check`.
    #[arg(long, default_value_t = 1.0)]
    pub delta: f64,
    #[arg(long)]
    pub with_actual: bool,
    /// Exit 4 if a sandwich or line-one inequality fails.
    #[arg(long)]
    pub check: bool,
    /// The line-one constants instead of the strip bounds.
    #[arg(long)]
    pub littlewood: bool,
    /// Force a regime (near-half, near-one, middle).
    #[arg(long)]
    pub regime: Option<String>,
    /// Lower bounds instead of upper bounds.
    #[arg(long)]
    pub lower: bool,
    #[arg(long)]
    pub zeros: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SieveArgs {
    #[arg(long)]
    pub limit: u64,
    /// Cache file; defaults to `<data-dir>/sieve_<limit>.csv`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run only these criteria (1 to 11).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<u8>,
    #[arg(long)]
    pub zeros: Option<PathBuf>,
}

/// A failure mapped to its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), msg: e.to_string() }
    }
}

fn config(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_CONFIG, msg: msg.into() }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SubdivisionLimit { .. } | Error::DomainError(_) | Error::NearZeroSingularity { .. } => EXIT_COMPUTATION,
        _ => EXIT_CONFIG,
    }
}

/// Parsed output plus the exit status it implies.
pub struct Outcome {
    pub sections: Vec<(String, Vec<Value>)>,
    pub code: i32,
}

impl Outcome {
    fn single(name: &str, rows: Vec<Value>, code: i32) -> Self {
        Self { sections: vec![(name.into(), rows)], code }
    }
}

pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let out = cli.output;
    match run(cli) {
        Ok(o) => {
            let text = render(&o.sections, out);
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            o.code
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            f.code
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, Failure> {
    let data = cli.data_dir.clone().unwrap_or_else(default_data_dir);
    match cli.command {
        Command::Eval(a) => eval(a),
        Command::ExplicitFormula(a) => explicit(a, &data),
        Command::Bounds(a) => bounds(a, &data),
        Command::Sieve(a) => sieve(a, &data),
        Command::Verify(a) => run_verify(a, &data),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn params(alpha: f64, delta: f64, kind: &str) -> Result<ExtremalParams, Failure> {
    let kind: Kind = kind.parse()?;
    Ok(ExtremalParams::from_raw(alpha, delta, kind)?)
}

fn zeros_at(path: Option<PathBuf>, data: &std::path::Path) -> Result<ZeroTable, Failure> {
    let path = path.unwrap_or_else(|| data.join(ZERO_FILE));
    if !path.exists() {
        return Err(config(format!("zero table {} does not exist", path.display())));
    }
    Ok(load_zero_table(&path)?)
}

fn eval(a: EvalArgs) -> Result<Outcome, Failure> {
    let p = params(a.alpha, a.delta, &a.kind)?;
    if a.x.iter().chain(&a.xi).any(|v| !v.is_finite()) {
        return Err(config("evaluation points must be finite"));
    }
    let head = json!({"alpha": a.alpha, "delta": a.delta, "kind": p.kind});
    let merge = |mut row: Map<String, Value>| {
        let mut m = head.as_object().cloned().unwrap_or_default();
        m.append(&mut row);
        Value::Object(m)
    };
    let mut rows = Vec::new();
    let mut code = EXIT_OK;
    if a.l1 {
        let v = l1_distance(&p);
        rows.push(merge(json!({"quantity": "l1", "value": v, "error": 8.0 * f64::EPSILON * v.abs()}).as_object().cloned().unwrap()));
    }
    if a.ft {
        if a.xi.is_empty() {
            return Err(config("--ft needs --xi"));
        }
        for &xi in &a.xi {
            let s = ft_series(&p, xi);
            if s.slow_convergence || !s.value.is_finite() {
                code = EXIT_COMPUTATION;
            }
            let row = json!({"quantity": "ft", "xi": xi, "value": s.value, "error": s.tail_bound, "terms": s.k_terms});
            rows.push(merge(row.as_object().cloned().unwrap()));
        }
    }
    if !a.x.is_empty() {
        let ev = ExtremalFunction::new(p);
        for &x in &a.x {
            let e = ev.eval(x);
            if !(e.value.is_finite() && e.tail_bound.is_finite()) {
                code = EXIT_COMPUTATION;
            }
            let row = json!({"quantity": "value", "x": x, "value": e.value, "error": e.tail_bound, "f_alpha": f_alpha(x, p.alpha)});
            rows.push(merge(row.as_object().cloned().unwrap()));
        }
    }
    if rows.is_empty() {
        return Err(config("nothing to evaluate: give --x, --ft --xi, or --l1"));
    }
    Ok(Outcome::single("eval", rows, code))
}

fn explicit(a: ExplicitArgs, data: &std::path::Path) -> Result<Outcome, Failure> {
    let p = params(a.alpha, a.delta, &a.kind)?;
    let mut zeros = zeros_at(a.zeros, data)?;
    if let Some(h) = a.coverage {
        if !(h > 0.0 && h.is_finite()) {
            return Err(config(format!("coverage must be positive, got {h}")));
        }
        zeros = zeros.truncated(h);
    }
    let mut spec = QuadratureSpec::default();
    if let Some(tol) = a.abs_tol {
        spec = spec.with_tol(tol);
        spec.validate()?;
    }
    let needed = (2.0 * PI * a.delta).exp().ceil().max(2.0);
    let limit = a.sieve_limit.unwrap_or(needed as u64);
    let table = sieve_von_mangoldt(limit)?;
    let l = ledger_with(&p, a.t, &zeros, &table, &spec)?;
    let code = if l.balanced() { EXIT_OK } else { EXIT_CHECK };
    let mut v = to_value(&l);
    v["balanced"] = Value::Bool(l.balanced());
    Ok(Outcome::single("ledger", vec![v], code))
}

/// `"100"`, `"100,250,1e4"` or `"100:1000:100"` (inclusive).
pub fn parse_grid(s: &str) -> Result<Vec<f64>, Error> {
    let bad = || Error::InvalidParams(format!("bad t grid {s:?}"));
    let num = |x: &str| x.trim().parse::<f64>().map_err(|_| bad());
    let out: Vec<f64> = if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let (a, b, h) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
        if !(h > 0.0 && a <= b && a.is_finite() && b.is_finite()) {
            return Err(bad());
        }
        let n = ((b - a) / h + 1e-9).floor() as usize;
        if n > 1_000_000 {
            return Err(bad());
        }
        (0..=n).map(|i| a + i as f64 * h).collect()
    } else {
        s.split(',').map(num).collect::<Result<_, _>>()?
    };
    if out.is_empty() || out.iter().any(|t| !t.is_finite()) {
        return Err(bad());
    }
    Ok(out)
}

fn bounds(a: BoundsArgs, data: &std::path::Path) -> Result<Outcome, Failure> {
    let ts = parse_grid(a.t.as_deref().unwrap_or_default()).map_err(|_| config("--t needs a value, list or start:stop:step"));
    if a.littlewood {
        let ts = ts?;
        let mut rows = Vec::new();
        let mut ok = true;
        for &t in &ts {
            let l = littlewood_check(t)?;
            ok &= l.upper_slack.map_or(true, |s| s > 0.0) && l.lower_slack.map_or(true, |s| s > 0.0);
            let mut v = to_value(&l);
            if !a.with_actual {
                for k in ["actual_abs", "upper_slack", "lower_slack"] {
                    v[k] = Value::Null;
                }
            }
            rows.push(v);
        }
        let code = if (a.check || a.with_actual) && !ok { EXIT_CHECK } else { EXIT_OK };
        return Ok(Outcome::single("littlewood", rows, code));
    }
    let alpha = AlphaParam::new(a.alpha.ok_or_else(|| config("--alpha is required"))?)?;
    let ts = ts?;
    let regime: Option<Regime> = a.regime.as_deref().map(str::parse).transpose()?;
    let direction = if a.lower { Direction::Lower } else { Direction::Upper };
    let mut rows = Vec::new();
    for &t in &ts {
        let r = match (regime, direction) {
            (Some(g), d) => theorem_branch(alpha, t, d, g)?,
            (None, Direction::Upper) => theorem_upper(alpha, t)?,
            (None, Direction::Lower) => theorem_lower(alpha, t)?,
        };
        let mut v = to_value(&r);
        if !a.with_actual {
            v["actual"] = Value::Null;
            v["slack"] = Value::Null;
            v["flagged"] = Value::Bool(false);
        }
        rows.push(v);
    }
    let mut sections = vec![("bounds".to_string(), rows)];
    let mut code = EXIT_OK;
    if a.check {
        let zeros = zeros_at(a.zeros, data)?;
        let mut checks = Vec::new();
        for &t in &ts {
            if t < 50.0 || zeros.coverage_height < 2.0 * t {
                return Err(config(format!("--check at t = {t} needs t >= 50 and zeros up to {}", 2.0 * t)));
            }
            for kind in Kind::BOTH {
                let c = sandwich_check(&ExtremalParams::new(alpha, a.delta, kind)?, t, &zeros)?;
                if !c.holds {
                    code = EXIT_CHECK;
                }
                checks.push(to_value(&c));
            }
        }
        sections.push(("checks".into(), checks));
    }
    Ok(Outcome { sections, code })
}

/// `ψ(x) ≤ 1.03883x` for all `x`, and `ψ(x) ≥ θ(x) > x(1 − 1/log x)` for `x ≥ 41`.
pub fn chebyshev_window(x: u64) -> (f64, f64) {
    let xf = x as f64;
    let lower = if x >= 41 { xf * (1.0 - 1.0 / xf.ln()) } else { 0.0 };
    (lower, 1.03883 * xf)
}

fn sieve(a: SieveArgs, data: &std::path::Path) -> Result<Outcome, Failure> {
    let path = a.out.unwrap_or_else(|| data.join(format!("sieve_{}.csv", a.limit)));
    let t = VonMangoldtTable::load_or_build(&path, a.limit)?;
    let psi = t.chebyshev(t.limit);
    let (lo, hi) = chebyshev_window(t.limit);
    let ok = lo <= psi && psi <= hi;
    let row = json!({
        "limit": t.limit,
        "prime_powers": t.entries.len(),
        "psi": psi,
        "psi_over_x": psi / t.limit as f64,
        "lower": lo,
        "upper": hi,
        "chebyshev_ok": ok,
        "cache": path.display().to_string(),
    });
    Ok(Outcome::single("sieve", vec![row], if ok { EXIT_OK } else { EXIT_CHECK }))
}

fn run_verify(a: VerifyArgs, data: &std::path::Path) -> Result<Outcome, Failure> {
    let zeros = zeros_at(a.zeros, data).map_err(|f| Error::Io(f.msg));
    let results: Vec<verify::Criterion> = if a.only.is_empty() {
        verify::run_all_with(&zeros)
    } else {
        let mut v = Vec::new();
        for &id in &a.only {
            v.push(verify::run_one(id, zeros.as_ref()).or_else(|e| match e {
                Error::InvalidParams(_) => Err(Failure::from(e)),
                other => Ok(verify::Criterion { id, name: "criterion", passed: false, detail: format!("error: {other}") }),
            })?);
        }
        v
    };
    for c in &results {
        eprintln!("{}", c.line());
    }
    let code = if results.iter().all(|c| c.passed) { EXIT_OK } else { EXIT_CHECK };
    Ok(Outcome::single("verify", results.iter().map(to_value).collect(), code))
}

/// JSON: one document (an object keyed by section when there are several).
/// CSV: one block per section, nested objects flattened as `outer.inner`.
pub fn render(sections: &[(String, Vec<Value>)], out: Output) -> String {
    match out {
        Output::Json => {
            let doc = if sections.len() == 1 {
                Value::Array(sections[0].1.clone())
            } else {
                Value::Object(sections.iter().map(|(k, v)| (k.clone(), Value::Array(v.clone()))).collect())
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("json");
            s.push('\n');
            s
        }
        Output::Csv => {
            let mut s = String::new();
            for (i, (_, rows)) in sections.iter().enumerate() {
                if i > 0 {
                    s.push('\n');
                }
                s.push_str(&csv_block(rows));
            }
            s
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Number(n) => {
            let cell = match (n.as_u64(), n.as_i64()) {
                (Some(u), _) => u.to_string(),
                (_, Some(i)) => i.to_string(),
                _ => sig17(n.as_f64().unwrap_or(f64::NAN)),
            };
            out.push((prefix.into(), cell));
        }
        Value::String(s) => out.push((prefix.into(), csv_escape(s))),
        Value::Bool(b) => out.push((prefix.into(), b.to_string())),
        Value::Null => out.push((prefix.into(), String::new())),
        Value::Array(a) => out.push((prefix.into(), csv_escape(&Value::Array(a.clone()).to_string()))),
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_block(rows: &[Value]) -> String {
    let mut s = String::new();
    let flat: Vec<Vec<(String, String)>> = rows
        .iter()
        .map(|r| {
            let mut f = Vec::new();
            flatten("", r, &mut f);
            f
        })
        .collect();
    let mut header: Vec<String> = Vec::new();
    for row in &flat {
        for (k, _) in row {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    s.push_str(&header.join(","));
    s.push('\n');
    for row in &flat {
        let cells: Vec<&str> = header
            .iter()
            .map(|h| row.iter().find(|(k, _)| k == h).map_or("", |(_, v)| v.as_str()))
            .collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}
