//! The acceptance matrix: eleven criteria, each reduced to a pass/fail
//! verdict with a one-line summary of the worst case seen.

use crate::analysis::{f_alpha, f_alpha_integral, AlphaParam, QuadratureSpec};
use crate::arith::{default_zero_table, find_first_zero, sieve_von_mangoldt, zeta_euler_maclaurin, ZeroTable};
use crate::bounds::{
    appendix_a1, appendix_a2, hadamard_identity, lemma_grid_check, littlewood_check, sandwich_check, theorem_upper,
};
use crate::error::Result;
use crate::explicit::ledger;
use crate::extremal::{default_ft_spec, ft_at_zero, ft_series, l1_distance, ExtremalFunction, ExtremalParams, FtQuadrature, Kind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::PI;

/// Tolerances and grids, fixed here so every run checks the same thing.
pub mod tol {
    pub const SANDWICH_STEP: f64 = 0.01;
    pub const SANDWICH_RADIUS: f64 = 50.0;
    pub const FT_ABS: f64 = 1e-6;
    pub const FT_SAMPLES: usize = 20;
    pub const L1_QUADRATURE: f64 = 1e-5;
    pub const L1_IDENTITY: f64 = 1e-12;
    pub const LEDGER_BUDGET_DELTA1: f64 = 0.1;
    pub const LEDGER_SIEVE: u64 = 600;
    pub const LEDGER_MIN_COVERAGE: f64 = 1000.0;
    pub const HADAMARD_BUDGET_T1000: f64 = 0.05;
    pub const SANDWICH_MIN_MODULUS: f64 = 1e-6;
    pub const APPENDIX_EXACT: f64 = 1e-9;
    pub const LITTLEWOOD_SAMPLES: usize = 100;
    pub const NEAR_HALF_RATIO: f64 = 0.05;
    pub const ZETA2: f64 = 1e-9;
    pub const FIRST_ZERO: f64 = 1e-4;
    pub const SEED: u64 = 20_140_501;
}

pub const ALPHAS: [f64; 3] = [0.6, 0.75, 1.0];
pub const DELTAS: [f64; 3] = [0.5, 1.0, 2.0];
pub const LEDGER_DELTAS: [f64; 2] = [0.5, 1.0];
pub const LEDGER_TS: [f64; 4] = [50.0, 100.0, 250.0, 500.0];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Criterion {
    pub fn line(&self) -> String {
        format!("[{}] {:>2} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.id, self.name, self.detail)
    }
}

fn crit(id: u8, name: &'static str, passed: bool, detail: String) -> Criterion {
    Criterion { id, name, passed, detail }
}

fn params(a: f64, d: f64, k: Kind) -> ExtremalParams {
    ExtremalParams::from_raw(a, d, k).expect("grid parameters are valid")
}

/// 1. `g_Δ ≤ f_α ≤ m_Δ` on `[−50, 50]`, step `0.01`, within the certified
/// series tails.
pub fn sandwich_suite() -> Criterion {
    let n = (2.0 * tol::SANDWICH_RADIUS / tol::SANDWICH_STEP).round() as i64;
    let mut violations = 0usize;
    let mut points = 0usize;
    let mut worst: f64 = f64::NEG_INFINITY;
    for &a in &ALPHAS {
        for &d in &DELTAS {
            let lo = ExtremalFunction::new(params(a, d, Kind::Minorant));
            let hi = ExtremalFunction::new(params(a, d, Kind::Majorant));
            let alpha = lo.params().alpha;
            for i in 0..=n {
                let x = -tol::SANDWICH_RADIUS + i as f64 * tol::SANDWICH_STEP;
                let f = f_alpha(x, alpha);
                let g = lo.eval(x);
                let m = hi.eval(x);
                let over = (g.value - f - g.tail_bound).max(f - m.value - m.tail_bound);
                worst = worst.max(over);
                violations += usize::from(over > 0.0);
                points += 1;
            }
        }
    }
    crit(1, "sandwich g <= f <= m", violations == 0, format!("{points} points, {violations} violations, max excess {worst:.2e}"))
}

/// 2. Series vs quadrature transforms, and compact support.
pub fn fourier_closed_forms() -> Result<Criterion> {
    let mut rng = ChaCha8Rng::seed_from_u64(tol::SEED);
    let mut failures = 0usize;
    let mut checks = 0usize;
    let mut worst: f64 = 0.0;
    for &a in &ALPHAS {
        for &d in &DELTAS {
            for kind in Kind::BOTH {
                let p = params(a, d, kind);
                let q = FtQuadrature::new(p, &default_ft_spec(d))?;
                let mut xi: Vec<f64> = (0..tol::FT_SAMPLES).map(|_| rng.gen_range(0.0..d)).collect();
                xi.retain(|&x| x > 0.0);
                for x in xi {
                    let s = ft_series(&p, x);
                    let r = q.transform(x)?;
                    let gap = (s.value - r.value).abs();
                    worst = worst.max(gap);
                    failures += usize::from(gap > r.err_est + s.tail_bound + tol::FT_ABS);
                    checks += 1;
                }
                for x in [1.2 * d, 2.0 * d] {
                    let r = q.transform(x)?;
                    failures += usize::from(r.value.abs() > r.err_est + tol::FT_ABS);
                    checks += 1;
                }
            }
        }
    }
    Ok(crit(2, "Fourier transform closed forms", failures == 0, format!("{checks} checks, {failures} failures, max |series - quadrature| {worst:.2e}")))
}

/// 3. L¹ gaps by quadrature vs the closed forms, and `ĝ(0) + L¹ = 2π(5/2 − α) = m̂(0) − L¹`.
pub fn l1_identities() -> Result<Criterion> {
    let mut worst_quad: f64 = 0.0;
    let mut worst_id: f64 = 0.0;
    for &a in &ALPHAS {
        for &d in &DELTAS {
            let base = f_alpha_integral(AlphaParam::new(a)?);
            let lo = params(a, d, Kind::Minorant);
            let hi = params(a, d, Kind::Majorant);
            worst_id = worst_id
                .max((ft_at_zero(&lo) + l1_distance(&lo) - base).abs())
                .max((ft_at_zero(&hi) - l1_distance(&hi) - base).abs());
            for p in [lo, hi] {
                let q = FtQuadrature::new(p, &default_ft_spec(d))?.l1()?;
                worst_quad = worst_quad.max((q.value - l1_distance(&p)).abs());
            }
        }
    }
    let ok = worst_quad <= tol::L1_QUADRATURE && worst_id <= tol::L1_IDENTITY;
    Ok(crit(3, "L1 identities", ok, format!("max quadrature gap {worst_quad:.2e}, max identity gap {worst_id:.2e}")))
}

fn matrix() -> impl Iterator<Item = (f64, f64, f64, Kind)> {
    ALPHAS.into_iter().flat_map(|a| {
        LEDGER_DELTAS
            .into_iter()
            .flat_map(move |d| LEDGER_TS.into_iter().flat_map(move |t| Kind::BOTH.into_iter().map(move |k| (a, d, t, k))))
    })
}

/// 4. The explicit formula balances within its budget.
pub fn explicit_balance(zeros: &ZeroTable) -> Result<Criterion> {
    let table = sieve_von_mangoldt(tol::LEDGER_SIEVE)?;
    let mut bad = 0usize;
    let mut count = 0usize;
    let mut worst_ratio: f64 = 0.0;
    let mut worst_budget_d1: f64 = 0.0;
    for (a, d, t, k) in matrix() {
        let l = ledger(&params(a, d, k), t, zeros, &table)?;
        count += 1;
        bad += usize::from(!l.balanced());
        worst_ratio = worst_ratio.max(l.residual.value.abs() / l.budget.value);
        if d == 1.0 {
            worst_budget_d1 = worst_budget_d1.max(l.budget.value);
        }
    }
    let ok = zeros.coverage_height >= tol::LEDGER_MIN_COVERAGE && bad == 0 && worst_budget_d1 <= tol::LEDGER_BUDGET_DELTA1;
    Ok(crit(
        4,
        "explicit formula balance",
        ok,
        format!("{count} ledgers, {bad} unbalanced, max |residual|/budget {worst_ratio:.3}, max budget at delta=1 {worst_budget_d1:.2e}"),
    ))
}

/// 5. The zero-sum identity for `log|ζ(α + it)|`.
pub fn hadamard(zeros: &ZeroTable) -> Result<Criterion> {
    let mut bad = 0usize;
    let mut worst_ratio: f64 = 0.0;
    let mut budget_1000: f64 = 0.0;
    for &a in &ALPHAS {
        for &t in &[100.0, 500.0, 1000.0] {
            let c = hadamard_identity(AlphaParam::new(a)?, t, zeros)?;
            bad += usize::from(!c.holds());
            worst_ratio = worst_ratio.max(c.residual.abs() / c.budget);
            if t == 1000.0 {
                budget_1000 = budget_1000.max(c.budget);
            }
        }
    }
    let ok = bad == 0 && budget_1000 <= tol::HADAMARD_BUDGET_T1000;
    Ok(crit(5, "zero-sum identity", ok, format!("9 points, {bad} outside budget, max |residual|/budget {worst_ratio:.3}, budget at t=1000 {budget_1000:.3e}")))
}

/// 6. Extremal sandwiches of `log|ζ(α + it)|`.
pub fn bound_inequalities(zeros: &ZeroTable) -> Result<Criterion> {
    let mut bad = 0usize;
    let mut checked = 0usize;
    let mut skipped = 0usize;
    for &a in &ALPHAS {
        for &d in &LEDGER_DELTAS {
            for &t in &LEDGER_TS {
                let modulus = zeta_euler_maclaurin(a, t, 10)?.value.norm();
                if modulus <= tol::SANDWICH_MIN_MODULUS {
                    skipped += 1;
                    continue;
                }
                let up = sandwich_check(&params(a, d, Kind::Minorant), t, zeros)?;
                let lo = sandwich_check(&params(a, d, Kind::Majorant), t, zeros)?;
                checked += 1;
                bad += usize::from(!(up.holds && lo.holds && up.bound >= lo.bound));
            }
        }
    }
    Ok(crit(6, "bound inequalities", bad == 0, format!("{checked} points, {skipped} skipped near zeros, {bad} failures")))
}

/// 7. Both lemma grids.
pub fn lemma_grids() -> Criterion {
    let (a, b) = lemma_grid_check();
    crit(
        7,
        "lemma grids",
        a.failures == 0 && b.failures == 0,
        format!("consecutive-term lemma {}/{} true, k-sum lemma {}/{} true", a.cases - a.failures, a.cases, b.cases - b.failures, b.cases),
    )
}

type AppendixFn = fn(f64, AlphaParam, &QuadratureSpec) -> Result<crate::bounds::Asymptotic>;

/// 8. Both appendix integrals: envelope, strictly decreasing relative error,
/// and the exact `α = 1` case.
pub fn appendix() -> Result<Criterion> {
    let spec = QuadratureSpec::default();
    let xs = [1e3, 1e4, 1e5, 1e6];
    let mut notes = Vec::new();
    let mut ok = true;
    for &a in &[0.6, 0.75] {
        let alpha = AlphaParam::new(a)?;
        let fs: [(&str, AppendixFn); 2] = [("A1", appendix_a1), ("A2", appendix_a2)];
        for (name, f) in fs {
            let rows: Vec<_> = xs.iter().map(|&x| f(x, alpha, &spec)).collect::<Result<_>>()?;
            let env = rows.iter().all(|r| r.within_envelope());
            let rel: Vec<f64> = rows.iter().map(|r| r.relative_error()).collect();
            let mono = rel.windows(2).all(|w| w[1] < w[0]);
            ok &= env && mono;
            let shown: Vec<String> = rel.iter().map(|r| format!("{r:.3}")).collect();
            notes.push(format!(
                "{name}(a={a}) envelope {} rel.err [{}]{}",
                if env { "ok" } else { "exceeded" },
                shown.join(", "),
                if mono { "" } else { " not decreasing" }
            ));
        }
    }
    let mut exact: f64 = 0.0;
    for &x in &xs {
        let r = appendix_a1(x, AlphaParam::new(1.0)?, &spec)?;
        exact = exact.max((r.numeric - (x.ln().ln() - 2f64.ln().ln())).abs());
    }
    ok &= exact <= tol::APPENDIX_EXACT;
    notes.push(format!("alpha=1 exact gap {exact:.1e}"));
    Ok(crit(8, "appendix asymptotics", ok, notes.join("; ")))
}

/// 9. `|ζ(1 + it)| ≤ 2e^γ log log t` and `1/|ζ(1 + it)| ≤ (12e^γ/π²) log log t`.
pub fn littlewood() -> Result<Criterion> {
    let mut rng = ChaCha8Rng::seed_from_u64(tol::SEED + 9);
    let mut bad = 0usize;
    let mut min_up = f64::INFINITY;
    let mut min_lo = f64::INFINITY;
    for _ in 0..tol::LITTLEWOOD_SAMPLES {
        let t = rng.gen_range(1e3..1e5);
        let l = littlewood_check(t)?;
        let (u, v) = (l.upper_slack.unwrap_or(f64::NAN), l.lower_slack.unwrap_or(f64::NAN));
        bad += usize::from(!(u > 0.0 && v > 0.0));
        min_up = min_up.min(u);
        min_lo = min_lo.min(v);
    }
    Ok(crit(9, "line-one constants", bad == 0, format!("{} samples, {bad} violations, min slack {min_up:.3} / {min_lo:.3}", tol::LITTLEWOOD_SAMPLES)))
}

/// 10. At `α = 1/2 + 1/log log t`, `t = 10¹⁰`, the near-half main term
/// against `(log 2/2) log t/log log t`.
pub fn near_half_recovery() -> Result<Criterion> {
    let t: f64 = 1e10;
    let ll = t.ln().ln();
    let r = theorem_upper(AlphaParam::new(0.5 + 1.0 / ll)?, t)?;
    let target = 2f64.ln() / 2.0 * t.ln() / ll;
    let ratio = r.main_term / target;
    Ok(crit(10, "near-half recovery", (ratio - 1.0).abs() <= tol::NEAR_HALF_RATIO, format!("regime {}, main term {:.4}, target {target:.4}, ratio {ratio:.4}", r.regime, r.main_term)))
}

/// 11. Backend sanity: `ζ(2)`, the first zero, and the shipped zero table.
pub fn backend(zeros: Result<&ZeroTable>) -> Result<Criterion> {
    let z2 = zeta_euler_maclaurin(2.0, 0.0, 10)?.value;
    let e2 = (z2.re - PI * PI / 6.0).abs() + z2.im.abs();
    let g1 = find_first_zero();
    let table = match zeros {
        Ok(z) => format!("table ok ({} zeros to {:.3})", z.ordinates.len(), z.coverage_height),
        Err(e) => format!("table rejected: {e}"),
    };
    let ok = e2 <= tol::ZETA2 && (g1 - 14.134725).abs() <= tol::FIRST_ZERO && table.starts_with("table ok");
    Ok(crit(11, "backend correctness", ok, format!("|zeta(2) - pi^2/6| {e2:.1e}, first zero {g1:.9}, {table}")))
}

/// Runs every criterion against the shipped zero table.
pub fn run_all() -> Vec<Criterion> {
    run_all_with(&default_zero_table())
}

/// Runs every criterion in order; a criterion that errors counts as failed.
pub fn run_all_with(zeros: &Result<ZeroTable>) -> Vec<Criterion> {
    let names = [
        "sandwich g <= f <= m",
        "Fourier transform closed forms",
        "L1 identities",
        "explicit formula balance",
        "zero-sum identity",
        "bound inequalities",
        "lemma grids",
        "appendix asymptotics",
        "line-one constants",
        "near-half recovery",
        "backend correctness",
    ];
    (1..=11u8)
        .map(|id| run_one(id, zeros.as_ref()).unwrap_or_else(|e| crit(id, names[id as usize - 1], false, format!("error: {e}"))))
        .collect()
}

/// A single criterion by number.
pub fn run_one(id: u8, zeros: std::result::Result<&ZeroTable, &crate::Error>) -> Result<Criterion> {
    let need = || zeros.map_err(|e| e.clone());
    match id {
        1 => Ok(sandwich_suite()),
        2 => fourier_closed_forms(),
        3 => l1_identities(),
        4 => explicit_balance(need()?),
        5 => hadamard(need()?),
        6 => bound_inequalities(need()?),
        7 => Ok(lemma_grids()),
        8 => appendix(),
        9 => littlewood(),
        10 => near_half_recovery(),
        11 => backend(zeros.map_err(|e| e.clone())),
        _ => Err(crate::Error::InvalidParams(format!("no criterion {id}; expected 1..=11"))),
    }
}
