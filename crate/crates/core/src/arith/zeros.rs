use super::roots::brent;
use super::zeta::{hardy_z, riemann_siegel_theta};
use crate::analysis::digamma_re_quarter;
use crate::error::{Error, Result};
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

/// Ordinates `0 < γ < coverage_height` of the nontrivial zeros, ascending.
/// The table is complete up to `coverage_height`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    pub ordinates: Vec<f64>,
    pub coverage_height: f64,
    pub source: String,
}

/// `(T/2π) log(T/2πe) + 7/8`.
pub fn riemann_von_mangoldt(t: f64) -> f64 {
    let u = t / (2.0 * PI);
    u * (u.ln() - 1.0) + 0.875
}

/// Allowed `|N(T) − riemann_von_mangoldt(T)|` when validating a table.
pub fn zero_count_tolerance(t: f64) -> f64 {
    2.0 + 0.2 * t.ln()
}

impl ZeroTable {
    pub fn count_below(&self, t: f64) -> usize {
        self.ordinates.partition_point(|&g| g < t)
    }

    pub fn truncated(&self, height: f64) -> Self {
        let h = height.min(self.coverage_height);
        Self {
            ordinates: self.ordinates[..self.count_below(h)].to_vec(),
            coverage_height: h,
            source: self.source.clone(),
        }
    }

    pub fn require(&self, height: f64) -> Result<()> {
        if self.coverage_height < height {
            return Err(Error::InsufficientCoverage { coverage: self.coverage_height, required: height });
        }
        Ok(())
    }

    /// Ordering, first ordinate and zero-counting sanity checks.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Format(format!("{}: {m}", self.source)));
        let Some(&first) = self.ordinates.first() else {
            return bad("empty zero table".into());
        };
        if (first - 14.1347).abs() > 1e-3 {
            return bad(format!("first ordinate {first} is not 14.1347…"));
        }
        if let Some(w) = self.ordinates.windows(2).find(|w| !(w[1] > w[0])) {
            return bad(format!("ordinates not strictly ascending at {}", w[1]));
        }
        let last = *self.ordinates.last().unwrap();
        if !(self.coverage_height > last) {
            return bad(format!("coverage_height {} not above last ordinate {last}", self.coverage_height));
        }
        // N(T) just past each zero, and at the coverage height
        let mut probes: Vec<(f64, usize)> = self
            .ordinates
            .windows(2)
            .enumerate()
            .map(|(i, w)| (0.5 * (w[0] + w[1]), i + 1))
            .collect();
        probes.push((self.coverage_height, self.ordinates.len()));
        for (t, n) in probes {
            let dev = (n as f64 - riemann_von_mangoldt(t)).abs();
            if dev > zero_count_tolerance(t) {
                return bad(format!("N({t}) = {n} deviates from the zero-counting formula by {dev:.3}"));
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# ordinates of the nontrivial zeros of zeta below coverage_height");
        let _ = writeln!(s, "coverage_height={:.12}", self.coverage_height);
        for g in &self.ordinates {
            let _ = writeln!(s, "{g:.12}");
        }
        s
    }

    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let mut coverage = None;
        let mut ordinates: Vec<f64> = Vec::new();
        let mut last_line = 0;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            last_line = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse { file: source.into(), line: i + 1, msg: format!("{msg}: {line:?}") };
            if let Some(v) = line.strip_prefix("coverage_height=") {
                let h: f64 = v.trim().parse().map_err(|_| err("bad coverage height"))?;
                if !(h > 0.0 && h.is_finite()) {
                    return Err(err("bad coverage height"));
                }
                coverage = Some(h);
                continue;
            }
            let g: f64 = line.parse().map_err(|_| err("not a decimal ordinate"))?;
            if !(g > 0.0 && g.is_finite()) {
                return Err(err("ordinate must be positive"));
            }
            if ordinates.last().is_some_and(|&p| g <= p) {
                return Err(Error::Monotonicity { file: source.into(), line: i + 1, value: g });
            }
            ordinates.push(g);
        }
        if ordinates.is_empty() {
            return Err(Error::Parse { file: source.into(), line: last_line, msg: "no ordinates".into() });
        }
        let coverage_height = coverage.ok_or_else(|| Error::MissingCoverage(source.into()))?;
        let table = Self { ordinates, coverage_height, source: source.into() };
        table.validate()?;
        Ok(table)
    }
}

pub fn load_zero_table(path: &Path) -> Result<ZeroTable> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    ZeroTable::parse(&text, &path.display().to_string())
}

/// Root of `θ(t) = nπ` near `guess`.
fn gram_point(n: i64, mut t: f64) -> f64 {
    let target = n as f64 * PI;
    for _ in 0..50 {
        let d = 0.5 * digamma_re_quarter(t) - 0.5 * PI.ln();
        let step = (riemann_siegel_theta(t) - target) / d;
        t -= step;
        if step.abs() < 1e-13 * t.max(1.0) {
            break;
        }
    }
    t
}

fn sign_changes(pts: &[(f64, f64)]) -> Vec<(f64, f64)> {
    pts.windows(2).filter(|w| w[0].1 * w[1].1 < 0.0).map(|w| (w[0].0, w[1].0)).collect()
}

/// Zeros in `[lo, hi]` when `expected` are known to be there (Rosser block).
fn block_zeros(lo: f64, hi: f64, gram: &[f64], expected: usize) -> Result<Vec<f64>> {
    let mut pts: Vec<(f64, f64)> = gram.iter().map(|&t| (t, hardy_z(t))).collect();
    for _ in 0..12 {
        let found = sign_changes(&pts);
        if found.len() > expected {
            return Err(Error::DomainError(format!(
                "{} sign changes of Z in [{lo}, {hi}], expected {expected}",
                found.len()
            )));
        }
        if found.len() == expected {
            return found
                .into_iter()
                .map(|(a, b)| brent(hardy_z, a, b, 1e-12).ok_or_else(|| Error::DomainError(format!("Brent failed on [{a}, {b}]"))))
                .collect();
        }
        // refine every subinterval
        let mut next = Vec::with_capacity(2 * pts.len());
        for w in pts.windows(2) {
            next.push(w[0]);
            let m = 0.5 * (w[0].0 + w[1].0);
            next.push((m, hardy_z(m)));
        }
        next.push(*pts.last().unwrap());
        pts = next;
    }
    Err(Error::DomainError(format!("missing zeros of Z in [{lo}, {hi}] after refinement")))
}

/// All zeros with `0 < γ < g`, where `g ≥ height` is the first good Gram
/// point at or above `height`; Rosser blocks between good Gram points are
/// checked to contain exactly as many sign changes of `Z` as Gram intervals.
pub fn generate_zeros(height: f64) -> Result<ZeroTable> {
    if !(height >= 20.0 && height <= 1e5) {
        return Err(Error::InvalidParams(format!("zero generation height must lie in [20, 1e5], got {height}")));
    }
    let mut n = -1i64;
    let mut g = gram_point(-1, 9.6669);
    let good = |n: i64, g: f64| if n.rem_euclid(2) == 0 { hardy_z(g) > 0.0 } else { hardy_z(g) < 0.0 };
    debug_assert!(good(n, g));
    let mut ordinates = Vec::new();
    loop {
        let mut block = vec![g];
        let start = n;
        loop {
            let t = *block.last().unwrap();
            n += 1;
            let next = gram_point(n, t + 2.0 * PI / (t / (2.0 * PI)).ln().max(0.5));
            block.push(next);
            if good(n, next) {
                break;
            }
        }
        let lo = block[0];
        let hi = *block.last().unwrap();
        ordinates.extend(block_zeros(lo, hi, &block, (n - start) as usize)?);
        g = hi;
        if g >= height {
            break;
        }
    }
    let table = ZeroTable { ordinates, coverage_height: g, source: format!("generated to {height}") };
    table.validate()?;
    Ok(table)
}

/// `γ₁ ≈ 14.134725`.
pub fn find_first_zero() -> f64 {
    brent(hardy_z, 14.0, 14.3, 1e-13).expect("Z changes sign on [14, 14.3]")
}
