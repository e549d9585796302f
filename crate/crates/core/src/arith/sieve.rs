use crate::error::{Error, Result};
use crate::report::sig17;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

pub const MAX_SIEVE_LIMIT: u64 = 100_000_000;

/// `Λ(n)` for the prime powers `n ≤ limit`, ascending in `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct VonMangoldtTable {
    pub limit: u64,
    pub entries: Vec<(u64, f64)>,
}

/// Linear sieve of smallest prime factors, then `Λ(p^k) = log p`.
pub fn sieve_von_mangoldt(limit: u64) -> Result<VonMangoldtTable> {
    if !(2..=MAX_SIEVE_LIMIT).contains(&limit) {
        return Err(Error::LimitExceeded(limit));
    }
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    let mut primes: Vec<u32> = Vec::new();
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u32);
        }
        let si = spf[i];
        for &p in &primes {
            let m = i * p as usize;
            if p > si || m > n {
                break;
            }
            spf[m] = p;
        }
    }
    let mut entries = Vec::new();
    for i in 2..=n {
        let p = spf[i] as usize;
        let mut m = i;
        while m % p == 0 {
            m /= p;
        }
        if m == 1 {
            entries.push((i as u64, (p as f64).ln()));
        }
    }
    Ok(VonMangoldtTable { limit, entries })
}

impl VonMangoldtTable {
    /// `Λ(n)`, zero off the prime powers.
    pub fn lambda(&self, n: u64) -> f64 {
        match self.entries.binary_search_by_key(&n, |e| e.0) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0.0,
        }
    }

    /// Chebyshev `ψ(x) = Σ_{n ≤ x} Λ(n)`.
    pub fn chebyshev(&self, x: u64) -> f64 {
        self.entries.iter().take_while(|e| e.0 <= x).map(|e| e.1).sum()
    }

    pub fn require(&self, needed: u64) -> Result<()> {
        if self.limit < needed {
            Err(Error::TableTooSmall { limit: self.limit, required: needed })
        } else {
            Ok(())
        }
    }

    /// Entries up to `limit` only.
    pub fn truncated(&self, limit: u64) -> Self {
        let limit = limit.min(self.limit);
        Self { limit, entries: self.entries.iter().copied().filter(|e| e.0 <= limit).collect() }
    }

    /// CSV cache: a `# limit=N` line, the header `n,lambda`, then one row per
    /// prime power with 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "# limit={}", self.limit)?;
        writeln!(w, "n,lambda")?;
        for (n, l) in &self.entries {
            writeln!(w, "{n},{}", sig17(*l))?;
        }
        Ok(())
    }

    pub fn read_csv<R: BufRead>(r: R) -> Result<Self> {
        let mut limit = None;
        let mut header = false;
        let mut entries = Vec::new();
        for line in r.lines() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                if let Some(v) = c.trim().strip_prefix("limit=") {
                    limit = Some(v.trim().parse::<u64>().map_err(|e| Error::Format(format!("limit: {e}")))?);
                }
                continue;
            }
            if !header {
                if line != "n,lambda" {
                    return Err(Error::Format(format!("expected header n,lambda, got {line:?}")));
                }
                header = true;
                continue;
            }
            let (n, l) = line.split_once(',').ok_or_else(|| Error::Format(format!("bad row {line:?}")))?;
            let n: u64 = n.trim().parse().map_err(|e| Error::Format(format!("n in {line:?}: {e}")))?;
            let l: f64 = l.trim().parse().map_err(|e| Error::Format(format!("lambda in {line:?}: {e}")))?;
            entries.push((n, l));
        }
        if entries.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::Format("sieve cache rows are not ascending".into()));
        }
        let limit = limit.or_else(|| entries.last().map(|e| e.0)).unwrap_or(2);
        Ok(Self { limit, entries })
    }

    /// Reads the cache at `path` when it already reaches `limit`; otherwise
    /// sieves afresh and rewrites the file.
    pub fn load_or_build(path: &Path, limit: u64) -> Result<Self> {
        if let Ok(f) = fs::File::open(path) {
            if let Ok(t) = Self::read_csv(BufReader::new(f)) {
                if t.limit >= limit {
                    return Ok(t.truncated(limit));
                }
            }
        }
        let t = sieve_von_mangoldt(limit)?;
        if let Some(dir) = path.parent() {
            if !dir.as_os_str().is_empty() {
                fs::create_dir_all(dir)?;
            }
        }
        let mut f = std::io::BufWriter::new(fs::File::create(path)?);
        t.write_csv(&mut f)?;
        f.flush()?;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(n: u64) -> f64 {
        let mut p = 2;
        while p * p <= n && n % p != 0 {
            p += 1;
        }
        if n % p != 0 {
            p = n;
        }
        let mut m = n;
        while m % p == 0 {
            m /= p;
        }
        if m == 1 {
            (p as f64).ln()
        } else {
            0.0
        }
    }

    #[test]
    fn small_tables() {
        let t = sieve_von_mangoldt(10).unwrap();
        assert_eq!(t.lambda(8), 2f64.ln());
        assert_eq!(t.lambda(6), 0.0);
        let want = 3.0 * 2f64.ln() + 2.0 * 3f64.ln() + 5f64.ln() + 7f64.ln();
        assert!((t.chebyshev(10) - want).abs() < 1e-14);
        assert!((want - 2520f64.ln()).abs() < 1e-14);
        assert_eq!(sieve_von_mangoldt(2).unwrap().entries, vec![(2, 2f64.ln())]);
        assert!(sieve_von_mangoldt(1).is_err());
        assert!(sieve_von_mangoldt(MAX_SIEVE_LIMIT + 1).is_err());
    }

    #[test]
    fn matches_factorization() {
        let t = sieve_von_mangoldt(10_000).unwrap();
        for n in 2..=10_000 {
            assert_eq!(t.lambda(n), brute(n), "n={n}");
        }
    }

    #[test]
    fn chebyshev_near_x() {
        let t = sieve_von_mangoldt(200_000).unwrap();
        for &x in &[100u64, 1000, 10_000, 200_000] {
            let xf = x as f64;
            assert!((t.chebyshev(x) - xf).abs() <= 2.0 * xf.sqrt() * xf.ln());
        }
    }

    #[test]
    fn csv_round_trip_and_regeneration() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("lambda.csv");
        let t = VonMangoldtTable::load_or_build(&path, 600).unwrap();
        let back = VonMangoldtTable::read_csv(BufReader::new(fs::File::open(&path).unwrap())).unwrap();
        assert_eq!(back, t);
        let small = VonMangoldtTable::load_or_build(&path, 100).unwrap();
        assert_eq!(small.limit, 100);
        let big = VonMangoldtTable::load_or_build(&path, 1000).unwrap();
        assert_eq!(big.limit, 1000);
        let reread = VonMangoldtTable::read_csv(BufReader::new(fs::File::open(&path).unwrap())).unwrap();
        assert_eq!(reread.limit, 1000);
    }
}
