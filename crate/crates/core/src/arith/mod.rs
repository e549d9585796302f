//! Number-theoretic backend: von Mangoldt sieve, zero tables, and
//! Euler–Maclaurin evaluation of ζ(s).

mod roots;
mod sieve;
mod zeros;
mod zeta;

pub use roots::brent;
pub use sieve::{sieve_von_mangoldt, VonMangoldtTable, MAX_SIEVE_LIMIT};
pub use zeros::{
    find_first_zero, generate_zeros, load_zero_table, riemann_von_mangoldt, zero_count_tolerance, ZeroTable,
};
pub use zeta::{hardy_z, log_abs_zeta, riemann_siegel_theta, zeta_euler_maclaurin, zeta_raw, LogZeta, ZetaValue};

use std::path::PathBuf;

/// Environment variable naming the default data directory.
pub const DATA_ENV: &str = "EXTREMAL_ZETA_DATA";
pub const ZERO_FILE: &str = "zeros_5000.txt";

/// `$EXTREMAL_ZETA_DATA`, falling back to the `data/` directory shipped with
/// the crate.
pub fn default_data_dir() -> PathBuf {
    match std::env::var_os(DATA_ENV) {
        Some(d) if !d.is_empty() => PathBuf::from(d),
        _ => PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data")),
    }
}

/// The shipped zero table (complete to just above height 5000).
pub fn default_zero_table() -> crate::Result<ZeroTable> {
    load_zero_table(&default_data_dir().join(ZERO_FILE))
}
