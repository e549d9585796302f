//! Beurling–Selberg type extremal functions for
//! `f_α(x) = log((4 + x²)/((α − 1/2)² + x²))` and the machinery that turns
//! them into conditional bounds for `log |ζ(α + it)|`.
//!
//! * [`analysis`]: the target family, digamma, quadrature, compensated sums.
//! * [`extremal`]: minorant/majorant evaluation, Fourier transforms, L¹ gaps.
//! * [`arith`]: von Mangoldt sieve, zero tables, Euler–Maclaurin zeta.
//! * [`explicit`]: the itemized explicit-formula ledger.
//! * [`bounds`]: Hadamard identity, sandwich checks, prime-sum lemmas,
//!   asymptotics, theorem evaluators and Littlewood constants.
//! * [`verify`]: the acceptance matrix, shared by the CLI and the tests.

pub mod analysis;
pub mod arith;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod explicit;
pub mod extremal;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
