//! Exact enumeration and asymptotics of directed lattice paths below a line of
//! rational slope.
//!
//! The crate is split into five layers:
//!
//! - [`exactmath`]: big rationals, truncated power series, generalized
//!   binomials, integer partitions and symmetric functions.
//! - [`lattice_enum`]: brute-force dynamic programming counts used as the
//!   oracle for everything else.
//! - [`kernel_series`]: the kernel method, expressing meander generating
//!   functions through the small branches of `1 - z P(u) = 0`.
//! - [`closed_forms`]: binomial closed forms (rational Catalan numbers,
//!   Bizley/Grossman, the slope-2/5 sum, lattice path integrals).
//! - [`asymptotics`]: high precision singularity analysis, the constants
//!   `kappa_1`, `kappa_2` and the mean-area constant of the slope-2/3 model.

pub mod asymptotics;
pub mod closed_forms;
pub mod error;
pub mod exactmath;
pub mod kernel_series;
pub mod lattice_enum;

pub use error::{Error, Result};
pub use exactmath::{BigInt, BigRational, TruncatedSeries};
