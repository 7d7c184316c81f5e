//! Exact arithmetic substrate: big integers and rationals (GMP-backed),
//! truncated power series over the rationals, generalized binomials,
//! integer partitions and symmetric-function identities.

mod binomial;
mod partitions;
mod series;
mod symmetric;

pub use rug::Integer as BigInt;
pub use rug::Rational as BigRational;

pub use binomial::{binomial, gen_binomial};
pub use partitions::{partitions, PartitionMultiplicity};
pub use series::TruncatedSeries;
pub use symmetric::{conjugate, determinant, jacobi_trudi_schur, newton_e_from_p};
