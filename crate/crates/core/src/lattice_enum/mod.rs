//! Brute-force dynamic programming over lattice paths. Every closed form and
//! kernel-method series in the crate is checked against these counts.
//!
//! Two path models are covered:
//!
//! - North/East paths in the plane below a line `y = (a x + b) / c`
//!   ([`count_ne_below`]);
//! - directed walks with unit x-steps and integer altitude jumps, encoded by a
//!   [`JumpPolynomial`] ([`count_directed`], [`CountTable`]).
//!
//! The affine map `(x, y) -> (x + y, a x - c y + b)` links the two
//! ([`map_point`], [`map_path`]).

mod area;
mod directed;
mod distance;
mod jumps;
mod ne;
mod slope;

pub use area::{excursion_area_table, mean_excursion_area, AreaRow};
pub use directed::{count_directed, weighted_count_directed, CountTable};
pub use distance::{count_w_t, distance_profile, min_y_distance, DistanceProfile};
pub use jumps::JumpPolynomial;
pub use ne::{count_ne_below, map_path, map_point};
pub use slope::{LatticeStep, RationalSlope, Strictness};
