//! Offline perfect non-crossing matchings and the matching-to-tree transform.

mod bt;
mod convex_pm;
mod min_length;
mod numeric;
mod validate;

pub use bt::matching_to_bt;
pub use convex_pm::convex_noncrossing_pm;
pub use min_length::{
    enumerate_perfect_matchings, min_length_pm, min_length_pm_with, MinLengthConfig,
    DEFAULT_BRUTE_FORCE_CAP,
};
pub use numeric::{compare_total_length, LengthOrdering};
pub use validate::{validate_matching, ValidationReport};
