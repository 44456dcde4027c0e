//! Exact planar geometry for online non-crossing matching.
//!
//! Circle points carry an exact turn-fraction angle and every predicate on
//! them is answered from angular order. Other points use exact rational
//! coordinates. Instances in convex position cache their clockwise hull rank,
//! which turns crossing tests into integer interleaving checks.

mod avail;
mod hull;
mod instance;
mod matching;
mod predicates;

pub use avail::{available_set, AvailabilityTracker};
pub use hull::{hull_order, hull_order_points, parity};
pub use instance::{Color, GeometryClass, Instance, Kind, Point};
pub use matching::{Edge, Matching};
pub use predicates::{cmp_x, half_plane_side, orientation, segments_cross, Orientation, Side};
