//! Online non-crossing matching in the plane, with advice.
//!
//! The crate is split along the lines of the problem:
//!
//! - [`geometry`]: exact predicates, convex-position structure, parity and
//!   available sets.
//! - [`codecs`]: Catalan objects (binary trees, Dyck words, 231-avoiding
//!   permutations), their ranks, and the advice tape with Elias delta coding.
//! - [`offline`]: offline perfect non-crossing matchings and the
//!   matching-to-tree transform.
//! - [`online`]: the online simulation harness and the advice algorithms
//!   (tree-guided, as-soon-as-possible, x-sorted) plus a greedy baseline.
//! - [`adversaries`]: lower-bound instance families, parity fingerprints,
//!   the Markov-chain adversary, and the exhaustive strategy-cover search.
//! - [`campaigns`]: the verification campaigns shared by the CLI and the
//!   acceptance suite.
//!
//! Everything is deterministic given its inputs and seed. Batch work goes
//! through [`par`], which uses rayon when the `parallel` feature is enabled
//! and falls back to plain iteration otherwise.

pub mod adversaries;
pub mod campaigns;
pub mod codecs;
pub mod error;
pub mod geometry;
pub mod io;
pub mod offline;
pub mod online;
pub mod par;
pub mod random;
pub mod rational;
pub mod svg;

pub use error::{Error, Result};
pub use geometry::{Color, GeometryClass, Instance, Kind, Matching, Point};
pub use rational::Rational;
