//! The online simulation harness and the advice algorithms.
//!
//! An [`OnlineAlgorithm`] is an oracle, which sees the whole instance and
//! writes an [`AdviceTape`], plus a [`Player`] factory. [`simulate`] runs the
//! oracle, then feeds points to a fresh player one at a time through a
//! [`View`] of the revealed prefix, rejecting any match to a point outside
//! the current available set.

mod asap;
mod bt;
mod greedy;
mod harness;
mod sorted;

pub use asap::{AsapMatching, TieBreak};
pub use bt::{BtMatching, BtReplay};
pub use greedy::Greedy;
pub use harness::{
    simulate, Decision, OnlineAlgorithm, Player, SimulationResult, StartInfo, StepRecord, TapeReader,
    View,
};
pub use sorted::SortedMatching;
