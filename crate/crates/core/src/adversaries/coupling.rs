//! Per-match indicators for a simulation on a Markov instance.
//!
//! At the `i`-th match, made at time `T`, the available points other than the
//! chosen partner split into `A^0` (clockwise between `p_T` and the partner)
//! and `A^1`. `X_i` flags that `p_T` is a parent and the next arrival isolates
//! a point; `Y_i` is the same event with `P_T` replaced by `1 - F_T`:
//!
//! | occupancy | X_i                    |
//! |-----------|------------------------|
//! | `00`      | `P_T F_{T+1}`          |
//! | `0+`      | `P_T (1 - R_T)`        |
//! | `+0`      | `P_T R_T`              |
//! | `++`      | `P_T (1 - F_{T+1})`    |

use serde::Serialize;

use super::AnnotatedInstance;
use crate::error::{Error, Result};
use crate::online::{Decision, SimulationResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Occupancy {
    #[serde(rename = "00")]
    Neither,
    /// `A^0` empty, `A^1` not.
    #[serde(rename = "0+")]
    OnlyCounterClockwise,
    /// `A^0` not empty, `A^1` empty.
    #[serde(rename = "+0")]
    OnlyClockwise,
    #[serde(rename = "++")]
    Both,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatchRecord {
    /// 1-based arrival time of the matching point.
    pub time: usize,
    pub occupancy: Occupancy,
    /// `None` at the last arrival, where `F_{T+1}` has no point to act on.
    pub x: Option<u8>,
    pub y: Option<u8>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CouplingReport {
    pub matches: Vec<MatchRecord>,
    pub unmatched: usize,
    /// Unmatched points at the end of the input; none of them can be matched
    /// any more.
    pub isolated: usize,
}

impl CouplingReport {
    pub fn sum_x(&self) -> usize {
        self.matches.iter().filter_map(|m| m.x).map(usize::from).sum()
    }

    pub fn y_never_exceeds_x(&self) -> bool {
        self.matches.iter().all(|m| m.y <= m.x)
    }

    /// `(sum, count)` of `Y_i` over even 1-based match indices.
    pub fn even_y(&self) -> (usize, usize) {
        let mut sum = 0;
        let mut count = 0;
        for (i, m) in self.matches.iter().enumerate() {
            if (i + 1) % 2 == 0 {
                if let Some(y) = m.y {
                    sum += y as usize;
                    count += 1;
                }
            }
        }
        (sum, count)
    }
}

pub fn coupling_diagnostics(ai: &AnnotatedInstance, sim: &SimulationResult) -> Result<CouplingReport> {
    let trace = ai
        .markov()
        .ok_or_else(|| Error::Precondition("coupling diagnostics need a Markov instance".into()))?;
    let inst = &ai.instance;
    let rank = inst.hull_rank().ok_or(Error::NotConvex(0))?;
    let m = rank.len();
    let cw = |a: usize, b: usize| (rank[b] + m - rank[a]) % m;

    let mut matches = Vec::new();
    for step in &sim.log {
        let Decision::Match(j) = step.decision else {
            continue;
        };
        let i = step.index;
        let t = i + 1;
        let mut clockwise = 0;
        let mut counter = 0;
        for &q in step.available.iter().filter(|&&q| q != j) {
            if cw(i, q) < cw(i, j) {
                clockwise += 1;
            } else {
                counter += 1;
            }
        }
        let occupancy = match (clockwise > 0, counter > 0) {
            (false, false) => Occupancy::Neither,
            (false, true) => Occupancy::OnlyCounterClockwise,
            (true, false) => Occupancy::OnlyClockwise,
            (true, true) => Occupancy::Both,
        };
        let (x, y) = if t == m {
            (None, None)
        } else {
            let event = match occupancy {
                Occupancy::Neither => trace.f(t + 1),
                Occupancy::OnlyCounterClockwise => 1 - trace.r(t),
                Occupancy::OnlyClockwise => trace.r(t),
                Occupancy::Both => 1 - trace.f(t + 1),
            };
            (Some(trace.p(t) * event), Some((1 - trace.f(t)) * event))
        };
        matches.push(MatchRecord { time: t, occupancy, x, y });
    }
    let unmatched = m - sim.matching.matched_points();
    Ok(CouplingReport {
        matches,
        unmatched,
        isolated: unmatched,
    })
}
