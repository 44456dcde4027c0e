use num_bigint::BigUint;
use serde::Serialize;

use crate::codecs::{elias_delta_decode, read_ranked, AdviceTape};
use crate::error::{Error, Result};
use crate::geometry::{AvailabilityTracker, Edge, Instance, Kind, Matching, Point};
use crate::offline::{validate_matching, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "action", content = "target")]
pub enum Decision {
    Skip,
    Match(usize),
}

/// What a player learns before the first online point.
#[derive(Debug, Clone, Copy)]
pub struct StartInfo {
    pub kind: Kind,
    /// Present when the algorithm is told `n` up front. Always present for
    /// BNM, where the blue points are given in advance.
    pub n: Option<usize>,
}

/// Read-only access to the advice.
pub struct TapeReader<'t> {
    tape: &'t mut AdviceTape,
}

impl TapeReader<'_> {
    pub fn read_bit(&mut self) -> Result<bool> {
        self.tape.read_bit()
    }

    pub fn read_bits(&mut self, k: usize) -> Result<Vec<bool>> {
        self.tape.read_bits(k)
    }

    pub fn read_ranked(&mut self, universe: &BigUint) -> Result<BigUint> {
        read_ranked(self.tape, universe)
    }

    pub fn read_elias_delta(&mut self) -> Result<u64> {
        elias_delta_decode(self.tape)
    }
}

/// The revealed part of the input at one step.
pub struct View<'v> {
    instance: &'v Instance,
    tracker: &'v AvailabilityTracker<'v>,
    current: usize,
    available: &'v [usize],
}

impl<'v> View<'v> {
    /// Index of the point that just arrived.
    pub fn current(&self) -> usize {
        self.current
    }

    /// A revealed point. Panics on points that have not arrived.
    pub fn point(&self, i: usize) -> &'v Point {
        assert!(self.tracker.has_arrived(i), "point {i} has not arrived yet");
        self.instance.point(i)
    }

    pub fn has_arrived(&self, i: usize) -> bool {
        self.tracker.has_arrived(i)
    }

    /// Indices of all revealed points, ascending.
    pub fn revealed(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.instance.len()).filter(|&i| self.tracker.has_arrived(i))
    }

    /// Points the current point may be matched to.
    pub fn available(&self) -> &'v [usize] {
        self.available
    }

    pub fn partner(&self, i: usize) -> Option<usize> {
        self.tracker.partner(i)
    }

    pub fn edges(&self) -> &[Edge] {
        self.tracker.edges()
    }
}

pub trait Player {
    fn start(&mut self, info: &StartInfo, tape: &mut TapeReader<'_>) -> Result<()>;
    fn decide(&mut self, view: &View<'_>, tape: &mut TapeReader<'_>) -> Result<Decision>;
}

pub trait OnlineAlgorithm: Sync {
    fn name(&self) -> String;

    /// Rejects instances outside the algorithm's input class.
    fn check(&self, _instance: &Instance) -> Result<()> {
        Ok(())
    }

    fn oracle(&self, instance: &Instance, tape: &mut AdviceTape) -> Result<()>;

    fn player(&self) -> Box<dyn Player>;

    fn knows_n(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub index: usize,
    pub decision: Decision,
    /// The available set the player saw.
    pub available: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimulationResult {
    pub matching: Matching,
    pub bits_written: usize,
    pub bits_read: usize,
    pub log: Vec<StepRecord>,
    pub violations: ValidationReport,
}

impl SimulationResult {
    pub fn matched_points(&self) -> usize {
        self.matching.matched_points()
    }

    pub fn is_perfect(&self, instance: &Instance) -> bool {
        self.violations.is_valid() && self.matching.matched_points() == instance.len()
    }
}

/// Runs `alg` on `instance`.
///
/// For BNM the blue points are revealed together before the first red one and
/// only red arrivals are decision steps.
pub fn simulate(alg: &dyn OnlineAlgorithm, instance: &Instance) -> Result<SimulationResult> {
    alg.check(instance)?;
    let mut tape = AdviceTape::new();
    alg.oracle(instance, &mut tape)?;
    let bits_written = tape.bits_written();
    tape.rewind();

    let mut tracker = AvailabilityTracker::new(instance);
    let online = match instance.kind() {
        Kind::Bnm => {
            for b in instance.first_half() {
                tracker.arrive(b);
            }
            instance.second_half()
        }
        Kind::Mnm => 0..instance.len(),
    };
    let info = StartInfo {
        kind: instance.kind(),
        n: (instance.kind() == Kind::Bnm || alg.knows_n()).then_some(instance.n()),
    };

    let mut player = alg.player();
    let mut reader = TapeReader { tape: &mut tape };
    player.start(&info, &mut reader)?;
    let mut log = Vec::with_capacity(online.len());
    for i in online {
        tracker.arrive(i);
        let available = tracker.available(i);
        let decision = {
            let view = View {
                instance,
                tracker: &tracker,
                current: i,
                available: &available,
            };
            player.decide(&view, &mut reader)?
        };
        if let Decision::Match(j) = decision {
            if !available.contains(&j) {
                return Err(Error::IllegalMatch { point: i, target: j });
            }
            tracker.commit(i, j);
        }
        log.push(StepRecord {
            index: i,
            decision,
            available,
        });
    }
    let bits_read = tape.bits_read();
    let matching = tracker.matching()?;
    let violations = validate_matching(instance, &matching, false);
    Ok(SimulationResult {
        matching,
        bits_written,
        bits_read,
        log,
        violations,
    })
}
