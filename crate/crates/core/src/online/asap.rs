use num_bigint::BigUint;

use super::harness::{Decision, OnlineAlgorithm, Player, StartInfo, TapeReader, View};
use crate::codecs::{
    catalan, dyck_rank, dyck_unrank, elias_delta_encode, write_ranked, AdviceTape, DyckWord,
};
use crate::error::{Error, Result};
use crate::geometry::{parity, AvailabilityTracker, Instance, Kind};

/// Which available point an ASAP player picks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    Smallest,
    Largest,
}

impl TieBreak {
    fn pick(self, available: &[usize]) -> Option<usize> {
        match self {
            TieBreak::Smallest => available.first().copied(),
            TieBreak::Largest => available.last().copied(),
        }
    }
}

/// Matches a point as soon as an opposite-parity point is available. The
/// advice is the Dyck word of match/skip decisions.
#[derive(Debug, Clone, Copy, Default)]
pub struct AsapMatching {
    /// When false the advice starts with the Elias delta code of `n`.
    pub unknown_n: bool,
    pub tie_break: TieBreak,
}

impl AsapMatching {
    /// The decision word the player will follow on `instance`.
    pub fn decision_word(&self, instance: &Instance) -> Result<DyckWord> {
        let chi = parity(instance)?;
        let mut tracker = AvailabilityTracker::new(instance);
        let mut bits = Vec::with_capacity(instance.len());
        for i in 0..instance.len() {
            tracker.arrive(i);
            let avail = tracker.available(i);
            let matchable = avail.iter().any(|&j| chi[j] != chi[i]);
            if matchable {
                let j = self.tie_break.pick(&avail).unwrap();
                debug_assert_ne!(chi[j], chi[i]);
                tracker.commit(i, j);
            }
            bits.push(matchable);
        }
        DyckWord::new(bits)
    }
}

impl OnlineAlgorithm for AsapMatching {
    fn name(&self) -> String {
        let mut s = String::from("asap");
        if self.unknown_n {
            s.push_str("-unknown-n");
        }
        if self.tie_break == TieBreak::Largest {
            s.push_str("-largest");
        }
        s
    }

    fn check(&self, instance: &Instance) -> Result<()> {
        if instance.kind() != Kind::Mnm {
            return Err(Error::Precondition("ASAP matching is for MNM instances".into()));
        }
        if !instance.is_convex_position() {
            return Err(Error::Precondition("ASAP matching needs points in convex position".into()));
        }
        Ok(())
    }

    fn oracle(&self, instance: &Instance, tape: &mut AdviceTape) -> Result<()> {
        let word = self.decision_word(instance)?;
        if self.unknown_n {
            tape.write_bits(&elias_delta_encode(instance.n() as u64));
        }
        write_ranked(tape, &dyck_rank(&word), &catalan(instance.n()))
    }

    fn player(&self) -> Box<dyn Player> {
        Box::new(AsapPlayer {
            tie_break: self.tie_break,
            word: Vec::new(),
            step: 0,
        })
    }

    fn knows_n(&self) -> bool {
        !self.unknown_n
    }
}

struct AsapPlayer {
    tie_break: TieBreak,
    word: Vec<bool>,
    step: usize,
}

impl Player for AsapPlayer {
    fn start(&mut self, info: &StartInfo, tape: &mut TapeReader<'_>) -> Result<()> {
        let n = match info.n {
            Some(n) => n,
            None => tape.read_elias_delta()? as usize,
        };
        let universe: BigUint = catalan(n);
        let rank = tape.read_ranked(&universe)?;
        self.word = dyck_unrank(n, &rank)?.bits().to_vec();
        Ok(())
    }

    fn decide(&mut self, view: &View<'_>, _: &mut TapeReader<'_>) -> Result<Decision> {
        let bit = *self
            .word
            .get(self.step)
            .ok_or_else(|| Error::Precondition("more points than the advice describes".into()))?;
        self.step += 1;
        if !bit {
            return Ok(Decision::Skip);
        }
        match self.tie_break.pick(view.available()) {
            Some(j) => Ok(Decision::Match(j)),
            None => Err(Error::Precondition(format!(
                "advice asks point {} to match but nothing is available",
                view.current() + 1
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{GeometryClass, Point};
    use crate::online::simulate;
    use crate::Rational;

    fn circle(turns: &[i64], denom: i64) -> Instance {
        let pts = turns.iter().map(|&t| Point::on_circle(Rational::new(t, denom))).collect();
        Instance::new(pts, Kind::Mnm, GeometryClass::Circle).unwrap()
    }

    #[test]
    fn two_points() {
        let inst = circle(&[0, 1], 2);
        assert_eq!(AsapMatching::default().decision_word(&inst).unwrap().to_string(), "01");
        let r = simulate(&AsapMatching::default(), &inst).unwrap();
        assert_eq!(r.bits_read, 0);
        assert!(r.is_perfect(&inst));
    }

    #[test]
    fn hexagon_known_and_unknown_n() {
        let inst = circle(&[0, 3, 1, 4, 2, 5, 7, 6, 9, 8, 11, 10], 12);
        for tie_break in [TieBreak::Smallest, TieBreak::Largest] {
            let known = AsapMatching { unknown_n: false, tie_break };
            let r = simulate(&known, &inst).unwrap();
            assert!(r.is_perfect(&inst));
            assert_eq!(r.bits_read, 8);
            assert_eq!(r.bits_written, 8);
            let unknown = AsapMatching { unknown_n: true, tie_break };
            let r = simulate(&unknown, &inst).unwrap();
            assert!(r.is_perfect(&inst));
            // delta(6) = 0 11 10
            assert_eq!(r.bits_read, 8 + 5);
        }
    }

    #[test]
    fn general_position_rejected() {
        let pts = vec![Point::xy(0, 0), Point::xy(4, 0), Point::xy(1, 1), Point::xy(2, 5)];
        let inst = Instance::new(pts, Kind::Mnm, GeometryClass::General).unwrap();
        assert!(matches!(simulate(&AsapMatching::default(), &inst), Err(Error::Precondition(_))));
    }
}
