use super::harness::{Decision, OnlineAlgorithm, Player, StartInfo, TapeReader, View};
use crate::codecs::AdviceTape;
use crate::error::Result;
use crate::geometry::Instance;

/// Matches every arrival to its smallest available point; no advice.
#[derive(Debug, Clone, Copy, Default)]
pub struct Greedy;

struct GreedyPlayer;

impl Player for GreedyPlayer {
    fn start(&mut self, _: &StartInfo, _: &mut TapeReader<'_>) -> Result<()> {
        Ok(())
    }

    fn decide(&mut self, view: &View<'_>, _: &mut TapeReader<'_>) -> Result<Decision> {
        Ok(match view.available().first() {
            Some(&j) => Decision::Match(j),
            None => Decision::Skip,
        })
    }
}

impl OnlineAlgorithm for Greedy {
    fn name(&self) -> String {
        "greedy".into()
    }

    fn oracle(&self, _: &Instance, _: &mut AdviceTape) -> Result<()> {
        Ok(())
    }

    fn player(&self) -> Box<dyn Player> {
        Box::new(GreedyPlayer)
    }

    fn knows_n(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{GeometryClass, Kind, Point};
    use crate::online::simulate;

    #[test]
    fn two_points() {
        let inst = Instance::new(vec![Point::xy(0, 0), Point::xy(1, 1)], Kind::Mnm, GeometryClass::General).unwrap();
        let r = simulate(&Greedy, &inst).unwrap();
        assert_eq!(r.matching.len(), 1);
        assert_eq!(r.bits_written, 0);
    }

    #[test]
    fn square_diagonal_arrivals_strand_points() {
        // 1 and 2 are opposite corners, so greedy draws a diagonal
        let pts = vec![Point::xy(0, 0), Point::xy(1, 1), Point::xy(1, 0), Point::xy(0, 1)];
        let inst = Instance::new(pts, Kind::Mnm, GeometryClass::Convex).unwrap();
        let r = simulate(&Greedy, &inst).unwrap();
        assert_eq!(r.matching.len(), 1);
        assert!(r.violations.is_valid());
    }
}
