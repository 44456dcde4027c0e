use std::cmp::Ordering;

use super::harness::{Decision, OnlineAlgorithm, Player, StartInfo, TapeReader, View};
use crate::codecs::AdviceTape;
use crate::error::{Error, Result};
use crate::geometry::{cmp_x, Instance, Kind};

/// Pairs x-consecutive points; 3 bits per edge.
#[derive(Debug, Clone, Copy, Default)]
pub struct SortedMatching;

fn x_order(instance: &Instance) -> Result<Vec<usize>> {
    let mut order: Vec<usize> = (0..instance.len()).collect();
    order.sort_by(|&a, &b| cmp_x(instance.point(a), instance.point(b)));
    for w in order.windows(2) {
        if cmp_x(instance.point(w[0]), instance.point(w[1])) == Ordering::Equal {
            return Err(Error::DuplicateX(w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    Ok(order)
}

impl OnlineAlgorithm for SortedMatching {
    fn name(&self) -> String {
        "sorted".into()
    }

    fn check(&self, instance: &Instance) -> Result<()> {
        if instance.kind() != Kind::Mnm {
            return Err(Error::Precondition("sorted matching is for MNM instances".into()));
        }
        x_order(instance).map(|_| ())
    }

    fn oracle(&self, instance: &Instance, tape: &mut AdviceTape) -> Result<()> {
        let order = x_order(instance)?;
        let mut partner = vec![0; instance.len()];
        for pair in order.chunks(2) {
            partner[pair[0]] = pair[1];
            partner[pair[1]] = pair[0];
        }
        for (i, &j) in partner.iter().enumerate() {
            if j > i {
                tape.write_bit(false);
            } else {
                tape.write_bit(true);
                let right = cmp_x(instance.point(j), instance.point(i)) == Ordering::Greater;
                tape.write_bit(right);
            }
        }
        Ok(())
    }

    fn player(&self) -> Box<dyn Player> {
        Box::new(SortedPlayer)
    }

    fn knows_n(&self) -> bool {
        false
    }
}

struct SortedPlayer;

impl Player for SortedPlayer {
    fn start(&mut self, _: &StartInfo, _: &mut TapeReader<'_>) -> Result<()> {
        Ok(())
    }

    fn decide(&mut self, view: &View<'_>, tape: &mut TapeReader<'_>) -> Result<Decision> {
        if !tape.read_bit()? {
            return Ok(Decision::Skip);
        }
        let want = if tape.read_bit()? { Ordering::Greater } else { Ordering::Less };
        let me = view.point(view.current());
        let nearest = view
            .revealed()
            .filter(|&j| j != view.current() && view.partner(j).is_none())
            .filter(|&j| cmp_x(view.point(j), me) == want)
            .min_by(|&a, &b| {
                let o = cmp_x(view.point(a), view.point(b));
                if want == Ordering::Greater { o } else { o.reverse() }
            });
        match nearest {
            Some(j) => Ok(Decision::Match(j)),
            None => Err(Error::Precondition(format!(
                "advice asks point {} to match on a side with no free point",
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

    #[test]
    fn two_points_three_bits() {
        let inst = Instance::new(vec![Point::xy(5, 0), Point::xy(1, 1)], Kind::Mnm, GeometryClass::General).unwrap();
        let mut tape = AdviceTape::new();
        SortedMatching.oracle(&inst, &mut tape).unwrap();
        // second point matches its right neighbour
        assert_eq!(tape.bits(), &[false, true, true]);
        let r = simulate(&SortedMatching, &inst).unwrap();
        assert_eq!(r.bits_read, 3);
        assert_eq!(r.matching.len(), 1);
    }

    #[test]
    fn duplicate_x() {
        let pts = vec![Point::xy(0, 0), Point::xy(1, 5), Point::xy(1, 1), Point::xy(3, 2)];
        let inst = Instance::new(pts, Kind::Mnm, GeometryClass::General).unwrap();
        assert_eq!(simulate(&SortedMatching, &inst).unwrap_err(), Error::DuplicateX(1, 2));
    }
}
