use crate::error::{Error, Result};
use crate::geometry::{hull_order, Color, Instance, Kind, Matching};

/// A perfect non-crossing matching of a convex-position instance.
///
/// The first point of each arc is matched to the first point, clockwise,
/// that leaves a balanced arc in between; both arcs are then solved
/// recursively.
pub fn convex_noncrossing_pm(inst: &Instance) -> Result<Matching> {
    if !inst.is_convex_position() {
        return Err(Error::NotConvex(0));
    }
    let order = hull_order(inst)?;
    let mut m = Matching::new();
    // explicit stack of arcs as ranges into `order`
    let mut stack = vec![(0usize, order.len())];
    while let Some((lo, hi)) = stack.pop() {
        if lo == hi {
            continue;
        }
        let first = order[lo];
        let mut balance: i64 = 0;
        let mut partner = None;
        for t in lo + 1..hi {
            let q = order[t];
            let balanced = match inst.kind() {
                Kind::Mnm => (t - lo) % 2 == 1,
                Kind::Bnm => balance == 0 && inst.compatible(first, q),
            };
            if balanced {
                partner = Some(t);
                break;
            }
            balance += match inst.point(q).color {
                Some(Color::Blue) => 1,
                Some(Color::Red) => -1,
                None => 0,
            };
        }
        let Some(t) = partner else {
            return Err(Error::NotPerfect(format!(
                "no balanced partner for point {} on its arc",
                first + 1
            )));
        };
        m.insert(first, order[t])?;
        assert!(balanced_arc(inst, &order[lo + 1..t]));
        assert!(balanced_arc(inst, &order[t + 1..hi]));
        stack.push((t + 1, hi));
        stack.push((lo + 1, t));
    }
    Ok(m)
}

fn balanced_arc(inst: &Instance, arc: &[usize]) -> bool {
    match inst.kind() {
        Kind::Mnm => arc.len() % 2 == 0,
        Kind::Bnm => {
            let blue = arc.iter().filter(|&&i| inst.point(i).color == Some(Color::Blue)).count();
            2 * blue == arc.len()
        }
    }
}
