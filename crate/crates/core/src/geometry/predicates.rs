use std::cmp::Ordering;

use super::Point;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Counter-clockwise turn.
    Left,
    /// Clockwise turn.
    Right,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Left => Orientation::Right,
            Orientation::Right => Orientation::Left,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Counter-clockwise turn distance from `from` to `to`, in `[0, 1)`.
fn ccw_turn(from: &Rational, to: &Rational) -> Rational {
    (to - from).fract()
}

/// Sign of `(b - a) x (c - a)`.
///
/// When all three points lie on the unit circle the answer comes from their
/// angular order: `c` is left of `a -> b` iff, walking counter-clockwise from
/// `a`, `b` is met before `c`.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    if let (Some(ta), Some(tb), Some(tc)) = (&a.angle, &b.angle, &c.angle) {
        if ta == tb || tb == tc || ta == tc {
            return Orientation::Collinear;
        }
        return match ccw_turn(ta, tb).cmp(&ccw_turn(ta, tc)) {
            Ordering::Less => Orientation::Left,
            _ => Orientation::Right,
        };
    }
    let small = [&a.x, &a.y, &b.x, &b.y, &c.x, &c.y].map(|v| v.to_small_int().map(i128::from));
    if let [Some(ax), Some(ay), Some(bx), Some(by), Some(cx), Some(cy)] = small {
        return match ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)).cmp(&0) {
            Ordering::Greater => Orientation::Left,
            Ordering::Less => Orientation::Right,
            Ordering::Equal => Orientation::Collinear,
        };
    }
    let cross = &(&(&b.x - &a.x) * &(&c.y - &a.y)) - &(&(&b.y - &a.y) * &(&c.x - &a.x));
    match cross.signum() {
        Ordering::Greater => Orientation::Left,
        Ordering::Less => Orientation::Right,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// `q` lies inside the bounding box of `p`–`r` (used once `p, q, r` are
/// known to be collinear).
fn within_box(p: &Point, q: &Point, r: &Point) -> bool {
    let between = |a: &Rational, b: &Rational, c: &Rational| b >= a.min(c) && b <= a.max(c);
    between(&p.x, &q.x, &r.x) && between(&p.y, &q.y, &r.y)
}

/// Whether the closed segments `e1` and `e2` intersect.
///
/// Endpoints must be four distinct points; a shared endpoint is an error
/// because a matched point is never reused.
pub fn segments_cross(e1: (&Point, &Point), e2: (&Point, &Point)) -> Result<bool> {
    let (p1, q1) = e1;
    let (p2, q2) = e2;
    if p1.coincides(p2) || p1.coincides(q2) || q1.coincides(p2) || q1.coincides(q2) {
        return Err(Error::SharedEndpoint);
    }
    let o1 = orientation(p1, q1, p2);
    let o2 = orientation(p1, q1, q2);
    let o3 = orientation(p2, q2, p1);
    let o4 = orientation(p2, q2, q1);

    use Orientation::Collinear;
    if o1 != o2 && o3 != o4 && [o1, o2, o3, o4].iter().all(|o| *o != Collinear) {
        return Ok(true);
    }
    if o1 == Collinear && within_box(p1, p2, q1)
        || o2 == Collinear && within_box(p1, q2, q1)
        || o3 == Collinear && within_box(p2, p1, q2)
        || o4 == Collinear && within_box(p2, q1, q2)
    {
        return Ok(true);
    }
    Ok(false)
}

/// Side of the directed line `from -> to` on which `p` lies.
pub fn half_plane_side(edge: (&Point, &Point), p: &Point) -> Result<Side> {
    match orientation(edge.0, edge.1, p) {
        Orientation::Left => Ok(Side::Left),
        Orientation::Right => Ok(Side::Right),
        Orientation::Collinear => Err(Error::Degenerate(format!(
            "{p:?} is collinear with {:?} -> {:?}",
            edge.0, edge.1
        ))),
    }
}

/// Exact comparison of x-coordinates.
///
/// For two circle points, `x = cos(2*pi*t)` is decided by the turn distance
/// to angle 0: closer to 0 means larger x.
pub fn cmp_x(a: &Point, b: &Point) -> Ordering {
    if let (Some(ta), Some(tb)) = (&a.angle, &b.angle) {
        let dist = |t: &Rational| {
            let other = &Rational::one() - t;
            t.clone().min(other)
        };
        return dist(tb).cmp(&dist(ta));
    }
    a.x.cmp(&b.x)
}
