use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::hull::hull_order_points;
use super::predicates::{orientation, Orientation};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    /// Monochromatic: any two points may be matched.
    #[serde(rename = "MNM")]
    Mnm,
    /// Bichromatic: `n` blue points first, then `n` red points.
    #[serde(rename = "BNM")]
    Bnm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeometryClass {
    Circle,
    Convex,
    General,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Mnm => "MNM",
            Kind::Bnm => "BNM",
        })
    }
}

impl fmt::Display for GeometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeometryClass::Circle => "circle",
            GeometryClass::Convex => "convex",
            GeometryClass::General => "general",
        })
    }
}

/// A planar point.
///
/// `angle`, when present, is the exact position on the unit circle as a
/// fraction of a full counter-clockwise turn from `(1, 0)`, in `[0, 1)`; the
/// `x`/`y` fields of such a point are rendering placeholders.
#[derive(Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
    /// 1-based arrival index; assigned by [`Instance::new`].
    pub arrival: usize,
    pub color: Option<Color>,
    pub angle: Option<Rational>,
}

/// Denominator used for the Cartesian placeholders of circle points.
const PLACEHOLDER_DENOM: i64 = 1_000_000_000;

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point {
            x,
            y,
            arrival: 0,
            color: None,
            angle: None,
        }
    }

    pub fn xy(x: i64, y: i64) -> Self {
        Point::new(Rational::integer(x), Rational::integer(y))
    }

    /// A point on the unit circle at `turn` (reduced modulo 1).
    pub fn on_circle(turn: Rational) -> Self {
        let turn = turn.fract();
        let theta = turn.to_f64() * std::f64::consts::TAU;
        Point {
            x: Rational::approximate(theta.cos(), PLACEHOLDER_DENOM),
            y: Rational::approximate(theta.sin(), PLACEHOLDER_DENOM),
            arrival: 0,
            color: None,
            angle: Some(turn),
        }
    }

    pub fn with_color(mut self, color: Option<Color>) -> Self {
        self.color = color;
        self
    }

    /// Whether two points occupy the same location.
    pub fn coincides(&self, other: &Point) -> bool {
        match (&self.angle, &other.angle) {
            (Some(a), Some(b)) => a == b,
            _ => self.x == other.x && self.y == other.y,
        }
    }

    /// Float position for rendering.
    pub fn to_f64(&self) -> (f64, f64) {
        match &self.angle {
            Some(a) => {
                let t = a.to_f64() * std::f64::consts::TAU;
                (t.cos(), t.sin())
            }
            None => (self.x.to_f64(), self.y.to_f64()),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.angle {
            Some(a) => write!(f, "p{}@{}turn", self.arrival, a)?,
            None => write!(f, "p{}({}, {})", self.arrival, self.x, self.y)?,
        }
        if let Some(c) = self.color {
            write!(f, "[{c:?}]")?;
        }
        Ok(())
    }
}

/// An ordered point sequence with its problem kind and geometry class.
///
/// Indices used throughout the crate are 0-based positions in arrival order.
#[derive(Debug, Clone)]
pub struct Instance {
    points: Vec<Point>,
    kind: Kind,
    geometry: GeometryClass,
    n: usize,
    /// Clockwise hull rank of every point, with `p_1` at rank 0. Present for
    /// circle and convex instances.
    hull_rank: Option<Vec<usize>>,
}

impl Instance {
    /// Validates and builds an instance, assigning arrival indices in order.
    pub fn new(mut points: Vec<Point>, kind: Kind, geometry: GeometryClass) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidInstance(m));
        if points.is_empty() || points.len() % 2 != 0 {
            return bad(format!("need a positive even number of points, got {}", points.len()));
        }
        let n = points.len() / 2;
        for (i, p) in points.iter_mut().enumerate() {
            p.arrival = i + 1;
        }

        for (i, p) in points.iter().enumerate() {
            let expected = match kind {
                Kind::Mnm => None,
                Kind::Bnm if i < n => Some(Color::Blue),
                Kind::Bnm => Some(Color::Red),
            };
            if p.color != expected {
                return bad(format!("point {} has color {:?}, expected {:?}", i + 1, p.color, expected));
            }
            if (geometry == GeometryClass::Circle) != p.angle.is_some() {
                return bad(format!(
                    "point {} {} an angle but the instance geometry is {geometry}",
                    i + 1,
                    if p.angle.is_some() { "has" } else { "lacks" }
                ));
            }
            if let Some(a) = &p.angle {
                if a.signum() == Ordering::Less || *a >= Rational::one() {
                    return bad(format!("point {} has angle {a} outside [0, 1)", i + 1));
                }
            }
        }

        let mut order: Vec<usize> = (0..points.len()).collect();
        let key_cmp = |a: &Point, b: &Point| match (&a.angle, &b.angle) {
            (Some(x), Some(y)) => x.cmp(y),
            _ => (&a.x, &a.y).cmp(&(&b.x, &b.y)),
        };
        order.sort_by(|&a, &b| key_cmp(&points[a], &points[b]));
        for w in order.windows(2) {
            if points[w[0]].coincides(&points[w[1]]) {
                return Err(Error::Degenerate(format!(
                    "points {} and {} coincide",
                    w[0] + 1,
                    w[1] + 1
                )));
            }
        }

        let hull_rank = match geometry {
            GeometryClass::Circle | GeometryClass::Convex => {
                let refs: Vec<&Point> = points.iter().collect();
                let order = hull_order_points(&refs)?;
                let mut rank = vec![0; points.len()];
                for (r, &i) in order.iter().enumerate() {
                    rank[i] = r;
                }
                Some(rank)
            }
            GeometryClass::General => {
                check_no_three_collinear(&points)?;
                None
            }
        };

        Ok(Instance {
            points,
            kind,
            geometry,
            n,
            hull_rank,
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn geometry(&self) -> GeometryClass {
        self.geometry
    }

    /// Half the point count (MNM) or the per-color count (BNM).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Clockwise hull rank per point, when the instance is in convex position.
    pub fn hull_rank(&self) -> Option<&[usize]> {
        self.hull_rank.as_deref()
    }

    pub fn is_convex_position(&self) -> bool {
        self.hull_rank.is_some()
    }

    /// Whether `i` and `j` may be matched as far as colors go.
    pub fn compatible(&self, i: usize, j: usize) -> bool {
        i != j
            && match self.kind {
                Kind::Mnm => true,
                Kind::Bnm => self.points[i].color != self.points[j].color,
            }
    }

    /// Orientation of the index triple `(a, b, c)`.
    pub fn orient(&self, a: usize, b: usize, c: usize) -> Orientation {
        match &self.hull_rank {
            Some(rank) => {
                if a == b || b == c || a == c {
                    return Orientation::Collinear;
                }
                let m = rank.len();
                let cw = |x: usize, y: usize| (rank[y] + m - rank[x]) % m;
                if cw(a, c) < cw(a, b) {
                    Orientation::Left
                } else {
                    Orientation::Right
                }
            }
            None => orientation(&self.points[a], &self.points[b], &self.points[c]),
        }
    }

    /// Whether the segments `e1` and `e2` (index pairs with four distinct
    /// endpoints) intersect.
    pub fn crosses(&self, e1: (usize, usize), e2: (usize, usize)) -> Result<bool> {
        let (a, b) = e1;
        let (c, d) = e2;
        if a == c || a == d || b == c || b == d {
            return Err(Error::SharedEndpoint);
        }
        match &self.hull_rank {
            Some(rank) => {
                let (lo, hi) = if rank[a] < rank[b] { (rank[a], rank[b]) } else { (rank[b], rank[a]) };
                let inside = |r: usize| lo < r && r < hi;
                Ok(inside(rank[c]) != inside(rank[d]))
            }
            None => super::segments_cross(
                (&self.points[a], &self.points[b]),
                (&self.points[c], &self.points[d]),
            ),
        }
    }

    /// Blue indices (BNM) or the first half (MNM).
    pub fn first_half(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Red indices (BNM) or the second half (MNM).
    pub fn second_half(&self) -> std::ops::Range<usize> {
        self.n..2 * self.n
    }
}

fn check_no_three_collinear(points: &[Point]) -> Result<()> {
    let m = points.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if orientation(&points[a], &points[b], &points[c]) == Orientation::Collinear {
                    return Err(Error::Degenerate(format!(
                        "points {}, {} and {} are collinear",
                        a + 1,
                        b + 1,
                        c + 1
                    )));
                }
            }
        }
    }
    Ok(())
}
