//! Random instances for the algorithm campaigns.
//!
//! Circle instances use distinct dyadic turns `k / 2^20`. Convex instances put
//! exact rational points on an axis-scaled unit circle through the rational
//! parametrization `((1 - t^2) / (1 + t^2), 2t / (1 + t^2))`. General instances
//! have integer coordinates, distinct `x` and no three collinear points.
//! BNM instances pick a random blue half and shuffle each color separately.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{orientation, Color, GeometryClass, Instance, Kind, Orientation, Point};
use crate::rational::Rational;

const CIRCLE_BITS: u32 = 20;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Colors and orders `2n` distinct locations according to `kind`.
fn arrange(mut points: Vec<Point>, kind: Kind, geometry: GeometryClass, rng: &mut impl Rng) -> Instance {
    points.shuffle(rng);
    if kind == Kind::Bnm {
        let n = points.len() / 2;
        for (i, p) in points.iter_mut().enumerate() {
            p.color = Some(if i < n { Color::Blue } else { Color::Red });
        }
    }
    Instance::new(points, kind, geometry).expect("generator produced an invalid instance")
}

pub fn random_circle(kind: Kind, n: usize, rng: &mut impl Rng) -> Instance {
    let mut ks = BTreeSet::new();
    while ks.len() < 2 * n {
        ks.insert(rng.gen_range(0..1i64 << CIRCLE_BITS));
    }
    let points = ks
        .into_iter()
        .map(|k| Point::on_circle(Rational::new(k, 1i64 << CIRCLE_BITS)))
        .collect();
    arrange(points, kind, GeometryClass::Circle, rng)
}

pub fn random_convex(kind: Kind, n: usize, rng: &mut impl Rng) -> Instance {
    const D: i64 = 64;
    let (sx, sy) = (rng.gen_range(1..=4i64), rng.gen_range(1..=4i64));
    let mut ts = BTreeSet::new();
    while ts.len() < 2 * n {
        ts.insert(rng.gen_range(-6 * D..=6 * D));
    }
    let points = ts
        .into_iter()
        .map(|k| {
            let (k, d) = (k as i128, D as i128);
            let den = d * d + k * k;
            Point::new(
                Rational::new(sx as i128 * (d * d - k * k), den),
                Rational::new(sy as i128 * 2 * k * d, den),
            )
        })
        .collect();
    arrange(points, kind, GeometryClass::Convex, rng)
}

pub fn random_general(kind: Kind, n: usize, rng: &mut impl Rng) -> Instance {
    let side = 1000 * n as i64;
    let mut points: Vec<Point> = Vec::with_capacity(2 * n);
    let mut xs = BTreeSet::new();
    while points.len() < 2 * n {
        let (x, y) = (rng.gen_range(0..side), rng.gen_range(0..side));
        if xs.contains(&x) {
            continue;
        }
        let p = Point::xy(x, y);
        let collinear = (0..points.len()).any(|a| {
            (a + 1..points.len()).any(|b| orientation(&points[a], &points[b], &p) == Orientation::Collinear)
        });
        if !collinear {
            xs.insert(x);
            points.push(p);
        }
    }
    arrange(points, kind, GeometryClass::General, rng)
}

/// Random instance of the given kind and geometry.
pub fn random_instance(kind: Kind, geometry: GeometryClass, n: usize, rng: &mut impl Rng) -> Instance {
    match geometry {
        GeometryClass::Circle => random_circle(kind, n, rng),
        GeometryClass::Convex => random_convex(kind, n, rng),
        GeometryClass::General => random_general(kind, n, rng),
    }
}
