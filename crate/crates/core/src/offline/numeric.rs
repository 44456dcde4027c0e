//! Certified comparison of sums of edge lengths.
//!
//! A length is bracketed as `[lo, hi] / 2^p` with integer `lo`, `hi`.
//! Cartesian lengths come from an integer square root; circle chords
//! `2 sin(pi d)` from fixed-point series with an explicit error allowance.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::geometry::{Edge, Instance};
use crate::rational::Rational;

const START_PRECISION: u32 = 128;
const MAX_PRECISION: u32 = 2048;
const GUARD: u32 = 64;

/// Outcome of a certified comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthOrdering {
    Decided(Ordering),
    /// Intervals still overlap at the maximum precision.
    Unresolved,
}

/// `atan(1/k) * 2^p`, truncated termwise.
fn atan_inv(k: u32, p: u32) -> BigInt {
    let one = BigInt::one() << p;
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let mut power = one / &k;
    let mut sum = BigInt::zero();
    let mut m = 0u32;
    while !power.is_zero() {
        let term = &power / (2 * m + 1);
        if m % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        m += 1;
    }
    sum
}

fn pi_fixed(p: u32) -> BigInt {
    atan_inv(5, p) * 16 - atan_inv(239, p) * 4
}

fn sin_fixed(x: &BigInt, p: u32) -> BigInt {
    let x2 = (x * x) >> p;
    let mut term = x.clone();
    let mut sum = BigInt::zero();
    let mut k: u64 = 1;
    let mut positive = true;
    while !term.is_zero() {
        if positive {
            sum += &term;
        } else {
            sum -= &term;
        }
        term = ((&term * &x2) >> p) / BigInt::from((2 * k) * (2 * k + 1));
        k += 1;
        positive = !positive;
    }
    sum
}

fn floor_shift(v: &BigInt, s: u32) -> BigInt {
    // arithmetic shift floors for negatives too
    v >> s
}

fn ceil_shift(v: &BigInt, s: u32) -> BigInt {
    -((-v) >> s)
}

/// Interval `[lo, hi]` (scaled by `2^p`) containing the length of `e`.
fn length_interval(inst: &Instance, e: Edge, p: u32, pi: &BigInt) -> (BigInt, BigInt) {
    let (a, b) = (inst.point(e.0), inst.point(e.1));
    if let (Some(ta), Some(tb)) = (&a.angle, &b.angle) {
        let delta = (ta - tb).fract();
        let other = &Rational::one() - &delta;
        let d = delta.min(other);
        let big_p = p + GUARD;
        let x = (pi * d.numer()) / d.denom();
        let s = sin_fixed(&x, big_p) * 2;
        // pi, the product and the series each lose a bounded number of ulps
        let err = BigInt::from(64u64 * (big_p as u64 + 8));
        return (floor_shift(&(&s - &err), GUARD), ceil_shift(&(&s + &err), GUARD));
    }
    let dx = &a.x - &b.x;
    let dy = &a.y - &b.y;
    let sq = &(&dx * &dx) + &(&dy * &dy);
    let scaled = (sq.numer() << (2 * p)) / sq.denom();
    debug_assert!(scaled.sign() != Sign::Minus);
    let s = scaled.sqrt();
    let hi = &s + 1;
    (s, hi)
}

fn sum_interval(inst: &Instance, edges: &[Edge], p: u32, pi: &BigInt) -> (BigInt, BigInt) {
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    for &e in edges {
        let (l, h) = length_interval(inst, e, p, pi);
        lo += l;
        hi += h;
    }
    (lo, hi)
}

/// Compares the total Euclidean lengths of two edge sets. Shared edges cancel
/// before any numerics.
pub fn compare_total_length(inst: &Instance, a: &[Edge], b: &[Edge]) -> LengthOrdering {
    let only_a: Vec<Edge> = a.iter().copied().filter(|e| !b.contains(e)).collect();
    let only_b: Vec<Edge> = b.iter().copied().filter(|e| !a.contains(e)).collect();
    if only_a.is_empty() && only_b.is_empty() {
        return LengthOrdering::Decided(Ordering::Equal);
    }
    let mut p = START_PRECISION;
    while p <= MAX_PRECISION {
        let pi = pi_fixed(p + GUARD);
        let (alo, ahi) = sum_interval(inst, &only_a, p, &pi);
        let (blo, bhi) = sum_interval(inst, &only_b, p, &pi);
        if ahi < blo {
            return LengthOrdering::Decided(Ordering::Less);
        }
        if alo > bhi {
            return LengthOrdering::Decided(Ordering::Greater);
        }
        p *= 2;
    }
    LengthOrdering::Unresolved
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{GeometryClass, Kind, Point};

    #[test]
    fn pi_digits() {
        let p = 200;
        let pi = pi_fixed(p);
        // 3.14159265358979323846 * 10^20
        let scaled = (&pi * BigInt::from(10u64).pow(20)) >> p;
        assert_eq!(scaled, "314159265358979323846".parse::<BigInt>().unwrap());
    }

    #[test]
    fn chord_of_quarter_turn_is_sqrt2() {
        let pts = vec![
            Point::on_circle(Rational::zero()),
            Point::on_circle(Rational::new(1, 4)),
        ];
        let inst = Instance::new(pts, Kind::Mnm, GeometryClass::Circle).unwrap();
        let p = 128;
        let pi = pi_fixed(p + GUARD);
        let (lo, hi) = length_interval(&inst, (0, 1), p, &pi);
        let sqrt2 = (BigInt::from(2) << (2 * p)).sqrt();
        assert!(lo <= sqrt2 && sqrt2 <= hi);
        assert!(&hi - &lo <= BigInt::from(4));
    }

    #[test]
    fn square_sides_tie_and_diagonals_lose() {
        let pts = vec![Point::xy(0, 0), Point::xy(1, 0), Point::xy(1, 1), Point::xy(0, 1)];
        let inst = Instance::new(pts, Kind::Mnm, GeometryClass::Convex).unwrap();
        let h = [(0, 1), (2, 3)];
        let v = [(0, 3), (1, 2)];
        let d = [(0, 2), (1, 3)];
        assert_eq!(compare_total_length(&inst, &h, &v), LengthOrdering::Unresolved);
        assert_eq!(compare_total_length(&inst, &h, &d), LengthOrdering::Decided(Ordering::Less));
        assert_eq!(compare_total_length(&inst, &h, &h), LengthOrdering::Decided(Ordering::Equal));
    }
}
