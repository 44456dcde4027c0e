//! The Markov-chain circle adversary.
//!
//! `p_1` is the North pole, `p_2` the South pole and a parent. From parent
//! `p_i` the next point goes to the midpoint of the arc adjacent to `p_i` on
//! side `R_i` (0: clockwise, 1: counter-clockwise). With `F_{i+1} = 1` that
//! point is fake and the point after it, placed on the other side of `p_i`,
//! becomes the parent. All turns are dyadic.

use std::collections::BTreeSet;
use std::ops::Bound;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{AnnotatedInstance, Hidden};
use crate::error::Result;
use crate::geometry::{GeometryClass, Instance, Kind, Point};
use crate::rational::Rational;

/// Identifier of the bit source, recorded in instance metadata.
pub const RNG_ID: &str = "rand_chacha::ChaCha8Rng::seed_from_u64";

/// Hidden state of one trace. Vectors are indexed by the 1-based point
/// number; entry 0 is unused.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkovTrace {
    pub seed: u64,
    pub rng: String,
    /// `F_1 .. F_{2n+1}`.
    #[serde(with = "bitstring")]
    pub fake_bits: Vec<bool>,
    /// `R_1 .. R_{2n+1}`.
    #[serde(with = "bitstring")]
    pub side_bits: Vec<bool>,
    /// `P_1 .. P_{2n}`.
    #[serde(with = "bitstring")]
    pub parent: Vec<bool>,
}

impl MarkovTrace {
    pub fn f(&self, i: usize) -> u8 {
        self.fake_bits[i] as u8
    }

    pub fn r(&self, i: usize) -> u8 {
        self.side_bits[i] as u8
    }

    pub fn p(&self, i: usize) -> u8 {
        self.parent[i] as u8
    }

    /// Whether `P_i = 1 - P_{i-1} F_i` for every `2 <= i <= 2n`.
    pub fn satisfies_parent_recursion(&self) -> bool {
        (2..self.parent.len()).all(|i| self.p(i) == 1 - self.p(i - 1) * self.f(i))
    }
}

mod bitstring {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(bits: &[bool], s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&bits.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<bool>, D::Error> {
        let s = String::deserialize(d)?;
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(serde::de::Error::custom(format!("bad bit {c:?}"))),
            })
            .collect()
    }
}

/// Angles are kept as integer numerators over a fixed `2^exp`; every arc
/// split halves an arc, so `exp = 2n + 2` leaves room for all of them.
struct Arcs {
    occupied: BTreeSet<BigInt>,
    full: BigInt,
}

impl Arcs {
    /// Midpoint of the arc leaving `a` on `side` (false: clockwise).
    fn midpoint(&self, a: &BigInt, side: bool) -> BigInt {
        let (len, dir) = if side {
            let d = self
                .occupied
                .range((Bound::Excluded(a), Bound::Unbounded))
                .next()
                .or_else(|| self.occupied.first())
                .unwrap();
            ((d - a).mod_floor(&self.full), BigInt::one())
        } else {
            let c = self
                .occupied
                .range((Bound::Unbounded, Bound::Excluded(a)))
                .next_back()
                .or_else(|| self.occupied.last())
                .unwrap();
            ((a - c).mod_floor(&self.full), -BigInt::one())
        };
        debug_assert!(len.is_even());
        (a + (len >> 1u32) * dir).mod_floor(&self.full)
    }
}

pub fn markov_instance(n: usize, seed: u64) -> Result<AnnotatedInstance> {
    assert!(n >= 1);
    let total = 2 * n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fake_bits = vec![false; total + 2];
    let mut side_bits = vec![false; total + 2];
    for i in 1..=total + 1 {
        fake_bits[i] = rng.gen();
        side_bits[i] = rng.gen();
    }

    let exp = (total + 2) as u64;
    let full = BigInt::one() << exp;
    let mut turns = vec![&full >> 2u32, (&full >> 2u32) * 3];
    let mut arcs = Arcs {
        occupied: turns.iter().cloned().collect(),
        full,
    };
    let mut parent = vec![false, false, true];
    let mut current = 2;
    while turns.len() < total {
        let side = side_bits[current];
        let here = turns[current - 1].clone();
        let next = arcs.midpoint(&here, side);
        arcs.occupied.insert(next.clone());
        turns.push(next);
        let idx = turns.len();
        if fake_bits[idx] {
            parent.push(false);
            if turns.len() < total {
                let other = arcs.midpoint(&here, !side);
                arcs.occupied.insert(other.clone());
                turns.push(other);
                parent.push(true);
                current = idx + 1;
            }
        } else {
            parent.push(true);
            current = idx;
        }
    }

    let points = turns
        .into_iter()
        .map(|t| Point::on_circle(Rational::dyadic(t, exp)))
        .collect();
    let instance = Instance::new(points, Kind::Mnm, GeometryClass::Circle)?;
    Ok(AnnotatedInstance {
        instance,
        hidden: Hidden::Markov(MarkovTrace {
            seed,
            rng: RNG_ID.to_string(),
            fake_bits,
            side_bits,
            parent,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_is_two_poles() {
        let ai = markov_instance(1, 3).unwrap();
        let t: Vec<_> = ai.instance.points().iter().map(|p| p.angle.clone().unwrap()).collect();
        assert_eq!(t, vec![Rational::new(1, 4), Rational::new(3, 4)]);
    }

    #[test]
    fn deterministic_and_recursive() {
        for seed in 0..20 {
            let a = markov_instance(30, seed).unwrap();
            let b = markov_instance(30, seed).unwrap();
            assert_eq!(a.instance.points(), b.instance.points());
            let trace = a.markov().unwrap();
            assert_eq!(trace, b.markov().unwrap());
            assert!(trace.satisfies_parent_recursion());
            assert_eq!(trace.parent.len(), 61);
            for p in a.instance.points() {
                // dyadic: the reduced denominator is a power of two
                let d = p.angle.as_ref().unwrap().denom().clone();
                assert!((&d & (&d - num_bigint::BigInt::one())) == num_bigint::BigInt::from(0));
            }
        }
    }

    /// Straight rational-arithmetic replay of the process from the stored bits.
    fn replay(trace: &MarkovTrace, total: usize) -> Vec<Rational> {
        let mid = |occ: &BTreeSet<Rational>, a: &Rational, side: bool| {
            if side {
                let d = occ.iter().find(|t| *t > a).or_else(|| occ.first()).unwrap();
                (a + &(d - a).fract().half()).fract()
            } else {
                let c = occ.iter().rev().find(|t| *t < a).or_else(|| occ.last()).unwrap();
                (a - &(a - c).fract().half()).fract()
            }
        };
        let mut turns = vec![Rational::new(1, 4), Rational::new(3, 4)];
        let mut occ: BTreeSet<Rational> = turns.iter().cloned().collect();
        let mut parent = 2;
        while turns.len() < total {
            let here = turns[parent - 1].clone();
            let side = trace.side_bits[parent];
            let next = mid(&occ, &here, side);
            occ.insert(next.clone());
            turns.push(next);
            parent = turns.len();
            if trace.fake_bits[parent] && turns.len() < total {
                let other = mid(&occ, &here, !side);
                occ.insert(other.clone());
                turns.push(other);
                parent = turns.len();
            }
        }
        turns
    }

    #[test]
    fn matches_rational_replay() {
        for seed in 0..30 {
            let ai = markov_instance(25, seed).unwrap();
            let trace = ai.markov().unwrap();
            let got: Vec<Rational> = ai.instance.points().iter().map(|p| p.angle.clone().unwrap()).collect();
            assert_eq!(got, replay(trace, 50), "seed {seed}");
        }
    }

    #[test]
    fn first_move_follows_side_bit() {
        for seed in 0..10 {
            let ai = markov_instance(2, seed).unwrap();
            let trace = ai.markov().unwrap();
            let p3 = ai.instance.point(2).angle.clone().unwrap();
            // clockwise from the South pole is the western half
            let expected = if trace.side_bits[2] { Rational::zero() } else { Rational::new(1, 2) };
            assert_eq!(p3, expected);
        }
    }
}
