//! Exact rationals in canonical form.
//!
//! A thin value type over `num-bigint`: the denominator is always positive and
//! coprime to the numerator, so structural equality is numeric equality.
//! Ordering cross-multiplies, which stays cheap for the deep dyadic angles the
//! adversary generators produce.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: BigInt,
    denom: BigInt,
}

impl Rational {
    /// Builds `numer / denom` in lowest terms. Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let (mut numer, mut denom) = (numer.into(), denom.into());
        assert!(!denom.is_zero(), "zero denominator");
        if let (Some(p), Some(q)) = (numer.to_i64(), denom.to_i64()) {
            if p != i64::MIN && q != i64::MIN {
                let g = p.gcd(&q) * q.signum();
                return Rational {
                    numer: BigInt::from(p / g),
                    denom: BigInt::from(q / g),
                };
            }
        }
        if denom.is_negative() {
            numer = -numer;
            denom = -denom;
        }
        let g = numer.gcd(&denom);
        if !g.is_one() {
            numer /= &g;
            denom /= &g;
        }
        Rational { numer, denom }
    }

    /// `numer / 2^exp` in lowest terms.
    pub fn dyadic(numer: BigInt, exp: u64) -> Self {
        let shift = numer.trailing_zeros().unwrap_or(exp).min(exp);
        Rational {
            numer: numer >> shift,
            denom: BigInt::one() << (exp - shift),
        }
    }

    /// `Some(e)` when the denominator is `2^e`.
    fn pow2_exponent(&self) -> Option<u64> {
        let tz = self.denom.trailing_zeros()?;
        (self.denom.bits() == tz + 1).then_some(tz)
    }

    /// The value as an `i64`, if it is an integer of magnitude below `2^62`.
    pub fn to_small_int(&self) -> Option<i64> {
        if !self.denom.is_one() {
            return None;
        }
        self.numer.to_i64().filter(|v| v.unsigned_abs() < 1 << 62)
    }

    pub fn integer(v: impl Into<BigInt>) -> Self {
        Rational {
            numer: v.into(),
            denom: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn numer(&self) -> &BigInt {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        match self.numer.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn abs(&self) -> Self {
        Rational {
            numer: self.numer.abs(),
            denom: self.denom.clone(),
        }
    }

    /// `self / 2`.
    pub fn half(&self) -> Self {
        Rational::new(self.numer.clone(), &self.denom * 2)
    }

    /// Largest integer not exceeding `self`.
    pub fn floor(&self) -> BigInt {
        self.numer.div_floor(&self.denom)
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(&self) -> Self {
        let f = self.floor();
        Rational::new(&self.numer - f * &self.denom, self.denom.clone())
    }

    /// Nearest `f64` (to about 2^-128 absolute), for rendering and float filters only.
    pub fn to_f64(&self) -> f64 {
        if self.numer.bits() <= 1000 && self.denom.bits() <= 1000 {
            let n = self.numer.to_f64().unwrap_or(f64::NAN);
            let d = self.denom.to_f64().unwrap_or(f64::NAN);
            return n / d;
        }
        let scaled = (&self.numer << 128u32) / &self.denom;
        scaled.to_f64().unwrap_or(f64::NAN) / 2f64.powi(128)
    }

    /// Closest rational with the given denominator to an `f64` value.
    pub fn approximate(value: f64, denom: i64) -> Self {
        Rational::new(BigInt::from((value * denom as f64).round() as i64), denom)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.denom == other.denom {
            return self.numer.cmp(&other.numer);
        }
        if let (Some(a), Some(b)) = (self.pow2_exponent(), other.pow2_exponent()) {
            return if a < b {
                (&self.numer << (b - a)).cmp(&other.numer)
            } else {
                self.numer.cmp(&(&other.numer << (a - b)))
            };
        }
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        if self.denom == rhs.denom {
            return Rational::new(&self.numer + &rhs.numer, self.denom.clone());
        }
        Rational::new(
            &self.numer * &rhs.denom + &rhs.numer * &self.denom,
            &self.denom * &rhs.denom,
        )
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational::new(&self.numer * &rhs.numer, &self.denom * &rhs.denom)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational::new(&self.numer * &rhs.denom, &self.denom * &rhs.numer)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

impl fmt::Display for Rational {
    /// Always `p/q`, never a decimal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(Rational::new(p, q))
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn canonical_form() {
        let x = r(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(r(0, -5), Rational::zero());
        assert_eq!(x.to_string(), "-3/2");
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        assert_eq!("3/9".parse::<Rational>().unwrap(), r(1, 3));
        assert_eq!("-7".parse::<Rational>().unwrap(), r(-7, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("0.5".parse::<Rational>().is_err());
    }

    #[test]
    fn floor_and_fract() {
        assert_eq!(r(-1, 4).floor(), BigInt::from(-1));
        assert_eq!(r(-1, 4).fract(), r(3, 4));
        assert_eq!(r(9, 4).fract(), r(1, 4));
    }

    #[test]
    fn deep_dyadic_to_f64_is_finite() {
        let tiny = Rational::new(BigInt::from(3), BigInt::from(1) << 2000u32);
        assert_eq!(tiny.to_f64(), 0.0);
        let near_half = &r(1, 2) + &tiny;
        assert!((near_half.to_f64() - 0.5).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn ordering_matches_f64(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let (x, y) = (r(a, b), r(c, d));
            let exact = (a as i128 * d as i128).cmp(&(c as i128 * b as i128));
            prop_assert_eq!(x.cmp(&y), exact);
        }

        #[test]
        fn dyadic_ordering_matches_cross_multiplication(a in -1i64 << 40..1 << 40, e in 0u64..90, c in -1i64 << 40..1 << 40, f in 0u64..90) {
            let (x, y) = (Rational::dyadic(a.into(), e), Rational::dyadic(c.into(), f));
            let exact = (BigInt::from(a) << f).cmp(&(BigInt::from(c) << e));
            prop_assert_eq!(x.cmp(&y), exact);
            prop_assert_eq!(x.clone(), Rational::new(a, BigInt::one() << e));
        }

        #[test]
        fn field_identities(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let (x, y) = (r(a, b), r(c, d));
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !y.is_zero() {
                prop_assert_eq!(&(&x * &y) / &y, x);
            }
        }
    }
}
