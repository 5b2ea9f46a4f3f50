//! The circle `ℝ/ℤ` with exact rational points, the map `σ_d`, and orbits.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Degree of the covering `σ_d`; always at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(u32);

impl Degree {
    pub const TWO: Degree = Degree(2);
    pub const THREE: Degree = Degree(3);

    pub fn new(d: u32) -> Result<Degree, Error> {
        if d < 2 {
            Err(Error::InvalidDegree(d))
        } else {
            Ok(Degree(d))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for Degree {
    type Error = Error;
    fn try_from(d: u32) -> Result<Self, Error> {
        Degree::new(d)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A point of the circle: a reduced fraction in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Angle(BigRational);

impl Angle {
    pub fn zero() -> Angle {
        Angle(BigRational::zero())
    }

    /// `p/q` reduced modulo 1. Panics if `q == 0`.
    pub fn frac(p: i64, q: i64) -> Angle {
        Angle::wrap(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Reduce an arbitrary rational modulo 1.
    pub fn wrap(r: BigRational) -> Angle {
        let floor = r.floor();
        Angle(r - floor)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Length of the positive arc from `self` to `other`, in `[0, 1)`.
    pub fn ccw_to(&self, other: &Angle) -> BigRational {
        let diff = &other.0 - &self.0;
        if diff.is_negative() {
            diff + BigRational::one()
        } else {
            diff
        }
    }

    /// Arc-length distance on the circle, in `[0, 1/2]`.
    pub fn distance(&self, other: &Angle) -> BigRational {
        let a = self.ccw_to(other);
        let b = other.ccw_to(self);
        if a < b {
            a
        } else {
            b
        }
    }

    /// The point `self + r` on the circle.
    pub fn shift(&self, r: &BigRational) -> Angle {
        Angle::wrap(&self.0 + r)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Strict literal grammar: `0`, or `p/q` with `0 < p < q` and `gcd(p, q) = 1`.
impl FromStr for Angle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Angle, Error> {
        let bad = || Error::BadAngle(s.to_string());
        if s == "0" {
            return Ok(Angle::zero());
        }
        let (p, q) = s.split_once('/').ok_or_else(bad)?;
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !digits(p) || !digits(q) {
            return Err(bad());
        }
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if p.is_zero() || p >= q || !p.gcd(&q).is_one() {
            return Err(bad());
        }
        Ok(Angle(BigRational::new_raw(p, q)))
    }
}

/// `σ_d(a) = d·a mod 1`.
pub fn sigma(d: Degree, a: &Angle) -> Angle {
    Angle::wrap(&a.0 * BigInt::from(d.0))
}

/// `σ_d` iterated `n` times.
pub fn sigma_n(d: Degree, a: &Angle, n: usize) -> Angle {
    let mut x = a.clone();
    for _ in 0..n {
        x = sigma(d, &x);
    }
    x
}

/// The `d` solutions of `σ_d(x) = a`, ascending.
pub fn preimages(d: Degree, a: &Angle) -> Vec<Angle> {
    let dd = BigInt::from(d.0);
    (0..d.0)
        .map(|k| Angle((&a.0 + BigInt::from(k)) / &dd))
        .collect()
}

/// `a, b, c` are distinct and positively ordered on the circle.
pub fn in_cyclic_order(a: &Angle, b: &Angle, c: &Angle) -> bool {
    (a < b && b < c) || (b < c && c < a) || (c < a && a < b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrbitInfo {
    pub preperiod: usize,
    pub period: usize,
}

impl OrbitInfo {
    pub fn is_periodic(&self) -> bool {
        self.preperiod == 0
    }
}

pub fn orbit_info(d: Degree, a: &Angle) -> OrbitInfo {
    let mut seen: BTreeMap<Angle, usize> = BTreeMap::new();
    let mut x = a.clone();
    let mut i = 0;
    loop {
        if let Some(&j) = seen.get(&x) {
            return OrbitInfo { preperiod: j, period: i - j };
        }
        let next = sigma(d, &x);
        seen.insert(x, i);
        x = next;
        i += 1;
    }
}

pub fn is_periodic(d: Degree, a: &Angle) -> bool {
    orbit_info(d, a).is_periodic()
}
