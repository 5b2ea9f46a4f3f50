use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::chords::{Chord, ChordOrPoint};
use crate::circle::{Angle, Degree};
use crate::lamination::Lamination;

/// One parameter `t` of the family and where the leaf `{t, 1 - t}` goes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SawtoothStep {
    pub t: Angle,
    /// `None` when the image leaf is a point.
    pub image: Option<Angle>,
    /// Branch of the sawtooth containing `t`, `0..d`.
    pub branch: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SawtoothReport {
    pub steps: Vec<SawtoothStep>,
    /// Every leaf image agrees with the piecewise-linear sawtooth.
    pub matches: bool,
    pub nested: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapfreeFamily {
    pub lamination: Lamination,
    pub report: SawtoothReport,
}

/// The `d^n - 1` leaves `{t, 1 - t}` with `t = k / (2 d^n)` in `(0, 1/2)`.
pub fn gapfree_family(d: Degree, n: u32) -> GapfreeFamily {
    let dd = BigInt::from(d.get());
    let den = BigInt::from(2) * num_traits::pow(dd.clone(), n as usize);
    let count = num_traits::pow(dd.clone(), n as usize);
    let mut params = Vec::new();
    let mut k = BigInt::one();
    while k < count {
        params.push(Angle::wrap(BigRational::new(k.clone(), den.clone())));
        k += 1;
    }
    let leaf = |t: &Angle| Chord::new(t.clone(), Angle::wrap(-t.as_rational().clone())).unwrap();
    let lamination = Lamination::new_unchecked(d, params.iter().map(leaf));
    let half = BigRational::new(1.into(), 2.into());
    let dq = BigRational::from_integer(dd);
    let mut steps = Vec::with_capacity(params.len());
    let mut matches = true;
    for t in &params {
        // branch j covers [j/2d, (j+1)/2d]; even branches rise, odd ones fall
        let x = t.as_rational() * &dq;
        let j = (&x / &half).floor().to_integer();
        let s = if j.is_even() {
            &x - BigRational::from_integer(j.clone()) * &half
        } else {
            BigRational::from_integer(&j + 1) * &half - &x
        };
        let expect = if s.is_zero() || s == half { None } else { Some(Angle::wrap(s)) };
        let got = match lamination.image(&leaf(t)) {
            ChordOrPoint::Point(_) => None,
            ChordOrPoint::Chord(c) => Some(c.lo().clone()),
        };
        matches &= got == expect;
        steps.push(SawtoothStep { t: t.clone(), image: got, branch: j.to_u32().unwrap().min(d.get() - 1) });
    }
    let nested = lamination.leaves().len() == params.len() && crate::lamination::validate(&lamination).unlinked_ok == Some(true);
    GapfreeFamily { lamination, report: SawtoothReport { steps, matches, nested } }
}
