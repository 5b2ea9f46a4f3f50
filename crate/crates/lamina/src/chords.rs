//! Chords of the closed disk, their images, crossing, and orientation of sibling sets.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::circle::{in_cyclic_order, sigma, Angle, Degree};
use crate::Error;

/// Unordered pair of distinct circle points, stored smaller first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    lo: Angle,
    hi: Angle,
}

impl Chord {
    pub fn new(x: Angle, y: Angle) -> Result<Chord, Error> {
        match x.cmp(&y) {
            core::cmp::Ordering::Less => Ok(Chord { lo: x, hi: y }),
            core::cmp::Ordering::Greater => Ok(Chord { lo: y, hi: x }),
            core::cmp::Ordering::Equal => Err(Error::DegenerateChord(x)),
        }
    }

    /// Shorthand for tests and fixtures: `Chord::frac((1, 7), (2, 7))`.
    pub fn frac(x: (i64, i64), y: (i64, i64)) -> Chord {
        Chord::new(Angle::frac(x.0, x.1), Angle::frac(y.0, y.1)).expect("distinct endpoints")
    }

    pub fn lo(&self) -> &Angle {
        &self.lo
    }

    pub fn hi(&self) -> &Angle {
        &self.hi
    }

    pub fn endpoints(&self) -> [&Angle; 2] {
        [&self.lo, &self.hi]
    }

    pub fn has_endpoint(&self, a: &Angle) -> bool {
        &self.lo == a || &self.hi == a
    }

    pub fn shares_endpoint(&self, other: &Chord) -> bool {
        self.has_endpoint(&other.lo) || self.has_endpoint(&other.hi)
    }

    /// Closed chords meet nowhere: no shared endpoint and no crossing.
    pub fn disjoint(&self, other: &Chord) -> bool {
        !self.shares_endpoint(other) && !crosses(self, other)
    }

    pub fn other(&self, a: &Angle) -> Option<&Angle> {
        if &self.lo == a {
            Some(&self.hi)
        } else if &self.hi == a {
            Some(&self.lo)
        } else {
            None
        }
    }

    /// `t` lies in the open arc `(lo, hi)`.
    pub fn separates(&self, t: &Angle) -> bool {
        &self.lo < t && t < &self.hi
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.lo, self.hi)
    }
}

impl fmt::Debug for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChordOrPoint {
    Chord(Chord),
    Point(Angle),
}

impl ChordOrPoint {
    pub fn chord(&self) -> Option<&Chord> {
        match self {
            ChordOrPoint::Chord(c) => Some(c),
            ChordOrPoint::Point(_) => None,
        }
    }
}

pub fn chord_image(d: Degree, c: &Chord) -> ChordOrPoint {
    let (x, y) = (sigma(d, &c.lo), sigma(d, &c.hi));
    match Chord::new(x, y) {
        Ok(img) => ChordOrPoint::Chord(img),
        Err(Error::DegenerateChord(p)) => ChordOrPoint::Point(p),
        Err(_) => unreachable!(),
    }
}

pub fn is_critical(d: Degree, c: &Chord) -> bool {
    sigma(d, &c.lo) == sigma(d, &c.hi)
}

/// Open chords meet inside the disk, i.e. the endpoints strictly interleave.
pub fn crosses(c1: &Chord, c2: &Chord) -> bool {
    if c1.shares_endpoint(c2) {
        return false;
    }
    c1.separates(&c2.lo) != c1.separates(&c2.hi)
}

fn sorted_set(v: &[Angle]) -> Vec<Angle> {
    let mut v = v.to_vec();
    v.sort();
    v.dedup();
    v
}

/// Whether `A`, its siblings `B` and the common image `C` are ordered alike.
///
/// Siblings are matched by equal image. Fails when `A` and `B` overlap, differ in size,
/// are not mapped injectively, or have different images.
pub fn same_orientation(d: Degree, a: &[Angle], b: &[Angle]) -> Result<bool, Error> {
    let a = sorted_set(a);
    let b = sorted_set(b);
    if a.len() != b.len() {
        return Err(Error::InvalidSiblingPair("sets differ in size"));
    }
    if a.iter().any(|x| b.binary_search(x).is_ok()) {
        return Err(Error::InvalidSiblingPair("sets overlap"));
    }
    let mut sibling: BTreeMap<Angle, &Angle> = BTreeMap::new();
    for y in &b {
        if sibling.insert(sigma(d, y), y).is_some() {
            return Err(Error::InvalidSiblingPair("second set is not mapped one-to-one"));
        }
    }
    let mut matched = Vec::with_capacity(a.len());
    let mut images = BTreeMap::new();
    for x in &a {
        let img = sigma(d, x);
        let y = *sibling.get(&img).ok_or(Error::InvalidSiblingPair("images differ"))?;
        if images.insert(img.clone(), ()).is_some() {
            return Err(Error::InvalidSiblingPair("first set is not mapped one-to-one"));
        }
        matched.push((x, y, img));
    }
    let n = matched.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (x, y, z) = (&matched[i], &matched[j], &matched[k]);
                let oa = in_cyclic_order(x.0, y.0, z.0);
                let ob = in_cyclic_order(x.1, y.1, z.1);
                let oc = in_cyclic_order(&x.2, &y.2, &z.2);
                if oa != ob || oa != oc {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
