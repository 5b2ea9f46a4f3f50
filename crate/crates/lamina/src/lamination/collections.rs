use alloc::vec::Vec;

use crate::chords::{is_critical, Chord, ChordOrPoint};
use crate::circle::{preimages, Angle, Degree};
use crate::Error;

use super::Lamination;

/// A set of chords with one common image, sorted.
pub type Collection = Vec<Chord>;

/// Every set of `d` pairwise disjoint chords joining an `a`-point to a `b`-point,
/// where `m = ab`. There are `Catalan(d)` of them.
pub fn full_preimage_collections(d: Degree, m: &Chord) -> Vec<Collection> {
    let mut pts: Vec<(Angle, bool)> = preimages(d, m.lo())
        .into_iter()
        .map(|p| (p, false))
        .chain(preimages(d, m.hi()).into_iter().map(|p| (p, true)))
        .collect();
    pts.sort();
    let mut out: Vec<Collection> = matchings(&pts, 0, pts.len())
        .into_iter()
        .map(|pairs| {
            let mut c: Collection = pairs
                .into_iter()
                .map(|(i, j)| Chord::new(pts[i].0.clone(), pts[j].0.clone()).expect("distinct points"))
                .collect();
            c.sort();
            c
        })
        .collect();
    out.sort();
    out
}

/// Non-crossing perfect matchings of `pts[lo..hi]` pairing opposite labels.
fn matchings(pts: &[(Angle, bool)], lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo == hi {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in (lo + 1..hi).step_by(2) {
        if pts[k].1 == pts[lo].1 {
            continue;
        }
        let inner = matchings(pts, lo + 1, k);
        let outer = matchings(pts, k + 1, hi);
        for a in &inner {
            for b in &outer {
                let mut m = Vec::with_capacity(1 + a.len() + b.len());
                m.push((lo, k));
                m.extend_from_slice(a);
                m.extend_from_slice(b);
                out.push(m);
            }
        }
    }
    out
}

/// Full collections containing `ell` all of whose chords are leaves of `l`.
pub fn sibling_collections(l: &Lamination, ell: &Chord) -> Result<Vec<Collection>, Error> {
    if !l.contains(ell) {
        return Err(Error::NotALeaf(ell.clone()));
    }
    let d = l.degree();
    if is_critical(d, ell) {
        return Err(Error::CriticalLeaf(ell.clone()));
    }
    let ChordOrPoint::Chord(m) = l.image(ell) else { unreachable!() };
    Ok(full_preimage_collections(d, &m)
        .into_iter()
        .filter(|c| c.contains(ell) && c.iter().all(|x| l.contains(x)))
        .collect())
}
