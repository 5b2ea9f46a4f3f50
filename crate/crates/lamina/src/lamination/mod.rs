//! Finite laminations and the checks run on them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::chords::{chord_image, crosses, is_critical, Chord, ChordOrPoint};
use crate::circle::{Angle, Degree};
use crate::Error;

mod collections;
mod gaps;
mod invariance;
mod metric;
mod report;
mod structure;

pub use collections::{full_preimage_collections, sibling_collections, Collection};
pub use gaps::{gaps, BoundaryItem, Gap};
pub use invariance::{check_gap_invariance, check_sibling_invariant, check_thurston, Frontier, GapVerdict};
pub use metric::{hausdorff_distance, hulls_disjoint, is_wandering};
pub use report::{ClassificationReport, Flag, Implication, ImplicationStatus, Witness, WitnessItem};
pub use structure::{collapsing_components, critical_wedges, is_clean, is_proper, Component, PropertyCheck, Wedge};

/// Degree plus a finite set of leaves.
///
/// [`Lamination::new`] rejects crossing leaves; [`Lamination::new_unchecked`] keeps them so
/// that [`validate`] can report them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lamination {
    degree: Degree,
    leaves: BTreeSet<Chord>,
}

impl Lamination {
    pub fn new(degree: Degree, leaves: impl IntoIterator<Item = Chord>) -> Result<Lamination, Error> {
        let lam = Lamination::new_unchecked(degree, leaves);
        if let Some((a, b)) = lam.first_crossing() {
            return Err(Error::Crossing(a, b));
        }
        Ok(lam)
    }

    pub fn new_unchecked(degree: Degree, leaves: impl IntoIterator<Item = Chord>) -> Lamination {
        Lamination { degree, leaves: leaves.into_iter().collect() }
    }

    pub fn empty(degree: Degree) -> Lamination {
        Lamination { degree, leaves: BTreeSet::new() }
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn leaves(&self) -> &BTreeSet<Chord> {
        &self.leaves
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    pub fn contains(&self, c: &Chord) -> bool {
        self.leaves.contains(c)
    }

    /// All leaf endpoints, ascending.
    pub fn vertices(&self) -> BTreeSet<Angle> {
        self.leaves.iter().flat_map(|c| c.endpoints()).cloned().collect()
    }

    pub fn image(&self, c: &Chord) -> ChordOrPoint {
        chord_image(self.degree, c)
    }

    pub fn critical_leaves(&self) -> impl Iterator<Item = &Chord> {
        self.leaves.iter().filter(move |c| is_critical(self.degree, c))
    }

    /// Same degree, leaves `self ∪ extra`; fails if the union crosses.
    pub fn with_leaves(&self, extra: impl IntoIterator<Item = Chord>) -> Result<Lamination, Error> {
        Lamination::new(self.degree, self.leaves.iter().cloned().chain(extra))
    }

    pub fn without_leaves<'a>(&self, remove: impl IntoIterator<Item = &'a Chord>) -> Lamination {
        let mut leaves = self.leaves.clone();
        for c in remove {
            leaves.remove(c);
        }
        Lamination { degree: self.degree, leaves }
    }

    /// Image chord → leaves mapping onto it.
    pub fn preimage_index(&self) -> BTreeMap<Chord, Vec<Chord>> {
        let mut idx: BTreeMap<Chord, Vec<Chord>> = BTreeMap::new();
        for c in &self.leaves {
            if let ChordOrPoint::Chord(img) = self.image(c) {
                idx.entry(img).or_default().push(c.clone());
            }
        }
        idx
    }

    /// Leaves with no preimage leaf in the lamination.
    pub fn auto_frontier(&self) -> BTreeSet<Chord> {
        let idx = self.preimage_index();
        self.leaves.iter().filter(|c| !idx.contains_key(*c)).cloned().collect()
    }

    /// Linear sweep over the sorted endpoints; `None` iff no two leaves cross.
    fn first_crossing(&self) -> Option<(Chord, Chord)> {
        if nested(&self.leaves) {
            None
        } else {
            crossing_pairs(&self.leaves).into_iter().next()
        }
    }
}

impl fmt::Debug for Lamination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lamination(d={}, ", self.degree)?;
        f.debug_set().entries(self.leaves.iter()).finish()?;
        f.write_str(")")
    }
}

/// Stack sweep: chords are pairwise non-crossing iff they nest like brackets.
fn nested(leaves: &BTreeSet<Chord>) -> bool {
    let pts: Vec<&Angle> = {
        let set: BTreeSet<&Angle> = leaves.iter().flat_map(|c| c.endpoints()).collect();
        set.into_iter().collect()
    };
    let pos = |a: &Angle| pts.binary_search(&a).expect("endpoint indexed");
    let n = pts.len();
    let mut starts: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for c in leaves {
        starts[pos(c.lo())].push(pos(c.hi()));
    }
    let mut open_ending = alloc::vec![0usize; n];
    let mut stack: Vec<usize> = Vec::new();
    for p in 0..n {
        while stack.last() == Some(&p) {
            stack.pop();
            open_ending[p] -= 1;
        }
        if open_ending[p] > 0 {
            return false;
        }
        let ends = &mut starts[p];
        ends.sort_unstable_by(|a, b| b.cmp(a));
        for &e in ends.iter() {
            if let Some(&top) = stack.last() {
                if e > top {
                    return false;
                }
            }
            stack.push(e);
            open_ending[e] += 1;
        }
    }
    true
}

fn crossing_pairs(leaves: &BTreeSet<Chord>) -> Vec<(Chord, Chord)> {
    let v: Vec<&Chord> = leaves.iter().collect();
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if crosses(v[i], v[j]) {
                out.push((v[i].clone(), v[j].clone()));
            }
        }
    }
    out
}

/// Unlinkedness report: every crossing pair, in lexicographic order.
pub fn validate(l: &Lamination) -> ClassificationReport {
    let mut r = ClassificationReport::default();
    let pairs = if nested(&l.leaves) { Vec::new() } else { crossing_pairs(&l.leaves) };
    r.set(Flag::UnlinkedOk, pairs.is_empty());
    for (a, b) in pairs {
        r.witness(Flag::UnlinkedOk, WitnessItem::Pair(a, b), "leaves cross");
    }
    r
}
