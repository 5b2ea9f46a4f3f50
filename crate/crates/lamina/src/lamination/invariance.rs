use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chords::{is_critical, Chord, ChordOrPoint};
use crate::circle::{sigma, Angle};
use crate::Error;

use super::collections::{full_preimage_collections, sibling_collections};
use super::gaps::{gaps, BoundaryItem, Gap};
use super::report::{ClassificationReport, Flag, WitnessItem};
use super::Lamination;

/// Leaves exempt from the backward condition of a truncated lamination.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum Frontier {
    /// Leaves with no preimage leaf.
    #[default]
    Auto,
    Explicit(BTreeSet<Chord>),
}

impl Frontier {
    pub fn none() -> Frontier {
        Frontier::Explicit(BTreeSet::new())
    }

    fn resolve(&self, l: &Lamination) -> BTreeSet<Chord> {
        match self {
            Frontier::Auto => l.auto_frontier(),
            Frontier::Explicit(s) => s.iter().filter(|c| l.contains(c)).cloned().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GapVerdict {
    Point(Angle),
    Leaf(Chord),
    /// The boundary covers the boundary of an image gap `degree` times.
    Gap { degree: u32 },
    Fail { item: WitnessItem, reason: &'static str },
}

impl GapVerdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, GapVerdict::Fail { .. })
    }
}

/// Image of one face under `σ_d`. Errors if `g` is not a face of `l`.
pub fn check_gap_invariance(l: &Lamination, g: &Gap) -> Result<GapVerdict, Error> {
    if !gaps(l).contains(g) {
        return Err(Error::NotAFace);
    }
    Ok(gap_verdict(l, g))
}

#[derive(PartialEq, Eq)]
struct Step {
    arc: bool,
    from: Angle,
    to: Angle,
    len: BigRational,
}

pub(crate) fn gap_verdict(l: &Lamination, g: &Gap) -> GapVerdict {
    let d = l.degree();
    if g.boundary == [BoundaryItem::Circle] {
        return GapVerdict::Gap { degree: d.get() };
    }
    let fail = |item, reason| GapVerdict::Fail { item, reason };
    if g.is_polygon() {
        let imgs: BTreeSet<Angle> = g.vertices.iter().map(|v| sigma(d, v)).collect();
        let mut it = imgs.iter();
        match imgs.len() {
            1 => return GapVerdict::Point(it.next().unwrap().clone()),
            2 => {
                let c = Chord::new(it.next().unwrap().clone(), it.next().unwrap().clone()).unwrap();
                return if l.contains(&c) {
                    GapVerdict::Leaf(c)
                } else {
                    fail(WitnessItem::Leaf(c), "image chord of the gap is not a leaf")
                };
            }
            _ => {}
        }
    }
    let dd = BigRational::from_integer(BigInt::from(d.get()));
    let mut steps: Vec<Step> = Vec::new();
    for (k, item) in g.boundary.iter().enumerate() {
        match item {
            BoundaryItem::Leaf(c) => {
                if is_critical(d, c) {
                    continue;
                }
                let ChordOrPoint::Chord(img) = l.image(c) else { unreachable!() };
                if !l.contains(&img) {
                    return fail(WitnessItem::Leaf(c.clone()), "image of boundary leaf is not a leaf");
                }
            }
            BoundaryItem::Arc { from, to } if from == to => continue,
            _ => {}
        }
        let (from, to) = match item {
            BoundaryItem::Leaf(_) => walk_endpoints(g, k),
            BoundaryItem::Arc { from, to } => (from.clone(), to.clone()),
            BoundaryItem::Circle => unreachable!(),
        };
        let (sf, st) = (sigma(d, &from), sigma(d, &to));
        let (arc, len) = match item {
            BoundaryItem::Arc { .. } => (true, from.ccw_to(&to) * &dd),
            _ => (false, sf.ccw_to(&st)),
        };
        steps.push(Step { arc, from: sf, to: st, len });
    }
    let m = steps.len();
    let witness = || WitnessItem::Gap(g.vertices.clone());
    if m == 0 {
        return fail(witness(), "boundary collapses entirely");
    }
    for k in 0..m {
        if steps[k].to != steps[(k + 1) % m].from {
            return fail(witness(), "image boundary does not close up");
        }
    }
    let p = (1..=m)
        .find(|&p| m % p == 0 && (0..m).all(|i| steps[i] == steps[(i + p) % m]))
        .unwrap();
    let turn: BigRational = steps[..p].iter().fold(BigRational::zero(), |acc, s| acc + &s.len);
    if !turn.is_one() {
        return fail(witness(), "boundary walk is not a positive monotone covering");
    }
    // one period must not revisit a point before closing
    let seen: BTreeSet<&Angle> = steps[..p].iter().map(|s| &s.from).collect();
    if seen.len() != p {
        return fail(witness(), "image boundary revisits a point");
    }
    GapVerdict::Gap { degree: (m / p) as u32 }
}

/// Endpoints of the `k`-th boundary item in walk order.
fn walk_endpoints(g: &Gap, k: usize) -> (Angle, Angle) {
    // vertex list and boundary both start at the same vertex; count non-point items
    let mut v = 0;
    for item in &g.boundary[..k] {
        if !item.is_point() {
            v += 1;
        }
    }
    let n = g.vertices.len();
    (g.vertices[v % n].clone(), g.vertices[(v + 1) % n].clone())
}

/// Forward invariance, the full-collection backward condition, and gap invariance off the frontier.
pub fn check_thurston(l: &Lamination, frontier: &Frontier) -> ClassificationReport {
    let mut r = ClassificationReport::default();
    let fr = frontier.resolve(l);
    let fwd = forward(l, &mut r);
    let d = l.degree();
    let mut back = true;
    for c in l.leaves() {
        if fr.contains(c) {
            continue;
        }
        let ok = full_preimage_collections(d, c).iter().any(|x| x.iter().all(|y| l.contains(y)));
        if !ok {
            back = false;
            r.witness(Flag::BackwardInvariantRelative, WitnessItem::Leaf(c.clone()), "no full preimage collection in L");
        }
    }
    let mut gaps_ok = true;
    let mut exempt = 0;
    for g in gaps(l) {
        if g.leaves().any(|c| fr.contains(c)) {
            exempt += 1;
            continue;
        }
        if let GapVerdict::Fail { item, reason } = gap_verdict(l, &g) {
            gaps_ok = false;
            r.witness(Flag::ThurstonInvariant, item, reason);
        }
    }
    r.set(Flag::ForwardInvariant, fwd);
    r.set(Flag::BackwardInvariantRelative, back);
    r.set(Flag::ThurstonInvariant, fwd && back && gaps_ok);
    if !fwd || !back {
        r.witness(Flag::ThurstonInvariant, first_leaf_witness(&r), "leaf condition fails");
    }
    r.frontier = fr.into_iter().collect();
    r.exempt_gaps = exempt;
    r
}

/// Leaf images are leaves, non-frontier leaves have preimage leaves, and every
/// non-critical leaf lies in a full sibling collection.
pub fn check_sibling_invariant(l: &Lamination, frontier: &Frontier) -> ClassificationReport {
    let mut r = ClassificationReport::default();
    let fr = frontier.resolve(l);
    let fwd = forward(l, &mut r);
    let idx = l.preimage_index();
    let mut back = true;
    for c in l.leaves() {
        if !fr.contains(c) && !idx.contains_key(c) {
            back = false;
            r.witness(Flag::BackwardInvariantRelative, WitnessItem::Leaf(c.clone()), "no preimage leaf");
        }
    }
    let mut sib = true;
    for c in l.leaves() {
        if is_critical(l.degree(), c) {
            continue;
        }
        if sibling_collections(l, c).map(|v| v.is_empty()).unwrap_or(true) {
            sib = false;
            r.witness(Flag::SiblingInvariant, WitnessItem::Leaf(c.clone()), "no full sibling collection");
        }
    }
    r.set(Flag::ForwardInvariant, fwd);
    r.set(Flag::BackwardInvariantRelative, back);
    r.set(Flag::SiblingInvariant, fwd && back && sib);
    if !fwd || !back {
        r.witness(Flag::SiblingInvariant, first_leaf_witness(&r), "leaf condition fails");
    }
    r.frontier = fr.into_iter().collect();
    r
}

fn forward(l: &Lamination, r: &mut ClassificationReport) -> bool {
    let mut ok = true;
    for c in l.leaves() {
        if let ChordOrPoint::Chord(img) = l.image(c) {
            if !l.contains(&img) {
                ok = false;
                r.witness(Flag::ForwardInvariant, WitnessItem::Leaf(c.clone()), "image is not a leaf");
            }
        }
    }
    ok
}

fn first_leaf_witness(r: &ClassificationReport) -> WitnessItem {
    r.witnesses
        .iter()
        .find(|w| matches!(w.flag, Flag::ForwardInvariant | Flag::BackwardInvariantRelative))
        .map(|w| w.item.clone())
        .expect("a leaf witness was recorded")
}
