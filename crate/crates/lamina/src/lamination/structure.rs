use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::chords::{is_critical, Chord, ChordOrPoint};
use crate::circle::{is_periodic, sigma, Angle};
use crate::Error;

use super::report::{Flag, Witness, WitnessItem};
use super::Lamination;

/// Two leaves at a common vertex with the same non-degenerate image.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Wedge {
    pub vertex: Angle,
    pub leaves: (Chord, Chord),
}

/// Outcome of a predicate together with its witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

pub fn critical_wedges(l: &Lamination) -> Vec<Wedge> {
    let mut at: BTreeMap<&Angle, Vec<(&Chord, Chord)>> = BTreeMap::new();
    for c in l.leaves() {
        if let ChordOrPoint::Chord(img) = l.image(c) {
            for v in c.endpoints() {
                at.entry(v).or_default().push((c, img.clone()));
            }
        }
    }
    let mut out = Vec::new();
    for (v, list) in at {
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                if list[i].1 == list[j].1 {
                    out.push(Wedge { vertex: v.clone(), leaves: (list[i].0.clone(), list[j].0.clone()) });
                }
            }
        }
    }
    out
}

/// No critical leaf with a periodic endpoint and no critical wedge with a periodic vertex.
pub fn is_proper(l: &Lamination) -> PropertyCheck {
    let d = l.degree();
    let mut witnesses = Vec::new();
    for c in l.critical_leaves() {
        if c.endpoints().into_iter().any(|a| is_periodic(d, a)) {
            witnesses.push(Witness {
                flag: Flag::Proper,
                item: WitnessItem::Leaf(c.clone()),
                reason: "critical leaf with periodic endpoint",
            });
        }
    }
    for w in critical_wedges(l) {
        if is_periodic(d, &w.vertex) {
            witnesses.push(Witness { flag: Flag::Proper, item: WitnessItem::Wedge(w), reason: "critical wedge with periodic vertex" });
        }
    }
    PropertyCheck { holds: witnesses.is_empty(), witnesses }
}

/// No point is an endpoint of three or more leaves.
pub fn is_clean(l: &Lamination) -> PropertyCheck {
    let mut count: BTreeMap<&Angle, usize> = BTreeMap::new();
    for c in l.leaves() {
        for v in c.endpoints() {
            *count.entry(v).or_default() += 1;
        }
    }
    let witnesses: Vec<Witness> = count
        .into_iter()
        .filter(|&(_, n)| n >= 3)
        .map(|(v, _)| Witness { flag: Flag::Clean, item: WitnessItem::Vertex(v.clone()), reason: "three or more leaves meet" })
        .collect();
    PropertyCheck { holds: witnesses.is_empty(), witnesses }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Component {
    Leaf(Chord),
    /// Vertices ascending; every hull edge maps onto the image chord.
    Polygon(Vec<Angle>),
}

/// Connected pieces of the leaves mapping onto `m`, joined through critical
/// leaves whose endpoints map to an endpoint of `m`.
pub fn collapsing_components(l: &Lamination, m: &Chord) -> Result<Vec<Component>, Error> {
    if !l.contains(m) {
        return Err(Error::NotALeaf(m.clone()));
    }
    let d = l.degree();
    let onto: Vec<&Chord> = l.leaves().iter().filter(|c| l.image(c) == ChordOrPoint::Chord(m.clone())).collect();
    let links: Vec<&Chord> = l
        .leaves()
        .iter()
        .filter(|c| is_critical(d, c) && m.has_endpoint(&sigma(d, c.lo())))
        .collect();
    let pts: Vec<Angle> = onto
        .iter()
        .chain(links.iter())
        .flat_map(|c| c.endpoints())
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let idx = |a: &Angle| pts.binary_search(a).unwrap();
    let mut parent: Vec<usize> = (0..pts.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in onto.iter().chain(links.iter()) {
        let (a, b) = (find(&mut parent, idx(c.lo())), find(&mut parent, idx(c.hi())));
        parent[a] = b;
    }
    let mut groups: BTreeMap<usize, Vec<Angle>> = BTreeMap::new();
    for (i, p) in pts.iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(p.clone());
    }
    let mut out = Vec::new();
    for (_, verts) in groups {
        let has_onto = onto.iter().any(|c| verts.binary_search(c.lo()).is_ok());
        if !has_onto {
            continue;
        }
        if verts.len() == 2 {
            out.push(Component::Leaf(Chord::new(verts[0].clone(), verts[1].clone()).unwrap()));
            continue;
        }
        let n = verts.len();
        let edges_ok = (0..n).all(|i| {
            let e = Chord::new(verts[i].clone(), verts[(i + 1) % n].clone()).unwrap();
            l.image(&e) == ChordOrPoint::Chord(m.clone())
        });
        if !edges_ok {
            return Err(Error::DichotomyFailed(verts));
        }
        out.push(Component::Polygon(verts));
    }
    out.sort();
    Ok(out)
}
