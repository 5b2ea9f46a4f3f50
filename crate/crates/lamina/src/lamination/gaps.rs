use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::chords::Chord;
use crate::circle::Angle;

use super::Lamination;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundaryItem {
    Leaf(Chord),
    /// Positive circle arc; `from == to` is a single point between two leaves.
    Arc { from: Angle, to: Angle },
    /// The whole circle, only for the lamination with no leaves.
    Circle,
}

impl BoundaryItem {
    pub fn is_point(&self) -> bool {
        matches!(self, BoundaryItem::Arc { from, to } if from == to)
    }
}

/// A face of the disk cut along the leaves, walked positively.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Gap {
    pub vertices: Vec<Angle>,
    pub boundary: Vec<BoundaryItem>,
}

impl Gap {
    pub fn leaves(&self) -> impl Iterator<Item = &Chord> {
        self.boundary.iter().filter_map(|b| match b {
            BoundaryItem::Leaf(c) => Some(c),
            _ => None,
        })
    }

    /// No boundary arc of positive length.
    pub fn is_polygon(&self) -> bool {
        self.boundary
            .iter()
            .all(|b| matches!(b, BoundaryItem::Leaf(_)) || b.is_point())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dart {
    /// From vertex `i` to `i + 1` along the circle.
    Arc(usize),
    Leaf(usize, usize),
}

/// Faces of the subdivision; there are `|leaves| + 1` of them.
pub fn gaps(l: &Lamination) -> Vec<Gap> {
    let verts: Vec<Angle> = l.vertices().into_iter().collect();
    let n = verts.len();
    if n == 0 {
        return alloc::vec![Gap { vertices: Vec::new(), boundary: alloc::vec![BoundaryItem::Circle] }];
    }
    let pos = |a: &Angle| verts.binary_search(a).expect("endpoint indexed");
    let off = |i: usize, j: usize| (j + n - i) % n;
    // leaf neighbours of each vertex in positive order starting just after it
    let mut nbrs: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for c in l.leaves() {
        let (i, j) = (pos(c.lo()), pos(c.hi()));
        nbrs[i].push(j);
        nbrs[j].push(i);
    }
    for (i, v) in nbrs.iter_mut().enumerate() {
        v.sort_by_key(|&j| off(i, j));
    }
    // next dart with the face on the left, arriving at `x` from `y` along a leaf or an arc
    let next = |x: usize, from_leaf: Option<usize>| -> Dart {
        let v = &nbrs[x];
        match from_leaf {
            None => Dart::Leaf(x, *v.last().expect("every vertex carries a leaf")),
            Some(y) => {
                let k = v.iter().position(|&j| j == y).expect("incoming leaf");
                if k == 0 {
                    Dart::Arc(x)
                } else {
                    Dart::Leaf(x, v[k - 1])
                }
            }
        }
    };
    let mut seen_arc = alloc::vec![false; n];
    let mut seen_leaf: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut darts: Vec<Dart> = (0..n).map(Dart::Arc).collect();
    for c in l.leaves() {
        let (i, j) = (pos(c.lo()), pos(c.hi()));
        darts.push(Dart::Leaf(i, j));
        darts.push(Dart::Leaf(j, i));
    }
    let mut out = Vec::new();
    for start in darts {
        let fresh = match start {
            Dart::Arc(i) => !seen_arc[i],
            Dart::Leaf(i, j) => !seen_leaf.contains(&(i, j)),
        };
        if !fresh {
            continue;
        }
        let mut walk = Vec::new();
        let mut cur = start;
        loop {
            match cur {
                Dart::Arc(i) => seen_arc[i] = true,
                Dart::Leaf(i, j) => {
                    seen_leaf.insert((i, j));
                }
            }
            walk.push(cur);
            cur = match cur {
                Dart::Arc(i) => next((i + 1) % n, None),
                Dart::Leaf(i, j) => next(j, Some(i)),
            };
            if cur == start {
                break;
            }
        }
        out.push(build_gap(&verts, &walk));
    }
    out.sort();
    out
}

fn build_gap(verts: &[Angle], walk: &[Dart]) -> Gap {
    let n = verts.len();
    let tail = |d: &Dart| match *d {
        Dart::Arc(i) => i,
        Dart::Leaf(i, _) => i,
    };
    let head = |d: &Dart| match *d {
        Dart::Arc(i) => (i + 1) % n,
        Dart::Leaf(_, j) => j,
    };
    let first = (0..walk.len()).min_by_key(|&k| tail(&walk[k])).expect("nonempty walk");
    let mut vertices = Vec::with_capacity(walk.len());
    let mut boundary = Vec::with_capacity(2 * walk.len());
    for k in 0..walk.len() {
        let d = &walk[(first + k) % walk.len()];
        vertices.push(verts[tail(d)].clone());
        match *d {
            Dart::Arc(i) => boundary.push(BoundaryItem::Arc { from: verts[i].clone(), to: verts[(i + 1) % n].clone() }),
            Dart::Leaf(i, j) => {
                boundary.push(BoundaryItem::Leaf(Chord::new(verts[i].clone(), verts[j].clone()).expect("leaf")));
                let nd = &walk[(first + k + 1) % walk.len()];
                if matches!(nd, Dart::Leaf(..)) {
                    let v = verts[head(d)].clone();
                    boundary.push(BoundaryItem::Arc { from: v.clone(), to: v });
                }
            }
        }
    }
    Gap { vertices, boundary }
}
