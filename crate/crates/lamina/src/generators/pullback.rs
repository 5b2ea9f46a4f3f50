use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::chords::{crosses, is_critical, Chord, ChordOrPoint};
use crate::circle::{Angle, Degree};
use crate::lamination::{full_preimage_collections, Collection, Lamination};
use crate::Error;

/// Pairwise unlinked critical chords of total criticality `d - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPortrait {
    degree: Degree,
    chords: Vec<Chord>,
}

impl CriticalPortrait {
    pub fn new(degree: Degree, chords: impl IntoIterator<Item = Chord>) -> Result<CriticalPortrait, Error> {
        let chords: Vec<Chord> = chords.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if chords.iter().any(|c| !is_critical(degree, c)) {
            return Err(Error::InvalidPortrait("chord is not critical"));
        }
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                if crosses(&chords[i], &chords[j]) {
                    return Err(Error::InvalidPortrait("chords cross"));
                }
            }
        }
        // criticality of a connected piece is its vertex count minus one
        let verts: BTreeSet<&Angle> = chords.iter().flat_map(|c| c.endpoints()).collect();
        let mut comps = verts.len();
        let v: Vec<&Angle> = verts.into_iter().collect();
        let mut parent: Vec<usize> = (0..v.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        for c in &chords {
            let a = find(&mut parent, v.binary_search(&c.lo()).unwrap());
            let b = find(&mut parent, v.binary_search(&c.hi()).unwrap());
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        if v.len() - comps != degree.get() as usize - 1 {
            return Err(Error::InvalidPortrait("total criticality is not d - 1"));
        }
        Ok(CriticalPortrait { degree, chords })
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    /// Both endpoints of `c` lie on one side of every portrait chord, a portrait
    /// chord `{p < q}` splitting the circle into `(p, q]` and `(q, p]`.
    fn same_side(&self, c: &Chord) -> bool {
        self.chords.iter().all(|k| {
            let side = |t: &Angle| k.lo() < t && t <= k.hi();
            side(c.lo()) == side(c.hi())
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackSpec {
    pub seed: Lamination,
    pub portrait: CriticalPortrait,
    pub depth: usize,
    pub include_portrait: bool,
}

/// Full preimage collections of `m` none of whose chords crosses the portrait.
pub fn compatible_collections(portrait: &CriticalPortrait, m: &Chord) -> Vec<Collection> {
    full_preimage_collections(portrait.degree, m)
        .into_iter()
        .filter(|x| x.iter().all(|c| portrait.chords.iter().all(|k| !crosses(c, k))))
        .collect()
}

/// Ties go first to a collection already present, then to the half-open side rule.
fn select(portrait: &CriticalPortrait, m: &Chord, present: &BTreeSet<Chord>) -> Result<Collection, Error> {
    let mut found = compatible_collections(portrait, m);
    if found.len() > 1 {
        let have: Vec<Collection> = found.iter().filter(|x| x.iter().all(|c| present.contains(c))).cloned().collect();
        if have.len() == 1 {
            return Ok(have.into_iter().next().unwrap());
        }
        found.retain(|x| x.iter().all(|c| portrait.same_side(c)));
    }
    match found.len() {
        0 => Err(Error::NoCompatibleCollection(m.clone())),
        1 => Ok(found.pop().unwrap()),
        _ => Err(Error::AmbiguousCollection(m.clone())),
    }
}

/// Seed plus `depth` generations of portrait-selected preimage collections.
pub fn pullback(spec: &PullbackSpec) -> Result<Lamination, Error> {
    let d = spec.seed.degree();
    if d != spec.portrait.degree {
        return Err(Error::DegreeMismatch(d.get(), spec.portrait.degree.get()));
    }
    for c in spec.seed.leaves() {
        if let ChordOrPoint::Chord(img) = spec.seed.image(c) {
            if !spec.seed.contains(&img) {
                return Err(Error::InvalidSeed(c.clone()));
            }
        }
        if let Some(k) = spec.portrait.chords.iter().find(|k| crosses(c, k)) {
            return Err(Error::Crossing(c.clone(), k.clone()));
        }
    }
    let mut all: BTreeSet<Chord> = spec.seed.leaves().clone();
    let mut generation: Vec<Chord> = all.iter().cloned().collect();
    for _ in 0..spec.depth {
        let mut next = BTreeSet::new();
        for m in &generation {
            for c in select(&spec.portrait, m, &all)? {
                if !all.contains(&c) {
                    next.insert(c);
                }
            }
        }
        all.extend(next.iter().cloned());
        generation = next.into_iter().collect();
        if generation.is_empty() {
            break;
        }
    }
    if spec.include_portrait {
        all.extend(spec.portrait.chords.iter().cloned());
    }
    Lamination::new(d, all)
}
