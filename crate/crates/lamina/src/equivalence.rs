//! The relation generated by leaves, laminational equivalences, q-laminations, and
//! the quadratic splitting criterion.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::chords::{chord_image, is_critical, Chord, ChordOrPoint};
use crate::circle::{sigma, Angle, Degree};
use crate::lamination::{
    check_sibling_invariant, check_thurston, hulls_disjoint, is_clean, is_proper, validate, ClassificationReport, Flag,
    Frontier, Implication, ImplicationStatus, Lamination, PropertyCheck, Witness, WitnessItem,
};
use crate::Error;

/// Pairwise disjoint nonempty classes; points outside the universe are singletons.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    classes: Vec<Vec<Angle>>,
    index: BTreeMap<Angle, usize>,
}

impl Partition {
    pub fn new(classes: impl IntoIterator<Item = Vec<Angle>>) -> Result<Partition, Error> {
        let mut cs: Vec<Vec<Angle>> = Vec::new();
        for mut c in classes {
            c.sort();
            c.dedup();
            if c.is_empty() {
                return Err(Error::EmptyClass);
            }
            cs.push(c);
        }
        cs.sort();
        let mut index = BTreeMap::new();
        for (i, c) in cs.iter().enumerate() {
            for a in c {
                if index.insert(a.clone(), i).is_some() {
                    return Err(Error::MalformedPartition(a.clone()));
                }
            }
        }
        Ok(Partition { classes: cs, index })
    }

    /// Classes sorted, each ascending.
    pub fn classes(&self) -> &[Vec<Angle>] {
        &self.classes
    }

    pub fn class_of(&self, a: &Angle) -> Option<&[Angle]> {
        self.index.get(a).map(|&i| self.classes[i].as_slice())
    }

    pub fn universe(&self) -> impl Iterator<Item = &Angle> {
        self.index.keys()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Classes of the relation generated by finite concatenations of leaves.
pub fn finite_classes(l: &Lamination) -> Partition {
    let verts: Vec<Angle> = l.vertices().into_iter().collect();
    let pos = |a: &Angle| verts.binary_search(a).unwrap();
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in l.leaves() {
        let (a, b) = (find(&mut parent, pos(c.lo())), find(&mut parent, pos(c.hi())));
        parent[a] = b;
    }
    let mut groups: BTreeMap<usize, Vec<Angle>> = BTreeMap::new();
    for (i, v) in verts.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(v.clone());
    }
    Partition::new(groups.into_values()).expect("components are disjoint")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Condition {
    E2,
    D1,
    D3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub condition: Condition,
    pub item: WitnessItem,
    pub reason: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub e2_unlinked: bool,
    pub d1_forward: bool,
    pub d3_covering: bool,
    /// Always true: classes are finite by construction.
    pub d4_finite: bool,
    /// Closedness of the relation has no content on finite data.
    pub e1_applicable: bool,
    /// Some class image left the universe and was skipped.
    pub relative: bool,
    pub witnesses: Vec<EquivalenceWitness>,
}

impl EquivalenceReport {
    pub fn passes(&self) -> bool {
        self.e2_unlinked && self.d1_forward && self.d3_covering && self.d4_finite
    }
}

pub fn check_laminational_equivalence(d: Degree, p: &Partition) -> EquivalenceReport {
    let mut r = EquivalenceReport {
        e2_unlinked: true,
        d1_forward: true,
        d3_covering: true,
        d4_finite: true,
        e1_applicable: false,
        relative: false,
        witnesses: Vec::new(),
    };
    let cs = p.classes();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            if !hulls_disjoint(&cs[i], &cs[j]) {
                r.e2_unlinked = false;
                r.witnesses.push(EquivalenceWitness {
                    condition: Condition::E2,
                    item: WitnessItem::Class(cs[i].clone()),
                    reason: "hull meets another class hull",
                });
            }
        }
    }
    for g in cs {
        let img: Vec<Angle> = g.iter().map(|a| sigma(d, a)).collect::<BTreeSet<_>>().into_iter().collect();
        let inside = img.iter().filter(|a| p.class_of(a).is_some()).count();
        let ok = if img.len() == 1 {
            p.class_of(&img[0]).map_or(true, |c| c.len() == 1)
        } else if inside < img.len() {
            r.relative = true;
            true
        } else {
            p.class_of(&img[0]) == Some(img.as_slice())
        };
        if !ok {
            r.d1_forward = false;
            r.witnesses.push(EquivalenceWitness {
                condition: Condition::D1,
                item: WitnessItem::Class(g.clone()),
                reason: "image is not a class",
            });
        }
        if g.len() > 2 && !covering(d, g, &img) {
            r.d3_covering = false;
            r.witnesses.push(EquivalenceWitness {
                condition: Condition::D3,
                item: WitnessItem::Class(g.clone()),
                reason: "complementary arc does not map to a complementary arc",
            });
        }
    }
    r
}

/// Every complementary arc `(s, t)` of `g` maps to a complementary arc of `σ(g)`.
fn covering(d: Degree, g: &[Angle], img: &[Angle]) -> bool {
    if img.len() == 1 {
        return true;
    }
    let n = g.len();
    (0..n).all(|i| {
        let (s, t) = (sigma(d, &g[i]), sigma(d, &g[(i + 1) % n]));
        let k = img.binary_search(&s).unwrap();
        img[(k + 1) % img.len()] == t
    })
}

fn hull_edges(g: &[Angle]) -> Vec<Chord> {
    let n = g.len();
    match n {
        0 | 1 => Vec::new(),
        2 => alloc::vec![Chord::new(g[0].clone(), g[1].clone()).unwrap()],
        _ => (0..n).map(|i| Chord::new(g[i].clone(), g[(i + 1) % n].clone()).unwrap()).collect(),
    }
}

/// Leaves are the hull edges of every class with at least two points.
pub fn q_lamination_from(d: Degree, p: &Partition) -> Result<Lamination, Error> {
    if !check_laminational_equivalence(d, p).passes() {
        return Err(Error::EquivalenceFailed);
    }
    Lamination::new(d, p.classes().iter().flat_map(|g| hull_edges(g)))
}

pub fn is_q_lamination(l: &Lamination) -> PropertyCheck {
    let mut witnesses = is_proper(l).witnesses;
    let w = |item, reason| Witness { flag: Flag::QLamination, item, reason };
    let p = finite_classes(l);
    let eq = check_laminational_equivalence(l.degree(), &p);
    for x in eq.witnesses {
        witnesses.push(w(x.item, x.reason));
    }
    let mut edges = BTreeSet::new();
    for g in p.classes() {
        for e in hull_edges(g) {
            if !l.contains(&e) {
                witnesses.push(w(WitnessItem::Leaf(e.clone()), "hull edge is not a leaf"));
            }
            edges.insert(e);
        }
    }
    for c in l.leaves() {
        if !edges.contains(c) {
            witnesses.push(w(WitnessItem::Leaf(c.clone()), "leaf inside a class hull"));
        }
    }
    for x in witnesses.iter_mut() {
        x.flag = Flag::QLamination;
    }
    PropertyCheck { holds: witnesses.is_empty(), witnesses }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Splitting {
    None,
    Leaf(Chord),
    /// Vertices of a collapsing quadrilateral strictly inside a class hull.
    Quadrilateral([Angle; 4]),
}

/// Critical leaf or collapsing quadrilateral strictly inside a critical class. Degree 2 only.
pub fn critical_splitting(l: &Lamination) -> Result<Splitting, Error> {
    let d = l.degree();
    if d != Degree::TWO {
        return Err(Error::Unsupported("critical splitting is defined for degree 2"));
    }
    let p = finite_classes(l);
    for g in p.classes() {
        let imgs: BTreeSet<Angle> = g.iter().map(|a| sigma(d, a)).collect();
        if g.len() < 3 || imgs.len() == g.len() {
            continue;
        }
        let edges: BTreeSet<Chord> = hull_edges(g).into_iter().collect();
        if let Some(q) = inner_quadrilateral(l, g, &edges) {
            return Ok(Splitting::Quadrilateral(q));
        }
        for c in l.critical_leaves() {
            if g.binary_search(c.lo()).is_ok() && !edges.contains(c) {
                return Ok(Splitting::Leaf(c.clone()));
            }
        }
    }
    Ok(Splitting::None)
}

fn inner_quadrilateral(l: &Lamination, g: &[Angle], hull: &BTreeSet<Chord>) -> Option<[Angle; 4]> {
    let d = l.degree();
    let n = g.len();
    let leaf = |i: usize, j: usize| {
        let c = Chord::new(g[i].clone(), g[j].clone()).unwrap();
        l.contains(&c).then_some(c)
    };
    for a in 0..n {
        for b in a + 1..n {
            let Some(e0) = leaf(a, b) else { continue };
            let ChordOrPoint::Chord(m) = chord_image(d, &e0) else { continue };
            for c in b + 1..n {
                for e in c + 1..n {
                    let es = [Some(e0.clone()), leaf(b, c), leaf(c, e), leaf(a, e)];
                    if es.iter().any(|x| x.is_none()) {
                        continue;
                    }
                    let es: Vec<Chord> = es.into_iter().flatten().collect();
                    let onto = es.iter().all(|x| !is_critical(d, x) && chord_image(d, x) == ChordOrPoint::Chord(m.clone()));
                    if onto && !es.iter().all(|x| hull.contains(x)) {
                        return Some([g[a].clone(), g[b].clone(), g[c].clone(), g[e].clone()]);
                    }
                }
            }
        }
    }
    None
}

fn implication(r: &mut ClassificationReport, name: &'static str, premise: bool, conclusion: bool) {
    let status = match (premise, conclusion) {
        (false, _) => ImplicationStatus::Vacuous,
        (true, true) => ImplicationStatus::Holds,
        (true, false) => ImplicationStatus::Violated,
    };
    if status == ImplicationStatus::Violated {
        r.witnesses.push(Witness {
            flag: Flag::QLamination,
            item: WitnessItem::Implication(name),
            reason: "implication fails on this finite lamination",
        });
    }
    r.implications.push(Implication { name, status });
}

/// Every flag with witnesses, plus the status of each implication between them.
pub fn classify(l: &Lamination) -> ClassificationReport {
    let mut r = validate(l);
    let sib = check_sibling_invariant(l, &Frontier::Auto);
    let th = check_thurston(l, &Frontier::Auto);
    let s = sib.sibling_invariant.unwrap();
    let t = th.thurston_invariant.unwrap();
    r.absorb(sib);
    r.absorb(th);
    let proper = is_proper(l);
    let clean = is_clean(l);
    let q = is_q_lamination(l);
    let (pr, cl, qq) = (proper.holds, clean.holds, q.holds);
    r.set(Flag::Proper, pr);
    r.set(Flag::Clean, cl);
    r.set(Flag::QLamination, qq);
    r.witnesses.extend(proper.witnesses);
    r.witnesses.extend(clean.witnesses);
    r.witnesses.extend(q.witnesses);
    let eq = check_laminational_equivalence(l.degree(), &finite_classes(l)).passes();
    implication(&mut r, "sibling => thurston", s, t);
    implication(&mut r, "clean and thurston => proper and sibling", cl && t, pr && s);
    implication(&mut r, "proper and thurston => equivalence", pr && t, eq);
    implication(&mut r, "q => sibling and proper", qq, s && pr);
    if l.degree() == Degree::TWO {
        let none = critical_splitting(l) == Ok(Splitting::None);
        implication(&mut r, "clean and thurston => q", cl && t, qq);
        implication(&mut r, "sibling => (q <=> proper and no splitting)", s, qq == (pr && none));
    }
    r
}
