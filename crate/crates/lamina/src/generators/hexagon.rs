use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::chords::{crosses, Chord};
use crate::circle::{in_cyclic_order, orbit_info, preimages, sigma, Angle, Degree};
use crate::lamination::{check_sibling_invariant, check_thurston, hulls_disjoint, Flag, Frontier, Lamination, WitnessItem};
use crate::Error;

use super::pullback::{pullback, CriticalPortrait, PullbackSpec};

/// A cubic lamination that is Thurston invariant but not sibling invariant.
///
/// A critical hexagon `H = x̂1 ŷ1 ẑ1 x̂2 ŷ2 ẑ2` maps two-to-one onto an invariant
/// triangle `T = x y z`. Inserting the diagonals `x̂1ẑ1` and `x̂1x̂2` of `H` (and their
/// pullbacks) keeps gap invariance but leaves `x̂1ẑ1` without a full sibling collection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HexagonExample {
    pub lamination: Lamination,
    /// The same tower without the two inserted diagonals and their pullbacks.
    pub base: Lamination,
    /// `x, y, z`, the images of `x̂1, ŷ1, ẑ1`.
    pub triangle: [Angle; 3],
    /// `x̂1, ŷ1, ẑ1, x̂2, ŷ2, ẑ2`, ascending.
    pub hexagon: [Angle; 6],
    pub portrait: CriticalPortrait,
    /// `x̂1ẑ1` then `x̂1x̂2`.
    pub inserted: [Chord; 2],
    pub depth: usize,
}

impl HexagonExample {
    pub fn witness(&self) -> &Chord {
        &self.inserted[0]
    }
}

const DEPTH: usize = 2;

/// Output of `search_hexagon(3, 80)`, stored so the fixture needs no search.
const FIXTURE_TRIANGLE: (i64, i64) = (2, 13);
const FIXTURE_SECOND_CRITICAL: ((i64, i64), (i64, i64)) = ((5, 39), (6, 13));

pub fn hexagon_example() -> HexagonExample {
    let (p, q) = FIXTURE_TRIANGLE;
    let (u, v) = FIXTURE_SECOND_CRITICAL;
    build(&Angle::frac(p, q), Chord::frac(u, v)).expect("stored fixture is valid")
}

/// Smallest example over periodic triangles with denominator at most `max_den`, then
/// over second critical chords `{u, u + 1/3}` with `u` on the `1/(6q)` grid.
pub fn search_hexagon(d: Degree, max_den: u32) -> Result<Option<HexagonExample>, Error> {
    if d != Degree::THREE {
        return Err(Error::Unsupported("hexagon search is implemented for degree 3"));
    }
    for q in 2..=max_den as i64 {
        for p in 1..q {
            if !p.gcd(&q).is_one() {
                continue;
            }
            let x = Angle::frac(p, q);
            let o = orbit_info(d, &x);
            if o.preperiod != 0 || o.period != 3 {
                continue;
            }
            let t = orbit(d, &x);
            if t[0] != x {
                continue;
            }
            if hexagon_of(d, &t).is_none() {
                continue;
            }
            let grid = 6 * q;
            for j in 0..4 * q {
                let u = Angle::frac(j, grid);
                let third = BigRational::new(BigInt::one(), BigInt::from(3));
                let Ok(c) = Chord::new(u.clone(), u.shift(&third)) else { continue };
                if let Ok(ex) = build(&x, c) {
                    return Ok(Some(ex));
                }
            }
        }
    }
    Ok(None)
}

/// Orbit of a period-3 point, ascending.
fn orbit(d: Degree, x: &Angle) -> [Angle; 3] {
    let y = sigma(d, x);
    let z = sigma(d, &y);
    let mut v = [x.clone(), y, z];
    v.sort();
    v
}

/// The six preimages of `T` outside `T`, if they alternate `x y z x y z` with
/// `x < y < z` in the positive order.
fn hexagon_of(d: Degree, t: &[Angle; 3]) -> Option<[Angle; 6]> {
    let tset: BTreeSet<&Angle> = t.iter().collect();
    let mut h: Vec<Angle> = t.iter().flat_map(|a| preimages(d, a)).filter(|p| !tset.contains(p)).collect();
    h.sort();
    if h.len() != 6 {
        return None;
    }
    let img: Vec<Angle> = h.iter().map(|a| sigma(d, a)).collect();
    if (0..3).any(|k| img[k] != img[k + 3]) || !in_cyclic_order(&img[0], &img[1], &img[2]) {
        return None;
    }
    if !hulls_disjoint(&h, t) {
        return None;
    }
    Some(h.try_into().unwrap())
}

fn edges(v: &[Angle]) -> Vec<Chord> {
    let n = v.len();
    (0..n).map(|i| Chord::new(v[i].clone(), v[(i + 1) % n].clone()).unwrap()).collect()
}

fn build(x: &Angle, c: Chord) -> Result<HexagonExample, Error> {
    let d = Degree::THREE;
    let t = orbit(d, x);
    let h = hexagon_of(d, &t).ok_or(Error::Unsupported("no alternating hexagon"))?;
    let triangle = [sigma(d, &h[0]), sigma(d, &h[1]), sigma(d, &h[2])];
    let diag = Chord::new(h[0].clone(), h[3].clone())?;
    let inner = Chord::new(h[0].clone(), h[2].clone())?;
    if crosses(&c, &diag) || c == diag {
        return Err(Error::InvalidPortrait("second critical chord"));
    }
    let portrait = CriticalPortrait::new(d, [diag.clone(), c])?;
    let seed: Vec<Chord> = edges(&t).into_iter().chain(edges(&h)).collect();
    let spec = |leaves: Vec<Chord>| -> Result<PullbackSpec, Error> {
        Ok(PullbackSpec { seed: Lamination::new(d, leaves)?, portrait: portrait.clone(), depth: DEPTH, include_portrait: false })
    };
    let base = pullback(&spec(seed.clone())?)?;
    let mut with = seed;
    with.push(inner.clone());
    with.push(diag.clone());
    let lamination = pullback(&spec(with)?)?;
    let sib = check_sibling_invariant(&lamination, &Frontier::Auto);
    let witnessed = sib
        .witnesses_for(Flag::SiblingInvariant)
        .any(|w| w.item == WitnessItem::Leaf(inner.clone()));
    let ok = check_thurston(&lamination, &Frontier::Auto).thurston_invariant == Some(true)
        && sib.sibling_invariant == Some(false)
        && witnessed
        && check_sibling_invariant(&base, &Frontier::Auto).sibling_invariant == Some(true);
    if !ok {
        return Err(Error::Unsupported("candidate does not separate the two invariances"));
    }
    Ok(HexagonExample { lamination, base, triangle, hexagon: h, portrait, inserted: [inner, diag], depth: DEPTH })
}
