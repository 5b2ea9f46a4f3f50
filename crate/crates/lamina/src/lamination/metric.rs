use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::chords::Chord;
use crate::circle::{sigma, Angle, Degree};
use crate::Error;

use super::Lamination;

/// Convex hulls of two finite circle sets are disjoint, boundary contact included.
pub fn hulls_disjoint(a: &[Angle], b: &[Angle]) -> bool {
    let mut a = a.to_vec();
    a.sort();
    a.dedup();
    if b.iter().any(|x| a.binary_search(x).is_ok()) {
        return false;
    }
    if a.len() < 2 || b.len() < 2 {
        return true;
    }
    // all of `b` in one complementary arc of `a`
    let slot = |x: &Angle| a.partition_point(|y| y < x) % a.len();
    let s = slot(&b[0]);
    b.iter().all(|x| slot(x) == s)
}

/// Hulls of `σ^m(P)` for `0 ≤ m ≤ depth` are pairwise disjoint.
pub fn is_wandering(d: Degree, p: &[Angle], depth: usize) -> Result<bool, Error> {
    let mut cur: Vec<Angle> = p.to_vec();
    cur.sort();
    cur.dedup();
    if cur.len() < 2 {
        return Err(Error::TooFewPoints);
    }
    let mut orbit = Vec::with_capacity(depth + 1);
    for _ in 0..=depth {
        let next: Vec<Angle> = cur.iter().map(|x| sigma(d, x)).collect();
        orbit.push(core::mem::replace(&mut cur, next));
    }
    for i in 0..orbit.len() {
        for j in i + 1..orbit.len() {
            if !hulls_disjoint(&orbit[i], &orbit[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn chord_distance(x: &Chord, y: &Chord) -> BigRational {
    let pair = |a: &Angle, b: &Angle, c: &Angle, e: &Angle| {
        let (p, q) = (a.distance(c), b.distance(e));
        if p > q {
            p
        } else {
            q
        }
    };
    let s = pair(x.lo(), x.hi(), y.lo(), y.hi());
    let t = pair(x.lo(), x.hi(), y.hi(), y.lo());
    if s < t {
        s
    } else {
        t
    }
}

fn directed(a: &Lamination, b: &Lamination) -> BigRational {
    a.leaves()
        .iter()
        .map(|x| b.leaves().iter().map(|y| chord_distance(x, y)).min().expect("nonempty"))
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// Hausdorff distance between leaf sets under the endpoint-matching chord metric.
///
/// Two empty laminations are at distance 0; an empty and a nonempty one at 1/2,
/// the diameter of the metric.
pub fn hausdorff_distance(l1: &Lamination, l2: &Lamination) -> Result<BigRational, Error> {
    if l1.degree() != l2.degree() {
        return Err(Error::DegreeMismatch(l1.degree().get(), l2.degree().get()));
    }
    match (l1.is_empty(), l2.is_empty()) {
        (true, true) => return Ok(BigRational::zero()),
        (true, false) | (false, true) => return Ok(BigRational::new(1.into(), 2.into())),
        _ => {}
    }
    let (p, q) = (directed(l1, l2), directed(l2, l1));
    Ok(if p > q { p } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn wandering_examples() {
        let d = Degree::TWO;
        let tri = [Angle::frac(1, 7), Angle::frac(2, 7), Angle::frac(4, 7)];
        assert_eq!(is_wandering(d, &tri, 3), Ok(false));
        assert_eq!(is_wandering(d, &[Angle::zero(), Angle::frac(1, 2)], 1), Ok(false));
        assert_eq!(is_wandering(d, &[Angle::zero()], 1), Err(Error::TooFewPoints));
    }

    #[test]
    fn hull_cases() {
        let a = [Angle::zero(), Angle::frac(1, 2)];
        let b = [Angle::frac(1, 4), Angle::frac(3, 4)];
        assert!(!hulls_disjoint(&a, &b));
        let c = [Angle::frac(1, 8), Angle::frac(3, 8)];
        assert!(hulls_disjoint(&a, &c));
        let wrap = [Angle::frac(7, 8), Angle::frac(1, 16)];
        assert!(hulls_disjoint(&a, &wrap) == false);
        let wrap2 = [Angle::frac(5, 8), Angle::frac(7, 8)];
        assert!(hulls_disjoint(&a, &wrap2));
    }

    #[test]
    fn hausdorff_examples() {
        let d = Degree::TWO;
        let one = Lamination::new(d, [Chord::frac((0, 1), (1, 2))]).unwrap();
        let two = Lamination::new_unchecked(d, [Chord::frac((0, 1), (1, 2)), Chord::frac((1, 4), (3, 4))]);
        assert_eq!(hausdorff_distance(&one, &one), Ok(r(0, 1)));
        assert_eq!(hausdorff_distance(&one, &two), Ok(r(1, 4)));
        assert_eq!(hausdorff_distance(&two, &one), Ok(r(1, 4)));
        let three = Lamination::empty(Degree::THREE);
        assert!(hausdorff_distance(&one, &three).is_err());
    }
}
