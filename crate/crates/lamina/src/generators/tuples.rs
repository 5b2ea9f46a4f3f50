use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::chords::Chord;
use crate::circle::{sigma, Angle, Degree};
use crate::lamination::{full_preimage_collections, Collection};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiblingSequence {
    /// Image chord of each collection, shrinking towards the limit image.
    pub images: Vec<Chord>,
    pub collections: Vec<Collection>,
    pub limit_image: Chord,
    pub limit: Collection,
}

/// `n` full collections whose images `{a + δ_k, b - δ_k}`, `δ_k = (b - a) / 2^(k+1)`,
/// converge to `m = {a, b}`, each chord moving towards its limit chord.
pub fn converging_sibling_tuples(d: Degree, m: &Chord, n: usize) -> SiblingSequence {
    let limit = full_preimage_collections(d, m).into_iter().next().expect("Catalan(d) >= 1");
    let (a, b) = (m.lo(), m.hi());
    let len = a.ccw_to(b);
    let dd = BigRational::from_integer(BigInt::from(d.get()));
    let mut images = Vec::with_capacity(n);
    let mut collections = Vec::with_capacity(n);
    for k in 1..=n {
        let delta = &len / BigRational::from_integer(BigInt::from(2).pow(k as u32 + 1));
        let step = &delta / &dd;
        images.push(Chord::new(a.shift(&delta), b.shift(&-delta.clone())).unwrap());
        let mut col: Collection = limit
            .iter()
            .map(|c| {
                let moved = |x: &Angle| if &sigma(d, x) == a { x.shift(&step) } else { x.shift(&-step.clone()) };
                Chord::new(moved(c.lo()), moved(c.hi())).unwrap()
            })
            .collect();
        col.sort();
        collections.push(col);
    }
    SiblingSequence { images, collections, limit_image: m.clone(), limit }
}
