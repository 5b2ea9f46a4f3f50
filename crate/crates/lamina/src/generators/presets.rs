use alloc::string::ToString;
use alloc::vec::Vec;

use crate::chords::Chord;
use crate::circle::Degree;
use crate::lamination::Lamination;
use crate::Error;

use super::pullback::{pullback, CriticalPortrait, PullbackSpec};

pub const PRESETS: [&str; 4] = ["rabbit", "basilica", "chebyshev", "dendrite"];

/// Seed and portrait of a named tower.
pub fn preset_spec(name: &str, depth: usize) -> Result<PullbackSpec, Error> {
    let (seed, portrait): (Vec<Chord>, Vec<Chord>) = match name {
        "rabbit" => (
            alloc::vec![Chord::frac((1, 7), (2, 7)), Chord::frac((2, 7), (4, 7)), Chord::frac((1, 7), (4, 7))],
            alloc::vec![Chord::frac((1, 14), (8, 14))],
        ),
        "basilica" => (alloc::vec![Chord::frac((1, 3), (2, 3))], alloc::vec![Chord::frac((1, 6), (2, 3))]),
        "chebyshev" => (alloc::vec![Chord::frac((1, 4), (3, 4))], alloc::vec![Chord::frac((1, 4), (3, 4))]),
        "dendrite" => (alloc::vec![Chord::frac((1, 8), (5, 8))], alloc::vec![Chord::frac((1, 8), (5, 8))]),
        _ => return Err(Error::UnknownPreset(name.to_string())),
    };
    let d = Degree::TWO;
    Ok(PullbackSpec {
        seed: Lamination::new(d, seed)?,
        portrait: CriticalPortrait::new(d, portrait)?,
        depth,
        include_portrait: false,
    })
}

pub fn preset(name: &str, depth: usize) -> Result<Lamination, Error> {
    pullback(&preset_spec(name, depth)?)
}
