use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::chords::Chord;
use crate::circle::Angle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InvalidDegree(u32),
    DegenerateChord(Angle),
    /// Angle literal that is not a reduced fraction in `[0, 1)`.
    BadAngle(String),
    Crossing(Chord, Chord),
    NotALeaf(Chord),
    CriticalLeaf(Chord),
    InvalidSiblingPair(&'static str),
    DegreeMismatch(u32, u32),
    MalformedPartition(Angle),
    EmptyClass,
    EquivalenceFailed,
    Unsupported(&'static str),
    NotAFace,
    TooFewPoints,
    /// A connected piece of `σ⁻¹(m)` that is neither a leaf nor a collapsing polygon.
    DichotomyFailed(Vec<Angle>),
    InvalidPortrait(&'static str),
    InvalidSeed(Chord),
    NoCompatibleCollection(Chord),
    AmbiguousCollection(Chord),
    UnknownPreset(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDegree(d) => write!(f, "invalid degree {d}: need d >= 2"),
            Error::DegenerateChord(a) => write!(f, "degenerate chord at {a}"),
            Error::BadAngle(s) => write!(f, "bad angle literal `{s}`: expected reduced p/q in [0,1) or 0"),
            Error::Crossing(a, b) => write!(f, "leaves {a} and {b} cross"),
            Error::NotALeaf(c) => write!(f, "{c} is not a leaf of the lamination"),
            Error::CriticalLeaf(c) => write!(f, "{c} is critical"),
            Error::InvalidSiblingPair(why) => write!(f, "invalid sibling pair: {why}"),
            Error::DegreeMismatch(a, b) => write!(f, "degree mismatch: {a} vs {b}"),
            Error::MalformedPartition(a) => write!(f, "malformed partition: {a} lies in two classes"),
            Error::EmptyClass => write!(f, "malformed partition: empty class"),
            Error::EquivalenceFailed => write!(f, "partition is not an invariant laminational equivalence"),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::NotAFace => write!(f, "gap is not a face of the lamination"),
            Error::TooFewPoints => write!(f, "need at least two points"),
            Error::DichotomyFailed(v) => {
                write!(f, "component with vertices")?;
                for a in v {
                    write!(f, " {a}")?;
                }
                write!(f, " is neither a leaf nor a collapsing polygon")
            }
            Error::InvalidPortrait(why) => write!(f, "invalid critical portrait: {why}"),
            Error::InvalidSeed(c) => write!(f, "seed is not forward invariant at {c}"),
            Error::NoCompatibleCollection(c) => write!(f, "no portrait-compatible preimage collection for {c}"),
            Error::AmbiguousCollection(c) => write!(f, "several portrait-compatible preimage collections for {c}"),
            Error::UnknownPreset(n) => write!(f, "unknown preset `{n}`"),
        }
    }
}

impl core::error::Error for Error {}
