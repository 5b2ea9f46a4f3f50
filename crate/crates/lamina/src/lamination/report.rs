use alloc::vec::Vec;
use core::fmt;

use crate::chords::Chord;
use crate::circle::Angle;

use super::structure::Wedge;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flag {
    UnlinkedOk,
    ForwardInvariant,
    BackwardInvariantRelative,
    SiblingInvariant,
    ThurstonInvariant,
    Proper,
    Clean,
    QLamination,
}

impl Flag {
    pub const ALL: [Flag; 8] = [
        Flag::UnlinkedOk,
        Flag::ForwardInvariant,
        Flag::BackwardInvariantRelative,
        Flag::SiblingInvariant,
        Flag::ThurstonInvariant,
        Flag::Proper,
        Flag::Clean,
        Flag::QLamination,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::UnlinkedOk => "unlinked_ok",
            Flag::ForwardInvariant => "forward_invariant",
            Flag::BackwardInvariantRelative => "backward_invariant_relative",
            Flag::SiblingInvariant => "sibling_invariant",
            Flag::ThurstonInvariant => "thurston_invariant",
            Flag::Proper => "proper",
            Flag::Clean => "clean",
            Flag::QLamination => "q_lamination",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessItem {
    Leaf(Chord),
    Pair(Chord, Chord),
    /// Vertices of a gap, positively ordered.
    Gap(Vec<Angle>),
    Wedge(Wedge),
    Vertex(Angle),
    Class(Vec<Angle>),
    Implication(&'static str),
}

impl fmt::Display for WitnessItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, v: &[Angle]| {
            f.write_str("[")?;
            for (i, a) in v.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str("]")
        };
        match self {
            WitnessItem::Leaf(c) => write!(f, "leaf {c}"),
            WitnessItem::Pair(a, b) => write!(f, "leaves {a} / {b}"),
            WitnessItem::Gap(v) => {
                f.write_str("gap ")?;
                list(f, v)
            }
            WitnessItem::Wedge(w) => write!(f, "wedge at {} ({} / {})", w.vertex, w.leaves.0, w.leaves.1),
            WitnessItem::Vertex(a) => write!(f, "vertex {a}"),
            WitnessItem::Class(v) => {
                f.write_str("class ")?;
                list(f, v)
            }
            WitnessItem::Implication(s) => write!(f, "implication {s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub flag: Flag,
    pub item: WitnessItem,
    pub reason: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImplicationStatus {
    Holds,
    /// The premise is false.
    Vacuous,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Implication {
    pub name: &'static str,
    pub status: ImplicationStatus,
}

/// Flags are `None` until the corresponding check has run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassificationReport {
    pub unlinked_ok: Option<bool>,
    pub forward_invariant: Option<bool>,
    pub backward_invariant_relative: Option<bool>,
    pub sibling_invariant: Option<bool>,
    pub thurston_invariant: Option<bool>,
    pub proper: Option<bool>,
    pub clean: Option<bool>,
    pub q_lamination: Option<bool>,
    pub witnesses: Vec<Witness>,
    /// Leaves exempt from the backward condition.
    pub frontier: Vec<Chord>,
    /// Gaps skipped by the gap-invariance check because they touch the frontier.
    pub exempt_gaps: usize,
    pub implications: Vec<Implication>,
}

impl ClassificationReport {
    pub fn get(&self, flag: Flag) -> Option<bool> {
        match flag {
            Flag::UnlinkedOk => self.unlinked_ok,
            Flag::ForwardInvariant => self.forward_invariant,
            Flag::BackwardInvariantRelative => self.backward_invariant_relative,
            Flag::SiblingInvariant => self.sibling_invariant,
            Flag::ThurstonInvariant => self.thurston_invariant,
            Flag::Proper => self.proper,
            Flag::Clean => self.clean,
            Flag::QLamination => self.q_lamination,
        }
    }

    pub fn set(&mut self, flag: Flag, v: bool) {
        let slot = match flag {
            Flag::UnlinkedOk => &mut self.unlinked_ok,
            Flag::ForwardInvariant => &mut self.forward_invariant,
            Flag::BackwardInvariantRelative => &mut self.backward_invariant_relative,
            Flag::SiblingInvariant => &mut self.sibling_invariant,
            Flag::ThurstonInvariant => &mut self.thurston_invariant,
            Flag::Proper => &mut self.proper,
            Flag::Clean => &mut self.clean,
            Flag::QLamination => &mut self.q_lamination,
        };
        *slot = Some(v);
    }

    pub fn witness(&mut self, flag: Flag, item: WitnessItem, reason: &'static str) {
        self.witnesses.push(Witness { flag, item, reason });
    }

    pub fn witnesses_for(&self, flag: Flag) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(move |w| w.flag == flag)
    }

    /// Copy every flag the other report has computed, and its witnesses.
    pub fn absorb(&mut self, other: ClassificationReport) {
        for f in Flag::ALL {
            if let Some(v) = other.get(f) {
                self.set(f, v);
            }
        }
        self.witnesses.extend(other.witnesses);
        if !other.frontier.is_empty() {
            self.frontier = other.frontier;
        }
        self.exempt_gaps = self.exempt_gaps.max(other.exempt_gaps);
        self.implications.extend(other.implications);
    }

    pub fn violations(&self) -> impl Iterator<Item = &Implication> {
        self.implications.iter().filter(|i| i.status == ImplicationStatus::Violated)
    }
}
