//! Finite invariant laminations of the unit circle under `σ_d(x) = d·x mod 1`.
//!
//! Angles are exact rationals; nothing in this crate touches floating point.
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod chords;
pub mod circle;
pub mod equivalence;
pub mod generators;
pub mod lamination;

mod error;

pub use chords::{chord_image, crosses, is_critical, same_orientation, Chord, ChordOrPoint};
pub use circle::{in_cyclic_order, orbit_info, preimages, sigma, Angle, Degree, OrbitInfo};
pub use error::Error;
pub use lamination::Lamination;

pub type Result<T, E = Error> = core::result::Result<T, E>;
