//! Lamination corpora: pullback towers, the parallel family, named presets,
//! the hexagon example and convergent sibling tuples.

mod gapfree;
mod hexagon;
mod presets;
mod pullback;
mod tuples;

pub use gapfree::{gapfree_family, GapfreeFamily, SawtoothReport, SawtoothStep};
pub use hexagon::{hexagon_example, search_hexagon, HexagonExample};
pub use presets::{preset, preset_spec, PRESETS};
pub use pullback::{compatible_collections, pullback, CriticalPortrait, PullbackSpec};
pub use tuples::{converging_sibling_tuples, SiblingSequence};
