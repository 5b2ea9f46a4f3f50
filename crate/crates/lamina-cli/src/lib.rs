//! File formats, SVG rendering and the `lamina` command line.

pub mod cli;
pub mod io;
pub mod svg;
