//! Z2 homology of finite regular cell complexes driven by combinatorial
//! vector fields.
//!
//! A combinatorial vector field is a matching that pairs each cell with at
//! most one coface of dimension one higher. Its recurrent behaviour (rest
//! cells and closed V-path orbits) generates a chain complex whose boundary
//! operator counts V-path families mod 2; the homology of that complex is
//! the Z2 homology of the underlying space. The crate builds that operator
//! directly, checks it against the classical cellular boundary matrices, and
//! against a third route that rewrites every closed orbit into a pair of
//! rest cells and runs the ordinary discrete-Morse boundary on the result.
//!
//! Entry points:
//!
//! - [`field::parse_fixture`] reads a complex plus matching from fixture text;
//! - [`floer::build_floer_complex`] and [`floer::betti_floer`] run the direct
//!   boundary operator;
//! - [`homology::betti_cellular`] is the independent oracle;
//! - [`surgery::replace_all_orbits`] and [`surgery::morse_boundary`] run the
//!   orbit-replacement route; [`surgery::verify_chain_map`] checks both
//!   routes against each other entry by entry.
//!
//! Runnable demonstrations live in `examples/`; the `cvf` binary exposes the
//! same operations on fixture files.

pub mod complex;
pub mod config;
pub mod dot;
pub mod dynamics;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod floer;
pub mod homology;
pub mod parse;
pub mod random;
pub mod report;
pub mod surgery;

pub use complex::{parse_complex, AdjacencyMode, CellComplex, CellId, ComplexMode};
pub use config::Config;
pub use error::{Error, ParseError, Result};
pub use field::{parse_field, parse_fixture, ValidationReport, VectorField};
