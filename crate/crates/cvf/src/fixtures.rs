//! Built-in fixtures used by the examples and the test suite.

use std::sync::Arc;

use crate::complex::CellComplex;
use crate::field::{parse_fixture, VectorField};

/// Boundary of the 3-simplex with two rest cells and two closed orbits.
pub const TETRAHEDRON: &str = include_str!("../fixtures/tetrahedron.cvf");
/// Triangulated torus carrying closed orbits of index 1 and index 0.
pub const TORUS_A: &str = include_str!("../fixtures/torus_a.cvf");
/// Triangulated torus with four rest cells and one closed orbit of index 1.
pub const TORUS_B: &str = include_str!("../fixtures/torus_b.cvf");
/// Cube surface in regular CW mode with two rest squares and three orbits.
pub const CUBE: &str = include_str!("../fixtures/cube.cvf");
/// Complete graph K4 with an orbit around the outer triangle.
pub const K4: &str = include_str!("../fixtures/k4.cvf");
/// Triangulated Klein bottle whose index-1 orbit is twisted.
pub const KLEIN: &str = include_str!("../fixtures/klein.cvf");

pub const ALL: &[(&str, &str)] = &[
    ("tetrahedron", TETRAHEDRON),
    ("torus_a", TORUS_A),
    ("torus_b", TORUS_B),
    ("cube", CUBE),
    ("k4", K4),
    ("klein", KLEIN),
];

/// Parse a built-in fixture, panicking on malformed text; the test suite
/// guards every fixture.
pub fn load(text: &str) -> (Arc<CellComplex>, VectorField) {
    parse_fixture(text).expect("built-in fixture parses")
}
