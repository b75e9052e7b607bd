//! Analysis configuration shared across operations.

use crate::complex::AdjacencyMode;

#[derive(Debug, Clone, Copy)]
pub struct Config {
    /// How "common face" is read when merging V-path classes.
    pub adjacency: AdjacencyMode,
    /// Upper bound on the number of elementary cycles enumerated per field.
    pub cycle_budget: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            adjacency: AdjacencyMode::Codim1,
            cycle_budget: 1_000_000,
        }
    }
}
