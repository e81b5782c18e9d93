//! Benchmark helpers; the measurements live in `benches/pipeline.rs`.

use qchev_core::{CartanType, Family, ParabolicChoice};

/// Parabolic data for a descriptor-style triple; panics on invalid input
/// because benches run on a fixed list.
pub fn parabolic(family: Family, rank: usize, node: usize) -> ParabolicChoice {
    ParabolicChoice::build(
        CartanType::new(family, rank).expect("bench types are valid"),
        node,
    )
    .expect("bench nodes are valid")
}
