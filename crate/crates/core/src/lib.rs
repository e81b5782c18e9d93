//! Exact combinatorial machinery for compact homogeneous spaces `G/P` with
//! `b₂ = 1`: finite root systems, Weyl groups, parabolic quotients and their
//! Schubert bases, divisor quantum products via the quantum Chevalley rule,
//! and the Gromov width / Seshadri bound reports those products certify.
//!
//! Everything is integer or rational arithmetic; no floating point enters any
//! computation. Bounds are carried as exact rational multiples of π and only
//! rendered as decimals at presentation layers.

pub mod bounds;
pub mod cartan;
pub mod chevalley;
pub mod error;
pub mod matrix;
pub mod schubert;
pub mod weyl;

pub use bounds::{
    monotone_constant, product_bound, seshadri_bound, single_space_bound, BoundReport,
    CitationStep, FactorSpace, NormalizationScale, NormalizedFactor, Rational,
};
pub use cartan::{
    build_root_system, pair_weight_coroot, simple_reflection_action, CartanType, Family,
    RootSystem, Weight,
};
pub use chevalley::{
    chevalley_multiply, curve_degree_of_root, divisor_multiply_combination, extract_gw_invariant,
    verify_nonvanishing_lemma, GwWitness, QuantumProduct,
};
pub use error::{Error, Result};
pub use matrix::SquareMatrix;
pub use schubert::{Grading, ParabolicChoice, SchubertClass, SpaceInvariants};
pub use weyl::{
    enumerate_group, longest_element, reflection_from_root, simple_reflection, GroupEnumeration,
    WeylElement,
};

/// Default cap on Weyl group enumeration (number of elements).
///
/// Covers every simple type through E₆ comfortably; E₇ (order 2 903 040) is
/// only reachable when a caller raises the cap explicitly, and E₈ is out of
/// desk-scale reach by design.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;
