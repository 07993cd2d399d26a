//! Exact-arithmetic engine for minuscule posets.
//!
//! The pipeline runs from Cartan data to verdicts:
//!
//! 1. [`rootsys`] builds the Cartan matrix, symmetrizers and the Gram matrix
//!    of fundamental weights for a type in Bourbaki numbering.
//! 2. [`weight_orbit`] generates the weight lattice of a minuscule weight as
//!    the Weyl orbit of `λ`, ordered with `λ` at the bottom.
//! 3. [`heap`] reads a maximal chain of that lattice as a word of simple
//!    reflections and turns it into a labeled poset, together with the
//!    isomorphism `φ` between its order ideals and the lattice.
//! 4. [`dynamics`] implements toggles and rowmotion and splits the ideals
//!    into rowmotion orbits.
//! 5. [`homomesy`] averages statistics over each orbit and compares them,
//!    exactly, with the predicted constants.
//!
//! Every number in the crate is an integer or a [`Q`] rational. Nothing is
//! ever rounded.

pub mod bitset;
pub mod catalog;
pub mod dynamics;
pub mod error;
pub mod grid;
pub mod heap;
pub mod homomesy;
pub mod linalg;
pub mod rootsys;
pub mod weight_orbit;

pub use bitset::ElementSet;
pub use catalog::{CatalogEntry, EntryData, RankCaps};
pub use dynamics::OrbitDecomposition;
pub use error::{Error, Result};
pub use heap::{Heap, OrderIdeal};
pub use homomesy::{OrbitReport, StatReport, StatisticKind};
pub use rootsys::{CartanType, Family, RootSystem, Weight};
pub use weight_orbit::WeightLattice;

/// Exact rational used throughout.
pub type Q = num_rational::Rational64;
