//! discharge-lab: structural analysis of plane graphs.
//!
//! The library models plane graphs as rotation systems and provides:
//!
//! * face derivation, validation, and the rotation-text / planar_code
//!   formats ([`plane_graph`]);
//! * detectors for cycles, chords, claws, biclaws, triclaws, splitting
//!   paths, good paths, and light 7-faces ([`structures`]);
//! * membership tests for the two graph classes under study
//!   ([`class_membership`]);
//! * configuration audits and a reduction-condition checker
//!   ([`configurations`]);
//! * an exact-rational discharging engine with a full transfer ledger
//!   ([`discharging`]);
//! * an exact 3-coloring solver with precoloring extension ([`coloring`]);
//! * the `discharge-lab` command line ([`cli`]).
//!
//! With the default `parallel` feature, batch processing and boundary
//! coloring enumeration fan out over a rayon pool; without it everything
//! runs sequentially.

pub mod class_membership;
pub mod cli;
pub mod coloring;
pub mod configurations;
pub mod discharging;
pub mod exec;
pub mod plane_graph;
pub mod rat;
pub mod structures;

pub use plane_graph::{Face, GraphError, PlaneGraph};
pub use rat::Rat;
