//! Orientations of multigraphs in which every even circuit has a prescribed
//! clockwise parity: decision, certificates, forbidden substructures, arc
//! decompositions and the Pfaffian application.

pub mod arcs;
pub mod catalog;
pub mod circuits;
pub mod corpus;
pub mod error;
pub mod format;
pub mod gf2;
pub mod graph;
pub mod pfaffian;
pub mod scan;
pub mod solver;
pub mod transforms;

pub use error::{Error, Result};
