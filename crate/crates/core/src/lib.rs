//! Clique complexes of line graphs.
//!
//! The crate builds finite simple graphs and their line graphs, forms clique
//! complexes, runs structured and greedy simplicial collapses, and computes
//! reduced integer homology through Smith normal form. The [`verify`] module
//! packages these pieces into checks that compare predicted homotopy-type
//! shadows (Betti numbers and torsion) against computed ones.

pub mod collapse;
pub mod complex;
mod error;
pub mod generate;
pub mod graph;
pub mod homology;
pub mod verify;

pub use collapse::{CollapseTrace, CollapsiblePair, StarPartition};
pub use complex::{Complex, FVector, Simplex};
pub use error::{Error, Result};
pub use graph::{CirculantSpec, ComponentClass, EdgeId, Graph, LineGraph, VertexId};
pub use homology::{HomologyProfile, LerayVerdict, SnfResult};
pub use verify::{Certification, CheckSpec, Provenance, Report};
