//! Vertex-degree-based topological indices of simple graphs and executable
//! bounds on the first geometric-arithmetic index GA₁.
//!
//! * [`graph`]: the graph type, edge-list and graph6 I/O, enumeration of
//!   small connected graphs up to isomorphism, seeded random sampling.
//! * [`indices`]: GA₁, Zagreb, Randić, general Randić and NK* indices.
//! * [`bounds`]: every GA₁ inequality as a [`bounds::BoundCheck`] with
//!   slack, tightness and equality-class bookkeeping.
//! * [`sweep`]: exhaustive and random verification campaigns and an
//!   edge-flip search for near-extremal graphs.

pub mod bounds;
pub mod graph;
pub mod indices;
pub mod sweep;

pub use bounds::{BoundCheck, BoundChecker, BoundError, TheoremId, Tolerance};
pub use graph::{DegreeStats, Graph, GraphError};
pub use indices::{IndexError, IndexPanel};
pub use sweep::{SweepError, SweepReport};
