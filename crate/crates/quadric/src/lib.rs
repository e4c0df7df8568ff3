//! Combinatorial toolkit for quadric complexes.
//!
//! A quadric complex is a simply connected square complex whose 1-skeleton is
//! 4-bridged (every isometrically embedded cycle has length 4); equivalently a
//! 4-flag complex over a 4-bridged graph.  This crate provides:
//!
//! * finite simplicial graphs with exact metric queries and the 4-bridged
//!   recognition procedure ([`graph`]),
//! * square complexes, 4-flag completion and the quadricity checks
//!   ([`complex`]),
//! * planar disc diagrams with square cells: curvature in exact quarter-pi
//!   units, Gauss-Bonnet, dual curves and their pathologies, carriers,
//!   local-minimality reduction ([`diagram`]), and the polygonal-cell analogue
//!   ([`poly`]),
//! * bi-dismantling of bipartite graphs, BFS orders and invariant bicliques of
//!   finite group actions ([`dismantle`]),
//! * group presentations, pieces, the C(4) and T(4) small cancellation
//!   conditions and Helly-type checks on 2-complexes ([`cancellation`]),
//! * the quadrization of a 2-complex and bounded Cayley balls ([`quadrize`]),
//! * line-oriented text formats for all of the above ([`io`]) and a
//!   deterministic CLI ([`cli`]).
//!
//! All arithmetic is exact (integer distances, integer quarter-pi curvature).
//! Every value is immutable after construction and every operation is a pure
//! function, so shared concurrent reads are safe.

pub mod cancellation;
pub mod cli;
pub mod complex;
pub mod diagram;
pub mod dismantle;
pub mod graph;
pub mod io;
pub mod planar;
pub mod poly;
pub mod quadrize;
pub mod report;

mod error;

pub use error::{Error, Result};
