//! Toolkit for maximal outerplanar graphs (mops): structural operations,
//! instance generators, exact isolation/domination solvers, constructive
//! bound certificates, and a verification harness.
//!
//! A mop is a triangulation of a convex polygon; instances are encoded as a
//! vertex count plus the set of non-crossing diagonals, with vertices labeled
//! in Hamiltonian-cycle order.

pub mod construct;
pub mod gen;
pub mod io;
pub mod mop;
pub mod report;
pub mod simple_graph;
pub mod solve;

pub use mop::{DiagonalPartition, FaceApex, Mop, MopError, MopViolation, Side};
pub use simple_graph::{GraphViolation, SimpleGraph};
pub use solve::{Coloring, IsolatingSet, Provenance};
