//! Optimal discrete Morse matchings and erasability for 2-dimensional
//! simplicial complexes and simplicial 3-manifolds.
//!
//! The centre of the crate is [`acfm`], a dynamic program over nice tree
//! decompositions that computes a maximum alternating cycle-free matching of a
//! graph. Applied to the spine of a complex (its triangle/edge incidence graph)
//! it yields the erasability number of a 2-complex and, combined with the
//! spanning-tree completion in [`morse`], an optimal Morse matching of a closed
//! 3-manifold. [`treewidth`] builds the decompositions the dynamic program
//! consumes, and [`reductions`] holds the constructive reductions between
//! erasability and Minimum Axiom Set.
//!
//! Everything here is pure and allocation-only; file formats, timing and the
//! command line live in the companion `morsetw` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod acfm;
pub mod complex;
pub mod graph;
pub mod morse;
pub mod reductions;
pub mod treewidth;

pub use acfm::{brute_force_acfm, is_alternating_cycle_free, max_acfm, AcfmError, AcfmSolution, SolveOptions};
pub use complex::{ComplexError, Simplex, SimplicialComplex};
pub use graph::{Graph, GraphError, Side};
pub use morse::{MorseError, MorseMatching};
pub use reductions::{MasInstance, ReductionError};
pub use treewidth::{NiceTreeDecomposition, TreeDecomposition, TreewidthError};
