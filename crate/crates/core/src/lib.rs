//! Constructions and checkers around t-chordal digraphs.
//!
//! A digraph is *t-chordal* when every induced directed cycle has length
//! exactly `t`. This crate provides:
//!
//! * [`digraph`]: simple digraphs, strongly connected components, exact
//!   clique number of the underlying graph, the `dgf` text format;
//! * [`chordality`]: induced directed cycle and path search, t-chordality
//!   with certificates, membership in the class with no short induced cycle
//!   and no induced path of a given order;
//! * [`dicoloring`]: exact dichromatic number and k-dicoloring enumeration;
//! * [`amplifier`]: the amplification construction and the sequence of
//!   t-chordal digraphs with growing dichromatic number built from it;
//! * [`cnf`] and [`reduction`]: a gadget reduction from CNF satisfiability
//!   to non-t-chordality, with brute-force verification.

pub mod amplifier;
pub mod chordality;
pub mod cnf;
pub mod dicoloring;
pub mod digraph;
mod error;
pub mod reduction;
pub mod undirected;

pub use error::{Error, Result};
