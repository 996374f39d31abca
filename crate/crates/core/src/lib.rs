//! BL-algebras over exact arithmetic, good sequences, and the associated
//! lattice-ordered abelian group with strong unit, together with the functor
//! pair between BL-algebras and unital lattice-ordered groups and a
//! statement-indexed verification harness.
//!
//! The crate is organized around:
//!
//! - [`algebra`]: concrete algebras (Cayley tables, standard rational
//!   chains, ordinal sums, products, subalgebras, group intervals) and the
//!   primitive/derived operations, axiom validation, and the `blalg v1`
//!   file format;
//! - [`goodseq`]: finitely supported sequences with the adjacency law, their
//!   monoid addition and componentwise lattice;
//! - [`chang`]: the group of formal differences of good sequences, its
//!   order, lattice structure, strong unit, center decomposition and the
//!   concrete isomorphisms for the standard chains;
//! - [`lgroup`]: concrete unital lattice-ordered groups and the interval
//!   functor;
//! - [`morphism`]: validated homomorphisms, hom-set enumeration, and the
//!   functorial maps;
//! - [`props`]: corpus generation and the statement-indexed suites.

pub mod algebra;
pub mod chang;
pub mod error;
pub mod goodseq;
pub mod lgroup;
pub mod morphism;
pub mod props;
pub mod rat;

pub use algebra::{Algebra, AlgebraData, Carrier, ChainKind, Elt, Value};
pub use error::{Error, Result};
