//! Exact combinatorial commutative algebra on monomial ideals and
//! simplicial complexes: Stanley decompositions and Stanley depth,
//! interval partitions and partitionability, shellability, Alexander
//! duality, Reisner-type Cohen-Macaulay tests over an exact field,
//! clean and pretty-clean prime filtrations.
//!
//! Everything is computed exactly (big-integer linear algebra, exhaustive
//! search with certificates); no result is approximated. All values are
//! immutable after construction and every operation is a pure function,
//! so sharing across threads is safe and output is deterministic.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `stanley-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod complex;
pub mod filtration;
pub mod fixtures;
pub mod gorenstein;
pub mod homology;
pub mod ideal;
pub mod partitions;
pub mod poly;
pub mod shelling;
pub mod vset;

pub use complex::SimplicialComplex;
pub use ideal::{Monomial, MonomialIdeal, MonomialPrime};
pub use partitions::{Interval, Partition, StanleyDecomposition, StanleySpace};
pub use vset::{Face, VertexSet, MAX_VERTICES};
