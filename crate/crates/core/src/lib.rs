//! Exact combinatorics for queer dual equivalence.
//!
//! The crate is `no_std` (it needs `alloc`). It provides
//!
//! * partitions, strict partitions and diagram geometry ([`shapes`]),
//! * standard Young tableaux, signed shifted tableaux and concatenated
//!   shifted tableaux with their reading words and descent sets ([`tableaux`]),
//! * the elementary dual equivalence involutions and the queer involution
//!   ([`involutions`]),
//! * labeled involution graphs ([`degraph`]),
//! * fundamental quasisymmetric expansions and exact basis decomposition
//!   ([`qsym`]),
//! * auditors for the dual equivalence and queer dual equivalence axioms
//!   ([`axioms`]),
//! * Schur P products and structure constants ([`product`]).
//!
//! Coordinates are 1-indexed in French notation: row 1 is the bottom row.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;

pub mod axioms;
pub mod degraph;
pub mod involutions;
pub mod product;
pub mod qsym;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
pub use shapes::{Cell, Partition, StrictPartition};
pub use tableaux::{
    ConcatTableau, DescentSet, Entry, SignedShiftedTableau, StandardYoungTableau, Word,
};
