//! Exact-integer arithmetic for the Cayley-Dickson 2^n-ions and a catalog of
//! the zero-divisor structures that live in them: assessors, box-kites,
//! emanation tables ("sand mandalas") and kite-chain harmonics.
//!
//! Everything here is pure and deterministic. The crate is `no_std` and only
//! needs `alloc`; IO, the CLI and file formats live in the `boxkite` crate.
//!
//! Two independent basis-product engines are provided: [`cdp::Recursive`]
//! halves indices down to the reals, while [`table::build_table`] doubles a
//! table up from the reals using the quadrant rules. They are checked against
//! each other, and against the printed sedenion table in [`golden`].

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod boxkite;
pub mod cdp;
pub mod census;
pub mod error;
pub mod golden;
pub mod level;
pub mod mandala;
pub mod midden;
pub mod multivector;
pub mod table;
pub mod triplet;
pub mod unit;
pub mod zd;

pub use boxkite::{box_kite, BoxKite, Sail, SailKind, Vertex};
pub use cdp::{basis_product_recursive, BasisProduct, Recursive};
pub use error::{Error, Result};
pub use level::Level;
pub use mandala::{build_emanation_table, fold, heading_order, partition_sky_high, EmanationTable};
pub use multivector::{multiply, Multivector};
pub use table::{build_table, MultiplicationTable};
pub use triplet::{nato_triplets, NatoTriplet};
pub use unit::{Sign, SignedUnit};
pub use zd::{dmz_edge, dyad_product, Assessor, Diagonal, Orientation};
