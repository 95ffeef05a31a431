//! Exact fixed-point combinatorics and intersection arithmetic for Hilbert
//! schemes of points on a smooth surface.
//!
//! Everything here is pure and allocation-only: partitions and their
//! monomial ideals, torus tangent weights and Bialynicki-Birula cells,
//! the nested-pair combinatorics of the incidence variety, blow-up lattice
//! arithmetic driving the recurrence for the Nakajima constants, and a
//! bosonic Fock space whose character matches Göttsche's product.
//!
//! The crate is `no_std` (with `alloc`) when built without the default
//! `std` feature.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod equivariant;
mod error;
pub mod fock;
pub mod goettsche;
pub mod incidence;
pub mod lattice;
pub mod monomial;
pub mod nakajima;
pub mod partition;
pub mod poly;

pub use error::Error;

pub type Result<T> = core::result::Result<T, Error>;
