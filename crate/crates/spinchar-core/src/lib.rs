//! Exact computation of irreducible characters and spin (projective) characters
//! of the generalized symmetric groups G(m,1,n), of their representation groups
//! R(G(m,1,n)), and of the limit characters of G(m,1,∞).
//!
//! The crate is `no_std` + `alloc`: every value in the formula path is exact
//! (rationals, cyclotomic numbers); floats appear only in the basic-spin-matrix
//! oracle, which exists to cross-check the exact formulas.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod cyclo;
pub mod combin;
pub mod group;
pub mod matrep;
pub mod finitechar;
pub mod limits;

pub use cyclo::{Cyclo, CycloField};
pub use group::{Cover, SpinElement};
