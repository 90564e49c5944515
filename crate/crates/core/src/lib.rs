//! Stiefel-Whitney classes of orthogonal representations of `SL(n,q)` and
//! `GL(n,q)` computed from character values.

pub mod arith;
pub mod chardata_io;
pub mod eab2;
pub mod error;
pub mod f2poly;
pub mod swc_gl;
pub mod swc_sl;
pub mod symfunc;

pub use error::{Error, Result};
pub use f2poly::{Basis, GF2Poly, Monomial, Ring};
