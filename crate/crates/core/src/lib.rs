//! Rees algebras of path ideals of cycles.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: exact sparse polynomials, monomial orders, text format;
//! * [`groebner`]: Buchberger's algorithm, normal forms, membership, elimination;
//! * [`monomial`]: monomial ideals, initial ideals, Hilbert series;
//! * [`rees`]: path ideals, symmetric/Rees/fiber ideals, the explicit
//!   generator families and the Jacobian dual;
//! * [`classify`]: linear/fiber type classification and numeric invariants;
//! * [`cli`]: the command-line front end.

pub mod classify;
pub mod cli;
mod error;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod rees;

pub use error::{Error, Result};
