//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod polynomial;
mod rational;
mod ring;
mod text;

pub use monomial::Monomial;
pub use order::{monomial_cmp, BaseOrder, OrderSpec, Stage};
pub use polynomial::{Polynomial, Term};
pub use rational::Rational;
pub use ring::{Block, RingSpec};

/// Largest supported number of ring variables (enough for `K[x, y, s]` up to
/// the 15-cycle).
pub const MAX_VARS: usize = 32;

/// Leading term of a nonzero polynomial under `order`.
pub fn leading_term<'a>(order: &OrderSpec, p: &'a Polynomial) -> crate::Result<&'a Term> {
    p.leading_term(order)
}
