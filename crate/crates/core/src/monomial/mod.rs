//! Monomial ideals: initial ideals, minimal generators, squarefreeness, the
//! x-condition, colon and sum by a monomial, and Hilbert series.

mod hilbert;

use std::sync::Arc;

use crate::error::Result;
use crate::groebner::{Budget, Ideal};
use crate::poly::{Monomial, OrderSpec, RingSpec};

pub use hilbert::{hilbert_numerator, hilbert_numerator_with, HilbertSeries, PivotStrategy};

/// Removes generators divisible by another generator and duplicates.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.exponents().cmp(b.exponents()))
    });
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// A monomial ideal, stored by its minimal generators.
///
/// Generators are kept sorted descending under the ring's ambient order.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialIdeal {
    ring: Arc<RingSpec>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: &Arc<RingSpec>, gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        let mut gens = minimalize(gens.into_iter().collect());
        gens.sort_by(|a, b| ring.ambient().cmp(b, a));
        MonomialIdeal {
            ring: ring.clone(),
            gens,
        }
    }

    pub fn zero(ring: &Arc<RingSpec>) -> MonomialIdeal {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Arc<RingSpec>) -> MonomialIdeal {
        MonomialIdeal {
            ring: ring.clone(),
            gens: vec![Monomial::one(ring.nvars())],
        }
    }

    /// Parses a list of monomials in text form.
    pub fn parse(ring: &Arc<RingSpec>, gens: &[&str]) -> Result<MonomialIdeal> {
        let gens = gens
            .iter()
            .map(|g| Monomial::parse(ring, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::new(ring, gens))
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn minimal_generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// No minimal generators, i.e. the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// True if both ideals have the same minimal generators.
    pub fn same_as(&self, other: &MonomialIdeal) -> bool {
        let mut a = self.gens.clone();
        let mut b = other.gens.clone();
        a.sort_by(|p, q| p.exponents().cmp(q.exponents()));
        b.sort_by(|p, q| p.exponents().cmp(q.exponents()));
        a == b
    }

    /// Text forms of the minimal generators.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| g.display(&self.ring).to_string())
            .collect()
    }
}

/// Minimal generators of `in_<(I)`: the leading monomials of the reduced basis.
pub fn initial_ideal(ideal: &Ideal, order: &OrderSpec, budget: &Budget) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Ok(MonomialIdeal::zero(ideal.ring()));
    }
    let gb = ideal.groebner_basis_with_budget(order, budget)?;
    Ok(MonomialIdeal::new(ideal.ring(), gb.leading_monomials()))
}

/// Every minimal generator has all exponents at most 1.
pub fn is_squarefree(m: &MonomialIdeal) -> bool {
    m.gens.iter().all(|g| g.is_squarefree())
}

/// Every minimal generator has degree at most 1 in each `x` variable. The
/// `x` variables are those of block `X`, or else those whose name starts with
/// `x`.
pub fn x_condition(m: &MonomialIdeal) -> bool {
    let ring = &m.ring;
    let xs: Vec<usize> = ring.block_vars("X").unwrap_or_else(|| {
        (0..ring.nvars())
            .filter(|&v| ring.name(v).starts_with('x'))
            .collect()
    });
    m.gens
        .iter()
        .all(|g| xs.iter().all(|&v| g.exponent(v) <= 1))
}

/// `M : p`, generated by `m / gcd(m, p)`.
pub fn colon_mono(m: &MonomialIdeal, p: &Monomial) -> MonomialIdeal {
    let gens = m
        .gens
        .iter()
        .map(|g| g.div(&g.gcd(p)).expect("gcd divides"));
    MonomialIdeal::new(&m.ring, gens)
}

/// `M + (p)`.
pub fn sum_mono(m: &MonomialIdeal, p: &Monomial) -> MonomialIdeal {
    MonomialIdeal::new(&m.ring, m.gens.iter().copied().chain(std::iter::once(*p)))
}
