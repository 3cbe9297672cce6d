use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::budget::{Budget, Meter};
use crate::groebner::engine::{self, Divisors, GbStats, Terms};
use crate::poly::{Monomial, OrderSpec, Polynomial, RingSpec, Term};

fn to_terms(p: &Polynomial, order: &OrderSpec) -> Terms {
    let t = p.terms().to_vec();
    if order == p.ring().ambient() {
        t
    } else {
        engine::sort_terms(t, order)
    }
}

fn from_terms(ring: &Arc<RingSpec>, t: Terms, order: &OrderSpec) -> Polynomial {
    if order == ring.ambient() {
        Polynomial::from_sorted_unchecked(ring, t)
    } else {
        Polynomial::from_terms(ring, t.into_iter().map(|t| (t.coeff, t.mono)))
    }
}

fn check_ring(ring: &Arc<RingSpec>, polys: &[Polynomial], order: &OrderSpec) -> Result<()> {
    if order.nvars() != ring.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ring.nvars(),
            found: order.nvars(),
        });
    }
    for p in polys {
        if !(Arc::ptr_eq(p.ring(), ring) || **p.ring() == **ring) {
            return Err(Error::RingMismatch);
        }
    }
    Ok(())
}

/// A reduced Gröbner basis under a fixed order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<RingSpec>,
    order: OrderSpec,
    elements: Vec<Polynomial>,
    sorted: Vec<Terms>,
    stats: GbStats,
}

impl GroebnerBasis {
    fn from_sorted(
        ring: &Arc<RingSpec>,
        order: OrderSpec,
        sorted: Vec<Terms>,
        stats: GbStats,
    ) -> Self {
        let elements = sorted
            .iter()
            .map(|t| from_terms(ring, t.clone(), &order))
            .collect();
        GroebnerBasis {
            ring: ring.clone(),
            order,
            elements,
            sorted,
            stats,
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    /// Elements, sorted by leading monomial (largest first).
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|t| t[0].mono).collect()
    }

    /// True if the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.sorted.len() == 1 && self.sorted[0][0].mono.is_one()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_ring(&self.ring, std::slice::from_ref(f), &self.order)?;
        let budget = Budget::unlimited();
        let mut meter = Meter::new(&budget);
        let divs = Divisors::new(self.sorted.iter().map(|t| t.as_slice()));
        let r = engine::reduce_full(to_terms(f, &self.order), &divs, &self.order, &mut meter)?;
        Ok(from_terms(&self.ring, r, &self.order))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// JSON certificate: the order descriptor plus the basis in canonical text.
    pub fn certificate(&self) -> GbCertificate {
        GbCertificate {
            order: self.order.clone(),
            variables: self.ring.names().to_vec(),
            basis: self.elements.iter().map(|p| p.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GbCertificate {
    pub order: OrderSpec,
    pub variables: Vec<String>,
    pub basis: Vec<String>,
}

/// Reduce `f` modulo the list `basis` (any nonzero polynomials, used in list
/// order).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &OrderSpec) -> Result<Polynomial> {
    check_ring(f.ring(), basis, order)?;
    let sorted: Vec<Terms> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| engine::make_monic(to_terms(p, order)))
        .collect();
    let budget = Budget::unlimited();
    let mut meter = Meter::new(&budget);
    let divs = Divisors::new(sorted.iter().map(|t| t.as_slice()));
    let r = engine::reduce_full(to_terms(f, order), &divs, order, &mut meter)?;
    Ok(from_terms(f.ring(), r, order))
}

/// Reduced Gröbner basis of `(gens)` under `order`.
pub fn buchberger(
    ring: &Arc<RingSpec>,
    gens: &[Polynomial],
    order: &OrderSpec,
) -> Result<GroebnerBasis> {
    buchberger_with_budget(ring, gens, order, &Budget::unlimited())
}

pub fn buchberger_with_budget(
    ring: &Arc<RingSpec>,
    gens: &[Polynomial],
    order: &OrderSpec,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    check_ring(ring, gens, order)?;
    let input = gens.iter().map(|p| to_terms(p, order)).collect();
    let (sorted, stats) = engine::buchberger(input, order, budget)?;
    Ok(GroebnerBasis::from_sorted(
        ring,
        order.clone(),
        sorted,
        stats,
    ))
}

/// A pair whose S-polynomial does not reduce to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct PairCertificate {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

/// Result of [`is_groebner_basis`].
#[derive(Debug, Clone, PartialEq)]
pub enum GbCheck {
    Basis,
    NotBasis(PairCertificate),
}

impl GbCheck {
    pub fn is_basis(&self) -> bool {
        matches!(self, GbCheck::Basis)
    }
}

/// Checks that every S-polynomial of `g` reduces to zero modulo `g`. On
/// failure the first offending pair (indices into `g`) and its remainder are
/// returned.
pub fn is_groebner_basis(g: &[Polynomial], order: &OrderSpec) -> Result<GbCheck> {
    let Some(first) = g.first() else {
        return Ok(GbCheck::Basis);
    };
    check_ring(first.ring(), g, order)?;
    if g.iter().any(|p| p.is_zero()) {
        return Err(Error::ZeroPolynomial);
    }
    let sorted: Vec<Terms> = g
        .iter()
        .map(|p| engine::make_monic(to_terms(p, order)))
        .collect();
    Ok(
        match engine::find_nonreducing_pair(&sorted, order, &Budget::unlimited())? {
            None => GbCheck::Basis,
            Some(f) => GbCheck::NotBasis(PairCertificate {
                i: f.i,
                j: f.j,
                remainder: from_terms(first.ring(), f.remainder, order),
            }),
        },
    )
}

/// An ideal given by generators, with Gröbner bases cached per order.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<RingSpec>,
    generators: Vec<Polynomial>,
    cache: RwLock<HashMap<OrderSpec, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: RwLock::new(self.cache.read().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(ring: &Arc<RingSpec>, generators: Vec<Polynomial>) -> Result<Ideal> {
        check_ring(ring, &generators, ring.ambient())?;
        let generators = generators.into_iter().filter(|p| !p.is_zero()).collect();
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn zero(ring: &Arc<RingSpec>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Ideal sum.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    /// Seeds the cache with a basis known to be reduced for this ideal.
    pub(crate) fn with_basis(self, gb: GroebnerBasis) -> Ideal {
        self.cache
            .write()
            .unwrap()
            .insert(gb.order.clone(), Arc::new(gb));
        self
    }

    pub fn cached_basis(&self, order: &OrderSpec) -> Option<Arc<GroebnerBasis>> {
        self.cache.read().unwrap().get(order).cloned()
    }

    pub fn groebner_basis(&self, order: &OrderSpec) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis_with_budget(order, &Budget::unlimited())
    }

    pub fn groebner_basis_with_budget(
        &self,
        order: &OrderSpec,
        budget: &Budget,
    ) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cached_basis(order) {
            return Ok(gb);
        }
        let gb = Arc::new(buchberger_with_budget(
            &self.ring,
            &self.generators,
            order,
            budget,
        )?);
        let mut cache = self.cache.write().unwrap();
        Ok(cache.entry(order.clone()).or_insert(gb).clone())
    }

    pub fn contains(&self, f: &Polynomial, order: &OrderSpec, budget: &Budget) -> Result<bool> {
        self.groebner_basis_with_budget(order, budget)?.contains(f)
    }

    /// `self ⊆ other`, via membership of each generator in `other`'s basis.
    pub fn is_subset_of(&self, other: &Ideal, order: &OrderSpec, budget: &Budget) -> Result<bool> {
        if !(Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring) {
            return Err(Error::RingMismatch);
        }
        let gb = other.groebner_basis_with_budget(order, budget)?;
        for g in &self.generators {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Generators moved into another ring through a variable map.
    pub fn extend_to(&self, target: &Arc<RingSpec>, map: &[Option<usize>]) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|p| p.remap(target, map).ok_or(Error::RingMismatch))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }
}

/// `f ∈ I`.
pub fn ideal_membership(f: &Polynomial, ideal: &Ideal, order: &OrderSpec) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    ideal.contains(f, order, &Budget::unlimited())
}

/// `I1 = I2` by mutual inclusion.
pub fn ideal_equal(a: &Ideal, b: &Ideal, order: &OrderSpec) -> Result<bool> {
    ideal_equal_with_budget(a, b, order, &Budget::unlimited())
}

pub fn ideal_equal_with_budget(
    a: &Ideal,
    b: &Ideal,
    order: &OrderSpec,
    budget: &Budget,
) -> Result<bool> {
    Ok(a.is_subset_of(b, order, budget)? && b.is_subset_of(a, order, budget)?)
}

/// Elimination ideal `I ∩ K[remaining variables]`.
///
/// `order` must be an elimination order whose leading stages hold exactly the
/// dropped variables. The result lives in the ring obtained by deleting them,
/// whose ambient order is the restriction of the original ambient order; its
/// reduced basis under that order is cached on the returned ideal.
pub fn eliminate(
    ideal: &Ideal,
    drop: &[usize],
    order: &OrderSpec,
    budget: &Budget,
) -> Result<Ideal> {
    let ring = ideal.ring();
    if order.nvars() != ring.nvars() || !order.is_elimination_for(drop) {
        return Err(Error::InvalidOrder(
            "not an elimination order for the dropped variables".into(),
        ));
    }
    let (sub, map) = ring.without(drop, |map| {
        ring.ambient().remap(map, map.iter().flatten().count())
    })?;
    let sub = Arc::new(sub);
    let gb = ideal.groebner_basis_with_budget(order, budget)?;
    let restricted = order.remap(&map, sub.nvars())?;
    let kept: Vec<Terms> = gb
        .sorted
        .iter()
        .filter_map(|t| {
            t.iter()
                .map(|term| {
                    Some(Term::new(
                        term.coeff.clone(),
                        term.mono.remap(&map, sub.nvars())?,
                    ))
                })
                .collect::<Option<Terms>>()
        })
        .collect();
    let stats = gb.stats;
    let elements: Vec<Polynomial> = kept
        .iter()
        .map(|t| from_terms(&sub, t.clone(), &restricted))
        .collect();
    let out = Ideal::new(&sub, elements)?;
    let basis = GroebnerBasis::from_sorted(&sub, restricted.clone(), kept, stats);
    Ok(out.with_basis(basis))
}
