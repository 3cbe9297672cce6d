use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;
use crate::poly::order::OrderSpec;
use crate::poly::rational::Rational;
use crate::poly::ring::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Rational, mono: Monomial) -> Term {
        Term { coeff, mono }
    }
}

/// Sparse polynomial over the rationals.
///
/// Terms are nonzero, pairwise distinct, and sorted strictly descending under
/// the ring's ambient order. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<RingSpec>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingSpec>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<RingSpec>, c: Rational) -> Polynomial {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Arc<RingSpec>) -> Polynomial {
        Self::constant(ring, Rational::ONE)
    }

    pub fn monomial(ring: &Arc<RingSpec>, c: Rational, m: Monomial) -> Polynomial {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term::new(c, m)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The variable with index `v`.
    pub fn var(ring: &Arc<RingSpec>, v: usize) -> Polynomial {
        Self::monomial(ring, Rational::ONE, Monomial::var(ring.nvars(), v, 1))
    }

    /// `a - b` for two monomials; the shape of every generator in this crate.
    pub fn binomial(ring: &Arc<RingSpec>, a: Monomial, b: Monomial) -> Polynomial {
        Self::from_terms(ring, vec![(Rational::ONE, a), (-Rational::ONE, b)])
    }

    /// Builds a normalized polynomial from arbitrary (possibly repeated or
    /// zero) terms.
    pub fn from_terms(
        ring: &Arc<RingSpec>,
        terms: impl IntoIterator<Item = (Rational, Monomial)>,
    ) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (c, m) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            let e = acc.entry(m).or_insert(Rational::ZERO);
            *e = &*e + &c;
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| Term::new(c, m))
            .collect();
        let order = ring.ambient();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms already sorted and reduced under the ambient order.
    pub(crate) fn from_sorted_unchecked(ring: &Arc<RingSpec>, terms: Vec<Term>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Re-sorts and merges terms; a no-op on normalized input.
    pub fn normalize(&self) -> Polynomial {
        Self::from_terms(
            &self.ring,
            self.terms.iter().map(|t| (t.coeff.clone(), t.mono)),
        )
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let prods = self.terms.iter().flat_map(|a| {
            other
                .terms
                .iter()
                .map(move |b| (&a.coeff * &b.coeff, a.mono.mul(&b.mono)))
        });
        Ok(Self::from_terms(&self.ring, prods))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.ambient();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Rational| if negate { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.cmp(&a.mono, &b.mono) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term::new(sign(&b.coeff), b.mono));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a.coeff - &b.coeff
                    } else {
                        &a.coeff + &b.coeff
                    };
                    if !c.is_zero() {
                        out.push(Term::new(c, a.mono));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(
            other.terms[j..]
                .iter()
                .map(|t| Term::new(sign(&t.coeff), t.mono)),
        );
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(&t.coeff * c, t.mono))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(&t.coeff * c, t.mono.mul(m)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Largest term under `order`.
    pub fn leading_term(&self, order: &OrderSpec) -> Result<&Term> {
        if order.nvars() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: order.nvars(),
            });
        }
        if order == self.ring.ambient() {
            return self.terms.first().ok_or(Error::ZeroPolynomial);
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.mono, &b.mono))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Scales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &OrderSpec) -> Result<Polynomial> {
        let lc = self.leading_term(order)?.coeff.recip();
        Ok(self.scale(&lc))
    }

    /// Total degree (maximum over terms); `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// True if all terms share the same degree in each of the given variable groups.
    pub fn is_homogeneous_in(&self, groups: &[&[usize]]) -> bool {
        let Some(first) = self.terms.first() else {
            return true;
        };
        groups.iter().all(|g| {
            let d = first.mono.degree_in(g);
            self.terms.iter().all(|t| t.mono.degree_in(g) == d)
        })
    }

    /// Moves the polynomial into `target` through a variable map.
    pub fn remap(&self, target: &Arc<RingSpec>, map: &[Option<usize>]) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push((t.coeff.clone(), t.mono.remap(map, target.nvars())?));
        }
        Some(Self::from_terms(target, terms))
    }

    /// Substitutes each variable by a polynomial (over `target`).
    pub fn substitute(&self, target: &Arc<RingSpec>, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: images.len(),
            });
        }
        let mut acc = Self::zero(target);
        for t in &self.terms {
            let mut p = Self::constant(target, t.coeff.clone());
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                for _ in 0..e {
                    p = p.try_mul(&images[v])?;
                }
            }
            acc = acc.try_add(&p)?;
        }
        Ok(acc)
    }

    /// Parses the canonical text format: terms joined by `+`/`-`, each term an
    /// optional rational coefficient and a `*`-joined monomial.
    pub fn parse(ring: &Arc<RingSpec>, s: &str) -> Result<Polynomial> {
        crate::poly::text::parse_polynomial(ring, s)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::poly::text::write_polynomial(f, self)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator forms panic on ring mismatch; use the `try_*` methods to recover.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(-&t.coeff, t.mono))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<RingSpec> {
        Arc::new(RingSpec::cycle(6, false).unwrap())
    }

    fn p(r: &Arc<RingSpec>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn cancellation_and_difference_of_squares() {
        let r = ring();
        assert_eq!(&p(&r, "x1 - y1") + &p(&r, "y1"), p(&r, "x1"));
        assert_eq!(&p(&r, "y1 - y2") * &p(&r, "y1 + y2"), p(&r, "y1^2 - y2^2"));
        let z = Polynomial::zero(&r);
        assert!((&z * &p(&r, "x1*y2 + 3")).is_zero());
    }

    #[test]
    fn leading_terms() {
        let r = ring();
        let f1 = p(&r, "x5*y1 - x1*y2");
        assert_eq!(
            f1.leading_term(r.ambient()).unwrap().mono,
            Monomial::parse(&r, "x5*y1").unwrap()
        );
        let h1 = p(&r, "y0*y3 - y1*y4");
        assert_eq!(
            h1.leading_term(r.ambient()).unwrap().mono,
            Monomial::parse(&r, "y1*y4").unwrap()
        );
        let c = Polynomial::constant(&r, Rational::from(7));
        assert_eq!(
            c.leading_term(r.ambient()).unwrap().coeff,
            Rational::from(7)
        );
        assert_eq!(
            Polynomial::zero(&r).leading_term(r.ambient()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn ring_mismatch() {
        let r = ring();
        let other = Arc::new(RingSpec::cycle(5, false).unwrap());
        assert_eq!(
            p(&r, "x1").try_add(&p(&other, "x1")),
            Err(Error::RingMismatch)
        );
        assert_eq!(
            p(&r, "x1").try_mul(&p(&other, "x1")),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn display_is_descending_ambient() {
        let r = ring();
        let f = p(&r, "-x1*y2 + x5*y1");
        assert_eq!(f.to_string(), "x5*y1 - x1*y2");
        assert_eq!(p(&r, "2*x1^2 - 1/3").to_string(), "2*x1^2 - 1/3");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }
}
