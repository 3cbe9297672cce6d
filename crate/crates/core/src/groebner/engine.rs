//! Buchberger kernel on order-sorted term vectors.
//!
//! Everything here works on `Vec<Term>` sorted strictly descending under the
//! active order, leading term first. Basis elements are kept monic so a
//! reduction step never divides coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::groebner::budget::{Budget, Meter};
use crate::poly::{Monomial, OrderSpec, Rational, Term};

pub(crate) type Terms = Vec<Term>;

/// Counters reported by a Buchberger run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GbStats {
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
    pub pairs_skipped_coprime: u64,
    pub pairs_skipped_chain: u64,
    pub reduction_steps: u64,
    pub basis_size: usize,
}

pub(crate) fn sort_terms(mut t: Terms, order: &OrderSpec) -> Terms {
    t.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
    t
}

pub(crate) fn make_monic(mut t: Terms) -> Terms {
    if let Some(first) = t.first() {
        if !first.coeff.is_one() {
            let inv = first.coeff.recip();
            for term in &mut t {
                term.coeff = &term.coeff * &inv;
            }
        }
    }
    t
}

/// `a - c*q*b` where `a`, `b` are sorted under `order`.
fn sub_scaled(
    a: impl Iterator<Item = Term>,
    c: &Rational,
    q: &Monomial,
    b: &[Term],
    order: &OrderSpec,
) -> Terms {
    let mut out = Vec::with_capacity(b.len() + 8);
    let mut a = a.peekable();
    let mut bi = b.iter().map(|t| (t.mono.mul(q), t)).peekable();
    loop {
        let ord = match (a.peek(), bi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some((m, _))) => order.cmp(&x.mono, m),
        };
        match ord {
            Ordering::Greater => out.push(a.next().unwrap()),
            Ordering::Less => {
                let (m, t) = bi.next().unwrap();
                out.push(Term::new(-&(c * &t.coeff), m));
            }
            Ordering::Equal => {
                let x = a.next().unwrap();
                let (m, t) = bi.next().unwrap();
                let v = &x.coeff - &(c * &t.coeff);
                if !v.is_zero() {
                    out.push(Term::new(v, m));
                }
            }
        }
    }
    out
}

/// Divisor set for reductions: monic polynomials with their leading monomials
/// stored contiguously.
pub(crate) struct Divisors<'a> {
    lms: Vec<Monomial>,
    polys: Vec<&'a [Term]>,
}

impl<'a> Divisors<'a> {
    pub fn new(polys: impl IntoIterator<Item = &'a [Term]>) -> Self {
        let polys: Vec<&[Term]> = polys.into_iter().filter(|p| !p.is_empty()).collect();
        let lms = polys.iter().map(|p| p[0].mono).collect();
        Divisors { lms, polys }
    }

    #[inline]
    fn find(&self, m: &Monomial) -> Option<usize> {
        self.lms.iter().position(|lm| lm.divides(m))
    }
}

/// Full reduction: the remainder has no term divisible by any divisor's
/// leading monomial. The largest reducible term is always reduced first, by
/// the first divisor in list order.
pub(crate) fn reduce_full(
    f: Terms,
    divs: &Divisors<'_>,
    order: &OrderSpec,
    meter: &mut Meter<'_>,
) -> Result<Terms> {
    let mut rem = Vec::new();
    let mut p = f;
    let mut start = 0;
    while start < p.len() {
        let lead = p[start].mono;
        match divs.find(&lead) {
            None => {
                rem.push(std::mem::replace(
                    &mut p[start],
                    Term::new(Rational::ZERO, lead),
                ));
                start += 1;
            }
            Some(k) => {
                meter.tick()?;
                let g = divs.polys[k];
                let q = lead.div(&g[0].mono).expect("divisor");
                let c = std::mem::take(&mut p[start].coeff);
                let rest = std::mem::take(&mut p).into_iter().skip(start + 1);
                p = sub_scaled(rest, &c, &q, &g[1..], order);
                start = 0;
            }
        }
    }
    Ok(rem)
}

/// S-polynomial of two monic polynomials.
pub(crate) fn s_polynomial(f: &[Term], g: &[Term], order: &OrderSpec) -> Terms {
    let lcm = f[0].mono.lcm(&g[0].mono);
    let qf = lcm.div(&f[0].mono).unwrap();
    let qg = lcm.div(&g[0].mono).unwrap();
    let scaled_f = f[1..]
        .iter()
        .map(|t| Term::new(t.coeff.clone(), t.mono.mul(&qf)));
    sub_scaled(scaled_f, &Rational::ONE, &qg, &g[1..], order)
}

struct Entry {
    poly: Terms,
    lm: Monomial,
    sugar: u32,
    active: bool,
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<'o> {
    order: &'o OrderSpec,
    entries: Vec<Entry>,
    pairs: BTreeMap<(u32, u64), Pair>,
    seq: u64,
    stats: GbStats,
}

impl<'o> State<'o> {
    fn active(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(i, _)| i)
    }

    fn divisors(&self) -> Divisors<'_> {
        Divisors::new(
            self.entries
                .iter()
                .filter(|e| e.active)
                .map(|e| e.poly.as_slice()),
        )
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let (a, b) = (&self.entries[i], &self.entries[j]);
        (a.sugar + lcm.degree() - a.lm.degree()).max(b.sugar + lcm.degree() - b.lm.degree())
    }

    /// Gebauer–Möller update for a new basis element.
    fn add(&mut self, poly: Terms, sugar: u32) {
        let k = self.entries.len();
        let lm_h = poly[0].mono;

        // candidate pairs (i, k)
        let mut cand: Vec<(usize, Monomial, bool)> = self
            .active()
            .map(|i| {
                let lm = self.entries[i].lm;
                (i, lm.lcm(&lm_h), lm.is_coprime(&lm_h))
            })
            .collect();

        // chain criterion among new pairs: drop (i,k) if another new pair's
        // lcm strictly divides its lcm
        let lcms: Vec<Monomial> = cand.iter().map(|c| c.1).collect();
        let before = cand.len();
        cand.retain(|(_, l, _)| !lcms.iter().any(|o| o != l && o.divides(l)));
        self.stats.pairs_skipped_chain += (before - cand.len()) as u64;

        // equal lcms: keep the first; drop the whole class if any member is coprime
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::with_capacity(cand.len());
        for c in cand {
            if let Some(prev) = kept.iter_mut().find(|p| p.1 == c.1) {
                prev.2 |= c.2;
                self.stats.pairs_skipped_chain += 1;
            } else {
                kept.push(c);
            }
        }

        // chain criterion on existing pairs
        let entries = &self.entries;
        let before = self.pairs.len();
        self.pairs.retain(|_, p| {
            !(lm_h.divides(&p.lcm)
                && entries[p.i].lm.lcm(&lm_h) != p.lcm
                && entries[p.j].lm.lcm(&lm_h) != p.lcm)
        });
        self.stats.pairs_skipped_chain += (before - self.pairs.len()) as u64;

        for e in self.entries.iter_mut().filter(|e| e.active) {
            if lm_h.divides(&e.lm) {
                e.active = false;
            }
        }
        self.entries.push(Entry {
            poly,
            lm: lm_h,
            sugar,
            active: true,
        });

        for (i, lcm, coprime) in kept {
            if coprime {
                self.stats.pairs_skipped_coprime += 1;
                continue;
            }
            let s = self.pair_sugar(i, k, &lcm);
            self.seq += 1;
            self.pairs.insert((s, self.seq), Pair { i, j: k, lcm });
        }
    }
}

/// Reduced Gröbner basis of the ideal generated by `input` (each sorted under
/// `order`). The result is monic, interreduced, and sorted by leading
/// monomial, largest first.
pub(crate) fn buchberger(
    input: Vec<Terms>,
    order: &OrderSpec,
    budget: &Budget,
) -> Result<(Vec<Terms>, GbStats)> {
    let mut meter = Meter::new(budget);
    let mut st = State {
        order,
        entries: Vec::new(),
        pairs: BTreeMap::new(),
        seq: 0,
        stats: GbStats::default(),
    };

    let mut input: Vec<Terms> = input
        .into_iter()
        .filter(|p| !p.is_empty())
        .map(make_monic)
        .collect();
    input.sort_by(|a, b| {
        let (da, db) = (
            a.iter().map(|t| t.mono.degree()).max(),
            b.iter().map(|t| t.mono.degree()).max(),
        );
        da.cmp(&db).then_with(|| order.cmp(&a[0].mono, &b[0].mono))
    });

    for f in input {
        meter.check()?;
        let sugar = f.iter().map(|t| t.mono.degree()).max().unwrap_or(0);
        let r = reduce_full(f, &st.divisors(), order, &mut meter)?;
        if !r.is_empty() {
            st.add(make_monic(r), sugar);
        }
    }

    while let Some((&key, _)) = st.pairs.first_key_value() {
        let pair = st.pairs.remove(&key).unwrap();
        meter.check()?;
        st.stats.pairs_reduced += 1;
        let s = s_polynomial(&st.entries[pair.i].poly, &st.entries[pair.j].poly, st.order);
        let r = reduce_full(s, &st.divisors(), order, &mut meter)?;
        if r.is_empty() {
            st.stats.zero_reductions += 1;
        } else {
            st.add(make_monic(r), key.0);
        }
    }

    // interreduce tails of the minimal basis
    let active: Vec<usize> = st.active().collect();
    let mut reduced = Vec::with_capacity(active.len());
    {
        let divs = st.divisors();
        for &i in &active {
            let p = &st.entries[i].poly;
            let mut tail = reduce_full(p[1..].to_vec(), &divs, order, &mut meter)?;
            let mut out = Vec::with_capacity(tail.len() + 1);
            out.push(p[0].clone());
            out.append(&mut tail);
            reduced.push(out);
        }
    }
    reduced.sort_by(|a, b| order.cmp(&b[0].mono, &a[0].mono));
    st.stats.reduction_steps = meter.steps;
    st.stats.basis_size = reduced.len();
    Ok((reduced, st.stats))
}

/// Outcome of checking every S-pair of a candidate basis.
pub(crate) struct PairFailure {
    pub i: usize,
    pub j: usize,
    pub remainder: Terms,
}

/// Checks that every S-polynomial of `basis` (monic, sorted) reduces to zero.
/// Pairs with coprime leading monomials are skipped.
pub(crate) fn find_nonreducing_pair(
    basis: &[Terms],
    order: &OrderSpec,
    budget: &Budget,
) -> Result<Option<PairFailure>> {
    let mut meter = Meter::new(budget);
    let divs = Divisors::new(basis.iter().map(|p| p.as_slice()));
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (f, g) = (&basis[i], &basis[j]);
            if f.is_empty() || g.is_empty() || f[0].mono.is_coprime(&g[0].mono) {
                continue;
            }
            meter.check()?;
            let s = s_polynomial(f, g, order);
            let r = reduce_full(s, &divs, order, &mut meter)?;
            if !r.is_empty() {
                return Ok(Some(PairFailure { i, j, remainder: r }));
            }
        }
    }
    Ok(None)
}
