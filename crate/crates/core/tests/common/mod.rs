//! Strategies and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use cycle_rees::groebner::Ideal;
use cycle_rees::monomial::HilbertSeries;
use cycle_rees::poly::{BaseOrder, Monomial, OrderSpec, Polynomial, Rational, RingSpec};
use cycle_rees::rees::PolyMatrix;
use proptest::prelude::*;

/// `K[x1..xk]` with degrevlex.
pub fn small_ring(k: usize) -> Arc<RingSpec> {
    Arc::new(RingSpec::single_block("x", 1, k, BaseOrder::DegRevLex).unwrap())
}

pub fn parse(ring: &Arc<RingSpec>, s: &str) -> Polynomial {
    Polynomial::parse(ring, s).unwrap()
}

pub fn parse_all(ring: &Arc<RingSpec>, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|p| parse(ring, p)).collect()
}

pub fn ideal(ring: &Arc<RingSpec>, s: &[&str]) -> Ideal {
    Ideal::new(ring, parse_all(ring, s)).unwrap()
}

pub fn texts(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

pub fn monomial(max_exp: u16, nvars: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(|e| Monomial::from_exponents(&e).unwrap())
}

/// A random block order on `nvars` variables: a random partition into
/// consecutive stages of a random permutation, each stage lex or degrevlex.
pub fn order(nvars: usize) -> impl Strategy<Value = OrderSpec> {
    (
        Just((0..nvars).collect::<Vec<usize>>()).prop_shuffle(),
        prop::collection::vec((1..=nvars, any::<bool>()), 1..=nvars),
    )
        .prop_map(move |(perm, cuts)| {
            let mut stages = Vec::new();
            let mut start = 0;
            for (len, lex) in cuts {
                if start >= nvars {
                    break;
                }
                let end = (start + len).min(nvars);
                stages.push((
                    perm[start..end].to_vec(),
                    if lex {
                        BaseOrder::Lex
                    } else {
                        BaseOrder::DegRevLex
                    },
                ));
                start = end;
            }
            if start < nvars {
                stages.push((perm[start..].to_vec(), BaseOrder::DegRevLex));
            }
            OrderSpec::new(nvars, stages).unwrap()
        })
}

pub fn coeff() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_filter_map("nonzero", |(n, d)| (n != 0).then(|| Rational::new(n, d)))
}

/// Random polynomial with up to `terms` terms.
pub fn polynomial(
    ring: Arc<RingSpec>,
    terms: usize,
    max_exp: u16,
) -> impl Strategy<Value = Polynomial> {
    let nv = ring.nvars();
    prop::collection::vec((coeff(), monomial(max_exp, nv)), 0..=terms)
        .prop_map(move |ts| Polynomial::from_terms(&ring, ts))
}

/// Random binomial `m1 - m2` with `m1 ≠ m2`.
pub fn binomial(ring: Arc<RingSpec>, max_exp: u16) -> impl Strategy<Value = Polynomial> {
    let nv = ring.nvars();
    (monomial(max_exp, nv), monomial(max_exp, nv))
        .prop_filter("distinct", |(a, b)| a != b)
        .prop_map(move |(a, b)| Polynomial::binomial(&ring, a, b))
}

/// Inclusion–exclusion: `K(z) = Σ_{S ⊆ G} (-1)^{|S|} z^{deg lcm(S)}`, over
/// `(1-z)^N`, canonicalized.
pub fn hilbert_by_inclusion_exclusion(gens: &[Monomial], nvars: usize) -> HilbertSeries {
    let k = gens.len();
    let mut num: Vec<i64> = Vec::new();
    for mask in 0u32..(1 << k) {
        let mut l = Monomial::one(nvars);
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                l = l.lcm(g);
            }
        }
        let d = l.degree() as usize;
        if num.len() <= d {
            num.resize(d + 1, 0);
        }
        num[d] += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
    }
    HilbertSeries::new(num, nvars as u32)
}

/// Determinant by Laplace expansion along the first row.
pub fn determinant(a: &PolyMatrix) -> Polynomial {
    let idx: Vec<usize> = (0..a.dim()).collect();
    det_minor(a, 0, &idx)
}

fn det_minor(a: &PolyMatrix, row: usize, cols: &[usize]) -> Polynomial {
    let ring = a.ring();
    if cols.is_empty() {
        return Polynomial::one(ring);
    }
    let mut total = Polynomial::zero(ring);
    for (k, &c) in cols.iter().enumerate() {
        let entry = a.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &det_minor(a, row + 1, &rest);
        total = if k % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

/// Random skew-symmetric matrix of dimension `dim` over `ring`.
pub fn skew_matrix(
    ring: Arc<RingSpec>,
    dim: usize,
    terms: usize,
) -> impl Strategy<Value = PolyMatrix> {
    let n_upper = dim * (dim - 1) / 2;
    prop::collection::vec(polynomial(ring.clone(), terms, 1), n_upper).prop_map(move |ups| {
        let mut m = PolyMatrix::zero(&ring, dim);
        let mut it = ups.into_iter();
        for i in 0..dim {
            for j in i + 1..dim {
                let p = it.next().unwrap();
                m.set(j, i, -&p);
                m.set(i, j, p);
            }
        }
        m
    })
}
