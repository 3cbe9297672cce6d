//! Path ideals of cycles and the ideals attached to their Rees algebras.
//!
//! Rings used here:
//!
//! * `K[x]`: the `x` block alone, holding the path ideal;
//! * `T = K[y, x]`: symmetric, Rees and fiber relations live here;
//! * `K[y, x, s]`: the graph of the Rees map, used to compute the kernel;
//! * `K[y]`: the fiber relations as an ideal of their own.
//!
//! All rings carry the cycle product order as their ambient order.

mod families;
mod jacobian;

use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::groebner::{eliminate, Budget, Ideal};
use crate::poly::{Monomial, OrderSpec, Polynomial, Rational, RingSpec};

pub use families::{family_half, family_n_minus_2, Family, NamedPoly};
pub use jacobian::{jacobian_dual, pfaffian, PolyMatrix};

/// Largest cycle for which `K[y, x, s]` fits the variable limit.
pub const MAX_CYCLE: usize = (crate::poly::MAX_VARS - 1) / 2;

/// The `t`-path ideal of the `n`-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathIdealSpec {
    n: usize,
    t: usize,
}

impl PathIdealSpec {
    pub fn new(n: usize, t: usize) -> Result<PathIdealSpec> {
        check_cycle(n)?;
        if t == 0 || t >= n {
            return Err(Error::OutOfRange(format!(
                "path length t={t} must satisfy 1 <= t <= n-1 = {}",
                n - 1
            )));
        }
        Ok(PathIdealSpec { n, t })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn gcd(&self) -> usize {
        self.n.gcd(&self.t)
    }
}

pub(crate) fn check_cycle(n: usize) -> Result<()> {
    if !(3..=MAX_CYCLE).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "cycle size n={n} must satisfy 3 <= n <= {MAX_CYCLE}"
        )));
    }
    Ok(())
}

/// `T = K[y, x]` for the `n`-cycle.
pub fn cycle_ring(n: usize) -> Result<Arc<RingSpec>> {
    Ok(Arc::new(RingSpec::cycle(n, false)?))
}

/// `K[y, x, s]` for the `n`-cycle, with `s` eliminated first.
pub fn rees_ring(n: usize) -> Result<Arc<RingSpec>> {
    Ok(Arc::new(RingSpec::cycle(n, true)?))
}

fn restrict(t: &RingSpec, drop: &[usize]) -> Result<(Arc<RingSpec>, Vec<Option<usize>>)> {
    let (r, map) = t.without(drop, |map| {
        t.ambient().remap(map, map.iter().flatten().count())
    })?;
    Ok((Arc::new(r), map))
}

fn x_vars(t: &RingSpec) -> Vec<usize> {
    t.block_vars("X").expect("cycle ring has an X block")
}

fn y_vars(t: &RingSpec) -> Vec<usize> {
    t.block_vars("Y").expect("cycle ring has a Y block")
}

/// `K[y]` for the `n`-cycle, with the old→new map from `T`.
pub fn fiber_ring(n: usize) -> Result<(Arc<RingSpec>, Vec<Option<usize>>)> {
    let t = RingSpec::cycle(n, false)?;
    restrict(&t, &x_vars(&t))
}

/// `K[x]` for the `n`-cycle, with the old→new map from `T`.
pub fn path_ring(n: usize) -> Result<(Arc<RingSpec>, Vec<Option<usize>>)> {
    let t = RingSpec::cycle(n, false)?;
    restrict(&t, &y_vars(&t))
}

/// `u_j = x_j x_{j+1} ⋯ x_{j+t-1}` in a cycle ring, for `j = 1..n`.
pub fn path_monomials(spec: PathIdealSpec, ring: &RingSpec) -> Vec<Monomial> {
    let (n, t) = (spec.n as i64, spec.t as i64);
    (1..=n)
        .map(|j| Monomial::product_of(ring.nvars(), (j..j + t).map(|i| ring.x(i))))
        .collect()
}

/// `I_t(C_n)` in `K[x]`.
pub fn path_ideal(spec: PathIdealSpec) -> Result<Ideal> {
    let t = RingSpec::cycle(spec.n, false)?;
    let (xr, map) = restrict(&t, &y_vars(&t))?;
    let mut gens: Vec<Monomial> = Vec::new();
    for u in path_monomials(spec, &t) {
        let m = u
            .remap(&map, xr.nvars())
            .expect("path monomials involve x only");
        if !gens.contains(&m) {
            gens.push(m);
        }
    }
    let polys = gens
        .into_iter()
        .map(|m| Polynomial::monomial(&xr, Rational::ONE, m))
        .collect();
    Ideal::new(&xr, polys)
}

/// The symmetric algebra relations `L` in `T`: all pairwise lcm syzygies
/// `(lcm/u_i) y_i - (lcm/u_j) y_j`, `i < j`.
pub fn sym_relations(spec: PathIdealSpec) -> Result<Ideal> {
    let ring = cycle_ring(spec.n)?;
    let us = path_monomials(spec, &ring);
    let nv = ring.nvars();
    let mut gens: Vec<Polynomial> = Vec::new();
    for i in 0..us.len() {
        for j in i + 1..us.len() {
            let l = us[i].lcm(&us[j]);
            let a = l
                .div(&us[i])
                .unwrap()
                .mul(&Monomial::var(nv, ring.y(i as i64 + 1), 1));
            let b = l
                .div(&us[j])
                .unwrap()
                .mul(&Monomial::var(nv, ring.y(j as i64 + 1), 1));
            let p = Polynomial::binomial(&ring, a, b);
            if !gens.iter().any(|g| *g == p || *g == -&p) {
                gens.push(p);
            }
        }
    }
    Ideal::new(&ring, gens)
}

/// The graph ideal `(y_j - u_j s : j = 1..n)` in `K[y, x, s]`.
pub fn graph_ideal(spec: PathIdealSpec) -> Result<Ideal> {
    let ring = rees_ring(spec.n)?;
    let s = Monomial::var(ring.nvars(), ring.s().expect("rees ring has s"), 1);
    let gens = path_monomials(spec, &ring)
        .into_iter()
        .enumerate()
        .map(|(j, u)| {
            Polynomial::binomial(
                &ring,
                Monomial::var(ring.nvars(), ring.y(j as i64 + 1), 1),
                u.mul(&s),
            )
        })
        .collect();
    Ideal::new(&ring, gens)
}

/// The Rees ideal `J = ker(φ)` in `T`, by eliminating `s` from the graph
/// ideal. The reduced basis under the cycle product order is cached on the
/// result.
pub fn rees_ideal(spec: PathIdealSpec, budget: &Budget) -> Result<Ideal> {
    let g = graph_ideal(spec)?;
    let ring = g.ring().clone();
    let s = ring.s().unwrap();
    eliminate(&g, &[s], ring.ambient(), budget)
}

/// The elimination order on `T` used to compute fiber relations: degrevlex on
/// the `x` block first, then the cycle product order.
pub fn x_elimination_order(n: usize) -> Result<OrderSpec> {
    let t = RingSpec::cycle(n, false)?;
    OrderSpec::eliminate_first(&x_vars(&t), t.ambient())
}

/// The fiber relations `H = J ∩ K[y]`, as an ideal of `K[y]`.
pub fn fiber_ideal(spec: PathIdealSpec, budget: &Budget) -> Result<Ideal> {
    fiber_ideal_of(&rees_ideal(spec, budget)?, budget)
}

/// `J ∩ K[y]` for an ideal `J` of `T`.
pub fn fiber_ideal_of(j: &Ideal, budget: &Budget) -> Result<Ideal> {
    let ring = j.ring();
    let n = ring.cycle_size().ok_or(Error::RingMismatch)?;
    eliminate(j, &x_vars(ring), &x_elimination_order(n)?, budget)
}

/// Extends an ideal of `K[y]` to `T` (the ideal `H T`).
pub fn extend_to_cycle_ring(h: &Ideal, n: usize) -> Result<Ideal> {
    let t = cycle_ring(n)?;
    let (yr, map) = fiber_ring(n)?;
    if **h.ring() != *yr {
        return Err(Error::RingMismatch);
    }
    let mut inverse = vec![None; yr.nvars()];
    for (old, new) in map.iter().enumerate() {
        if let Some(k) = new {
            inverse[*k] = Some(old);
        }
    }
    h.extend_to(&t, &inverse)
}

/// `m_i = ∏_{j ≡ i mod d} y_j` for `i = 1..d`, as monomials of `T`.
fn fiber_monomials(n: usize, d: usize, ring: &RingSpec) -> Vec<Monomial> {
    (1..=d)
        .map(|i| Monomial::product_of(ring.nvars(), (i..=n).step_by(d).map(|j| ring.y(j as i64))))
        .collect()
}

/// `(m_i - m_d : i = 1..d-1)` in `K[y]`, where `d = gcd(n, t)`.
pub fn fiber_ideal_closed_form(spec: PathIdealSpec) -> Result<Ideal> {
    let t = RingSpec::cycle(spec.n, false)?;
    let (yr, map) = fiber_ring(spec.n)?;
    let d = spec.gcd();
    let ms: Vec<Monomial> = fiber_monomials(spec.n, d, &t)
        .into_iter()
        .map(|m| m.remap(&map, yr.nvars()).expect("pure y monomial"))
        .collect();
    let gens = ms[..d - 1]
        .iter()
        .map(|m| Polynomial::binomial(&yr, *m, ms[d - 1]))
        .collect();
    Ideal::new(&yr, gens)
}
