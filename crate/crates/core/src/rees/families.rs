use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, RingSpec};
use crate::rees::{check_cycle, cycle_ring};

/// A labelled polynomial such as `f3` or `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedPoly {
    pub name: String,
    pub poly: Polynomial,
}

#[derive(Serialize)]
struct NamedText<'a> {
    name: &'a str,
    poly: String,
}

impl Serialize for NamedPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        NamedText {
            name: &self.name,
            poly: self.poly.to_string(),
        }
        .serialize(s)
    }
}

/// An explicit generator set in `T = K[y, x]`.
#[derive(Debug, Clone)]
pub struct Family {
    pub ring: Arc<RingSpec>,
    pub members: Vec<NamedPoly>,
}

impl Family {
    pub fn polys(&self) -> Vec<Polynomial> {
        self.members.iter().map(|m| m.poly.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Polynomial> {
        self.members
            .iter()
            .find(|m| m.name == name)
            .map(|m| &m.poly)
    }

    /// The members whose names start with `prefix` followed by a digit
    /// (e.g. all `f_j`).
    pub fn prefixed(&self, prefix: &str) -> Vec<Polynomial> {
        self.members
            .iter()
            .filter(|m| {
                m.name
                    .strip_prefix(prefix)
                    .is_some_and(|rest| rest.starts_with(|c: char| c.is_ascii_digit()))
            })
            .map(|m| m.poly.clone())
            .collect()
    }

    pub fn without(&self, name: &str) -> Family {
        Family {
            ring: self.ring.clone(),
            members: self
                .members
                .iter()
                .filter(|m| m.name != name)
                .cloned()
                .collect(),
        }
    }
}

struct Builder {
    ring: Arc<RingSpec>,
    members: Vec<NamedPoly>,
}

impl Builder {
    fn mono(
        &self,
        xs: impl IntoIterator<Item = i64>,
        ys: impl IntoIterator<Item = i64>,
    ) -> Monomial {
        let r = &self.ring;
        Monomial::product_of(
            r.nvars(),
            xs.into_iter()
                .map(|i| r.x(i))
                .chain(ys.into_iter().map(|i| r.y(i))),
        )
    }

    fn push(&mut self, name: String, a: Monomial, b: Monomial) {
        let poly = Polynomial::binomial(&self.ring, a, b);
        self.members.push(NamedPoly { name, poly });
    }
}

/// Generators for `t = n - 2`:
///
/// * `f_j = x_{j-2} y_j - x_j y_{j+1}`, `j = 1..n-1`;
/// * `g_k = x_{2k-2} ∏_{odd i<2k} y_i - x_{n-2} ∏_{even i<2k} y_i`, `k = 1..⌊n/2⌋`;
/// * `h = ∏_{odd i} y_i - ∏_{even i} y_i` when `n` is even.
pub fn family_n_minus_2(n: usize) -> Result<Family> {
    check_cycle(n)?;
    let mut b = Builder {
        ring: cycle_ring(n)?,
        members: Vec::new(),
    };
    let ni = n as i64;
    for j in 1..ni {
        let (p, q) = (b.mono([j - 2], [j]), b.mono([j], [j + 1]));
        b.push(format!("f{j}"), p, q);
    }
    for k in 1..=ni / 2 {
        let odd = (0..2 * k).filter(|i| i % 2 == 1);
        let even = (0..2 * k).filter(|i| i % 2 == 0);
        let (p, q) = (b.mono([2 * k - 2], odd), b.mono([ni - 2], even));
        b.push(format!("g{k}"), p, q);
    }
    if n.is_multiple_of(2) {
        let (p, q) = (
            b.mono([], (0..ni).filter(|i| i % 2 == 1)),
            b.mono([], (0..ni).filter(|i| i % 2 == 0)),
        );
        b.push("h".into(), p, q);
    }
    Ok(Family {
        ring: b.ring,
        members: b.members,
    })
}

/// Generators for `t = n/2` (`n` even):
///
/// * `f_j = x_{n/2+j} y_j - x_j y_{j+1}`, `j = 1..n-1`;
/// * `g_k = y_k ∏_{i=0}^{k-1} x_i - y_0 ∏_{i=n/2}^{k-1+n/2} x_i`, `k = 1..n/2-1`;
/// * `h_l = y_l y_{l+n/2} - y_0 y_{n/2}`, `l = 1..n/2-1`.
pub fn family_half(n: usize) -> Result<Family> {
    check_cycle(n)?;
    if n % 2 == 1 {
        return Err(Error::OutOfRange(format!("n={n} must be even")));
    }
    let mut b = Builder {
        ring: cycle_ring(n)?,
        members: Vec::new(),
    };
    let (ni, m) = (n as i64, n as i64 / 2);
    for j in 1..ni {
        let (p, q) = (b.mono([m + j], [j]), b.mono([j], [j + 1]));
        b.push(format!("f{j}"), p, q);
    }
    for k in 1..m {
        let (p, q) = (b.mono(0..k, [k]), b.mono(m..k + m, [0]));
        b.push(format!("g{k}"), p, q);
    }
    for l in 1..m {
        let (p, q) = (b.mono([], [l, l + m]), b.mono([], [0, m]));
        b.push(format!("h{l}"), p, q);
    }
    Ok(Family {
        ring: b.ring,
        members: b.members,
    })
}
