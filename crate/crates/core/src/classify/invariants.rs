use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::linalg;
use crate::monomial::{hilbert_numerator, initial_ideal, HilbertSeries};
use crate::poly::{BaseOrder, Monomial, Polynomial, Rational, RingSpec};
use crate::rees::{check_cycle, rees_ideal, PathIdealSpec};

fn check_t(n: usize, t: usize) -> Result<()> {
    check_cycle(n)?;
    if t == 0 || t > n {
        return Err(Error::OutOfRange(format!(
            "t={t} must satisfy 1 <= t <= n = {n}"
        )));
    }
    Ok(())
}

/// Krull dimension of the fiber cone: `n - gcd(n, t) + 1`.
pub fn fiber_dimension(n: usize, t: usize) -> Result<usize> {
    check_t(n, t)?;
    Ok(n - n.gcd(&t) + 1)
}

/// Exact rank of the `n × n` circulant whose first column has `t` leading
/// ones followed by zeros.
pub fn circulant_rank(n: usize, t: usize) -> Result<usize> {
    check_t(n, t)?;
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    if (i + n - k) % n < t {
                        Rational::ONE
                    } else {
                        Rational::ZERO
                    }
                })
                .collect()
        })
        .collect();
    Ok(linalg::rank(&rows))
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_pow(a: &[i64], e: usize) -> Vec<i64> {
    (0..e).fold(vec![1], |acc, _| poly_mul(&acc, a))
}

fn shift(a: &[i64], k: usize) -> Vec<i64> {
    let mut v = vec![0; k];
    v.extend_from_slice(a);
    v
}

fn add_into(acc: &mut Vec<i64>, b: &[i64]) {
    if acc.len() < b.len() {
        acc.resize(b.len(), 0);
    }
    for (i, &c) in b.iter().enumerate() {
        acc[i] += c;
    }
}

/// Closed form of the Hilbert series of the Rees algebra of `I_{n-2}(C_n)`.
///
/// * `n = 2s+1`: `(Σ_{k<s} (1+z)^{2k+1} z^{s-1-k} + z^s) / (1-z)^{2s+2}`;
/// * `n = 2s`: `Σ_{k<s} (1+z)^{2k} z^{s-1-k} / (1-z)^{2s+1}`.
pub fn hilbert_closed_form_n_minus_2(n: usize) -> Result<HilbertSeries> {
    check_cycle(n)?;
    let s = n / 2;
    let one_plus_z = [1, 1];
    let mut num = Vec::new();
    let odd = n % 2 == 1;
    for k in 0..s {
        let e = if odd { 2 * k + 1 } else { 2 * k };
        add_into(&mut num, &shift(&poly_pow(&one_plus_z, e), s - 1 - k));
    }
    if odd {
        add_into(&mut num, &shift(&[1], s));
    }
    let e = if odd { 2 * s + 2 } else { 2 * s + 1 };
    Ok(HilbertSeries::new(num, e as u32))
}

/// Computed versus closed-form Hilbert series for `t = n - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertCheck {
    pub n: usize,
    pub computed: HilbertSeries,
    pub expected: HilbertSeries,
}

impl HilbertCheck {
    pub fn ok(&self) -> bool {
        self.computed == self.expected
    }
}

/// Hilbert series of `T/J` for `t = n - 2`, computed from the initial ideal
/// of `J` under the cycle product order.
pub fn rees_hilbert_series(n: usize, budget: &Budget) -> Result<HilbertSeries> {
    check_cycle(n)?;
    let j = rees_ideal(PathIdealSpec::new(n, n - 2)?, budget)?;
    let order = j.ring().ambient().clone();
    Ok(hilbert_numerator(&initial_ideal(&j, &order, budget)?))
}

pub fn verify_hilbert(n: usize, budget: &Budget) -> Result<HilbertCheck> {
    Ok(HilbertCheck {
        n,
        computed: rees_hilbert_series(n, budget)?,
        expected: hilbert_closed_form_n_minus_2(n)?,
    })
}

/// Palindromy of the computed h-vector for `t = n - 2`. Defined for every
/// `n`, so odd `n` serves as a negative control.
pub fn gorenstein_witness(n: usize, budget: &Budget) -> Result<bool> {
    Ok(rees_hilbert_series(n, budget)?.is_palindromic())
}

/// The Artinian reduction used for the Cohen–Macaulay type, odd `n`:
/// `(x_i^2 - x_{i+1}x_{i+2} : i = 1..n-3) + (x_{n-2}^2, x_{n-1}^2, x_1x_2)` in
/// `K[x_1, …, x_{n-1}]` under lex.
pub fn artinian_reduction(n: usize) -> Result<Ideal> {
    check_cycle(n)?;
    if n.is_multiple_of(2) {
        return Err(Error::OutOfRange(format!("n={n} must be odd")));
    }
    let ring = Arc::new(RingSpec::single_block("x", 1, n - 1, BaseOrder::Lex)?);
    let nv = ring.nvars();
    // variable x_i sits at index i - 1
    let x = |i: usize| i - 1;
    let sq = |i: usize| Monomial::var(nv, x(i), 2);
    let mut gens = Vec::new();
    for i in 1..=n.saturating_sub(3) {
        gens.push(Polynomial::binomial(
            &ring,
            sq(i),
            Monomial::product_of(nv, [x(i + 1), x(i + 2)]),
        ));
    }
    let one = Rational::ONE;
    gens.push(Polynomial::monomial(&ring, one.clone(), sq(n - 2)));
    gens.push(Polynomial::monomial(&ring, one.clone(), sq(n - 1)));
    gens.push(Polynomial::monomial(
        &ring,
        one,
        Monomial::product_of(nv, [x(1), x(2)]),
    ));
    Ideal::new(&ring, gens)
}

/// Socle data of the Artinian reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmTypeReport {
    pub n: usize,
    /// `dim_K` of the Artinian quotient.
    pub length: usize,
    /// Dimension of the socle, i.e. the Cohen–Macaulay type.
    pub cm_type: usize,
}

/// Cohen–Macaulay type of the Rees algebra of `I_{n-2}(C_n)`, odd `n`.
pub fn cm_type_odd(n: usize) -> Result<usize> {
    Ok(cm_type_report(n)?.cm_type)
}

pub fn cm_type_report(n: usize) -> Result<CmTypeReport> {
    let ideal = artinian_reduction(n)?;
    let (length, cm_type) = socle_dimension(&ideal)?;
    Ok(CmTypeReport { n, length, cm_type })
}

/// `(dim_K R/I, dim_K socle(R/I))` for an ideal with Artinian quotient,
/// computed under the ring's ambient order.
pub fn socle_dimension(ideal: &Ideal) -> Result<(usize, usize)> {
    let ring = ideal.ring().clone();
    let nv = ring.nvars();
    let gb = ideal.groebner_basis(ring.ambient())?;
    let lms = gb.leading_monomials();
    for v in 0..nv {
        if !lms.iter().any(|m| m.support() == 1 << v) {
            return Err(Error::NotArtinian);
        }
    }

    // standard monomials, breadth first from 1
    let one = Monomial::one(nv);
    let mut basis = Vec::new();
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    if !lms.iter().any(|l| l.divides(&one)) {
        index.insert(one, 0);
        basis.push(one);
        queue.push_back(one);
    }
    while let Some(m) = queue.pop_front() {
        for v in 0..nv {
            let next = m.mul(&Monomial::var(nv, v, 1));
            if index.contains_key(&next) || lms.iter().any(|l| l.divides(&next)) {
                continue;
            }
            index.insert(next, basis.len());
            basis.push(next);
            queue.push_back(next);
        }
    }

    // stacked multiplication maps: row (v, i), column j = coefficient of b_i in NF(x_v b_j)
    let dim = basis.len();
    let mut rows = vec![vec![Rational::ZERO; dim]; nv * dim];
    for (j, b) in basis.iter().enumerate() {
        for v in 0..nv {
            let p = Polynomial::monomial(&ring, Rational::ONE, b.mul(&Monomial::var(nv, v, 1)));
            for term in gb.normal_form(&p)?.terms() {
                let i = index[&term.mono];
                rows[v * dim + i][j] = term.coeff.clone();
            }
        }
    }
    Ok((dim, linalg::nullity(&rows, dim)))
}
