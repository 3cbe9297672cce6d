use std::fmt;

use serde::{Deserialize, Serialize};

use crate::monomial::{minimalize, MonomialIdeal};
use crate::poly::Monomial;

/// `numerator / (1 - z)^denom_power`, with integer numerator coefficients
/// listed from the constant term up.
///
/// Canonical form: no trailing zero coefficients, and the numerator is not
/// divisible by `1 - z` unless `denom_power` is 0. The zero series has an
/// empty numerator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub denom_power: u32,
}

impl HilbertSeries {
    /// Builds a series and brings it to canonical form.
    pub fn new(numerator: Vec<i64>, denom_power: u32) -> HilbertSeries {
        let mut hs = HilbertSeries {
            numerator,
            denom_power,
        };
        hs.canonicalize();
        hs
    }

    fn canonicalize(&mut self) {
        trim(&mut self.numerator);
        if self.numerator.is_empty() {
            self.denom_power = 0;
            return;
        }
        while self.denom_power > 0 && self.numerator.iter().sum::<i64>() == 0 {
            // divide by (1 - z): q_i = sum_{j <= i} k_j
            let mut acc = 0;
            let mut q = Vec::with_capacity(self.numerator.len());
            for &c in &self.numerator {
                acc += c;
                q.push(acc);
            }
            self.numerator = q;
            trim(&mut self.numerator);
            self.denom_power -= 1;
        }
    }

    /// True if the numerator reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let k = &self.numerator;
        k.iter().eq(k.iter().rev())
    }

    /// Coefficient of `z^d` in the power series expansion.
    pub fn coefficient(&self, d: usize) -> i128 {
        // coefficient of z^m in (1-z)^{-e} is C(m+e-1, e-1)
        let e = self.denom_power as i128;
        let mut total = 0i128;
        for (i, &c) in self.numerator.iter().enumerate().take(d + 1) {
            let m = (d - i) as i128;
            let b = if e == 0 {
                (m == 0) as i128
            } else {
                binom(m + e - 1, e - 1)
            };
            total += c as i128 * b;
        }
        total
    }
}

fn binom(n: i128, k: i128) -> i128 {
    let k = k.min(n - k);
    if k < 0 {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) / (i + 1))
}

fn trim(v: &mut Vec<i64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            let body = match (i, mag) {
                (0, _) => mag.to_string(),
                (1, 1) => "z".to_string(),
                (1, _) => format!("{mag}z"),
                (_, 1) => format!("z^{i}"),
                _ => format!("{mag}z^{i}"),
            };
            terms.push((c < 0, body));
        }
        let mut num = String::new();
        for (k, (neg, body)) in terms.iter().enumerate() {
            match (k, neg) {
                (0, true) => num.push('-'),
                (0, false) => {}
                (_, true) => num.push_str(" - "),
                (_, false) => num.push_str(" + "),
            }
            num.push_str(body);
        }
        if num.is_empty() {
            num.push('0');
        }
        if self.denom_power == 0 {
            write!(f, "{num}")
        } else {
            write!(f, "({num}) / (1-z)^{}", self.denom_power)
        }
    }
}

/// How the recursion picks its pivot variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotStrategy {
    /// The variable occurring in the most non-linear generators.
    #[default]
    MostFrequent,
    /// The lowest-indexed variable occurring in a non-linear generator.
    FirstVariable,
}

/// Hilbert series of `T / M` under the standard grading.
pub fn hilbert_numerator(m: &MonomialIdeal) -> HilbertSeries {
    hilbert_numerator_with(m, PivotStrategy::default())
}

pub fn hilbert_numerator_with(m: &MonomialIdeal, strategy: PivotStrategy) -> HilbertSeries {
    let k = kpoly(m.minimal_generators().to_vec(), strategy);
    HilbertSeries::new(k, m.ring().nvars() as u32)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

/// `1 - z^d`
fn one_minus(d: usize) -> Vec<i64> {
    let mut v = vec![0i64; d + 1];
    v[0] += 1;
    v[d] -= 1;
    v
}

/// Numerator of the Hilbert series of `T/(gens)` over `(1-z)^N` (the
/// K-polynomial under the standard grading). `gens` is minimal.
fn kpoly(gens: Vec<Monomial>, strategy: PivotStrategy) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }

    // split off linear generators: each contributes a factor (1 - z)
    let linear = gens.iter().filter(|g| g.degree() == 1).count();
    let mut k = if linear > 0 {
        let rest: Vec<Monomial> = gens.iter().copied().filter(|g| g.degree() > 1).collect();
        let mut k = kpoly(rest, strategy);
        for _ in 0..linear {
            k = poly_mul(&k, &one_minus(1));
        }
        return k;
    } else {
        Vec::new()
    };

    // pairwise coprime generators form a regular sequence
    let mut seen = 0u32;
    let coprime = gens.iter().all(|g| {
        let ok = g.support() & seen == 0;
        seen |= g.support();
        ok
    });
    if coprime {
        let mut k = vec![1];
        for g in &gens {
            k = poly_mul(&k, &one_minus(g.degree() as usize));
        }
        return k;
    }

    let nvars = gens[0].nvars();
    let pivot = choose_pivot(&gens, nvars, strategy);
    let p = Monomial::var(nvars, pivot, 1);

    // HS(M) = HS(M + (p)) + z * HS(M : p)
    let sum = minimalize(
        gens.iter()
            .copied()
            .filter(|g| g.exponent(pivot) == 0)
            .chain(std::iter::once(p))
            .collect(),
    );
    let colon = minimalize(gens.iter().map(|g| g.div(&g.gcd(&p)).unwrap()).collect());
    poly_add_shifted(&mut k, &kpoly(sum, strategy), 0);
    poly_add_shifted(&mut k, &kpoly(colon, strategy), 1);
    k
}

fn choose_pivot(gens: &[Monomial], nvars: usize, strategy: PivotStrategy) -> usize {
    match strategy {
        PivotStrategy::MostFrequent => {
            let mut counts = vec![0usize; nvars];
            for g in gens {
                for (v, c) in counts.iter_mut().enumerate() {
                    if g.exponent(v) > 0 {
                        *c += 1;
                    }
                }
            }
            (0..nvars)
                .max_by_key(|&v| (counts[v], std::cmp::Reverse(v)))
                .unwrap()
        }
        PivotStrategy::FirstVariable => {
            let mask = gens.iter().fold(0u32, |acc, g| acc | g.support());
            mask.trailing_zeros() as usize
        }
    }
}
