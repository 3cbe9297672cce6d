use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RingSpec};
use crate::rees::{check_cycle, cycle_ring};

/// A square matrix of polynomials over one ring.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    ring: Arc<RingSpec>,
    rows: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn zero(ring: &Arc<RingSpec>, dim: usize) -> PolyMatrix {
        PolyMatrix {
            ring: ring.clone(),
            rows: vec![vec![Polynomial::zero(ring); dim]; dim],
        }
    }

    pub fn from_rows(ring: &Arc<RingSpec>, rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let dim = rows.len();
        for r in &rows {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
            if r.iter().any(|p| **p.ring() != **ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
        })
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.rows[i][j] = p;
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    /// First entry `(i, j)` with `a_ij ≠ -a_ji`, if any.
    pub fn skew_violation(&self) -> Option<(usize, usize)> {
        let d = self.dim();
        for i in 0..d {
            for j in i..d {
                if self.rows[i][j] != -&self.rows[j][i] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.skew_violation().is_none()
    }

    /// `A v`.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .try_fold(Polynomial::zero(&self.ring), |acc, (a, b)| {
                        acc.try_add(&a.try_mul(b)?)
                    })
            })
            .collect()
    }
}

/// The matrix `A` over `K[y]` with `(f_1, …, f_n)ᵀ = A (x_0, …, x_{n-1})ᵀ`
/// for `f_j = x_{j-2} y_j - x_j y_{j+1}` (so `f_n = -g_1`).
///
/// Row `i` holds `f_{i+1}`; column `c` is the coefficient of `x_c`. Thus
/// `a_{i,i-1} = y_{i+1}` and `a_{i,i+1} = -y_{i+2}`, indices mod `n`.
pub fn jacobian_dual(n: usize) -> Result<PolyMatrix> {
    check_cycle(n)?;
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let ring = cycle_ring(n)?;
    let mut a = PolyMatrix::zero(&ring, n);
    let ni = n as i64;
    for i in 0..ni {
        let prev = (i - 1).rem_euclid(ni) as usize;
        let next = (i + 1).rem_euclid(ni) as usize;
        a.set(i as usize, prev, Polynomial::var(&ring, ring.y(i + 1)));
        a.set(i as usize, next, -Polynomial::var(&ring, ring.y(i + 2)));
    }
    if let Some((i, j)) = a.skew_violation() {
        return Err(Error::NotSkewSymmetric(i, j));
    }
    Ok(a)
}

/// Pfaffian by expansion along the first row:
/// `Pf(A) = Σ_{j≥2} (-1)^j a_{1j} Pf(A with rows/cols 1, j removed)`.
pub fn pfaffian(a: &PolyMatrix) -> Result<Polynomial> {
    let d = a.dim();
    if d % 2 == 1 {
        return Err(Error::OddDimension(d));
    }
    if let Some((i, j)) = a.skew_violation() {
        return Err(Error::NotSkewSymmetric(i, j));
    }
    let idx: Vec<usize> = (0..d).collect();
    Ok(pf(a, &idx))
}

fn pf(a: &PolyMatrix, idx: &[usize]) -> Polynomial {
    if idx.is_empty() {
        return Polynomial::one(&a.ring);
    }
    let first = idx[0];
    let mut total = Polynomial::zero(&a.ring);
    for k in 1..idx.len() {
        let entry = a.get(first, idx[k]);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&v| v != idx[k]).collect();
        let term = entry * &pf(a, &rest);
        // k is the 0-based position, so the 1-based column is k + 1
        total = if k % 2 == 1 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}
