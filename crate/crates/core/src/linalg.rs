//! Exact rank computations over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Rational;

/// Rank of a dense rational matrix, by fraction-free (Bareiss) elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    bareiss_rank(&mut m)
}

/// Dimension of the kernel of `v ↦ A v` for `A` with `ncols` columns.
pub fn nullity(rows: &[Vec<Rational>], ncols: usize) -> usize {
    ncols - rank(rows)
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
    row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter()
            .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&mat(&[&[0, 1, 0], &[0, 0, 1], &[0, 1, 1]])), 2);
        assert_eq!(rank(&mat(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]])), 3);
        assert_eq!(rank(&[]), 0);
        let half = vec![
            vec![Rational::new(1, 2), Rational::new(1, 3)],
            vec![Rational::from(3), Rational::from(2)],
        ];
        assert_eq!(rank(&half), 1);
        assert_eq!(nullity(&mat(&[&[1, 1, 1]]), 3), 2);
    }
}
