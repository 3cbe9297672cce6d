//! Cross-checks of classification records against previously known results
//! on linear type, and a report on the open conjecture about fiber type.

use num_integer::Integer;
use serde::Serialize;

use crate::classify::{Class, ClassRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Expect {
    Linear,
    NotLinear,
}

/// Known linear-type results that apply to `(n, t)`, by item number.
fn known_results(n: usize, t: usize) -> Vec<(u8, Expect)> {
    let g = n.gcd(&t);
    let half = (n - 1) / 2;
    let inverse = (1..n).find(|&l| (t * l) % n == 1);
    let mut out = Vec::new();
    if t == n - 1 {
        out.push((1, Expect::Linear));
    }
    if n % 2 == 1 && (t == n - 2 || t == half) {
        out.push((2, Expect::Linear));
    }
    if g > 1 {
        out.push((3, Expect::NotLinear));
    }
    if g == 1 && half < t && t + 3 <= n {
        out.push((4, Expect::NotLinear));
    }
    if let (1, Some(l)) = (g, inverse) {
        if 1 < t && t <= half && 1 < l && l <= half {
            out.push((5, Expect::NotLinear));
        }
        if 1 < t && t <= half && half < l && l < n {
            let a = n % (n - l);
            if a >= 2 {
                out.push((6, Expect::NotLinear));
            }
        }
    }
    out
}

/// A completed record that contradicts a known result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnownResultViolation {
    pub n: usize,
    pub t: usize,
    pub item: u8,
    pub class: Class,
}

/// All contradictions between completed records and the known results.
/// Also flags any record that is linear but fails the fiber test, and any
/// non-timeout record with `gcd = 1` classified as fiber but not linear (for
/// `gcd = 1` there are no fiber relations, so fiber type means linear type).
/// Those carry item numbers 0 and 7 respectively.
pub fn known_results_report(records: &[ClassRecord]) -> Vec<KnownResultViolation> {
    let mut out = Vec::new();
    for r in records.iter().filter(|r| r.class != Class::Timeout) {
        let linear = r.class == Class::Linear;
        for (item, expect) in known_results(r.n, r.t) {
            if (expect == Expect::Linear) != linear {
                out.push(KnownResultViolation {
                    n: r.n,
                    t: r.t,
                    item,
                    class: r.class,
                });
            }
        }
        if r.linear == Some(true) && r.fiber != Some(true) {
            out.push(KnownResultViolation {
                n: r.n,
                t: r.t,
                item: 0,
                class: r.class,
            });
        }
        if r.gcd == 1 && r.class == Class::Fiber {
            out.push(KnownResultViolation {
                n: r.n,
                t: r.t,
                item: 7,
                class: r.class,
            });
        }
    }
    out
}

/// One cell covered by the conjecture, with prediction and observation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub t: usize,
    pub part: u8,
    /// Predicted: fiber type but not linear type.
    pub predicted_fiber: bool,
    /// Observed class; `None` on timeout.
    pub observed: Option<Class>,
}

impl ConjectureRow {
    /// `None` if the cell timed out.
    pub fn agrees(&self) -> Option<bool> {
        self.observed
            .map(|c| (c == Class::Fiber) == self.predicted_fiber)
    }
}

/// Part 1: for `2 < t < ⌊n/2⌋`, fiber-but-not-linear iff `t | n`.
/// Part 2: for `gcd(n, t) > 1` and `⌊n/2⌋ < t < n-2`, not fiber type except
/// at `(9, 6)`.
pub fn conjecture_report(records: &[ClassRecord]) -> Vec<ConjectureRow> {
    let mut out = Vec::new();
    for r in records {
        let observed = (r.class != Class::Timeout).then_some(r.class);
        let (n, t) = (r.n, r.t);
        if 2 < t && t < n / 2 {
            out.push(ConjectureRow {
                n,
                t,
                part: 1,
                predicted_fiber: n % t == 0,
                observed,
            });
        }
        if n.gcd(&t) > 1 && n / 2 < t && t + 2 < n {
            out.push(ConjectureRow {
                n,
                t,
                part: 2,
                predicted_fiber: (n, t) == (9, 6),
                observed,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn items_applying_to_small_cells() {
        assert_eq!(known_results(5, 4), vec![(1, Expect::Linear)]);
        assert_eq!(known_results(5, 3), vec![(2, Expect::Linear)]);
        assert_eq!(known_results(7, 3), vec![(2, Expect::Linear)]);
        assert_eq!(known_results(6, 3), vec![(3, Expect::NotLinear)]);
        assert_eq!(known_results(7, 4), vec![(4, Expect::NotLinear)]);
        // 3 * 3 = 9 ≡ 1 mod 8
        assert_eq!(known_results(8, 3), vec![(5, Expect::NotLinear)]);
        // 5 * 8 = 40 ≡ 1 mod 13, 13 = 2 * 5 + 3
        assert!(known_results(13, 5).contains(&(6, Expect::NotLinear)));
    }
}
