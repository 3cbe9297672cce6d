//! Linear/fiber type classification, numeric invariants, and the full
//! classification grid.

mod checks;
mod invariants;
mod render;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{ideal_equal_with_budget, Budget, Ideal};
use crate::rees::{extend_to_cycle_ring, fiber_ideal_of, rees_ideal, sym_relations, PathIdealSpec};

pub use checks::{conjecture_report, known_results_report, ConjectureRow, KnownResultViolation};
pub use invariants::{
    artinian_reduction, circulant_rank, cm_type_odd, cm_type_report, fiber_dimension,
    gorenstein_witness, hilbert_closed_form_n_minus_2, rees_hilbert_series, socle_dimension,
    verify_hilbert, CmTypeReport, HilbertCheck,
};
pub use render::{render_csv, render_grid, render_json};

/// Outcome of classifying one `(n, t)` cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Linear,
    Fiber,
    Neither,
    Timeout,
}

impl Class {
    pub fn glyph(self) -> &'static str {
        match self {
            Class::Linear => "L",
            Class::Fiber => "F",
            Class::Neither => "×",
            Class::Timeout => "?",
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Class::Linear => "linear",
            Class::Fiber => "fiber",
            Class::Neither => "neither",
            Class::Timeout => "timeout",
        }
    }
}

/// Wall-clock time per stage, in milliseconds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct StageTimings {
    /// Computing `J` by elimination.
    pub rees: f64,
    /// Basis of `L` and the comparison `L = J`.
    pub sym: f64,
    /// Computing `H` by elimination.
    pub fiber: f64,
    /// Basis of `L + HT` and the comparison with `J`.
    pub fiber_type: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassRecord {
    pub n: usize,
    pub t: usize,
    pub class: Class,
    pub gcd: usize,
    pub fiber_dim: usize,
    /// Outcome of `L = J`; `None` on timeout.
    pub linear: Option<bool>,
    /// Outcome of `L + HT = J`; `None` on timeout.
    pub fiber: Option<bool>,
    pub timings: StageTimings,
    /// For non-linear cells, an element of the reduced basis of `J` outside
    /// `L + HT` (neither) or outside `L` (fiber).
    pub witness: Option<String>,
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// First element of `J`'s basis that the ideal `other` does not contain.
fn first_outside(j: &Ideal, other: &Ideal, budget: &Budget) -> Result<Option<String>> {
    let order = j.ring().ambient().clone();
    let gj = j.groebner_basis_with_budget(&order, budget)?;
    let go = other.groebner_basis_with_budget(&order, budget)?;
    for g in gj.elements() {
        if !go.contains(g)? {
            return Ok(Some(g.to_string()));
        }
    }
    Ok(None)
}

struct Outcome {
    linear: bool,
    fiber: bool,
    witness: Option<String>,
}

fn run_cell(spec: PathIdealSpec, budget: &Budget, tm: &mut StageTimings) -> Result<Outcome> {
    let clock = Instant::now();
    let j = rees_ideal(spec, budget)?;
    let order = j.ring().ambient().clone();
    tm.rees = ms(clock.elapsed());

    let clock = Instant::now();
    let l = sym_relations(spec)?;
    let linear = ideal_equal_with_budget(&l, &j, &order, budget)?;
    tm.sym = ms(clock.elapsed());

    let clock = Instant::now();
    let h = fiber_ideal_of(&j, budget)?;
    let ht = extend_to_cycle_ring(&h, spec.n())?;
    tm.fiber = ms(clock.elapsed());

    let clock = Instant::now();
    let lh = l.sum(&ht)?;
    let fiber = ideal_equal_with_budget(&lh, &j, &order, budget)?;
    let witness = if !fiber {
        first_outside(&j, &lh, budget)?
    } else if !linear {
        first_outside(&j, &l, budget)?
    } else {
        None
    };
    tm.fiber_type = ms(clock.elapsed());
    Ok(Outcome {
        linear,
        fiber,
        witness,
    })
}

/// Classifies `I_t(C_n)`; exhausting `budget` yields [`Class::Timeout`].
pub fn classify(n: usize, t: usize, budget: &Budget) -> Result<ClassRecord> {
    let spec = PathIdealSpec::new(n, t)?;
    let mut timings = StageTimings::default();
    let (class, linear, fiber, witness) = match run_cell(spec, budget, &mut timings) {
        Ok(o) => {
            let class = if o.linear {
                Class::Linear
            } else if o.fiber {
                Class::Fiber
            } else {
                Class::Neither
            };
            (class, Some(o.linear), Some(o.fiber), o.witness)
        }
        Err(Error::BudgetExceeded) => (Class::Timeout, None, None, None),
        Err(e) => return Err(e),
    };
    Ok(ClassRecord {
        n,
        t,
        class,
        gcd: spec.gcd(),
        fiber_dim: fiber_dimension(n, t)?,
        linear,
        fiber,
        timings,
        witness,
    })
}

/// `J = L`.
pub fn is_linear_type(n: usize, t: usize, budget: &Budget) -> Result<bool> {
    let spec = PathIdealSpec::new(n, t)?;
    let j = rees_ideal(spec, budget)?;
    let order = j.ring().ambient().clone();
    ideal_equal_with_budget(&sym_relations(spec)?, &j, &order, budget)
}

/// `J = L + HT`.
pub fn is_fiber_type(n: usize, t: usize, budget: &Budget) -> Result<bool> {
    let spec = PathIdealSpec::new(n, t)?;
    let j = rees_ideal(spec, budget)?;
    let order = j.ring().ambient().clone();
    let ht = extend_to_cycle_ring(&fiber_ideal_of(&j, budget)?, n)?;
    ideal_equal_with_budget(&sym_relations(spec)?.sum(&ht)?, &j, &order, budget)
}

/// Settings for [`classification_table`].
#[derive(Debug, Clone, Copy)]
pub struct TableConfig {
    /// Time allowed per cell.
    pub budget: Duration,
    /// Worker threads.
    pub jobs: usize,
}

impl Default for TableConfig {
    fn default() -> Self {
        let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
        TableConfig {
            budget: Duration::from_secs(60),
            jobs,
        }
    }
}

/// Classifies every cell `n_min <= n <= n_max`, `1 <= t <= n-1`. Records are
/// returned sorted by `(n, t)`.
pub fn classification_table(
    n_min: usize,
    n_max: usize,
    cfg: &TableConfig,
) -> Result<Vec<ClassRecord>> {
    if n_min < 3 || n_min > n_max {
        return Err(Error::OutOfRange(format!(
            "need 3 <= n_min <= n_max, got {n_min}..{n_max}"
        )));
    }
    crate::rees::check_cycle(n_max)?;
    if cfg.jobs == 0 {
        return Err(Error::OutOfRange("jobs must be at least 1".into()));
    }
    // largest cells first so the slowest jobs start early
    let mut cells: Vec<(usize, usize)> = (n_min..=n_max)
        .flat_map(|n| (1..n).map(move |t| (n, t)))
        .collect();
    cells.sort_by_key(|&(n, t)| std::cmp::Reverse((n, t)));
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Result<ClassRecord>>> = Mutex::new(Vec::with_capacity(cells.len()));
    std::thread::scope(|scope| {
        for _ in 0..cfg.jobs.min(cells.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(n, t)) = cells.get(i) else { break };
                let rec = classify(n, t, &Budget::with_time(cfg.budget));
                results.lock().unwrap().push(rec);
            });
        }
    });
    let mut out = results
        .into_inner()
        .unwrap()
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|r| (r.n, r.t));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cells() {
        let b = Budget::unlimited();
        let r = classify(5, 3, &b).unwrap();
        assert_eq!(r.class, Class::Linear);
        assert_eq!(r.witness, None);
        let r = classify(6, 2, &b).unwrap();
        assert_eq!(r.class, Class::Fiber);
        assert!(r.witness.is_some());
        assert_eq!((r.gcd, r.fiber_dim), (2, 5));
        assert_eq!(classify(7, 4, &b).unwrap().class, Class::Neither);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let r = classify(7, 4, &Budget::with_steps(3)).unwrap();
        assert_eq!(r.class, Class::Timeout);
        assert_eq!(r.linear, None);
    }

    #[test]
    fn table_is_sorted() {
        let cfg = TableConfig {
            budget: Duration::from_secs(60),
            jobs: 2,
        };
        let t = classification_table(3, 5, &cfg).unwrap();
        let keys: Vec<(usize, usize)> = t.iter().map(|r| (r.n, r.t)).collect();
        assert_eq!(
            keys,
            vec![
                (3, 1),
                (3, 2),
                (4, 1),
                (4, 2),
                (4, 3),
                (5, 1),
                (5, 2),
                (5, 3),
                (5, 4)
            ]
        );
        assert!(classification_table(2, 5, &cfg).is_err());
    }
}
