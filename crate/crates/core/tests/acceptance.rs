//! End-to-end acceptance run: one PASS/FAIL line per criterion, non-zero
//! exit if any criterion fails. All comparisons are exact; the only
//! tolerances are the time limits pinned below.

mod common;

use std::cmp::Ordering;
use std::fmt::Display;
use std::time::{Duration, Instant};

use common::*;
use cycle_rees::classify::{
    circulant_rank, classification_table, cm_type_odd, fiber_dimension, gorenstein_witness,
    rees_hilbert_series, verify_hilbert, Class, TableConfig,
};
use cycle_rees::groebner::{
    buchberger, ideal_equal_with_budget, ideal_membership, is_groebner_basis, Budget, Ideal,
};
use cycle_rees::monomial::{
    hilbert_numerator, hilbert_numerator_with, is_squarefree, x_condition, HilbertSeries,
    MonomialIdeal, PivotStrategy,
};
use cycle_rees::poly::{Monomial, Polynomial};
use cycle_rees::rees::{
    extend_to_cycle_ring, family_half, family_n_minus_2, fiber_ideal, fiber_ideal_closed_form,
    jacobian_dual, pfaffian, rees_ideal, sym_relations, Family, PathIdealSpec,
};
use num_integer::Integer;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// Per-cell budget for the classification table.
const CELL_BUDGET: Duration = Duration::from_secs(120);
/// Wall-clock target for the `3 ≤ n ≤ 10` table.
const TABLE_TARGET: Duration = Duration::from_secs(15 * 60);
/// Randomized cases per property.
const CASES: u32 = 1000;

/// Reference classification grid, rows n = 3..13, columns t = 1..n-1.
const FIGURE: [(usize, &str); 11] = [
    (3, "LL"),
    (4, "LFL"),
    (5, "LLLL"),
    (6, "LFFFL"),
    (7, "LLL×LL"),
    (8, "LF×F×FL"),
    (9, "LLFL×FLL"),
    (10, "LFL×F××FL"),
    (11, "LL××L×××LL"),
    (12, "LFFF×F×××FL"),
    (13, "LLLL×L××××LL"),
];

type Criterion = (&'static str, fn(&mut Outcome));

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Display) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn note(&mut self, what: impl Display) {
        self.notes.push(what.to_string());
    }
}

fn budget() -> Budget {
    Budget::with_time(CELL_BUDGET)
}

fn spec(n: usize, t: usize) -> PathIdealSpec {
    PathIdealSpec::new(n, t).unwrap()
}

fn runner() -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn property<S: Strategy>(
    o: &mut Outcome,
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) where
    S::Value: std::fmt::Debug,
{
    match runner().run(&strategy, test) {
        Ok(()) => o.note(format!("{name}: {CASES} cases")),
        Err(e) => o.check(false, format!("{name}: {e}")),
    }
}

fn criterion_1(o: &mut Outcome) {
    let cfg = TableConfig {
        budget: CELL_BUDGET,
        ..TableConfig::default()
    };
    let start = Instant::now();
    let recs = match classification_table(3, 10, &cfg) {
        Ok(r) => r,
        Err(e) => return o.check(false, format!("table failed: {e}")),
    };
    let elapsed = start.elapsed();
    for &(n, row) in FIGURE.iter().filter(|(n, _)| *n <= 10) {
        let got: String = recs
            .iter()
            .filter(|r| r.n == n)
            .map(|r| r.class.glyph())
            .collect();
        o.check(got == row, format!("row {n}: got {got}, expected {row}"));
    }
    let timeouts = recs.iter().filter(|r| r.class == Class::Timeout).count();
    o.check(timeouts == 0, format!("{timeouts} timeouts"));
    o.check(elapsed <= TABLE_TARGET, format!("table took {elapsed:.1?}"));
    o.note(format!("rows 3..10 in {elapsed:.1?}"));

    // stretch rows: reported, never failing
    let start = Instant::now();
    match classification_table(11, 13, &cfg) {
        Ok(recs) => {
            for &(n, row) in FIGURE.iter().filter(|(n, _)| *n > 10) {
                let got: String = recs
                    .iter()
                    .filter(|r| r.n == n)
                    .map(|r| r.class.glyph())
                    .collect();
                let verdict = if got == row { "matches" } else { "differs" };
                o.note(format!("stretch row {n}: {got} ({verdict})"));
            }
            o.note(format!("rows 11..13 in {:.1?}", start.elapsed()));
        }
        Err(e) => o.note(format!("stretch rows failed: {e}")),
    }
}

fn criterion_2(o: &mut Outcome) {
    for n in 3..=12 {
        for t in 1..=n {
            let d = n.gcd(&t);
            let rank = circulant_rank(n, t).unwrap();
            o.check(rank == n - d + 1, format!("rank({n},{t}) = {rank}"));
            o.check(
                fiber_dimension(n, t).unwrap() == rank,
                format!("fiber_dimension({n},{t})"),
            );
            // t = n is the single-generator ideal, outside the path-ideal range
            if t < n {
                match fiber_ideal(spec(n, t), &budget()) {
                    Ok(h) => o.check(
                        h.is_zero() == (d == 1),
                        format!("H({n},{t}) zero = {}", h.is_zero()),
                    ),
                    Err(e) => o.check(false, format!("H({n},{t}): {e}")),
                }
            }
        }
    }
}

fn criterion_3(o: &mut Outcome) {
    let mut count = 0;
    for n in 3..=10 {
        for t in (1..n).filter(|&t| n.gcd(&t) > 1) {
            let h = fiber_ideal(spec(n, t), &budget()).unwrap();
            let closed = fiber_ideal_closed_form(spec(n, t)).unwrap();
            let eq = ideal_equal_with_budget(&h, &closed, h.ring().ambient(), &budget()).unwrap();
            o.check(eq, format!("H({n},{t}) differs from closed form"));
            count += 1;
        }
    }
    o.note(format!("{count} cells"));
}

fn leading_ideal(fam: &Family) -> MonomialIdeal {
    let gb = buchberger(&fam.ring, &fam.polys(), fam.ring.ambient()).unwrap();
    MonomialIdeal::new(&fam.ring, gb.leading_monomials())
}

fn criterion_4(o: &mut Outcome) {
    for n in 3..=12 {
        let fam = family_n_minus_2(n).unwrap();
        let gb = is_groebner_basis(&fam.polys(), fam.ring.ambient()).unwrap();
        o.check(gb.is_basis(), format!("n-2 family, n={n}: {gb:?}"));
        let lead = leading_ideal(&fam);
        o.check(
            is_squarefree(&lead),
            format!("n-2 family, n={n}: initial ideal not squarefree"),
        );
        o.check(
            x_condition(&lead),
            format!("n-2 family, n={n}: x-condition fails"),
        );
    }
    for n in (4..=12).step_by(2) {
        let fam = family_half(n).unwrap();
        let gb = is_groebner_basis(&fam.polys(), fam.ring.ambient()).unwrap();
        o.check(gb.is_basis(), format!("half family, n={n}: {gb:?}"));
        o.check(
            is_squarefree(&leading_ideal(&fam)),
            format!("half family, n={n}: initial ideal not squarefree"),
        );
    }
}

fn l_plus_ht(n: usize, t: usize) -> Ideal {
    let l = sym_relations(spec(n, t)).unwrap();
    let h = fiber_ideal(spec(n, t), &budget()).unwrap();
    l.sum(&extend_to_cycle_ring(&h, n).unwrap()).unwrap()
}

fn criterion_5(o: &mut Outcome) {
    for n in (3..=11).step_by(2) {
        let j = rees_ideal(spec(n, n - 2), &budget()).unwrap();
        let l = sym_relations(spec(n, n - 2)).unwrap();
        let eq = ideal_equal_with_budget(&j, &l, j.ring().ambient(), &budget()).unwrap();
        o.check(eq, format!("J != L at n={n}"));
    }
    for n in (4..=12).step_by(2) {
        let mut ts = vec![n - 2, n / 2];
        ts.dedup();
        for t in ts {
            let j = rees_ideal(spec(n, t), &budget()).unwrap();
            let eq = ideal_equal_with_budget(&j, &l_plus_ht(n, t), j.ring().ambient(), &budget())
                .unwrap();
            o.check(eq, format!("J != L+HT at ({n},{t})"));
        }
    }
}

fn criterion_6(o: &mut Outcome) {
    for n in 3..=10 {
        let c = verify_hilbert(n, &budget()).unwrap();
        o.check(
            c.ok(),
            format!(
                "n={n}: computed {} vs closed form {}",
                c.computed, c.expected
            ),
        );
        if n == 4 {
            o.check(
                c.computed
                    == HilbertSeries {
                        numerator: vec![1, 3, 1],
                        denom_power: 5,
                    },
                "n=4 expansion",
            );
        }
        if n == 5 {
            o.check(
                c.computed
                    == HilbertSeries {
                        numerator: vec![1, 4, 5, 1],
                        denom_power: 6,
                    },
                "n=5 expansion",
            );
        }
    }
}

fn criterion_7(o: &mut Outcome) {
    for n in [3, 5, 7, 9] {
        let k = cm_type_odd(n).unwrap();
        o.check(k == 2, format!("cm type {k} at n={n}"));
        let hs = rees_hilbert_series(n, &budget()).unwrap();
        o.check(
            !hs.is_palindromic(),
            format!("n={n}: palindromic numerator {hs}"),
        );
    }
    for n in [4, 6, 8, 10] {
        o.check(
            gorenstein_witness(n, &budget()).unwrap(),
            format!("n={n}: numerator not palindromic"),
        );
    }
}

fn criterion_8(o: &mut Outcome) {
    for n in (4..=10).step_by(2) {
        let a = jacobian_dual(n).unwrap();
        o.check(a.is_skew_symmetric(), format!("n={n}: not skew-symmetric"));
        let pf = pfaffian(&a).unwrap();
        let h = family_n_minus_2(n).unwrap().get("h").unwrap().clone();
        let sign = if pf == h {
            "+"
        } else if pf == -&h {
            "-"
        } else {
            "?"
        };
        o.check(sign != "?", format!("n={n}: Pf = {pf}"));
        o.note(format!("n={n}: Pf = {sign}h"));
    }
    for dim in [4, 6] {
        property(
            o,
            &format!("Pf^2 = det, {dim}x{dim}"),
            skew_matrix(small_ring(3), dim, 2),
            |m| {
                let pf = pfaffian(&m).unwrap();
                prop_assert_eq!(&pf * &pf, determinant(&m));
                Ok(())
            },
        );
    }
}

fn criterion_9(o: &mut Outcome) {
    property(
        o,
        "order axioms",
        (order(5), monomial(3, 5), monomial(3, 5), monomial(3, 5)),
        |(ord, a, b, c)| {
            let ab = ord.cmp(&a, &b);
            prop_assert_eq!(ab, ord.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_ne!(ord.cmp(&Monomial::one(5), &a), Ordering::Greater);
            if ab != Ordering::Less && ord.cmp(&b, &c) != Ordering::Less {
                prop_assert_ne!(ord.cmp(&a, &c), Ordering::Less);
            }
            Ok(())
        },
    );

    let gens = prop::collection::vec(binomial(small_ring(3), 2), 1..=4);
    let perm = Just((0..4usize).collect::<Vec<_>>()).prop_shuffle();
    property(
        o,
        "basis uniqueness under shuffles",
        (gens, perm, order(3)),
        |(gens, perm, ord)| {
            let r = small_ring(3);
            let shuffled: Vec<Polynomial> = perm
                .iter()
                .filter(|&&i| i < gens.len())
                .map(|&i| gens[i].clone())
                .collect();
            let a = buchberger(&r, &gens, &ord).unwrap();
            let b = buchberger(&r, &shuffled, &ord).unwrap();
            prop_assert_eq!(a.elements(), b.elements());
            Ok(())
        },
    );

    let gens = prop::collection::vec(binomial(small_ring(3), 2), 1..=3);
    let cofs = prop::collection::vec(polynomial(small_ring(3), 3, 1), 3);
    property(
        o,
        "membership soundness",
        (gens, cofs, order(3)),
        |(gens, cofs, ord)| {
            let r = small_ring(3);
            let f = gens
                .iter()
                .zip(&cofs)
                .fold(Polynomial::zero(&r), |acc, (g, c)| &acc + &(c * g));
            let ideal = Ideal::new(&r, gens).unwrap();
            prop_assert!(ideal_membership(&f, &ideal, &ord).unwrap());
            Ok(())
        },
    );

    property(
        o,
        "pivot independence",
        prop::collection::vec(monomial(3, 4), 0..=7),
        |gens| {
            let m = MonomialIdeal::new(&small_ring(4), gens);
            prop_assert_eq!(
                hilbert_numerator_with(&m, PivotStrategy::MostFrequent),
                hilbert_numerator_with(&m, PivotStrategy::FirstVariable)
            );
            Ok(())
        },
    );

    property(
        o,
        "inclusion-exclusion oracle",
        prop::collection::vec(monomial(3, 4), 0..=5),
        |gens| {
            let m = MonomialIdeal::new(&small_ring(4), gens.clone());
            prop_assert_eq!(
                hilbert_numerator(&m),
                hilbert_by_inclusion_exclusion(&gens, 4)
            );
            Ok(())
        },
    );
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("classification grid, n = 3..10", criterion_1),
        (
            "fiber dimension and vanishing fiber relations, n = 3..12",
            criterion_2,
        ),
        (
            "fiber relations equal the closed form, n <= 10",
            criterion_3,
        ),
        (
            "explicit Groebner bases, squarefree, x-condition",
            criterion_4,
        ),
        ("J = L (odd) and J = L + HT (even)", criterion_5),
        ("Hilbert series closed forms, n = 3..10", criterion_6),
        ("Cohen-Macaulay type 2 and Gorenstein witness", criterion_7),
        ("Jacobian dual Pfaffian", criterion_8),
        ("kernel property suite", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let mut o = Outcome::new();
        let start = Instant::now();
        let panicked =
            std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&mut o))).is_err();
        if panicked {
            o.check(false, "panicked");
        }
        let status = if o.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {}: {status} — {name} ({:.1?})",
            i + 1,
            start.elapsed()
        );
        for n in &o.notes {
            println!("    {n}");
        }
        for f in &o.failures {
            println!("    failure: {f}");
        }
        if !o.failures.is_empty() {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
