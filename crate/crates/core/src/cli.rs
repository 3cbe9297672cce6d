//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a checked identity failed, 2 usage error,
//! 3 computation budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::classify::{
    self, classification_table, cm_type_report, conjecture_report, known_results_report,
    render_csv, render_grid, render_json, Class, TableConfig,
};
use crate::error::Error;
use crate::groebner::{is_groebner_basis, Budget, GbCheck, Ideal};
use crate::monomial::{initial_ideal, is_squarefree, x_condition};
use crate::rees::{self, PathIdealSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    /// Generators for t = n-2.
    N2,
    /// Generators for t = n/2, n even.
    Half,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// The path ideal I_t(C_n) in K[x].
    Path,
    /// The symmetric algebra relations L.
    Sym,
    /// The Rees ideal J (reduced Gröbner basis).
    Rees,
    /// The fiber relations H in K[y] (reduced Gröbner basis).
    Fiber,
    /// The explicit generator family for t = n-2 or t = n/2.
    Family,
}

#[derive(Debug, Parser)]
#[command(
    name = "cycle-rees",
    version,
    about = "Rees algebras of path ideals of cycles"
)]
pub struct Cli {
    /// Time budget per Gröbner computation (per cell for `table`), in seconds.
    #[arg(
        long,
        global = true,
        env = "CYCLE_REES_BUDGET_SECS",
        default_value_t = 60.0
    )]
    pub budget_secs: f64,

    /// Worker threads for `table` (default: available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Include per-stage timings in JSON/CSV output (makes output run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify I_t(C_n) as linear type, fiber type, or neither.
    Classify {
        /// Cycle size, 3..=15.
        #[arg(long)]
        n: usize,
        /// Path length, 1..n-1.
        #[arg(long)]
        t: usize,
    },
    /// Classify every 1 <= t < n for n in a range and print the grid.
    Table {
        /// Smallest cycle size.
        #[arg(long)]
        n_min: usize,
        /// Largest cycle size.
        #[arg(long)]
        n_max: usize,
        /// Append consistency checks against known results and the conjecture report.
        #[arg(long)]
        report: bool,
    },
    /// Dimension of the fiber cone, n - gcd(n, t) + 1.
    FiberDim {
        /// Cycle size, 3..=15.
        #[arg(long)]
        n: usize,
        /// Path length, 1..n-1.
        #[arg(long)]
        t: usize,
        /// Cross-check against the exact rank of the circulant matrix.
        #[arg(long)]
        check_rank: bool,
    },
    /// Hilbert series of the Rees algebra of I_{n-2}(C_n).
    Hilbert {
        /// Cycle size, 3..=15.
        #[arg(long)]
        n: usize,
        /// Compare with the closed form.
        #[arg(long)]
        verify: bool,
    },
    /// Cohen–Macaulay type of the Rees algebra of I_{n-2}(C_n), n odd.
    CmType {
        /// Cycle size, 3..=15.
        #[arg(long)]
        n: usize,
    },
    /// Check that an explicit generator family is a Gröbner basis.
    VerifyGb {
        /// `n2` for t = n-2, `half` for t = n/2 (n even).
        #[arg(long, value_enum)]
        family: FamilyName,
        /// Cycle size, 3..=15.
        #[arg(long)]
        n: usize,
    },
    /// Pfaffian of the Jacobian dual matrix, n even.
    Pfaffian {
        /// Cycle size, 3..=15.
        #[arg(long)]
        n: usize,
    },
    /// Print the generators of one of the ideals attached to I_t(C_n).
    Ideal {
        /// Cycle size, 3..=15.
        #[arg(long)]
        n: usize,
        /// Path length, 1..n-1.
        #[arg(long)]
        t: usize,
        /// Which ideal to print.
        #[arg(long, value_enum)]
        which: Which,
    },
}

/// Outcome of a subcommand before it is mapped to an exit code.
enum Failure {
    /// A checked identity did not hold; the report was already written.
    Check,
    Error(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command, writing
/// the report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if !(cli.budget_secs.is_finite() && cli.budget_secs > 0.0) {
        let _ = writeln!(err, "error: budget must be a positive number of seconds");
        return EXIT_USAGE;
    }
    if cli.jobs == Some(0) {
        let _ = writeln!(err, "error: --jobs must be at least 1");
        return EXIT_USAGE;
    }
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Check) => EXIT_FAILED,
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
        Err(Failure::Error(Error::BudgetExceeded)) => {
            let _ = writeln!(
                err,
                "error: computation budget of {}s exceeded",
                cli.budget_secs
            );
            EXIT_BUDGET
        }
        Err(Failure::Error(e @ (Error::OutOfRange(_) | Error::OddDimension(_)))) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

fn budget(cli: &Cli) -> Budget {
    Budget::with_time(Duration::from_secs_f64(cli.budget_secs))
}

fn json_line(out: &mut dyn Write, v: &serde_json::Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("serializable")
    )
}

fn check(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Classify { n, t } => {
            let rec = classify::classify(n, t, &budget(cli))?;
            match cli.format {
                Format::Text => writeln!(out, "{}", rec.class.as_str())?,
                Format::Json => {
                    out.write_all(render_json(std::slice::from_ref(&rec), cli.timings).as_bytes())?
                }
                Format::Csv => {
                    out.write_all(render_csv(std::slice::from_ref(&rec), cli.timings).as_bytes())?
                }
            }
            if rec.class == Class::Timeout {
                return Err(Error::BudgetExceeded.into());
            }
            Ok(())
        }
        Command::Table {
            n_min,
            n_max,
            report,
        } => {
            let mut cfg = TableConfig {
                budget: Duration::from_secs_f64(cli.budget_secs),
                ..TableConfig::default()
            };
            if let Some(j) = cli.jobs {
                cfg.jobs = j;
            }
            let recs = classification_table(n_min, n_max, &cfg)?;
            match cli.format {
                Format::Text => out.write_all(render_grid(&recs).as_bytes())?,
                Format::Json => out.write_all(render_json(&recs, cli.timings).as_bytes())?,
                Format::Csv => out.write_all(render_csv(&recs, cli.timings).as_bytes())?,
            }
            if report {
                let violations = known_results_report(&recs);
                writeln!(out)?;
                if violations.is_empty() {
                    writeln!(out, "known results: consistent")?;
                } else {
                    for v in &violations {
                        writeln!(
                            out,
                            "known results: item {} contradicted at n={} t={} ({})",
                            v.item,
                            v.n,
                            v.t,
                            v.class.as_str()
                        )?;
                    }
                }
                for row in conjecture_report(&recs) {
                    let verdict = match row.agrees() {
                        Some(true) => "agrees",
                        Some(false) => "DISAGREES",
                        None => "timeout",
                    };
                    writeln!(
                        out,
                        "conjecture part {}: n={} t={} predicted {} -> {verdict}",
                        row.part,
                        row.n,
                        row.t,
                        if row.predicted_fiber {
                            "fiber"
                        } else {
                            "not fiber"
                        }
                    )?;
                }
                return check(violations.is_empty());
            }
            Ok(())
        }
        Command::FiberDim { n, t, check_rank } => {
            let d = classify::fiber_dimension(n, t)?;
            let rank = if check_rank {
                Some(classify::circulant_rank(n, t)?)
            } else {
                None
            };
            match cli.format {
                Format::Json => {
                    let mut v = json!({"n": n, "t": t, "fiber_dim": d});
                    if let Some(r) = rank {
                        v["circulant_rank"] = json!(r);
                    }
                    json_line(out, &v)?
                }
                _ => match rank {
                    None => writeln!(out, "{d}")?,
                    Some(r) if r == d => writeln!(out, "{d} (rank check: ok)")?,
                    Some(r) => writeln!(out, "{d} (rank check: FAILED, circulant rank {r})")?,
                },
            }
            check(rank.is_none_or(|r| r == d))
        }
        Command::Hilbert { n, verify } => {
            let b = budget(cli);
            if verify {
                let c = classify::verify_hilbert(n, &b)?;
                match cli.format {
                    Format::Json => json_line(
                        out,
                        &json!({"n": n, "computed": c.computed, "expected": c.expected, "ok": c.ok()}),
                    )?,
                    _ => writeln!(
                        out,
                        "{} (closed form: {})",
                        c.computed,
                        if c.ok() { "ok" } else { "MISMATCH" }
                    )?,
                }
                check(c.ok())
            } else {
                let hs = classify::rees_hilbert_series(n, &b)?;
                match cli.format {
                    Format::Json => {
                        json_line(out, &serde_json::to_value(&hs).expect("serializable"))?
                    }
                    _ => writeln!(out, "{hs}")?,
                }
                Ok(())
            }
        }
        Command::CmType { n } => {
            let r = cm_type_report(n)?;
            match cli.format {
                Format::Json => json_line(out, &serde_json::to_value(&r).expect("serializable"))?,
                _ => writeln!(out, "{}", r.cm_type)?,
            }
            Ok(())
        }
        Command::VerifyGb { family, n } => verify_gb(cli, family, n, out),
        Command::Pfaffian { n } => {
            let a = rees::jacobian_dual(n)?;
            let pf = rees::pfaffian(&a)?;
            let h = rees::family_n_minus_2(n)?
                .get("h")
                .cloned()
                .expect("even n has h");
            let sign = if pf == h {
                Some("+")
            } else if pf == -&h {
                Some("-")
            } else {
                None
            };
            match cli.format {
                Format::Json => json_line(
                    out,
                    &json!({"n": n, "pfaffian": pf.to_string(), "h": h.to_string(), "sign": sign}),
                )?,
                _ => match sign {
                    Some(s) => writeln!(out, "Pf(A) = {pf} = {s}h")?,
                    None => writeln!(out, "Pf(A) = {pf} differs from ±h = ±({h})")?,
                },
            }
            check(sign.is_some())
        }
        Command::Ideal { n, t, which } => {
            let spec = PathIdealSpec::new(n, t)?;
            let b = budget(cli);
            let gens: Vec<(Option<String>, String)> = match which {
                Which::Path => texts(&rees::path_ideal(spec)?),
                Which::Sym => texts(&rees::sym_relations(spec)?),
                Which::Rees => texts(&rees::rees_ideal(spec, &b)?),
                Which::Fiber => texts(&rees::fiber_ideal(spec, &b)?),
                Which::Family => {
                    let fam = if t + 2 == n {
                        rees::family_n_minus_2(n)?
                    } else if 2 * t == n {
                        rees::family_half(n)?
                    } else {
                        return Err(Error::OutOfRange(format!(
                            "no explicit family for t={t}; need t = n-2 or t = n/2"
                        ))
                        .into());
                    };
                    fam.members
                        .iter()
                        .map(|m| (Some(m.name.clone()), m.poly.to_string()))
                        .collect()
                }
            };
            match cli.format {
                Format::Json => {
                    let v: Vec<serde_json::Value> = gens
                        .iter()
                        .map(|(name, p)| match name {
                            Some(nm) => json!({"name": nm, "poly": p}),
                            None => json!(p),
                        })
                        .collect();
                    json_line(out, &json!(v))?
                }
                _ if gens.is_empty() => writeln!(out, "0")?,
                _ => {
                    for (name, p) in &gens {
                        match name {
                            Some(nm) => writeln!(out, "{nm} = {p}")?,
                            None => writeln!(out, "{p}")?,
                        }
                    }
                }
            }
            Ok(())
        }
    }
}

/// Generators as text; ideals carrying a cached basis under their ambient
/// order print that reduced basis.
fn texts(ideal: &Ideal) -> Vec<(Option<String>, String)> {
    let polys = match ideal.cached_basis(ideal.ring().ambient()) {
        Some(gb) => gb.elements().to_vec(),
        None => ideal.generators().to_vec(),
    };
    polys.into_iter().map(|p| (None, p.to_string())).collect()
}

fn verify_gb(cli: &Cli, family: FamilyName, n: usize, out: &mut dyn Write) -> Outcome {
    let fam = match family {
        FamilyName::N2 => rees::family_n_minus_2(n)?,
        FamilyName::Half => rees::family_half(n)?,
    };
    let order = fam.ring.ambient().clone();
    let polys = fam.polys();
    let result = is_groebner_basis(&polys, &order)?;
    let ideal = Ideal::new(&fam.ring, polys)?;
    let init = initial_ideal(&ideal, &order, &budget(cli))?;
    let squarefree = is_squarefree(&init);
    let xcond = x_condition(&init);
    let needs_x = family == FamilyName::N2;
    let ok = result.is_basis() && squarefree && (!needs_x || xcond);
    match cli.format {
        Format::Json => {
            let mut v = json!({
                "n": n,
                "is_groebner_basis": result.is_basis(),
                "initial_ideal": init.generator_strings(),
                "squarefree": squarefree,
                "x_condition": xcond,
            });
            if let GbCheck::NotBasis(c) = &result {
                v["certificate"] = json!({
                    "pair": [fam.members[c.i].name, fam.members[c.j].name],
                    "remainder": c.remainder.to_string(),
                });
            }
            json_line(out, &v)?
        }
        _ => {
            match &result {
                GbCheck::Basis => {
                    writeln!(out, "groebner basis: ok ({} elements)", fam.members.len())?
                }
                GbCheck::NotBasis(c) => writeln!(
                    out,
                    "groebner basis: FAILED, S({}, {}) reduces to {}",
                    fam.members[c.i].name, fam.members[c.j].name, c.remainder
                )?,
            }
            writeln!(
                out,
                "initial ideal squarefree: {}",
                if squarefree { "ok" } else { "FAILED" }
            )?;
            if needs_x {
                writeln!(out, "x-condition: {}", if xcond { "ok" } else { "FAILED" })?;
            }
        }
    }
    check(ok)
}
