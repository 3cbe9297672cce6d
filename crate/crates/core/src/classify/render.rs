use std::fmt::Write;

use serde_json::{json, Map, Value};

use crate::classify::ClassRecord;

/// The classification grid: one row per `n`, one glyph per `t`.
///
/// Glyphs: `L` linear type, `F` fiber type (not linear), `×` neither,
/// `?` budget exceeded.
pub fn render_grid(records: &[ClassRecord]) -> String {
    let (Some(n_min), Some(n_max)) = (
        records.iter().map(|r| r.n).min(),
        records.iter().map(|r| r.n).max(),
    ) else {
        return String::new();
    };
    let width = n_max.to_string().len().max(1);
    let cols = n_max - 1;
    let mut out = String::new();
    let head: Vec<String> = (1..=cols).map(|t| t.to_string()).collect();
    let _ = writeln!(out, "{:>w$} | {}", "n\\t", head.join(" "), w = width.max(3));
    let rule = head.join(" ").len();
    let _ = writeln!(out, "{}-+-{}", "-".repeat(width.max(3)), "-".repeat(rule));
    for n in n_min..=n_max {
        let mut cells = Vec::new();
        for t in 1..n {
            let g = records
                .iter()
                .find(|r| r.n == n && r.t == t)
                .map_or(".", |r| r.class.glyph());
            // pad to the header column width
            cells.push(format!("{g:<w$}", w = t.to_string().len()));
        }
        let _ = writeln!(
            out,
            "{:>w$} | {}",
            n,
            cells.join(" ").trim_end(),
            w = width.max(3)
        );
    }
    out
}

fn record_value(r: &ClassRecord, timings: bool) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), json!(r.n));
    m.insert("t".into(), json!(r.t));
    m.insert("class".into(), json!(r.class.as_str()));
    m.insert("gcd".into(), json!(r.gcd));
    m.insert("fiber_dim".into(), json!(r.fiber_dim));
    if let Some(w) = &r.witness {
        m.insert("witness".into(), json!(w));
    }
    if timings {
        let tm = &r.timings;
        m.insert(
            "ms".into(),
            json!({"rees": tm.rees, "sym": tm.sym, "fiber": tm.fiber, "fiber_type": tm.fiber_type}),
        );
    }
    Value::Object(m)
}

/// JSON array of records with sorted keys. Timings are included only on
/// request, since they vary between runs.
pub fn render_json(records: &[ClassRecord], timings: bool) -> String {
    let v = Value::Array(records.iter().map(|r| record_value(r, timings)).collect());
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

pub fn render_csv(records: &[ClassRecord], timings: bool) -> String {
    let mut out = String::from("n,t,class,gcd,fiber_dim");
    if timings {
        out.push_str(",rees_ms,sym_ms,fiber_ms,fiber_type_ms");
    }
    out.push('\n');
    for r in records {
        let _ = write!(
            out,
            "{},{},{},{},{}",
            r.n,
            r.t,
            r.class.as_str(),
            r.gcd,
            r.fiber_dim
        );
        if timings {
            let tm = &r.timings;
            let _ = write!(
                out,
                ",{:.3},{:.3},{:.3},{:.3}",
                tm.rees, tm.sym, tm.fiber, tm.fiber_type
            );
        }
        out.push('\n');
    }
    out
}
