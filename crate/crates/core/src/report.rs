//! Commands behind the `shiftlab` binary and their canonical JSON reports.
//!
//! Reports are `serde_json::Value` trees; object keys are sorted, so equal
//! inputs give byte-identical output. Wall-clock time is kept under the
//! top-level `timing` key, which [`Report::canonical`] leaves out.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::analysis::{
    analyze, build_epair_tables, Analysis, EPairTables, Triomino, Verdict, VerdictStatus,
};
use crate::dynamics::{
    block_growth, horizontal_periodic_exists, torus_search, torus_search_limited,
    vertical_periodic_exists, SearchBudget,
};
use crate::error::Result;
use crate::graph::{graph_from_one_step, trim, MultiGraph};
use crate::pattern::TorusConfig;
use crate::recode::{higher_block_spec, BlockAlphabetCoding};
use crate::specfile::{parse_spec, render_ascii, render_block, SpecFile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Nonempty,
    Finite,
    EPairs,
    HigherBlock { window: Vec<usize> },
    Periodic { width: usize, height: usize },
    Oracle { periods: Vec<usize> },
    Growth { max: usize },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Nonempty => "nonempty",
            Command::Finite => "finite",
            Command::EPairs => "epairs",
            Command::HigherBlock { .. } => "higher-block",
            Command::Periodic { .. } => "periodic",
            Command::Oracle { .. } => "oracle",
            Command::Growth { .. } => "growth",
        }
    }
}

/// Outcome of one command: JSON report, human summary and exit status.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
    /// 0 definitive, 2 inconclusive or out of budget, 1 error.
    pub exit_code: i32,
}

impl Report {
    /// The report without its `timing` key, serialized.
    pub fn canonical(&self) -> String {
        let mut v = self.json.clone();
        if let Value::Object(m) = &mut v {
            m.remove("timing");
        }
        serde_json::to_string_pretty(&v).expect("json values serialize")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("json values serialize")
    }
}

struct Outcome {
    result: Value,
    text: String,
    definitive: bool,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

// std's clock panics on wasm32-unknown-unknown, so timing is left null there.
#[cfg(not(target_arch = "wasm32"))]
fn clock() -> impl FnOnce() -> Value {
    let start = std::time::Instant::now();
    move || json!(start.elapsed().as_millis() as u64)
}

#[cfg(target_arch = "wasm32")]
fn clock() -> impl FnOnce() -> Value {
    || Value::Null
}

/// Parses `input` and runs `command` on it. Never panics on bad input: parse
/// and precondition failures become reports with exit status 1.
pub fn run_command(command: &Command, input: &str, budget: &SearchBudget) -> Report {
    let elapsed = clock();
    let outcome = parse_spec(input).and_then(|file| dispatch(command, &file, budget));
    let (status, result, text, exit_code) = match outcome {
        Ok(o) if o.definitive => ("ok", o.result, o.text, 0),
        Ok(o) => ("unknown", o.result, o.text, 2),
        Err(e) if e.is_budget() => (
            "unknown",
            json!({ "error": e.to_string() }),
            format!("unknown: {e}\n"),
            2,
        ),
        Err(e) => (
            "error",
            json!({ "error": e.to_string() }),
            format!("error: {e}\n"),
            1,
        ),
    };
    let mut top = Map::new();
    top.insert("tool".into(), json!("shiftlab"));
    top.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    top.insert("command".into(), json!(command.name()));
    top.insert("input_sha256".into(), json!(sha256_hex(input.as_bytes())));
    top.insert(
        "budget".into(),
        json!({ "max_cells": budget.max_cells, "max_nodes": budget.max_nodes }),
    );
    top.insert("status".into(), json!(status));
    top.insert("result".into(), result);
    top.insert("timing".into(), json!({ "elapsed_ms": elapsed() }));
    Report {
        json: Value::Object(top),
        text,
        exit_code,
    }
}

fn dispatch(command: &Command, file: &SpecFile, budget: &SearchBudget) -> Result<Outcome> {
    match command {
        Command::Analyze => {
            let g = file.to_graph(budget)?;
            let a = analyze(&g, budget)?;
            Ok(Outcome {
                text: analysis_text(&a),
                definitive: matches!(a.nonempty, VerdictStatus::Nonempty | VerdictStatus::Empty),
                result: analysis_json(&a, g.labels(), true),
            })
        }
        Command::Nonempty => {
            let g = file.to_graph(budget)?;
            let a = analyze(&g, budget)?;
            Ok(Outcome {
                text: format!("{}\n", status_word(a.nonempty)),
                definitive: matches!(a.nonempty, VerdictStatus::Nonempty | VerdictStatus::Empty),
                result: analysis_json(&a, g.labels(), false),
            })
        }
        Command::Finite => {
            let g = file.to_graph(budget)?;
            let a = analyze(&g, budget)?;
            let t = trim(&g);
            let growth = if t.is_empty() {
                Value::Null
            } else {
                let gr = block_growth(&t, 5, budget)?;
                json!({
                    "counts": gr.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "strictly_increasing": gr.strictly_increasing,
                    "truncated": gr.truncated,
                })
            };
            let comps: Vec<Value> = a
                .components
                .iter()
                .map(|c| {
                    json!({
                        "vertices": c.vertices,
                        "finite": status_word(c.finite),
                        "verdicts": c.finiteness_verdicts.iter().map(|v| verdict_json(v, g.labels())).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut text = format!("{}\n", finite_word(a.finite));
            if let Some(counts) = growth.get("counts") {
                text.push_str(&format!("block counts: {}\n", join_values(counts)));
            }
            Ok(Outcome {
                text,
                definitive: a.finite == VerdictStatus::FiniteSufficient,
                result: json!({ "finite": finite_word(a.finite), "components": comps, "growth": growth }),
            })
        }
        Command::EPairs => {
            let g = file.to_graph(budget)?;
            let t = trim(&g);
            let tables = build_epair_tables(&t)?;
            Ok(Outcome {
                text: format!(
                    "A1: {} triominoes, A2: {} triominoes\n",
                    tables.a1.len(),
                    tables.a2.len()
                ),
                definitive: true,
                result: json!({ "vertices": t.labels(), "tables": tables_json(&tables, t.labels()) }),
            })
        }
        Command::HigherBlock { window } => {
            let spec = file.shift_spec();
            let (one_step, coding) = higher_block_spec(&spec, window, budget)?;
            let g = graph_from_one_step(&one_step)?;
            let labels = spec.alphabet().symbols();
            let blocks: Vec<Value> = coding
                .block_symbols()
                .iter()
                .enumerate()
                .map(|(i, b)| json!({ "symbol": BlockAlphabetCoding::symbol_name(i), "rows": rows_json(&render_block(b, labels)) }))
                .collect();
            Ok(Outcome {
                text: format!("{} block symbols for window {:?}\n", coding.len(), window),
                definitive: true,
                result: json!({ "window": window, "symbols": blocks, "h": g.h(), "v": g.v() }),
            })
        }
        Command::Periodic { width, height } => {
            let g = file.to_graph(budget)?;
            let h = horizontal_periodic_exists(&g, *width, budget)?;
            let v = vertical_periodic_exists(&g, *height, budget)?;
            let both = torus_search_limited(&g, &[*width, *height], budget, Some(1))?.pop();
            let l = g.labels();
            let text = format!(
                "horizontal period {width}: {}\nvertical period {height}: {}\ntorus {width}x{height}: {}\n",
                yes_no(h.is_some()),
                yes_no(v.is_some()),
                yes_no(both.is_some())
            );
            Ok(Outcome {
                text,
                definitive: true,
                result: json!({
                    "horizontal": { "period": width, "exists": h.is_some(), "witness": h.map(|t| torus_json(&t, l)) },
                    "vertical": { "period": height, "exists": v.is_some(), "witness": v.map(|t| torus_json(&t, l)) },
                    "torus": { "periods": [width, height], "exists": both.is_some(), "witness": both.map(|t| torus_json(&t, l)) },
                }),
            })
        }
        Command::Oracle { periods } => {
            let g = file.to_graph(budget)?;
            let tori = torus_search(&g, periods, budget)?;
            let mut text = format!("{} tori with periods {:?}\n", tori.len(), periods);
            for t in &tori {
                text.push('\n');
                text.push_str(&render_ascii(t, g.labels()));
            }
            Ok(Outcome {
                text,
                definitive: true,
                result: json!({
                    "periods": periods,
                    "count": tori.len(),
                    "tori": tori.iter().map(|t| torus_json(t, g.labels())).collect::<Vec<_>>(),
                }),
            })
        }
        Command::Growth { max } => {
            let g = file.to_graph(budget)?;
            let gr = block_growth(&g, *max, budget)?;
            let counts: Vec<String> = gr.counts.iter().map(|c| c.to_string()).collect();
            Ok(Outcome {
                text: format!("{}\n", counts.join(" ")),
                definitive: !gr.truncated,
                result: json!({
                    "counts": counts,
                    "strictly_increasing": gr.strictly_increasing,
                    "truncated": gr.truncated,
                }),
            })
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join_values(v: &Value) -> String {
    v.as_array()
        .map(|a| {
            a.iter()
                .filter_map(Value::as_str)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default()
}

pub fn status_word(s: VerdictStatus) -> &'static str {
    match s {
        VerdictStatus::Nonempty => "nonempty",
        VerdictStatus::Empty => "empty",
        VerdictStatus::FiniteSufficient => "finite",
        VerdictStatus::Inconclusive => "inconclusive",
    }
}

fn finite_word(s: VerdictStatus) -> &'static str {
    match s {
        VerdictStatus::FiniteSufficient => "finite",
        _ => "inconclusive",
    }
}

fn rows_json(rendered: &str) -> Vec<String> {
    rendered.lines().map(str::to_owned).collect()
}

fn torus_json(t: &TorusConfig, labels: &[String]) -> Value {
    json!({ "periods": t.periods(), "rows": rows_json(&render_ascii(t, labels)) })
}

fn verdict_json(v: &Verdict, labels: &[String]) -> Value {
    json!({
        "criterion": v.criterion,
        "status": status_word(v.status),
        "detail": v.detail,
        "witness": v.witness.as_ref().map(|t| torus_json(t, labels)),
    })
}

fn triomino_json(t: &Triomino, labels: &[String]) -> Value {
    json!({
        "kind": format!("{:?}", t.kind),
        "a": labels[t.cells[0]],
        "b": labels[t.cells[1]],
        "c": labels[t.cells[2]],
    })
}

fn tables_json(t: &EPairTables, labels: &[String]) -> Value {
    json!({
        "a1": t.a1.iter().map(|x| triomino_json(x, labels)).collect::<Vec<_>>(),
        "a2": t.a2.iter().map(|x| triomino_json(x, labels)).collect::<Vec<_>>(),
        "m": t.m_matrix,
        "n": t.n_matrix,
        "epair": t.epair,
    })
}

/// `labels` are those of the analysed graph; verdict witnesses use its symbols.
fn analysis_json(a: &Analysis, labels: &[String], full: bool) -> Value {
    let comps: Vec<Value> = a
        .components
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("vertices".into(), json!(c.vertices));
            m.insert("nonempty".into(), json!(status_word(c.nonempty)));
            m.insert("finite".into(), json!(finite_word(c.finite)));
            m.insert(
                "verdicts".into(),
                json!(c
                    .verdicts
                    .iter()
                    .map(|v| verdict_json(v, labels))
                    .collect::<Vec<_>>()),
            );
            if full {
                m.insert(
                    "finiteness_verdicts".into(),
                    json!(c
                        .finiteness_verdicts
                        .iter()
                        .map(|v| verdict_json(v, labels))
                        .collect::<Vec<_>>()),
                );
                m.insert("h".into(), json!(c.h));
                m.insert("v".into(), json!(c.v));
                m.insert(
                    "predicates".into(),
                    json!({ "h": c.predicates[0], "v": c.predicates[1] }),
                );
                m.insert("products".into(), json!(c.products));
                m.insert("epair_tables".into(), tables_json(&c.epairs, &c.vertices));
            }
            Value::Object(m)
        })
        .collect();
    json!({
        "nonempty": status_word(a.nonempty),
        "finite": finite_word(a.finite),
        "trimmed": a.trimmed,
        "notes": a.notes,
        "components": comps,
    })
}

fn analysis_text(a: &Analysis) -> String {
    let mut out = format!(
        "overall: {}, finiteness: {}\n",
        status_word(a.nonempty),
        finite_word(a.finite)
    );
    if !a.trimmed.is_empty() {
        out.push_str(&format!("trimmed: {}\n", a.trimmed.join(" ")));
    }
    for (k, c) in a.components.iter().enumerate() {
        out.push_str(&format!(
            "component {k} [{}]: {}\n",
            c.vertices.join(" "),
            status_word(c.nonempty)
        ));
        for v in c.verdicts.iter().chain(&c.finiteness_verdicts) {
            out.push_str(&format!(
                "  {:<24} {:<13} {}\n",
                v.criterion,
                status_word(v.status),
                v.detail
            ));
        }
    }
    out
}

/// Graph used by a command, exposed for callers that want it directly.
pub fn graph_of(input: &str, budget: &SearchBudget) -> Result<MultiGraph> {
    parse_spec(input)?.to_graph(budget)
}
