//! Browser bindings: each function takes spec-file text and returns the JSON
//! report of the matching `shiftlab` command.

use shiftlab_core::report::{run_command, Command, Report};
use shiftlab_core::SearchBudget;
use wasm_bindgen::prelude::*;

fn finish(r: Report) -> Result<String, String> {
    if r.exit_code == 1 {
        Err(r.text.trim_end().to_owned())
    } else {
        Ok(r.canonical())
    }
}

fn budget(max_cells: u32) -> SearchBudget {
    SearchBudget {
        max_cells: u64::from(max_cells),
        ..SearchBudget::default()
    }
}

/// Every criterion plus the oracle, per component.
#[wasm_bindgen]
pub fn analyze_spec(text: &str) -> Result<String, String> {
    finish(run_command(
        &Command::Analyze,
        text,
        &SearchBudget::default(),
    ))
}

/// All valid tori with periods `(p, q)`.
#[wasm_bindgen]
pub fn search_tori(text: &str, p: u32, q: u32) -> Result<String, String> {
    let cells = (p * q).max(64);
    finish(run_command(
        &Command::Oracle {
            periods: vec![p as usize, q as usize],
        },
        text,
        &budget(cells),
    ))
}

/// Admissible n x n block counts for n up to `max`.
#[wasm_bindgen]
pub fn block_growth(text: &str, max: u32) -> Result<String, String> {
    finish(run_command(
        &Command::Growth { max: max as usize },
        text,
        &SearchBudget::default(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOLDEN: &str = "dim 2\nsymbols 0 1\nforbid h 1 1\nforbid v 1 1\n";

    #[test]
    fn bindings_return_reports() {
        let out = search_tori(GOLDEN, 2, 2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["count"], 7);
        let out = block_growth(GOLDEN, 3).unwrap();
        assert!(out.contains("\"63\""));
        let out = analyze_spec(GOLDEN).unwrap();
        assert!(out.contains("\"nonempty\": \"nonempty\""));
        assert!(analyze_spec("dim 2\nsymbols 0\nforbid h 1 1\n").is_err());
    }
}
