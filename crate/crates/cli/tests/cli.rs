use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.spec"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shiftlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (serde_json::Value, i32) {
    let mut full = args.to_vec();
    full.push("--print-json");
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).expect("JSON on stdout");
    (v, out.status.code().unwrap())
}

#[test]
fn every_fixture_analyses_cleanly() {
    for name in [
        "three_symbols",
        "golden_mean",
        "single_orbit",
        "two_components",
        "transpose_pair",
        "pruned_products",
        "identity_chaining",
        "empty",
        "square",
    ] {
        let path = fixture(name);
        let out = run(&["analyze", path.to_str().unwrap()]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{name}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(
            String::from_utf8_lossy(&out.stdout).starts_with("overall: "),
            "{name}"
        );
    }
}

#[test]
fn oracle_lists_the_four_translates() {
    let p = fixture("single_orbit");
    let (v, code) = json(&["oracle", p.to_str().unwrap(), "--torus", "4", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["count"], 4);
    let text = run(&["oracle", p.to_str().unwrap(), "--torus", "4", "2"]);
    let stdout = String::from_utf8(text.stdout).unwrap();
    assert!(stdout.starts_with("4 tori"));
    assert!(stdout.contains("0 0 1 2\n1 2 0 0"));
}

#[test]
fn empty_shift_is_a_definitive_answer() {
    let p = fixture("empty");
    let (v, code) = json(&["nonempty", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["nonempty"], "empty");
}

#[test]
fn finiteness_of_example_four() {
    let p = fixture("two_components");
    let (v, code) = json(&["finite", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["finite"], "finite");
}

#[test]
fn exhausted_budget_exits_with_two() {
    let p = fixture("golden_mean");
    let (v, code) = json(&[
        "growth",
        p.to_str().unwrap(),
        "--max",
        "12",
        "--max-nodes",
        "1000",
    ]);
    assert_eq!(code, 2, "{v}");
    assert_eq!(v["status"], "unknown");
}

#[test]
fn malformed_input_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.spec");
    std::fs::write(&bad, "dim 2\nsymbols a b\nforbid h a c\n").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: 3:"), "{err}");
    let missing = run(&["analyze", dir.path().join("none.spec").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn json_file_matches_printed_report_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = fixture("pruned_products");
    let mut reports = Vec::new();
    for k in 0..2 {
        let out = dir.path().join(format!("r{k}.json"));
        let res = run(&[
            "epairs",
            p.to_str().unwrap(),
            "--json",
            out.to_str().unwrap(),
        ]);
        assert_eq!(res.status.code(), Some(0));
        let mut v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("timing");
        reports.push(v);
    }
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[0]["command"], "epairs");
    assert_eq!(
        reports[0]["result"]["tables"]["a1"]
            .as_array()
            .unwrap()
            .len(),
        5
    );
}

#[test]
fn higher_block_and_periodic_commands() {
    let p = fixture("golden_mean");
    let (v, code) = json(&["higher-block", p.to_str().unwrap(), "--window", "2", "2"]);
    assert_eq!(code, 0, "{v}");
    let (v, code) = json(&["periodic", p.to_str().unwrap(), "--period", "2", "2"]);
    assert_eq!(code, 0, "{v}");
}
