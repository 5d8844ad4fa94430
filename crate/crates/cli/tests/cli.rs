use std::process::{Command, Output};

fn htype(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_htype"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_json_to_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t26.json");
    let out = htype(&["gen", "7", "0", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed = htype_core::golden::parse_table_json(&text).unwrap();
    assert_eq!(parsed.number, Some(26));
    let reference = htype_core::golden::golden_table(parsed.sig).unwrap();
    assert_eq!(parsed.table, reference.table);
}

#[test]
fn gen_csv_first_rows() {
    let out = htype(&["gen", "1", "0", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,2,1,1\n2,1,1,-1\n");
}

#[test]
fn gen_latex_has_corner_header() {
    let out = htype(&["gen", "3", "0", "--format", "latex"]);
    assert!(stdout(&out).contains("$[r, c]$ & $v_{1}$"));
}

#[test]
fn gen_n07_is_doubled() {
    let out = htype(&["gen", "0", "7", "--format", "csv"]);
    assert!(out.status.success());
    let rows: Vec<_> = stdout(&out).lines().map(str::to_owned).collect();
    assert_eq!(rows.len(), 2 * 8 * 7);
    assert!(rows.iter().all(|r| {
        let f: Vec<usize> = r.split(',').take(2).map(|x| x.parse().unwrap()).collect();
        (f[0] <= 8) == (f[1] <= 8)
    }));
}

#[test]
fn untabulated_signature_falls_back_with_warning() {
    let out = htype(&["gen", "6", "1", "--format", "csv"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn out_of_range_is_usage_error() {
    let out = htype(&["gen", "5", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "usage");
}

#[test]
fn unknown_format_and_config_are_usage_errors() {
    assert_eq!(
        htype(&["gen", "1", "0", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        htype(&["gen", "1", "0", "--config", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(htype(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn match_untabulated_is_usage_error() {
    assert_eq!(htype(&["match", "6", "1"]).status.code(), Some(2));
}

#[test]
fn match_reports_errata_cells() {
    let out = htype(&["match", "3", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Unmatched"));
    assert!(text.contains("all differences at errata cells: true"));
}

#[test]
fn match_exact_anchor() {
    let out = htype(&["match", "1", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("ExactMatch"));
}

#[test]
fn verify_all_json() {
    let out = htype(&["verify", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["golden"].as_array().unwrap().len(), 31);
    assert_eq!(doc["generated"].as_array().unwrap().len(), 44);
}

#[test]
fn verify_golden_lists_errata() {
    let out = htype(&["verify", "--golden"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Table 1 (1,0): ok"));
    assert!(text.contains("Table 20 (5,1): errata"));
}

#[test]
fn dims_lists_every_signature() {
    let out = htype(&["dims"]);
    assert_eq!(stdout(&out).lines().count(), 45);
}

#[test]
fn relations_confirmed() {
    let out = htype(&["relations", "7", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).matches("confirmed").count(), 6);
}
