use std::process::{Command, Output};

use sedenion_cli::fixtures;

fn sedenion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sedenion"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = sedenion(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn pretty_table_is_the_golden_layout() {
    let got = stdout(&["table", "--dim", "4", "--format", "pretty"]);
    let diffs: Vec<(usize, &str)> = got
        .lines()
        .zip(fixtures::SEDENION_TABLE.lines())
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(i, (a, _))| (i, a))
        .collect();
    assert_eq!(got.lines().count(), 17);
    // only the documented misprint row differs
    assert_eq!(diffs.len(), 1);
    assert!(diffs[0].1.starts_with("U\tU\t1\t2"));
}

#[test]
fn csv_and_json_tables() {
    let csv = stdout(&["table", "--dim", "3", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("row,0,1,2,3,4,5,6,7"));
    assert_eq!(csv.lines().count(), 9);
    let json = stdout(&["table", "--dim", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 16);
    assert_eq!(v[3][5], serde_json::json!({"sign": -1, "index": 6}));
}

#[test]
fn listing_counts() {
    assert_eq!(stdout(&["assessors"]).lines().count(), 43);
    assert_eq!(stdout(&["trios"]).lines().count(), 29);
    assert_eq!(stdout(&["couplings"]).lines().count(), 168);
    let trips = stdout(&["trips", "--dim", "5"]);
    assert_eq!(trips.lines().filter(|l| l.starts_with('(')).count(), 155);
    let goto = stdout(&["goto", "--otrip", "3,6,5"]);
    assert!(goto.starts_with("GoTo #7\tBased on Octonion Triplet (3, 6, 5)"));
    assert!(goto.contains("excluded: {8, 11, 13, 14}"));
}

#[test]
fn dna_kite_three() {
    let out = stdout(&["dna", "--kite", "III", "--position", "1"]);
    assert!(out.contains("(1 + 15) + (7 - 9)\t(4 + 10) + (2 - 12)\t(Box-Kite VI)"));
    assert!(out.contains("(1 - 12) + (4 + 9)\t(2 - 15) + (7 + 10)\t(Box-Kite V)"));
}

#[test]
fn stripped_osiris() {
    let out = stdout(&["osiris", "--stripped"]);
    assert_eq!(out.lines().nth(1), Some("1\t\tIII\tII\tV\tIV\tVII\tVI"));
}

#[test]
fn pathion_json() {
    let out = stdout(&["pathions", "--dim", "5", "--signature", "15", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["census"]["pairs"], 91);
    assert_eq!(v["census"]["struts"], 7);
    assert_eq!(v["census"]["zero_struts"], 0);
    assert_eq!(v["kite"]["struts"].as_array().unwrap().len(), 7);
}

#[test]
fn seeded_output_is_deterministic() {
    let a = stdout(&[
        "seinfeld",
        "--kite",
        "5",
        "--samples",
        "3",
        "--json",
        "--seed",
        "9",
    ]);
    let b = stdout(&[
        "seinfeld",
        "--kite",
        "5",
        "--samples",
        "3",
        "--json",
        "--seed",
        "9",
    ]);
    assert_eq!(a, b);
    assert_eq!(
        stdout(&["lanyards", "--kite", "2", "--max-len", "8", "--json"]),
        stdout(&["lanyards", "--kite", "II", "--max-len", "8", "--json"])
    );
}

#[test]
fn dot_exports() {
    let dir = tempfile::tempdir().unwrap();
    let path = |n: &str| dir.path().join(n).to_string_lossy().into_owned();

    stdout(&["export", "--dot", "boxkite:III", "--out", &path("k.dot")]);
    let kite = std::fs::read_to_string(path("k.dot")).unwrap();
    assert!(kite.starts_with("graph boxkite_III {"));
    assert_eq!(kite.lines().filter(|l| l.contains("\\n")).count(), 6);
    assert_eq!(
        kite.lines()
            .filter(|l| l.contains("label=\"+\"") || l.contains("label=\"-\""))
            .count(),
        12
    );
    assert_eq!(kite.matches("style=dashed").count(), 3);

    stdout(&["export", "--dot", "boxkite:III", "--out", &path("k2.dot")]);
    assert_eq!(kite, std::fs::read_to_string(path("k2.dot")).unwrap());

    stdout(&["export", "--dot", "fano", "--out", &path("f.dot")]);
    let fano = std::fs::read_to_string(path("f.dot")).unwrap();
    assert_eq!(fano.lines().filter(|l| l.contains("[label=")).count(), 7);
    assert_eq!(fano.matches(" -> ").count(), 21);

    stdout(&["export", "--dot", "donut:1,2,3", "--out", &path("d.dot")]);
    let donut = std::fs::read_to_string(path("d.dot")).unwrap();
    assert_eq!(donut.matches("_label [shape=plaintext").count(), 4);
    assert_eq!(donut.matches("style=dotted").count(), 4);
    assert_eq!(donut.matches("style=dashed").count(), 2);

    stdout(&["export", "--dot", "pathion:5,15", "--out", &path("p.dot")]);
    let p = std::fs::read_to_string(path("p.dot")).unwrap();
    assert_eq!(p.matches("style=dashed").count(), 7);
}

#[test]
fn verify_passes_and_reports_json() {
    let out = sedenion(&["verify", "--suite", "core", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    let ids: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(ids.contains(&"table-fidelity") && ids.contains(&"numeric-identities"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(sedenion(&["table", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        sedenion(&["dna", "--kite", "VIII", "--position", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sedenion(&["goto", "--otrip", "1,2,4"]).status.code(),
        Some(2)
    );
    assert_eq!(sedenion(&["table", "--dim", "9"]).status.code(), Some(2));
    assert_eq!(
        sedenion(&["export", "--dot", "cube", "--out", "x.dot"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn unwritable_export_is_an_io_error() {
    let out = sedenion(&["export", "--dot", "fano", "--out", "/nonexistent/dir/f.dot"]);
    assert_eq!(out.status.code(), Some(1));
}
