use std::process::{Command, Output};

use skein::diagram::LinkDiagram;

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn bracket_of_a_pretzel_checks_the_degree_formula() {
    let o = skein(&["bracket", "--pretzel", "1,1,1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("<S_1>: -A^-9 + A^-1 + A^3 + A^7"), "{text}");
    assert!(text.contains("min degree: -9"));
    assert!(text.contains("= -9 (matches)"));
    // Two columns are accepted too.
    assert!(skein(&["bracket", "--pretzel", "1,1"]).status.success());
}

#[test]
fn bracket_from_a_pd_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hopf.pd");
    std::fs::write(&path, "PD[X[1,4,2,3],X[3,2,4,1]]\n").unwrap();
    let o = skein(&["bracket", "--pd", path.to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bracket"], "A^-6 + A^-2 + A^2 + A^6");
    assert_eq!(v["diagram"], "hopf");

    std::fs::write(&path, "PD[X[1,4,2,3],X[3,2,4]]").unwrap();
    let o = skein(&["bracket", "--pd", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("--pd") && err.contains("position"), "{err}");
}

#[test]
fn first_table_in_every_format() {
    let base = ["table", "--pretzel-family", "8,6,k", "--color", "2", "--range", "1..10", "--window", "k+1"];
    let text = stdout(&skein(&base));
    let last = text.lines().last().unwrap();
    assert!(last.ends_with("1,-1,3,-4,6,-8,10,-11,13,-13,14"), "{last}");

    let csv = stdout(&skein(&[&base[..], &["--format", "csv"]].concat()));
    let json = stdout(&skein(&[&base[..], &["--format", "json"]].concat()));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    let csv_rows: Vec<&str> = csv.lines().skip(1).collect();
    let text_rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 10);
    for ((j, c), t) in rows.iter().zip(&csv_rows).zip(&text_rows) {
        let coeffs: Vec<String> = j["coeffs"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
        let joined = coeffs.join(",");
        assert!(c.ends_with(&joined), "{c} vs {joined}");
        assert!(t.ends_with(&joined), "{t} vs {joined}");
    }
}

#[test]
fn fourth_table_by_cable_color() {
    let o = skein(&["table", "--pretzel-family", "2,5,k", "--cable", "k", "--range", "1..4", "--window", "k+1"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().map(|l| l.rsplit(' ').next().unwrap()).collect();
    assert_eq!(rows, ["1,-1", "1,-1,-1", "1,-1,-1,0", "1,-1,-1,0,0"]);
}

#[test]
fn tails_pass_and_fail() {
    let fam = ["tail", "--pretzel-family", "k,k,2", "--color", "2", "--range", "1..10"];
    let o = skein(&[&fam[..], &["--rate", "k+1"]].concat());
    assert!(o.status.success());
    assert!(stdout(&o).contains("tail:   1,-1,3,-3,5,-6,7,-8,9,-10,11"));

    let o = skein(&[&fam[..], &["--rate", "k+3"]].concat());
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL") && text.contains("position"), "{text}");

    let single = ["tail", "--pretzel-family", "8,6,k", "--color", "2", "--range", "3..3", "--rate", "k+1"];
    assert!(skein(&single).status.success());
}

#[test]
fn twist_rate_for_brackets() {
    let o = skein(&[
        "tail",
        "--pretzel-family",
        "2,2,k",
        "--cable",
        "2",
        "--unreduced",
        "--range",
        "1..3",
        "--twist-rate",
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["grading"], "a-units");
    assert_eq!(v["steps"][1]["claimed"], 20);
}

#[test]
fn errors_name_the_flag() {
    let o = skein(&["table", "--pretzel-family", "8,6,k", "--color", "2", "--range", "5..3", "--window", "k"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--range"));
    let o = skein(&["table", "--pretzel-family", "8,6,k*", "--color", "2", "--range", "1..3", "--window", "k"]);
    assert!(stderr(&o).contains("--pretzel-family") && stderr(&o).contains("position 6"));
    let o = skein(&["table", "--pretzel-family", "8,6,k", "--color", "2", "--range", "1..3", "--window", "(k"]);
    assert!(stderr(&o).contains("--window"));
    let o = skein(&["bracket", "--pretzel", "2,x"]);
    assert!(stderr(&o).contains("--pretzel") && stderr(&o).contains("position 2"));
    let o = skein(&["--max-fusion-terms", "4", "bracket", "--pretzel", "2,2,2", "--cable", "2"]);
    assert!(stderr(&o).contains("budget") && stderr(&o).contains("cap 4"), "{}", stderr(&o));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hopf.pd");
    std::fs::write(&path, "PD[X[1,4,2,3],X[3,2,4,1]]").unwrap();
    let o = skein(&["--max-states", "2", "bracket", "--pd", path.to_str().unwrap()]);
    assert!(stderr(&o).contains("budget") && stderr(&o).contains("cap 1"), "{}", stderr(&o));
}

#[test]
fn verify_suites() {
    let o = skein(&["verify", "--suite", "tl-identities"]);
    assert!(o.status.success());
    assert!(stdout(&o).trim_end().ends_with("PASS"));
    let o = skein(&["verify", "--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_across_thread_counts() {
    let run = |t: &str| stdout(&skein(&["--threads", t, "verify", "--suite", "rate-theorems", "--format", "json"]));
    assert_eq!(run("1"), run("3"));
}

#[test]
fn graphs() {
    let dot = stdout(&skein(&["graph", "--pretzel", "2,2,2", "--emit", "dot"]));
    assert_eq!(dot.matches(" -- ").count(), 6);
    let reduced = stdout(&skein(&["graph", "--pretzel", "2,2,2", "--reduced"]));
    assert_eq!(reduced.matches(" -- ").count(), 3);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    let empty = LinkDiagram::new("empty", vec![], vec![], 0).unwrap();
    std::fs::write(&path, empty.to_json().unwrap()).unwrap();
    let dot = stdout(&skein(&["graph", "--json", path.to_str().unwrap()]));
    assert!(dot.starts_with("graph ") && dot.trim_end().ends_with('}'), "{dot}");
}
