//! End-to-end checks of the `gbei` binary: output shape, determinism,
//! exit codes, and the certificate export/verify round trip.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn gbei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbei"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_graph(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

const C4: &str = "4\n1 2\n2 3\n3 4\n1 4\n";

#[test]
fn analyze_text_report_for_the_square() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_graph(dir.path(), "c4.graph", C4);
    let out = gbei(&["analyze", &c4, "--m", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("graph: n=4 E=1-2,1-4,2-3,3-4"));
    assert!(text.contains("ht: 3  mu: 4"));
    assert!(text.contains("pd: 4"));
    assert!(text.contains("cd: 4"));
    assert!(text.contains("ara: 4"));
    assert!(text.contains("aci: yes"));

    let again = gbei(&["analyze", &c4, "--m", "2"]);
    assert_eq!(out.stdout, again.stdout, "analyze output not deterministic");
}

#[test]
fn analyze_json_is_deterministic_and_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_graph(dir.path(), "c4.graph", C4);
    let out = gbei(&["analyze", &c4, "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["m"], 2);
    assert_eq!(v["char"], 0);
    assert_eq!(v["ht"], 3);
    assert_eq!(v["mu"], 4);
    assert_eq!(v["bounds"]["pd"]["lo"], 4);
    assert_eq!(v["bounds"]["pd"]["hi"], 4);
    assert_eq!(v["flags"]["ci"], "no");
    assert_eq!(v["flags"]["aci"], "yes");
    assert!(v["provenance"].as_array().map_or(false, |a| !a.is_empty()));

    let again = gbei(&["analyze", &c4, "--json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn analyze_picks_up_char_and_m() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write_graph(dir.path(), "k5.graph", "5\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n");
    let out = gbei(&["analyze", &k5, "--char", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("m: 2  char: 7"));
    assert!(text.contains("ht: 4"));
    assert!(text.contains("cd: 4"));
    assert!(text.contains("cci: yes"));

    let star = write_graph(dir.path(), "star3.graph", "3\n1 2\n1 3\n");
    let out = gbei(&["analyze", &star, "--m", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("cci: no"));
}

#[test]
fn cutsets_lists_the_sets_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_graph(dir.path(), "c4.graph", C4);
    let out = gbei(&["cutsets", &c4]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![
            "graph: n=4 E=1-2,1-4,2-3,3-4",
            "cut sets: 3",
            "{}",
            "{1,3}",
            "{2,4}",
        ]
    );

    let json = gbei(&["cutsets", &c4, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["graph"], "n=4 E=1-2,1-4,2-3,3-4");
    assert_eq!(v["cut_sets"], serde_json::json!([[], [1, 3], [2, 4]]));
}

#[test]
fn ideal_prints_basis_and_height() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_graph(dir.path(), "c4.graph", C4);
    let out = gbei(&["ideal", &c4]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("generators: 4"));
    assert!(text.contains("reduced groebner basis:"));
    assert!(text.contains("initial ideal:"));
    assert!(text.contains("height: 3"));
    assert!(text.contains("dimension: 5"));

    let lex = gbei(&["ideal", &c4, "--order", "lex"]);
    assert!(lex.status.success());
    assert!(stdout(&lex).contains("order: lex"));
}

#[test]
fn decompose_reports_the_identity() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_graph(dir.path(), "c4.graph", C4);
    let out = gbei(&["decompose", &c4]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("minimal primes: 3"));
    assert!(text.contains("identity holds: yes"));
}

#[test]
fn verify_runs_the_full_catalog() {
    let out = gbei(&["verify", "--all-builtin"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("result: pass").count(), 11);
    assert_eq!(text.matches("result: fail").count(), 0);
}

#[test]
fn exported_certificates_verify_from_disk() {
    let dir = tempfile::tempdir().unwrap();
    let dirpath = dir.path().to_str().unwrap();
    let out = gbei(&["catalog", "--export", dirpath]);
    assert!(out.status.success());

    let certs: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension().is_some_and(|x| x == "cert")).then_some(p)
        })
        .collect();
    assert_eq!(certs.len(), 11);

    let one = dir.path().join("join-k2-2k1.cert");
    let out = gbei(&["verify", one.to_str().unwrap()]);
    assert!(out.status.success(), "exported certificate failed to verify");
    assert!(stdout(&out).contains("result: pass"));
}

#[test]
fn tampered_certificate_fails_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let dirpath = dir.path().to_str().unwrap();
    assert!(gbei(&["catalog", "--export", dirpath]).status.success());

    let path = dir.path().join("join-k2-2k1.cert");
    let tampered = fs::read_to_string(&path).unwrap().replace("^ 2", "^ 1");
    fs::write(&path, tampered).unwrap();

    let out = gbei(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("result: fail"));
    let failing: Vec<&str> = text
        .lines()
        .filter(|l| l.trim_end().ends_with("NO"))
        .collect();
    assert!(!failing.is_empty(), "failing claim not named");
    assert!(failing.iter().all(|l| l.contains("x[1][")));
}

#[test]
fn sweep_emits_csv_with_exact_bipartite_column() {
    let out = gbei(&[
        "sweep",
        "--family",
        "complete_bipartite",
        "--from",
        "1",
        "--to",
        "6",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,param,graph,m,char,ht,mu,pd_lo,pd_hi,cd_lo,cd_hi,ara_lo,ara_hi,ci,aci,cci,stci"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 6);
    for (row, p) in rows.iter().zip(1u64..) {
        let cols: Vec<&str> = row.split(',').collect();
        // The quoted graph column contains commas; count from the end.
        let ara_hi: u64 = cols[cols.len() - 5].parse().unwrap();
        let ara_lo: u64 = cols[cols.len() - 6].parse().unwrap();
        let pd_hi: u64 = cols[cols.len() - 8].parse().unwrap();
        let pd_lo: u64 = cols[cols.len() - 9].parse().unwrap();
        assert_eq!((ara_lo, ara_hi), (2 * p, 2 * p), "row {p}");
        assert_eq!((pd_lo, pd_hi), (2 * p, 2 * p), "row {p}");
    }

    let again = gbei(&[
        "sweep",
        "--family",
        "complete_bipartite",
        "--from",
        "1",
        "--to",
        "6",
    ]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn sweep_with_decompose_check_appends_a_column() {
    let out = gbei(&[
        "sweep", "--family", "path", "--from", "2", "--to", "4", "--check",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().ends_with(",decompose"));
    assert_eq!(text.lines().count(), 4);
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",yes"), "decompose column not yes: {line}");
    }
}

#[test]
fn error_exit_codes_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let disc = write_graph(dir.path(), "disc.graph", "4\n1 2\n3 4\n");
    let bad = write_graph(dir.path(), "bad.graph", "x\nnot a graph\n");
    let c4 = write_graph(dir.path(), "c4.graph", C4);

    let out = gbei(&["analyze", &disc]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty(), "partial output on error");

    let out = gbei(&["analyze", &bad]);
    assert_eq!(out.status.code(), Some(3));

    let out = gbei(&["analyze", &c4, "--m", "1"]);
    assert_eq!(out.status.code(), Some(3));

    let out = gbei(&["analyze", &c4, "--char", "6"]);
    assert_eq!(out.status.code(), Some(3));

    let out = gbei(&["decompose", &c4, "--max-gb-terms", "10"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(out.stdout.is_empty(), "partial output on resource cap");
    assert!(String::from_utf8(out.stderr).unwrap().contains("not attempted"));

    let out = gbei(&["sweep", "--family", "nonesuch", "--from", "1", "--to", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty(), "partial table on unknown family");

    let out = gbei(&["verify", "--builtin", "nonesuch"]);
    assert_eq!(out.status.code(), Some(3));

    let out = gbei(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
