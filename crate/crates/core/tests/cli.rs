use std::process::{Command, Output};

use torkit::cli::OutputRecord;
use torkit::families;
use torkit::LaurentPoly;

fn torkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torkit")).args(args).output().expect("spawn torkit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn compute_known_values() {
    let cases = [
        ("alexander", "3", "t - 1 + t^(-1)"),
        ("alexander", "1", "1"),
        ("generalized-alexander", "3", "-q*p + q + p"),
        ("jones", "3", "-t^4 + t^3 + t"),
        ("homfly", "3", "-a^4 + a^2*z^2 + 2*a^2"),
    ];
    for (family, n, expected) in cases {
        let o = torkit(&["compute", "--family", family, "--n", n]);
        assert_eq!(o.status.code(), Some(0), "{family} {n}");
        assert_eq!(stdout(&o).trim_end(), expected, "{family} {n}");
    }
}

#[test]
fn compute_output_parses_back() {
    for f in families::registry() {
        for n in [1u32, 3, 7, 11] {
            let o = torkit(&["compute", "--family", &f.name, "--n", &n.to_string()]);
            let text = stdout(&o);
            let parsed = LaurentPoly::parse(text.trim_end(), &f.context).unwrap();
            assert_eq!(parsed, f.invariant(n).unwrap(), "{} {n}", f.name);
        }
    }
}

#[test]
fn json_records_round_trip() {
    let o = torkit(&["compute", "--family", "generalized-alexander", "--n", "5", "--format", "json"]);
    let rec: OutputRecord = serde_json::from_str(stdout(&o).trim_end()).unwrap();
    assert_eq!(rec.family, "generalized-alexander");
    assert_eq!(rec.n, 5);
    let poly = LaurentPoly::from_json(&rec.polynomial).unwrap();
    assert_eq!(poly, families::generalized_alexander_torus(5).unwrap());
}

#[test]
fn table_text_and_ndjson() {
    let o = torkit(&["table", "--family", "alexander", "--n-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\t1\n3\tt - 1 + t^(-1)\n5\tt^2 - t + 1 - t^(-1) + t^(-2)\n");

    let o = torkit(&["table", "--family", "jones", "--n-max", "7", "--format", "json"]);
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 4);
    for (line, n) in lines.iter().zip([1u32, 3, 5, 7]) {
        let rec: OutputRecord = serde_json::from_str(line).unwrap();
        assert_eq!(rec.n, n);
        let poly = LaurentPoly::from_json(&rec.polynomial).unwrap();
        assert_eq!(poly, families::jones_torus(n).unwrap());
    }
}

#[test]
fn convert_examples() {
    let cases = [
        ("homfly", "generalized-alexander", "3", "-q*p + q + p"),
        ("generalized-alexander", "alexander", "1", "1"),
        ("generalized-alexander", "alexander", "3", "t - 1 + t^(-1)"),
        ("generalized-alexander", "jones", "3", "-t^4 + t^3 + t"),
    ];
    for (from, to, n, expected) in cases {
        let o = torkit(&["convert", "--from", from, "--to", to, "--n", n]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim_end(), expected);
    }
}

#[test]
fn qnum_examples() {
    let o = torkit(&["qnum", "--n", "4", "--kind", "q"]);
    assert_eq!(stdout(&o), "q^3 + q + q^(-1) + q^(-3)\n");
    let o = torkit(&["qnum", "--n", "3", "--kind", "qp", "--format", "json"]);
    let rec: OutputRecord = serde_json::from_str(stdout(&o).trim_end()).unwrap();
    assert_eq!(LaurentPoly::from_json(&rec.polynomial).unwrap().to_string(), "q^2 + q*p + p^2");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--family", "nope", "--n", "3"][..],
        &["compute", "--family", "jones", "--n", "4"],
        &["compute", "--family", "jones", "--n", "-1"],
        &["convert", "--from", "alexander", "--to", "jones", "--n", "3"],
        &["verify", "--n-max", "8"],
        &["compute", "--family", "jones"],
        &["verify", "--n-max", "5", "--family-file", "/nonexistent.json"],
    ] {
        let o = torkit(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
    let o = torkit(&["compute", "--family", "jones", "--n", "6"]);
    assert!(String::from_utf8(o.stderr).unwrap().contains("base value"));
}

#[test]
fn verify_passes_for_builtin_families() {
    let o = torkit(&["verify", "--n-max", "11"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.lines().filter(|l| !l.starts_with("all ")).all(|l| l.starts_with("PASS ")));
}

#[test]
fn verify_reports_corrupted_family() {
    let path = fixture("corrupt_k2.json");
    let o = torkit(&["verify", "--n-max", "9", "--family-file", &path]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(1), "{out}");
    assert!(out.contains("FAIL "));
    let line = out.lines().find(|l| l.starts_with("first counterexample:")).expect(&out);
    assert!(line.ends_with("at n=3"), "{line}");
    assert!(out.contains("  lhs: ") && out.contains("  rhs: "));
}
