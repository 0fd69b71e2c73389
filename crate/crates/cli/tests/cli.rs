use std::fs;

use serde::de::DeserializeOwned;
use serde::Serialize;

use spectral_moore::report::{
    BoundReport, CertifyReport, CompareReport, CompareRow, FeasibleReport, GfFactorReport, GraphOut, NonexistReport,
    QuotientReport, SweepRow, Table1Row,
};
use spectral_moore::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("spectral-moore").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json<T: DeserializeOwned>(args: &[&str]) -> T {
    let mut v = args.to_vec();
    v.push("--json");
    let (code, out, err) = call(&v);
    assert!(code == 0 || code == 2, "{}", err);
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{}: {}", e, out))
}

/// parse(print(x)) = x, and printing again gives the same bytes.
fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(args: &[&str]) {
    let a: T = json(args);
    let text = serde_json::to_string_pretty(&a).unwrap();
    let b: T = serde_json::from_str(&text).unwrap();
    assert_eq!(a, b);
    assert_eq!(text, serde_json::to_string_pretty(&b).unwrap());
}

#[test]
fn bound_prints_exact_values() {
    let (code, out, _) = call(&["bound", "--k", "3", "--theta", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("t=4 c=2 M=8 [exact]"), "{}", out);
    let (code, out, _) = call(&["vbound", "--k", "3", "--theta", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("N=10 [exact]"), "{}", out);
}

#[test]
fn approx_flag_is_reported() {
    let r: BoundReport = json(&["bound", "--k", "3", "--theta", "sqrt(2)", "--approx"]);
    assert!(!r.value.exact);
    assert!((r.value.approx - 14.0).abs() < 1e-6);
    let r: BoundReport = json(&["bound", "--k", "3", "--exact-theta-sq", "2"]);
    assert!(r.value.exact);
    assert_eq!(r.value.text, "14");
}

#[test]
fn reports_round_trip_through_json() {
    round_trip::<BoundReport>(&["bound", "--k", "4", "--theta", "sqrt(3)"]);
    round_trip::<BoundReport>(&["vbound", "--k", "5", "--theta", "3/2"]);
    round_trip::<CompareReport>(&["compare", "--k", "3", "--theta", "sqrt(2)"]);
    round_trip::<Vec<CompareRow>>(&["compare", "--k", "4", "--samples", "7"]);
    round_trip::<QuotientReport>(&["quotient", "--k", "3", "--t", "5", "--c", "3/2"]);
    round_trip::<QuotientReport>(&["quotient", "--kind", "t", "--k", "4", "--t", "4", "--c", "2"]);
    round_trip::<CertifyReport>(&["certify", "--k", "3", "--t", "5", "--c", "1", "--theta", "2"]);
    round_trip::<CertifyReport>(&["certify", "--k", "3", "--t", "5", "--c", "1", "--theta", "2", "--approx"]);
    round_trip::<FeasibleReport>(&["feasible", "--k", "3", "--d", "6", "--c", "1"]);
    round_trip::<FeasibleReport>(&["feasible", "--k", "5", "--d", "11", "--c", "2"]);
    round_trip::<NonexistReport>(&["nonexist", "--d", "18"]);
    round_trip::<NonexistReport>(&["nonexist", "--d", "11"]);
    round_trip::<NonexistReport>(&["nonexist", "--d", "15"]);
    round_trip::<GfFactorReport>(&["gf-factor", "--p", "7", "--poly", "x^6 - 1"]);
    round_trip::<Vec<GraphOut>>(&["verify-known", "--all"]);
    round_trip::<Vec<SweepRow>>(&["sweep-nonexistence", "--d-min", "15", "--d-max", "20"]);
    round_trip::<Vec<Table1Row>>(&["table1"]);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["nonexist", "--d", "17"][..],
        &["sweep-nonexistence", "--d-max", "26", "--threads", "3"],
        &["gf-factor", "--p", "43", "--poly", "x^12 + 5x^7 - 3x + 11"],
        &["verify-known", "--all", "--format", "csv"],
        &["compare", "--k", "6", "--samples", "20"],
    ] {
        assert_eq!(call(args), call(args));
    }
    let a = call(&["sweep-nonexistence", "--d-max", "30", "--threads", "1"]);
    let b = call(&["sweep-nonexistence", "--d-max", "30", "--threads", "4"]);
    assert_eq!(a, b);
}

#[test]
fn nonexist_shows_prime_and_witnesses() {
    let (code, out, _) = call(&["nonexist", "--d", "18"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("d=18 ELIMINATED"), "{}", out);
    assert!(out.contains("prime 5"));
    assert!(out.contains("24 pairs"));
    let r: NonexistReport = json(&["nonexist", "--d", "18"]);
    assert_eq!(r.primes(), vec![5]);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["frobnicate"]).0, 1);
    assert_eq!(call(&["bound", "--k", "3"]).0, 1);
    assert_eq!(call(&["bound", "--k", "3", "--theta", "x"]).0, 1);
    assert_eq!(call(&["bound", "--k", "3", "--theta", "1", "--tol", "0"]).0, 1);
    assert_eq!(call(&["bound", "--k", "3", "--theta", "1", "--format", "csv"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
    assert_eq!(call(&["--version"]).0, 0);

    let (code, _, err) = call(&["certify", "--k", "3", "--t", "4", "--c", "2", "--theta", "sqrt(2)"]);
    assert_eq!(code, 2);
    assert!(err.contains("check failed"));
    let (code, _, _) = call(&["certify", "--k", "3", "--t", "4", "--c", "1", "--theta", "sqrt(2)", "--spectrum", "2"]);
    assert_eq!(code, 2);

    assert_eq!(call(&["feasible", "--k", "3", "--d", "5", "--c", "1"]).0, 2);
    assert_eq!(call(&["feasible", "--k", "3", "--d", "6", "--c", "1"]).0, 0);
}

#[test]
fn verify_known_checks_named_and_listed_graphs() {
    let (code, out, _) = call(&["verify-known", "--all"]);
    assert_eq!(code, 0);
    assert!(out.contains("12 of 12 graphs meet the bound"), "{}", out);

    let r: Vec<GraphOut> = json(&["verify-known", "--name", "design:13:0,1,3,9"]);
    assert_eq!(r[0].n, 26);
    assert_eq!(r[0].matches_bound, Some(true));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c10.txt");
    let edges: String = (0..10).map(|i| format!("{} {}\n", i, (i + 1) % 10)).collect();
    fs::write(&path, format!("# ten-cycle\n{}", edges)).unwrap();
    let (code, out, err) = call(&["verify-known", "--edges", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{}", err);
    assert!(out.contains("1 of 1"));

    // K_{3,3} plus a pendant path is not regular
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n5 6\n").unwrap();
    assert_eq!(call(&["verify-known", "--edges", bad.to_str().unwrap()]).0, 1);
}

#[test]
fn table7_override_is_used() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t7.json");
    fs::write(&path, r#"{"rows":[{"case2":"A","case3":["a"],"d":[3]}]}"#).unwrap();
    let p = path.to_str().unwrap();
    let r: NonexistReport = json(&["nonexist", "--d", "18", "--table7", p]);
    assert_eq!(r.verdict, "ELIMINATED");
    assert_eq!(r.mechanism, "no residue case modulo 2 and 3 admits d");
    fs::write(&path, "not json").unwrap();
    assert_eq!(call(&["nonexist", "--d", "18", "--table7", p]).0, 1);
}

#[test]
fn csv_sweeps_have_one_row_per_point() {
    let (code, out, _) = call(&["compare", "--k", "5", "--samples", "50"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 51);
    let (_, out, _) = call(&["sweep-nonexistence", "--d-min", "15", "--d-max", "32"]);
    assert_eq!(out.lines().count(), 19);
    assert!(out.lines().skip(1).all(|l| l.contains("ELIMINATED")));
}

#[test]
fn gf_factor_uses_the_seed_only_for_speed() {
    let a: GfFactorReport = json(&["gf-factor", "--p", "5", "--poly", "x^8 - 1"]);
    let b: GfFactorReport = json(&["gf-factor", "--p", "5", "--poly", "x^8 - 1", "--seed", "99"]);
    assert_eq!(a, b);
    assert_eq!(a.factors.len(), 6);
    assert_eq!(call(&["gf-factor", "--p", "6", "--poly", "x"]).0, 1);
}
