use std::process::{Command, Output};

use qkaplansky_cli::{BijectionRecord, OutputRecord, ReportRecord};

fn qkap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qkap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn kaplansky_json_record() {
    let o = qkap(&["coeffs", "kaplansky", "6", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let rec: OutputRecord = serde_json::from_str(&stdout(&o)).unwrap();
    let want: Vec<String> = [1, 1, 2, 2, 3, 2, 3, 2, 2, 1, 1]
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(rec.coeffs, want);
    assert_eq!(rec.degree, 10);
    assert!(rec.symmetric && !rec.unimodal);
    assert_eq!(rec.params.keys().collect::<Vec<_>>(), ["n", "m"]);
}

#[test]
fn json_records_round_trip_byte_for_byte() {
    for args in [
        &["coeffs", "kaplansky", "6", "2", "--json"][..],
        &["coeffs", "gaussian", "30", "15", "--json"],
        &["coeffs", "catalan", "25", "--json"],
        &["coeffs", "reiner-stanton", "4", "3", "--json"],
        &["coeffs", "gaussian", "3", "5", "--json"],
    ] {
        let text = stdout(&qkap(args));
        let rec: OutputRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(
            serde_json::to_string(&rec).unwrap() + "\n",
            text,
            "{args:?}"
        );
    }
    let text = stdout(&qkap(&["check", "lemma-dq", "--max-n", "5", "--json"]));
    let rec: ReportRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&rec).unwrap() + "\n", text);
}

#[test]
fn big_coefficients_are_exact_decimal_strings() {
    let rec: OutputRecord = serde_json::from_str(&stdout(&qkap(&[
        "coeffs", "gaussian", "80", "40", "--json",
    ])))
    .unwrap();
    let middle = &rec.coeffs[800];
    assert!(middle.len() > 16, "{middle}");
    assert!(middle.chars().all(|c| c.is_ascii_digit()));
}

#[test]
fn zero_polynomial_is_a_record_not_an_error() {
    let o = qkap(&["coeffs", "gaussian", "3", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let rec: OutputRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(rec.coeffs.is_empty());
    assert_eq!(rec.degree, -1);
}

#[test]
fn csv_has_one_row_per_exponent() {
    let text = stdout(&qkap(&["coeffs", "gaussian", "4", "2", "--csv"]));
    assert_eq!(text, "exponent,coefficient\n0,1\n1,1\n2,2\n3,1\n4,1\n");
}

#[test]
fn human_output_names_the_valley() {
    let text = stdout(&qkap(&["coeffs", "kaplansky", "6", "2"]));
    assert!(text.contains("not unimodal (valley at q^5)"), "{text}");
}

#[test]
fn check_exits_zero_when_verified() {
    let o = qkap(&["check", "thm-logconcave", "--max-n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("thm-logconcave") && text.contains("verified"),
        "{text}"
    );
}

#[test]
fn check_all_quick_exits_zero() {
    let o = qkap(&["check", "all", "--profile", "quick", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let recs: Vec<ReportRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(recs.len(), 29);
}

#[test]
fn scan_with_a_violation_exits_one() {
    let o = qkap(&["scan", "conj18", "--from", "10", "--to", "16", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let rec: ReportRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rec.outcome.to_string(), "scan-report");
    assert!(!rec.counterexamples.is_empty());
}

#[test]
fn clean_scan_exits_zero() {
    let o = qkap(&["scan", "conj19", "--from", "1", "--to", "30"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn bijection_reports_both_statistics() {
    let o = qkap(&["bijection", "foata", "10010110", "--json"]);
    let rec: BijectionRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((rec.input_inv, rec.input_maj), (8, 12));
    assert_eq!(rec.output_inv, 12);
    let o = qkap(&["bijection", "tau-inv", "01001"]);
    assert!(stdout(&o).contains("01001 -> 010"));
}

#[test]
fn usage_and_bounds_errors_exit_two() {
    for args in [
        &["check", "no-such-check"][..],
        &["check", "macmahon-inv", "--max-n", "40"],
        &["coeffs", "kaplansky", "0", "0"],
        &["coeffs", "catalan"],
        &["coeffs", "gaussian", "4"],
        &["bijection", "tau-inv", "0110"],
        &["bijection", "foata", "012"],
        &["frobnicate"],
    ] {
        let o = qkap(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn force_lifts_the_guard() {
    let o = qkap(&[
        "check",
        "kaplansky-symmetry-degree",
        "--max-n",
        "61",
        "--force",
    ]);
    assert_eq!(o.status.code(), Some(0));
}
