//! End-to-end runs of the binary: outputs, exit codes, determinism and JSON
//! round-trips.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grpdcard"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn card_of_delooping() {
    assert_eq!(stdout_of(&["card", &fixture("bc3.json")]), "1/3");
    assert_eq!(stdout_of(&["card", &fixture("discrete2.json")]), "2");
    assert_eq!(stdout_of(&["card", &fixture("mixed.json")]), "5/6");
    assert_eq!(stdout_of(&["card", &fixture("bc4_explicit.json")]), "1/4");
}

#[test]
fn gset_egf_matches_expected_rendering() {
    assert_eq!(
        stdout_of(&["gset-egf", &fixture("c2.json"), "--N", "4"]),
        "1 + x + x^2 + 2/3 x^3 + 5/12 x^4"
    );
    assert_eq!(
        stdout_of(&["gset-egf", &fixture("c3.json"), "--N", "3"]),
        "1 + x + 1/2 x^2 + 1/2 x^3"
    );
}

#[test]
fn gset_card_exponent() {
    assert_eq!(stdout_of(&["gset-card", &fixture("bc3.json")]), "exp(4/3)");
    let with_float = stdout_of(&["--float", "gset-card", &fixture("bc3.json")]);
    assert!(with_float.starts_with("exp(4/3) = 3.79366789468817"), "{with_float}");
}

#[test]
fn gl_order_values() {
    assert_eq!(stdout_of(&["gl-order", "1", "2"]), "1");
    assert_eq!(stdout_of(&["gl-order", "2", "2"]), "6");
    assert_eq!(stdout_of(&["gl-order", "3", "2"]), "168");
    assert_eq!(stdout_of(&["--json", "gl-order", "3", "2"]), r#"{"order":"168"}"#);
}

#[test]
fn rep_series_rendering_and_bound() {
    assert_eq!(
        stdout_of(&["rep-series", "--dim", "1", "--q", "2", "--N", "3"]),
        "1 + x + 1/6 x^2 + 1/168 x^3"
    );
    let bound = stdout_of(&["rep-series", "--dim", "1", "--q", "2", "--N", "4", "--check-bound"]);
    assert!(bound.ends_with("true"), "{bound}");
    assert_eq!(exit_code(&["rep-series", "--dim", "1", "--q", "6", "--N", "3"]), 2);
}

#[test]
fn functor_card_agreement() {
    assert_eq!(
        stdout_of(&["functor-card", &fixture("bc2_skel.json"), &fixture("discrete2.json")]),
        "2"
    );
    assert_eq!(
        stdout_of(&["functor-card", &fixture("bc2_skel.json"), &fixture("bc2_skel.json")]),
        "1"
    );
}

#[test]
fn factorize_reports_stages() {
    let text = stdout_of(&[
        "factorize",
        &fixture("bc4_explicit.json"),
        &fixture("bc2_explicit.json"),
        &fixture("functor_proj.json"),
    ]);
    assert!(text.contains("im2: objects=1 morphisms=2 cardinality=1/2"), "{text}");
    assert!(text.contains("stage2: full=true"), "{text}");
    assert!(text.contains("stage0: full=true faithful=true"), "{text}");
}

#[test]
fn relfin_commands() {
    let id = fixture("relfin_id.json");
    let trivial = fixture("relfin_trivial.json");
    assert_eq!(stdout_of(&["relfin-hom", &id, &id]), "1");
    assert_eq!(stdout_of(&["relfin-hom", &trivial, &id]), "0");
    assert_eq!(stdout_of(&["--faithful-is-not-a-flag"]).is_empty(), false);
}

#[test]
fn relfin_equiv_and_distinguish() {
    let id = fixture("relfin_id.json");
    let trivial = fixture("relfin_trivial.json");
    assert_eq!(stdout_of(&["relfin-equiv", &id, &id]), "equivalent: true");
    assert_eq!(stdout_of(&["relfin-equiv", &id, &trivial]), "equivalent: false");
    let report = stdout_of(&["relfin-distinguish", &id, &trivial]);
    assert!(report.starts_with("distinguished:"), "{report}");
    let exhaustive = stdout_of(&["relfin-distinguish", &id, &trivial, "--exhaustive"]);
    assert!(exhaustive.starts_with("distinguished:"), "{exhaustive}");
    assert_eq!(
        stdout_of(&["relfin-distinguish", &id, &id]),
        "no distinguishing probe found"
    );
    assert_eq!(stdout_of(&["--faithful", "relfin-hom", &id, &id]), "1");
}

#[test]
fn homcount_and_lovasz() {
    let cycle = fixture("cycle3.json");
    let path = fixture("path3.json");
    let edge = fixture("edge.json");
    assert_eq!(stdout_of(&["homcount", &edge, &cycle]), "3");
    assert_eq!(stdout_of(&["homcount", &edge, &path]), "2");
    assert_eq!(stdout_of(&["--injective", "homcount", &edge, &cycle]), "3");
    let verdict = stdout_of(&["lovasz-test", &cycle, &path, "--bound", "3"]);
    assert!(verdict.starts_with("distinguished by C = "), "{verdict}");
    let same = stdout_of(&["lovasz-test", &cycle, &fixture("cycle3_relabeled.json"), "--bound", "3"]);
    assert_eq!(same, "indistinguishable; isomorphic: true");
    // bound below the structure sizes is a validation error
    assert_eq!(exit_code(&["lovasz-test", &cycle, &path, "--bound", "2"]), 2);
}

#[test]
fn homotopy_card_values() {
    assert_eq!(stdout_of(&["homotopy-card", &fixture("space.json")]), "5/6");
}

#[test]
fn permutation_group_input() {
    // S3 given by generators: exponent terms 1/1 + 1/2 + 1/3 + 1/6 at x¹…
    let series = stdout_of(&["gset-egf", &fixture("s3_perms.json"), "--N", "2"]);
    assert_eq!(series, "1 + x + x^2");
}

#[test]
fn exit_codes() {
    assert_eq!(exit_code(&["card", "/nonexistent/file.json"]), 66);
    assert_eq!(exit_code(&["no-such-subcommand"]), 64);
    assert_eq!(exit_code(&["card"]), 64); // missing argument is a usage error
    assert_eq!(exit_code(&["gset-egf", &fixture("bad_group.json")]), 2);
    let out = run(&["gset-egf", &fixture("bad_group.json")]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("not associative"), "{stderr}");
    assert_eq!(exit_code(&["--help"]), 0);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["--json", "gset-egf", &fixture("c2.json"), "--N", "6"],
        vec!["--json", "relfin-distinguish", &fixture("relfin_id.json"), &fixture("relfin_trivial.json")],
        vec![
            "--json",
            "factorize",
            &fixture("bc4_explicit.json"),
            &fixture("bc2_explicit.json"),
            &fixture("functor_proj.json"),
        ],
        vec!["--json", "lovasz-test", &fixture("cycle3.json"), &fixture("path3.json"), "--bound", "3"],
    ] {
        let a = stdout_of(&args);
        let b = stdout_of(&args);
        assert_eq!(a, b, "non-deterministic output for {args:?}");
    }
}

#[test]
fn json_outputs_reparse_to_equal_values() {
    let series = stdout_of(&["--json", "gset-egf", &fixture("c2.json"), "--N", "4"]);
    let parsed: serde_json::Value = serde_json::from_str(&series).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), series);
    assert_eq!(parsed["coeffs"][4], "5/12");

    let verdict = stdout_of(&[
        "--json",
        "lovasz-test",
        &fixture("cycle3.json"),
        &fixture("path3.json"),
        "--bound",
        "3",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&verdict).unwrap();
    assert_eq!(parsed["distinguished"], true);
    assert_eq!(serde_json::to_string(&parsed).unwrap(), verdict);

    let fact = stdout_of(&[
        "--json",
        "factorize",
        &fixture("bc4_explicit.json"),
        &fixture("bc2_explicit.json"),
        &fixture("functor_proj.json"),
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&fact).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), fact);

    let card = stdout_of(&["--json", "--float", "card", &fixture("bc3.json")]);
    let parsed: serde_json::Value = serde_json::from_str(&card).unwrap();
    assert_eq!(parsed["cardinality"], "1/3");
}
