use std::path::PathBuf;
use std::process::{Command, Output};

use duoidal_cli::instance::RSource;
use duoidal_cli::{load, Outcome};
use duoidal_core::arith::FieldSpec;
use duoidal_core::corpus;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn run(args: &[&str], probes: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_duoidal"));
    cmd.args(args).current_dir(corpus_dir()).env_remove("DUOIDAL_PROBES");
    if let Some(p) = probes {
        cmd.env("DUOIDAL_PROBES", p);
    }
    cmd.output().unwrap()
}

fn json(args: &[&str], probes: Option<&str>) -> (i32, Outcome) {
    let mut args = args.to_vec();
    args.push("--json");
    let out = run(&args, probes);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap())
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn corpus_matches_constructors() {
    let q = FieldSpec::Rationals;
    let f3 = FieldSpec::prime(3).unwrap();
    let f5 = FieldSpec::prime(5).unwrap();
    let expect = [
        ("qc2", corpus::c2(q)),
        ("qc2_trivial", corpus::c2(q)),
        ("f3c2", corpus::c2(f3)),
        ("f5c2", corpus::c2(f5)),
        ("trivial_k", corpus::trivial_bialgebra(q)),
        ("sweedler", corpus::sweedler(q)),
        ("sweedler_r0", corpus::sweedler(q)),
        ("sweedler_r_lambda1", corpus::sweedler(q)),
        ("f3_sweedler_r0", corpus::sweedler(f3)),
    ];
    for (name, b) in expect {
        let i = load(&corpus_dir().join(format!("{name}.json"))).unwrap();
        assert_eq!(i.bialgebra(), &b, "{name}");
        assert_eq!(i.s.bullet(), &b, "{name}");
    }

    let i = load(&corpus_dir().join("c2_two_counits.json")).unwrap();
    let s = corpus::c2_dual_two_counits(q);
    assert_eq!((i.s.circ(), i.s.bullet()), (s.circ(), s.bullet()));

    for (name, field) in [("sweedler_r0", q), ("f3_sweedler_r0", f3)] {
        let i = load(&corpus_dir().join(format!("{name}.json"))).unwrap();
        let Some(RSource::Classical { r, .. }) = &i.rmatrix else { panic!("{name}: no classical R") };
        assert_eq!(r, &corpus::sweedler_r0(&corpus::sweedler(field)), "{name}");
    }
    let i = load(&corpus_dir().join("sweedler_r_lambda1.json")).unwrap();
    let Some(RSource::Classical { r, .. }) = &i.rmatrix else { panic!("no classical R") };
    assert_eq!(r, &corpus::sweedler_r_lambda(i.bialgebra(), &q.one()));
}

#[test]
fn every_corpus_file_loads() {
    for e in std::fs::read_dir(corpus_dir()).unwrap() {
        let p = e.unwrap().path();
        load(&p).unwrap_or_else(|err| panic!("{}: {err}", p.display()));
    }
}

#[test]
fn malformed_json_reports_location() {
    let p = scratch("malformed.json", "{\n  \"name\": 3\n}\n");
    let out = run(&["validate", p.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("malformed.json:2:"), "{err}");
    assert!(err.contains("`name`"), "{err}");
}

#[test]
fn shape_errors_name_the_field() {
    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(corpus_dir().join("qc2.json")).unwrap()).unwrap();
    doc["bialgebra"]["counit"] = serde_json::json!(["1"]);
    let p = scratch("short_counit.json", &serde_json::to_string_pretty(&doc).unwrap());
    let out = run(&["validate", p.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("counit"), "{}", stderr(&out));

    doc["bialgebra"]["extra"] = serde_json::json!(1);
    let p = scratch("unknown_field.json", &serde_json::to_string_pretty(&doc).unwrap());
    let out = run(&["validate", p.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("extra"), "{}", stderr(&out));
}

#[test]
fn missing_file_and_bad_probes_are_usage_errors() {
    assert_eq!(run(&["validate", "no_such_file.json"], None).status.code(), Some(2));
    let out = run(&["check", "lindist-planar", "qc2.json"], Some("bogus"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bogus"));
}

#[test]
fn validate_exit_codes() {
    for (name, code) in [("qc2", 0), ("sweedler_r_mutant", 0), ("c2_noncoassoc", 1), ("sweedler_mismatched", 1)] {
        assert_eq!(run(&["validate", &format!("{name}.json")], None).status.code(), Some(code), "{name}");
    }
}

#[test]
fn invalid_bialgebra_skips_later_suites() {
    let (code, o) = json(&["check", "all", "c2_bad_mul.json"], None);
    assert_eq!(code, 1);
    assert_eq!(o.reports.iter().map(|r| r.suite.as_str()).collect::<Vec<_>>(), ["bialgebra"]);
}

#[test]
fn probes_env_overrides_budget() {
    let count = |probes| {
        let (code, o) = json(&["check", "lindist-nonplanar", "qc2.json"], probes);
        assert_eq!(code, 0);
        o.reports.iter().flat_map(|r| &r.verdicts).find(|v| v.id == "eq:linearly-distributive-monad-1").unwrap().checked
    };
    assert_eq!(count(None), 27);
    assert_eq!(count(Some("budget=1")), 1);
    // budget bounds the dimension product, not the tuple count; the flag wins over the environment
    let out = run(&["check", "lindist-nonplanar", "qc2.json", "--probes", "budget=2", "--json"], Some("budget=1"));
    let o: Outcome = serde_json::from_slice(&out.stdout).unwrap();
    let v = o.reports.iter().flat_map(|r| &r.verdicts).find(|v| v.id == "eq:linearly-distributive-monad-1").unwrap();
    assert_eq!(v.checked, 4);
}

#[test]
fn check_all_covers_every_diagram() {
    let (code, o) = json(&["check", "all", "qc2.json"], Some("budget=8"));
    assert_eq!(code, 0);
    let ids: Vec<&str> = o.reports.iter().flat_map(|r| &r.verdicts).map(|v| v.id.as_str()).collect();
    let want = [
        "eq:r-matrix-unitality1",
        "eq:r-matrix-unitality2",
        "eq:r-matrix-lift",
        "eq:r-matrix-1",
        "eq:r-matrix-2",
        "eq:middle-interchange-assoc1",
        "eq:middle-interchange-assoc2",
        "eq:duoidal-cat-unitality",
        "eq:pi-nu-morphisms-of-algebras",
        "eq:cocommutative-duoidal-bimonad",
        "eq:cocomm-trialg-unit-automatic",
        "eq:normal-duoidal-to-linear-dist",
        "eq:normal-B0-conjugate",
        "eq:linearly-distributive-monad-1",
        "eq:linearly-distributive-monad-2",
        "eq:linearly-distributive-monad-3",
        "eq:linearly-distributive-monad-4",
    ];
    for id in want {
        assert!(ids.contains(&id), "{id} missing from check all");
    }
}

#[test]
fn embed_classical_output_reloads() {
    let (code, o) = json(&["embed-classical", "sweedler_r0.json"], None);
    assert_eq!(code, 0);
    let block = o.rmatrix.expect("embedded block");
    assert_eq!(block.legs, 4);
    assert_eq!(block.terms.len(), 4);

    // splice the four-leg block back in place of the classical one
    let src = corpus_dir().join("sweedler_r0.json");
    let mut doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&src).unwrap()).unwrap();
    doc["rmatrix"] = serde_json::to_value(&block).unwrap();
    let p = scratch("sweedler_r0_four_leg.json", &serde_json::to_string_pretty(&doc).unwrap());
    let out = run(&["check", "rmatrix", p.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn embed_classical_rejects_non_qt_and_four_leg() {
    let (code, o) = json(&["embed-classical", "sweedler_r_one.json"], None);
    assert_eq!(code, 1);
    assert!(o.rmatrix.is_none());
    assert!(o.reports.iter().any(|r| r.suite == "classical-qt" && !r.passed));
    assert_eq!(run(&["embed-classical", "sweedler_r_mutant.json"], None).status.code(), Some(2));
}

#[test]
fn human_report_ends_with_result_line() {
    let out = run(&["roundtrip", "qc2_trivial.json"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().last(), Some("result: PASS"));
}
