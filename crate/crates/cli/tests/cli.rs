//! End-to-end command tests: golden stdout comparisons, exit codes, and the
//! CSV round trip, all through the library `run` entry point.

use std::path::{Path, PathBuf};

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(Path::new(&path)).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let full: Vec<String> = std::iter::once("vnum".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let code = vnum_cli::run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is utf8"),
        String::from_utf8(err).expect("stderr is utf8"),
    )
}

#[test]
fn golden_v() {
    let (code, out, err) = run(&["v", "-i", &fixture("worked.txt")]);
    assert_eq!(code, 0, "stderr: {err}");
    assert_eq!(out, golden("v_worked.txt"));
}

#[test]
fn golden_verify() {
    let (code, out, _) = run(&["verify", "-i", &fixture("worked.txt"), "--max-power", "8"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("verify_worked.txt"));
}

#[test]
fn golden_vfun() {
    let (code, out, _) = run(&["vfun", "-i", &fixture("worked.txt"), "--max-power", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("vfun_worked.txt"));
}

#[test]
fn golden_twovar() {
    let (code, out, _) = run(&["twovar", "-i", &fixture("worked.txt"), "--max-power", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("twovar_worked.txt"));
}

#[test]
fn golden_family() {
    let (code, out, _) = run(&[
        "family",
        "--slope",
        "3",
        "--intercept",
        "1",
        "--max-power",
        "6",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("family_3_1.txt"));
}

#[test]
fn golden_machine_ass() {
    let (code, out, _) = run(&["ass", "-i", &fixture("worked.txt"), "--format", "machine"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("ass_worked_machine.txt"));
}

#[test]
fn golden_verify_three_variables() {
    let (code, out, _) = run(&[
        "verify",
        "-i",
        &fixture("threevar.txt"),
        "--max-power",
        "10",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("verify_threevar.txt"));
}

#[test]
fn json_and_text_ideal_files_agree() {
    let (code_a, out_a, _) = run(&["v", "-i", &fixture("worked.txt")]);
    let (code_b, out_b, _) = run(&["v", "-i", &fixture("worked.json")]);
    assert_eq!((code_a, code_b), (0, 0));
    assert_eq!(out_a.lines().last().unwrap(), out_b.lines().last().unwrap());
}

#[test]
fn output_is_reproducible() {
    let path = fixture("worked.txt");
    let args = ["verify", "-i", path.as_str(), "--max-power", "8"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first, second);
}

#[test]
fn short_window_is_inconclusive_not_failed() {
    // the fit confirms a pre-asymptotic branch at this window; the report
    // must say inconclusive (exit 3), never failed
    let (code, out, _) = run(&[
        "verify",
        "-i",
        &fixture("late_crossing.txt"),
        "--max-power",
        "5",
    ]);
    assert_eq!(code, 3);
    assert!(out.contains("slope_equals_alpha: INCONCLUSIVE at k=5"));
    assert!(out.contains("result: INCONCLUSIVE"));

    // a window past the crossing settles the true asymptote
    let (code, out, _) = run(&[
        "verify",
        "-i",
        &fixture("late_crossing.txt"),
        "--max-power",
        "16",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("fit v: slope 12 intercept 10 from k=11"));
}

#[test]
fn input_errors_exit_2() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let bad = dir.join("bad_ideal.txt");
    std::fs::write(&bad, "vars: x, y\ngens: z^2\n").unwrap();

    let (code, out, err) = run(&["v", "-i", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("line 2"));
    assert!(err.contains("unknown variable `z`"));

    let (code, _, err) = run(&["v", "-i", dir.join("nope.txt").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot access"));

    let (code, _, err) = run(&["vp", "-i", &fixture("worked.txt"), "--prime", "q"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown variable `q`"));

    let (code, _, err) = run(&["twovar", "-i", &fixture("threevar.txt")]);
    assert_eq!(code, 2);
    assert!(err.contains("exactly two"));
}

#[test]
fn nonminimal_input_warns_on_stderr() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("nonminimal.txt");
    std::fs::write(&path, "vars: x, y\ngens: x^2, x^3\n").unwrap();
    let (code, out, err) = run(&["v", "-i", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(err.contains("not minimal"));
    assert!(out.ends_with("1\n"));
}

#[test]
fn csv_round_trips_through_the_cli() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let csv_path = dir.join("vfun_roundtrip.csv");
    let (code, _, _) = run(&[
        "vfun",
        "-i",
        &fixture("worked.txt"),
        "--max-power",
        "6",
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);

    let text = std::fs::read_to_string(&csv_path).unwrap();
    let (table, ctx) = vnum_cli::csv::read_csv(&text).unwrap();

    // independently recompute the table and compare
    let parsed =
        vnum_cli::parse::parse_ideal(&std::fs::read_to_string(fixture("worked.txt")).unwrap())
            .unwrap();
    let expected = vnum_core::asymptotics::v_function(&parsed.ideal, 6).unwrap();
    assert_eq!(table, expected);
    assert_eq!(&ctx, parsed.ideal.ctx());
    assert_eq!(vnum_cli::csv::write_csv(&table, &ctx), text);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("vnum"));
}
