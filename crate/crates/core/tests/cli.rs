use std::path::PathBuf;
use std::process::Command;

use reslat::cli::{run_with, ExitStatus};
use reslat::{fixtures, parse_algebra, AlgebraValue, Guard};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (ExitStatus, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("reslat").chain(args.iter().copied());
    let status = run_with(argv, Guard::default(), &mut out, &mut err);
    (
        status,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn fixture_files_match_builtin_tables() {
    let cases: Vec<(&str, AlgebraValue)> = vec![
        ("b2-semiring.alg", fixtures::b2_semiring().into()),
        ("b2-reslat.alg", fixtures::b2_reslat().into()),
        ("b2-mv.alg", fixtures::b2_mv().into()),
        ("g3-semiring.alg", fixtures::g3_semiring().into()),
        ("g3-reslat.alg", fixtures::g3_reslat().into()),
        ("l3-semiring.alg", fixtures::l3_semiring().into()),
        ("l3-reslat.alg", fixtures::l3_reslat().into()),
        ("l3-mv.alg", fixtures::l3_mv().into()),
        ("b4-semiring.alg", fixtures::b4_semiring().into()),
        ("b4-reslat.alg", fixtures::b4_reslat().into()),
        ("n3-semiring.alg", fixtures::n3_semiring().into()),
    ];
    for (file, expected) in cases {
        let parsed = parse_algebra(&std::fs::read_to_string(fixture(file)).unwrap()).unwrap();
        assert!(parsed.same_tables(&expected), "{file}");
        assert_eq!(parsed.name(), expected.name(), "{file}");
    }
}

#[test]
fn l3_passes_dnl() {
    let (status, out, _) = run(&["check", &fixture("l3-semiring.alg"), "--law", "dnl"]);
    assert_eq!(status, ExitStatus::SUCCESS);
    for law in ["dnl_i", "dnl_ii", "dnl_iii"] {
        assert!(out.lines().any(|l| l == format!("LAW {law} PASS")), "{out}");
    }
}

#[test]
fn g3_fails_dnl_at_a() {
    let (status, out, _) = run(&["check", &fixture("g3-semiring.alg"), "--law", "dnl"]);
    assert_eq!(status, ExitStatus::LAW_FAILURE);
    assert!(
        out.lines().any(|l| l == "LAW dnl_i FAIL witness=(1)"),
        "{out}"
    );
}

#[test]
fn count_of_three_element_simple_semirings() {
    let (status, out, _) = run(&[
        "enumerate",
        "--kind",
        "semiring_cis",
        "--size",
        "3",
        "--count-only",
    ]);
    assert_eq!(status, ExitStatus::SUCCESS);
    assert_eq!(out, "COUNT 3 2\n");
}

#[test]
fn check_header_names_the_algebra() {
    let (_, out, _) = run(&["check", &fixture("b2-mv.alg")]);
    assert_eq!(out.lines().next(), Some("ALGEBRA b2 kind=mv size=2"));
}

#[test]
fn convert_then_check_exits_zero() {
    let dir = std::env::temp_dir().join(format!("reslat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("b2-reslat.alg", "semiring"),
        ("g3-reslat.alg", "semiring"),
        ("l3-mv.alg", "semiring"),
        ("l3-mv.alg", "reslat"),
        ("b4-semiring.alg", "reslat"),
        ("g3-semiring.alg", "reslat"),
        ("l3-semiring.alg", "dnl-reslat"),
        ("b4-semiring.alg", "dnl-reslat"),
    ];
    for (i, (file, target)) in cases.into_iter().enumerate() {
        let (status, out, err) = run(&["convert", &fixture(file), "--to", target]);
        assert_eq!(status, ExitStatus::SUCCESS, "{file} {target}: {err}");
        let path = dir.join(format!("{i}.alg"));
        std::fs::write(&path, &out).unwrap();
        let (status, report, _) = run(&["check", path.to_str().unwrap()]);
        assert_eq!(status, ExitStatus::SUCCESS, "{file} {target}:\n{report}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn convert_rejects_outside_domain() {
    let (status, _, err) = run(&["convert", &fixture("n3-semiring.alg"), "--to", "reslat"]);
    assert_eq!(status, ExitStatus::LAW_FAILURE);
    assert!(err.contains("simple"), "{err}");
    let (status, _, _) = run(&["convert", &fixture("g3-semiring.alg"), "--to", "dnl-reslat"]);
    assert_eq!(status, ExitStatus::LAW_FAILURE);
    let (status, _, _) = run(&["convert", &fixture("b2-semiring.alg"), "--to", "semiring"]);
    assert_eq!(status, ExitStatus::USAGE);
}

#[test]
fn roundtrip_reports() {
    let (status, out, _) = run(&["roundtrip", &fixture("l3-reslat.alg")]);
    assert_eq!(status, ExitStatus::SUCCESS);
    assert!(out.ends_with("ROUNDTRIP PASS\n"));
    let (status, out, _) = run(&["roundtrip", &fixture("g3-semiring.alg")]);
    assert_eq!(status, ExitStatus::LAW_FAILURE);
    assert!(out.ends_with("ROUNDTRIP FAIL\n"));
}

#[test]
fn enumerate_stream_reparses() {
    let (status, out, _) = run(&["enumerate", "--kind", "reslat", "--size", "4"]);
    assert_eq!(status, ExitStatus::SUCCESS);
    let algs = reslat::parse_algebras(&out).unwrap();
    assert_eq!(algs.len(), 7);
    let (_, filtered, _) = run(&[
        "enumerate",
        "--kind",
        "reslat",
        "--size",
        "4",
        "--filter",
        "idempotent",
        "--count-only",
    ]);
    assert_eq!(filtered, "COUNT 4 2\n");
}

#[test]
fn sweep_lines() {
    let (status, out, _) = run(&["sweep", "--theorem", "C1", "--max-size", "3"]);
    assert_eq!(status, ExitStatus::SUCCESS);
    assert_eq!(
        out,
        "SWEEP C1 size=1 instances=1 failures=0\n\
         SWEEP C1 size=2 instances=1 failures=0\n\
         SWEEP C1 size=3 instances=2 failures=0\n"
    );
}

#[test]
fn counterexample_search() {
    let (status, out, _) = run(&[
        "counterexample",
        "--law",
        "dnl_axiom_i",
        "--kind",
        "semiring_cis",
        "--max-size",
        "3",
    ]);
    assert_eq!(status, ExitStatus::LAW_FAILURE);
    assert!(
        out.starts_with("LAW dnl_i FAIL witness=(1)\nalgebra semiring_cis-3-1\n"),
        "{out}"
    );
    let (status, out, _) = run(&[
        "counterexample",
        "--law",
        "adjointness_of_constructed_reslat",
        "--kind",
        "semiring_cis",
        "--max-size",
        "4",
    ]);
    assert_eq!(status, ExitStatus::SUCCESS);
    assert!(out.starts_with("NONE"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).0, ExitStatus::USAGE);
    assert_eq!(run(&["check"]).0, ExitStatus::USAGE);
    assert_eq!(run(&["check", "/no/such/file.alg"]).0, ExitStatus::USAGE);
    assert_eq!(
        run(&["check", &fixture("b2-mv.alg"), "--law", "nope"]).0,
        ExitStatus::USAGE
    );
    assert_eq!(
        run(&["enumerate", "--kind", "groups", "--size", "2"]).0,
        ExitStatus::USAGE
    );
    assert_eq!(
        run(&["sweep", "--theorem", "T99", "--max-size", "2"]).0,
        ExitStatus::USAGE
    );
    assert_eq!(run(&["--help"]).0, ExitStatus::SUCCESS);
}

#[test]
fn parse_errors_carry_positions() {
    let path = std::env::temp_dir().join(format!("reslat-bad-{}.alg", std::process::id()));
    std::fs::write(
        &path,
        "algebra x\nkind semiring\nsize 2\nzero 0\none 1\nop add\n0 1\n1 1\nop mul\n0 0\nend\n",
    )
    .unwrap();
    let (status, _, err) = run(&["check", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(status, ExitStatus::USAGE);
    assert!(err.contains("line"), "{err}");
}

#[test]
fn guard_breach_exits_three() {
    assert_eq!(
        run(&["enumerate", "--kind", "reslat", "--size", "7"]).0,
        ExitStatus::RESOURCE_LIMIT
    );
    assert_eq!(
        run(&[
            "--max-size-guard",
            "2",
            "sweep",
            "--theorem",
            "T1",
            "--max-size",
            "3"
        ])
        .0,
        ExitStatus::RESOURCE_LIMIT
    );
}

#[test]
fn binary_honours_env_guard() {
    let out = Command::new(env!("CARGO_BIN_EXE_reslat"))
        .args([
            "enumerate",
            "--kind",
            "semiring_cis",
            "--size",
            "3",
            "--count-only",
        ])
        .env("RESLAT_MAX_SIZE", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_reslat"))
        .args(["check", &fixture("n3-semiring.alg")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("LAW simple FAIL witness=(2)\n"));
}
