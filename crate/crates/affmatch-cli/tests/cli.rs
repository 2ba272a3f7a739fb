//! End-to-end command tests: exit codes, stdin handling, report shapes, and
//! the environment override.

use std::io::Cursor;
use std::process::Command;

use affmatch_cli::report::Report;

const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/figure1.json");

fn run(args: &[&str], stdin: &[u8]) -> (i32, String, String) {
    let mut argv: Vec<String> = vec!["affmatch".into()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut input = Cursor::new(stdin.to_vec());
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = affmatch_cli::run_cli(&argv, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn validate_accepts_the_fixture() {
    let (code, out, _) = run(&["validate", FIXTURE], b"");
    assert_eq!(code, 0);
    assert_eq!(out, "ok: 3 applicants, 3 employers\n");
}

#[test]
fn validate_reads_stdin() {
    let text = std::fs::read(FIXTURE).unwrap();
    let (code, out, _) = run(&["validate", "-"], &text);
    assert_eq!(code, 0);
    assert!(out.starts_with("ok:"));
}

#[test]
fn validate_rejects_a_damaged_fixture() {
    let text = std::fs::read_to_string(FIXTURE).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["employer_prefs"]["e2"]
        .as_array_mut()
        .unwrap()
        .remove(3);
    let damaged = serde_json::to_vec(&doc).unwrap();
    let (code, _, err) = run(&["validate", "-"], &damaged);
    assert_eq!(code, 1);
    assert!(err.contains("e2"), "diagnostic names the employer: {err}");
}

#[test]
fn usage_errors_exit_64() {
    let (code, _, err) = run(&["frobnicate"], b"");
    assert_eq!(code, 64);
    assert!(!err.is_empty());

    let (code, _, _) = run(&["stable", FIXTURE], b""); // missing --notion
    assert_eq!(code, 64);

    let (code, _, err) = run(&["solve", "--objective", "nonsense", FIXTURE], b"");
    assert_eq!(code, 64);
    assert!(err.contains("nonsense"));

    let (code, _, _) = run(&["solve", "--cuts", "magic", FIXTURE], b"");
    assert_eq!(code, 64);

    let (code, _, _) = run(
        &[
            "generate",
            "--seed",
            "1",
            "--n",
            "3",
            "--strategy",
            "weighted",
        ],
        b"",
    );
    assert_eq!(code, 64, "weighted without --lambda");

    let (code, _, _) = run(
        &[
            "generate",
            "--seed",
            "1",
            "--n",
            "3",
            "--strategy",
            "candidate_first",
            "--lambda",
            "0.5",
        ],
        b"",
    );
    assert_eq!(code, 64, "--lambda without weighted");

    let (code, _, _) = run(
        &[
            "generate",
            "--seed",
            "1",
            "--n",
            "3",
            "--strategy",
            "weighted",
            "--lambda",
            "1.5",
        ],
        b"",
    );
    assert_eq!(code, 64, "lambda out of range");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"], b"");
    assert_eq!(code, 0);
    assert!(out.contains("affmatch"));
}

#[test]
fn missing_file_is_an_operational_error() {
    let (code, _, err) = run(&["validate", "/no/such/file.json"], b"");
    assert_eq!(code, 1);
    assert!(err.contains("/no/such/file.json"));
}

#[test]
fn enumerate_lists_every_matching() {
    let (code, out, _) = run(&["enumerate", "--format", "json", FIXTURE], b"");
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&out).unwrap();
    let Report::Enumerate(r) = report else {
        panic!("expected an enumerate report")
    };
    assert_eq!(r.count, 6);
    assert_eq!(r.matchings[0].pairs[0], ("a1".into(), "e1".into()));
    assert_eq!(r.matchings[5].pairs[0], ("a1".into(), "e3".into()));
    for (i, m) in r.matchings.iter().enumerate() {
        assert_eq!(m.index, i + 1);
    }
}

#[test]
fn stable_exit_codes_follow_the_core() {
    let (code, _, _) = run(&["stable", "--notion", "greedy", FIXTURE], b"");
    assert_eq!(code, 2, "empty greedy core");
    let (code, _, _) = run(&["stable", "--notion", "strict", FIXTURE], b"");
    assert_eq!(code, 0, "nonempty strict stable set");
}

#[test]
fn stable_threads_do_not_change_the_report() {
    let (code1, out1, _) = run(
        &["stable", "--notion", "greedy", "--format", "json", FIXTURE],
        b"",
    );
    let (code2, out2, _) = run(
        &[
            "stable",
            "--notion",
            "greedy",
            "--format",
            "json",
            "--threads",
            "4",
            FIXTURE,
        ],
        b"",
    );
    assert_eq!(code1, code2);
    assert_eq!(out1, out2);
}

#[test]
fn solve_reports_empty_core_and_budget() {
    let (code, out, _) = run(&["solve", "--format", "json", FIXTURE], b"");
    assert_eq!(code, 2);
    let report: Report = serde_json::from_str(&out).unwrap();
    let Report::Solve(r) = report else {
        panic!("expected a solve report")
    };
    assert_eq!(r.status, "empty_core");
    assert_eq!(r.objective, "feasibility");

    let (code, out, _) = run(
        &["solve", "--node-budget", "2", "--format", "json", FIXTURE],
        b"",
    );
    assert_eq!(code, 3);
    let report: Report = serde_json::from_str(&out).unwrap();
    let Report::Solve(r) = report else {
        panic!("expected a solve report")
    };
    assert_eq!(r.status, "bound_exceeded");

    let (code, _, _) = run(&["solve", "--node-budget", "0", FIXTURE], b"");
    assert_eq!(code, 64);
}

#[test]
fn solve_finds_an_optimum_on_a_consistent_market() {
    let (code, doc, _) = run(
        &[
            "generate",
            "--seed",
            "3",
            "--n",
            "4",
            "--strategy",
            "candidate_first",
        ],
        b"",
    );
    assert_eq!(code, 0);
    let (code, out, _) = run(
        &[
            "solve",
            "--objective",
            "min_applicant_rank_sum",
            "--cuts",
            "nogood+conditional",
            "--format",
            "json",
            "-",
        ],
        doc.as_bytes(),
    );
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&out).unwrap();
    let Report::Solve(r) = report else {
        panic!("expected a solve report")
    };
    assert_eq!(r.status, "stable");
    assert!(r.matching.is_some());
    assert!(r.score.is_some());
}

#[test]
fn reduce_requires_consistency() {
    let (code, _, err) = run(&["reduce", FIXTURE], b"");
    assert_eq!(code, 1);
    for employer in ["e1", "e2", "e3"] {
        assert!(err.contains(employer), "{err}");
    }

    let (code, doc, _) = run(
        &[
            "generate",
            "--seed",
            "9",
            "--n",
            "3",
            "--strategy",
            "candidate_first",
        ],
        b"",
    );
    assert_eq!(code, 0);
    let (code, out, _) = run(&["reduce", "-"], doc.as_bytes());
    assert_eq!(code, 0);
    assert!(out.contains("base orders:"));
}

#[test]
fn generated_documents_flow_back_in() {
    let (code, doc, _) = run(
        &[
            "generate",
            "--seed",
            "7",
            "--n",
            "4",
            "--strategy",
            "uniform_random",
            "--affiliation",
            "random_partial",
            "--density",
            "0.5",
        ],
        b"",
    );
    assert_eq!(code, 0);
    assert!(doc.contains("\"generator\""));
    let (code, _, _) = run(&["validate", "-"], doc.as_bytes());
    assert_eq!(code, 0);
    let (code, _, _) = run(&["stable", "--notion", "greedy", "-"], doc.as_bytes());
    assert!(code == 0 || code == 2);
}

#[test]
fn report_renders_machine_output() {
    let (_, json_out, _) = run(
        &["stable", "--notion", "strict", "--format", "json", FIXTURE],
        b"",
    );
    let (_, text_out, _) = run(
        &["stable", "--notion", "strict", "--format", "text", FIXTURE],
        b"",
    );
    let (code, rendered, _) = run(&["report", "-"], json_out.as_bytes());
    assert_eq!(code, 0);
    assert_eq!(rendered, text_out);
}

#[test]
fn report_rejects_non_reports() {
    let (code, _, err) = run(&["report", FIXTURE], b"");
    assert_eq!(code, 1);
    assert!(err.contains("parsing report"));
}

#[test]
fn max_n_override_via_environment() {
    let exe = env!("CARGO_BIN_EXE_affmatch");
    let output = Command::new(exe)
        .args(["enumerate", FIXTURE])
        .env("AFFMATCH_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("exceeds"), "{err}");

    let output = Command::new(exe)
        .args(["stable", "--notion", "strict", FIXTURE])
        .env("AFFMATCH_MAX_N", "1")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));

    let output = Command::new(exe)
        .args(["enumerate", FIXTURE])
        .env("AFFMATCH_MAX_N", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
}
