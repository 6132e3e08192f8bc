use std::process::{Command, Output};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;
use strandtrace::commands::{compute, compute_with, ComputeArgs, Via};
use strandtrace::format::{parse_shape, SearchLine, StepJson};
use strandtrace::Status;
use strandtrace_core::{Basis, Partition, SymFun};

fn run(args: &[&str]) -> Output {
    run_with_threads(args, None)
}

fn run_with_threads(args: &[&str], threads: Option<usize>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_strandtrace"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("STRAND_TRACE_THREADS", t.to_string()),
        None => cmd.env_remove("STRAND_TRACE_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn args(lambda: &str, n: usize, via: Via) -> ComputeArgs {
    ComputeArgs {
        shape: parse_shape(lambda, n).unwrap(),
        basis: Basis::Homogeneous,
        via,
        step_log: None,
    }
}

#[test]
fn compute_worked_example() {
    let out = run(&[
        "compute", "--lambda", "2,1", "--n", "4", "--basis", "h", "--via", "both", "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["agree"], true);
    let records: Vec<(Value, Value)> = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["partition"].clone(), r["coeff"].clone()))
        .collect();
    assert_eq!(
        records,
        vec![
            (serde_json::json!([2, 2]), "2/1".into()),
            (serde_json::json!([3, 1]), "2/1".into()),
            (serde_json::json!([4]), "4/1".into()),
        ]
    );
}

#[test]
fn compute_empty_shape_in_csv() {
    let out = run(&[
        "compute", "--lambda", "", "--n", "3", "--basis", "h", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "partition,coeff\n[3],6/1\n"
    );
}

#[test]
fn compute_larger_shape_is_h_positive() {
    let out = run(&[
        "compute", "--lambda", "4,3,1,1", "--n", "6", "--via", "both", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["agree"], true);
    assert_eq!(v["summary"]["h_positive"], true);
}

#[test]
fn compute_falls_back_for_211_shapes() {
    let out = run(&[
        "compute", "--lambda", "1", "--n", "4", "--via", "trace", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("notice"));
    assert_eq!(json(&out)["summary"]["method"], "colored-diagram");
}

#[test]
fn mismatches_are_reported() {
    let flip = |f: SymFun| {
        let bump = SymFun::term(
            Basis::Homogeneous,
            Partition::from_parts([2, 2]),
            BigRational::from_integer(BigInt::from(1)),
        );
        &f + &bump
    };
    for (lambda, n) in [("2,1", 4), ("", 4), ("4,3,1,1", 6)] {
        let honest = compute(&args(lambda, n, Via::Both)).unwrap();
        assert_eq!(honest.status, Status::Success);
        let broken = compute_with(&args(lambda, n, Via::Both), flip).unwrap();
        assert_eq!(broken.status, Status::Failure, "λ={lambda}");
        assert_eq!(broken.summary["agree"], false);
        // a single-sided run has nothing to compare against
        let alone = compute_with(&args(lambda, n, Via::Trace), flip).unwrap();
        assert_eq!(alone.status, Status::Success);
    }
}

#[test]
fn invalid_input_exits_with_two() {
    assert_eq!(
        run(&["compute", "--lambda", "3", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "--lambda", "1,x", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["classify", "--lambda", "1,2", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["search", "--strands", "1", "--max-crossings", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["search", "--strands", "6", "--max-crossings", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--max-n", "11"]).status.code(), Some(2));
    let bad_threads = run_with_threads(&["classify", "--lambda", "", "--n", "2"], Some(0));
    assert_eq!(bad_threads.status.code(), Some(2));
}

#[test]
fn classify_reports_witness_and_crossings() {
    let v = json(&run(&[
        "classify", "--lambda", "1", "--n", "4", "--format", "json",
    ]));
    let last = &v["records"][2];
    assert_eq!(last["pattern"], "2+1+1");
    assert_eq!(last["brute_force_avoids"], false);
    assert_eq!(last["witness"], serde_json::json!([[1, 4], [2], [3]]));

    let v = json(&run(&[
        "classify", "--lambda", "2,1", "--n", "4", "--format", "json",
    ]));
    assert_eq!(v["summary"]["crossings"], "n=4; [1,2] [2,3] [3,4]");
    assert!(v["records"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["brute_force_avoids"] == true));
}

#[test]
fn verify_suites_pass() {
    for suite in ["identities", "closed-form", "trace"] {
        let out = run(&[
            "verify", "--suite", suite, "--max-n", "5", "--max-k", "3", "--format", "json",
        ]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert_eq!(json(&out)["summary"]["failed"], 0);
    }
}

#[test]
fn search_log_matches_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("log.jsonl");
    let out = run(&[
        "search",
        "--strands",
        "2",
        "--max-crossings",
        "5",
        "--out",
        path.to_str().unwrap(),
        "--format",
        "jsonl",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let log = std::fs::read_to_string(&path).unwrap();
    assert_eq!(log, String::from_utf8(out.stdout).unwrap());
    let lines: Vec<SearchLine> = log
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 5);
    for (j, line) in lines.iter().enumerate() {
        assert_eq!(line.crossings.len(), j + 1);
        assert_eq!(line.h.len(), 1);
        assert_eq!(line.h[0].partition, vec![2]);
        assert_eq!(line.h[0].coeff, format!("{}/1", 1u64 << (j + 1)));
        assert!(line.positive);
    }
}

#[test]
fn step_log_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("steps.jsonl");
    let out = run(&[
        "compute",
        "--lambda",
        "2,1",
        "--n",
        "4",
        "--step-log",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let steps: Vec<StepJson> = std::fs::read_to_string(&path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(steps.len(), 5);
    assert_eq!(steps[1].terms.len(), 1);
    assert_eq!(steps[1].terms[0].crossings, vec![[1, 2], [2, 3]]);
    assert_eq!(steps[1].terms[0].b, 1);
    assert!(steps[4].terms.iter().all(|t| t.n == 0));
}

#[test]
fn output_is_independent_of_thread_count() {
    let cases: &[&[&str]] = &[
        &[
            "search",
            "--strands",
            "4",
            "--max-crossings",
            "2",
            "--format",
            "jsonl",
        ],
        &[
            "search",
            "--strands",
            "5",
            "--max-crossings",
            "3",
            "--mode",
            "random",
            "--seed",
            "9",
            "--samples",
            "40",
        ],
        &[
            "verify", "--suite", "all", "--max-n", "5", "--max-k", "2", "--format", "json",
        ],
    ];
    for args in cases {
        let one = run_with_threads(args, Some(1));
        let many = run_with_threads(args, Some(4));
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(one.stdout, many.stdout, "{args:?}");
    }
}
