use std::io::Write;
use std::process::{Command, Output, Stdio};

use proptest::prelude::*;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spectral-turan"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(args: &[&str], stdin: &str) -> i32 {
    run(args, stdin).status.code().expect("exited normally")
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify", "--theorem", "main", "--n", "6-7", "--r", "3"], ""), 0);
    assert_eq!(code(&["verify", "--theorem", "p_main", "--n", "7", "--r", "3"], ""), 0);
    // Only an out-of-range row: nothing asserted, so no pass.
    assert_eq!(code(&["verify", "--theorem", "main", "--n", "6", "--r", "3"], ""), 1);
    assert_eq!(code(&["charpoly", "--check-identities", "--max", "7"], ""), 0);
    assert_eq!(code(&["symmetrize", "--max-steps", "1"], "Dhc\n"), 3);
    assert_eq!(code(&["construct", "y", "--n", "6", "--r", "3"], ""), 2);
    assert_eq!(
        code(&["spectrum", "--objective", "a_alpha", "--alpha", "1.5"], "Dhc\n"),
        2
    );
    assert_eq!(code(&["spectrum", "--objective", "p", "--p", "1"], "Dhc\n"), 2);
    assert_eq!(code(&["verify"], ""), 2);
    assert_eq!(code(&["--jobs", "x", "verify", "--theorem", "mantel"], ""), 2);
}

#[test]
fn verify_formats() {
    let out = run(
        &[
            "verify",
            "--theorem",
            "turan",
            "--n",
            "5",
            "--r",
            "2-3",
            "--format",
            "json",
        ],
        "",
    );
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 2);
    assert_eq!(doc["rows"][0]["found"], 6.0);
    let text = String::from_utf8(run(&["verify", "--theorem", "mantel", "--n", "4-5"], "").stdout).unwrap();
    assert!(text.ends_with("mantel: PASS\n"), "{text}");
}

#[test]
fn output_is_deterministic() {
    let cases: [(&[&str], &str); 4] = [
        (
            &[
                "verify",
                "--theorem",
                "kang_nikiforov",
                "--n",
                "5",
                "--format",
                "json",
                "--seed",
                "3",
            ],
            "",
        ),
        (
            &[
                "verify",
                "--theorem",
                "nosal_edges",
                "--n",
                "6",
                "--format",
                "csv",
                "--jobs",
                "3",
            ],
            "",
        ),
        (
            &[
                "spectrum",
                "--objective",
                "p",
                "--p",
                "1.5",
                "--format",
                "json",
                "--seed",
                "9",
            ],
            "Dhc\nE~~w\n",
        ),
        (&["symmetrize", "--format", "json"], "FhCKG\n"),
    ];
    for (args, input) in cases {
        let a = run(args, input);
        let b = run(args, input);
        assert_eq!(
            a.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&a.stderr)
        );
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let one = run(
        &[
            "verify",
            "--theorem",
            "main",
            "--n",
            "7",
            "--r",
            "3",
            "--jobs",
            "1",
            "--format",
            "csv",
        ],
        "",
    );
    let many = run(
        &[
            "verify",
            "--theorem",
            "main",
            "--n",
            "7",
            "--r",
            "3",
            "--jobs",
            "4",
            "--format",
            "csv",
        ],
        "",
    );
    assert_eq!(one.stdout, many.stdout);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn malformed_graph6_is_a_usage_error(line in "[ -~]{0,12}") {
        prop_assume!(spectral_turan::Graph::from_graph6(line.trim()).is_err());
        let out = run(&["spectrum"], &format!("{line}\n"));
        prop_assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
    }

    #[test]
    fn malformed_flags_never_crash(args in proptest::collection::vec("[a-z0-9=-]{1,10}", 0..4)) {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let c = code(&refs, "");
        prop_assert!([0, 1, 2, 3].contains(&c), "exit {} for {:?}", c, refs);
    }
}
