// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

use dendro::cli::{execute_verify_with, parse_args, EXIT_MISMATCH};
use dendro::verify::SweepConfig;
use dendro::{path_count_closed, DendrimerParams, ExactInt, Result};

fn dendro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dendro"))
        .args(args)
        .env_remove("DENDRO_MAX_VERTICES")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(dendro(&["table", "--n", "2", "--k", "3"]).status.code(), Some(0));
    assert_eq!(dendro(&["table", "--n", "0", "--k", "3"]).status.code(), Some(1));
    assert_eq!(dendro(&["meddom", "--n", "2", "--k", "3", "--sigma", "9"]).status.code(), Some(1));
    assert_eq!(dendro(&["export", "--n", "20", "--k", "10"]).status.code(), Some(1));
    assert_eq!(dendro(&["verify", "--max-n", "0", "--max-k", "3"]).status.code(), Some(1));
    assert_eq!(dendro(&["--version"]).status.code(), Some(0));
}

#[test]
fn verify_small_grid() {
    let o = dendro(&["verify", "--max-n", "4", "--max-k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let passes = out.lines().filter(|l| l.starts_with("PASS ")).count();
    assert!(passes >= 6, "{out}");
    assert!(!out.contains("FAIL"));

    let o = dendro(&["verify", "--max-n", "1", "--max-k", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
}

fn shifted(p: &DendrimerParams, ell: u32) -> Result<ExactInt> {
    let v = path_count_closed(p, ell)?;
    Ok(if ell == 2 { v + 1u32 } else { v })
}

#[test]
fn verify_reports_injected_mismatch() {
    let cfg = parse_args(["dendro", "verify", "--max-n", "2", "--max-k", "3"]).unwrap();
    let mut sweep = SweepConfig::new(2, 3);
    sweep.path_count = shifted;
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = execute_verify_with(&cfg, &sweep, &mut out, &mut err);
    assert_eq!(code, EXIT_MISMATCH);
    let out = String::from_utf8(out).unwrap();
    assert!(out.contains("FAIL closed_vs_oracle"), "{out}");
    assert!(out.contains("counterexample: closed_vs_oracle: n=1 k=2 ell=2 expected=1 got=2"), "{out}");
}

#[test]
fn output_flag_redirects_payload_only() {
    let dir = tempdir();
    let path = dir.join("t23.csv");
    let o = dendro(&["table", "--n", "2", "--k", "3", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "length,count\n1,9\n2,12\n3,12\n4,12\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn env_var_overrides_cap() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_dendro"))
            .args(["export", "--n", "2", "--k", "3"])
            .env("DENDRO_MAX_VERTICES", cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("9").status.code(), Some(1));
    assert_eq!(run("10").status.code(), Some(0));
    let bad = run("lots");
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("DENDRO_MAX_VERTICES"));
}

#[test]
fn runs_are_byte_identical() {
    for args in [
        ["indices", "--n", "3", "--k", "5", "--format", "json"],
        ["table", "--n", "6", "--k", "4", "--format", "csv"],
        ["export", "--n", "3", "--k", "3", "--format", "dot"],
    ] {
        assert_eq!(dendro(&args).stdout, dendro(&args).stdout);
    }
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("dendro-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
