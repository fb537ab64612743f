//! The `ratbase` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

fn ratbase(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratbase"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = ratbase(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    ratbase(args).status.code().unwrap()
}

#[test]
fn worked_examples() {
    assert_eq!(stdout(&["rep", "--base", "7/3", "13"]), "614\n");
    assert_eq!(
        stdout(&["wmin", "--base", "7/3", "--seed-val", "1", "--len", "3"]),
        "202\n"
    );
    assert_eq!(
        stdout(&["wmax", "--base", "7/3", "--seed-word", "3", "--len", "3"]),
        "554\n"
    );
    assert_eq!(
        stdout(&["nmin", "--base", "7/3", "--seed-val", "1", "--len", "1"]),
        "3\n"
    );
    assert_eq!(stdout(&["val", "--base", "3/2", "2"]), "1\n");
    assert_eq!(stdout(&["val", "--base", "3/2", "1"]), "1/2\n");
}

#[test]
fn raw_output_is_one_byte_per_letter() {
    let o = ratbase(&[
        "wmin",
        "--base",
        "7/3",
        "--seed-val",
        "1",
        "--len",
        "5",
        "--raw",
    ]);
    assert_eq!(o.stdout, vec![2, 0, 2, 1, 2]);
}

#[test]
fn snapshot_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let snap = dir.path().join("w.snap");
    let snap = snap.to_str().unwrap();
    let whole = stdout(&["wmin", "--base", "8/5", "--seed-val", "7", "--len", "40000"]);
    let head = stdout(&[
        "wmin",
        "--base",
        "8/5",
        "--seed-val",
        "7",
        "--len",
        "25000",
        "--snapshot",
        snap,
    ]);
    let tail = stdout(&["wmin", "--resume", snap, "--len", "15000"]);
    assert_eq!(format!("{}{}", head.trim_end(), tail), whole);
    // wrong word kind
    assert_ne!(code(&["wmax", "--resume", snap, "--len", "3"]), 0);
}

#[test]
fn measurement_commands_print_csv() {
    let r = stdout(&[
        "richness",
        "--base",
        "3/2",
        "--seed-val",
        "1",
        "--l",
        "1..4",
        "--cap",
        "1000",
    ]);
    assert_eq!(
        r,
        "base,seed,l,threshold_or_negative_missing,cap\n3/2,2,1,2,1000\n3/2,2,2,6,1000\n3/2,2,3,51,1000\n3/2,2,4,54,1000\n"
    );
    let c = stdout(&[
        "richness",
        "--baseline",
        "champernowne",
        "--q",
        "2",
        "--l",
        "3",
        "--cap",
        "1000",
    ]);
    assert!(c.ends_with("2,champernowne,3,21,1000\n"), "{c}");
    let d = stdout(&[
        "deviation",
        "--constant",
        "pi",
        "--q",
        "2",
        "--l",
        "2",
        "--len",
        "1000",
    ]);
    assert!(d.starts_with("base,seed,l,n,D\n2,pi,2,2,"), "{d}");
    assert!(d.lines().last().unwrap().starts_with("2,pi,2,1000,"));
    let e = stdout(&[
        "ensemble",
        "--q",
        "2",
        "--members",
        "20",
        "--l",
        "3",
        "--len",
        "500",
    ]);
    assert!(e.starts_with("n_or_l,min,d10,mean,d90,max\n"));
    let x = stdout(&[
        "complexity",
        "--base",
        "3/2",
        "--seed-val",
        "1",
        "--l",
        "1..3",
        "--len",
        "100",
    ]);
    assert_eq!(x, "l,count\n1,2\n2,4\n3,8\n");
}

#[test]
fn checks_record_findings_and_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let ledger = dir.path().join("findings.jsonl");
    let ledger_s = ledger.to_str().unwrap();
    let out = stdout(&[
        "stopmap",
        "--base",
        "3/2",
        "--set",
        "0,1",
        "--start",
        "1..3",
        "--budget",
        "20",
        "--findings",
        ledger_s,
    ]);
    assert!(out.contains("findings: 3"), "{out}");
    let out = stdout(&[
        "equidist",
        "--base",
        "3/2",
        "--seed-val",
        "1",
        "--k",
        "2",
        "--iterations",
        "100",
        "--tolerance",
        "0.0",
        "--findings",
        ledger_s,
    ]);
    assert!(out.contains("max_gap"));
    let lines = std::fs::read_to_string(&ledger).unwrap();
    assert_eq!(lines.lines().count(), 4);
    assert!(lines
        .lines()
        .all(|l| l.contains("\"timestamp\"") && l.contains("\"check\"")));

    let c = stdout(&["collatz", "--p", "3", "--start", "6", "--budget", "100"]);
    assert!(c.contains("6,7,cycle,1,2,"), "{c}");
    assert_eq!(
        stdout(&[
            "factor",
            "--base",
            "7/3",
            "--seed-val",
            "1",
            "--target",
            "22"
        ]),
        "5\n"
    );
    assert_eq!(
        stdout(&["factor", "--base", "3/2", "--seed-val", "5"])
            .lines()
            .count(),
        1
    );
    let cov = stdout(&[
        "coverage",
        "--base",
        "7/3",
        "--seed-val",
        "1",
        "--cap",
        "10",
    ]);
    assert_eq!(cov, "letter,first_position\n0,2\n1,4\n2,1\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["rep", "--base", "6/4", "3"]), 2);
    assert_eq!(code(&["rep", "--base", "3/2"]), 2);
    assert_eq!(
        code(&[
            "wmin",
            "--base",
            "3/2",
            "--seed-val",
            "1",
            "--seed-word",
            "2",
            "--len",
            "3"
        ]),
        2
    );
    assert_eq!(code(&["repro", "fig9"]), 2);
    assert_eq!(
        code(&[
            "richness",
            "--base",
            "3/2",
            "--seed-val",
            "1",
            "--l",
            "30",
            "--cap",
            "10"
        ]),
        3
    );
    let o = ratbase(&[
        "richness",
        "--base",
        "3/2",
        "--seed-val",
        "1",
        "--l",
        "30",
        "--cap",
        "10",
    ]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
    assert_eq!(code(&["--version"]), 0);
}

fn read(dir: &Path, f: &str) -> String {
    std::fs::read_to_string(dir.join(f)).unwrap()
}

#[test]
fn repro_writes_csvs_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let t1 = stdout(&["repro", "table1", "--quiet", "--out", out]);
    assert!(t1.contains("13,614\n"));
    assert!(read(dir.path(), "table1.csv").starts_with("n,rep\n0,ε\n1,3\n"));

    stdout(&[
        "repro",
        "fig2",
        "--quiet",
        "--out",
        out,
        "--len",
        "2000",
        "--members",
        "10",
    ]);
    let sidecar: serde_json::Value =
        serde_json::from_str(&read(dir.path(), "manifest.json")).unwrap();
    assert_eq!(sidecar["manifest"]["id"], "fig2");
    assert_eq!(sidecar["overrides"]["len"], 2000);
    assert_eq!(sidecar["rng_seed"], 1_234_567);
    let files: Vec<String> = sidecar["files"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f.as_str().unwrap().to_string())
        .collect();
    assert!(!files.is_empty());
    for f in &files {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    assert!(files.iter().any(|f| f.ends_with("_ensemble.csv")));
    assert!(!std::fs::read_dir(dir.path()).unwrap().any(|e| e
        .unwrap()
        .path()
        .extension()
        .is_some_and(|x| x == "tmp")));
}

#[test]
fn repro_is_reproducible() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        stdout(&[
            "repro",
            "fig4",
            "--quiet",
            "--len",
            "1500",
            "--members",
            "5",
            "--out",
            d.path().to_str().unwrap(),
        ]);
    }
    for e in std::fs::read_dir(a.path()).unwrap() {
        let name = e.unwrap().file_name();
        let name = name.to_str().unwrap();
        assert_eq!(read(a.path(), name), read(b.path(), name), "{name}");
    }
}
