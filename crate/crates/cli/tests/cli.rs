use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn cari(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cari"))
        .args(args)
        .output()
        .expect("failed to run cari")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("compare prints JSON")
}

fn compare(a: &Path, b: &Path) -> Output {
    cari(&["compare", a.to_str().unwrap(), b.to_str().unwrap()])
}

#[test]
fn compare_identical_files() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.txt", "1 2 3 3\n2 2 1\n");
    let out = compare(&a, &a);
    let stdout = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(stdout.contains("\"cari\": 1.000000"));
    assert!(stdout.contains("\"ce\": 0.000000"));
    assert!(stdout.contains("\"extended_mi\": 2.000000"));
    assert_eq!(json(&out)["one_minus_ce"], 1.0);
}

#[test]
fn compare_is_symmetric() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.txt", "1 2 2 3 1 3\n1 1 2 2 3\n");
    let b = write(&dir, "b.txt", "#rows-clusters=4\n2 2 1 1 4 3\n1 2 2 1 3\n");
    let ab = json(&compare(&a, &b));
    let ba = json(&compare(&b, &a));
    for key in ["cari", "ce", "extended_mi"] {
        assert_eq!(ab[key], ba[key], "{key}");
    }
}

#[test]
fn compare_reports_errors_with_exit_codes() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.txt", "1 2 2 2 1\n1 1 2 1 1 2\n");
    let short = write(&dir, "short.txt", "1 2 2 2\n1 1 2 1 1 2\n");
    let bad = write(&dir, "bad.txt", "1 x\n1\n");

    let out = compare(&a, &short);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension mismatch"));

    let out = compare(&bad, &a);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1, token 2"));

    let missing = dir.path().join("nope.txt");
    assert_eq!(compare(&missing, &a).status.code(), Some(2));

    // a 1x1 grid parses but has no CARI
    let one = write(&dir, "one.txt", "1\n1\n");
    assert_eq!(compare(&one, &one).status.code(), Some(1));
}

const SIM: &[&str] = &[
    "simulate",
    "--rows",
    "20",
    "--cols",
    "15",
    "--row-clusters",
    "4",
    "--col-clusters",
    "3",
    "--seed",
    "9",
];

#[test]
fn simulate_rows_and_determinism() {
    let mut args = SIM.to_vec();
    args.extend(["--iters", "3"]);
    let first = cari(&args);
    assert!(first.status.success());
    let text = String::from_utf8(first.stdout.clone()).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "iteration,variant,cari,emi,ce,one_minus_ce,t_cari_ns,t_emi_ns,t_ce_ns"
    );
    assert_eq!(lines.len(), 4);
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(fields[0], "1");
    assert!(fields[2].parse::<f64>().unwrap() <= 1.0);
    assert!(fields[4].parse::<f64>().unwrap() >= 0.0);
    assert_eq!(cari(&args).stdout, first.stdout);

    args.push("--variants");
    let text = String::from_utf8(cari(&args).stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 9);
    assert!(text.contains(",fixed_rows,") && text.contains(",fixed_cols,"));
}

#[test]
fn simulate_rejects_bad_presets() {
    let mut args = SIM.to_vec();
    args.extend(["--iters", "3", "--balance", "preset:5,5,5,4"]);
    let out = cari(&args);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("sum to 19"));

    let mut args = SIM.to_vec();
    args.extend([
        "--iters",
        "1",
        "--balance",
        "preset:5,5,5,5",
        "--col-balance",
        "preset:1,2,12",
    ]);
    assert!(cari(&args).status.success());
}

#[test]
fn bench_csv_contract() {
    let out = cari(&[
        "bench",
        "--rows",
        "60",
        "--cols",
        "60",
        "--row-clusters",
        "5",
        "--col-clusters",
        "5",
        "--iters",
        "10",
    ]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["index", "iteration", "elapsed_ns"]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 30);
    for r in &rows {
        assert_eq!(r.len(), 3);
        assert!(r[2].parse::<u64>().unwrap() > 0);
    }

    let out = cari(&[
        "bench",
        "--rows",
        "60",
        "--cols",
        "60",
        "--row-clusters",
        "12",
        "--col-clusters",
        "5",
        "--iters",
        "10",
        "--ce-mode",
        "exhaustive",
    ]);
    assert_ne!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}
