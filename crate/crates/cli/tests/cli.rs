use std::process::{Command, Output};

fn grm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grm")).args(args).output().expect("failed to run grm")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const Z4_M3: [&str; 8] = ["--p", "2", "--s", "2", "--r", "1", "--m", "3"];

fn with(base: &[&str], extra: &[&str]) -> Vec<String> {
    base.iter().chain(extra).map(|s| s.to_string()).collect()
}

fn run(cmd: &str, extra: &[&str]) -> Output {
    let mut args = vec![cmd.to_string()];
    args.extend(with(&Z4_M3, extra));
    grm(&args.iter().map(String::as_str).collect::<Vec<_>>())
}

#[test]
fn tower_report() {
    let o = run("tower", &[]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("minpoly(xi) = x^3 + 2x^2 + x + 3"), "{s}");
    assert!(s.contains("n = 7"));
    assert!(s.contains("rm >= s: true"));
}

#[test]
fn invalid_prime_exits_2() {
    let o = grm(&["tower", "--p", "4", "--s", "2", "--r", "1", "--m", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not prime"));
}

#[test]
fn order_out_of_range_exits_2() {
    assert_eq!(run("code", &["--nu", "4"]).status.code(), Some(2));
}

#[test]
fn tower_warns_when_rm_below_s() {
    let o = grm(&["tower", "--p", "2", "--s", "3", "--r", "1", "--m", "2"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("rm = 2 < s = 3"));
}

#[test]
fn code_genmat_small() {
    let o = grm(&["code", "--p", "2", "--s", "2", "--r", "1", "--m", "2", "--nu", "1", "--emit", "genmat"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "[1] [1] [1] [1]\n[0] [1] [0] [3]\n[0] [0] [1] [3]\n");
}

#[test]
fn code_json_export() {
    let o = run("code", &["--nu", "1", "--emit", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["params"]["p"], 2);
    assert_eq!(v["nu"], 1);
    assert_eq!(v["rank"], 4);
    assert_eq!(v["column_labels"][0], "inf");
    assert_eq!(v["column_labels"].as_array().unwrap().len(), 8);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert_eq!(v["rows"][0][0], serde_json::json!([1]));
    assert!(v.get("generator_poly").is_none());
}

#[test]
fn code_output_file() {
    let dir = std::env::temp_dir().join(format!("grm-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g2.txt");
    let o = run("code", &["--nu", "2", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 7);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn cyclic_json_has_generator() {
    let o = run("cyclic", &["--nu", "1", "--emit", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["generator_poly"], "x^3 + 2x^2 + x + 3");
    assert_eq!(v["column_labels"][0], "0");
    assert_eq!(v["rank"], 4);
}

#[test]
fn kerdock_generator() {
    let o = run("kerdock", &[]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("rank = 4"), "{s}");
    assert_eq!(s.lines().filter(|l| l.starts_with('[')).count(), 4);
}

#[test]
fn mindist_brute_and_formula() {
    let o = run("mindist", &["--nu", "1", "--shortened", "--method", "brute"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("min_weight = 3\n"));
    let o = run("mindist", &["--nu", "1", "--shortened"]);
    assert_eq!(stdout(&o), "Q = 2\nrem = 0\ndesigned = 3\n");
    let o = run("mindist", &["--nu", "2", "--method", "brute", "--guard", "1000"]);
    assert!(stdout(&o).contains("method = socle"));
    let o = run("mindist", &["--nu", "2", "--method", "brute", "--guard", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dual_verdict() {
    let o = run("dual", &["--nu", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "nu = 1\nmu = 1\nverdict = PASS\n");
    let o = grm(&["dual", "--p", "2", "--s", "3", "--r", "1", "--m", "2", "--nu", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = run("verify", &["--suite", "basis"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS    basis      nu=3"));

    let o = run("verify", &["--suite", "all"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(!s.contains("FAIL"));
    assert!(s.lines().filter(|l| l.starts_with("INFO")).all(|l| l.contains("extended")));

    let o = grm(&["verify", "--suite", "dual", "--p", "2", "--s", "3", "--r", "1", "--m", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("SKIPPED dual"));

    let o = run("verify", &["--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn identical_invocations_identical_output() {
    for args in [&["code", "--nu", "2", "--emit", "json"][..], &["verify", "--suite", "all"][..]] {
        let a = run(args[0], &args[1..]);
        let b = run(args[0], &args[1..]);
        assert_eq!(a.stdout, b.stdout);
    }
}
