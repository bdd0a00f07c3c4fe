use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conjrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

const IDENTITY: &str = "[1, 0, 0]\n[0, 1, 0]\n[0, 0, 1]\n";

#[test]
fn t_squared_is_scalar() {
    let o = run(&["eval", "-n", "3", "T T"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "[q^2, 0, 0]\n[0, q^2, 0]\n[0, 0, q^2]\n");
}

#[test]
fn witness_at_two_is_identity() {
    let o = run(&["eval", "-n", "3", "a2 T a2 T a2 T a2 T T^-4", "--q", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), IDENTITY);
}

#[test]
fn empty_word() {
    let o = run(&["eval", "-n", "3", ""]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), IDENTITY);
}

#[test]
fn eval_det_matches_prediction() {
    let o = run(&["eval", "s1 a2 T^-1 s2^-1", "--det", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["det"], v["predicted_det"]);
}

#[test]
fn alphabet_flag_rejects_t() {
    let o = run(&["eval", "T a1", "--alphabet", "sigma"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn bad_word_is_usage_error() {
    assert_eq!(code(&run(&["eval", "x1"])), 2);
    assert_eq!(code(&run(&["eval", "a3"])), 2);
}

#[test]
fn relations_for_four_strands() {
    let o = run(&["verify", "--relations", "-n", "4"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.lines().count() > 10);
    assert!(out.lines().all(|l| l.contains(" PASS ")), "{out}");
}

#[test]
fn claims_json_is_stable() {
    let a = run(&["verify", "--claims", "--json"]);
    let b = run(&["verify", "--claims", "--json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let arr = v.as_array().unwrap();
    assert!(arr.len() >= 14);
    for verdict in arr {
        for key in ["claim_id", "paper_locus", "status", "evidence"] {
            assert!(verdict.get(key).is_some(), "missing {key}");
        }
        let status = verdict["status"].as_str().unwrap();
        assert!(
            status == "PASS" || status.starts_with("CHECKED("),
            "{status}"
        );
    }
}

#[test]
fn search_finds_witness_at_two() {
    let o = run(&[
        "search",
        "--q",
        "2",
        "--family",
        "e",
        "--max-r",
        "4",
        "--max-exp",
        "4",
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let hit = v["hits"]
        .as_array()
        .unwrap()
        .iter()
        .find(|h| h["word"] == "a2 T a2 T a2 T a2 T^-3")
        .expect("witness found");
    assert_eq!(hit["nontrivial"], true);
}

#[test]
fn search_json_is_stable_across_thread_counts() {
    let args = |t: &'static str| {
        [
            "search",
            "--symbolic",
            "--family",
            "freewords",
            "--max-len",
            "6",
            "--threads",
            t,
            "--json",
        ]
    };
    assert_eq!(run(&args("1")).stdout, run(&args("4")).stdout);
}

#[test]
fn search_rejects_zero_q() {
    assert_eq!(code(&run(&["search", "--q", "0"])), 2);
    assert_eq!(code(&run(&["search", "--q", "1/0"])), 2);
}

#[test]
fn search_budget_exit_code() {
    let o = run(&["search", "--q", "2", "--budget", "10"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn reduce_detects_case_b() {
    let o = run(&["reduce", "a1", "a2", "a1", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["case"], "b");
    assert_eq!(v["reduced"], "a2");
    assert_eq!(v["images_equal"], true);
    assert_eq!(v["reduced_is_identity"], false);
}

#[test]
fn reduce_rejects_inapplicable_case() {
    assert_eq!(code(&run(&["reduce", "a1", "a2", "a1", "--case", "c0"])), 2);
    assert_eq!(code(&run(&["reduce", "a1", "a1 a1"])), 2);
}

#[test]
fn qset_membership() {
    let o = run(&["qset", "--set", "S", "-k", "3", "--q", "1/2", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["member"], true);
    let o = run(&["qset", "--set", "s", "-k", "1", "--q", "2", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["member"], false);
    assert_eq!(
        code(&run(&["qset", "--set", "P", "-k", "1", "--q", "4"])),
        2
    );
}

#[test]
fn six_alpha_words() {
    let o = run(&["alpha-words", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 6);
    assert_eq!(arr.iter().filter(|x| x["identity"] == true).count(), 1);
}
