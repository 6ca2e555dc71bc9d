use std::process::{Command, Output};

use distinct_cores::poset::PosetJson;
use distinct_cores::GapPoset;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distinct-cores"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn largest_k2() {
    let out = run(&["largest", "--k", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("21"));
    assert!(text.contains("(9,5,4,2,1)"));
    assert!(text.contains("{13,8,6,3,1}"));
}

#[test]
fn largest_json() {
    let out = run(&["largest", "--k", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["size"], 4);
    assert_eq!(v["partition"], serde_json::json!([3, 1]));
}

#[test]
fn verify_counts_k1() {
    let out = run(&["verify", "--counts", "--k", "1", "--format", "csv", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "quantity,param,formula,enumerated,match,millis");
    assert_eq!(lines.len(), 6);
    assert!(lines[1..].iter().all(|l| l.contains(",true,")));
    let again = run(&["verify", "--counts", "--k", "1", "--format", "csv", "--no-timing"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_reports_pass() {
    for args in [
        &["verify", "--regressions"][..],
        &["verify", "--identities", "--kmax", "8"][..],
        &["verify", "--largest", "--k", "3"][..],
        &["verify", "--counts", "--k", "25", "--formula-only"][..],
        &["verify", "--largest", "--k", "25", "--formula-only"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(!stdout(&out).contains("MISMATCH"));
    }
}

#[test]
fn psi_in_both_directions() {
    let out = run(&["bijection", "--k", "1", "--ideal", "2"]);
    assert_eq!(stdout(&out).trim(), "UD");
    let table = [
        ("", "DUDU"),
        ("2", "UDDU"),
        ("3", "DDUU"),
        ("4", "DUUD"),
        ("2,4", "UDUD"),
        ("2,4,9", "UUDD"),
    ];
    for (ideal, path) in table {
        let out = run(&["bijection", "--k", "2", "--ideal", ideal]);
        assert_eq!(stdout(&out).trim(), path, "{ideal}");
        let back = run(&["bijection", "--k", "2", "--path", path]);
        assert_eq!(stdout(&back).trim(), format!("{{{ideal}}}"));
    }
}

#[test]
fn phi_via_cli() {
    let out = run(&["bijection", "--k", "2", "--map", "phi", "--ideal", "1"]);
    assert_eq!(stdout(&out).trim(), "UUDD");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bijection", "--k", "2", "--ideal", "9"][..],
        &["bijection", "--k", "2", "--ideal", "1"][..],
        &["bijection", "--k", "2", "--ideal", "3,4"][..],
        &["bijection", "--k", "2", "--ideal", "x"][..],
        &["bijection", "--k", "2", "--path", "UUD"][..],
        &["bijection", "--k", "2", "--path", "UD"][..],
        &["poset", "--s", "4", "--t", "6"][..],
        &["poset", "--s", "3", "--t", "5", "--format", "csv"][..],
        &["verify", "--counts"][..],
        &["frobnicate"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn guard_violations_exit_3() {
    for args in [
        &["verify", "--counts", "--k", "7"][..],
        &["verify", "--largest", "--k", "5"][..],
        &["verify", "--identities", "--kmax", "21"][..],
        &["paths", "--order", "15"][..],
        &["ideals", "--s", "17", "--t", "19"][..],
    ] {
        assert_eq!(run(args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn guard_can_be_raised() {
    let out = run(&["verify", "--largest", "--k", "5", "--guard", "5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn poset_json_round_trips() {
    for args in [
        &["poset", "--s", "5", "--t", "7", "--format", "json"][..],
        &["poset", "--truncate-k", "3", "--format", "json"][..],
    ] {
        let out = run(args);
        let json: PosetJson = serde_json::from_slice(&out.stdout).unwrap();
        let poset = GapPoset::from_json(&json).unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&poset.to_json()).unwrap(),
            stdout(&out).trim()
        );
    }
    let text = stdout(&run(&["poset", "--s", "3", "--t", "5", "--format", "json"]));
    let compact: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(
        compact,
        serde_json::json!({"s":3,"t":5,"elements":[1,2,4,7],"covers":{"1":[],"2":[],"4":[1],"7":[2,4]}})
    );
}

#[test]
fn poset_dot_layers() {
    let out = run(&["poset", "--s", "3", "--t", "5", "--format", "dot"]);
    let text = stdout(&out);
    assert!(text.starts_with("digraph P_3_5 {"));
    assert!(text.contains("rankdir=BT"));
    assert!(text.contains("4 -> 7;"));
}

#[test]
fn listings() {
    let out = run(&["paths", "--order", "3"]);
    assert_eq!(stdout(&out).lines().count(), 5);
    let out = run(&["paths", "--order", "2", "--free"]);
    assert_eq!(stdout(&out).lines().count(), 6);
    let out = run(&["ideals", "--s", "5", "--t", "7", "--nice"]);
    assert_eq!(stdout(&out).lines().count(), 16);
    let out = run(&["ideals", "--s", "3", "--t", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}
