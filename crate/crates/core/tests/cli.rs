use std::process::{Command, Output};

fn regulib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regulib"))
        .args(args)
        .env_remove("REGULIB_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn passing_suite_exits_zero() {
    let out = regulib(&["verify", "prop-7.1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "regulib-report/1");
    assert_eq!(v["suite"], "prop-7.1");
    assert_eq!(v["pass"], true);
    assert_eq!(v["items"].as_array().unwrap().len(), 8);
}

#[test]
fn violated_claim_exits_one_and_names_it() {
    let out = regulib(&["verify", "lemma-2.4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("violated: p=2,a=2,b=3: near-regular"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(regulib(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(regulib(&["construct", "sl-wreath"]).status.code(), Some(2));
    assert_eq!(regulib(&["construct", "no-such-id", "--p", "2"]).status.code(), Some(2));
    assert_eq!(regulib(&["verify", "prop-7.1", "--p", "4", "--a", "1"]).status.code(), Some(2));
    assert_eq!(regulib(&["verify", "lemma-2.7", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(regulib(&[]).status.code(), Some(2));
    assert_eq!(regulib(&["--help"]).status.code(), Some(0));
}

#[test]
fn construct_is_deterministic_per_seed() {
    let args = ["construct", "go-wreath", "--m", "3", "--f", "1", "--seed", "7"];
    let a = regulib(&args);
    let b = regulib(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let from_env = Command::new(env!("CARGO_BIN_EXE_regulib"))
        .args(["construct", "go-wreath", "--m", "3", "--f", "1"])
        .env("REGULIB_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(from_env.stdout, a.stdout);
}

#[test]
fn verify_is_deterministic_apart_from_timing() {
    let strip = |o: &Output| {
        let mut v = json(o);
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = regulib(&["verify", "example-6.6", "--jobs", "1"]);
    let b = regulib(&["verify", "example-6.6", "--jobs", "3"]);
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn construct_outputs() {
    let v = json(&regulib(&["construct", "sl-wreath", "--p", "2", "--a", "1", "--d", "2"]));
    assert_eq!(v["jordan_type"], "4");
    assert_eq!(v["torus_rank"], 1);
    assert!(v["witness"].is_object());

    let v = json(&regulib(&["construct", "cyclotomic", "--p", "3", "--a", "2"]));
    assert_eq!(v["order"], 9);
    assert_eq!(v["matrix"].as_array().unwrap().len(), 6);

    let out = regulib(&["construct", "power-map", "--p", "2", "--partition", "5+3", "--emit", "tsv"]);
    let tsv = String::from_utf8(out.stdout).unwrap();
    assert!(tsv.lines().any(|l| l == "power\t3+2+2+1"), "{tsv}");
}
