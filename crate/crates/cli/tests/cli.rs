use std::process::{Command, Output};

use serde_json::Value;

fn negacode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negacode"))
        .args(args)
        .env_remove("NEGACODE_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn coset_leaders_mod_26() {
    let v = json(&negacode(&[
        "coset-leaders",
        "--q",
        "5",
        "--modulus",
        "26",
        "--top",
        "3",
    ]));
    let leaders: Vec<u64> = v["leaders"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["leader"].as_u64().unwrap())
        .collect();
    assert_eq!(leaders, [13, 7, 3]);
}

#[test]
fn construct_reports_dimension() {
    let v = json(&negacode(&[
        "construct",
        "--q",
        "3",
        "--n",
        "40",
        "--delta",
        "6",
    ]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["dimension"], 28);
    assert_eq!(v["length_kind"], "minus");
    assert_eq!(v["m"], 4);
    assert_eq!(v["generator"].as_array().unwrap().len(), 13);
}

#[test]
fn distance_is_exact_and_thread_independent() {
    let args = ["distance", "--q", "3", "--n", "41", "--delta", "2"];
    let one = negacode(&[&args[..], &["--threads", "1"]].concat());
    let two = negacode(&[&args[..], &["--threads", "2"]].concat());
    assert_eq!(one.stdout, two.stdout);
    let v = json(&one);
    assert_eq!(v["dimension"], 33);
    assert_eq!(v["distance"]["exact"], true);
    assert_eq!(v["distance"]["lower"]["value"], 5);
    let witness = v["distance"]["witness"].as_array().unwrap();
    assert_eq!(witness.iter().filter(|s| s.as_u64() != Some(0)).count(), 5);
}

#[test]
fn budget_from_environment_gives_a_bracket() {
    let out = Command::new(env!("CARGO_BIN_EXE_negacode"))
        .args([
            "distance",
            "--q",
            "3",
            "--n",
            "121",
            "--delta",
            "6",
            "--strategy",
            "bz",
        ])
        .env("NEGACODE_BUDGET", "10")
        .output()
        .unwrap();
    let v = json(&out);
    let d = &v["distance"];
    assert_eq!(d["exact"], false);
    assert!(d["lower"]["value"].as_u64() <= d["upper"]["value"].as_u64());
}

#[test]
fn bounds_for_parameters() {
    let v = json(&negacode(&[
        "bounds", "--q", "3", "--n", "40", "--k", "28", "--d", "6",
    ]));
    assert_eq!(v["singleton"], 13);
    assert!(v["upper"]["value"].as_u64().unwrap() >= 6);
}

#[test]
fn csv_output_has_a_header() {
    let out = negacode(&[
        "--csv",
        "construct",
        "--q",
        "5",
        "--n",
        "13",
        "--delta",
        "3",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("q,n,delta,b,m,length_kind,dimension,lcd"));
    assert!(lines.next().unwrap().starts_with("5,13,3,0,2,plus,5,true"));
}

#[test]
fn verify_single_claim() {
    let v = json(&negacode(&["verify", "--claim", "mds-plus"]));
    let r = &v.as_array().unwrap()[0];
    assert_eq!(r["claim"], "mds-plus");
    assert_eq!(r["failed"], 0);
}

#[test]
fn examples_reproduce() {
    let v = json(&negacode(&["examples"]));
    assert_eq!(v["failed"], 0);
    assert_eq!(v["skipped"], 0);
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(negacode(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(negacode(&["construct", "--q", "3"]).status.code(), Some(2));
    assert_eq!(
        negacode(&["construct", "--q", "4", "--n", "5", "--delta", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        negacode(&["verify", "--claim", "no-such-claim"])
            .status
            .code(),
        Some(2)
    );
}
