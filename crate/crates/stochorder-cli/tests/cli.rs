use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stochorder"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const POINT_HALF: &str = r#"{"type":"pointmass","c":0.5}"#;
const FAIR_COIN: &str = r#"{"type":"discrete","atoms":[0,1],"probs":[0.5,0.5]}"#;
const PARETO_HALF: &str = r#"{"type":"pareto","alpha":0.5}"#;
const NEG_PARETO_HALF: &str =
    r#"{"type":"affine","a":-1,"b":0,"base":{"type":"pareto","alpha":0.5}}"#;

#[test]
fn check_holds_exits_zero() {
    let out = run(&["check", "cx", POINT_HALF, FAIR_COIN]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["verdict"]["result"]["kind"], "holds");
    assert_eq!(v["verdict"]["certification"]["level"], "exact");
}

#[test]
fn check_fails_exits_one_with_zero_witness() {
    let out = run(&["check", "cx", PARETO_HALF, NEG_PARETO_HALF]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["verdict"]["result"]["kind"], "fails");
    assert_eq!(v["verdict"]["result"]["witness"]["param"], 0.0);
}

#[test]
fn check_malformed_json_exits_64() {
    let out = run(&["check", "cx", r#"{"type":"nope"}"#, FAIR_COIN]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn check_unknown_order_exits_64() {
    let out = run(&["check", "zzz", POINT_HALF, FAIR_COIN]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn spec_can_come_from_a_file() {
    let dir = std::env::temp_dir().join(format!("stochorder-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x.json");
    std::fs::write(&path, POINT_HALF).unwrap();
    let out = run(&["check", "cx", path.to_str().unwrap(), FAIR_COIN]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn curves_emits_two_blocks_of_grid_n_rows() {
    let u = r#"{"type":"uniform01"}"#;
    let out = run(&["curves", u, u, "--grid-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10); // 2 headers + 2 x 4 rows
    assert_eq!(lines[0], "p,lower_tail_X,lower_tail_Y,upper_tail_X,upper_tail_Y");
    assert_eq!(lines[5], "w,slp_X,slp_Y,slm_X,slm_Y");
    for row in lines[1..5].iter().chain(&lines[6..10]) {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols.len(), 5);
        // identical laws: X and Y columns match
        assert_eq!(cols[1], cols[2]);
        assert_eq!(cols[3], cols[4]);
    }
}

#[test]
fn curves_marks_infinite_tails() {
    let out = run(&["curves", PARETO_HALF, PARETO_HALF, "--grid-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for row in text.lines().skip(1).take(3) {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols[3], "inf", "infinite-mean upper tail: {row}");
        assert_eq!(cols[4], "inf");
    }
}

#[test]
fn gallery_all_passes_with_seven_reports() {
    let out = run(&["gallery", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["reports"].as_array().unwrap().len(), 7);
    assert_eq!(v["overall"], true);
}

#[test]
fn gallery_single_scenario_passes() {
    let out = run(&["gallery", "example1_simons3d"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gallery_unknown_exits_64() {
    let out = run(&["gallery", "bogus"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn ot_product_on_uniforms() {
    let u = r#"{"type":"uniform01"}"#;
    let out = run(&["ot", u, u, "--cost", "product"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!((v["min"].as_f64().unwrap() - 1.0 / 6.0).abs() < 1e-6);
    assert!((v["max"].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-6);
}

#[test]
fn ot_unknown_cost_exits_64() {
    let u = r#"{"type":"uniform01"}"#;
    let out = run(&["ot", u, u, "--cost", "mystery"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn sm_check_reports_independent_below_comonotonic() {
    let indep = r#"{"axes":[[0,1],[0,1]],"pmf":[[0.25,0.25],[0.25,0.25]]}"#;
    let co = r#"{"axes":[[0,1],[0,1]],"pmf":[[0.5,0],[0,0.5]]}"#;
    let out = run(&["sm-check", indep, co]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["supermodular"]["kind"], "holds");
    assert_eq!(v["concordance"]["kind"], "holds");
}

#[test]
fn sm_check_fails_exits_one_with_certificate() {
    let indep = r#"{"axes":[[0,1],[0,1]],"pmf":[[0.25,0.25],[0.25,0.25]]}"#;
    let co = r#"{"axes":[[0,1],[0,1]],"pmf":[[0.5,0],[0,0.5]]}"#;
    let out = run(&["sm-check", co, indep]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["supermodular"]["kind"], "fails");
    assert!(v["supermodular"]["certificate"]["gap"].as_f64().unwrap() > 0.0);
}

#[test]
fn coupling_sum_of_comonotonic_pair() {
    let spec = r#"{"type":"comonotonic","marginals":[{"type":"uniform01"},{"type":"uniform01"}]}"#;
    let out = run(&["coupling", spec, "--sum", "--stop-loss", "1.0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!((v["sum"]["mean"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    // E[(S-1)+] = E[(S-1)-] = 1/4 for S = 2U
    assert!((v["stop_loss"]["plus"].as_f64().unwrap() - 0.25).abs() < 1e-6);
    assert!((v["stop_loss"]["minus"].as_f64().unwrap() - 0.25).abs() < 1e-6);
}

#[test]
fn coupling_ct_nonexistence_exits_one() {
    // three coins escaping their minimum with total probability 1.5 > 1
    let spec = r#"{"type":"countermonotonic","marginals":[
        {"type":"discrete","atoms":[0,1],"probs":[0.5,0.5]},
        {"type":"discrete","atoms":[0,1],"probs":[0.5,0.5]},
        {"type":"discrete","atoms":[0,1],"probs":[0.5,0.5]}]}"#;
    let out = run(&["coupling", spec]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["existence"], "not_exists");
}

#[test]
fn tol_env_is_overridden_by_flag() {
    let out = bin()
        .env("STOCHORDER_TOL", "0.5")
        .args(["check", "cx", POINT_HALF, FAIR_COIN, "--tol", "1e-9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["tol"], 1e-9);
}

#[test]
fn tol_env_applies_without_flag() {
    let out = bin()
        .env("STOCHORDER_TOL", "1e-5")
        .args(["check", "cx", POINT_HALF, FAIR_COIN])
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["tol"], 1e-5);
}

#[test]
fn seed_is_echoed() {
    let out = run(&["gallery", "corollary1_simons", "--seed", "123"]);
    let v = stdout_json(&out);
    assert_eq!(v["seed"], 123);
}

#[test]
fn identical_inputs_give_identical_output() {
    let a = run(&["gallery", "prop5_finite_lattice", "--seed", "5"]);
    let b = run(&["gallery", "prop5_finite_lattice", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
}
