use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ca-forge"))
        .args(args)
        .env_remove("CA_FORGE_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn regseq_cubic() {
    let o = run(&["regseq", "--n", "3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("# ca-forge"));
    assert!(out.contains("# command: regseq"));
    assert!(out.contains("# field: QQ"));
    assert!(out.contains("9/9 tuples regular"));
}

#[test]
fn hasse_schmidt_univariate() {
    let o = run(&["hs", "--uni", "X^3", "--i", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().last(), Some("3*X"));
}

#[test]
fn hasse_schmidt_multivariate_json() {
    let o = run(&["hs", "--poly", "x1*x2*x3", "--i", "1", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["result"], "x1*x2 + x1*x3 + x2*x3");
    assert_eq!(v["config"]["command"], "hs");
}

#[test]
fn degree_two_search_is_empty() {
    let o = run(&["search", "--n", "2", "--p", "7", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["search"]["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["nonsense"])), 2);
    assert_eq!(code(&run(&["regseq", "--n", "3", "--frobnicate"])), 2);
    assert_eq!(code(&run(&["regseq", "--n", "3", "--p", "4"])), 2);
    assert_eq!(code(&run(&["search", "--n", "3"])), 2);
    assert_eq!(code(&run(&["regseq", "--n", "3", "--p", "2"])), 1);
    assert_eq!(code(&run(&["regseq", "--n", "4", "--budget", "1"])), 3);
    assert_eq!(code(&run(&["search", "--n", "5", "--p", "13", "--budget", "100"])), 3);
    assert_eq!(code(&run(&["mainprop", "--n", "3", "--budget", "1"])), 3);
    assert_eq!(code(&run(&["gb", "--polys", "x1^2*x2 - x3, x1*x2^2 - x1, x2*x3^2 - x2 + x1", "--budget", "1"])), 3);
}

#[test]
fn budget_exhaustion_still_reports() {
    let o = run(&["regseq", "--n", "4", "--budget", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "budget_exhausted");
    assert_eq!(v["report"]["verdict"], "inconclusive");
}

#[test]
fn identical_inputs_give_identical_bytes() {
    for args in [
        &["regseq", "--n", "4", "--json"][..],
        &["ca-check", "--random", "20", "--n", "4", "--p", "3", "--seed", "11", "--json"],
        &["fibers", "--n", "3", "--alphas", "0,1/2,2/3"],
        &["badprimes", "--n", "3", "--p", "7"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn worker_count_does_not_change_the_report() {
    let a: serde_json::Value = serde_json::from_slice(&run(&["mainprop", "--n", "3", "--json", "--workers", "1"]).stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&run(&["mainprop", "--n", "3", "--json", "--workers", "3"]).stdout).unwrap();
    assert_eq!(a["report"], b["report"]);
}

#[test]
fn seed_changes_random_checks() {
    let a = run(&["ca-check", "--random", "10", "--n", "4", "--p", "5", "--seed", "1", "--json"]);
    let b = run(&["ca-check", "--random", "10", "--n", "4", "--p", "5", "--seed", "2", "--json"]);
    let ra: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let rb: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_ne!(ra["report"], rb["report"]);
}

#[test]
fn out_flag_and_cache_env() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("disc.json");
    let o = Command::new(env!("CARGO_BIN_EXE_ca-forge"))
        .args(["disc", "--n", "3", "--json", "--out", out.to_str().unwrap()])
        .env("CA_FORGE_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert!(dir.path().join("disc_n3.json").exists());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["report"]["entries"].as_array().unwrap().len(), 2);
    assert_eq!(v["report"]["entries"][0]["weighted_degree"], 6);
    assert_eq!(v["config"]["cache"], dir.path().to_str().unwrap());
}

#[test]
fn geometry_and_gb_round_trip() {
    let o = run(&["geom", "--n", "3", "--tuple", "3,3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let gens: Vec<String> = v["report"]["generators"].as_array().unwrap().iter().map(|g| g.as_str().unwrap().to_string()).collect();
    assert_eq!(gens, vec!["x1*x2", "x1 + x2"]);
    let list = serde_json::to_string(&gens).unwrap();
    let o = run(&["gb", "--polys", &list, "--n", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["dimension"], 0);
}

#[test]
fn dsub_verification() {
    let o = run(&["dsub", "--shape", "2,1", "--level", "2", "--verify", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["verified"], true);
    assert_eq!(v["report"]["components"][0]["indices"], serde_json::json!([1]));
}

#[test]
fn fibers_and_jc() {
    let o = run(&["fibers", "--n", "3", "--tuple", "1,1", "--alphas", "1/2,2/3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let e = &v["report"]["fibers"][0]["entries"];
    assert_eq!(e[0]["singular"], true);
    assert_eq!(e[1]["dimension"], 0);
    let o = run(&["jc", "--n", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verified level: 3"));
}

#[test]
fn field_flag_forms() {
    let a = stdout(&run(&["geom", "--n", "3", "--tuple", "1,2", "--field", "gf", "--p", "5"]));
    let b = stdout(&run(&["geom", "--n", "3", "--tuple", "1,2", "--field", "GF(5)"]));
    let c = stdout(&run(&["geom", "--n", "3", "--tuple", "1,2", "--p", "5"]));
    assert_eq!(a, b);
    assert_eq!(b, c);
    assert!(a.contains("# field: GF(5)"));
    assert_eq!(code(&run(&["disc", "--n", "3", "--p", "5"])), 2);
}
