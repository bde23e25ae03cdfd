use std::process::Command;

use quotdt_cli::main_with;
use quotdt_core::ToricSpace;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["quotdt"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "json"]);
    let (code, out, err) = main_with(full, None);
    assert!(err.is_empty() || code != 0, "{err}");
    let v = if out.is_empty() { Value::Null } else { serde_json::from_str(&out).expect("json output") };
    (code, v)
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

fn chart_arg(c: &[[i64; 3]; 3]) -> String {
    c.iter().map(|r| format!("{},{},{}", r[0], r[1], r[2])).collect::<Vec<_>>().join(";")
}

#[test]
fn toric_p3_series() {
    let (code, v) = run(&["toric", "--space", "p3", "--bundle", "O", "--nmax", "2"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["values"]["series"]), ["1", "20", "150"]);
    assert_eq!(strings(&v["values"]["closed_formula"]), ["1", "20", "150"]);
    assert_eq!(v["verdicts"]["q^2"], "MATCH");
    assert_eq!(strings(&v["values"]["fixed_points"]), ["1", "4", "18"]);
    assert!(v["elapsed_ms"].is_null());
}

#[test]
fn toric_trivial_order() {
    let (code, v) = run(&["toric", "--space", "p3", "--bundle", "O", "--nmax", "0"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["values"]["series"]), ["1"]);
    assert_eq!(v["verdicts"]["q^0"], "MATCH");
}

#[test]
fn toric_rank_two() {
    let (code, v) = run(&["toric", "--space", "p3", "--bundle", "O,O1", "--nmax", "1"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["values"]["series"]), ["1", "-40"]);
    assert_eq!(v["inputs"]["rank"], 2);
}

#[test]
fn inline_charts_and_lines() {
    let p3 = ToricSpace::builtin("p3").unwrap();
    let charts: Vec<String> = p3.charts.iter().map(chart_arg).collect();
    let mut args = vec!["toric", "--nmax", "1"];
    for c in &charts {
        args.extend_from_slice(&["--chart", c]);
    }
    let (code, v) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(v["inputs"]["space"], "inline");
    assert_eq!(strings(&v["values"]["series"]), ["1", "20"]);

    // O(1) written out chart by chart
    let o1 = p3.line_bundle(&[1]).unwrap();
    let line = o1.iter().map(|m| format!("{},{},{}", m[0], m[1], m[2])).collect::<Vec<_>>().join(";");
    args.extend_from_slice(&["--line", &line]);
    let (code, v) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["values"]["series"]), ["1", "20"]);
}

#[test]
fn inconsistent_chart_data_is_an_invariant_failure() {
    let mut charts = ToricSpace::builtin("p3").unwrap().charts;
    charts[3] = [[1, 0, 0], [0, 1, 0], [1, 1, 1]];
    let args: Vec<String> = charts.iter().map(chart_arg).collect();
    let mut full = vec!["quotdt", "toric", "--nmax", "1"];
    for c in &args {
        full.extend_from_slice(&["--chart", c]);
    }
    let (code, _, err) = main_with(full, None);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn vertex_tables() {
    let (code, v) = run(&["vertex", "--nmax", "1"]);
    assert_eq!(code, 0);
    let points = v["values"]["points"].as_array().unwrap();
    assert_eq!(points[0]["character"], "0");
    assert_eq!(points[0]["euler_inverse"], "1");
    assert_eq!(points[1]["terms"], 6);
    assert_eq!(v["verdicts"]["symmetry"], "PASS");
    assert_eq!(v["verdicts"]["vd_zero"], "PASS");

    let (code, v) = run(&["vertex", "--nmax", "1", "--rank", "2"]);
    assert_eq!(code, 0);
    let points = v["values"]["points"].as_array().unwrap();
    assert_eq!(points.len(), 3);
    let ch = points[1]["character"].as_str().unwrap();
    assert!(ch.contains("u1") && ch.contains("u2"), "{ch}");
}

#[test]
fn chern_and_cobordism() {
    let (code, v) = run(&["chern", "--space", "p2xp1"]);
    assert_eq!(code, 0);
    assert_eq!(v["values"]["c3_t_omega"], "-18");
    assert_eq!(v["values"]["c3_localization"], "-18");

    let (code, v) = run(&["chern", "--space", "quadric"]);
    assert_eq!(code, 0);
    assert_eq!(v["values"]["c3_t_omega"], "-20");

    let (code, v) = run(&["cobordism", "--builtin", "quadric-dpr"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["chern_numbers"], "PASS");
    assert_eq!(v["verdicts"]["exponents"], "PASS");

    let (code, v) = run(&["cobordism", "--builtin", "quadric-two-p3"]);
    assert_eq!(code, 2);
    assert_eq!(v["verdicts"]["exponents"], "FAIL");

    let (code, v) = run(&["cobordism", "--space", "p3", "--bundle", "O2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdicts"]["reconstruction"], "PASS");

    for (r, n) in [("1", 7), ("2", 9), ("3", 10)] {
        let (code, v) = run(&["cobordism", "--rank", r]);
        assert_eq!(code, 0);
        assert_eq!(v["values"]["pairs"].as_array().unwrap().len(), n);
        assert_eq!(v["verdicts"]["invertible"], "PASS");
    }
}

#[test]
fn macmahon_coefficients() {
    let (code, v) = run(&["macmahon", "--nmax", "4"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["values"]["coefficients"]), ["1", "1", "3", "6", "13"]);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["quotdt", "bogus"],
        vec!["quotdt"],
        vec!["quotdt", "toric", "--trials", "1"],
        vec!["quotdt", "toric", "--space", "p4"],
        vec!["quotdt", "toric", "--bundle", "L1"],
        vec!["quotdt", "toric", "--space", "p2xp1", "--bundle", "O(1,2,3)"],
        vec!["quotdt", "chern", "--space", "nowhere"],
        vec!["quotdt", "cobordism", "--builtin", "nothing"],
        vec!["quotdt", "toric", "--config", "/nonexistent/run.conf"],
    ] {
        let (code, out, err) = main_with(args.clone(), None);
        assert_eq!(code, 1, "{args:?}: {out}{err}");
        assert!(!err.is_empty());
    }
    assert_eq!(main_with(["quotdt", "--help"], None).0, 0);
}

#[test]
fn config_file_and_threads() {
    let dir = std::env::temp_dir().join(format!("quotdt-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.conf");
    std::fs::write(&path, "# p1 cubed\nspace=p1cubed\nnmax=2\nseed=17\nformat=json\nthreads=2\n").unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = main_with(["quotdt", "toric", "--config", p], None);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["seed"], 17);
    assert_eq!(strings(&v["values"]["series"]), ["1", "16", "88"]);
    let (_, narrowed, _) = main_with(["quotdt", "toric", "--config", p, "--nmax", "1", "--threads", "1"], None);
    let w: Value = serde_json::from_str(&narrowed).unwrap();
    assert_eq!(strings(&w["values"]["series"]), ["1", "16"]);
    let (_, via_env, _) = main_with(["quotdt", "toric", "--space", "p1cubed", "--nmax", "2", "--seed", "17", "--format", "json"], Some("3"));
    assert_eq!(via_env, out);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn timing_is_opt_in() {
    let (_, out, _) = main_with(["quotdt", "macmahon", "--format", "json", "--timing"], None);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_quotdt");
    let ok = Command::new(bin).args(["macmahon", "--nmax", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("1, 1, 3, 6"));
    let usage = Command::new(bin).args(["toric", "--nmax", "x"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
    let failed = Command::new(bin).args(["cobordism", "--builtin", "quadric-two-p3"]).output().unwrap();
    assert_eq!(failed.status.code(), Some(2));
    let threads = Command::new(bin).args(["macmahon", "--format", "json"]).env("QUOTDT_THREADS", "0").output().unwrap();
    assert_eq!(threads.status.code(), Some(1));
}
