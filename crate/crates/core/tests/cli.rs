//! End-to-end checks of the command-line tool: output formats and exit codes.

use std::process::{Command, Output};

use hypertri::config_io::{parse_config, ConfigFile};
use hypertri::report::Report;

const EXAMPLE: &str =
    r#"{"circles":{"a":{"center":2,"radius":3},"b":{"center":0,"radius":2},"c":{"center":-2,"radius":3}}}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypertri")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn construct_prints_a_parsable_report() {
    let o = run(&["construct", "--circles", EXAMPLE]);
    assert_eq!(code(&o), 0);
    let report: Report = serde_json::from_slice(&o.stdout).unwrap();
    assert!(report.max_law() < 1e-9 && report.max_oracle() < 1e-7);
    assert_eq!((report.config.circle_c.center_x, report.config.circle_b.center_x), (-2.0, 0.0));
}

#[test]
fn construct_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("circles.json");
    std::fs::write(&path, EXAMPLE).unwrap();
    let out = dir.path().join("report.json");
    let svg = dir.path().join("fig.svg");
    let o = run(&[
        "construct",
        "--circles",
        &format!("@{}", path.display()),
        "--out",
        out.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let _: Report = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    let golden = include_str!("golden/example.svg");
    assert_eq!(std::fs::read_to_string(svg).unwrap(), golden);
}

#[test]
fn verify_passes_clean_and_fails_tampered() {
    assert_eq!(code(&run(&["verify", "--circles", EXAMPLE])), 0);

    let t = parse_config(EXAMPLE).unwrap().to_config().unwrap();
    let mut f = ConfigFile::full(&t);
    f.vertices.as_mut().unwrap().c.x += 1e-3;
    let tampered = serde_json::to_string(&f).unwrap();
    let o = run(&["verify", "--circles", &tampered]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], false);
    assert!(v["max_identity"].as_f64().unwrap() > 1e-4);
}

#[test]
fn verify_thresholds_are_overridable() {
    let o = run(&["verify", "--circles", EXAMPLE, "--tol-oracle", "1e-20"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["violations"][0]["family"], "oracle");
    assert_eq!(code(&run(&["verify", "--circles", EXAMPLE, "--tol-law", "-1"])), 2);
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(code(&run(&["verify", "--circles", "not json"])), 2);
    assert_eq!(code(&run(&["construct", "--circles", "@/nonexistent/file.json"])), 2);
    assert_eq!(code(&run(&["solve", "--sides", "1,2"])), 2);
    assert_eq!(code(&run(&["solve", "--sides", "1,-2,2"])), 2);
    let bad_radius = EXAMPLE.replace("\"radius\":2", "\"radius\":-2");
    assert_eq!(code(&run(&["construct", "--circles", &bad_radius])), 2);
}

#[test]
fn degenerate_and_infeasible_exit_3() {
    assert_eq!(code(&run(&["solve", "--sides", "1,1,2.5"])), 3);
    let apart = r#"{"circles":{"a":{"center":9,"radius":1},"b":{"center":0,"radius":2},"c":{"center":-2,"radius":3}}}"#;
    assert_eq!(code(&run(&["construct", "--circles", apart])), 3);
}

#[test]
fn solve_round_trips() {
    let o = run(&["solve", "--sides", "1.0,1.2,1.5", "--anchor-x", "-0.5", "--scale", "2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r: Report = serde_json::from_slice(&o.stdout).unwrap();
    let m = r.measures;
    assert!((m.side_a.length - 1.0).abs() < 1e-8);
    assert!((m.side_b.length - 1.2).abs() < 1e-8);
    assert!((m.side_c.length - 1.5).abs() < 1e-8);
    assert!((r.config.vertex_a.x + 0.5).abs() < 1e-9 && (r.config.vertex_a.y - 2.0).abs() < 1e-9);
}

#[test]
fn sample_is_deterministic_jsonl() {
    let a = run(&["sample", "--seed", "42", "--count", "20"]);
    let b = run(&["sample", "--seed", "42", "--count", "20"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().count(), 20);
    for line in text.lines() {
        parse_config(line).unwrap().to_config().unwrap().validate().unwrap();
    }
    let c = run(&["sample", "--seed", "43", "--count", "1"]);
    assert_ne!(text.lines().next().unwrap().as_bytes(), c.stdout.trim_ascii_end());
    assert_eq!(code(&run(&["sample", "--seed", "1", "--count", "0"])), 2);
}

#[test]
fn oracle_agrees_with_formulas() {
    let o = run(&["oracle", "--circles", EXAMPLE, "--tol", "1e-10"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for side in v["sides"].as_array().unwrap() {
        assert!(side["quadrature_delta"].as_f64().unwrap() < 1e-8);
        assert!(side["distance_delta"].as_f64().unwrap() < 1e-12);
    }
    for angle in v["angles"].as_array().unwrap() {
        assert!(angle["delta"].as_f64().unwrap() < 1e-9);
    }
    assert_eq!(code(&run(&["oracle", "--circles", EXAMPLE, "--tol", "1e-2"])), 2);
}
