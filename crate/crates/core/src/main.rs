use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use hypertri::config_io::{config_to_json, parse_config};
use hypertri::oracle::{distance_closed, triangle_quadrature_sides, triangle_tangent_angles};
use hypertri::report::{check, run_report, Thresholds};
use hypertri::sampler::sample_config;
use hypertri::solver::{solve_sides, Gauge, SolveRequest};
use hypertri::{radius_angles, relation_residuals, render_svg, triangle_measures, Error, Result, TripleConfig};

#[derive(Parser)]
#[command(name = "hypertri", version, about = "Hyperbolic triangles cut out by three semicircles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a configuration from three circles and print its full report.
    Construct {
        /// Config JSON, or @path to a file containing it.
        #[arg(long)]
        circles: String,
        #[arg(long)]
        out: Option<String>,
        #[arg(long)]
        svg: Option<String>,
    },
    /// Check every residual against its threshold; exit 1 on any violation.
    Verify {
        #[arg(long)]
        circles: String,
        #[arg(long, default_value_t = 1e-10)]
        tol_identity: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol_law: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol_oracle: f64,
    },
    /// Construct a configuration with the given hyperbolic side lengths.
    Solve {
        /// Target sides as a,b,c.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        sides: Vec<f64>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        anchor_x: f64,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        #[arg(long)]
        out: Option<String>,
    },
    /// Draw random valid configurations, one JSON object per line.
    Sample {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// Compare closed-form lengths and angles with the independent oracles.
    Oracle {
        #[arg(long)]
        circles: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn read_circles(arg: &str) -> Result<TripleConfig> {
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?,
        None => arg.to_owned(),
    };
    parse_config(&text)?.to_config()
}

fn emit(text: &str, out: Option<&str>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{path}: {e}"))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Error::InvalidInput(format!("stdout: {e}")))
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn construct(circles: &str, out: Option<&str>, svg: Option<&str>) -> Result<ExitCode> {
    let t = read_circles(circles)?;
    let report = run_report(&t)?;
    if let Some(path) = svg {
        fs::write(path, render_svg(&t)).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?;
    }
    emit(&pretty(&report), out)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(circles: &str, th: Thresholds) -> Result<ExitCode> {
    for (name, v) in [("identity", th.identity), ("law", th.law), ("oracle", th.oracle)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::InvalidInput(format!("{name} tolerance {v} must be positive")));
        }
    }
    let t = read_circles(circles)?;
    let outcome = match run_report(&t) {
        Ok(report) => {
            let violations = check(&report, &th);
            json!({
                "pass": violations.is_empty(),
                "violations": violations,
                "max_identity": report.max_identity(),
                "max_law": report.max_law(),
                "max_oracle": report.max_oracle(),
            })
        }
        Err(e) => {
            let relations = relation_residuals(&t);
            json!({
                "pass": false,
                "error": e.to_string(),
                "max_identity": relations.max(),
                "relations": relations,
            })
        }
    };
    emit(&pretty(&outcome), None)?;
    Ok(if outcome["pass"] == json!(true) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn solve(sides: &[f64], anchor_x: f64, scale: f64, out: Option<&str>) -> Result<ExitCode> {
    let [a, b, c] = sides else {
        return Err(Error::InvalidInput(format!("--sides needs exactly three values, got {}", sides.len())));
    };
    let req = SolveRequest { gauge: Gauge { scale, anchor_x }, ..SolveRequest::new(*a, *b, *c) };
    let t = solve_sides(&req)?;
    emit(&pretty(&run_report(&t)?), out)?;
    Ok(ExitCode::SUCCESS)
}

fn sample(seed: u64, count: usize, out: Option<&str>) -> Result<ExitCode> {
    let batch = sample_config(seed, count)?;
    let mut text = String::new();
    for t in &batch.configs {
        text.push_str(&config_to_json(t));
        text.push('\n');
    }
    emit(&text, out)?;
    eprintln!(
        "{} configurations, {} attempts, rejection rate {:.4}",
        batch.configs.len(),
        batch.attempts,
        batch.rejection_rate()
    );
    Ok(ExitCode::SUCCESS)
}

fn oracle(circles: &str, tol: f64) -> Result<ExitCode> {
    let t = read_circles(circles)?;
    t.validate()?;
    let m = triangle_measures(&radius_angles(&t)?)?;
    let quad = triangle_quadrature_sides(&t, tol)?;
    let closed = [m.side_a.length, m.side_b.length, m.side_c.length];
    let chord = [
        distance_closed(&t.vertex_b, &t.vertex_c)?,
        distance_closed(&t.vertex_a, &t.vertex_c)?,
        distance_closed(&t.vertex_a, &t.vertex_b)?,
    ];
    let tangent = triangle_tangent_angles(&t)?;
    let formula = [m.alpha, m.beta, m.delta];
    let sides: Vec<_> = ["a", "b", "c"]
        .iter()
        .enumerate()
        .map(|(i, name)| {
            json!({
                "side": name,
                "closed_form": closed[i],
                "quadrature": quad[i],
                "point_distance": chord[i],
                "quadrature_delta": (closed[i] - quad[i].value).abs(),
                "distance_delta": (closed[i] - chord[i]).abs(),
            })
        })
        .collect();
    let angles: Vec<_> = ["alpha", "beta", "delta"]
        .iter()
        .enumerate()
        .map(|(i, name)| {
            json!({
                "angle": name,
                "formula": formula[i],
                "tangent": tangent[i],
                "delta": (formula[i] - tangent[i]).abs(),
            })
        })
        .collect();
    emit(&pretty(&json!({ "tolerance": tol, "sides": sides, "angles": angles })), None)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct { circles, out, svg } => construct(&circles, out.as_deref(), svg.as_deref()),
        Command::Verify { circles, tol_identity, tol_law, tol_oracle } => {
            verify(&circles, Thresholds { identity: tol_identity, law: tol_law, oracle: tol_oracle })
        }
        Command::Solve { sides, anchor_x, scale, out } => solve(&sides, anchor_x, scale, out.as_deref()),
        Command::Sample { seed, count, out } => sample(seed, count, out.as_deref()),
        Command::Oracle { circles, tol } => oracle(&circles, tol),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
