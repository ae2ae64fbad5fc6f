//! Python bindings: configurations, measurements, law residuals, oracles, the
//! inverse solver and the sampler.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hypertri::config_io::{config_to_json, parse_config};
use hypertri::report::{check, run_report, Thresholds};
use hypertri::solver::{Gauge, SolveRequest};
use hypertri::{Error, UpperHalfPoint};

fn to_py(e: Error) -> PyErr {
    match e.exit_code() {
        4 => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn point(p: (f64, f64)) -> PyResult<UpperHalfPoint> {
    UpperHalfPoint::new(p.0, p.1).map_err(to_py)
}

/// Three semicircles and the vertices of their curvilinear triangle.
#[pyclass(name = "TripleConfig", module = "pyhypertri", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyTripleConfig {
    inner: hypertri::TripleConfig,
}

#[pymethods]
impl PyTripleConfig {
    /// Builds the configuration from three `(center, radius)` pairs in any order.
    #[new]
    fn new(c1: (f64, f64), c2: (f64, f64), c3: (f64, f64)) -> PyResult<Self> {
        let s = |c: (f64, f64)| hypertri::Semicircle::new(c.0, c.1).map_err(to_py);
        let inner = hypertri::build_triple(s(c1)?, s(c2)?, s(c3)?).map_err(to_py)?;
        Ok(PyTripleConfig { inner })
    }

    /// Parses the JSON config format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = parse_config(text).and_then(|f| f.to_config()).map_err(to_py)?;
        Ok(PyTripleConfig { inner })
    }

    fn to_json(&self) -> String {
        config_to_json(&self.inner)
    }

    /// Circles `a`, `b`, `c` as `(center, radius)` pairs.
    #[getter]
    fn circles(&self) -> [(f64, f64); 3] {
        let t = &self.inner;
        [t.circle_a, t.circle_b, t.circle_c].map(|s| (s.center_x, s.radius))
    }

    /// Vertices `A`, `B`, `C` as `(x, y)` pairs.
    #[getter]
    fn vertices(&self) -> [(f64, f64); 3] {
        self.inner.vertices().map(|v| (v.x, v.y))
    }

    /// The six radius-angles `(a1, a2, b1, b2, c1, c2)`.
    fn radius_angles(&self) -> PyResult<[f64; 6]> {
        Ok(hypertri::radius_angles(&self.inner).map_err(to_py)?.as_array())
    }

    /// Hyperbolic side lengths `(a, b, c)`.
    fn sides(&self) -> PyResult<[f64; 3]> {
        let ra = hypertri::radius_angles(&self.inner).map_err(to_py)?;
        Ok(hypertri::side_lengths(&ra).map_err(to_py)?.lengths())
    }

    /// Interior angles `(alpha, beta, delta)`.
    fn angles(&self) -> PyResult<[f64; 3]> {
        let ra = hypertri::radius_angles(&self.inner).map_err(to_py)?;
        let v = hypertri::vertex_angles(&ra).map_err(to_py)?;
        Ok([v.alpha, v.beta, v.delta])
    }

    /// Full report as a JSON string.
    fn report_json(&self) -> PyResult<String> {
        let r = run_report(&self.inner).map_err(to_py)?;
        Ok(serde_json::to_string(&r).expect("plain data serializes"))
    }

    /// True when every residual family is below its threshold.
    #[pyo3(signature = (tol_identity = 1e-10, tol_law = 1e-9, tol_oracle = 1e-6))]
    fn verify(&self, tol_identity: f64, tol_law: f64, tol_oracle: f64) -> PyResult<bool> {
        let r = run_report(&self.inner).map_err(to_py)?;
        Ok(check(&r, &Thresholds { identity: tol_identity, law: tol_law, oracle: tol_oracle }).is_empty())
    }

    fn svg(&self) -> String {
        hypertri::render_svg(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("TripleConfig({})", self.to_json())
    }
}

/// Configuration with hyperbolic side lengths `a`, `b`, `c`.
#[pyfunction]
#[pyo3(signature = (a, b, c, scale = 1.0, anchor_x = 0.0))]
fn solve_sides(a: f64, b: f64, c: f64, scale: f64, anchor_x: f64) -> PyResult<PyTripleConfig> {
    let req = SolveRequest { gauge: Gauge { scale, anchor_x }, ..SolveRequest::new(a, b, c) };
    Ok(PyTripleConfig { inner: hypertri::solve_sides(&req).map_err(to_py)? })
}

/// `count` random valid configurations, deterministic in `seed`.
#[pyfunction]
fn sample(seed: u64, count: usize) -> PyResult<Vec<PyTripleConfig>> {
    let batch = hypertri::sample_config(seed, count).map_err(to_py)?;
    Ok(batch.configs.into_iter().map(|inner| PyTripleConfig { inner }).collect())
}

/// Half-plane distance between two points.
#[pyfunction]
fn distance(p: (f64, f64), q: (f64, f64)) -> PyResult<f64> {
    hypertri::distance_closed(&point(p)?, &point(q)?).map_err(to_py)
}

/// Arc length on a semicircle between two polar angles, by quadrature.
#[pyfunction]
#[pyo3(signature = (center, radius, theta1, theta2, tol = 1e-9))]
fn arc_length_quadrature(center: f64, radius: f64, theta1: f64, theta2: f64, tol: f64) -> PyResult<f64> {
    let s = hypertri::Semicircle::new(center, radius).map_err(to_py)?;
    Ok(hypertri::geodesic_length_quadrature(&s, theta1, theta2, tol).map_err(to_py)?.value)
}

/// Closed-form arc length between two polar angles.
#[pyfunction]
fn arc_length(theta1: f64, theta2: f64) -> PyResult<f64> {
    Ok(hypertri::arc_hyp(theta1, theta2).map_err(to_py)?.length)
}

#[pyfunction]
fn key_formula_phi(a0: f64, b0: f64) -> PyResult<f64> {
    hypertri::key_formula_phi(a0, b0).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (d, kappa = 1.0))]
fn parallel_angle(d: f64, kappa: f64) -> PyResult<f64> {
    hypertri::parallel_angle(d, kappa).map_err(to_py)
}

#[pymodule]
fn pyhypertri(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTripleConfig>()?;
    m.add_function(wrap_pyfunction!(solve_sides, m)?)?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(arc_length_quadrature, m)?)?;
    m.add_function(wrap_pyfunction!(arc_length, m)?)?;
    m.add_function(wrap_pyfunction!(key_formula_phi, m)?)?;
    m.add_function(wrap_pyfunction!(parallel_angle, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pyo3::types::PyModule;

    #[test]
    fn module_round_trip() {
        Python::initialize();
        Python::attach(|py| {
            let m = PyModule::new(py, "pyhypertri").unwrap();
            pyhypertri(&m).unwrap();
            let t = m.getattr("TripleConfig").unwrap().call1(((-2.0, 3.0), (0.0, 2.0), (2.0, 3.0))).unwrap();
            let sides: [f64; 3] = t.call_method0("sides").unwrap().extract().unwrap();
            assert!((sides[0] - sides[2]).abs() < 1e-12);
            assert!(t.call_method0("verify").unwrap().extract::<bool>().unwrap());
            let err = m.getattr("solve_sides").unwrap().call1((1.0, 1.0, 2.5)).unwrap_err();
            assert!(err.is_instance_of::<PyValueError>(py));
        });
    }
}
