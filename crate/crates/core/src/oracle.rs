//! Formula-free cross-checks: arc length by numerical integration of the
//! half-plane line element, point-to-point distance in closed form, and angles
//! measured from tangent vectors.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Semicircle, TripleConfig, UpperHalfPoint};

/// Evaluation cap for [`geodesic_length_quadrature`].
pub const MAX_EVALUATIONS: usize = 1_000_000;
const MAX_DEPTH: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

struct Simpson<F: Fn(f64) -> f64> {
    f: F,
    evaluations: usize,
    error: f64,
}

impl<F: Fn(f64) -> f64> Simpson<F> {
    fn eval(&mut self, x: f64) -> Result<f64> {
        self.evaluations += 1;
        if self.evaluations > MAX_EVALUATIONS {
            return Err(Error::QuadratureBudget(MAX_EVALUATIONS));
        }
        Ok((self.f)(x))
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse(&mut self, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> Result<f64> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = self.eval(lm)?;
        let frm = self.eval(rm)?;
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth >= MAX_DEPTH || delta.abs() <= 15.0 * tol {
            self.error += delta.abs() / 15.0;
            return Ok(left + right + delta / 15.0);
        }
        Ok(self.recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)?
            + self.recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)?)
    }
}

/// Adaptive Simpson integration of `f` over `[a, b]` with absolute tolerance `tol`.
pub fn adaptive_simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    if a == b {
        return Ok(QuadratureResult { value: 0.0, error_estimate: 0.0, evaluations: 0 });
    }
    let mut s = Simpson { f, evaluations: 0, error: 0.0 };
    let fa = s.eval(a)?;
    let fb = s.eval(b)?;
    let m = 0.5 * (a + b);
    let fm = s.eval(m)?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let value = s.recurse(a, b, fa, fm, fb, whole, tol, 0)?;
    Ok(QuadratureResult { value, error_estimate: s.error, evaluations: s.evaluations })
}

/// Hyperbolic length of the arc of `s` between polar angles `theta1` and `theta2`,
/// by integrating `ds / y`, which on the circle is `dθ / sin θ`.
pub fn geodesic_length_quadrature(s: &Semicircle, theta1: f64, theta2: f64, tol: f64) -> Result<QuadratureResult> {
    s.check()?;
    if !(1e-13..=1e-4).contains(&tol) {
        return Err(Error::Domain(format!("tolerance {tol:e} outside [1e-13, 1e-4]")));
    }
    for t in [theta1, theta2] {
        if !(t > 1e-9 && t < PI - 1e-9) {
            return Err(Error::NearAxis(format!("endpoint angle {t} within 1e-9 of the axis")));
        }
    }
    let (lo, hi) = if theta1 <= theta2 { (theta1, theta2) } else { (theta2, theta1) };
    // ds = r dθ and y = r sin θ; the radius cancels but is kept to mirror the line element.
    let r = s.radius;
    adaptive_simpson(|t| r / (r * t.sin()), lo, hi, tol)
}

/// Half-plane distance `arccosh(1 + |p1 - p2|² / (2 y1 y2))`.
pub fn distance_closed(p1: &UpperHalfPoint, p2: &UpperHalfPoint) -> Result<f64> {
    p1.check()?;
    p2.check()?;
    let chord = p1.euclidean_distance(p2);
    Ok(2.0 * (chord / (2.0 * (p1.y * p2.y).sqrt())).asinh())
}

fn on_circle(s: &Semicircle, p: &UpperHalfPoint, what: &str) -> Result<()> {
    let r = s.incidence_residual(*p);
    if r > 1e-10 {
        return Err(Error::Precondition(format!("{what} is off its circle (relative {r:e})")));
    }
    Ok(())
}

/// Unit tangent of `s` at `from`, pointing along the upper arc toward `toward`.
fn tangent_toward(s: &Semicircle, from: &UpperHalfPoint, toward: &UpperHalfPoint) -> (f64, f64) {
    let t0 = s.polar_angle(*from);
    let t1 = s.polar_angle(*toward);
    let dir = if t1 > t0 { 1.0 } else { -1.0 };
    (-dir * t0.sin(), dir * t0.cos())
}

/// Angle at `vertex` between the arcs of `s1` and `s2` that run toward `toward1`
/// (on `s1`) and `toward2` (on `s2`).
///
/// With the two neighbouring triangle vertices as targets this is the interior
/// angle of the curvilinear triangle; exchanging the two arcs leaves it unchanged.
pub fn tangent_angle(
    vertex: &UpperHalfPoint,
    s1: &Semicircle,
    toward1: &UpperHalfPoint,
    s2: &Semicircle,
    toward2: &UpperHalfPoint,
) -> Result<f64> {
    on_circle(s1, vertex, "vertex")?;
    on_circle(s2, vertex, "vertex")?;
    on_circle(s1, toward1, "first target")?;
    on_circle(s2, toward2, "second target")?;
    let (ux, uy) = tangent_toward(s1, vertex, toward1);
    let (vx, vy) = tangent_toward(s2, vertex, toward2);
    Ok((ux * vy - uy * vx).abs().atan2(ux * vx + uy * vy))
}

/// Interior angles `(α, β, δ)` of a configuration measured from tangent vectors.
pub fn triangle_tangent_angles(t: &TripleConfig) -> Result<[f64; 3]> {
    let (a, b, c) = (t.vertex_a, t.vertex_b, t.vertex_c);
    Ok([
        tangent_angle(&a, &t.circle_b, &c, &t.circle_c, &b)?,
        tangent_angle(&b, &t.circle_a, &c, &t.circle_c, &a)?,
        tangent_angle(&c, &t.circle_a, &b, &t.circle_b, &a)?,
    ])
}

/// Side lengths `(a, b, c)` of a configuration by quadrature along each circle.
pub fn triangle_quadrature_sides(t: &TripleConfig, tol: f64) -> Result<[QuadratureResult; 3]> {
    let arc = |s: &Semicircle, p: &UpperHalfPoint, q: &UpperHalfPoint| {
        geodesic_length_quadrature(s, s.polar_angle(*p), s.polar_angle(*q), tol)
    };
    Ok([
        arc(&t.circle_a, &t.vertex_b, &t.vertex_c)?,
        arc(&t.circle_b, &t.vertex_a, &t.vertex_c)?,
        arc(&t.circle_c, &t.vertex_a, &t.vertex_b)?,
    ])
}
