//! Inverse construction: a configuration of three semicircles whose curvilinear
//! triangle has prescribed hyperbolic side lengths.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::arc_trig::side_lengths;
use crate::error::{Error, Result};
use crate::geometry::{build_triple, radius_angles, Semicircle, TripleConfig, UpperHalfPoint};

/// Side-length agreement demanded of the polished configuration.
pub const POLISH_TARGET: f64 = 1e-10;
/// Iteration cap of the polishing loop.
pub const MAX_POLISH_ITERATIONS: usize = 100;
/// Number of rotations tried around the anchored vertex.
const ROTATION_STEPS: usize = 720;
/// Smallest acceptable `|Δx| / chord` over the three vertex pairs.
const MIN_SLANT: f64 = 1e-6;

/// The isometry pinning of the inverse problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Gauge {
    pub scale: f64,
    pub anchor_x: f64,
}

impl Default for Gauge {
    fn default() -> Self {
        Gauge { scale: 1.0, anchor_x: 0.0 }
    }
}

/// Target hyperbolic side lengths `a = |BC|`, `b = |AC|`, `c = |AB|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveRequest {
    pub target_a: f64,
    pub target_b: f64,
    pub target_c: f64,
    #[serde(default)]
    pub gauge: Gauge,
}

impl SolveRequest {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        SolveRequest { target_a: a, target_b: b, target_c: c, gauge: Gauge::default() }
    }

    pub fn targets(&self) -> [f64; 3] {
        [self.target_a, self.target_b, self.target_c]
    }

    pub fn check(&self) -> Result<()> {
        let [a, b, c] = self.targets();
        for (name, v) in [("a", a), ("b", b), ("c", c)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Domain(format!("target side {name} = {v} must be positive")));
            }
        }
        if !(self.gauge.scale.is_finite() && self.gauge.scale > 0.0) {
            return Err(Error::Domain(format!("gauge scale {} must be positive", self.gauge.scale)));
        }
        if !self.gauge.anchor_x.is_finite() {
            return Err(Error::Domain("gauge anchor_x must be finite".into()));
        }
        if !(a < b + c && b < a + c && c < a + b) {
            return Err(Error::Infeasible(format!("({a}, {b}, {c}) violates the strict triangle inequality")));
        }
        Ok(())
    }
}

/// Vertex angle at `A` from the three sides (law of cosines I solved for `cos α`).
pub fn angle_from_sides(a: f64, b: f64, c: f64) -> f64 {
    let cos = (b.cosh() * c.cosh() - a.cosh()) / (b.sinh() * c.sinh());
    cos.clamp(-1.0, 1.0).acos()
}

/// Axis-centered circle through two points of the half-plane.
pub fn circle_through(p: &UpperHalfPoint, q: &UpperHalfPoint) -> Result<Semicircle> {
    let dx = q.x - p.x;
    if dx == 0.0 {
        return Err(Error::GaugeDegenerate(
            "two vertices share an abscissa (vertical geodesic); change anchor_x".into(),
        ));
    }
    let center = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * dx);
    let radius = 0.5 * ((center - p.x).hypot(p.y) + (center - q.x).hypot(q.y));
    Semicircle::new(center, radius)
}

/// Point at hyperbolic distance `d` from `(x0, y0)` leaving in direction `theta`
/// (measured from the upward vertical).
fn shoot(x0: f64, y0: f64, d: f64, theta: f64) -> UpperHalfPoint {
    // Rotate i·e^d about i by the elliptic map z -> (cz + s)/(-sz + c), then move i to (x0, y0).
    let (s, c) = (0.5 * theta).sin_cos();
    let (zr, zi) = (0.0, d.exp());
    let (nr, ni) = (c * zr + s, c * zi);
    let (dr, di) = (-s * zr + c, -s * zi);
    let den = dr * dr + di * di;
    let wr = (nr * dr + ni * di) / den;
    let wi = (ni * dr - nr * di) / den;
    UpperHalfPoint { x: x0 + y0 * wr, y: y0 * wi }
}

/// Layout of the triangle for a given rotation about `A` and turning sense.
fn layout(c_len: f64, b_len: f64, alpha: f64, rotation: f64, sense: f64, g: &Gauge) -> [UpperHalfPoint; 3] {
    let a = UpperHalfPoint { x: g.anchor_x, y: g.scale };
    let b = shoot(a.x, a.y, c_len, rotation);
    let c = shoot(a.x, a.y, b_len, rotation + sense * alpha);
    [a, b, c]
}

fn mirror(p: UpperHalfPoint, axis: f64) -> UpperHalfPoint {
    UpperHalfPoint { x: 2.0 * axis - p.x, y: p.y }
}

/// Builds the canonical configuration with the given vertices, mirroring about the
/// anchor if the circle order comes out reversed.
fn assemble(v: [UpperHalfPoint; 3], anchor_x: f64) -> Result<TripleConfig> {
    let [a, b, c] = v;
    let (circle_c, circle_b, circle_a) = (circle_through(&a, &b)?, circle_through(&a, &c)?, circle_through(&b, &c)?);
    let (oc, ob, oa) = (circle_c.center_x, circle_b.center_x, circle_a.center_x);
    if oc < ob && ob < oa {
        build_triple(circle_a, circle_b, circle_c)
    } else if oa < ob && ob < oc {
        assemble([mirror(a, anchor_x), mirror(b, anchor_x), mirror(c, anchor_x)], anchor_x)
    } else {
        Err(Error::NonCanonical("side b is not carried by the middle circle".into()))
    }
}

/// Smallest `|Δx| / chord` over the three vertex pairs: zero for a vertical geodesic.
fn slant(v: &[UpperHalfPoint; 3]) -> f64 {
    let s = |p: &UpperHalfPoint, q: &UpperHalfPoint| (p.x - q.x).abs() / p.euclidean_distance(q);
    s(&v[0], &v[1]).min(s(&v[0], &v[2])).min(s(&v[1], &v[2]))
}

/// Forward sides of a configuration, or `None` if it fails canonical validation.
fn forward(t: &TripleConfig) -> Option<[f64; 3]> {
    let ra = radius_angles(t).ok()?;
    side_lengths(&ra).ok().map(|s| s.lengths())
}

fn mismatch(sides: &[f64; 3], targets: &[f64; 3]) -> f64 {
    sides.iter().zip(targets).map(|(s, t)| (s - t).abs() / t.max(1.0)).fold(0.0, f64::max)
}

/// Chooses the rotation and sense that realize the targets with the least vertical
/// geodesics.
fn best_gauge(alpha: f64, req: &SolveRequest) -> Result<(f64, f64)> {
    let mut best: Option<(f64, f64, f64)> = None;
    for sense in [1.0, -1.0] {
        for k in 0..ROTATION_STEPS {
            let rotation = 2.0 * PI * k as f64 / ROTATION_STEPS as f64;
            let v = layout(req.target_c, req.target_b, alpha, rotation, sense, &req.gauge);
            let score = slant(&v);
            if !(score > MIN_SLANT) || best.is_some_and(|(s, _, _)| s >= score) {
                continue;
            }
            let Ok(t) = assemble(v, req.gauge.anchor_x) else { continue };
            if forward(&t).is_some_and(|s| mismatch(&s, &req.targets()) < 1e-6) {
                best = Some((score, rotation, sense));
            }
        }
    }
    best.map(|(_, r, s)| (r, s)).ok_or_else(|| {
        Error::GaugeDegenerate("no rotation about the anchor gives a canonical, non-vertical layout; change anchor_x or scale".into())
    })
}

/// Constructs a configuration whose side lengths are the requested targets.
///
/// Vertex `A` is pinned at `(anchor_x, scale)`; the rotation about `A` is chosen so
/// that the circles come out in canonical order and no geodesic is vertical. A
/// damped Newton iteration on `(|AB|, |AC|, α)` then removes rounding drift.
pub fn solve_sides(req: &SolveRequest) -> Result<TripleConfig> {
    req.check()?;
    let targets = req.targets();
    let alpha = angle_from_sides(req.target_a, req.target_b, req.target_c);
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Error::Infeasible(format!("vertex angle {alpha} is degenerate")));
    }
    let (rotation, sense) = best_gauge(alpha, req)?;

    let build = |p: &[f64; 3]| -> Option<(TripleConfig, [f64; 3])> {
        let t = assemble(layout(p[0], p[1], p[2], rotation, sense, &req.gauge), req.gauge.anchor_x).ok()?;
        let s = forward(&t)?;
        Some((t, s))
    };
    let residual = |s: &[f64; 3]| [s[0] - targets[0], s[1] - targets[1], s[2] - targets[2]];

    let mut p = [req.target_c, req.target_b, alpha];
    let (mut t, mut s) = build(&p).ok_or_else(|| Error::GaugeDegenerate("initial layout is not canonical".into()))?;
    let mut err = mismatch(&s, &targets);
    for _ in 0..MAX_POLISH_ITERATIONS {
        if err <= POLISH_TARGET {
            return Ok(t);
        }
        let f = residual(&s);
        let mut jac = [[0.0; 3]; 3];
        for j in 0..3 {
            let h = 1e-7 * p[j].abs().max(1.0);
            let mut q = p;
            q[j] += h;
            let (_, sq) = build(&q).ok_or(Error::Convergence { iterations: 0, residual: err })?;
            for i in 0..3 {
                jac[i][j] = (sq[i] - s[i]) / h;
            }
        }
        let Some(step) = solve3(jac, f) else {
            return Err(Error::Convergence { iterations: 0, residual: err });
        };
        let mut lambda = 1.0;
        let mut improved = false;
        while lambda > 1e-4 {
            let q = [p[0] - lambda * step[0], p[1] - lambda * step[1], p[2] - lambda * step[2]];
            if let Some((tq, sq)) = build(&q) {
                let e = mismatch(&sq, &targets);
                if e < err {
                    (p, t, s, err) = (q, tq, sq, e);
                    improved = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if !improved {
            break;
        }
    }
    if err <= POLISH_TARGET {
        Ok(t)
    } else {
        Err(Error::Convergence { iterations: MAX_POLISH_ITERATIONS, residual: err })
    }
}

/// Solves `m x = f` by Cramer's rule.
fn solve3(m: [[f64; 3]; 3], f: [f64; 3]) -> Option<[f64; 3]> {
    let det = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(&m);
    if !(d.abs() > 1e-300) || !d.is_finite() {
        return None;
    }
    let mut out = [0.0; 3];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut mk = m;
        for i in 0..3 {
            mk[i][k] = f[i];
        }
        *slot = det(&mk) / d;
    }
    Some(out)
}
