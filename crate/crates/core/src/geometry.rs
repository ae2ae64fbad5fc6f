//! Euclidean primitives: axis-centered semicircles, their intersections, and the
//! three-circle configuration whose curvilinear triangle carries the hyperbolic
//! measurements.
//!
//! Labeling follows the usual figure: circles are named `c`, `b`, `a` from left to
//! right by center, vertex `A` is `b ∩ c`, `B` is `a ∩ c` and `C` is `a ∩ b`.
//!
//! Radius-angles are the angles at each center between the radius to a vertex and
//! the axis direction pointing at the other centers: the `b` and `c` angles are
//! polar angles from `+x`, the `a` angles are measured from `-x`. With that
//! convention `a1, a2` belong to `C, B`, `b1, b2` to `A, C` and `c1, c2` to `A, B`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::identity_residual;

/// Relative tolerance for a vertex to count as lying on a circle.
pub const INCIDENCE_TOL: f64 = 1e-12;
/// Tolerance used when formula-based center distances are cross-checked.
pub const CENTER_FORMULA_TOL: f64 = 1e-9;

/// A geodesic support: half of a circle centered on the x-axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Semicircle {
    #[serde(rename = "center")]
    pub center_x: f64,
    pub radius: f64,
}

impl Semicircle {
    pub fn new(center_x: f64, radius: f64) -> Result<Self> {
        let s = Semicircle { center_x, radius };
        s.check()?;
        Ok(s)
    }

    pub fn check(&self) -> Result<()> {
        if !self.center_x.is_finite() {
            return Err(Error::Domain(format!("center {} is not finite", self.center_x)));
        }
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return Err(Error::Domain(format!("radius {} must be positive", self.radius)));
        }
        Ok(())
    }

    /// Relative distance of `p` from the circle, `| |p - O| - r | / r`.
    pub fn incidence_residual(&self, p: UpperHalfPoint) -> f64 {
        ((p.x - self.center_x).hypot(p.y) - self.radius).abs() / self.radius
    }

    /// Polar angle (from `+x`) of `p` seen from the center.
    pub fn polar_angle(&self, p: UpperHalfPoint) -> f64 {
        p.y.atan2(p.x - self.center_x)
    }

    pub fn point_at(&self, theta: f64) -> UpperHalfPoint {
        UpperHalfPoint {
            x: self.center_x + self.radius * theta.cos(),
            y: self.radius * theta.sin(),
        }
    }
}

/// A point strictly above the x-axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UpperHalfPoint {
    pub x: f64,
    pub y: f64,
}

impl UpperHalfPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        let p = UpperHalfPoint { x, y };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> Result<()> {
        if !self.x.is_finite() || !self.y.is_finite() || self.y <= 0.0 {
            return Err(Error::Domain(format!(
                "point ({}, {}) is not in the upper half-plane",
                self.x, self.y
            )));
        }
        Ok(())
    }

    pub fn euclidean_distance(&self, other: &UpperHalfPoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Upper intersection of two axis-centered circles.
///
/// Returns `Ok(None)` for disjoint, nested, tangent or concentric pairs and an
/// error when the two circles coincide.
pub fn intersect_semicircles(s1: &Semicircle, s2: &Semicircle) -> Result<Option<UpperHalfPoint>> {
    s1.check()?;
    s2.check()?;
    if s1.center_x == s2.center_x && s1.radius == s2.radius {
        return Err(Error::DegenerateInput(format!(
            "coincident circles (center {}, radius {})",
            s1.center_x, s1.radius
        )));
    }
    let d = s2.center_x - s1.center_x;
    let dist = d.abs();
    let (r1, r2) = (s1.radius, s2.radius);
    if dist == 0.0 || dist >= r1 + r2 || dist <= (r1 - r2).abs() {
        return Ok(None);
    }
    // Radical line: x - x1 = (d² + r1² - r2²) / 2d; y from the product form of Heron.
    let offset = (d * d + (r1 - r2) * (r1 + r2)) / (2.0 * d);
    let h2 = ((r1 + r2) * (r1 + r2) - d * d) * (d * d - (r1 - r2) * (r1 - r2));
    if h2 <= 0.0 {
        return Ok(None);
    }
    let y = h2.sqrt() / (2.0 * dist);
    if y <= 0.0 {
        return Ok(None);
    }
    Ok(Some(UpperHalfPoint { x: s1.center_x + offset, y }))
}

/// The three circles and the three vertices of their curvilinear triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TripleConfig {
    pub circle_a: Semicircle,
    pub circle_b: Semicircle,
    pub circle_c: Semicircle,
    pub vertex_a: UpperHalfPoint,
    pub vertex_b: UpperHalfPoint,
    pub vertex_c: UpperHalfPoint,
}

/// Radii of the labeled circles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Radii {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Which of the two possible vertex orders along the axis the triangle has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// `a1 > a2`, `b1 > b2`, `c1 > c2`: the triangle sits inside circle `b`.
    Direct,
    /// All three orderings reversed: the triangle sits above circle `b`.
    Reversed,
}

impl TripleConfig {
    pub fn radii(&self) -> Radii {
        Radii {
            a: self.circle_a.radius,
            b: self.circle_b.radius,
            c: self.circle_c.radius,
        }
    }

    pub fn circles(&self) -> [Semicircle; 3] {
        [self.circle_a, self.circle_b, self.circle_c]
    }

    pub fn vertices(&self) -> [UpperHalfPoint; 3] {
        [self.vertex_a, self.vertex_b, self.vertex_c]
    }

    /// Half-plane distance from each stored vertex (`A`, `B`, `C`) to the
    /// recomputed intersection of its two circles; infinite if they do not meet.
    pub fn vertex_offsets(&self) -> [f64; 3] {
        let off = |v: UpperHalfPoint, p: &Semicircle, q: &Semicircle| match intersect_semicircles(p, q) {
            Ok(Some(w)) => {
                let chord = v.euclidean_distance(&w);
                2.0 * (chord / (2.0 * (v.y * w.y).sqrt())).asinh()
            }
            _ => f64::INFINITY,
        };
        [
            off(self.vertex_a, &self.circle_b, &self.circle_c),
            off(self.vertex_b, &self.circle_a, &self.circle_c),
            off(self.vertex_c, &self.circle_a, &self.circle_b),
        ]
    }

    /// The six vertex/circle incidence residuals, in the order
    /// `A∈b, A∈c, B∈a, B∈c, C∈a, C∈b`.
    pub fn incidence_residuals(&self) -> [f64; 6] {
        [
            self.circle_b.incidence_residual(self.vertex_a),
            self.circle_c.incidence_residual(self.vertex_a),
            self.circle_a.incidence_residual(self.vertex_b),
            self.circle_c.incidence_residual(self.vertex_b),
            self.circle_a.incidence_residual(self.vertex_c),
            self.circle_b.incidence_residual(self.vertex_c),
        ]
    }

    /// Checks every structural invariant and names the first one that fails.
    pub fn validate(&self) -> Result<()> {
        for (name, c) in [("circle_a", self.circle_a), ("circle_b", self.circle_b), ("circle_c", self.circle_c)] {
            c.check()
                .map_err(|e| Error::Inconsistent(format!("{name}: {e}")))?;
        }
        for (name, v) in [("vertex_a", self.vertex_a), ("vertex_b", self.vertex_b), ("vertex_c", self.vertex_c)] {
            v.check()
                .map_err(|e| Error::Inconsistent(format!("{name}: {e}")))?;
        }
        let labels = ["vertex_a on circle_b", "vertex_a on circle_c", "vertex_b on circle_a",
            "vertex_b on circle_c", "vertex_c on circle_a", "vertex_c on circle_b"];
        for (label, r) in labels.iter().zip(self.incidence_residuals()) {
            if !(r <= INCIDENCE_TOL) {
                return Err(Error::Inconsistent(format!("{label} violated (relative offset {r:e})")));
            }
        }
        let scale = self.circle_a.radius.max(self.circle_b.radius).max(self.circle_c.radius);
        let v = self.vertices();
        for (i, j, label) in [(0, 1, "A/B"), (0, 2, "A/C"), (1, 2, "B/C")] {
            if v[i].euclidean_distance(&v[j]) <= 1e-12 * scale {
                return Err(Error::DegenerateTriangle(format!("vertices {label} coincide")));
            }
        }
        if !(self.circle_c.center_x <= self.circle_b.center_x && self.circle_b.center_x <= self.circle_a.center_x) {
            return Err(Error::Inconsistent(
                "canonical center order O_c <= O_b <= O_a violated".into(),
            ));
        }
        Ok(())
    }

    /// Applies `x -> scale * x + shift`, `y -> scale * y` to the whole figure.
    pub fn transformed(&self, scale: f64, shift: f64) -> TripleConfig {
        let c = |s: Semicircle| Semicircle { center_x: scale * s.center_x + shift, radius: scale * s.radius };
        let p = |v: UpperHalfPoint| UpperHalfPoint { x: scale * v.x + shift, y: scale * v.y };
        TripleConfig {
            circle_a: c(self.circle_a),
            circle_b: c(self.circle_b),
            circle_c: c(self.circle_c),
            vertex_a: p(self.vertex_a),
            vertex_b: p(self.vertex_b),
            vertex_c: p(self.vertex_c),
        }
    }
}

/// Builds the configuration from three circles in any order.
///
/// Labels are assigned by center abscissa (`c` leftmost, `a` rightmost).
pub fn build_triple(s1: Semicircle, s2: Semicircle, s3: Semicircle) -> Result<TripleConfig> {
    let mut sorted = [s1, s2, s3];
    for s in &sorted {
        s.check()?;
    }
    sorted.sort_by(|p, q| p.center_x.total_cmp(&q.center_x));
    let [circle_c, circle_b, circle_a] = sorted;

    let meet = |p: &Semicircle, q: &Semicircle, pair: &'static str| -> Result<UpperHalfPoint> {
        intersect_semicircles(p, q)?.ok_or(Error::MissingIntersection { pair })
    };
    let vertex_a = meet(&circle_b, &circle_c, "b-c")?;
    let vertex_b = meet(&circle_a, &circle_c, "a-c")?;
    let vertex_c = meet(&circle_a, &circle_b, "a-b")?;
    let t = TripleConfig { circle_a, circle_b, circle_c, vertex_a, vertex_b, vertex_c };
    t.validate()?;
    Ok(t)
}

/// The six radius-angles, in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusAngles {
    pub a1: f64,
    pub a2: f64,
    pub b1: f64,
    pub b2: f64,
    pub c1: f64,
    pub c2: f64,
    pub orientation: Orientation,
}

impl RadiusAngles {
    /// Checks range and classifies the orientation; mixed orderings are rejected.
    pub fn from_angles(a1: f64, a2: f64, b1: f64, b2: f64, c1: f64, c2: f64) -> Result<Self> {
        for (name, v) in [("a1", a1), ("a2", a2), ("b1", b1), ("b2", b2), ("c1", c1), ("c2", c2)] {
            if !(v > 0.0 && v < std::f64::consts::PI) {
                return Err(Error::Domain(format!("radius-angle {name} = {v} outside (0, pi)")));
            }
        }
        let orientation = if a1 > a2 && b1 > b2 && c1 > c2 {
            Orientation::Direct
        } else if a1 < a2 && b1 < b2 && c1 < c2 {
            Orientation::Reversed
        } else {
            return Err(Error::NonCanonical(format!(
                "mixed radius-angle ordering (a1={a1}, a2={a2}, b1={b1}, b2={b2}, c1={c1}, c2={c2})"
            )));
        };
        Ok(RadiusAngles { a1, a2, b1, b2, c1, c2, orientation })
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.a1, self.a2, self.b1, self.b2, self.c1, self.c2]
    }
}

/// Raw radius-angles measured from the vertex positions, without ordering checks.
pub fn measured_angles(t: &TripleConfig) -> [f64; 6] {
    let from_left = |s: &Semicircle, v: UpperHalfPoint| v.y.atan2(s.center_x - v.x);
    [
        from_left(&t.circle_a, t.vertex_c),
        from_left(&t.circle_a, t.vertex_b),
        t.circle_b.polar_angle(t.vertex_a),
        t.circle_b.polar_angle(t.vertex_c),
        t.circle_c.polar_angle(t.vertex_a),
        t.circle_c.polar_angle(t.vertex_b),
    ]
}

/// Radius-angles of a configuration.
pub fn radius_angles(t: &TripleConfig) -> Result<RadiusAngles> {
    let [a1, a2, b1, b2, c1, c2] = measured_angles(t);
    RadiusAngles::from_angles(a1, a2, b1, b2, c1, c2)
}

/// Distances between the three centers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CenterDistances {
    pub o_cb: f64,
    pub o_ba: f64,
    pub o_ac: f64,
}

impl CenterDistances {
    pub fn direct(t: &TripleConfig) -> Self {
        CenterDistances {
            o_cb: t.circle_b.center_x - t.circle_c.center_x,
            o_ba: t.circle_a.center_x - t.circle_b.center_x,
            o_ac: t.circle_a.center_x - t.circle_c.center_x,
        }
    }

    /// Relative residual of `O_ac = O_ba + O_cb`.
    pub fn additivity_residual(&self) -> f64 {
        identity_residual(self.o_ac, self.o_ba + self.o_cb, &[self.o_ba, self.o_cb])
    }
}

/// Residuals of the angle expressions for `O_ac`, `O_ba`, `O_cb` against the
/// direct center distances, in that order.
pub fn center_formula_residuals(t: &TripleConfig, ra: &RadiusAngles) -> [f64; 3] {
    let d = CenterDistances::direct(t);
    let r = t.radii();
    let ac_c = r.c * ra.c2.cos();
    let ac_a = r.a * ra.a2.cos();
    let ba_a = r.a * ra.a1.cos();
    let ba_b = r.b * ra.b2.cos();
    let cb_c = r.c * ra.c1.cos();
    let cb_b = r.b * ra.b1.cos();
    [
        identity_residual(d.o_ac, ac_c + ac_a, &[ac_c, ac_a]),
        identity_residual(d.o_ba, ba_a + ba_b, &[ba_a, ba_b]),
        identity_residual(d.o_cb, cb_c - cb_b, &[cb_c, cb_b]),
    ]
}

/// Center distances, cross-checked against their radius-angle expressions.
pub fn center_distances(t: &TripleConfig) -> Result<CenterDistances> {
    let ra = radius_angles(t)?;
    let worst = center_formula_residuals(t, &ra)
        .into_iter()
        .fold(0.0_f64, f64::max);
    if !(worst <= CENTER_FORMULA_TOL) {
        return Err(Error::Inconsistent(format!(
            "center distances disagree with radius-angle expressions (residual {worst:e})"
        )));
    }
    Ok(CenterDistances::direct(t))
}

/// Signed projections of the three sides onto the axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Projections {
    pub bc: f64,
    pub ac: f64,
    pub ab: f64,
}

impl Projections {
    pub fn from_angles(ra: &RadiusAngles, r: &Radii) -> Self {
        Projections {
            bc: r.a * (ra.a1.cos() - ra.a2.cos()),
            ac: r.b * (ra.b1.cos() - ra.b2.cos()),
            ab: r.c * (ra.c1.cos() - ra.c2.cos()),
        }
    }

    /// Relative residual of `P_AC = P_AB + P_BC`, scaled by the radii that bound each term.
    pub fn sum_residual(&self, r: &Radii) -> f64 {
        identity_residual(self.ac, self.ab + self.bc, &[r.a, r.b, r.c])
    }
}

pub fn projections(t: &TripleConfig) -> Result<Projections> {
    let ra = radius_angles(t)?;
    Ok(Projections::from_angles(&ra, &t.radii()))
}

/// Cosines of the six radius-angles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleCosines {
    pub a1: f64,
    pub a2: f64,
    pub b1: f64,
    pub b2: f64,
    pub c1: f64,
    pub c2: f64,
}

impl AngleCosines {
    pub fn as_array(&self) -> [f64; 6] {
        [self.a1, self.a2, self.b1, self.b2, self.c1, self.c2]
    }
}

/// Cosines of the radius-angles from radii and center distances alone.
pub fn cos_angles_from_distances(t: &TripleConfig) -> Result<AngleCosines> {
    let d = CenterDistances::direct(t);
    let r = t.radii();
    for (name, o) in [("O_cb", d.o_cb), ("O_ba", d.o_ba), ("O_ac", d.o_ac)] {
        if o == 0.0 {
            return Err(Error::DivisionDegenerate(format!("{name} = 0 (concentric circles)")));
        }
    }
    let (ra2, rb2, rc2) = (r.a * r.a, r.b * r.b, r.c * r.c);
    let (ca, ba, cb) = (d.o_ac, d.o_ba, d.o_cb);
    Ok(AngleCosines {
        a2: (ca * ca - rc2 + ra2) / (2.0 * r.a * ca),
        c2: (ca * ca - ra2 + rc2) / (2.0 * r.c * ca),
        b2: (ba * ba - ra2 + rb2) / (2.0 * r.b * ba),
        a1: (ba * ba - rb2 + ra2) / (2.0 * r.a * ba),
        c1: (cb * cb - rb2 + rc2) / (2.0 * r.c * cb),
        b1: (-cb * cb + rc2 - rb2) / (2.0 * r.b * cb),
    })
}
