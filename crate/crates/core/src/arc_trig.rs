//! Hyperbolic cosine and sine of semicircle arcs, the vertex angles of the
//! curvilinear triangle, and the `w`/`v` designation table that the law proofs
//! run on.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    center_formula_residuals, measured_angles, CenterDistances, Radii, RadiusAngles, TripleConfig,
};
use crate::numeric::{identity_residual, max_of, one_minus_cos};

/// Tolerance on Relation I when a designation table is assembled.
pub const RELATION_ONE_TOL: f64 = 1e-9;

/// Hyperbolic cosine, sine and length of an arc.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArcHyp {
    pub cosh_val: f64,
    pub sinh_val: f64,
    pub length: f64,
}

fn open_angle(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v < PI {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = {v} must lie strictly inside (0, pi)")))
    }
}

/// `(cosh, sinh)` of the arc from the top of a semicircle to the point at `angle`.
pub fn arc_hyp_from_top(angle: f64) -> Result<(f64, f64)> {
    open_angle("angle", angle)?;
    let s = angle.sin();
    Ok((1.0 / s, (angle.cos() / s).abs()))
}

/// Arc between the points at radius-angles `a1` and `a2` of one semicircle.
pub fn arc_hyp(a1: f64, a2: f64) -> Result<ArcHyp> {
    open_angle("a1", a1)?;
    open_angle("a2", a2)?;
    let denom = a1.sin() * a2.sin();
    // 1 - cos a1 cos a2 = sin a1 sin a2 + (1 - cos(a1 - a2))
    let cosh_val = 1.0 + one_minus_cos(a1 - a2) / denom;
    // |cos a1 - cos a2| = 2 sin((a1 + a2)/2) |sin((a1 - a2)/2)|
    let sinh_val = 2.0 * (0.5 * (a1 + a2)).sin() * (0.5 * (a1 - a2)).sin().abs() / denom;
    Ok(ArcHyp { cosh_val, sinh_val, length: sinh_val.asinh() })
}

/// The three sides: `a` on circle a (B to C), `b` on circle b (A to C), `c` on circle c (A to B).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sides {
    pub a: ArcHyp,
    pub b: ArcHyp,
    pub c: ArcHyp,
}

impl Sides {
    pub fn lengths(&self) -> [f64; 3] {
        [self.a.length, self.b.length, self.c.length]
    }
}

pub fn side_lengths(ra: &RadiusAngles) -> Result<Sides> {
    Ok(Sides {
        a: arc_hyp(ra.a1, ra.a2)?,
        b: arc_hyp(ra.b1, ra.b2)?,
        c: arc_hyp(ra.c1, ra.c2)?,
    })
}

/// Interior angles at `A`, `B` and `C`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VertexAngles {
    pub alpha: f64,
    pub beta: f64,
    pub delta: f64,
}

pub fn vertex_angles(ra: &RadiusAngles) -> Result<VertexAngles> {
    let alpha = ra.b1 - ra.c1;
    let beta = ra.a2 + ra.c2;
    let delta = PI - ra.a1 - ra.b2;
    for (name, v) in [("alpha", alpha), ("beta", beta), ("delta", delta)] {
        if !(v > 0.0 && v < PI) {
            return Err(Error::NonCanonical(format!("vertex angle {name} = {v} outside (0, pi)")));
        }
    }
    Ok(VertexAngles { alpha, beta, delta })
}

/// `([cos α, cos β, cos δ], [sin α, sin β, sin δ])` from the addition-formula expansions.
pub fn vertex_trig_expansions(ra: &RadiusAngles) -> ([f64; 3], [f64; 3]) {
    let (sa1, ca1) = ra.a1.sin_cos();
    let (sa2, ca2) = ra.a2.sin_cos();
    let (sb1, cb1) = ra.b1.sin_cos();
    let (sb2, cb2) = ra.b2.sin_cos();
    let (sc1, cc1) = ra.c1.sin_cos();
    let (sc2, cc2) = ra.c2.sin_cos();
    (
        [
            cb1 * cc1 + sb1 * sc1,
            ca2 * cc2 - sa2 * sc2,
            -cb2 * ca1 + sb2 * sa1,
        ],
        [
            sb1 * cc1 - cb1 * sc1,
            sa2 * cc2 + ca2 * sc2,
            sb2 * ca1 + cb2 * sa1,
        ],
    )
}

/// Sides and angles of the curvilinear triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleMeasures {
    pub side_a: ArcHyp,
    pub side_b: ArcHyp,
    pub side_c: ArcHyp,
    pub alpha: f64,
    pub beta: f64,
    pub delta: f64,
}

impl TriangleMeasures {
    pub fn angle_defect(&self) -> f64 {
        PI - (self.alpha + self.beta + self.delta)
    }
}

pub fn triangle_measures(ra: &RadiusAngles) -> Result<TriangleMeasures> {
    let s = side_lengths(ra)?;
    let v = vertex_angles(ra)?;
    let m = TriangleMeasures {
        side_a: s.a,
        side_b: s.b,
        side_c: s.c,
        alpha: v.alpha,
        beta: v.beta,
        delta: v.delta,
    };
    if m.angle_defect() < -1e-12 {
        return Err(Error::Inconsistent(format!(
            "angle sum exceeds pi by {:e}",
            -m.angle_defect()
        )));
    }
    Ok(m)
}

/// Radius-scaled cosines (`w0i`, `v0i`) and sines (`wi`, `vi`) of the radius-angles.
///
/// Index 1 is circle a, 2 circle b, 3 circle c; `w` entries use the first angle of
/// each circle, `v` entries the second. `x`, `y`, `z` are the vertex heights of
/// `A`, `B`, `C`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WVTable {
    pub w01: f64,
    pub w1: f64,
    pub v01: f64,
    pub v1: f64,
    pub w02: f64,
    pub w2: f64,
    pub v02: f64,
    pub v2: f64,
    pub w03: f64,
    pub w3: f64,
    pub v03: f64,
    pub v3: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl WVTable {
    /// Builds the table without checking Relation I.
    pub fn from_angles_unchecked(ra: &[f64; 6], r: &Radii) -> Self {
        let [a1, a2, b1, b2, c1, c2] = *ra;
        let w1 = r.a * a1.sin();
        let v1 = r.a * a2.sin();
        let w2 = r.b * b1.sin();
        WVTable {
            w01: r.a * a1.cos(),
            w1,
            v01: r.a * a2.cos(),
            v1,
            w02: r.b * b1.cos(),
            w2,
            v02: r.b * b2.cos(),
            v2: r.b * b2.sin(),
            w03: r.c * c1.cos(),
            w3: r.c * c1.sin(),
            v03: r.c * c2.cos(),
            v3: r.c * c2.sin(),
            x: w2,
            y: v1,
            z: w1,
        }
    }

    /// Relation I in designation form: `w2 = w3`, `v1 = v3`, `w1 = v2`.
    pub fn relation_one_residuals(&self) -> [f64; 3] {
        [
            identity_residual(self.w2, self.w3, &[]),
            identity_residual(self.v1, self.v3, &[]),
            identity_residual(self.w1, self.v2, &[]),
        ]
    }

    /// Relative violations of `w0i² + wi² = r²` and `v0i² + vi² = r²`.
    pub fn radius_residuals(&self, r: &Radii) -> [f64; 6] {
        let q = |c: f64, s: f64, r: f64| (c * c + s * s - r * r).abs() / (r * r);
        [
            q(self.w01, self.w1, r.a),
            q(self.v01, self.v1, r.a),
            q(self.w02, self.w2, r.b),
            q(self.v02, self.v2, r.b),
            q(self.w03, self.w3, r.c),
            q(self.v03, self.v3, r.c),
        ]
    }

    /// `(cosh, sinh)` of the three sides written in designations.
    pub fn side_functions(&self, r: &Radii) -> [(f64, f64); 3] {
        let f = |rr: f64, w0: f64, w: f64, v0: f64, v: f64| {
            ((rr * rr - w0 * v0) / (w * v), (rr * (w0 - v0) / (w * v)).abs())
        };
        [
            f(r.a, self.w01, self.w1, self.v01, self.v1),
            f(r.b, self.w02, self.w2, self.v02, self.v2),
            f(r.c, self.w03, self.w3, self.v03, self.v3),
        ]
    }

    /// `r_b r_c (sin α, cos α)`, `r_a r_c (sin β, cos β)`, `r_a r_b (sin δ, cos δ)`.
    pub fn angle_products(&self) -> [(f64, f64); 3] {
        [
            (self.w2 * self.w03 - self.w02 * self.w3, self.w02 * self.w03 + self.w2 * self.w3),
            (self.v1 * self.v03 + self.v01 * self.v3, self.v01 * self.v03 - self.v1 * self.v3),
            (self.v2 * self.w01 + self.v02 * self.w1, self.v2 * self.w1 - self.v02 * self.w01),
        ]
    }

    /// Center distances `O_cb`, `O_ac`, `O_ba` written in designations.
    pub fn center_distances(&self) -> CenterDistances {
        CenterDistances {
            o_cb: self.w03 - self.w02,
            o_ac: self.v03 + self.v01,
            o_ba: self.w01 + self.v02,
        }
    }

    /// Relation II as `w03 - w02 = v03 + v01 - w01 - v02`.
    pub fn relation_two_residual(&self) -> f64 {
        identity_residual(
            self.w03 - self.w02,
            self.v03 + self.v01 - self.w01 - self.v02,
            &[self.w03, self.w02, self.v03, self.v01, self.w01, self.v02],
        )
    }

    /// Relation II in projection form `w03 - v03 = w02 - v02 - (w01 - v01)`.
    pub fn relation_two_projection_residual(&self) -> f64 {
        identity_residual(
            self.w03 - self.v03,
            self.w02 - self.v02 - (self.w01 - self.v01),
            &[self.w03, self.v03, self.w02, self.v02, self.w01, self.v01],
        )
    }
}

/// Designation table for a consistent set of radius-angles.
pub fn wv_table(ra: &RadiusAngles, radii: &Radii) -> Result<WVTable> {
    let t = WVTable::from_angles_unchecked(&ra.as_array(), radii);
    let worst = max_of(t.relation_one_residuals());
    if !(worst <= RELATION_ONE_TOL) {
        return Err(Error::Inconsistent(format!(
            "Relation I violated (relative residual {worst:e})"
        )));
    }
    Ok(t)
}

/// Residuals of every radius/angle identity of a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelationResiduals {
    /// Vertex-on-circle checks, `A∈b, A∈c, B∈a, B∈c, C∈a, C∈b`.
    pub incidence: [f64; 6],
    /// Half-plane distance of each vertex from the intersection of its circles.
    pub vertex_offsets: [f64; 3],
    /// `r_a sin a1 = r_b sin b2`, `r_c sin c2 = r_a sin a2`, `r_c sin c1 = r_b sin b1`.
    pub relation_one: [f64; 3],
    /// Relation II in radius/angle form.
    pub relation_two: f64,
    /// Relation II in projection form.
    pub relation_two_projection: f64,
    /// Angle expressions of `O_ac`, `O_ba`, `O_cb` against the direct distances.
    pub center_formulas: [f64; 3],
    /// `P_AC = P_AB + P_BC`.
    pub projection_sum: f64,
    /// Each projection against the x-difference of its vertices (`BC`, `AC`, `AB`).
    pub projection_vertices: [f64; 3],
}

impl RelationResiduals {
    pub fn max(&self) -> f64 {
        max_of(
            self.incidence
                .iter()
                .chain(&self.vertex_offsets)
                .chain(&self.relation_one)
                .chain(&self.center_formulas)
                .chain(&self.projection_vertices)
                .copied()
                .chain([self.relation_two, self.relation_two_projection, self.projection_sum]),
        )
    }
}

/// Evaluates all radius/angle identities. Never fails: an invalid configuration
/// simply produces large residuals.
pub fn relation_residuals(t: &TripleConfig) -> RelationResiduals {
    let angles = measured_angles(t);
    let r = t.radii();
    let wv = WVTable::from_angles_unchecked(&angles, &r);
    let [a1, a2, b1, b2, c1, c2] = angles;

    let pair = |l: f64, rr: f64| identity_residual(l, rr, &[]);
    let relation_one = [
        pair(r.a * a1.sin(), r.b * b2.sin()),
        pair(r.c * c2.sin(), r.a * a2.sin()),
        pair(r.c * c1.sin(), r.b * b1.sin()),
    ];
    let lhs = r.c * c1.cos() - r.b * b1.cos();
    let rhs = r.c * c2.cos() + r.a * a2.cos() - r.a * a1.cos() - r.b * b2.cos();
    let relation_two = identity_residual(
        lhs,
        rhs,
        &[r.c * c1.cos(), r.b * b1.cos(), r.c * c2.cos(), r.a * a2.cos(), r.a * a1.cos(), r.b * b2.cos()],
    );

    let proj_bc = wv.w01 - wv.v01;
    let proj_ac = wv.w02 - wv.v02;
    let proj_ab = wv.w03 - wv.v03;
    let scale = r.a.max(r.b).max(r.c);
    let projection_sum = identity_residual(proj_ac, proj_ab + proj_bc, &[scale]);
    let (va, vb, vc) = (t.vertex_a, t.vertex_b, t.vertex_c);
    let projection_vertices = [
        identity_residual(proj_bc, vb.x - vc.x, &[scale]),
        identity_residual(proj_ac, va.x - vc.x, &[scale]),
        identity_residual(proj_ab, va.x - vb.x, &[scale]),
    ];

    // Formula cross-check needs a RadiusAngles value; build it without the ordering test.
    let ra = RadiusAngles { a1, a2, b1, b2, c1, c2, orientation: crate::geometry::Orientation::Direct };
    RelationResiduals {
        incidence: t.incidence_residuals(),
        vertex_offsets: t.vertex_offsets(),
        relation_one,
        relation_two,
        relation_two_projection: wv.relation_two_projection_residual(),
        center_formulas: center_formula_residuals(t, &ra),
        projection_sum,
        projection_vertices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_triple, radius_angles, Semicircle};

    fn sc(x: f64, r: f64) -> Semicircle {
        Semicircle::new(x, r).unwrap()
    }

    fn example() -> TripleConfig {
        build_triple(sc(-2.0, 3.0), sc(0.0, 2.0), sc(2.0, 3.0)).unwrap()
    }

    #[test]
    fn from_top_values() {
        let (c, s) = arc_hyp_from_top(PI / 2.0).unwrap();
        assert!((c - 1.0).abs() < 1e-15 && s.abs() < 1e-15);
        let (c, s) = arc_hyp_from_top(PI / 6.0).unwrap();
        assert!((c - 2.0).abs() < 1e-14);
        assert!((s - 3.0_f64.sqrt()).abs() < 1e-14);
        assert!(arc_hyp_from_top(0.0).is_err());
        assert!(arc_hyp_from_top(PI).is_err());
    }

    #[test]
    fn zero_arc() {
        for th in [0.1, 1.0, 2.5] {
            let h = arc_hyp(th, th).unwrap();
            assert_eq!((h.cosh_val, h.sinh_val, h.length), (1.0, 0.0, 0.0));
        }
    }

    #[test]
    fn sixty_degree_arc_is_ln3() {
        let h = arc_hyp(2.0 * PI / 3.0, PI / 3.0).unwrap();
        assert!((h.cosh_val - 5.0 / 3.0).abs() < 1e-15);
        assert!((h.sinh_val - 4.0 / 3.0).abs() < 1e-15);
        assert!((h.length - 3.0_f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn from_top_is_special_case() {
        for th in [0.3, 1.2, 2.0, 2.9] {
            let h = arc_hyp(PI / 2.0, th).unwrap();
            let (c, s) = arc_hyp_from_top(th).unwrap();
            assert!((h.cosh_val - c).abs() <= 1e-15 * c);
            assert!((h.sinh_val - s).abs() <= 1e-15 * c);
        }
    }

    #[test]
    fn boundary_angles_rejected() {
        assert!(arc_hyp(0.0, 1.0).is_err());
        assert!(arc_hyp(1.0, PI).is_err());
    }

    #[test]
    fn mirror_sides_equal_and_scale_free() {
        let t = example();
        let s = side_lengths(&radius_angles(&t).unwrap()).unwrap();
        assert!((s.a.length - s.c.length).abs() < 1e-15);
        let scaled = t.transformed(7.0, 0.0);
        let s7 = side_lengths(&radius_angles(&scaled).unwrap()).unwrap();
        for (p, q) in s.lengths().iter().zip(s7.lengths()) {
            assert!((p - q).abs() < 1e-12);
        }
    }

    #[test]
    fn beta_two_ways() {
        let ra = radius_angles(&example()).unwrap();
        let v = vertex_angles(&ra).unwrap();
        let (cos, sin) = vertex_trig_expansions(&ra);
        assert!((cos[1].acos() - v.beta).abs() < 1e-12);
        for (c, s) in cos.iter().zip(sin) {
            assert!((c * c + s * s - 1.0).abs() < 1e-15);
        }
        assert!((cos[0] - v.alpha.cos()).abs() < 1e-15);
        assert!((cos[2] - v.delta.cos()).abs() < 1e-15);
    }

    #[test]
    fn designations_on_example() {
        let t = example();
        let ra = radius_angles(&t).unwrap();
        let r = t.radii();
        let wv = wv_table(&ra, &r).unwrap();
        assert!((wv.x - wv.w3).abs() < 1e-12 * wv.x);
        assert!((wv.y - wv.v3).abs() < 1e-12 * wv.y);
        assert!((wv.z - wv.v2).abs() < 1e-12 * wv.z);
        assert!(max_of(wv.radius_residuals(&r)) < 1e-12);

        let sides = side_lengths(&ra).unwrap();
        let f = wv.side_functions(&r);
        for ((c, s), arc) in f.iter().zip([sides.a, sides.b, sides.c]) {
            assert!((c - arc.cosh_val).abs() < 1e-12 * arc.cosh_val);
            assert!((s - arc.sinh_val).abs() < 1e-12 * arc.cosh_val);
        }
        assert!(wv.relation_two_residual() < 1e-12);
        assert!(wv.relation_two_projection_residual() < 1e-12);

        let v = vertex_angles(&ra).unwrap();
        let p = wv.angle_products();
        let checks = [(p[0], r.b * r.c, v.alpha), (p[1], r.a * r.c, v.beta), (p[2], r.a * r.b, v.delta)];
        for ((s, c), rr, ang) in checks {
            assert!((s - rr * ang.sin()).abs() < 1e-12 * rr);
            assert!((c - rr * ang.cos()).abs() < 1e-12 * rr);
        }
        let d = wv.center_distances();
        assert!((d.o_cb - 2.0).abs() < 1e-12 && (d.o_ba - 2.0).abs() < 1e-12 && (d.o_ac - 4.0).abs() < 1e-12);
    }

    #[test]
    fn symmetric_projection_form() {
        // In the mirror-symmetric triple the two slanted projections coincide.
        let t = example();
        let wv = wv_table(&radius_angles(&t).unwrap(), &t.radii()).unwrap();
        assert!(((wv.w03 - wv.v03) - (wv.w01 - wv.v01)).abs() < 1e-12);
        assert!(((wv.w02 - wv.v02) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn wv_table_rejects_relation_one_violation() {
        let t = example();
        let ra = radius_angles(&t).unwrap();
        let mut r = t.radii();
        r.b *= 1.01;
        assert!(matches!(wv_table(&ra, &r), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn residuals_small_on_valid_config() {
        let rr = relation_residuals(&example());
        assert!(rr.max() < 1e-12, "{rr:?}");
    }

    #[test]
    fn injected_fault_is_flagged() {
        let mut t = example();
        t.vertex_a.y += 1e-3;
        let rr = relation_residuals(&t);
        assert!(rr.max() > 1e-4, "{rr:?}");
        assert!(max_of(rr.incidence) > 1e-4);
        assert!(rr.vertex_offsets[0] > 1e-4 && rr.vertex_offsets[1] == 0.0);
    }
}
