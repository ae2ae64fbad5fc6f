//! The hyperbolic laws of cosines (both forms) and sines, evaluated as
//! normalized residuals on measured triangles, plus the polynomial identity
//! behind the law of cosines and the projection-ratio lemma behind the law of
//! sines.

use serde::{Deserialize, Serialize};

use crate::arc_trig::{TriangleMeasures, WVTable};
use crate::error::{Error, Result};
use crate::geometry::{CenterDistances, Projections, Radii, TripleConfig};
use crate::numeric::{identity_residual, max_of, relative};

/// Tolerance on `v2 = w1` required by [`appendix_identity_residual`].
pub const APPENDIX_PRECONDITION_TOL: f64 = 1e-12;

/// Residuals of `cosh c = cosh a cosh b - sinh a sinh b cos δ` and its two cyclic
/// companions (`cosh b` with `β`, `cosh a` with `α`), each scaled by
/// `max(1, product of the two cosh terms)`.
pub fn law_cosines_i_residual(m: &TriangleMeasures) -> [f64; 3] {
    let (a, b, c) = (m.side_a, m.side_b, m.side_c);
    let one = |lhs: f64, ch1: f64, ch2: f64, sh1: f64, sh2: f64, cos_ang: f64| {
        let prod = ch1 * ch2;
        relative(lhs - (prod - sh1 * sh2 * cos_ang), prod.max(1.0))
    };
    [
        one(c.cosh_val, a.cosh_val, b.cosh_val, a.sinh_val, b.sinh_val, m.delta.cos()),
        one(b.cosh_val, a.cosh_val, c.cosh_val, c.sinh_val, a.sinh_val, m.beta.cos()),
        one(a.cosh_val, c.cosh_val, b.cosh_val, c.sinh_val, b.sinh_val, m.alpha.cos()),
    ]
}

/// Law of sines: the common ratio `sinh a / sin α` and the relative deviations of
/// `sinh b / sin β` and `sinh c / sin δ` from it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SinesCheck {
    pub ratio: f64,
    pub residuals: [f64; 2],
}

pub fn law_sines_residual(m: &TriangleMeasures) -> Result<SinesCheck> {
    let sines = [m.alpha.sin(), m.beta.sin(), m.delta.sin()];
    if sines.iter().any(|s| !(*s > 0.0)) {
        return Err(Error::DegenerateTriangle(format!("vertex angle with zero sine: {sines:?}")));
    }
    let ratios = [
        m.side_a.sinh_val / sines[0],
        m.side_b.sinh_val / sines[1],
        m.side_c.sinh_val / sines[2],
    ];
    Ok(SinesCheck {
        ratio: ratios[0],
        residuals: [
            identity_residual(ratios[1], ratios[0], &[]),
            identity_residual(ratios[2], ratios[0], &[]),
        ],
    })
}

/// Projection-to-center-distance ratios `P_BC/O_bc`, `P_AC/O_ca`, `P_AB/O_ab`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjectionRatios {
    pub ratios: [f64; 3],
    /// Deviations of the second and third ratio from the first, measured against the
    /// largest radius-scaled cosine that enters them.
    pub residuals: [f64; 2],
}

pub fn projection_ratios(wv: &WVTable, d: &CenterDistances) -> ProjectionRatios {
    let p = Projections {
        bc: wv.w01 - wv.v01,
        ac: wv.w02 - wv.v02,
        ab: wv.w03 - wv.v03,
    };
    let ratios = [p.bc / d.o_cb, p.ac / d.o_ac, p.ab / d.o_ba];
    let scales = [
        wv.w01.abs().max(wv.v01.abs()) / d.o_cb,
        wv.w02.abs().max(wv.v02.abs()) / d.o_ac,
        wv.w03.abs().max(wv.v03.abs()) / d.o_ba,
    ];
    ProjectionRatios {
        ratios,
        residuals: [
            relative(ratios[1] - ratios[0], scales[0].max(scales[1])),
            relative(ratios[2] - ratios[0], scales[0].max(scales[2])),
        ],
    }
}

/// The common sines ratio rebuilt from designations:
/// `|(w01 - v01) / (w03 - w02)| * r_a r_b r_c / (x y z)`.
pub fn sines_ratio_from_designations(wv: &WVTable, r: &Radii) -> f64 {
    ((wv.w01 - wv.v01) / (wv.w03 - wv.w02)).abs() * (r.a * r.b * r.c) / (wv.x * wv.y * wv.z)
}

fn cosines_ii(m: &TriangleMeasures, sign: f64) -> [f64; 3] {
    let (ca, cb, cd) = (m.alpha.cos(), m.beta.cos(), m.delta.cos());
    let (sa, sb, sd) = (m.alpha.sin(), m.beta.sin(), m.delta.sin());
    let one = |lhs: f64, s1: f64, s2: f64, cosh_side: f64, c1: f64, c2: f64| {
        let term = s1 * s2 * cosh_side;
        relative(lhs - (sign * term - c1 * c2), term.abs().max(1.0))
    };
    [
        one(cd, sa, sb, m.side_c.cosh_val, ca, cb),
        one(cb, sa, sd, m.side_b.cosh_val, ca, cd),
        one(ca, sd, sb, m.side_a.cosh_val, cb, cd),
    ]
}

/// Residuals of `cos δ = sin α sin β cosh c - cos α cos β` and the analogues for
/// `cos β` (with `cosh b`) and `cos α` (with `cosh a`).
pub fn law_cosines_ii_residual(m: &TriangleMeasures) -> [f64; 3] {
    cosines_ii(m, 1.0)
}

/// The same three equations with the opposite sign on the `cosh` term
/// (`cos δ = -cos α cos β - sin α sin β cosh c`). These do not hold; kept to
/// document the sign.
pub fn law_cosines_ii_flipped_residual(m: &TriangleMeasures) -> [f64; 3] {
    cosines_ii(m, -1.0)
}

/// `cosh c` recovered from the angles by the second law of cosines.
pub fn cosh_c_from_angles(m: &TriangleMeasures) -> f64 {
    (m.delta.cos() + m.alpha.cos() * m.beta.cos()) / (m.alpha.sin() * m.beta.sin())
}

/// `(cos α, cos β, cos δ)` from radii and center distances.
pub fn vertex_cos_from_distances(t: &TripleConfig) -> Result<[f64; 3]> {
    let r = t.radii();
    if !(r.a * r.b * r.c > 0.0) {
        return Err(Error::Domain("radius product must be positive".into()));
    }
    let d = CenterDistances::direct(t);
    Ok(vertex_cos_from_parts(&r, &d))
}

pub(crate) fn vertex_cos_from_parts(r: &Radii, d: &CenterDistances) -> [f64; 3] {
    [
        (r.c * r.c + r.b * r.b - d.o_cb * d.o_cb) / (2.0 * r.b * r.c),
        -(r.c * r.c + r.a * r.a - d.o_ac * d.o_ac) / (2.0 * r.a * r.c),
        (r.a * r.a + r.b * r.b - d.o_ba * d.o_ba) / (2.0 * r.a * r.b),
    ]
}

/// Relative residual of the polynomial identity
/// `v2 w1 (w2² + v1² + (w02 - v02)² + (w01 - v01)²) - 2 v02 w01 (w02 - v02)(w01 - v01)
///  = 2 (r_a² - v01 w01)(r_b² - v02 w02)`, valid whenever `v2 = w1`.
pub fn appendix_identity_residual(wv: &WVTable, r: &Radii) -> Result<f64> {
    let pre = identity_residual(wv.v2, wv.w1, &[]);
    if !(pre <= APPENDIX_PRECONDITION_TOL) {
        return Err(Error::Precondition(format!("v2 = w1 violated (relative {pre:e})")));
    }
    let d2 = wv.w02 - wv.v02;
    let d1 = wv.w01 - wv.v01;
    let lhs = wv.v2 * wv.w1 * (wv.w2 * wv.w2 + wv.v1 * wv.v1 + d2 * d2 + d1 * d1)
        - 2.0 * wv.v02 * wv.w01 * d2 * d1;
    let rhs = 2.0 * (r.a * r.a - wv.v01 * wv.w01) * (r.b * r.b - wv.v02 * wv.w02);
    Ok(relative(lhs - rhs, rhs.abs().max(1.0)))
}

/// Sines part of a [`LawReport`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SinesReport {
    pub ratio: f64,
    pub residuals: [f64; 2],
    pub projection_ratio_residuals: [f64; 2],
    pub designation_ratio_residual: f64,
}

/// All law residuals for one configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LawReport {
    pub cosines_i: [f64; 3],
    pub sines: SinesReport,
    pub cosines_ii: [f64; 3],
    /// Distance-based vertex cosines against the measured angles.
    pub vertex_cosines: [f64; 3],
    pub appendix: f64,
}

impl LawReport {
    /// Largest residual among the laws proper (cosines I, sines, cosines II).
    pub fn max_law(&self) -> f64 {
        max_of(self.cosines_i.iter().chain(&self.cosines_ii).chain(&self.sines.residuals).copied())
    }

    /// Largest residual among the exact identities (projection lemma, sines factor,
    /// distance cosines, polynomial identity).
    pub fn max_identity(&self) -> f64 {
        max_of(
            self.sines
                .projection_ratio_residuals
                .iter()
                .chain(&self.vertex_cosines)
                .copied()
                .chain([self.sines.designation_ratio_residual, self.appendix]),
        )
    }
}

pub fn law_report(
    m: &TriangleMeasures,
    wv: &WVTable,
    r: &Radii,
    d: &CenterDistances,
) -> Result<LawReport> {
    let sines = law_sines_residual(m)?;
    let proj = projection_ratios(wv, d);
    let designation = sines_ratio_from_designations(wv, r);
    let cos = vertex_cos_from_parts(r, d);
    let measured = [m.alpha.cos(), m.beta.cos(), m.delta.cos()];
    Ok(LawReport {
        cosines_i: law_cosines_i_residual(m),
        sines: SinesReport {
            ratio: sines.ratio,
            residuals: sines.residuals,
            projection_ratio_residuals: proj.residuals,
            designation_ratio_residual: identity_residual(designation, sines.ratio, &[]),
        },
        cosines_ii: law_cosines_ii_residual(m),
        vertex_cosines: [
            (cos[0] - measured[0]).abs(),
            (cos[1] - measured[1]).abs(),
            (cos[2] - measured[2]).abs(),
        ],
        appendix: appendix_identity_residual(wv, r)?,
    })
}
