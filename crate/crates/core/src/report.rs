//! One record with every measurement, law residual and oracle comparison of a
//! configuration, plus the pass/fail thresholds used by `verify`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arc_trig::{relation_residuals, triangle_measures, wv_table, RelationResiduals, TriangleMeasures, WVTable};
use crate::error::Result;
use crate::geometry::{center_distances, radius_angles, RadiusAngles, TripleConfig};
use crate::laws::{law_report, LawReport};
use crate::numeric::max_of;
use crate::oracle::triangle_quadrature_sides;

/// Quadrature tolerance used for the oracle comparison in a report.
pub const REPORT_QUADRATURE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: TripleConfig,
    pub radius_angles: RadiusAngles,
    pub wv: WVTable,
    pub measures: TriangleMeasures,
    pub laws: LawReport,
    /// `|closed-form side - quadrature|` for sides `a`, `b`, `c`.
    pub oracle_deltas: [f64; 3],
    /// Incidence, Relation I/II, center-distance and projection residuals.
    pub relations: RelationResiduals,
}

impl Report {
    pub fn max_identity(&self) -> f64 {
        self.relations.max().max(self.laws.max_identity())
    }

    pub fn max_law(&self) -> f64 {
        self.laws.max_law()
    }

    pub fn max_oracle(&self) -> f64 {
        max_of(self.oracle_deltas)
    }
}

/// Pass thresholds for the three residual families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    pub identity: f64,
    pub law: f64,
    pub oracle: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds { identity: 1e-10, law: 1e-9, oracle: 1e-6 }
    }
}

/// A residual family that exceeded its threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub family: String,
    pub value: f64,
    pub threshold: f64,
}

/// Lists every family whose largest residual is not below its threshold.
pub fn check(report: &Report, th: &Thresholds) -> Vec<Violation> {
    [
        ("identity", report.max_identity(), th.identity),
        ("law", report.max_law(), th.law),
        ("oracle", report.max_oracle(), th.oracle),
    ]
    .into_iter()
    .filter(|&(_, v, t)| !(v < t))
    .map(|(f, value, threshold)| Violation { family: f.into(), value, threshold })
    .collect()
}

pub fn run_report(t: &TripleConfig) -> Result<Report> {
    t.validate()?;
    let ra = radius_angles(t)?;
    let r = t.radii();
    let measures = triangle_measures(&ra)?;
    let wv = wv_table(&ra, &r)?;
    let d = center_distances(t)?;
    let laws = law_report(&measures, &wv, &r, &d)?;
    let quad = triangle_quadrature_sides(t, REPORT_QUADRATURE_TOL)?;
    let closed = [measures.side_a.length, measures.side_b.length, measures.side_c.length];
    Ok(Report {
        config: *t,
        radius_angles: ra,
        wv,
        measures,
        laws,
        oracle_deltas: [
            (closed[0] - quad[0].value).abs(),
            (closed[1] - quad[1].value).abs(),
            (closed[2] - quad[2].value).abs(),
        ],
        relations: relation_residuals(t),
    })
}

/// Reports for many configurations in parallel; results keep the input order.
pub fn run_reports(configs: &[TripleConfig]) -> Vec<Result<Report>> {
    configs.par_iter().map(run_report).collect()
}
