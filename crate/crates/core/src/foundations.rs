//! Hyperbolic angles on ordinary Euclidean figures: the exponential/ratio
//! identity, right triangles parameterized by a hyperbolic angle, the
//! tangent line rolling around a semicircle, and the angle of parallelism.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = {v} must be positive and finite")))
    }
}

/// The exponent `phi` with `exp((a0 - b0) * phi) = a0 / b0`.
///
/// At `a0 == b0` every `phi` satisfies the equation; the continuous extension `1 / a0`
/// is returned.
pub fn key_formula_phi(a0: f64, b0: f64) -> Result<f64> {
    positive("a0", a0)?;
    positive("b0", b0)?;
    let diff = a0 - b0;
    if diff == 0.0 {
        return Ok(1.0 / a0);
    }
    Ok((diff / b0).ln_1p() / diff)
}

/// `coth` with a series branch near zero.
fn coth(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 / x + x / 3.0 - x * x2 / 45.0
    } else {
        1.0 / x.tanh()
    }
}

/// Right triangle with legs `a`, `b`, hypotenuse `c`, right angle between the legs,
/// and hyperbolic angle `xi` defined by `(c + a) / (c - a) = exp(2 xi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RightTriangleHyp {
    pub leg_a: f64,
    pub leg_b: f64,
    pub hyp_c: f64,
    pub xi: f64,
    pub phi: f64,
}

impl RightTriangleHyp {
    /// The angle opposite `leg_b`.
    pub fn angle_b(&self) -> f64 {
        self.leg_b.atan2(self.leg_a)
    }

    /// Largest relative violation of `c² = a² + b²`, `tanh xi = a/c`, `sinh xi = a/b`.
    pub fn invariant_residual(&self) -> f64 {
        let pyth = (self.hyp_c * self.hyp_c - self.leg_a * self.leg_a - self.leg_b * self.leg_b).abs()
            / (self.hyp_c * self.hyp_c);
        let tanh = (self.xi.tanh() - self.leg_a / self.hyp_c).abs() / self.xi.tanh();
        let sinh = (self.xi.sinh() - self.leg_a / self.leg_b).abs() / self.xi.sinh();
        pyth.max(tanh).max(sinh)
    }

    /// Relative violations of `sin B cosh xi = 1`, `cot B = sinh xi` and
    /// `cos B = tanh xi`, with `B` recovered from the legs by arctangent.
    pub fn circular_residuals(&self) -> [f64; 3] {
        let b = self.angle_b();
        [
            (b.sin() * self.xi.cosh() - 1.0).abs(),
            (1.0 / b.tan() - self.xi.sinh()).abs() / self.xi.sinh(),
            (b.cos() - self.xi.tanh()).abs() / self.xi.tanh(),
        ]
    }
}

/// Builds the right triangle with fixed leg `a` and hyperbolic angle `xi`.
pub fn right_triangle_from_xi(leg_a: f64, xi: f64) -> Result<RightTriangleHyp> {
    positive("leg_a", leg_a)?;
    positive("xi", xi)?;
    Ok(RightTriangleHyp {
        leg_a,
        leg_b: leg_a / xi.sinh(),
        hyp_c: leg_a * coth(xi),
        xi,
        phi: xi / leg_a,
    })
}

/// Same triangle, parameterized by the evolution parameter `phi = xi / a`.
pub fn right_triangle_from_phi(leg_a: f64, phi: f64) -> Result<RightTriangleHyp> {
    positive("leg_a", leg_a)?;
    positive("phi", phi)?;
    right_triangle_from_xi(leg_a, leg_a * phi)
}

/// Angle of parallelism `2 atan(exp(-d / kappa))`.
pub fn parallel_angle(d: f64, kappa: f64) -> Result<f64> {
    positive("kappa", kappa)?;
    if !(d >= 0.0) {
        return Err(Error::Domain(format!("distance {d} must be nonnegative")));
    }
    Ok(2.0 * (-d / kappa).exp().atan())
}

/// A length that may have receded to infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reach {
    Finite(f64),
    AtInfinity,
}

impl Reach {
    pub fn finite(self) -> Option<f64> {
        match self {
            Reach::Finite(v) => Some(v),
            Reach::AtInfinity => None,
        }
    }
}

/// Segments cut out by a line tangent to a semicircle of radius `r`, with the
/// tangency point at hyperbolic angle `xi` from the top.
///
/// `ab` runs from the axis crossing of the tangent to the center, `ac` along the
/// tangent to the tangency point; `p1k1`, `p2k2` are the heights of the tangent above
/// the two ends of the diameter, `bm1` its height above the center and `p2m2` the
/// difference `p2k2 - bm1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TangentFigure {
    pub r: f64,
    pub xi: f64,
    pub ab: Reach,
    pub ac: Reach,
    pub p1k1: f64,
    pub p2k2: f64,
    pub bm1: f64,
    pub p2m2: f64,
}

impl TangentFigure {
    /// Largest relative violation of the three quadratic identities of the figure,
    /// each scaled by its largest term.
    pub fn invariant_residual(&self) -> f64 {
        let r2 = self.r * self.r;
        let mut worst = (self.p1k1 * self.p2k2 - r2).abs() / r2;
        worst = worst.max((self.bm1 * self.bm1 - self.p2m2 * self.p2m2 - r2).abs() / (self.bm1 * self.bm1));
        if let (Reach::Finite(ab), Reach::Finite(ac)) = (self.ab, self.ac) {
            worst = worst.max((ab * ab - ac * ac - r2).abs() / (ab * ab));
        }
        worst
    }
}

pub fn tangent_construction(r: f64, xi: f64) -> Result<TangentFigure> {
    positive("r", r)?;
    if !(xi.is_finite() && xi >= 0.0) {
        return Err(Error::Domain(format!("xi = {xi} must be nonnegative")));
    }
    let (ab, ac) = if xi == 0.0 {
        (Reach::AtInfinity, Reach::AtInfinity)
    } else {
        (Reach::Finite(r * coth(xi)), Reach::Finite(r / xi.sinh()))
    };
    Ok(TangentFigure {
        r,
        xi,
        ab,
        ac,
        p1k1: r * (-xi).exp(),
        p2k2: r * xi.exp(),
        bm1: r * xi.cosh(),
        p2m2: r * xi.sinh(),
    })
}
