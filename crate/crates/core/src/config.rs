//! Numeric thresholds shared by every module.
//!
//! All floating-point decisions in the crate read their thresholds from a
//! [`Tolerances`] value, so an alternative arithmetic backend only has to
//! supply a different record.

use serde::{Deserialize, Serialize};

/// Relative threshold below which a leading coefficient is treated as zero.
pub const TRIM_REL: f64 = 1e-14;
/// Default relative tolerance for self-inversive detection.
pub const TOL_DETECT: f64 = 1e-10;
/// Default absolute band on `|root| - 1` for calling a root "on the circle".
pub const TOL_CIRCLE: f64 = 1e-8;
/// Default half-width of the annulus used for winding-number differencing.
pub const TOL_ANNULUS: f64 = 1e-4;
/// Default relative radius for merging roots into one multiple root.
pub const CLUSTER_REL: f64 = 1e-6;
/// Default relative floor on `|p'(r)|` for a root to count as simple.
pub const TOL_SIMPLE: f64 = 1e-8;
/// Default relative floor on `|p(z)|` along a winding contour.
pub const TOL_CONTOUR: f64 = 1e-12;
/// Iteration budget of the simultaneous root finder.
pub const MAX_ITERATIONS: u32 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub trim_rel: f64,
    pub detect: f64,
    pub circle: f64,
    pub annulus: f64,
    pub cluster_rel: f64,
    pub simple: f64,
    pub contour: f64,
    pub max_iterations: u32,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            trim_rel: TRIM_REL,
            detect: TOL_DETECT,
            circle: TOL_CIRCLE,
            annulus: TOL_ANNULUS,
            cluster_rel: CLUSTER_REL,
            simple: TOL_SIMPLE,
            contour: TOL_CONTOUR,
            max_iterations: MAX_ITERATIONS,
        }
    }
}

impl Tolerances {
    /// Checks that every threshold is finite and strictly positive.
    pub fn validate(&self) -> Result<(), String> {
        let fields = [
            ("trim_rel", self.trim_rel),
            ("detect", self.detect),
            ("circle", self.circle),
            ("annulus", self.annulus),
            ("cluster_rel", self.cluster_rel),
            ("simple", self.simple),
            ("contour", self.contour),
        ];
        for (name, v) in fields {
            if !(v.is_finite() && v > 0.0) {
                return Err(format!(
                    "tolerance `{name}` must be finite and > 0, got {v}"
                ));
            }
        }
        if self.max_iterations == 0 {
            return Err("max_iterations must be > 0".into());
        }
        Ok(())
    }
}
