//! Two-magnon Bethe polynomials
//! `P_a(z) = (w + 1) z^n - 2 w D z^(n-1) - 2 D z + (w + 1)` with
//! `w = e^(2 pi i a / n)` and real anisotropy `D`.
//!
//! `P_a` is self-inversive with phase `w`. With `t = |(w + 1) / 2|`, every
//! root is on the unit circle and simple when `|D| < t`, and all but a pair
//! `s, w / s` are when `|D| > n / (n - 2) t`.

use std::f64::consts::PI;
use std::io;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::oracle::{BandCounts, Oracle, OracleError, RootClassification};
use crate::poly::{Coeff, Polynomial};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BetheError {
    #[error("Bethe polynomials need n >= 3, got {0}")]
    DegreeTooLow(usize),
    #[error("index a = {a} is outside 1..={n}")]
    IndexOutOfRange { a: usize, n: usize },
    #[error("omega_a = -1 (a = n/2) makes the leading coefficient omega_a + 1 vanish")]
    OmegaMinusOne { a: Option<usize> },
    #[error("omega must have modulus 1, got |omega| = {0}")]
    OmegaNotUnimodular(f64),
    #[error("delta must be finite, got {0}")]
    NonFiniteDelta(f64),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Parameters `(n, a, D)` of one Bethe polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SpecRepr", into = "SpecRepr")]
pub struct BetheSpec {
    n: usize,
    /// `None` when built from an arbitrary unimodular phase.
    a: Option<usize>,
    delta: f64,
    omega: Coeff,
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    n: usize,
    a: usize,
    delta: f64,
}

impl TryFrom<SpecRepr> for BetheSpec {
    type Error = BetheError;

    fn try_from(r: SpecRepr) -> Result<Self, BetheError> {
        BetheSpec::new(r.n, r.a, r.delta)
    }
}

impl From<BetheSpec> for SpecRepr {
    fn from(s: BetheSpec) -> Self {
        // phase-only specs have no index; serialize the nearest one
        let a = s.a.unwrap_or_else(|| {
            let turns = s.omega.arg().rem_euclid(2.0 * PI) / (2.0 * PI);
            match (turns * s.n as f64).round() as usize {
                0 => s.n,
                k => k,
            }
        });
        SpecRepr {
            n: s.n,
            a,
            delta: s.delta,
        }
    }
}

fn check_delta(delta: f64) -> Result<(), BetheError> {
    if !delta.is_finite() {
        return Err(BetheError::NonFiniteDelta(delta));
    }
    Ok(())
}

impl BetheSpec {
    pub fn new(n: usize, a: usize, delta: f64) -> Result<Self, BetheError> {
        if n < 3 {
            return Err(BetheError::DegreeTooLow(n));
        }
        if a == 0 || a > n {
            return Err(BetheError::IndexOutOfRange { a, n });
        }
        check_delta(delta)?;
        if 2 * a == n {
            return Err(BetheError::OmegaMinusOne { a: Some(a) });
        }
        let omega = if a == n {
            Coeff::new(1.0, 0.0)
        } else {
            Coeff::from_polar(1.0, 2.0 * PI * a as f64 / n as f64)
        };
        Ok(Self {
            n,
            a: Some(a),
            delta,
            omega,
        })
    }

    /// A generalized family member with any unimodular `omega != -1`.
    pub fn with_omega(n: usize, omega: Coeff, delta: f64) -> Result<Self, BetheError> {
        if n < 3 {
            return Err(BetheError::DegreeTooLow(n));
        }
        check_delta(delta)?;
        if (omega.norm() - 1.0).abs() > 1e-12 {
            return Err(BetheError::OmegaNotUnimodular(omega.norm()));
        }
        if (omega + 1.0).norm() <= 1e-12 {
            return Err(BetheError::OmegaMinusOne { a: None });
        }
        Ok(Self {
            n,
            a: None,
            delta,
            omega,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> Option<usize> {
        self.a
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn omega(&self) -> Coeff {
        self.omega
    }

    pub fn with_delta(&self, delta: f64) -> Result<Self, BetheError> {
        check_delta(delta)?;
        Ok(Self { delta, ..*self })
    }

    /// `|(w + 1) / 2|`; below it every root is on the circle.
    pub fn threshold_lo(&self) -> f64 {
        ((self.omega + 1.0) / 2.0).norm()
    }

    /// `n / (n - 2) |(w + 1) / 2|`; above it exactly two roots leave the
    /// circle.
    pub fn threshold_hi(&self) -> f64 {
        self.n as f64 / (self.n - 2) as f64 * self.threshold_lo()
    }

    /// Regime implied by the thresholds alone.
    pub fn regime(&self) -> BetheRegime {
        let d = self.delta.abs();
        if d < self.threshold_lo() {
            BetheRegime::AllOnCircleSimple
        } else if d > self.threshold_hi() {
            BetheRegime::TwoOffCircle
        } else {
            BetheRegime::Indeterminate
        }
    }
}

/// Ascending coefficients `[w+1, -2D, 0, ..., 0, -2wD, w+1]`.
pub fn bethe_polynomial(spec: &BetheSpec) -> Polynomial {
    let n = spec.n;
    let w = spec.omega;
    let mut coeffs = vec![Coeff::new(0.0, 0.0); n + 1];
    coeffs[0] = w + 1.0;
    coeffs[1] = Coeff::new(-2.0 * spec.delta, 0.0);
    coeffs[n - 1] = w * (-2.0 * spec.delta);
    coeffs[n] = w + 1.0;
    Polynomial::new(coeffs).expect("w != -1 keeps the leading coefficient nonzero")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BetheRegime {
    AllOnCircleSimple,
    TwoOffCircle,
    Indeterminate,
}

impl std::fmt::Display for BetheRegime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::AllOnCircleSimple => "AllOnCircleSimple",
            Self::TwoOffCircle => "TwoOffCircle",
            Self::Indeterminate => "Indeterminate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BetheRegimeReport {
    pub spec: BetheSpec,
    pub regime: BetheRegime,
    pub threshold_lo: f64,
    pub threshold_hi: f64,
    /// `(s, partner)` with `|s| > 1`, present when the oracle finds exactly
    /// two off-circle roots.
    pub off_pair: Option<(Coeff, Coeff)>,
    /// `|s * partner - w|` for the off pair.
    pub pair_product_error: Option<f64>,
    pub simple: bool,
    pub classification: RootClassification,
}

/// Threshold regime plus the oracle's view of the roots.
pub fn classify_regime(spec: &BetheSpec, oracle: &Oracle) -> Result<BetheRegimeReport, BetheError> {
    let p = bethe_polynomial(spec);
    let classification = oracle.find_roots(&p)?;
    let simple = oracle.simplicity_check(&p, &classification);

    let off: Vec<Coeff> = classification
        .roots
        .iter()
        .filter(|r| r.band != crate::oracle::Band::OnCircle)
        .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
        .collect();
    let off_pair = match off.as_slice() {
        &[x, y] => Some(if x.norm() >= y.norm() { (x, y) } else { (y, x) }),
        _ => None,
    };
    let pair_product_error = off_pair.map(|(s, t)| (s * t - spec.omega).norm());

    Ok(BetheRegimeReport {
        spec: *spec,
        regime: spec.regime(),
        threshold_lo: spec.threshold_lo(),
        threshold_hi: spec.threshold_hi(),
        off_pair,
        pair_product_error,
        simple,
        classification,
    })
}

/// One grid point of a sweep. Oracle failures leave the root data empty and
/// record the message.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub delta: f64,
    pub regime: BetheRegime,
    pub counts: Option<BandCounts>,
    pub simple: Option<bool>,
    pub min_root_gap: Option<f64>,
    pub error: Option<String>,
}

/// Classifies every `D` in `grid`, in grid order.
pub fn sweep(spec: &BetheSpec, grid: &[f64], oracle: &Oracle) -> Result<Vec<SweepRow>, BetheError> {
    let specs = grid
        .iter()
        .map(|&d| spec.with_delta(d))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(specs
        .iter()
        .map(|s| match classify_regime(s, oracle) {
            Ok(r) => SweepRow {
                delta: s.delta,
                regime: r.regime,
                counts: Some(r.classification.counts),
                simple: Some(r.simple),
                min_root_gap: r.classification.min_root_gap(),
                error: None,
            },
            Err(e) => SweepRow {
                delta: s.delta,
                regime: s.regime(),
                counts: None,
                simple: None,
                min_root_gap: None,
                error: Some(e.to_string()),
            },
        })
        .collect())
}

/// `n` evenly spaced points from `lo` to `hi` inclusive.
pub fn linear_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect(),
    }
}

pub const SWEEP_COLUMNS: [&str; 7] = [
    "delta",
    "regime",
    "inside",
    "on",
    "outside",
    "simple",
    "min_root_gap",
];

/// Writes the sweep table; fields of failed points are left empty.
pub fn write_sweep_csv<W: io::Write>(rows: &[SweepRow], w: W) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(SWEEP_COLUMNS)?;
    let opt = |v: Option<String>| v.unwrap_or_default();
    for r in rows {
        out.write_record([
            r.delta.to_string(),
            r.regime.to_string(),
            opt(r.counts.map(|c| c.inside.to_string())),
            opt(r.counts.map(|c| c.on.to_string())),
            opt(r.counts.map(|c| c.outside.to_string())),
            opt(r.simple.map(|s| s.to_string())),
            opt(r.min_root_gap.map(|g| format!("{g:e}"))),
        ])?;
    }
    out.flush()?;
    Ok(())
}
