//! Self-inversive detection: `a_{n-k} = omega * conj(a_k)` with `|omega| = 1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::TOL_DETECT;
use crate::poly::{Coeff, Polynomial};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InversiveError {
    #[error("self-inversive analysis needs degree >= 1")]
    ConstantPolynomial,
    #[error("tolerance must be finite and > 0, got {0}")]
    BadTolerance(f64),
    #[error("omega must have modulus 1, got |omega| = {0}")]
    OmegaNotUnimodular(f64),
    #[error("polynomial is not self-inversive (scaled residual {residual:.3e})")]
    NotSelfInversive { residual: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InversiveReport {
    #[serde(rename = "self_inversive")]
    pub is_self_inversive: bool,
    /// Recovered phase, normalized to modulus one. Absent when the verdict is
    /// negative.
    pub omega: Option<Coeff>,
    #[serde(rename = "self_reciprocal")]
    pub is_self_reciprocal: bool,
    /// `max_k |a_{n-k} - omega conj(a_k)| / max_j |a_j|`.
    pub max_residual: f64,
}

/// Decides whether `p` is self-inversive to relative tolerance `tol`.
///
/// The candidate phase comes from the `k = 0` relation,
/// `omega = a_n / conj(a_0)`. A vanishing constant term means
/// `|a_0| != |a_n|`, so the verdict is negative there.
pub fn detect(p: &Polynomial, tol: f64) -> Result<InversiveReport, InversiveError> {
    if p.degree() == 0 {
        return Err(InversiveError::ConstantPolynomial);
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(InversiveError::BadTolerance(tol));
    }
    let a = p.coeffs();
    let n = p.degree();
    let scale = p.max_abs();

    let a0 = a[0];
    if a0.norm() == 0.0 {
        let residual = (0..=n)
            .map(|k| (a[n - k].norm() - a[k].norm()).abs())
            .fold(0.0, f64::max)
            / scale;
        return Ok(InversiveReport {
            is_self_inversive: false,
            omega: None,
            is_self_reciprocal: false,
            max_residual: residual,
        });
    }

    let raw = a[n] / a0.conj();
    let omega = raw / raw.norm();
    let residual = (0..=n)
        .map(|k| (a[n - k] - omega * a[k].conj()).norm())
        .fold(0.0, f64::max)
        / scale;

    let verdict = residual <= tol && (raw.norm() - 1.0).abs() <= tol;
    let reciprocal = verdict && (omega - 1.0).norm() <= tol;
    Ok(InversiveReport {
        is_self_inversive: verdict,
        omega: verdict.then_some(omega),
        is_self_reciprocal: reciprocal,
        max_residual: residual,
    })
}

/// A polynomial that passed [`detect`], together with its phase.
///
/// Every criterion presumes the coefficient symmetry, so the criteria take
/// this type rather than a bare [`Polynomial`].
#[derive(Clone, Debug, PartialEq)]
pub struct SelfInversive {
    poly: Polynomial,
    omega: Coeff,
    report: InversiveReport,
}

impl SelfInversive {
    pub fn new(poly: Polynomial) -> Result<Self, InversiveError> {
        Self::with_tol(poly, TOL_DETECT)
    }

    pub fn with_tol(poly: Polynomial, tol: f64) -> Result<Self, InversiveError> {
        let report = detect(&poly, tol)?;
        match report.omega {
            Some(omega) if report.is_self_inversive => Ok(Self {
                poly,
                omega,
                report,
            }),
            _ => Err(InversiveError::NotSelfInversive {
                residual: report.max_residual,
            }),
        }
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn omega(&self) -> Coeff {
        self.omega
    }

    pub fn report(&self) -> &InversiveReport {
        &self.report
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }
}

/// Draws a random degree-`n` self-inversive polynomial with phase `omega`.
///
/// Free coefficients are standard complex normals; the partner coefficients
/// follow from `a_{n-k} = omega conj(a_k)`, and for even `n` the middle
/// coefficient is `sqrt(omega) * x` with `x` real.
pub fn random_self_inversive(
    n: usize,
    omega: Coeff,
    seed: u64,
) -> Result<Polynomial, InversiveError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_self_inversive_with(n, omega, &mut rng)
}

/// [`random_self_inversive`] driven by a caller-supplied generator.
pub fn random_self_inversive_with<R: Rng + ?Sized>(
    n: usize,
    omega: Coeff,
    rng: &mut R,
) -> Result<Polynomial, InversiveError> {
    if n == 0 {
        return Err(InversiveError::ConstantPolynomial);
    }
    if (omega.norm() - 1.0).abs() > 1e-12 {
        return Err(InversiveError::OmegaNotUnimodular(omega.norm()));
    }
    let mut normal = || -> f64 { rng.sample(StandardNormal) };
    let mut coeffs = vec![Coeff::new(0.0, 0.0); n + 1];
    for k in 0..n.div_ceil(2) {
        let mut a = Coeff::new(normal(), normal());
        // keep a_n = omega conj(a_0) away from zero
        while k == 0 && a.norm() < 1e-3 {
            a = Coeff::new(normal(), normal());
        }
        coeffs[k] = a;
        coeffs[n - k] = omega * a.conj();
    }
    if n.is_multiple_of(2) {
        coeffs[n / 2] = omega.sqrt() * normal();
    }
    Ok(Polynomial::new(coeffs).expect("a_n has modulus |a_0| >= 1e-3"))
}
