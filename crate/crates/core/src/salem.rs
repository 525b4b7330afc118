//! Salem certification and construction.
//!
//! Here a Salem polynomial is a self-reciprocal polynomial with integer
//! coefficients whose roots all lie on the unit circle except for one pair of
//! positive reciprocal reals `r > 1` and `1/r`; `r` is its Salem number.
//! Irreducibility is not required and the polynomial need not be monic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::TOL_DETECT;
use crate::criteria::{exact_count_sides, salem_criterion, INTEGER_TOL};
use crate::inversive::{detect, SelfInversive};
use crate::oracle::{Band, Oracle};
use crate::poly::{Coeff, Polynomial};

/// Imaginary-part bound for calling an off-circle root real.
pub const REAL_TOL: f64 = 1e-8;
/// Bound on `|r * r' - 1|` for the off-circle pair.
pub const PRODUCT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SalemError {
    #[error("boosting needs integer coefficients")]
    NonInteger,
    #[error("boosting needs a self-reciprocal polynomial")]
    NotSelfReciprocal,
    #[error("boosting needs degree >= 3, got {0}")]
    DegreeTooLow(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SalemReport {
    #[serde(rename = "salem")]
    pub is_salem: bool,
    pub salem_number: Option<f64>,
    /// One entry per failed clause.
    pub reasons: Vec<String>,
    pub leading_coefficient: Option<f64>,
    /// The root finder failed, so the root clauses were not decided.
    pub inconclusive: bool,
}

/// Checks every Salem clause and reports all that fail.
pub fn is_salem(p: &Polynomial, oracle: &Oracle) -> SalemReport {
    let mut reasons = Vec::new();
    let integer = p.has_integer_coeffs(INTEGER_TOL);
    if !integer {
        reasons.push("non-integer coefficients".to_string());
    }
    if p.degree() == 0 {
        reasons.push("constant polynomial".to_string());
    } else {
        match detect(p, TOL_DETECT) {
            Ok(rep) if rep.is_self_reciprocal => {}
            Ok(rep) => match rep.omega {
                Some(w) => reasons.push(format!("not self-reciprocal: omega = {w} != 1")),
                None => reasons.push("not self-inversive".to_string()),
            },
            Err(e) => reasons.push(e.to_string()),
        }
    }

    let mut salem_number = None;
    let mut inconclusive = false;
    if p.degree() > 0 {
        match oracle.find_roots(p) {
            Err(e) => {
                inconclusive = true;
                reasons.push(format!("oracle failure: {e}"));
            }
            Ok(cls) => {
                let off: Vec<Coeff> = cls
                    .roots
                    .iter()
                    .filter(|r| r.band != Band::OnCircle)
                    .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
                    .collect();
                if let &[x, y] = off.as_slice() {
                    let real = x.im.abs() < REAL_TOL && y.im.abs() < REAL_TOL;
                    let positive = x.re > 0.0 && y.re > 0.0;
                    let product = (x * y - 1.0).norm();
                    if !real {
                        reasons.push(format!("off-circle roots {x} and {y} are not real"));
                    } else if !positive {
                        reasons.push(format!(
                            "off-circle roots {} and {} are not positive",
                            x.re, y.re
                        ));
                    }
                    if product >= PRODUCT_TOL {
                        reasons.push(format!(
                            "off-circle roots are not reciprocal (|r r' - 1| = {product:.3e})"
                        ));
                    }
                    if real && positive && product < PRODUCT_TOL {
                        salem_number = Some(x.re.max(y.re));
                    }
                } else {
                    reasons.push(format!(
                        "expected exactly 2 off-circle roots, found {}",
                        off.len()
                    ));
                }
            }
        }
    }

    let is_salem = reasons.is_empty();
    SalemReport {
        is_salem,
        salem_number: if is_salem { salem_number } else { None },
        reasons,
        leading_coefficient: integer.then(|| p.leading().re.round()),
        inconclusive,
    }
}

/// Raises `a_1 = a_{n-1}` to the smallest integer that makes the `l = 1`
/// exact-count condition hold strictly, then certifies the result.
///
/// A seed that already satisfies the condition is returned unchanged.
pub fn boost_to_salem(
    seed: &Polynomial,
    oracle: &Oracle,
) -> Result<(Polynomial, SalemReport), SalemError> {
    let n = seed.degree();
    if n < 3 {
        return Err(SalemError::DegreeTooLow(n));
    }
    if !seed.has_integer_coeffs(INTEGER_TOL) {
        return Err(SalemError::NonInteger);
    }
    let si = SelfInversive::new(seed.clone()).map_err(|_| SalemError::NotSelfReciprocal)?;
    if !si.report().is_self_reciprocal {
        return Err(SalemError::NotSelfReciprocal);
    }

    let sides = exact_count_sides(&si, 1).expect("n >= 3");
    let boosted = if sides.holds() {
        seed.clone()
    } else {
        let sign = if seed.coeff(n - 1).re < 0.0 {
            -1.0
        } else {
            1.0
        };
        let mut m = sides.rhs.floor() + 1.0;
        loop {
            let value = Coeff::new(sign * m, 0.0);
            let candidate = seed
                .with_coeff(1, value)
                .and_then(|p| p.with_coeff(n - 1, value))
                .expect("degree unchanged");
            let si = SelfInversive::new(candidate.clone()).expect("symmetry preserved");
            if salem_criterion(&si)
                .expect("n >= 3")
                .prediction
                .kind
                .fired()
            {
                break candidate;
            }
            m += 1.0;
        }
    };
    let report = is_salem(&boosted, oracle);
    Ok((boosted, report))
}
