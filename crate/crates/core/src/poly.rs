//! Dense complex polynomials in ascending coefficient order.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::TRIM_REL;

/// A complex coefficient or evaluation point.
pub type Coeff = Complex64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("polynomial has no coefficients")]
    Empty,
    #[error("coefficient {index} is not finite")]
    NonFinite { index: usize },
    #[error("leading coefficient a_{degree} is zero")]
    ZeroLeading { degree: usize },
    #[error("operation needs degree >= {required}, polynomial has degree {degree}")]
    DegreeTooLow { degree: usize, required: usize },
}

/// A polynomial `a_0 + a_1 z + ... + a_n z^n` with `a_n != 0`.
///
/// Coefficient `k` holds `a_k`. The only polynomial allowed to violate the
/// nonzero-leading invariant is the zero polynomial produced by
/// [`Polynomial::derivative`] of a constant, which is flagged through
/// [`Polynomial::is_zero`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct Polynomial {
    coeffs: Vec<Coeff>,
    trimmed: bool,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<Coeff>,
}

impl TryFrom<PolyRepr> for Polynomial {
    type Error = PolyError;

    fn try_from(r: PolyRepr) -> Result<Self, PolyError> {
        Polynomial::new(r.coeffs)
    }
}

impl From<Polynomial> for PolyRepr {
    fn from(p: Polynomial) -> Self {
        PolyRepr { coeffs: p.coeffs }
    }
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients.
    ///
    /// The leading coefficient must be exactly nonzero; no trimming happens
    /// here, so a caller-supplied trailing zero is an error rather than a
    /// silent degree change.
    pub fn new(coeffs: Vec<Coeff>) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::Empty);
        }
        if let Some(index) = coeffs
            .iter()
            .position(|c| !(c.re.is_finite() && c.im.is_finite()))
        {
            return Err(PolyError::NonFinite { index });
        }
        let degree = coeffs.len() - 1;
        if coeffs[degree] == Coeff::new(0.0, 0.0) {
            return Err(PolyError::ZeroLeading { degree });
        }
        Ok(Self {
            coeffs,
            trimmed: false,
        })
    }

    /// Builds a polynomial with real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self, PolyError> {
        Self::new(coeffs.iter().map(|&r| Coeff::new(r, 0.0)).collect())
    }

    /// Builds a polynomial after dropping leading coefficients with
    /// `|a| <= rel * max|a_k|`. Dropping anything sets the trim flag; an
    /// all-zero input becomes the flagged zero polynomial.
    pub fn from_trimmed(mut coeffs: Vec<Coeff>, rel: f64) -> Self {
        let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let before = coeffs.len();
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.norm() <= rel * scale) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Coeff::new(0.0, 0.0));
        }
        let mut trimmed = coeffs.len() != before;
        if coeffs.len() == 1 && coeffs[0].norm() <= rel * scale {
            coeffs[0] = Coeff::new(0.0, 0.0);
            trimmed = true;
        }
        Self { coeffs, trimmed }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients in ascending order.
    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn leading(&self) -> Coeff {
        self.coeffs[self.degree()]
    }

    /// True when the constructing transform dropped a vanishing leading term.
    pub fn is_trimmed(&self) -> bool {
        self.trimmed
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Coeff::new(0.0, 0.0)
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `sum_k |a_k| r^k`, the natural scale of `|p(z)|` on `|z| = r`.
    pub fn abs_sum_at(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    /// True when every coefficient is within `tol` of a real integer.
    pub fn has_integer_coeffs(&self, tol: f64) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.im.abs() < tol && (c.re - c.re.round()).abs() < tol)
    }

    /// Horner evaluation of `sum a_k z^k`.
    pub fn evaluate(&self, z: Coeff) -> Coeff {
        self.coeffs
            .iter()
            .rev()
            .fold(Coeff::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Evaluates `p(z)` and `p'(z)` in one Horner pass.
    pub fn evaluate_with_derivative(&self, z: Coeff) -> (Coeff, Coeff) {
        let mut value = Coeff::new(0.0, 0.0);
        let mut slope = Coeff::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            slope = slope * z + value;
            value = value * z + c;
        }
        (value, slope)
    }

    /// The formal derivative `sum k a_k z^(k-1)`.
    ///
    /// A constant differentiates to the flagged zero polynomial.
    pub fn derivative(&self) -> Polynomial {
        if self.degree() == 0 {
            return Self {
                coeffs: vec![Coeff::new(0.0, 0.0)],
                trimmed: true,
            };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Self::from_trimmed(coeffs, TRIM_REL)
    }

    /// `z^n conj(p)(1/z)`: coefficient `k` of the result is `conj(a_{n-k})`.
    ///
    /// A vanishing constant term of `p` becomes a vanishing leading term of
    /// the result and is trimmed.
    pub fn conjugate_reciprocal(&self) -> Polynomial {
        let coeffs = self.coeffs.iter().rev().map(|c| c.conj()).collect();
        Self::from_trimmed(coeffs, TRIM_REL)
    }

    /// The Cohn transform `q(z) = z^(n-1) conj(p')(1/z)`.
    ///
    /// Coefficient `j` of `q` is `(n - j) conj(a_{n-j})` for `j = 0..n-1`.
    pub fn cohn_transform(&self) -> Result<Polynomial, PolyError> {
        let n = self.degree();
        if n == 0 {
            return Err(PolyError::DegreeTooLow {
                degree: 0,
                required: 1,
            });
        }
        let coeffs = (0..n)
            .map(|j| self.coeffs[n - j].conj() * (n - j) as f64)
            .collect();
        Ok(Self::from_trimmed(coeffs, TRIM_REL))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: Coeff) -> Result<Polynomial, PolyError> {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Replaces coefficient `k`, keeping the degree.
    pub fn with_coeff(&self, k: usize, value: Coeff) -> Result<Polynomial, PolyError> {
        let mut coeffs = self.coeffs.clone();
        if k >= coeffs.len() {
            return Err(PolyError::DegreeTooLow {
                degree: self.degree(),
                required: k,
            });
        }
        coeffs[k] = value;
        Self::new(coeffs)
    }
}

fn fmt_coeff(c: Coeff) -> String {
    match (c.re == 0.0, c.im == 0.0) {
        (_, true) => format!("{}", c.re),
        (true, false) => format!("{}i", c.im),
        (false, false) => {
            let sign = if c.im < 0.0 { '-' } else { '+' };
            format!("({}{}{}i)", c.re, sign, c.im.abs())
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == Coeff::new(0.0, 0.0) && !(first && k == 0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_coeff(c))?,
                1 => write!(f, "{}*z", fmt_coeff(c))?,
                _ => write!(f, "{}*z^{k}", fmt_coeff(c))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Coeff {
        Coeff::new(re, im)
    }

    fn h() -> Polynomial {
        Polynomial::new(vec![
            c(1.0, 1.0),
            c(-2.0, 0.0),
            c(0.0, 0.0),
            c(0.0, -2.0),
            c(1.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Polynomial::new(vec![]), Err(PolyError::Empty));
        assert_eq!(
            Polynomial::from_real(&[1.0, f64::NAN]),
            Err(PolyError::NonFinite { index: 1 })
        );
        assert_eq!(
            Polynomial::from_real(&[1.0, 2.0, 0.0]),
            Err(PolyError::ZeroLeading { degree: 2 })
        );
    }

    #[test]
    fn evaluate_examples() {
        let p = Polynomial::from_real(&[3.0, 1.0, 3.0]).unwrap();
        assert_eq!(p.evaluate(c(0.0, 1.0)), c(0.0, 1.0));
        let q = Polynomial::from_real(&[-1.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(q.evaluate(c(1.0, 0.0)), c(0.0, 0.0));
        assert_eq!(h().evaluate(c(0.0, 0.0)), c(1.0, 1.0));
    }

    #[test]
    fn derivative_examples() {
        let p = Polynomial::from_real(&[1.0, 10.0, 1.0, 10.0, 1.0]).unwrap();
        assert_eq!(
            p.derivative(),
            Polynomial::from_real(&[10.0, 2.0, 30.0, 4.0]).unwrap()
        );

        let k = Polynomial::from_real(&[5.0]).unwrap().derivative();
        assert!(k.is_zero());
        assert!(k.is_trimmed());

        // 4(1+i)z^3 - 6i z^2 - 2, differentiated by hand.
        let expected =
            Polynomial::new(vec![c(-2.0, 0.0), c(0.0, 0.0), c(0.0, -6.0), c(4.0, 4.0)]).unwrap();
        assert_eq!(h().derivative(), expected);
    }

    #[test]
    fn conjugate_reciprocal_examples() {
        let p = Polynomial::from_real(&[3.0, 2.0, 1.0]).unwrap();
        assert_eq!(
            p.conjugate_reciprocal(),
            Polynomial::from_real(&[1.0, 2.0, 3.0]).unwrap()
        );

        // h is self-inversive with omega = i, so T(h) = conj(i) h = -i h.
        let t = h().conjugate_reciprocal();
        let minus_i_h = h().scaled(c(0.0, -1.0)).unwrap();
        assert_eq!(t.coeffs(), minus_i_h.coeffs());

        assert_eq!(t.conjugate_reciprocal(), h());
    }

    #[test]
    fn conjugate_reciprocal_trims_vanishing_constant() {
        let p = Polynomial::from_real(&[0.0, 1.0, 2.0]).unwrap();
        let t = p.conjugate_reciprocal();
        assert_eq!(t.degree(), 1);
        assert!(t.is_trimmed());
        assert_eq!(t.coeffs(), &[c(2.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn cohn_transform_examples() {
        let a = [c(0.5, 1.0), c(-2.0, 3.0), c(1.5, -0.25)];
        let p = Polynomial::new(a.to_vec()).unwrap();
        let q = p.cohn_transform().unwrap();
        assert_eq!(q.coeffs(), &[a[2].conj() * 2.0, a[1].conj()]);

        let z4 = Polynomial::from_real(&[-1.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        let q = z4.cohn_transform().unwrap();
        assert_eq!(q.coeffs(), &[c(4.0, 0.0)]);
        assert!(q.is_trimmed());

        // h: j -> (4-j) conj(a_{4-j}) = [4(1-i), 3(2i), 0, -2]
        let q = h().cohn_transform().unwrap();
        assert_eq!(
            q.coeffs(),
            &[c(4.0, -4.0), c(0.0, 6.0), c(0.0, 0.0), c(-2.0, 0.0)]
        );

        assert_eq!(
            Polynomial::from_real(&[2.0]).unwrap().cohn_transform(),
            Err(PolyError::DegreeTooLow {
                degree: 0,
                required: 1
            })
        );
    }

    #[test]
    fn trimming_is_relative() {
        let p = Polynomial::from_trimmed(vec![c(1e3, 0.0), c(1.0, 0.0), c(1e-12, 0.0)], TRIM_REL);
        assert_eq!(p.degree(), 1);
        assert!(p.is_trimmed());
        let z = Polynomial::from_trimmed(vec![c(0.0, 0.0); 3], TRIM_REL);
        assert!(z.is_zero());
    }

    #[test]
    fn json_format() {
        let p: Polynomial =
            serde_json::from_str(r#"{"coeffs": [[1, 1], [-2, 0], [0, 0], [0, -2], [1, 1]]}"#)
                .unwrap();
        assert_eq!(p, h());
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(
            text,
            r#"{"coeffs":[[1.0,1.0],[-2.0,0.0],[0.0,0.0],[0.0,-2.0],[1.0,1.0]]}"#
        );
        assert!(serde_json::from_str::<Polynomial>(r#"{"coeffs": [[1, 0], [0, 0]]}"#).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(h().to_string(), "(1+1i)*z^4 + -2i*z^3 + -2*z + (1+1i)");
    }
}
