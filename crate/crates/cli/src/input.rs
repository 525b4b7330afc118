//! Polynomial input: inline coefficient lists and JSON files.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use circleroots::{Coeff, Polynomial};
use clap::Args;

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Comma-separated complex coefficients in ascending order, e.g. "1+1i,-2,0,-2i,1+1i".
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// JSON file of the form {"coeffs": [[re, im], ...]}, ascending order.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl InputArgs {
    pub fn load(&self) -> Result<Polynomial> {
        match (&self.coeffs, &self.file) {
            (Some(s), _) => parse_polynomial(s),
            (None, Some(path)) => read_polynomial(path),
            (None, None) => bail!("either --coeffs or --file is required"),
        }
    }
}

/// One malformed entry of an inline list.
#[derive(Debug, PartialEq, thiserror::Error)]
#[error("coefficient {index} (column {column}): cannot parse `{token}`: {reason}")]
pub struct CoeffError {
    /// Zero-based position in the list, i.e. the power of `z`.
    pub index: usize,
    /// One-based character column of the entry in the input string.
    pub column: usize,
    pub token: String,
    pub reason: String,
}

/// Parses `"a+bi, c, di, ..."`. Whitespace inside an entry is ignored, and
/// `j` is accepted for the imaginary unit.
pub fn parse_coeffs(s: &str) -> Result<Vec<Coeff>, CoeffError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for (index, raw) in s.split(',').enumerate() {
        let column = offset + raw.len() - raw.trim_start().len() + 1;
        offset += raw.len() + 1;
        let token: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        let fail = |reason: &str| CoeffError {
            index,
            column,
            token: raw.trim().to_string(),
            reason: reason.into(),
        };
        if token.is_empty() {
            return Err(fail("empty entry"));
        }
        let c: Coeff = token
            .parse()
            .map_err(|_| fail("expected a complex literal like 1.5-2i"))?;
        if !(c.re.is_finite() && c.im.is_finite()) {
            return Err(fail("not finite"));
        }
        out.push(c);
    }
    Ok(out)
}

pub fn parse_polynomial(s: &str) -> Result<Polynomial> {
    let coeffs = parse_coeffs(s)?;
    Polynomial::new(coeffs).context("invalid polynomial")
}

pub fn read_polynomial(path: &Path) -> Result<Polynomial> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text)
        .with_context(|| format!("{}: invalid polynomial JSON", path.display()))
}
