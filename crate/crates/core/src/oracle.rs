//! Numeric ground truth for root-count claims.
//!
//! [`Oracle::find_roots`] computes all roots by Aberth-Ehrlich simultaneous
//! iteration, merges clusters into multiple roots and bands them against the
//! unit circle. [`Oracle::winding_count`] counts roots inside a circle by
//! tracking the phase of `p` along it; it never looks at computed root
//! values, so it serves as an independent second opinion on the banding.

use std::f64::consts::PI;
use std::fmt;
use std::io;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::Tolerances;
use crate::criteria::{PredictionKind, RootCountPrediction};
use crate::poly::{Coeff, Polynomial};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("root finding needs degree >= 1, got {0}")]
    DegreeTooLow(usize),
    #[error(
        "root finder did not converge in {iterations} iterations (scaled residual {residual:.3e})"
    )]
    NonConvergence {
        iterations: u32,
        best: Vec<Coeff>,
        residual: f64,
    },
    #[error("contour radius must be finite and > 0, got {0}")]
    BadRadius(f64),
    #[error("|p| = {value:.3e} at {z} on the contour |z| = {radius}: a root is too close to the contour")]
    RootNearContour { radius: f64, z: Coeff, value: f64 },
    #[error("phase tracking on |z| = {radius} could not resolve the argument near angle {theta}")]
    PhaseUnresolved { radius: f64, theta: f64 },
    #[error("root of modulus {modulus} lies in the guard band around the annulus of half-width {annulus}")]
    GuardBandViolation { modulus: f64, annulus: f64 },
    #[error("invalid tolerances: {0}")]
    BadTolerances(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Band {
    Inside,
    OnCircle,
    Outside,
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Band::Inside => "inside",
            Band::OnCircle => "on_circle",
            Band::Outside => "outside",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "RootRepr", into = "RootRepr")]
pub struct Root {
    pub value: Coeff,
    pub multiplicity: usize,
    pub band: Band,
}

#[derive(Serialize, Deserialize)]
struct RootRepr {
    re: f64,
    im: f64,
    mult: usize,
    band: Band,
}

impl From<Root> for RootRepr {
    fn from(r: Root) -> Self {
        RootRepr {
            re: r.value.re,
            im: r.value.im,
            mult: r.multiplicity,
            band: r.band,
        }
    }
}

impl From<RootRepr> for Root {
    fn from(r: RootRepr) -> Self {
        Root {
            value: Coeff::new(r.re, r.im),
            multiplicity: r.mult,
            band: r.band,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandCounts {
    pub inside: usize,
    pub on: usize,
    pub outside: usize,
}

impl BandCounts {
    pub fn total(&self) -> usize {
        self.inside + self.on + self.outside
    }
}

/// All roots of a polynomial, banded against the unit circle. Counts include
/// multiplicity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootClassification {
    pub roots: Vec<Root>,
    pub counts: BandCounts,
    pub tol_circle: f64,
    /// Largest `|p(r)| / sum_k |a_k| |r|^k` over the computed roots.
    pub residual: f64,
    pub iterations: u32,
}

impl RootClassification {
    pub fn on_circle(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.band == Band::OnCircle)
    }

    /// Every root repeated by multiplicity.
    pub fn values(&self) -> Vec<Coeff> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value, r.multiplicity))
            .collect()
    }

    /// Smallest distance between two distinct on-circle roots, or `None`
    /// with fewer than two.
    pub fn min_on_circle_gap(&self) -> Option<f64> {
        min_pairwise(&self.on_circle().map(|r| r.value).collect::<Vec<_>>())
    }

    /// Smallest distance between two distinct roots, or `None` with fewer
    /// than two.
    pub fn min_root_gap(&self) -> Option<f64> {
        min_pairwise(&self.roots.iter().map(|r| r.value).collect::<Vec<_>>())
    }

    /// Emits one `re,im,band` row per root (repeated by multiplicity).
    pub fn write_csv<W: io::Write>(&self, w: W) -> csv::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["re", "im", "band"])?;
        for r in &self.roots {
            for _ in 0..r.multiplicity {
                out.write_record([
                    r.value.re.to_string(),
                    r.value.im.to_string(),
                    r.band.to_string(),
                ])?;
            }
        }
        out.flush()?;
        Ok(())
    }
}

fn min_pairwise(v: &[Coeff]) -> Option<f64> {
    let mut best: Option<f64> = None;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let d = (v[i] - v[j]).norm();
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best
}

/// Values needed by one Aberth or Newton step at `z`.
struct LocalEval {
    /// `p'(z) / p(z)`, or `None` when `p(z)` vanishes.
    log_derivative: Option<Coeff>,
    /// `|p(z)|` relative to its rounding scale.
    scaled_residual: f64,
}

/// Evaluates at `z`, switching to the reversed polynomial in `w = 1/z`
/// outside the unit disk so that large arguments do not overflow.
fn local_eval(a: &[Coeff], z: Coeff) -> LocalEval {
    let n = a.len() - 1;
    let horner = |coeffs: &mut dyn Iterator<Item = &Coeff>, x: Coeff| {
        let mut v = Coeff::new(0.0, 0.0);
        let mut d = Coeff::new(0.0, 0.0);
        let mut s = 0.0;
        let r = x.norm();
        for &c in coeffs {
            d = d * x + v;
            v = v * x + c;
            s = s * r + c.norm();
        }
        (v, d, s)
    };
    if z.norm() <= 1.0 {
        let (v, d, s) = horner(&mut a.iter().rev(), z);
        LocalEval {
            log_derivative: (v.norm() > 0.0).then(|| d / v),
            scaled_residual: if s > 0.0 { v.norm() / s } else { 0.0 },
        }
    } else {
        let w = z.inv();
        let (v, d, s) = horner(&mut a.iter(), w);
        LocalEval {
            // p(z) = z^n R(w)  =>  p'/p = w (n - w R'(w) / R(w))
            log_derivative: (v.norm() > 0.0).then(|| w * (n as f64 - w * d / v)),
            scaled_residual: if s > 0.0 { v.norm() / s } else { 0.0 },
        }
    }
}

/// Configured numeric oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct Oracle {
    pub tol: Tolerances,
    /// Seed for the angular jitter of the initial guesses.
    pub seed: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            tol: Tolerances::default(),
            seed: 0x5eed,
        }
    }
}

impl Oracle {
    pub fn new(tol: Tolerances, seed: u64) -> Result<Self, OracleError> {
        tol.validate().map_err(OracleError::BadTolerances)?;
        Ok(Self { tol, seed })
    }

    /// All `n` roots of `p`, clustered and banded.
    pub fn find_roots(&self, p: &Polynomial) -> Result<RootClassification, OracleError> {
        let n = p.degree();
        if n == 0 || p.is_zero() {
            return Err(OracleError::DegreeTooLow(n));
        }
        let a = p.coeffs();
        let zeros = a.iter().take_while(|c| c.norm() == 0.0).count();
        let reduced = &a[zeros..];

        let (mut values, iterations) = if reduced.len() > 1 {
            self.aberth(reduced)?
        } else {
            (Vec::new(), 0)
        };
        self.polish(reduced, &mut values);
        values.extend(std::iter::repeat_n(Coeff::new(0.0, 0.0), zeros));

        let residual = values
            .iter()
            .map(|&z| local_eval(a, z).scaled_residual)
            .fold(0.0, f64::max);

        let roots: Vec<Root> = self
            .cluster(&values)
            .into_iter()
            .map(|(value, multiplicity)| Root {
                value,
                multiplicity,
                band: self.band(value),
            })
            .collect();
        let mut counts = BandCounts::default();
        for r in &roots {
            match r.band {
                Band::Inside => counts.inside += r.multiplicity,
                Band::OnCircle => counts.on += r.multiplicity,
                Band::Outside => counts.outside += r.multiplicity,
            }
        }
        Ok(RootClassification {
            roots,
            counts,
            tol_circle: self.tol.circle,
            residual,
            iterations,
        })
    }

    fn band(&self, z: Coeff) -> Band {
        let d = z.norm() - 1.0;
        if d.abs() <= self.tol.circle {
            Band::OnCircle
        } else if d < 0.0 {
            Band::Inside
        } else {
            Band::Outside
        }
    }

    fn initial_guesses(&self, a: &[Coeff]) -> Vec<Coeff> {
        let n = a.len() - 1;
        let radius = (a[0].norm() / a[n].norm()).powf(1.0 / n as f64);
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let step = 2.0 * PI / n as f64;
        (0..n)
            .map(|k| {
                let angle = step * (k as f64 + 0.25 + 0.5 * rng.random::<f64>());
                Coeff::from_polar(radius, angle)
            })
            .collect()
    }

    /// Gauss-Seidel Aberth-Ehrlich iteration on a polynomial with nonzero
    /// constant term. A root is frozen once its backward error reaches
    /// rounding level or its correction stops moving it.
    fn aberth(&self, a: &[Coeff]) -> Result<(Vec<Coeff>, u32), OracleError> {
        let n = a.len() - 1;
        let mut z = self.initial_guesses(a);
        let mut done = vec![false; n];
        let stop = 4.0 * (n + 1) as f64 * f64::EPSILON;

        for iteration in 1..=self.tol.max_iterations {
            for i in 0..n {
                if done[i] {
                    continue;
                }
                let local = local_eval(a, z[i]);
                let Some(ratio) = local.log_derivative else {
                    done[i] = true;
                    continue;
                };
                if local.scaled_residual <= stop {
                    done[i] = true;
                    continue;
                }
                let repulsion: Coeff = (0..n)
                    .filter(|&j| j != i)
                    .map(|j| (z[i] - z[j]).inv())
                    .sum();
                let denom = ratio - repulsion;
                let correction = if denom.norm() > 0.0 && denom.is_finite() {
                    denom.inv()
                } else {
                    // nudge off a stationary configuration
                    Coeff::from_polar(f64::EPSILON.sqrt() * z[i].norm().max(1.0), i as f64)
                };
                z[i] -= correction;
                if correction.norm() <= 2.0 * f64::EPSILON * z[i].norm() {
                    done[i] = true;
                }
            }
            if done.iter().all(|&d| d) {
                return Ok((z, iteration));
            }
        }
        let residual = z
            .iter()
            .map(|&x| local_eval(a, x).scaled_residual)
            .fold(0.0, f64::max);
        Err(OracleError::NonConvergence {
            iterations: self.tol.max_iterations,
            best: z,
            residual,
        })
    }

    /// Newton refinement of isolated roots. A step is taken only when it
    /// lowers the residual and stays well inside half the distance to the
    /// nearest other root, so refinement never swaps roots.
    fn polish(&self, a: &[Coeff], z: &mut [Coeff]) {
        for i in 0..z.len() {
            let nearest = (0..z.len())
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).norm())
                .fold(f64::INFINITY, f64::min);
            if nearest <= self.cluster_radius(z[i]) {
                continue;
            }
            for _ in 0..3 {
                let here = local_eval(a, z[i]);
                let Some(ratio) = here.log_derivative else {
                    break;
                };
                if ratio.norm() == 0.0 || !ratio.is_finite() {
                    break;
                }
                let step = ratio.inv();
                if step.norm() >= 0.25 * nearest {
                    break;
                }
                let candidate = z[i] - step;
                if local_eval(a, candidate).scaled_residual < here.scaled_residual {
                    z[i] = candidate;
                } else {
                    break;
                }
            }
        }
    }

    fn cluster_radius(&self, z: Coeff) -> f64 {
        self.tol.cluster_rel * z.norm().max(1.0)
    }

    /// Single-linkage clustering; each cluster becomes one root at its mean.
    fn cluster(&self, values: &[Coeff]) -> Vec<(Coeff, usize)> {
        let n = values.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..n {
            for j in i + 1..n {
                let d = (values[i] - values[j]).norm();
                if d <= self
                    .cluster_radius(values[i])
                    .max(self.cluster_radius(values[j]))
                {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
        let mut out: Vec<(usize, Coeff, usize)> = Vec::new();
        for (i, &v) in values.iter().enumerate() {
            let r = find(&mut parent, i);
            match out.iter_mut().find(|(root, _, _)| *root == r) {
                Some(entry) => {
                    entry.1 += v;
                    entry.2 += 1;
                }
                None => out.push((r, v, 1)),
            }
        }
        out.into_iter()
            .map(|(_, sum, m)| (sum / m as f64, m))
            .collect()
    }

    /// Number of roots with `|z| < radius`, with multiplicity, from the net
    /// change of `arg p` along the circle.
    ///
    /// Each step from `a` is short enough that
    /// `|p'(a)| d + M2 d^2 / 2 <= |p(a)| / 2`, where `d` bounds the distance
    /// travelled and `M2` bounds `|p''|` on the circle. The image of the
    /// step then stays in a disk around `p(a)` that excludes zero, so every
    /// phase increment is below `pi/2` and no turn can be skipped. A sample
    /// where `|p|` falls under the contour tolerance aborts the count,
    /// because the root is then too close to the contour to be placed.
    pub fn winding_count(&self, p: &Polynomial, radius: f64) -> Result<usize, OracleError> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(OracleError::BadRadius(radius));
        }
        if p.degree() == 0 {
            return if p.is_zero() {
                Err(OracleError::RootNearContour {
                    radius,
                    z: Coeff::new(radius, 0.0),
                    value: 0.0,
                })
            } else {
                Ok(0)
            };
        }
        let floor = self.tol.contour * p.abs_sum_at(radius);
        let second = p.derivative().derivative().abs_sum_at(radius);
        let full = 2.0 * PI;
        let min_step = 1e-14 * full;

        let mut theta = 0.0;
        let start = p.evaluate(Coeff::from_polar(radius, theta));
        let mut total = 0.0;
        while theta < full {
            let z = Coeff::from_polar(radius, theta);
            let (v, slope) = p.evaluate_with_derivative(z);
            if v.norm() <= floor {
                return Err(OracleError::RootNearContour {
                    radius,
                    z,
                    value: v.norm(),
                });
            }
            let budget = 0.5 * v.norm();
            let d = if second > 0.0 {
                let b = slope.norm();
                2.0 * budget / (b + (b * b + 2.0 * second * budget).sqrt())
            } else {
                budget / slope.norm()
            };
            let step = (d / radius).min(full / 8.0);
            if step < min_step {
                return Err(OracleError::PhaseUnresolved { radius, theta });
            }
            let next_theta = (theta + step).min(full);
            let next = if next_theta >= full {
                start
            } else {
                p.evaluate(Coeff::from_polar(radius, next_theta))
            };
            let delta = (next / v).arg();
            debug_assert!(delta.abs() < PI / 2.0);
            total += delta;
            theta = next_theta;
        }
        let turns = total / full;
        Ok(turns.round().max(0.0) as usize)
    }

    /// Checks that no root of `cls` sits in `(annulus, 2 annulus)` of the
    /// circle.
    pub fn check_guard_band(
        &self,
        cls: &RootClassification,
        annulus: f64,
    ) -> Result<(), OracleError> {
        match cls
            .roots
            .iter()
            .map(|r| r.value.norm())
            .find(|m| (m - 1.0).abs() > annulus && (m - 1.0).abs() < 2.0 * annulus)
        {
            Some(modulus) => Err(OracleError::GuardBandViolation { modulus, annulus }),
            None => Ok(()),
        }
    }

    /// Roots in the annulus `1 - annulus < |z| < 1 + annulus`, by
    /// differencing two winding counts.
    pub fn count_on_circle(&self, p: &Polynomial, annulus: f64) -> Result<usize, OracleError> {
        let cls = self.find_roots(p)?;
        self.count_on_circle_with(p, &cls, annulus)
    }

    /// [`Oracle::count_on_circle`] reusing an existing classification for
    /// the guard-band check.
    pub fn count_on_circle_with(
        &self,
        p: &Polynomial,
        cls: &RootClassification,
        annulus: f64,
    ) -> Result<usize, OracleError> {
        if !(annulus.is_finite() && annulus > 0.0 && annulus < 1.0) {
            return Err(OracleError::BadRadius(annulus));
        }
        self.check_guard_band(cls, annulus)?;
        let outer = self.winding_count(p, 1.0 + annulus)?;
        let inner = self.winding_count(p, 1.0 - annulus)?;
        Ok(outer.saturating_sub(inner))
    }

    /// True iff every on-circle root is simple: multiplicity one,
    /// `|p'(r)|` above the simplicity floor, and no other on-circle root
    /// within the cluster radius.
    pub fn simplicity_check(&self, p: &Polynomial, cls: &RootClassification) -> bool {
        let dp = p.derivative();
        let on: Vec<&Root> = cls.on_circle().collect();
        let derivative_ok = on.iter().all(|r| {
            let scale = dp.abs_sum_at(r.value.norm());
            r.multiplicity == 1 && dp.evaluate(r.value).norm() > self.tol.simple * scale
        });
        let separated = on.iter().enumerate().all(|(i, r)| {
            on[i + 1..]
                .iter()
                .all(|s| (r.value - s.value).norm() > self.cluster_radius(r.value))
        });
        derivative_ok && separated
    }

    /// Checks a prediction against the oracle, clause by clause.
    ///
    /// Oracle failures turn into inconclusive clauses, never into passes.
    pub fn verify_prediction(&self, p: &Polynomial, pred: &RootCountPrediction) -> Verification {
        let mut clauses = Vec::new();
        let cls = match self.find_roots(p) {
            Ok(cls) => cls,
            Err(e) => {
                clauses.push(Clause::inconclusive(
                    ClauseKind::Count,
                    format!("root finder failed: {e}"),
                ));
                return Verification::from_clauses(None, clauses);
            }
        };
        let on = cls.counts.on;
        let n = p.degree();

        let count = match pred.kind {
            PredictionKind::ExactOnCircle | PredictionKind::AllOnCircle => {
                let l = (n - pred.count) / 2;
                let ok = on == pred.count && cls.counts.inside == l && cls.counts.outside == l;
                Some(Clause::check(
                    ClauseKind::Count,
                    ok,
                    format!(
                        "expected exactly {} on circle, oracle counts {:?}",
                        pred.count, cls.counts
                    ),
                ))
            }
            PredictionKind::AtLeastOnCircle => Some(Clause::check(
                ClauseKind::Count,
                on >= pred.count,
                format!(
                    "expected at least {} on circle, oracle finds {on}",
                    pred.count
                ),
            )),
            PredictionKind::NoneOnCircle => Some(Clause::check(
                ClauseKind::Count,
                on == 0,
                format!("expected none on circle, oracle finds {on}"),
            )),
            PredictionKind::NoPrediction => None,
        };
        clauses.extend(count);

        clauses.push(match self.count_on_circle_with(p, &cls, self.tol.annulus) {
            Ok(w) => Clause::check(
                ClauseKind::Winding,
                w == on,
                format!("winding count in annulus {w}, banded count {on}"),
            ),
            Err(e) => Clause::inconclusive(ClauseKind::Winding, e.to_string()),
        });

        if pred.simple {
            clauses.push(Clause::check(
                ClauseKind::Simplicity,
                self.simplicity_check(p, &cls),
                match cls.min_on_circle_gap() {
                    Some(g) => format!("minimum gap between on-circle roots {g:.3e}"),
                    None => "fewer than two on-circle roots".into(),
                },
            ));
        }

        clauses.push(Clause::check(
            ClauseKind::Pairing,
            cls.counts.inside == cls.counts.outside,
            format!(
                "inside {}, outside {}",
                cls.counts.inside, cls.counts.outside
            ),
        ));

        clauses.push(self.cohn_clause(p, &cls));
        Verification::from_clauses(Some(cls), clauses)
    }

    /// Roots of `p` and of its Cohn transform inside `|z| < 1 - annulus`
    /// must agree. Roots of either polynomial sitting between that contour
    /// and the circle make the comparison inconclusive.
    fn cohn_clause(&self, p: &Polynomial, cls: &RootClassification) -> Clause {
        let eps = self.tol.annulus;
        let q = match p.cohn_transform() {
            Ok(q) => q,
            Err(e) => return Clause::inconclusive(ClauseKind::Cohn, e.to_string()),
        };
        let in_gap = |c: &RootClassification| {
            c.roots.iter().map(|r| r.value.norm()).find(|m| {
                let d = 1.0 - m;
                d > self.tol.circle && d < 2.0 * eps
            })
        };
        if let Some(m) = in_gap(cls) {
            return Clause::inconclusive(
                ClauseKind::Cohn,
                format!("root of p with modulus {m} near the contour"),
            );
        }
        if q.degree() > 0 {
            match self.find_roots(&q) {
                Ok(qc) => {
                    if let Some(m) = in_gap(&qc) {
                        return Clause::inconclusive(
                            ClauseKind::Cohn,
                            format!("root of the Cohn transform with modulus {m} near the contour"),
                        );
                    }
                }
                Err(e) => return Clause::inconclusive(ClauseKind::Cohn, e.to_string()),
            }
        }
        match (
            self.winding_count(p, 1.0 - eps),
            self.winding_count(&q, 1.0 - eps),
        ) {
            (Ok(wp), Ok(wq)) => Clause::check(
                ClauseKind::Cohn,
                wp == wq,
                format!("roots inside: p {wp}, Cohn transform {wq}"),
            ),
            (Err(e), _) | (_, Err(e)) => Clause::inconclusive(ClauseKind::Cohn, e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClauseKind {
    /// The asserted number of on-circle roots.
    Count,
    /// Annulus winding count agrees with the banded count.
    Winding,
    /// On-circle roots are simple.
    Simplicity,
    /// As many roots inside as outside.
    Pairing,
    /// `p` and its Cohn transform have equally many roots inside.
    Cohn,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Clause {
    pub clause: ClauseKind,
    pub status: Status,
    pub detail: String,
}

impl Clause {
    fn check(clause: ClauseKind, ok: bool, detail: String) -> Self {
        Self {
            clause,
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }

    fn inconclusive(clause: ClauseKind, detail: String) -> Self {
        Self {
            clause,
            status: Status::Inconclusive,
            detail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub verdict: Status,
    pub clauses: Vec<Clause>,
    pub classification: Option<RootClassification>,
}

impl Verification {
    fn from_clauses(classification: Option<RootClassification>, clauses: Vec<Clause>) -> Self {
        let verdict = if clauses.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if clauses.iter().any(|c| c.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        Self {
            verdict,
            clauses,
            classification,
        }
    }

    pub fn clause(&self, kind: ClauseKind) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.clause == kind)
    }
}

/// [`Oracle::find_roots`] with default settings.
pub fn find_roots(p: &Polynomial) -> Result<RootClassification, OracleError> {
    Oracle::default().find_roots(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Coeff {
        Coeff::new(re, im)
    }

    fn real(a: &[f64]) -> Polynomial {
        Polynomial::from_real(a).unwrap()
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

    fn sorted(mut v: Vec<Coeff>) -> Vec<Coeff> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn z_squared_minus_one() {
        let cls = find_roots(&real(&[-1.0, 0.0, 1.0])).unwrap();
        assert_eq!(
            cls.counts,
            BandCounts {
                inside: 0,
                on: 2,
                outside: 0
            }
        );
        let v = sorted(cls.values());
        assert_abs_diff_eq!(v[0].re, -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(v[1].re, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn quadratic_formula_agreement() {
        // 3z^2 + z + 3: roots (-1 +- i sqrt(35)) / 6
        let cls = find_roots(&real(&[3.0, 1.0, 3.0])).unwrap();
        assert_eq!(cls.counts.on, 2);
        let v = sorted(cls.values());
        let s = 35f64.sqrt() / 6.0;
        assert!((v[0] - c(-1.0 / 6.0, -s)).norm() < 1e-14);
        assert!((v[1] - c(-1.0 / 6.0, s)).norm() < 1e-14);

        // z^2 + 5z + 1: roots (-5 +- sqrt(21)) / 2
        let cls = find_roots(&real(&[1.0, 5.0, 1.0])).unwrap();
        assert_eq!(
            cls.counts,
            BandCounts {
                inside: 1,
                on: 0,
                outside: 1
            }
        );
        let v = sorted(cls.values());
        assert_abs_diff_eq!(v[0].re, (-5.0 - 21f64.sqrt()) / 2.0, epsilon = 1e-13);
        assert_abs_diff_eq!(v[1].re, (-5.0 + 21f64.sqrt()) / 2.0, epsilon = 1e-14);
    }

    #[test]
    fn h_has_four_simple_roots_on_circle() {
        let o = Oracle::default();
        let cls = o.find_roots(&h()).unwrap();
        assert_eq!(cls.counts.on, 4);
        assert!(cls.roots.iter().all(|r| r.multiplicity == 1));
        assert!(cls.residual < 1e-14);
        assert!(o.simplicity_check(&h(), &cls));
        for r in &cls.roots {
            assert!((r.value.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn double_root_is_clustered() {
        let p = real(&[1.0, -2.0, 1.0]);
        let o = Oracle::default();
        let cls = o.find_roots(&p).unwrap();
        assert_eq!(cls.roots.len(), 1);
        assert_eq!(cls.roots[0].multiplicity, 2);
        assert_eq!(cls.roots[0].band, Band::OnCircle);
        assert!(!o.simplicity_check(&p, &cls));
        assert!(o.simplicity_check(
            &real(&[-1.0, 0.0, 1.0]),
            &o.find_roots(&real(&[-1.0, 0.0, 1.0])).unwrap()
        ));
    }

    #[test]
    fn zero_roots_are_deflated() {
        let p = real(&[0.0, 0.0, -1.0, 0.0, 1.0]);
        let cls = find_roots(&p).unwrap();
        assert_eq!(
            cls.counts,
            BandCounts {
                inside: 2,
                on: 2,
                outside: 0
            }
        );
        let zero = cls.roots.iter().find(|r| r.value.norm() == 0.0).unwrap();
        assert_eq!(zero.multiplicity, 2);
    }

    #[test]
    fn constant_is_rejected() {
        assert_eq!(find_roots(&real(&[3.0])), Err(OracleError::DegreeTooLow(0)));
    }

    #[test]
    fn non_convergence_is_reported() {
        let o = Oracle::new(
            Tolerances {
                max_iterations: 1,
                ..Tolerances::default()
            },
            1,
        )
        .unwrap();
        let p = inverse_wilkinson(12);
        match o.find_roots(&p) {
            Err(OracleError::NonConvergence {
                iterations,
                best,
                residual,
            }) => {
                assert_eq!(iterations, 1);
                assert_eq!(best.len(), 12);
                assert!(residual > 0.0);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    /// prod (z - k/12) for k = 1..n
    fn inverse_wilkinson(n: usize) -> Polynomial {
        let mut a = vec![c(1.0, 0.0)];
        for k in 1..=n {
            let r = c(k as f64 / 12.0, 0.0);
            let mut next = vec![c(0.0, 0.0); a.len() + 1];
            for (i, &x) in a.iter().enumerate() {
                next[i + 1] += x;
                next[i] -= x * r;
            }
            a = next;
        }
        Polynomial::new(a).unwrap()
    }

    #[test]
    fn winding_examples() {
        let o = Oracle::default();
        assert_eq!(o.winding_count(&real(&[0.0, 0.0, 1.0]), 1.0).unwrap(), 2);
        assert_eq!(
            o.winding_count(&real(&[1.0, 10.0, 1.0, 10.0, 1.0]), 0.9)
                .unwrap(),
            1
        );
        assert_eq!(o.winding_count(&real(&[1.0, 5.0, 1.0]), 1.0).unwrap(), 1);
        assert_eq!(o.winding_count(&real(&[1.0, 5.0, 1.0]), 10.0).unwrap(), 2);
        assert_eq!(o.winding_count(&real(&[7.0]), 1.0).unwrap(), 0);
    }

    #[test]
    fn winding_detects_root_on_contour() {
        let o = Oracle::default();
        assert!(matches!(
            o.winding_count(&real(&[-1.0, 0.0, 0.0, 0.0, 1.0]), 1.0),
            Err(OracleError::RootNearContour { .. })
        ));
        assert!(matches!(
            o.winding_count(&h(), -1.0),
            Err(OracleError::BadRadius(_))
        ));
    }

    #[test]
    fn winding_resolves_roots_close_to_contour() {
        // roots at 1 - 1e-7 and -(1 + 1e-7)
        let o = Oracle::default();
        let r1 = 1.0 - 1e-7;
        let r2 = -(1.0 + 1e-7);
        let p = Polynomial::from_real(&[r1 * r2, -(r1 + r2), 1.0]).unwrap();
        assert_eq!(o.winding_count(&p, 1.0).unwrap(), 1);
    }

    #[test]
    fn count_on_circle_examples() {
        let o = Oracle::default();
        assert_eq!(
            o.count_on_circle(&real(&[-1.0, 0.0, 0.0, 0.0, 1.0]), 1e-4)
                .unwrap(),
            4
        );
        assert_eq!(o.count_on_circle(&real(&[1.0, 5.0, 1.0]), 1e-4).unwrap(), 0);
        assert_eq!(o.count_on_circle(&h(), 1e-4).unwrap(), 4);
    }

    #[test]
    fn guard_band_is_enforced() {
        let o = Oracle::default();
        let r = 1.0 + 1.5e-4;
        let p = Polynomial::from_real(&[-r, 1.0]).unwrap();
        assert!(matches!(
            o.count_on_circle(&p, 1e-4),
            Err(OracleError::GuardBandViolation { .. })
        ));
    }

    #[test]
    fn verify_examples() {
        use crate::criteria::best_prediction;
        use crate::inversive::SelfInversive;
        let o = Oracle::default();
        for (p, kind) in [
            (
                real(&[1.0, 10.0, 1.0, 10.0, 1.0]),
                PredictionKind::ExactOnCircle,
            ),
            (h(), PredictionKind::AtLeastOnCircle),
            (real(&[1.0, 5.0, 1.0]), PredictionKind::NoneOnCircle),
            (real(&[3.0, 1.0, 3.0]), PredictionKind::AllOnCircle),
        ] {
            let pred = best_prediction(&SelfInversive::new(p.clone()).unwrap());
            assert_eq!(pred.kind, kind);
            let v = o.verify_prediction(&p, &pred);
            assert_eq!(v.verdict, Status::Pass, "{p}: {v:?}");
            assert_eq!(v.clause(ClauseKind::Cohn).unwrap().status, Status::Pass);
        }
    }

    #[test]
    fn verify_catches_a_wrong_claim() {
        let o = Oracle::default();
        let wrong = RootCountPrediction {
            kind: PredictionKind::ExactOnCircle,
            count: 4,
            l: 0,
            simple: true,
            margin: 1.0,
        };
        let v = o.verify_prediction(&real(&[1.0, 10.0, 1.0, 10.0, 1.0]), &wrong);
        assert_eq!(v.verdict, Status::Fail);
        assert_eq!(v.clause(ClauseKind::Count).unwrap().status, Status::Fail);
    }

    #[test]
    fn verify_is_inconclusive_when_the_oracle_fails() {
        let o = Oracle::new(
            Tolerances {
                max_iterations: 1,
                ..Tolerances::default()
            },
            3,
        )
        .unwrap();
        let pred = RootCountPrediction {
            kind: PredictionKind::AtLeastOnCircle,
            count: 2,
            l: 1,
            simple: false,
            margin: 1.0,
        };
        let v = o.verify_prediction(&inverse_wilkinson(12), &pred);
        assert_eq!(v.verdict, Status::Inconclusive);
    }

    #[test]
    fn classification_json_and_csv() {
        let cls = find_roots(&real(&[-1.0, 0.0, 1.0])).unwrap();
        let v: serde_json::Value = serde_json::to_value(&cls).unwrap();
        assert_eq!(v["counts"]["on"], 2);
        assert_eq!(v["roots"][0]["band"], "on_circle");
        assert_eq!(v["roots"][0]["mult"], 1);
        assert!(v["residual"].is_number());
        let back: RootClassification = serde_json::from_value(v).unwrap();
        assert_eq!(back, cls);

        let mut buf = Vec::new();
        cls.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "re,im,band");
        assert_eq!(lines.len(), 3);
        assert!(lines[1..].iter().all(|l| l.split(',').count() == 3));
    }
}
