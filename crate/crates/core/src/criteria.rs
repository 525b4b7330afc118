//! Coefficient inequalities that fix the number of roots on `|z| = 1`.
//!
//! For a degree-`n` self-inversive polynomial and an index `l` with
//! `2l < n`, write `S_l = sum_{k != l, n-l} |a_k|`.
//!
//! * exact count: `|a_{n-l}| > (1/2) (n / (n - 2l)) S_l` gives exactly
//!   `n - 2l` roots on the circle, all simple;
//! * at-least count: `|a_{n-l}| > (1/2) S_l` gives at least `n - 2l`;
//! * no roots (even `n`): `|a_{n/2}| > sum_{k != n/2} |a_k|`.
//!
//! `l = 0` of the exact count is the all-roots-on-the-circle condition, and
//! `l = 1` is the test used to recognize Salem polynomials.
//!
//! All inequalities are strict and evaluated without slack. Equality can
//! produce multiple roots, so it yields [`PredictionKind::NoPrediction`]; the
//! signed `margin` shows how close an input is to the boundary.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::TOL_CONTOUR;
use crate::inversive::SelfInversive;
use crate::poly::Coeff;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CriteriaError {
    #[error("index l = {l} is outside 0 <= 2l < n = {n}")]
    IndexOutOfRange { l: usize, n: usize },
    #[error("criterion needs even degree, got n = {0}")]
    OddDegree(usize),
    #[error("criterion needs degree >= {required}, got n = {n}")]
    DegreeTooLow { n: usize, required: usize },
    #[error("at-least condition does not hold for l = {l} (margin {margin:.3e})")]
    NotSatisfied { l: usize, margin: f64 },
    #[error("trigonometric form vanishes at node {j} (t = {t}); a root sits on the node")]
    DegenerateNode { j: usize, t: f64 },
    #[error("sign of the trigonometric form does not alternate between nodes {j} and {}", j + 1)]
    SignNotAlternating { j: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PredictionKind {
    ExactOnCircle,
    AtLeastOnCircle,
    NoneOnCircle,
    AllOnCircle,
    NoPrediction,
}

impl PredictionKind {
    /// Exact, none and all-on-circle claims outrank at-least claims.
    fn rank(self) -> u8 {
        match self {
            Self::ExactOnCircle | Self::NoneOnCircle | Self::AllOnCircle => 2,
            Self::AtLeastOnCircle => 1,
            Self::NoPrediction => 0,
        }
    }

    pub fn fired(self) -> bool {
        self != Self::NoPrediction
    }
}

/// What a criterion asserts about the roots on the unit circle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootCountPrediction {
    pub kind: PredictionKind,
    /// Number of roots asserted on the circle (0 for `NoPrediction`).
    pub count: usize,
    pub l: usize,
    pub simple: bool,
    /// Left side minus right side of the governing inequality.
    pub margin: f64,
}

/// Two sides of one criterion inequality; the criterion fires iff
/// `lhs > rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Inequality {
    pub lhs: f64,
    pub rhs: f64,
}

impl Inequality {
    pub fn margin(&self) -> f64 {
        self.lhs - self.rhs
    }

    pub fn holds(&self) -> bool {
        self.lhs > self.rhs
    }
}

fn check_index(si: &SelfInversive, l: usize) -> Result<(), CriteriaError> {
    let n = si.degree();
    if 2 * l >= n {
        return Err(CriteriaError::IndexOutOfRange { l, n });
    }
    Ok(())
}

/// `|a_{n-l}|` against `(1/2) weight S_l`.
fn paired_inequality(si: &SelfInversive, l: usize, weight: f64) -> Inequality {
    let a = si.poly().coeffs();
    let n = si.degree();
    let rest: f64 = (0..=n)
        .filter(|&k| k != l && k != n - l)
        .map(|k| a[k].norm())
        .sum();
    Inequality {
        lhs: a[n - l].norm(),
        rhs: 0.5 * weight * rest,
    }
}

/// Sides of the exact-count inequality for index `l`.
pub fn exact_count_sides(si: &SelfInversive, l: usize) -> Result<Inequality, CriteriaError> {
    check_index(si, l)?;
    let n = si.degree() as f64;
    Ok(paired_inequality(si, l, n / (n - 2.0 * l as f64)))
}

/// Sides of the at-least inequality for index `l`.
pub fn at_least_sides(si: &SelfInversive, l: usize) -> Result<Inequality, CriteriaError> {
    check_index(si, l)?;
    Ok(paired_inequality(si, l, 1.0))
}

/// Sides of the no-roots inequality; `n` must be even.
pub fn no_roots_sides(si: &SelfInversive) -> Result<Inequality, CriteriaError> {
    let n = si.degree();
    if !n.is_multiple_of(2) {
        return Err(CriteriaError::OddDegree(n));
    }
    let a = si.poly().coeffs();
    let rest: f64 = (0..=n).filter(|&k| k != n / 2).map(|k| a[k].norm()).sum();
    Ok(Inequality {
        lhs: a[n / 2].norm(),
        rhs: rest,
    })
}

fn no_prediction(l: usize, margin: f64) -> RootCountPrediction {
    RootCountPrediction {
        kind: PredictionKind::NoPrediction,
        count: 0,
        l,
        simple: false,
        margin,
    }
}

/// Exactly `n - 2l` simple roots on the circle when the exact-count
/// inequality holds.
pub fn exact_count_criterion(
    si: &SelfInversive,
    l: usize,
) -> Result<RootCountPrediction, CriteriaError> {
    let ineq = exact_count_sides(si, l)?;
    if !ineq.holds() {
        return Ok(no_prediction(l, ineq.margin()));
    }
    Ok(RootCountPrediction {
        kind: PredictionKind::ExactOnCircle,
        count: si.degree() - 2 * l,
        l,
        simple: true,
        margin: ineq.margin(),
    })
}

/// At least `n - 2l` roots on the circle; no simplicity claim.
pub fn at_least_criterion(
    si: &SelfInversive,
    l: usize,
) -> Result<RootCountPrediction, CriteriaError> {
    let ineq = at_least_sides(si, l)?;
    if !ineq.holds() {
        return Ok(no_prediction(l, ineq.margin()));
    }
    Ok(RootCountPrediction {
        kind: PredictionKind::AtLeastOnCircle,
        count: si.degree() - 2 * l,
        l,
        simple: false,
        margin: ineq.margin(),
    })
}

/// No roots on the circle when the middle coefficient dominates.
pub fn no_roots_criterion(si: &SelfInversive) -> Result<RootCountPrediction, CriteriaError> {
    let ineq = no_roots_sides(si)?;
    let l = si.degree() / 2;
    if !ineq.holds() {
        return Ok(no_prediction(l, ineq.margin()));
    }
    Ok(RootCountPrediction {
        kind: PredictionKind::NoneOnCircle,
        count: 0,
        l,
        simple: false,
        margin: ineq.margin(),
    })
}

/// The `l = 0` exact-count condition: every root on the circle, all simple.
pub fn lakatos_criterion(si: &SelfInversive) -> RootCountPrediction {
    let mut pred = exact_count_criterion(si, 0).expect("l = 0 is valid for n >= 1");
    if pred.kind == PredictionKind::ExactOnCircle {
        pred.kind = PredictionKind::AllOnCircle;
    }
    pred
}

/// Result of the `l = 1` test together with the Salem-candidate flag.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SalemCriterion {
    pub prediction: RootCountPrediction,
    /// Integer coefficients and `omega = 1`.
    pub salem_candidate: bool,
}

/// Integer tolerance used for the candidate flag.
pub const INTEGER_TOL: f64 = 1e-9;

/// The `l = 1` exact-count condition, for `n >= 3`.
pub fn salem_criterion(si: &SelfInversive) -> Result<SalemCriterion, CriteriaError> {
    let n = si.degree();
    if n < 3 {
        return Err(CriteriaError::DegreeTooLow { n, required: 3 });
    }
    let prediction = exact_count_criterion(si, 1)?;
    let salem_candidate =
        si.report().is_self_reciprocal && si.poly().has_integer_coeffs(INTEGER_TOL);
    Ok(SalemCriterion {
        prediction,
        salem_candidate,
    })
}

/// Every valid index `l` with `2l < n`.
pub fn indices(n: usize) -> std::ops::Range<usize> {
    0..n.div_ceil(2)
}

/// Every prediction that fires, in scan order: exact counts by `l`
/// (with `l = 0` labelled all-on-circle), the no-roots condition, then the
/// at-least counts by `l`.
pub fn fired(si: &SelfInversive) -> Vec<RootCountPrediction> {
    let n = si.degree();
    let mut out = Vec::new();
    for l in indices(n) {
        let p = if l == 0 {
            lakatos_criterion(si)
        } else {
            exact_count_criterion(si, l).expect("index in range")
        };
        out.push(p);
    }
    if n.is_multiple_of(2) {
        out.push(no_roots_criterion(si).expect("even degree"));
    }
    for l in indices(n) {
        out.push(at_least_criterion(si, l).expect("index in range"));
    }
    out.retain(|p| p.kind.fired());
    out
}

/// The strongest prediction among all criteria.
///
/// Exact, all-on-circle and no-roots claims beat at-least claims; ties go to
/// the larger asserted count, then the larger margin. If nothing fires, the
/// result is `NoPrediction` carrying the largest (nonpositive) exact-count
/// margin.
pub fn best_prediction(si: &SelfInversive) -> RootCountPrediction {
    let best = fired(si).into_iter().max_by(|a, b| {
        a.kind
            .rank()
            .cmp(&b.kind.rank())
            .then(a.count.cmp(&b.count))
            .then(a.margin.total_cmp(&b.margin))
    });
    best.unwrap_or_else(|| {
        indices(si.degree())
            .map(|l| exact_count_criterion(si, l).expect("index in range"))
            .max_by(|a, b| a.margin.total_cmp(&b.margin))
            .expect("n >= 1 has at least one index")
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CriterionName {
    ExactCount,
    AtLeast,
    NoRoots,
}

/// One line of the criteria table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionRow {
    pub criterion: CriterionName,
    pub l: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub fires: bool,
}

/// Both sides of every inequality; restricted to one index when `only_l` is
/// set (the no-roots row then appears only for `l = n/2`).
pub fn table(
    si: &SelfInversive,
    only_l: Option<usize>,
) -> Result<Vec<CriterionRow>, CriteriaError> {
    let n = si.degree();
    let ls: Vec<usize> = match only_l {
        Some(l) if 2 * l == n => vec![],
        Some(l) => {
            check_index(si, l)?;
            vec![l]
        }
        None => indices(n).collect(),
    };
    let row = |criterion, l, ineq: Inequality| CriterionRow {
        criterion,
        l,
        lhs: ineq.lhs,
        rhs: ineq.rhs,
        margin: ineq.margin(),
        fires: ineq.holds(),
    };
    let mut rows = Vec::new();
    for &l in &ls {
        rows.push(row(CriterionName::ExactCount, l, exact_count_sides(si, l)?));
        rows.push(row(CriterionName::AtLeast, l, at_least_sides(si, l)?));
    }
    if n.is_multiple_of(2) && only_l.is_none_or(|l| 2 * l == n) {
        rows.push(row(CriterionName::NoRoots, n / 2, no_roots_sides(si)?));
    }
    Ok(rows)
}

/// Polar data of a self-inversive polynomial on the unit circle.
///
/// With `z = e^{it}`, `omega = e^{i sigma}` and `a_k = |a_k| e^{i phi_k}`,
/// the function `r(t) = omega^{-1/2} e^{-int/2} p(e^{it})` is real, and the
/// pair `a_l z^l + a_{n-l} z^{n-l}` contributes
/// `2 |a_{n-l}| cos((n/2 - l) t + phi_{n-l} - sigma/2)` to it. The nodes are
/// the extrema of that cosine over one period.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseDecomposition {
    pub sigma: f64,
    pub phases: Vec<f64>,
    pub magnitudes: Vec<f64>,
    pub t_nodes: Vec<f64>,
}

impl PhaseDecomposition {
    pub fn new(si: &SelfInversive, l: usize) -> Result<Self, CriteriaError> {
        check_index(si, l)?;
        let n = si.degree();
        let a = si.poly().coeffs();
        let sigma = si.omega().arg();
        let phases: Vec<f64> = a.iter().map(|c| c.arg()).collect();
        let magnitudes = a.iter().map(|c| c.norm()).collect();
        let width = (n - 2 * l) as f64;
        let t_nodes = (0..=n - 2 * l)
            .map(|j| (2.0 * PI * j as f64 + sigma - 2.0 * phases[n - l]) / width)
            .collect();
        Ok(Self {
            sigma,
            phases,
            magnitudes,
            t_nodes,
        })
    }
}

/// The real trigonometric form `omega^{-1/2} e^{-int/2} p(e^{it})`, with the
/// principal square root of `omega`.
pub fn trig_form(si: &SelfInversive, t: f64) -> f64 {
    let n = si.degree() as f64;
    let sigma = si.omega().arg();
    let value = si.poly().evaluate(Coeff::from_polar(1.0, t));
    (value * Coeff::from_polar(1.0, -0.5 * (sigma + n * t))).re
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngleInterval {
    pub t_lo: f64,
    pub t_hi: f64,
    pub sign_lo: i8,
    pub sign_hi: i8,
}

impl AngleInterval {
    /// Whether angle `theta` (any branch) falls in `[t_lo, t_hi]` modulo 2 pi.
    pub fn contains_angle(&self, theta: f64) -> bool {
        let shifted = self.t_lo + (theta - self.t_lo).rem_euclid(2.0 * PI);
        shifted <= self.t_hi
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Localization {
    pub decomposition: PhaseDecomposition,
    pub intervals: Vec<AngleInterval>,
}

/// Splits one period into `n - 2l` angle intervals, each holding at least
/// one root `e^{it}`, when the at-least condition holds for `l`.
///
/// The signs of the trigonometric form at consecutive nodes are checked to
/// alternate; a sign change on every interval is what places a root there.
pub fn trig_localize(si: &SelfInversive, l: usize) -> Result<Localization, CriteriaError> {
    let pred = at_least_criterion(si, l)?;
    if !pred.kind.fired() {
        return Err(CriteriaError::NotSatisfied {
            l,
            margin: pred.margin,
        });
    }
    let decomposition = PhaseDecomposition::new(si, l)?;
    let floor = TOL_CONTOUR * si.poly().abs_sum_at(1.0);
    let signs = decomposition
        .t_nodes
        .iter()
        .enumerate()
        .map(|(j, &t)| {
            let r = trig_form(si, t);
            if r.abs() <= floor {
                Err(CriteriaError::DegenerateNode { j, t })
            } else {
                Ok(if r > 0.0 { 1i8 } else { -1i8 })
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let intervals = decomposition
        .t_nodes
        .windows(2)
        .zip(signs.windows(2))
        .enumerate()
        .map(|(j, (t, s))| {
            if s[0] == s[1] {
                return Err(CriteriaError::SignNotAlternating { j });
            }
            Ok(AngleInterval {
                t_lo: t[0],
                t_hi: t[1],
                sign_lo: s[0],
                sign_hi: s[1],
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Localization {
        decomposition,
        intervals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Coeff {
        Coeff::new(re, im)
    }

    fn si(p: Polynomial) -> SelfInversive {
        SelfInversive::new(p).unwrap()
    }

    fn h() -> SelfInversive {
        si(Polynomial::new(vec![
            c(1.0, 1.0),
            c(-2.0, 0.0),
            c(0.0, 0.0),
            c(0.0, -2.0),
            c(1.0, 1.0),
        ])
        .unwrap())
    }

    fn salem_like() -> SelfInversive {
        si(Polynomial::from_real(&[1.0, 10.0, 1.0, 10.0, 1.0]).unwrap())
    }

    fn unity(n: usize) -> SelfInversive {
        let mut a = vec![c(0.0, 0.0); n + 1];
        a[0] = c(-1.0, 0.0);
        a[n] = c(1.0, 0.0);
        si(Polynomial::new(a).unwrap())
    }

    #[test]
    fn exact_count_examples() {
        let p = exact_count_criterion(&salem_like(), 1).unwrap();
        assert_eq!(p.kind, PredictionKind::ExactOnCircle);
        assert_eq!((p.count, p.l, p.simple), (2, 1, true));
        assert_eq!(p.margin, 7.0);

        let p = exact_count_criterion(&h(), 1).unwrap();
        assert_eq!(p.kind, PredictionKind::NoPrediction);
        assert_abs_diff_eq!(p.margin, 2.0 - 2.0 * 2f64.sqrt(), epsilon = 1e-14);

        let p = exact_count_criterion(&unity(5), 0).unwrap();
        assert_eq!(
            (p.kind, p.count, p.margin),
            (PredictionKind::ExactOnCircle, 5, 1.0)
        );
    }

    #[test]
    fn index_range_is_enforced() {
        assert_eq!(
            exact_count_criterion(&h(), 2),
            Err(CriteriaError::IndexOutOfRange { l: 2, n: 4 })
        );
        assert!(at_least_criterion(&unity(5), 3).is_err());
        assert!(at_least_criterion(&unity(5), 2).is_ok());
    }

    #[test]
    fn no_roots_examples() {
        let p = no_roots_criterion(&si(Polynomial::from_real(&[1.0, 5.0, 1.0]).unwrap())).unwrap();
        assert_eq!(
            (p.kind, p.count, p.l, p.margin),
            (PredictionKind::NoneOnCircle, 0, 1, 3.0)
        );

        let p = no_roots_criterion(&si(Polynomial::from_real(&[1.0, 1.0, 1.0]).unwrap())).unwrap();
        assert_eq!(p.kind, PredictionKind::NoPrediction);
        assert_eq!(p.margin, -1.0);

        // boundary: |a_2| equals the rest exactly
        let p = no_roots_criterion(&si(
            Polynomial::from_real(&[1.0, 1.0, 2.0, 1.0, 1.0]).unwrap()
        ))
        .unwrap();
        assert_eq!((p.kind, p.margin), (PredictionKind::NoPrediction, -2.0));
        let p = no_roots_criterion(&si(
            Polynomial::from_real(&[1.0, 1.0, 4.0, 1.0, 1.0]).unwrap()
        ))
        .unwrap();
        assert_eq!((p.kind, p.margin), (PredictionKind::NoPrediction, 0.0));

        assert_eq!(
            no_roots_criterion(&unity(3)),
            Err(CriteriaError::OddDegree(3))
        );
    }

    #[test]
    fn at_least_examples() {
        let p = at_least_criterion(&h(), 1).unwrap();
        assert_eq!(
            (p.kind, p.count, p.simple),
            (PredictionKind::AtLeastOnCircle, 2, false)
        );
        assert_abs_diff_eq!(p.margin, 2.0 - 2f64.sqrt(), epsilon = 1e-14);

        let p = at_least_criterion(&salem_like(), 1).unwrap();
        assert_eq!(
            (p.kind, p.count, p.margin),
            (PredictionKind::AtLeastOnCircle, 2, 8.5)
        );

        // a_{n-1} = 0
        let p = at_least_criterion(
            &si(Polynomial::from_real(&[1.0, 0.0, 3.0, 0.0, 1.0]).unwrap()),
            1,
        )
        .unwrap();
        assert_eq!(p.kind, PredictionKind::NoPrediction);
    }

    #[test]
    fn lakatos_examples() {
        let p = lakatos_criterion(&si(Polynomial::from_real(&[3.0, 1.0, 3.0]).unwrap()));
        assert_eq!(
            (p.kind, p.count, p.simple, p.margin),
            (PredictionKind::AllOnCircle, 2, true, 2.5)
        );
        assert_eq!(
            lakatos_criterion(&unity(7)).kind,
            PredictionKind::AllOnCircle
        );
        let p = lakatos_criterion(&si(Polynomial::from_real(&[1.0, 5.0, 1.0]).unwrap()));
        assert_eq!((p.kind, p.margin), (PredictionKind::NoPrediction, -1.5));
    }

    #[test]
    fn salem_examples() {
        let bethe = si(Polynomial::from_real(&[2.0, -3.0, 0.0, -3.0, 2.0]).unwrap());
        let s = salem_criterion(&bethe).unwrap();
        assert_eq!(s.prediction.kind, PredictionKind::NoPrediction);
        assert_eq!(s.prediction.margin, -1.0);
        assert!(s.salem_candidate);

        let s = salem_criterion(&salem_like()).unwrap();
        assert_eq!(s.prediction.kind, PredictionKind::ExactOnCircle);
        assert!(s.salem_candidate);

        let s = salem_criterion(&si(
            Polynomial::from_real(&[1.0, 10.5, 1.0, 10.5, 1.0]).unwrap()
        ))
        .unwrap();
        assert_eq!(s.prediction.kind, PredictionKind::ExactOnCircle);
        assert!(!s.salem_candidate);
        assert!(!salem_criterion(&h()).unwrap().salem_candidate);

        assert_eq!(
            salem_criterion(&si(Polynomial::from_real(&[1.0, 5.0, 1.0]).unwrap())),
            Err(CriteriaError::DegreeTooLow { n: 2, required: 3 })
        );
    }

    #[test]
    fn best_prediction_examples() {
        let b = best_prediction(&h());
        assert_eq!(
            (b.kind, b.l, b.count),
            (PredictionKind::AtLeastOnCircle, 1, 2)
        );
        let b = best_prediction(&salem_like());
        assert_eq!(
            (b.kind, b.l, b.count),
            (PredictionKind::ExactOnCircle, 1, 2)
        );
        let b = best_prediction(&unity(6));
        assert_eq!((b.kind, b.count), (PredictionKind::AllOnCircle, 6));
        let b = best_prediction(&si(Polynomial::from_real(&[1.0, 5.0, 1.0]).unwrap()));
        assert_eq!(b.kind, PredictionKind::NoneOnCircle);
    }

    #[test]
    fn best_prediction_without_any_firing() {
        // 1 + z + z^2 + z^3 + z^4: nothing dominates
        let p = si(Polynomial::from_real(&[1.0; 5]).unwrap());
        assert!(fired(&p).is_empty());
        let b = best_prediction(&p);
        assert_eq!(b.kind, PredictionKind::NoPrediction);
        assert!(b.margin <= 0.0);
    }

    #[test]
    fn table_rows() {
        let rows = table(&salem_like(), None).unwrap();
        let find = |name, l| {
            rows.iter()
                .find(|r| r.criterion == name && r.l == l)
                .unwrap()
        };
        assert_eq!(find(CriterionName::ExactCount, 0).margin, -9.5);
        assert_eq!(find(CriterionName::ExactCount, 1).margin, 7.0);
        assert_eq!(find(CriterionName::AtLeast, 1).margin, 8.5);
        let mid = find(CriterionName::NoRoots, 2);
        assert_eq!((mid.lhs, mid.rhs, mid.fires), (1.0, 22.0, false));
        assert_eq!(rows.len(), 5);

        let only = table(&salem_like(), Some(1)).unwrap();
        assert_eq!(only.len(), 2);
        let only = table(&salem_like(), Some(2)).unwrap();
        assert_eq!(only.len(), 1);
        assert!(table(&salem_like(), Some(3)).is_err());
    }

    #[test]
    fn phase_nodes_span_one_period() {
        let d = PhaseDecomposition::new(&h(), 1).unwrap();
        assert_eq!(d.t_nodes.len(), 3);
        assert_abs_diff_eq!(d.t_nodes[2] - d.t_nodes[0], 2.0 * PI, epsilon = 1e-14);
        assert!(d.t_nodes.windows(2).all(|w| w[1] > w[0]));
        // sigma = pi/2, phi_3 = -pi/2: t_0 = (pi/2 + pi) / 2
        assert_abs_diff_eq!(d.t_nodes[0], 0.75 * PI, epsilon = 1e-14);
    }

    #[test]
    fn trig_form_is_real_on_the_circle() {
        let p = h();
        for i in 0..50 {
            let t = -3.0 + 0.13 * i as f64;
            let z = Coeff::from_polar(1.0, t);
            let full =
                p.poly().evaluate(z) * Coeff::from_polar(1.0, -0.5 * (p.omega().arg() + 4.0 * t));
            assert!(full.im.abs() < 1e-13);
            assert_eq!(trig_form(&p, t), full.re);
        }
    }

    #[test]
    fn localize_h() {
        let loc = trig_localize(&h(), 1).unwrap();
        assert_eq!(loc.intervals.len(), 2);
        for iv in &loc.intervals {
            assert_eq!(iv.sign_lo, -iv.sign_hi);
        }
    }

    #[test]
    fn localize_unity_contains_each_root_of_unity() {
        for n in 1..9 {
            let loc = trig_localize(&unity(n), 0).unwrap();
            assert_eq!(loc.intervals.len(), n);
            for (j, iv) in loc.intervals.iter().enumerate() {
                // nodes at (2 pi j + pi) / n bracket the root of unity e^{2 pi i (j+1) / n}
                let root = 2.0 * PI * (j + 1) as f64 / n as f64;
                assert!(iv.contains_angle(root), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn localize_requires_the_condition() {
        let p = si(Polynomial::from_real(&[1.0; 5]).unwrap());
        assert!(matches!(
            trig_localize(&p, 1),
            Err(CriteriaError::NotSatisfied { l: 1, .. })
        ));
    }

    #[test]
    fn contains_angle_wraps() {
        let iv = AngleInterval {
            t_lo: 3.0,
            t_hi: 4.0,
            sign_lo: 1,
            sign_hi: -1,
        };
        assert!(iv.contains_angle(3.5 - 2.0 * PI));
        assert!(iv.contains_angle(3.5 + 4.0 * PI));
        assert!(!iv.contains_angle(2.9));
    }
}
