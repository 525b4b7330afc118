//! Subcommand bodies. Each writes its report to `out` and returns the exit
//! status; errors are input errors.

use std::io::Write;

use anyhow::{anyhow, bail, Context, Result};
use circleroots::bethe::{
    classify_regime, linear_grid, sweep, write_sweep_csv, BetheError, BetheRegime,
    BetheRegimeReport, BetheSpec, SweepRow,
};
use circleroots::criteria::{best_prediction, fired, table, CriterionName, CriterionRow};
use circleroots::inversive::detect;
use circleroots::oracle::{Status as Verdict, Verification};
use circleroots::salem::{boost_to_salem, is_salem, SalemReport};
use circleroots::{
    Coeff, InversiveReport, Polynomial, RootClassification, RootCountPrediction, SelfInversive,
};
use clap::{ArgGroup, Args};
use serde::Serialize;

use crate::input::{parse_coeffs, InputArgs};
use crate::{Format, RunConfig, Status};

/// Off-pair product error accepted as `s * s' = omega`.
const PAIR_TOL: f64 = 1e-8;

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// `a+bi` literal that the coefficient parser reads back unchanged.
fn fmt_coeff(c: Coeff) -> String {
    let (re, im) = (c.re, c.im);
    if im == 0.0 {
        format!("{re}")
    } else if re == 0.0 {
        format!("{im}i")
    } else if im < 0.0 {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

fn fmt_coeffs(p: &Polynomial) -> String {
    p.coeffs()
        .iter()
        .map(|&c| fmt_coeff(c))
        .collect::<Vec<_>>()
        .join(",")
}

fn fmt_prediction(p: &RootCountPrediction) -> String {
    format!(
        "{:?}({}) at l = {}, margin {}",
        p.kind, p.count, p.l, p.margin
    )
}

fn write_roots_text(out: &mut dyn Write, cls: &RootClassification) -> Result<()> {
    let c = cls.counts;
    writeln!(
        out,
        "roots: inside {}, on circle {}, outside {} (scaled residual {:.1e})",
        c.inside, c.on, c.outside, cls.residual
    )?;
    for r in &cls.roots {
        let mult = if r.multiplicity > 1 {
            format!(" x{}", r.multiplicity)
        } else {
            String::new()
        };
        let z = r.value;
        writeln!(
            out,
            "  {:>16.12} {:+.12}i  |z| = {:.12}  {}{mult}",
            z.re,
            z.im,
            z.norm(),
            r.band
        )?;
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Append this many unit-circle points (band `reference`) to CSV output.
    #[arg(long, default_value_t = 0)]
    reference_points: usize,
}

#[derive(Serialize)]
struct AnalyzeReport<'a> {
    polynomial: &'a Polynomial,
    inversive: &'a InversiveReport,
    predictions: Vec<RootCountPrediction>,
    best: Option<RootCountPrediction>,
    verification: Option<Verification>,
}

pub fn analyze(args: &AnalyzeArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<Status> {
    let p = args.input.load()?;
    let inversive = detect(&p, cfg.tol_detect())?;
    let mut report = AnalyzeReport {
        polynomial: &p,
        inversive: &inversive,
        predictions: vec![],
        best: None,
        verification: None,
    };
    let status = if inversive.is_self_inversive {
        let si = SelfInversive::with_tol(p.clone(), cfg.tol_detect())?;
        let best = best_prediction(&si);
        let verification = cfg.oracle.verify_prediction(&p, &best);
        report.predictions = fired(&si);
        report.best = Some(best);
        let status = match verification.verdict {
            Verdict::Pass => Status::Verified,
            Verdict::Fail => Status::Mismatch,
            Verdict::Inconclusive => Status::Inconclusive,
        };
        report.verification = Some(verification);
        status
    } else {
        eprintln!(
            "not self-inversive (max residual {:.3e})",
            inversive.max_residual
        );
        Status::Rejected
    };

    match cfg.format {
        Format::Json => write_json(out, &report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["re", "im", "band"])?;
            if let Some(cls) = report
                .verification
                .as_ref()
                .and_then(|v| v.classification.as_ref())
            {
                for z in cls
                    .roots
                    .iter()
                    .flat_map(|r| std::iter::repeat_n(r, r.multiplicity))
                {
                    w.write_record([
                        z.value.re.to_string(),
                        z.value.im.to_string(),
                        z.band.to_string(),
                    ])?;
                }
            }
            for k in 0..args.reference_points {
                let z = Coeff::from_polar(
                    1.0,
                    2.0 * std::f64::consts::PI * k as f64 / args.reference_points as f64,
                );
                w.write_record([z.re.to_string(), z.im.to_string(), "reference".to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "polynomial: {p}")?;
            match inversive.omega {
                Some(w) if inversive.is_self_inversive => writeln!(
                    out,
                    "self-inversive: omega = {}, max residual {:.1e}",
                    fmt_coeff(w),
                    inversive.max_residual
                )?,
                _ => writeln!(
                    out,
                    "not self-inversive: max residual {:.3e}",
                    inversive.max_residual
                )?,
            }
            for pred in &report.predictions {
                writeln!(out, "fires: {}", fmt_prediction(pred))?;
            }
            if let Some(best) = &report.best {
                if best.kind.fired() {
                    writeln!(out, "prediction: {}", fmt_prediction(best))?;
                } else {
                    writeln!(out, "prediction: none of the criteria fires")?;
                }
            }
            if let Some(v) = &report.verification {
                if let Some(cls) = &v.classification {
                    write_roots_text(out, cls)?;
                }
                for c in &v.clauses {
                    writeln!(out, "check {:?}: {:?} ({})", c.clause, c.status, c.detail)?;
                }
                writeln!(out, "verdict: {:?}", v.verdict)?;
            }
        }
    }
    Ok(status)
}

#[derive(Args, Debug)]
pub struct CriteriaArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Restrict the table to one index l (l = n/2 selects the no-roots row).
    #[arg(long)]
    l: Option<usize>,
}

#[derive(Serialize)]
struct CriteriaReport<'a> {
    omega: Coeff,
    rows: &'a [CriterionRow],
}

fn criterion_name(c: CriterionName) -> &'static str {
    match c {
        CriterionName::ExactCount => "exact_count",
        CriterionName::AtLeast => "at_least",
        CriterionName::NoRoots => "no_roots",
    }
}

/// Loads the input and insists that it is self-inversive.
fn self_inversive(input: &InputArgs, cfg: &RunConfig) -> Result<SelfInversive> {
    let p = input.load()?;
    let rep = detect(&p, cfg.tol_detect())?;
    if !rep.is_self_inversive {
        bail!("not self-inversive (max residual {:.3e})", rep.max_residual);
    }
    Ok(SelfInversive::with_tol(p, cfg.tol_detect())?)
}

pub fn criteria(args: &CriteriaArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<Status> {
    let si = self_inversive(&args.input, cfg)?;
    let rows = table(&si, args.l)?;
    match cfg.format {
        Format::Json => write_json(
            out,
            &CriteriaReport {
                omega: si.omega(),
                rows: &rows,
            },
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["criterion", "l", "lhs", "rhs", "margin", "fires"])?;
            for r in &rows {
                w.write_record([
                    criterion_name(r.criterion).to_string(),
                    r.l.to_string(),
                    r.lhs.to_string(),
                    r.rhs.to_string(),
                    r.margin.to_string(),
                    r.fires.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "omega = {}", fmt_coeff(si.omega()))?;
            writeln!(
                out,
                "{:<12} {:>4} {:>14} {:>14} {:>14}  fires",
                "criterion", "l", "lhs", "rhs", "margin"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:<12} {:>4} {:>14.6} {:>14.6} {:>14.6}  {}",
                    criterion_name(r.criterion),
                    r.l,
                    r.lhs,
                    r.rhs,
                    r.margin,
                    if r.fires { "yes" } else { "no" }
                )?;
            }
        }
    }
    Ok(Status::Verified)
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("phase").required(true).args(["a", "omega"])))]
#[command(group(ArgGroup::new("delta_source").required(true).args(["delta", "grid", "deltas"])))]
pub struct BetheArgs {
    /// Degree n >= 3.
    #[arg(short = 'n', long)]
    n: usize,
    /// Index a in 1..=n, giving omega = exp(2 pi i a / n).
    #[arg(short = 'a', long)]
    a: Option<usize>,
    /// Arbitrary phase omega != -1 instead of an index; rescaled to modulus 1
    /// when within 1e-6 of it.
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
    /// Anisotropy D.
    #[arg(short = 'd', long, allow_negative_numbers = true)]
    delta: Option<f64>,
    /// Sweep LO:HI:COUNT evenly spaced values of D.
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Sweep an explicit comma-separated list of D values.
    #[arg(long, allow_hyphen_values = true)]
    deltas: Option<String>,
}

fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, count] = parts.as_slice() else {
        bail!("--grid expects LO:HI:COUNT, got `{s}`");
    };
    let lo: f64 = lo
        .trim()
        .parse()
        .with_context(|| format!("--grid: bad LO `{lo}`"))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .with_context(|| format!("--grid: bad HI `{hi}`"))?;
    let count: usize = count
        .trim()
        .parse()
        .with_context(|| format!("--grid: bad COUNT `{count}`"))?;
    if count == 0 {
        bail!("--grid: COUNT must be positive");
    }
    Ok(linear_grid(lo, hi, count))
}

fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .enumerate()
        .map(|(i, t)| {
            t.trim()
                .parse::<f64>()
                .with_context(|| format!("--deltas: entry {i} `{}` is not a number", t.trim()))
        })
        .collect()
}

impl BetheArgs {
    fn spec(&self, delta: f64) -> Result<BetheSpec> {
        let spec = match (&self.a, &self.omega) {
            (Some(a), _) => BetheSpec::new(self.n, *a, delta),
            (None, Some(s)) => {
                let w = match parse_coeffs(s)?.as_slice() {
                    &[w] => w,
                    _ => bail!("--omega takes one complex value"),
                };
                let w = if (w.norm() - 1.0).abs() <= 1e-6 {
                    w / w.norm()
                } else {
                    w
                };
                BetheSpec::with_omega(self.n, w, delta)
            }
            (None, None) => bail!("one of -a or --omega is required"),
        };
        spec.map_err(|e| match e {
            BetheError::OmegaMinusOne { .. } => anyhow!("rejected: {e}"),
            e => anyhow!(e),
        })
    }
}

/// Whether the oracle's roots agree with the threshold regime.
fn regime_holds(
    regime: BetheRegime,
    n: usize,
    on: usize,
    simple: bool,
    pair_error: Option<f64>,
) -> bool {
    match regime {
        BetheRegime::AllOnCircleSimple => on == n && simple,
        BetheRegime::TwoOffCircle => {
            on + 2 == n && simple && pair_error.is_none_or(|e| e < PAIR_TOL)
        }
        BetheRegime::Indeterminate => true,
    }
}

fn report_row(rep: &BetheRegimeReport) -> SweepRow {
    SweepRow {
        delta: rep.spec.delta(),
        regime: rep.regime,
        counts: Some(rep.classification.counts),
        simple: Some(rep.simple),
        min_root_gap: rep.classification.min_root_gap(),
        error: None,
    }
}

#[derive(Serialize)]
struct SweepReport<'a> {
    n: usize,
    omega: Coeff,
    threshold_lo: f64,
    threshold_hi: f64,
    rows: &'a [SweepRow],
}

pub fn bethe(args: &BetheArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<Status> {
    if let Some(d) = args.delta {
        let spec = args.spec(d)?;
        let rep = match classify_regime(&spec, &cfg.oracle) {
            Ok(rep) => rep,
            Err(e) => {
                eprintln!("inconclusive: {e}");
                return Ok(Status::Inconclusive);
            }
        };
        let holds = regime_holds(
            rep.regime,
            spec.n(),
            rep.classification.counts.on,
            rep.simple,
            rep.pair_product_error,
        );
        match cfg.format {
            Format::Json => write_json(out, &rep)?,
            Format::Csv => write_sweep_csv(&[report_row(&rep)], &mut *out)?,
            Format::Text => {
                writeln!(
                    out,
                    "n = {}, omega = {}, D = {}",
                    spec.n(),
                    fmt_coeff(spec.omega()),
                    spec.delta()
                )?;
                writeln!(
                    out,
                    "thresholds: {} and {}",
                    rep.threshold_lo, rep.threshold_hi
                )?;
                writeln!(out, "regime: {}", rep.regime)?;
                if let Some((s, t)) = rep.off_pair {
                    writeln!(
                        out,
                        "off-circle pair: {} and {} (|s s' - omega| = {:.1e})",
                        fmt_coeff(s),
                        fmt_coeff(t),
                        rep.pair_product_error.unwrap_or(f64::NAN)
                    )?;
                }
                writeln!(out, "simple: {}", rep.simple)?;
                write_roots_text(out, &rep.classification)?;
            }
        }
        if !holds {
            eprintln!("oracle contradicts the {} regime", rep.regime);
            return Ok(Status::Mismatch);
        }
        return Ok(Status::Verified);
    }

    let grid = match (&args.grid, &args.deltas) {
        (Some(g), _) => parse_grid(g)?,
        (None, Some(l)) => parse_list(l)?,
        (None, None) => bail!("one of -d, --grid or --deltas is required"),
    };
    let spec = args.spec(grid[0])?;
    let rows = sweep(&spec, &grid, &cfg.oracle)?;
    match cfg.format {
        Format::Json => write_json(
            out,
            &SweepReport {
                n: spec.n(),
                omega: spec.omega(),
                threshold_lo: spec.threshold_lo(),
                threshold_hi: spec.threshold_hi(),
                rows: &rows,
            },
        )?,
        Format::Csv => write_sweep_csv(&rows, &mut *out)?,
        Format::Text => {
            writeln!(out, "n = {}, omega = {}", spec.n(), fmt_coeff(spec.omega()))?;
            writeln!(
                out,
                "thresholds: {} and {}",
                spec.threshold_lo(),
                spec.threshold_hi()
            )?;
            writeln!(
                out,
                "{:>12} {:<18} {:>6} {:>4} {:>7}  simple",
                "D", "regime", "inside", "on", "outside"
            )?;
            for r in &rows {
                match (r.counts, &r.error) {
                    (Some(c), _) => writeln!(
                        out,
                        "{:>12.6} {:<18} {:>6} {:>4} {:>7}  {}",
                        r.delta,
                        r.regime.to_string(),
                        c.inside,
                        c.on,
                        c.outside,
                        r.simple.unwrap_or(false)
                    )?,
                    (None, e) => writeln!(
                        out,
                        "{:>12.6} {:<18} error: {}",
                        r.delta,
                        r.regime.to_string(),
                        e.as_deref().unwrap_or("")
                    )?,
                }
            }
        }
    }
    let mismatch = rows.iter().any(|r| {
        r.counts.is_some_and(|c| {
            !regime_holds(r.regime, spec.n(), c.on, r.simple.unwrap_or(false), None)
        })
    });
    Ok(if mismatch {
        Status::Mismatch
    } else if rows.iter().any(|r| r.error.is_some()) {
        Status::Inconclusive
    } else {
        Status::Verified
    })
}

#[derive(Args, Debug)]
pub struct SalemArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Treat the input as a seed and raise a_1 = a_{n-1} until the l = 1
    /// exact-count condition holds before certifying.
    #[arg(long)]
    boost: bool,
}

#[derive(Serialize)]
struct SalemOutput<'a> {
    polynomial: &'a Polynomial,
    boosted: bool,
    report: &'a SalemReport,
}

pub fn salem(args: &SalemArgs, cfg: &RunConfig, out: &mut dyn Write) -> Result<Status> {
    let input = args.input.load()?;
    let (p, report) = if args.boost {
        boost_to_salem(&input, &cfg.oracle)?
    } else {
        let rep = is_salem(&input, &cfg.oracle);
        (input.clone(), rep)
    };
    match cfg.format {
        Format::Json => write_json(
            out,
            &SalemOutput {
                polynomial: &p,
                boosted: args.boost,
                report: &report,
            },
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "coeffs",
                "salem",
                "salem_number",
                "leading_coefficient",
                "reasons",
            ])?;
            w.write_record([
                fmt_coeffs(&p),
                report.is_salem.to_string(),
                report
                    .salem_number
                    .map(|r| r.to_string())
                    .unwrap_or_default(),
                report
                    .leading_coefficient
                    .map(|r| r.to_string())
                    .unwrap_or_default(),
                report.reasons.join("; "),
            ])?;
            w.flush()?;
        }
        Format::Text => {
            if args.boost {
                writeln!(out, "seed: {input}")?;
                writeln!(out, "boosted: {p}")?;
            } else {
                writeln!(out, "polynomial: {p}")?;
            }
            match report.salem_number {
                Some(r) if report.is_salem => writeln!(out, "salem: yes, Salem number {r}")?,
                _ => writeln!(out, "salem: no")?,
            }
            if let Some(c) = report.leading_coefficient {
                writeln!(out, "leading coefficient: {c}")?;
            }
            for r in &report.reasons {
                writeln!(out, "  - {r}")?;
            }
        }
    }
    Ok(if report.inconclusive {
        Status::Inconclusive
    } else {
        Status::Verified
    })
}
