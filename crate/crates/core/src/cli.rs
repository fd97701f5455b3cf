//! Command-line front end: argument parsing and CSV/JSON rendering.
//!
//! Exit codes are 0 on success, 2 for bad arguments or unparsable input,
//! 3 when the requested result is not certified at the given precision, and
//! 1 for I/O failures.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bigreal::{make_constant, synthesize_prescribed_tau, CertifiedReal, Constant};
use crate::contfrac::{convergents, expand, tau_sequence, Convergent};
use crate::error::Error;
use crate::farey::farey_in_interval;
use crate::rational::Rational;
use crate::regularity::{
    boyd_bounds, boyd_indices, dyadic_scales, eval_generalized, holder_estimate_convergents,
    holder_estimate_oscillation, spectrum, BoydFunction, BoydGrid, Dimension, HolderReport,
};
use crate::thomae::{eval, upper_darboux, ThomaeParams};

#[derive(Parser, Debug)]
#[command(name = "thomae", version, about = "Exact evaluation and regularity of f_θ(p/q) = q^(-θ)")]
pub struct Cli {
    /// Exponent θ > 0 (integer, fraction or decimal).
    #[arg(long, global = true, default_value = "1")]
    pub theta: Rational,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write data here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// f_θ at a rational, printed exactly when q^(-θ) is rational.
    Eval { x: Rational },
    /// f_θ at every reduced fraction in (0, 1) with denominator <= qmax.
    Sample {
        #[arg(long, default_value_t = 1000)]
        qmax: u64,
    },
    /// Certified continued fraction digits and convergents.
    Cf {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 40)]
        max_terms: usize,
    },
    /// Irrationality exponent estimates τ_j and their tail maximum.
    Tau {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 40)]
        max_terms: usize,
    },
    /// Pointwise Hölder exponent, by convergents and by oscillation.
    Holder {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 40)]
        max_terms: usize,
        /// Dyadic scales 2^-a ..= 2^-b, written `a:b`.
        #[arg(long, default_value = "5:40")]
        scales: ScaleRange,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Known irrationality exponent, for the theoretical value.
        #[arg(long)]
        tau: Option<f64>,
    },
    /// Hölder spectrum dimension at the given exponents.
    Spectrum {
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<f64>,
    },
    /// Boyd bounds and indices of φ(x) = x^θ (|ln x| + 1)^γ.
    Boyd {
        #[arg(long, default_value_t = 1.0)]
        gamma: f64,
        #[arg(long, value_delimiter = ',', default_value = "1e-2,1e-4,1e-8")]
        x: Vec<f64>,
        /// Grid points per decade of s.
        #[arg(long, default_value_t = 200)]
        grid: usize,
        /// Decades of s sampled below 1.
        #[arg(long, default_value_t = 300)]
        decades: usize,
    },
    /// Upper Darboux sums over n equal cells of [0, 1].
    Darboux {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u64>,
    },
    /// Irrational with prescribed irrationality exponent.
    Synth {
        #[arg(long)]
        tau: f64,
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
    /// f_φ with φ(x) = x^θ (|ln x| + 1)^γ at the fractions of `sample`.
    FigureData {
        #[arg(long, default_value_t = 1000)]
        qmax: u64,
        #[arg(long, default_value_t = 1.0)]
        gamma: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Convergent,
    Oscillation,
    Both,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    #[command(flatten)]
    pub source: Source,
    /// Partial quotients of the synthesized irrational.
    #[arg(long, default_value_t = 12)]
    pub terms: usize,
    /// Decimal digits for named constants.
    #[arg(long, default_value_t = 100)]
    pub digits: u32,
}

/// Exactly one source for the real input.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// sqrt2m1, golden_conj, e_frac or pi_frac.
    #[arg(long)]
    pub constant: Option<Constant>,
    /// An exact rational.
    #[arg(long)]
    pub rational: Option<Rational>,
    /// Synthesize an irrational with this exponent.
    #[arg(long)]
    pub synth_tau: Option<f64>,
}

impl Input {
    /// The certified real and, when known, its irrationality exponent.
    fn resolve(&self) -> crate::Result<(CertifiedReal, Option<f64>)> {
        if let Some(c) = self.source.constant {
            // τ(π) is open
            let tau = (c != Constant::PiFrac).then_some(2.0);
            return Ok((make_constant(c, self.digits)?, tau));
        }
        if let Some(r) = &self.source.rational {
            return Ok((CertifiedReal::exact(r.clone()), None));
        }
        let t = self.source.synth_tau.expect("clap enforces one source");
        Ok((synthesize_prescribed_tau(t, self.terms)?.value, Some(t)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScaleRange {
    pub from: u32,
    pub to: u32,
}

impl std::str::FromStr for ScaleRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once(':').ok_or_else(|| format!("expected `a:b`, got `{s}`"))?;
        let from = a.trim().parse::<u32>().map_err(|e| e.to_string())?;
        let to = b.trim().parse::<u32>().map_err(|e| e.to_string())?;
        if from >= to || to > 4096 {
            return Err(format!("need a < b <= 4096, got {from}:{to}"));
        }
        Ok(ScaleRange { from, to })
    }
}

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Io(io::Error),
    Csv(csv::Error),
}

impl CliError {
    /// The reader closed its end of the pipe, as `head` does.
    pub fn is_broken_pipe(&self) -> bool {
        let io = match self {
            CliError::Io(e) => Some(e),
            CliError::Csv(e) => match e.kind() {
                csv::ErrorKind::Io(e) => Some(e),
                _ => None,
            },
            CliError::Lib(_) => None,
        };
        io.is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::InsufficientPrecision(_)) => 3,
            CliError::Lib(_) => 2,
            CliError::Io(_) | CliError::Csv(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Csv(e) => write!(f, "csv error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Csv(e)
    }
}

type Table = (Vec<&'static str>, Vec<Vec<String>>);

/// Rendered result: JSON mirrors the report types, CSV flattens them.
struct Rendered {
    json: serde_json::Value,
    csv: Option<Table>,
    /// Plain-text body used in place of CSV for scalar results.
    text: Option<String>,
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let rendered = render(cli)?;
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match cli.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &rendered.json).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => match (rendered.text, rendered.csv) {
            (Some(text), _) => writeln!(out, "{text}")?,
            (None, Some((header, rows))) => {
                let mut w = csv::Writer::from_writer(&mut out);
                w.write_record(&header)?;
                for row in rows {
                    w.write_record(&row)?;
                }
                w.flush()?;
            }
            (None, None) => unreachable!("every command renders CSV or text"),
        },
    }
    out.flush()?;
    Ok(())
}

fn farey_interior(qmax: u64) -> crate::Result<Vec<Rational>> {
    if qmax == 0 {
        return Err(Error::domain("qmax must be at least 1"));
    }
    let all = farey_in_interval(&Rational::zero(), &Rational::one(), qmax)?;
    Ok(all.into_iter().filter(|x| x.is_positive() && *x < Rational::one()).collect())
}

#[derive(Serialize)]
struct Point {
    x: Rational,
    f: f64,
}

fn points_rendered(points: Vec<Point>) -> Rendered {
    let rows = points.iter().map(|p| vec![p.x.to_f64().to_string(), p.f.to_string()]).collect();
    Rendered { json: to_json(&points), csv: Some((vec!["x", "f"], rows)), text: None }
}

fn render(cli: &Cli) -> Result<Rendered, CliError> {
    let params = ThomaeParams::new(cli.theta.clone())?;
    Ok(match &cli.command {
        Command::Eval { x } => {
            let v = eval(x, &params);
            #[derive(Serialize)]
            struct EvalOut {
                x: Rational,
                theta: Rational,
                f: String,
                f_float: f64,
            }
            let f = v.to_string();
            let out = EvalOut {
                x: x.clone(),
                theta: params.theta.clone(),
                f: f.clone(),
                f_float: v.to_f64(),
            };
            Rendered { json: to_json(&out), csv: None, text: Some(f) }
        }

        Command::Sample { qmax } => {
            let points = farey_interior(*qmax)?
                .into_iter()
                .map(|x| {
                    let f = eval(&x, &params).to_f64();
                    Point { x, f }
                })
                .collect();
            points_rendered(points)
        }

        Command::FigureData { qmax, gamma } => {
            let phi = BoydFunction::new(params.theta_f64(), *gamma)?;
            let points = farey_interior(*qmax)?
                .into_iter()
                .map(|x| {
                    let f = eval_generalized(&x, &phi);
                    Point { x, f }
                })
                .collect();
            points_rendered(points)
        }

        Command::Cf { input, max_terms } => {
            let (x, _) = input.resolve()?;
            let cf = expand(&x, *max_terms)?;
            let convs = convergents(&cf);
            let rows = cf
                .digits
                .iter()
                .zip(&convs)
                .map(|(a, c)| {
                    vec![c.index.to_string(), a.to_string(), c.p.to_string(), c.q.to_string()]
                })
                .collect();
            #[derive(Serialize)]
            struct CfOut<'a> {
                #[serde(flatten)]
                cf: &'a crate::contfrac::ContinuedFraction,
                convergents: &'a [Convergent],
            }
            Rendered {
                json: to_json(&CfOut { cf: &cf, convergents: &convs }),
                csv: Some((vec!["index", "digit", "p", "q"], rows)),
                text: None,
            }
        }

        Command::Tau { input, max_terms } => {
            let (x, _) = input.resolve()?;
            let convs = convergents(&expand(&x, *max_terms)?);
            let est = tau_sequence(&x, &convs)?;
            let rows = est
                .tau_seq
                .iter()
                .map(|t| {
                    vec![
                        t.index.to_string(),
                        t.q.to_string(),
                        t.tau.to_string(),
                        t.tau_lo.to_string(),
                        t.tau_hi.to_string(),
                        est.tau_hat.to_string(),
                    ]
                })
                .collect();
            Rendered {
                json: to_json(&est),
                csv: Some((vec!["index", "q", "tau", "tau_lo", "tau_hi", "tau_hat"], rows)),
                text: None,
            }
        }

        Command::Holder { input, max_terms, scales, method, tau } => {
            let (x, known_tau) = input.resolve()?;
            let mut report = HolderReport::empty(params.theta.clone());
            if x.is_exact() && *method == Method::Convergent {
                return Err(
                    Error::domain("the convergent estimator needs an irrational input").into()
                );
            }
            // convergents of a rational end at the rational itself
            if !x.is_exact() && matches!(method, Method::Convergent | Method::Both) {
                report = report.merge(holder_estimate_convergents(&x, &params, *max_terms)?);
            }
            if matches!(method, Method::Oscillation | Method::Both) {
                let s = dyadic_scales(scales.from, scales.to);
                report = report.merge(holder_estimate_oscillation(&x, &params, &s)?);
            }
            if x.is_exact() {
                report.theoretical = Some(0.0);
            } else if let Some(t) = tau.or(known_tau) {
                report = report.with_theoretical(t)?;
            }
            let fit = report.fit.as_ref();
            let row = vec![
                report.theta.to_string(),
                opt(report.theoretical),
                opt(report.est_convergent),
                opt(report.est_oscillation),
                opt(report.constant_c),
                opt(report.tau.as_ref().map(|t| t.tau_hat)),
                fit.map(|f| f.n_scales.to_string()).unwrap_or_default(),
                opt(fit.map(|f| f.rms_residual)),
            ];
            let header = vec![
                "theta",
                "theoretical",
                "est_convergent",
                "est_oscillation",
                "constant_C",
                "tau_hat",
                "n_scales",
                "rms_residual",
            ];
            Rendered { json: to_json(&report), csv: Some((header, vec![row])), text: None }
        }

        Command::Spectrum { h } => {
            let points =
                h.iter().map(|&h| spectrum(h, &params)).collect::<crate::Result<Vec<_>>>()?;
            let rows = points
                .iter()
                .map(|p| {
                    let dim = match p.dim {
                        Dimension::Finite(d) => d.to_string(),
                        Dimension::NegInfinity => "-inf".to_string(),
                    };
                    vec![p.h.to_string(), dim]
                })
                .collect();
            Rendered { json: to_json(&points), csv: Some((vec!["h", "dim"], rows)), text: None }
        }

        Command::Boyd { gamma, x, grid, decades } => {
            let phi = BoydFunction::new(params.theta_f64(), *gamma)?;
            let grid = BoydGrid { points_per_decade: *grid, decades: *decades };
            let bounds =
                x.iter().map(|&x| boyd_bounds(&phi, x, grid)).collect::<crate::Result<Vec<_>>>()?;
            let indices = boyd_indices(&phi, x, grid)?;
            let rows = bounds
                .iter()
                .zip(&indices.trend)
                .map(|(b, s)| {
                    vec![
                        b.x.to_string(),
                        b.lower.to_string(),
                        b.upper.to_string(),
                        s.s_lower.to_string(),
                        s.s_upper.to_string(),
                    ]
                })
                .collect();
            #[derive(Serialize)]
            struct BoydOut<'a> {
                phi: BoydFunction,
                bounds: &'a [crate::regularity::BoydBounds],
                indices: &'a crate::regularity::BoydIndices,
            }
            Rendered {
                json: to_json(&BoydOut { phi, bounds: &bounds, indices: &indices }),
                csv: Some((vec!["x", "lower", "upper", "s_lower", "s_upper"], rows)),
                text: None,
            }
        }

        Command::Darboux { n } => {
            let sums =
                n.iter().map(|&n| upper_darboux(n, &params)).collect::<crate::Result<Vec<_>>>()?;
            let rows = sums
                .iter()
                .map(|s| {
                    let exact = s.exact.as_ref().map(|e| e.to_string()).unwrap_or_default();
                    vec![s.n.to_string(), s.value.to_string(), exact]
                })
                .collect();
            Rendered {
                json: to_json(&sums),
                csv: Some((vec!["n", "value", "exact"], rows)),
                text: None,
            }
        }

        Command::Synth { tau, terms } => {
            let s = synthesize_prescribed_tau(*tau, *terms)?;
            let rows = s
                .digits
                .iter()
                .enumerate()
                .map(|(i, a)| vec![(i + 1).to_string(), a.to_string()])
                .collect();
            Rendered { json: to_json(&s), csv: Some((vec!["index", "digit"], rows)), text: None }
        }
    })
}
