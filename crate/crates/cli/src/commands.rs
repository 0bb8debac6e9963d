//! Command-line front end. `run` never exits the process, so it can be
//! driven from tests; the binary maps its outcome to an exit code.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use muntz::bernstein::bernstein_basis;
use muntz::blossom::{blossom, blossom_oracle};
use muntz::casteljau::{enumerate_paths, path_weight, EdgeWeight};
use muntz::geometry::{curve_eval, sample_curve, CurveSample};
use muntz::rational::parse_rational;
use muntz::scalar::binomial;
use muntz::symfunc::SchurBackend;
use muntz::{ArgMultiset, ExactCurve, MuntzSpace, Partition, Rational, Scalar, SparsePolynomial};
use serde_json::{json, Value};

use crate::doc::{curve_doc, ApiError};
use crate::figures::figure;
use crate::limits::{bind_from_env, Limits};
use crate::ops::{self, describe};
use crate::svg::Plot;

#[derive(Debug, Parser)]
#[command(name = "muntz", version, about = "Exact computations in Müntz spaces E_λ(n) built from Schur functions")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Backend {
    JacobiTrudi,
    NagelsbachKostka,
    Giambelli,
    Bialternant,
    Tableaux,
}

impl Backend {
    fn core(self) -> SchurBackend {
        match self {
            Backend::JacobiTrudi => SchurBackend::JacobiTrudi,
            Backend::NagelsbachKostka => SchurBackend::NagelsbachKostka,
            Backend::Giambelli => SchurBackend::Giambelli,
            Backend::Bialternant => SchurBackend::Bialternant,
            Backend::Tableaux => SchurBackend::Tableaux,
        }
    }
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct Format {
    /// SVG plot of the control polygon and the curve.
    #[arg(long)]
    svg: bool,
    /// RFC 4180 CSV, one row per sample.
    #[arg(long)]
    csv: bool,
    /// JSON (the default).
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluates the Schur function S_λ at the given arguments.
    Schur {
        partition: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
        #[arg(long, value_enum, default_value = "jacobi-trudi")]
        backend: Backend,
    },
    /// Blossom of E_λ(n) at n arguments, by the closed form and by the linear-system oracle.
    Blossom {
        partition: String,
        n: usize,
        #[arg(allow_negative_numbers = true)]
        u: Vec<String>,
    },
    /// Bernstein basis of E_λ(n) over [a, b] as exact polynomials.
    Basis {
        partition: String,
        n: usize,
        #[arg(allow_negative_numbers = true)]
        a: String,
        #[arg(allow_negative_numbers = true)]
        b: String,
        /// Print the service's JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Samples a curve document on a uniform grid (or at --at parameters).
    #[command(visible_alias = "eval")]
    Sample {
        curve: PathBuf,
        #[arg(short, long)]
        m: Option<usize>,
        /// Evaluate at these parameters instead of a grid.
        #[arg(long, allow_negative_numbers = true)]
        at: Vec<String>,
        #[command(flatten)]
        format: Format,
        /// Evaluate in 64-bit floating point instead of exact rationals.
        #[arg(long)]
        float: bool,
    },
    /// Rewrites a curve in E_η(n+1).
    Elevate { curve: PathBuf, target: String },
    /// C¹ continuation of a curve into E_μ(n) over [b, c].
    Join {
        left: PathBuf,
        #[arg(long)]
        mu: String,
        /// Leg ratio: P_n - P_{n-1} = rho (Q_1 - Q_0); solves for c.
        #[arg(long, conflicts_with = "c", required_unless_present = "c")]
        rho: Option<String>,
        /// Right interval end; solves for Q_1.
        #[arg(long)]
        c: Option<String>,
    },
    /// Samples a tensor-product surface document on an m × m grid.
    Surface {
        surface: PathBuf,
        #[arg(short, long, default_value_t = 9)]
        m: usize,
        #[arg(long)]
        csv: bool,
    },
    /// De Casteljau paths from {k}, their weights, and their sum against the basis value.
    Paths {
        partition: String,
        n: usize,
        k: usize,
        a: String,
        b: String,
        t: String,
    },
    /// Renders a fixed figure scenario as SVG (1, 2, 3, 4, 6 or 7).
    Figures { id: u32 },
    /// Runs the JSON service.
    Serve {
        /// Address to listen on; defaults to MUNTZ_BIND or 127.0.0.1:8080.
        #[arg(long)]
        bind: Option<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn failure(e: &ApiError) -> Self {
        let code = if matches!(e, ApiError::Io(_)) { 1 } else { 2 };
        Self { code, stdout: String::new(), stderr: format!("{}\n", e.to_json()) }
    }
}

pub fn run<I, T>(argv: I, limits: &Limits) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome::ok(e.to_string());
            }
            let body = json!({ "error": "usage", "message": e.to_string().trim() });
            return Outcome { code: 2, stdout: String::new(), stderr: format!("{body}\n") };
        }
    };
    match execute(cli.command, limits) {
        Ok(out) => Outcome::ok(out),
        Err(e) => Outcome::failure(&e),
    }
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("values serialize"))
}

fn partition(s: &str, field: &str, limits: &Limits) -> Result<Partition, ApiError> {
    let p: Partition = s.parse().map_err(|e: muntz::Error| ApiError::field(field, e.to_string()))?;
    if p.weight() > limits.max_weight {
        return Err(ApiError::field(field, format!("weight {} exceeds the limit {}", p.weight(), limits.max_weight)));
    }
    Ok(p)
}

fn order(n: usize, limits: &Limits) -> Result<usize, ApiError> {
    if n > limits.max_order {
        return Err(ApiError::field("n", format!("order {n} exceeds the limit {}", limits.max_order)));
    }
    Ok(n)
}

fn rational(s: &str, field: &str) -> Result<Rational, ApiError> {
    parse_rational(s).map_err(|_| ApiError::field(field, format!("not a rational: {s}")))
}

fn rationals(xs: &[String], field: &str) -> Result<Vec<Rational>, ApiError> {
    xs.iter().enumerate().map(|(i, x)| rational(x, &format!("{field}[{i}]"))).collect()
}

fn read_json(path: &Path) -> Result<Value, ApiError> {
    let text = std::fs::read_to_string(path).map_err(|e| ApiError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| ApiError::field("", format!("{}: not valid JSON: {e}", path.display())))
}

fn render_list(xs: &[Rational]) -> String {
    format!("[{}]", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn format_term(c: &Rational, e: u32) -> String {
    let mag = num_abs(c);
    let power = match e {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{e}"),
    };
    if e == 0 {
        mag.to_string()
    } else if mag == Rational::from_integer(1.into()) {
        power
    } else {
        format!("{mag}*{power}")
    }
}

fn is_negative(c: &Rational) -> bool {
    *c < Rational::from_integer(0.into())
}

fn num_abs(c: &Rational) -> Rational {
    if is_negative(c) {
        -c.clone()
    } else {
        c.clone()
    }
}

/// `1/4 - 3/2*t + t^2`, ascending powers.
pub fn format_poly(p: &SparsePolynomial<Rational>) -> String {
    let mut out = String::new();
    for (i, (&e, c)) in p.terms().iter().enumerate() {
        let sign = is_negative(c);
        match (i, sign) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&format_term(c, e));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn span(space: &MuntzSpace) -> String {
    let mut terms = vec!["1".to_string()];
    terms.extend(space.exponents().iter().map(|&e| format_term(&Rational::from_integer(1.into()), e)));
    format!("span({})", terms.join(", "))
}

fn space_name(space: &MuntzSpace) -> String {
    format!("E_{}({})", describe(space.lambda()), space.n())
}

fn execute(command: Command, limits: &Limits) -> Result<String, ApiError> {
    match command {
        Command::Schur { partition: p, args, backend } => {
            let lam = partition(&p, "partition", limits)?;
            let xs = rationals(&args, "args")?;
            let value = backend.core().eval(&lam, &ArgMultiset::from_values(&xs))?;
            Ok(format!("{value}\n"))
        }
        Command::Blossom { partition: p, n, u } => {
            let space = MuntzSpace::new(partition(&p, "partition", limits)?, order(n, limits)?)?;
            let us = rationals(&u, "u")?;
            let formula = blossom(&space, &us)?;
            let oracle = match blossom_oracle(&space, &us) {
                Ok(v) => render_list(&v),
                Err(e) => format!("unavailable ({e})"),
            };
            let agree = blossom_oracle(&space, &us).map(|v| v == formula);
            let mut out = format!("{} = {}\n", space_name(&space), span(&space));
            out.push_str(&format!("formula: {}\n", render_list(&formula)));
            out.push_str(&format!("oracle:  {oracle}\n"));
            if let Ok(agree) = agree {
                out.push_str(&format!("agree:   {agree}\n"));
            }
            Ok(out)
        }
        Command::Basis { partition: p, n, a, b, json } => {
            let req = json!({ "partition": p, "n": n, "interval": [a, b] });
            if json {
                return Ok(pretty(&ops::basis(&req, limits)?));
            }
            let space = MuntzSpace::new(partition(&p, "partition", limits)?, order(n, limits)?)?;
            let (a, b) = (rational(&a, "a")?, rational(&b, "b")?);
            let basis = bernstein_basis(&space, &a, &b)?;
            let mut out = format!("{} = {} on [{a}, {b}]\n", space_name(&space), span(&space));
            for (k, e) in basis.elements.iter().enumerate() {
                out.push_str(&format!("B_{k}(t) = {}\n", format_poly(e)));
            }
            Ok(out)
        }
        Command::Sample { curve, m, at, format, float } => {
            let mut doc = read_json(&curve)?;
            if let (Some(m), Some(obj)) = (m, doc.as_object_mut()) {
                obj.insert("m".into(), json!(m));
            }
            let (c, count) = ops::curve_and_count(&doc, limits)?;
            let ts = rationals(&at, "at")?;
            if float {
                let f = c.map(|x| x.to_f64());
                let samples = if ts.is_empty() {
                    sample_curve(&f, count)?
                } else {
                    ts.iter()
                        .map(|t| Ok(CurveSample { t: t.to_f64(), point: curve_eval(&f, &t.to_f64())? }))
                        .collect::<Result<Vec<_>, ApiError>>()?
                };
                emit_samples(&samples, &c, &format, |x: &f64| json!(x), |x: &f64| x.render())
            } else {
                let samples = if ts.is_empty() {
                    sample_curve(&c, count)?
                } else {
                    ts.iter()
                        .map(|t| Ok(CurveSample { t: t.clone(), point: curve_eval(&c, t)? }))
                        .collect::<Result<Vec<_>, ApiError>>()?
                };
                emit_samples(&samples, &c, &format, crate::doc::num, |x: &Rational| x.to_string())
            }
        }
        Command::Elevate { curve, target } => {
            let mut doc = read_json(&curve)?;
            let target = partition(&target, "target", limits)?;
            if let Some(obj) = doc.as_object_mut() {
                obj.insert("target".into(), json!(target));
            }
            Ok(pretty(&ops::elevate_op(&doc, limits)?))
        }
        Command::Join { left, mu, rho, c } => {
            let req = json!({ "left": read_json(&left)?, "mu": mu, "rho": rho, "c": c });
            Ok(pretty(&ops::join(&req, limits)?))
        }
        Command::Surface { surface, m, csv } => {
            let mut doc = read_json(&surface)?;
            if let Some(obj) = doc.as_object_mut() {
                obj.insert("m".into(), json!(m));
            }
            let out = ops::surface(&doc, limits)?;
            if !csv {
                return Ok(pretty(&out));
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            let rows = out["samples"].as_array().cloned().unwrap_or_default();
            let dim = rows.first().and_then(|r| r[0]["point"].as_array()).map_or(0, Vec::len);
            let mut header = vec!["u".to_string(), "v".to_string()];
            header.extend((1..=dim).map(|i| format!("x{i}")));
            w.write_record(&header).map_err(csv_err)?;
            for row in &rows {
                for cell in row.as_array().into_iter().flatten() {
                    let mut rec = vec![exact(&cell["u"]), exact(&cell["v"])];
                    rec.extend(cell["point"].as_array().into_iter().flatten().map(exact));
                    w.write_record(&rec).map_err(csv_err)?;
                }
            }
            csv_string(w)
        }
        Command::Paths { partition: p, n, k, a, b, t } => {
            let space = MuntzSpace::new(partition(&p, "partition", limits)?, order(n, limits)?)?;
            let (a, b, t) = (rational(&a, "a")?, rational(&b, "b")?, rational(&t, "t")?);
            if k > n {
                return Err(muntz::Error::IndexOutOfRange { index: k, max: n }.into());
            }
            let count = binomial(n as u64, k as u64);
            if count > limits.max_paths.into() {
                return Err(muntz::Error::PathCountTooLarge { count: count.to_string(), limit: limits.max_paths }.into());
            }
            let mut out = format!("{} = {} on [{a}, {b}], t = {t}, k = {k}\n", space_name(&space), span(&space));
            let mut sum = Rational::from_integer(0.into());
            for path in enumerate_paths(n, k)? {
                let w = path_weight(&space, &a, &b, &t, &path, EdgeWeight::Full)?;
                let sets: Vec<String> = path
                    .sets()
                    .iter()
                    .map(|s| format!("{{{}}}", s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
                    .collect();
                out.push_str(&format!("{}  weight = {w}\n", sets.join(" -> ")));
                sum += w;
            }
            let value = bernstein_basis(&space, &a, &b)?.elements[k].eval(&t);
            out.push_str(&format!("paths: {count}\nsum:   {sum}\nbasis: {value}\nagree: {}\n", sum == value));
            Ok(out)
        }
        Command::Figures { id } => figure(id),
        Command::Serve { bind } => {
            let bind = bind.unwrap_or_else(bind_from_env);
            let rt = tokio::runtime::Runtime::new().map_err(|e| ApiError::Io(e.to_string()))?;
            rt.block_on(crate::service::serve(&bind, limits.clone())).map_err(|e| ApiError::Io(e.to_string()))?;
            Ok(String::new())
        }
    }
}

fn exact(v: &Value) -> String {
    v.get("exact").and_then(Value::as_str).map(str::to_string).unwrap_or_else(|| v.to_string())
}

fn csv_err(e: csv::Error) -> ApiError {
    ApiError::Io(e.to_string())
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String, ApiError> {
    let bytes = w.into_inner().map_err(|e| ApiError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| ApiError::Io(e.to_string()))
}

fn emit_samples<S: Scalar>(
    samples: &[CurveSample<S>],
    curve: &ExactCurve,
    format: &Format,
    to_json: impl Fn(&S) -> Value,
    to_cell: impl Fn(&S) -> String,
) -> Result<String, ApiError> {
    if format.csv {
        let dim = curve.dim();
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["t".to_string()];
        header.extend((1..=dim).map(|i| format!("x{i}")));
        w.write_record(&header).map_err(csv_err)?;
        for s in samples {
            let mut rec = vec![to_cell(&s.t)];
            rec.extend(s.point.iter().map(&to_cell));
            w.write_record(&rec).map_err(csv_err)?;
        }
        return csv_string(w);
    }
    if format.svg {
        let mut plot = Plot::new(format!(
            "{} on [{}, {}]",
            space_name(&curve.space),
            curve.a,
            curve.b
        ));
        plot.note(span(&curve.space));
        let xy = |t: &S, p: &[S]| match p {
            [x] => (t.to_f64(), x.to_f64()),
            [x, y, ..] => (x.to_f64(), y.to_f64()),
            [] => (t.to_f64(), 0.0),
        };
        if curve.dim() >= 2 {
            let poly: Vec<(f64, f64)> = curve.points.iter().map(|p| (p[0].to_f64(), p[1].to_f64())).collect();
            plot.polygon(&poly, "black", true, "P");
        }
        plot.curve(samples.iter().map(|s| xy(&s.t, &s.point)).collect(), "blue");
        return Ok(plot.render());
    }
    let list: Vec<Value> = samples
        .iter()
        .map(|s| json!({ "t": to_json(&s.t), "point": s.point.iter().map(&to_json).collect::<Vec<_>>() }))
        .collect();
    Ok(pretty(&json!({ "curve": curve_doc(curve), "samples": list })))
}
