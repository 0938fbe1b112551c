//! Argument parsing and subcommand dispatch.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails, 2 on
//! input or usage errors (one diagnostic line on the error stream).

use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use kenmotsu_core::soliton::{evaluate, SolitonKind, SolitonParams, SolitonProblem};
use kenmotsu_core::theorems::TheoremStatus;
use kenmotsu_core::{Error, Rational, VectorField};
use serde_json::{Map, Value};

use crate::catalog::{catalog_load, UnknownCatalogId};
use crate::document::{parse_manifold, DocumentError};
use crate::report::{self, Session};

#[derive(Debug, Parser)]
#[command(name = "kenmotsu", version, about = "Exact curvature and soliton analysis of Kenmotsu frames")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["manifold", "catalog"])))]
struct Source {
    /// Path to a manifold document (JSON).
    #[arg(long)]
    manifold: Option<PathBuf>,
    /// Built-in catalog id.
    #[arg(long)]
    catalog: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TensorArg {
    Riemann,
    Ricci,
    StarRicci,
    W2,
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Rb,
    StarRb,
    EtaRb,
}

impl From<KindArg> for SolitonKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Rb => SolitonKind::Rb,
            KindArg::StarRb => SolitonKind::StarRb,
            KindArg::EtaRb => SolitonKind::EtaRb,
        }
    }
}

fn rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|_| format!("{s:?} is not a rational (expected p or p/q)"))
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Check the almost-contact and Kenmotsu axioms.
    Validate {
        #[command(flatten)]
        source: Source,
    },
    /// Curvature tensors, scalars and classifications.
    Curvature {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        tensor: Option<TensorArg>,
        /// Parameter of the Q tensor; solved for when omitted.
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        psi: Option<Rational>,
    },
    /// Covariant derivative, divergence, Lie derivative and classification of fields.
    Field {
        #[command(flatten)]
        source: Source,
        /// Field to analyze; all fields when omitted.
        #[arg(long)]
        field: Option<String>,
    },
    /// Solve or verify a soliton equation.
    Soliton {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        field: String,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        omega: Rational,
        /// Verify mode for rb and star-rb.
        #[arg(long = "Omega", value_parser = rational, allow_hyphen_values = true, conflicts_with_all = ["lambda", "mu"])]
        big_omega: Option<Rational>,
        /// Verify mode for eta-rb, together with --mu.
        #[arg(long = "Lambda", value_parser = rational, allow_hyphen_values = true, requires = "mu")]
        lambda: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true, requires = "lambda")]
        mu: Option<Rational>,
    },
    /// Re-derive every theorem on this manifold.
    Theorems {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        omega: Rational,
    },
    /// Everything above in one document.
    Report {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
        omega: Rational,
    },
}

#[derive(Debug, thiserror::Error)]
enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Catalog(#[from] UnknownCatalogId),
    #[error("unknown field {name:?}; available: {available}")]
    UnknownField { name: String, available: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

/// A command's output and whether its mathematical checks passed.
struct Outcome {
    value: Value,
    ok: bool,
}

impl Outcome {
    fn pass(value: Value) -> Self {
        Outcome { value, ok: true }
    }
}

fn load(src: &Source) -> Result<Session, InputError> {
    let manifold = match (&src.manifold, &src.catalog) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
                path: path.display().to_string(),
                source,
            })?;
            parse_manifold(&text).map_err(|e| DocumentError {
                path: format!("{}: {}", path.display(), e.path),
                message: e.message,
            })?
        }
        (None, Some(id)) => catalog_load(id)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    Ok(Session::new(manifold))
}

/// A named field, falling back to the Reeb field for `xi`.
fn resolve_field(sess: &Session, name: &str) -> Result<VectorField, InputError> {
    if let Some(z) = sess.manifold.field(name) {
        return Ok(z.clone());
    }
    if name == "xi" {
        return Ok(VectorField::reeb(&sess.manifold.spec));
    }
    let mut names = sess.manifold.field_names();
    if !names.contains(&"xi") {
        names.push("xi");
    }
    Err(InputError::UnknownField {
        name: name.into(),
        available: names.join(", "),
    })
}

fn with_header(sess: &Session, key: &str, body: Value) -> Value {
    let mut m = report::header(sess);
    m.insert(key.into(), body);
    Value::Object(m)
}

fn execute(command: &Command) -> Result<(Outcome, &Source), InputError> {
    match command {
        Command::Validate { source } => {
            let sess = load(source)?;
            let v = sess.validation();
            let ok = v.is_kenmotsu;
            Ok((
                Outcome {
                    value: with_header(&sess, "validation", report::validation(&v)),
                    ok,
                },
                source,
            ))
        }
        Command::Curvature { source, tensor, psi } => {
            let sess = load(source)?;
            if psi.is_some() && *tensor != Some(TensorArg::Q) {
                return Err(InputError::Usage("--psi applies only to --tensor q".into()));
            }
            let out = match tensor {
                None => Outcome::pass(report::curvature_section(&sess)),
                Some(TensorArg::Riemann) => Outcome::pass(report::riemann_section(&sess)),
                Some(TensorArg::Ricci) => Outcome::pass(report::ricci_section(&sess)),
                Some(TensorArg::StarRicci) => Outcome::pass(report::star_ricci_section(&sess)),
                Some(TensorArg::W2) => Outcome::pass(report::w2_section(&sess)),
                Some(TensorArg::Q) => match report::q_section(&sess, psi.as_ref()) {
                    Ok(v) => Outcome::pass(v),
                    Err(e) => Outcome {
                        value: Value::String(e.to_string()),
                        ok: false,
                    },
                },
            };
            let value = with_header(&sess, "curvature", out.value);
            Ok((Outcome { value, ok: out.ok }, source))
        }
        Command::Field { source, field } => {
            let sess = load(source)?;
            let body = match field {
                Some(name) => {
                    let z = resolve_field(&sess, name)?;
                    let a = kenmotsu_core::fields::analyze_field(&sess.manifold.spec, &sess.conn, &z)?;
                    let mut m = Map::new();
                    m.insert(name.clone(), report::field_section(&sess, &a, &z));
                    Value::Object(m)
                }
                None => report::fields_section(&sess),
            };
            Ok((Outcome::pass(with_header(&sess, "fields", body)), source))
        }
        Command::Soliton {
            source,
            kind,
            field,
            omega,
            big_omega,
            lambda,
            mu,
        } => {
            let sess = load(source)?;
            let kind = SolitonKind::from(*kind);
            let params = match (big_omega, lambda, mu) {
                (Some(o), _, _) => Some(SolitonParams::Omega(o.clone())),
                (None, Some(l), Some(m)) => Some(SolitonParams::Eta {
                    lambda: l.clone(),
                    mu: m.clone(),
                }),
                _ => None,
            };
            let verify = params.is_some();
            let problem = SolitonProblem {
                kind,
                field: resolve_field(&sess, field)?,
                omega: omega.clone(),
                params,
            };
            let spec = &sess.manifold.spec;
            match evaluate(spec, &sess.conn, &sess.bundle, &problem) {
                Ok(r) => {
                    let ok = !verify || r.residual_is_zero;
                    let value = with_header(&sess, "soliton", report::soliton(&r));
                    Ok((Outcome { value, ok }, source))
                }
                Err(e @ Error::NonConstantSolution(_)) => {
                    let value = with_header(&sess, "soliton", serde_json::json!({"error": e.to_string()}));
                    Ok((Outcome { value, ok: false }, source))
                }
                Err(e @ Error::ParamsMismatch(_)) => Err(InputError::Usage(e.to_string())),
                Err(e) => Err(e.into()),
            }
        }
        Command::Theorems { source, omega } => {
            let sess = load(source)?;
            let results = sess.theorems(omega);
            let ok = !results.iter().any(|t| t.status == TheoremStatus::Fail);
            let value = with_header(&sess, "theorems", report::theorems_section(&sess, &results, omega));
            Ok((Outcome { value, ok }, source))
        }
        Command::Report { source, omega } => {
            let sess = load(source)?;
            let results = sess.theorems(omega);
            let ok = !results.iter().any(|t| t.status == TheoremStatus::Fail);
            Ok((
                Outcome {
                    value: report::full_report(&sess, omega, &results),
                    ok,
                },
                source,
            ))
        }
    }
}

/// Runs one invocation, writing the report to `out` and diagnostics to
/// `err`; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.to_string();
            let line: Vec<&str> = text
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty())
                .collect();
            let _ = writeln!(err, "{}", line.join(" ").trim_start_matches("error: "));
            return 2;
        }
    };
    match execute(&cli.command) {
        Ok((outcome, source)) => {
            let text = match source.format {
                Format::Json => report::to_json(&outcome.value),
                Format::Text => report::to_text(&outcome.value),
            };
            if out.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            2
        }
    }
}
