//! Command-line front end. `main.rs` only parses arguments and forwards here,
//! so the dispatch can be exercised in-process.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::affine::beta_sequence;
use crate::error::{Error, Result};
use crate::fixtures::{self, Status};
use crate::model::Model;
use crate::oschar::{self, TinfMethod};
use crate::rootsys::{AffineType, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spec {
    #[value(name = "0")]
    Zero,
    #[value(name = "inf")]
    Inf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Reversed,
    W0,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Common {
    /// Type tag: A2~2, D3~2, D4~3, E6~2, A2n~2:N, A2n~2+:N, A2n-1~2:N, Dn+1~2:N.
    #[arg(long = "type", value_name = "TAG")]
    pub type_tag: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (defaults to TWISTED_WEYL_THREADS, then all cores).
    #[arg(long, env = "TWISTED_WEYL_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, clap::Args)]
pub struct WeightArgs {
    /// Antidominant weight in fundamental-weight coordinates, e.g. -1,0.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub lambda: Vec<i64>,
    /// Weyl group element: id, w0, wdag or a word such as "s1 s2".
    #[arg(long, default_value = "id")]
    pub sigma: String,
}

#[derive(Debug, Parser)]
#[command(name = "twisted-weyl", version, about = "Characters of generalized Weyl modules for twisted current algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fundamental (--i) or translation (--lambda) beta-sequence.
    Betas {
        #[command(flatten)]
        common: Common,
        /// 1-based fundamental index.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Option<Vec<i64>>,
    },
    /// Twisted quantum Bruhat graph.
    Tqbg {
        #[command(flatten)]
        common: Common,
        /// Export the reversed graph.
        #[arg(long)]
        reversed: bool,
    },
    /// Character of W_{sigma(lambda)}.
    Char {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Nonsymmetric Macdonald polynomial at t = 0 or t = infinity.
    Macdonald {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
        #[arg(long, value_enum)]
        spec: Spec,
        #[arg(long, value_enum, default_value_t = Method::Reversed)]
        method: Method,
        /// Print in the variable q^{-1} (t = infinity only).
        #[arg(long)]
        invert_q: bool,
    },
    /// Dimension of W_{sigma(lambda)}.
    Dim {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Pieces of W_{sigma(lambda - omega_i)} over the modules W_{kappa(lambda)}.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        i: usize,
    },
    /// Replays the published reference data.
    Selftest {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, env = "TWISTED_WEYL_THREADS")]
        threads: Option<usize>,
    },
}

fn model(common: &Common) -> Result<std::sync::Arc<Model>> {
    Model::get(common.type_tag.parse::<AffineType>()?)
}

fn index(i: usize, rank: usize) -> Result<usize> {
    if i == 0 || i > rank {
        return Err(Error::Usage(format!("--i must lie in 1..={rank}, got {i}")));
    }
    Ok(i - 1)
}

fn sigma(model: &Model, text: &str, err: &mut dyn Write) -> Result<usize> {
    let w = model.group.parse(&model.rs, text)?;
    let letters = text.chars().filter(|&c| c == 's').count();
    if text.trim().starts_with('s') && letters != model.group.length(w) {
        let _ = writeln!(err, "note: {text:?} is not reduced; using {}", model.group.element(w));
    }
    Ok(w)
}

fn reject_dot(format: Format) -> Result<()> {
    if format == Format::Dot {
        return Err(Error::Usage("--format dot applies to tqbg only".into()));
    }
    Ok(())
}

fn emit_json(out: &mut dyn Write, v: &serde_json::Value) -> Result<()> {
    let s = serde_json::to_string(v).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{s}").map_err(|e| Error::Internal(e.to_string()))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    writeln!(out, "{}", text.trim_end_matches('\n')).map_err(|e| Error::Internal(e.to_string()))
}

fn dispatch(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Betas { common, i, lambda } => {
            reject_dot(common.format)?;
            let m = model(common)?;
            let seq = match (i, lambda) {
                (Some(i), None) => beta_sequence(&m.rs, index(*i, m.rs.rank())?)?,
                (None, Some(l)) => oschar::translation_sequence(&m, &Weight(l.clone()))?,
                _ => return Err(Error::Usage("betas takes exactly one of --i or --lambda".into())),
            };
            match common.format {
                Format::Json => emit_json(out, &seq.to_json())?,
                _ => emit(out, &seq.to_string())?,
            }
        }
        Command::Tqbg { common, reversed } => {
            let m = model(common)?;
            let graph = if *reversed { m.graph.reverse() } else { m.graph.clone() };
            match common.format {
                Format::Dot => emit(out, &graph.to_dot(&m.rs, &m.group))?,
                Format::Json => emit_json(out, &graph.to_json(&m.rs, &m.group))?,
                Format::Text => {
                    for e in graph.edges(&m.group) {
                        let label = m.rs.positive_roots()[e.label].0.clone();
                        emit(
                            out,
                            &format!(
                                "{} -> {} {} {:?}",
                                m.group.element(e.from),
                                m.group.element(e.to),
                                crate::affine::format_root_expr(&label, 0),
                                e.kind
                            ),
                        )?;
                    }
                }
            }
        }
        Command::Char { common, weight } => {
            reject_dot(common.format)?;
            let m = model(common)?;
            let s = sigma(&m, &weight.sigma, err)?;
            let p = oschar::c_poly(&m, s, &Weight(weight.lambda.clone()))?;
            match common.format {
                Format::Json => emit_json(out, &p.to_json())?,
                _ => emit(out, &p.to_string())?,
            }
        }
        Command::Macdonald { common, lambda, spec, method, invert_q } => {
            reject_dot(common.format)?;
            let m = model(common)?;
            let lam = Weight(lambda.clone());
            let mut p = match spec {
                Spec::Zero => oschar::macdonald_t0(&m, &lam)?,
                Spec::Inf => {
                    let how = match method {
                        Method::Reversed => TinfMethod::ReversedGraph,
                        Method::W0 => TinfMethod::W0Twist,
                    };
                    oschar::macdonald_tinf(&m, &lam, how)?
                }
            };
            if *invert_q {
                if *spec == Spec::Zero {
                    return Err(Error::Usage("--invert-q applies to --spec inf only".into()));
                }
                p = p.invert_q();
            }
            match common.format {
                Format::Json => emit_json(out, &p.to_json())?,
                _ => emit(out, &p.to_string())?,
            }
        }
        Command::Dim { common, weight } => {
            reject_dot(common.format)?;
            let m = model(common)?;
            let s = sigma(&m, &weight.sigma, err)?;
            let d = oschar::dim_weyl(&m, s, &Weight(weight.lambda.clone()))?;
            match common.format {
                Format::Json => emit_json(out, &serde_json::json!({ "dim": d }))?,
                _ => emit(out, &d.to_string())?,
            }
        }
        Command::Decompose { common, weight, i } => {
            reject_dot(common.format)?;
            let m = model(common)?;
            let s = sigma(&m, &weight.sigma, err)?;
            let i = index(*i, m.rs.rank())?;
            let pieces = oschar::decompose(&m, s, &Weight(weight.lambda.clone()), i)?;
            match common.format {
                Format::Json => {
                    let rows: Vec<_> = pieces
                        .iter()
                        .map(|p| {
                            serde_json::json!({
                                "kappa": m.group.element(p.kappa).to_string(),
                                "x_shift": p.x_shift.0,
                                "q_shift": p.q_shift,
                            })
                        })
                        .collect();
                    emit_json(out, &serde_json::Value::Array(rows))?
                }
                _ => {
                    for p in &pieces {
                        emit(
                            out,
                            &format!("q^{} x^{:?} C[{}]", p.q_shift, p.x_shift.0, m.group.element(p.kappa)),
                        )?;
                    }
                }
            }
        }
        Command::Selftest { format, .. } => {
            reject_dot(*format)?;
            let checks = fixtures::selftest()?;
            let failed = checks.iter().any(|c| c.status == Status::Fail);
            match format {
                Format::Json => {
                    let rows: Vec<_> = checks
                        .iter()
                        .map(|c| {
                            serde_json::json!({
                                "name": c.name,
                                "status": format!("{:?}", c.status),
                                "detail": c.detail,
                            })
                        })
                        .collect();
                    emit_json(out, &serde_json::Value::Array(rows))?
                }
                _ => {
                    for c in &checks {
                        let tag = match c.status {
                            Status::Pass => "PASS",
                            Status::KnownMismatch => "KNOWN",
                            Status::Fail => "FAIL",
                        };
                        emit(out, &format!("{tag} {}: {}", c.name, c.detail))?;
                    }
                }
            }
            return Ok(if failed { 1 } else { 0 });
        }
    }
    Ok(0)
}

fn threads(command: &Command) -> Option<usize> {
    match command {
        Command::Betas { common, .. }
        | Command::Tqbg { common, .. }
        | Command::Char { common, .. }
        | Command::Macdonald { common, .. }
        | Command::Dim { common, .. }
        | Command::Decompose { common, .. } => common.threads,
        Command::Selftest { threads, .. } => *threads,
    }
}

/// Runs one request and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    // Buffered so the work can move onto a dedicated pool.
    let mut buf_out: Vec<u8> = Vec::new();
    let mut buf_err: Vec<u8> = Vec::new();
    let mut go = || dispatch(&cli.command, &mut buf_out, &mut buf_err);
    let result = match threads(&cli.command) {
        Some(0) => Err(Error::Usage("--threads must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))
            .and_then(|pool| pool.install(go)),
        None => go(),
    };
    let _ = out.write_all(&buf_out);
    let _ = err.write_all(&buf_err);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Internal(_) => 1,
                _ => 2,
            }
        }
    }
}
