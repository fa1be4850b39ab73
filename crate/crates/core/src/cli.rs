//! Command dispatch behind the `mostar` binary.
//!
//! The binary only parses flags into a [`RunConfig`]; everything else lives
//! here so that it can be driven from tests with in-memory streams.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::benzenoid::{
    build_benzenoid, coronene, coronene_closed_form, mostar_benzenoid, BenzenoidError,
};
use crate::format::{
    parse_cells, parse_graph, parse_partition, write_partition, FormatError, GraphInput,
};
use crate::graph::{GraphError, WeightedGraph};
use crate::mostar::{
    mostar_by_cut, mostar_by_cut_unchecked, mostar_direct, MostarError, MostarReport,
};
use crate::quotient::build_quotient;
use crate::theta::{theta_is_transitive, theta_star_partition_with, EdgePartition};
use crate::weight::Weight;

/// Environment variable read by the binary for the worker thread count.
pub const THREADS_ENV: &str = "MOSTAR_THREADS";

/// Default edge-count limit for `--method auto` to use the Θ* cut method.
pub const DEFAULT_AUTO_THRESHOLD: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Mostar,
    Theta,
    Quotient { class: usize },
    Benzenoid,
    Coronene { h: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    Direct,
    Cut,
    #[default]
    Auto,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum PartitionSource {
    #[default]
    ThetaStar,
    File(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    /// Input file; `-` reads standard input. Must be absent for `coronene`.
    pub input: Option<PathBuf>,
    pub method: MethodChoice,
    pub partition: PartitionSource,
    pub format: OutputFormat,
    pub breakdown: bool,
    pub skip_validation: bool,
    pub check: bool,
    pub auto_threshold: usize,
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            input: None,
            method: MethodChoice::default(),
            partition: PartitionSource::default(),
            format: OutputFormat::default(),
            breakdown: false,
            skip_validation: false,
            check: false,
            auto_threshold: DEFAULT_AUTO_THRESHOLD,
            threads: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        match (&self.command, &self.input) {
            (Command::Coronene { .. }, Some(_)) => Err(CliError::Usage(
                "coronene generates its own input; do not pass a file".into(),
            )),
            (Command::Coronene { .. }, None) => Ok(()),
            (_, None) => Err(CliError::Usage(
                "an input file (or `-` for stdin) is required".into(),
            )),
            (_, Some(_)) => Ok(()),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error in {path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: FormatError,
    },
    #[error("{0}")]
    Disconnected(GraphError),
    #[error("c-partition validation failed: {0}")]
    NotCPartition(MostarError),
    #[error("{0}")]
    Invalid(String),
    #[error("check failed: {0}")]
    Mismatch(String),
}

impl CliError {
    /// Process exit status for this failure; each class is distinct.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Parse { .. } => 4,
            CliError::Disconnected(_) => 5,
            CliError::NotCPartition(_) => 6,
            CliError::Invalid(_) => 7,
            CliError::Mismatch(_) => 8,
        }
    }
}

impl From<MostarError> for CliError {
    fn from(err: MostarError) -> Self {
        match err {
            MostarError::NotCPartition { .. } => CliError::NotCPartition(err),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<BenzenoidError> for CliError {
    fn from(err: BenzenoidError) -> Self {
        CliError::Invalid(err.to_string())
    }
}

struct Source {
    name: String,
    text: String,
}

/// Standard input, read once up front when any source is `-`.
struct Inputs {
    stdin: Option<String>,
}

impl Inputs {
    fn read(&self, path: &Path) -> Result<Source, CliError> {
        let name = path.display().to_string();
        let text = match (&self.stdin, name.as_str()) {
            (Some(text), "-") => text.clone(),
            _ => fs::read_to_string(path).map_err(|source| CliError::Io {
                path: name.clone(),
                source,
            })?,
        };
        Ok(Source { name, text })
    }
}

fn format_error(path: &str, err: FormatError) -> CliError {
    match err {
        FormatError::Graph(g @ GraphError::Disconnected { .. }) => CliError::Disconnected(g),
        FormatError::Benzenoid(b @ BenzenoidError::DisconnectedCells(_)) => {
            CliError::Invalid(b.to_string())
        }
        source => CliError::Parse {
            path: path.to_string(),
            source,
        },
    }
}

/// Runs one command, writing the report to `out`.
pub fn run(config: &RunConfig, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    config.validate()?;
    let dash = Path::new("-");
    let wants_stdin = config.input.as_deref() == Some(dash)
        || matches!(&config.partition, PartitionSource::File(p) if p.as_path() == dash);
    let inputs = Inputs {
        stdin: if wants_stdin {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|source| CliError::Io {
                    path: "-".into(),
                    source,
                })?;
            Some(buf)
        } else {
            None
        },
    };
    let text = match config.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {threads} threads: {e}")))?
            .install(|| dispatch(config, &inputs)),
        None => dispatch(config, &inputs),
    }?;
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: "<output>".into(),
            source,
        })
}

fn dispatch(config: &RunConfig, inputs: &Inputs) -> Result<String, CliError> {
    if let Command::Coronene { h } = config.command {
        return run_coronene(config, h);
    }
    let input = config.input.as_ref().expect("validated");
    let source = inputs.read(input)?;
    match config.command {
        Command::Benzenoid => run_benzenoid(config, &source),
        _ => {
            let graph = parse_graph(&source.text).map_err(|e| format_error(&source.name, e))?;
            match graph {
                GraphInput::Integer(wg) => run_graph(config, &wg, inputs),
                GraphInput::Real(wg) => run_graph(config, &wg, inputs),
            }
        }
    }
}

fn load_partition<W: Weight>(
    config: &RunConfig,
    wg: &WeightedGraph<W>,
    inputs: &Inputs,
) -> Result<EdgePartition, CliError> {
    match &config.partition {
        PartitionSource::ThetaStar => Ok(theta_star_partition_with(
            wg.graph(),
            &wg.graph().distance_table(),
        )),
        PartitionSource::File(path) => {
            let source = inputs.read(path)?;
            parse_partition(&source.text, wg.graph().edge_count())
                .map_err(|e| format_error(&source.name, e))
        }
    }
}

fn cut<W: Weight>(
    config: &RunConfig,
    wg: &WeightedGraph<W>,
    partition: &EdgePartition,
) -> Result<MostarReport<W>, CliError> {
    let report = if config.skip_validation {
        mostar_by_cut_unchecked(wg, partition)?
    } else {
        mostar_by_cut(wg, partition)?
    };
    Ok(report)
}

fn emit<T: Serialize>(config: &RunConfig, value: &T, text: String) -> Result<String, CliError> {
    match config.format {
        OutputFormat::Text => Ok(text),
        OutputFormat::Structured => {
            let mut json = serde_json::to_string_pretty(value).expect("reports serialize");
            json.push('\n');
            Ok(json)
        }
    }
}

fn run_graph<W: Weight>(
    config: &RunConfig,
    wg: &WeightedGraph<W>,
    inputs: &Inputs,
) -> Result<String, CliError> {
    let g = wg.graph();
    match config.command {
        Command::Mostar => {
            let use_cut = match config.method {
                MethodChoice::Direct => false,
                MethodChoice::Cut => true,
                MethodChoice::Auto => {
                    g.edge_count() <= config.auto_threshold
                        || config.partition != PartitionSource::ThetaStar
                }
            };
            let report = if use_cut {
                let partition = load_partition(config, wg, inputs)?;
                cut(config, wg, &partition)?
            } else {
                mostar_direct(wg)
            };
            let mut text = report.render_text(config.breakdown, Some(g.edges()));
            if config.check {
                let direct = if use_cut {
                    mostar_direct(wg).total
                } else {
                    report.total
                };
                let by_cut = if use_cut {
                    report.total
                } else {
                    let partition = load_partition(config, wg, inputs)?;
                    cut(config, wg, &partition)?.total
                };
                if !direct.agrees_with(by_cut) {
                    return Err(CliError::Mismatch(format!(
                        "direct = {direct}, cut = {by_cut}"
                    )));
                }
                text.push_str("check: direct and cut totals agree\n");
            }
            emit(config, &report, text)
        }
        Command::Theta => {
            let dist = g.distance_table();
            let star = theta_star_partition_with(g, &dist);
            let transitive = theta_is_transitive(g, &dist, &star);
            #[derive(Serialize)]
            struct ThetaOut<'a> {
                classes: &'a [Vec<usize>],
                transitive: bool,
            }
            let text = format!(
                "# theta-star classes: {}\n# theta transitive: {}\n{}",
                star.len(),
                if transitive { "yes" } else { "no" },
                write_partition(&star)
            );
            emit(
                config,
                &ThetaOut {
                    classes: star.classes(),
                    transitive,
                },
                text,
            )
        }
        Command::Quotient { class } => {
            let partition = load_partition(config, wg, inputs)?;
            let Some(edges) = partition.classes().get(class) else {
                return Err(CliError::Usage(format!(
                    "class {class} does not exist; the partition has {} classes",
                    partition.len()
                )));
            };
            let q = build_quotient(wg, edges);
            let mut text = format!(
                "# quotient by class {class}: {} vertices, {} edges\n",
                q.base().vertex_count(),
                q.base().edge_count()
            );
            let ell: Vec<String> = q.projection().iter().map(|x| x.to_string()).collect();
            text.push_str(&format!("# projection: {}\n", ell.join(" ")));
            for (i, fiber) in q.fibers().iter().enumerate() {
                let ids: Vec<String> = fiber.iter().map(|e| e.to_string()).collect();
                text.push_str(&format!("# fiber {i}: {}\n", ids.join(" ")));
            }
            text.push_str(&crate::format::write_weighted_graph(q.weighted()));
            #[derive(Serialize)]
            struct QuotientOut<'a, W> {
                class: usize,
                edges: &'a [(usize, usize)],
                lambda: &'a [W],
                lambda_prime: &'a [W],
                projection: &'a [usize],
                fibers: &'a [Vec<usize>],
            }
            emit(
                config,
                &QuotientOut {
                    class,
                    edges: q.base().edges(),
                    lambda: q.lambda(),
                    lambda_prime: q.lambda_prime(),
                    projection: q.projection(),
                    fibers: q.fibers(),
                },
                text,
            )
        }
        Command::Benzenoid | Command::Coronene { .. } => unreachable!("handled by dispatch"),
    }
}

fn run_benzenoid(config: &RunConfig, source: &Source) -> Result<String, CliError> {
    let spec = parse_cells(&source.text).map_err(|e| format_error(&source.name, e))?;
    let bg = build_benzenoid(&spec);
    let wg = bg.unit_weighted();
    let report = match config.method {
        MethodChoice::Auto => mostar_benzenoid(&bg)?,
        MethodChoice::Direct => mostar_direct(&wg),
        MethodChoice::Cut => {
            let partition = match &config.partition {
                PartitionSource::ThetaStar => {
                    theta_star_partition_with(wg.graph(), &wg.graph().distance_table())
                }
                PartitionSource::File(_) => {
                    return Err(CliError::Usage(
                        "benzenoid cut uses the theta-star partition".into(),
                    ))
                }
            };
            cut(config, &wg, &partition)?
        }
    };
    let mut text = format!(
        "hexagons: {}\nvertices: {}\nedges: {}\nboundary: {}\n",
        spec.len(),
        bg.graph().vertex_count(),
        bg.graph().edge_count(),
        bg.boundary_length()
    );
    text.push_str(&report.render_text(config.breakdown, Some(bg.graph().edges())));
    if config.check {
        let direct = mostar_direct(&wg).total;
        let pipeline = mostar_benzenoid(&bg)?.total;
        if direct != pipeline || direct != report.total {
            return Err(CliError::Mismatch(format!(
                "direct = {direct}, tree pipeline = {pipeline}"
            )));
        }
        text.push_str("check: direct and tree pipeline totals agree\n");
    }
    emit(config, &report, text)
}

fn run_coronene(config: &RunConfig, h: u32) -> Result<String, CliError> {
    let spec = coronene(h)?;
    let bg = build_benzenoid(&spec);
    let report = mostar_benzenoid(&bg)?;
    let closed = coronene_closed_form(h)?;
    if report.total != closed {
        return Err(CliError::Mismatch(format!(
            "coronene h = {h}: computed {} but closed form gives {closed}",
            report.total
        )));
    }
    #[derive(Serialize)]
    struct CoroneneOut<'a> {
        h: u32,
        hexagons: usize,
        closed_form: u64,
        report: &'a MostarReport<u64>,
    }
    let mut text = format!(
        "h: {h}\nhexagons: {}\nvertices: {}\nedges: {}\n",
        spec.len(),
        bg.graph().vertex_count(),
        bg.graph().edge_count()
    );
    text.push_str(&report.render_text(false, None));
    text.push_str(&format!("closed form: {closed}\nclosed-form match\n"));
    emit(
        config,
        &CoroneneOut {
            h,
            hexagons: spec.len(),
            closed_form: closed,
            report: &report,
        },
        text,
    )
}
