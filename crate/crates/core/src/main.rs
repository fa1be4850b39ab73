use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mostar::cli::{self, Command, MethodChoice, OutputFormat, PartitionSource, RunConfig};

#[derive(Parser)]
#[command(
    name = "mostar",
    version,
    about = "Mostar index of graphs and benzenoid systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    /// Worker threads (defaults to MOSTAR_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Sub {
    /// Mostar index of a (weighted) graph file.
    Mostar {
        input: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Print the Θ*-classes of a graph file.
    Theta { input: PathBuf },
    /// Print the weighted quotient graph for one partition class.
    Quotient {
        input: PathBuf,
        #[arg(long)]
        class: usize,
        /// `theta-star` or a partition file.
        #[arg(long, default_value = "theta-star")]
        partition: String,
    },
    /// Mostar index of a benzenoid cell file, with per-tree breakdown.
    Benzenoid {
        input: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Generate coronene G_h and compare with the closed form.
    Coronene {
        #[arg(long)]
        h: u32,
    },
}

#[derive(Args)]
struct Opts {
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// `theta-star` or a partition file.
    #[arg(long, default_value = "theta-star")]
    partition: String,
    /// Include per-edge contributions when available.
    #[arg(long)]
    breakdown: bool,
    /// Trust that a partition file is coarser than Θ* instead of checking it
    #[arg(long)]
    skip_validation: bool,
    /// Run both methods and fail on mismatch.
    #[arg(long)]
    check: bool,
    /// Largest edge count for which `auto` uses the Θ* cut method.
    #[arg(long, default_value_t = cli::DEFAULT_AUTO_THRESHOLD)]
    auto_threshold: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Direct,
    Cut,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn partition_source(arg: &str) -> PartitionSource {
    match arg {
        "theta-star" => PartitionSource::ThetaStar,
        path => PartitionSource::File(path.into()),
    }
}

fn apply(config: &mut RunConfig, opts: Opts) {
    config.method = match opts.method {
        Method::Direct => MethodChoice::Direct,
        Method::Cut => MethodChoice::Cut,
        Method::Auto => MethodChoice::Auto,
    };
    config.partition = partition_source(&opts.partition);
    config.breakdown = opts.breakdown;
    config.skip_validation = opts.skip_validation;
    config.check = opts.check;
    config.auto_threshold = opts.auto_threshold;
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let mut config = match args.command {
        Sub::Mostar { input, opts } => {
            let mut c = RunConfig::new(Command::Mostar);
            c.input = Some(input);
            apply(&mut c, opts);
            c
        }
        Sub::Benzenoid { input, opts } => {
            let mut c = RunConfig::new(Command::Benzenoid);
            c.input = Some(input);
            apply(&mut c, opts);
            c
        }
        Sub::Theta { input } => RunConfig {
            input: Some(input),
            ..RunConfig::new(Command::Theta)
        },
        Sub::Quotient {
            input,
            class,
            partition,
        } => RunConfig {
            input: Some(input),
            partition: partition_source(&partition),
            ..RunConfig::new(Command::Quotient { class })
        },
        Sub::Coronene { h } => RunConfig::new(Command::Coronene { h }),
    };
    config.format = match args.format {
        Format::Text => OutputFormat::Text,
        Format::Structured => OutputFormat::Structured,
    };
    config.threads = args.threads.or_else(|| {
        std::env::var(cli::THREADS_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
    });

    let stdout = std::io::stdout();
    match cli::run(&config, &mut std::io::stdin().lock(), &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("mostar: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
