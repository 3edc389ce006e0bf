//! The `pennant` command line.
//!
//! Exit codes: 0 on success, 1 on usage errors (including invalid parameter
//! values), 2 on data errors such as an unknown seed or an unreadable file.

use std::ffi::OsString;
use std::io::Write;
use std::net::SocketAddr;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use pennant_core::render::{to_json, to_rank_table, to_svg, to_table, RenderStyle};
use pennant_core::{
    compute_pennant, LogBase, NormalizationPolicy, PennantOptions, SectorParams, TermIndex,
};

use crate::corpus_file::{read_corpus_file, CorpusFormat};
use crate::service::{self, parse_base, ServiceConfig};
use crate::store::{read_index_file, write_index_file};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "pennant",
    version,
    about = "Pennant diagrams for descriptor co-occurrence"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an index file from a corpus (TSV or JSON lines).
    Index {
        corpus: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// Corpus format: auto, tsv or jsonl.
        #[arg(long, default_value = "auto")]
        format: CorpusFormat,
        /// Lowercase descriptors (case is preserved by default).
        #[arg(long)]
        case_fold: bool,
        /// Keep surrounding whitespace in ids and descriptors.
        #[arg(long)]
        no_trim: bool,
    },
    /// List terms co-occurring with a seed, most frequent first.
    Rank {
        index: PathBuf,
        #[arg(long)]
        seed: String,
        #[arg(long, default_value_t = 1)]
        min_co: u64,
        #[arg(long = "top")]
        top: Option<usize>,
    },
    /// Compute a pennant diagram for a seed.
    Pennant {
        index: PathBuf,
        #[arg(long)]
        seed: String,
        #[arg(long, default_value_t = pennant_core::pennant::DEFAULT_MIN_CO)]
        min_co: u64,
        #[arg(long = "top")]
        top: Option<usize>,
        /// Logarithm base: a number above 1, or `e`.
        #[arg(long, default_value = "10", value_parser = parse_base)]
        base: LogBase,
        #[arg(long, default_value_t = SectorParams::default().alpha)]
        alpha: f64,
        #[arg(long, default_value_t = SectorParams::default().gamma)]
        gamma: f64,
        #[arg(long, default_value_t = SectorParams::default().tau)]
        tau: f64,
        /// Estimated total number of documents, replacing the indexed count.
        #[arg(long = "n-docs")]
        n_docs: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Serve pennants over HTTP from a prebuilt index.
    Serve {
        #[arg(env = "PENNANT_INDEX")]
        index: PathBuf,
        #[arg(long, env = "PENNANT_LISTEN", default_value = service::DEFAULT_LISTEN)]
        listen: SocketAddr,
        #[arg(long, default_value_t = pennant_core::pennant::DEFAULT_MIN_CO)]
        min_co: u64,
        #[arg(long, default_value = "10", value_parser = parse_base)]
        base: LogBase,
        /// Allow cross-origin requests (for a browser UI on another origin).
        #[arg(long)]
        cors: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Tsv,
    Svg,
}

/// Runs the CLI with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "pennant: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    use pennant_core::Error as Core;
    match e {
        Error::Core(Core::InvalidParams(_) | Core::InvalidBase(_) | Core::InvalidN { .. }) => {
            EXIT_USAGE
        }
        _ => EXIT_DATA,
    }
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<(), Error> {
    match command {
        Command::Index {
            corpus,
            output,
            format,
            case_fold,
            no_trim,
        } => {
            let norm = NormalizationPolicy {
                trim: !no_trim,
                case_fold,
            };
            let corpus = read_corpus_file(&corpus, format, norm)?;
            let index = TermIndex::build(&corpus)?;
            write_index_file(&output, &index)?;
            tracing::info!(
                docs = index.n_docs(),
                dropped_empty = corpus.dropped_empty(),
                terms = index.vocab_len(),
                "index written"
            );
            Ok(())
        }
        Command::Rank {
            index,
            seed,
            min_co,
            top,
        } => {
            let index = read_index_file(&index)?;
            let seed = index.normalize(&seed);
            let ranked = index.rank_cooccurring(&seed, min_co, top)?;
            let rows = ranked
                .iter()
                .map(|e| (e, index.df(&e.term).expect("ranked term is indexed")));
            emit(stdout, None, &to_rank_table(rows))
        }
        Command::Pennant {
            index,
            seed,
            min_co,
            top,
            base,
            alpha,
            gamma,
            tau,
            n_docs,
            format,
            output,
        } => {
            let index = read_index_file(&index)?;
            let opts = PennantOptions {
                min_co,
                top_k: top,
                log_base: base,
                n_override: n_docs,
                sectors: SectorParams { alpha, gamma, tau },
            };
            let diagram = compute_pennant(&index, &seed, &opts)?;
            let text = match format {
                OutputFormat::Json => to_json(&diagram),
                OutputFormat::Tsv => to_table(&diagram),
                OutputFormat::Svg => to_svg(&diagram, &RenderStyle::default())?,
            };
            emit(stdout, output, &text)
        }
        Command::Serve {
            index,
            listen,
            min_co,
            base,
            cors,
        } => {
            let config = ServiceConfig {
                listen,
                index_path: index,
                defaults: PennantOptions {
                    min_co,
                    log_base: base,
                    ..PennantOptions::default()
                },
                cors,
            };
            let runtime =
                tokio::runtime::Runtime::new().map_err(|e| Error::io("tokio runtime", e))?;
            runtime.block_on(service::serve(config))
        }
    }
}

fn emit(stdout: &mut dyn Write, output: Option<PathBuf>, text: &str) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(&path, text).map_err(|e| Error::io(path, e)),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::io("<stdout>", e)),
    }
}
