use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use corona_indices::harness::{self, GraphSource, HarnessError, VerifyConfig};
use corona_indices::{graph, products, IndexKind, IndexValue, Variant};

/// Corona-variant graph products and their degree-based topological indices.
#[derive(Parser, Debug)]
#[command(name = "corona-indices", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print topological indices of one graph.
    Index {
        /// Generator spec (path:5, cycle:6, complete:4, star:3, random:n:p:seed) or edge-list file.
        #[arg(long)]
        graph: String,
        /// Index to compute (M1, M2, F, HM1, RM2); repeatable; all five when omitted.
        #[arg(long = "kind")]
        kinds: Vec<IndexKind>,
    },
    /// Build a product graph and write it as an edge list.
    Product {
        kind: ProductArg,
        #[arg(long)]
        g1: String,
        /// Second factor; not used by `subdivision`.
        #[arg(long)]
        g2: Option<String>,
        /// Output file; the edge list goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every closed form against direct computation on catalog and random factor pairs.
    Verify {
        /// Skip the built-in catalog of paths, cycles, complete graphs and stars.
        #[arg(long)]
        no_catalog: bool,
        #[arg(long, default_value_t = harness::DEFAULT_SEED)]
        seed: u64,
        /// Number of random factor pairs.
        #[arg(long, default_value_t = harness::DEFAULT_FUZZ)]
        fuzz: usize,
        /// Largest order of a random factor.
        #[arg(long, default_value_t = harness::DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Report file; the report goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate an index of P_l ⊕ C_m or P_l ∔ C_m from its polynomial and from the built graph.
    Table {
        #[arg(long)]
        kind: IndexKind,
        #[arg(long)]
        product: Variant,
        /// Path lengths, e.g. 3..8 (inclusive).
        #[arg(long, value_parser = range_arg)]
        l: std::ops::RangeInclusive<usize>,
        /// Cycle lengths, e.g. 3..8 (inclusive).
        #[arg(long, value_parser = range_arg)]
        m: std::ops::RangeInclusive<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProductArg {
    Join,
    Corona,
    Subdivision,
    CoronaJoin,
    Sdvj,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn range_arg(text: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    harness::parse_range(text).ok_or_else(|| format!("invalid range {text:?}, expected a..b"))
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl From<harness::SourceError> for CliError {
    fn from(e: harness::SourceError) -> Self {
        CliError::Harness(e.into())
    }
}

impl From<corona_indices::IndexError> for CliError {
    fn from(e: corona_indices::IndexError) -> Self {
        CliError::Harness(e.into())
    }
}

fn load(spec: &str) -> Result<graph::Graph, CliError> {
    Ok(spec.parse::<GraphSource>()?.build()?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Write {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Index { graph, kinds } => {
            let g = load(&graph)?;
            let kinds = if kinds.is_empty() {
                IndexKind::ALL.to_vec()
            } else {
                kinds
            };
            for &kind in &kinds {
                let value: IndexValue = corona_indices::index(kind, &g)?;
                if kinds.len() == 1 {
                    println!("{value}");
                } else {
                    println!("{kind} {value}");
                }
            }
            Ok(0)
        }
        Command::Product { kind, g1, g2, out } => {
            let g1 = load(&g1)?;
            let g2 = match (kind, g2) {
                (ProductArg::Subdivision, _) => None,
                (_, Some(spec)) => Some(load(&spec)?),
                (_, None) => return Err(CliError::Usage("--g2 is required".into())),
            };
            let product = match (kind, g2.as_ref()) {
                (ProductArg::Subdivision, _) => products::subdivision(&g1),
                (ProductArg::Join, Some(g2)) => products::join(&g1, g2),
                (ProductArg::Corona, Some(g2)) => products::corona(&g1, g2),
                (ProductArg::CoronaJoin, Some(g2)) => products::corona_join(&g1, g2),
                (ProductArg::Sdvj, Some(g2)) => products::subdivision_vertex_join(&g1, g2),
                (_, None) => unreachable!(),
            };
            let text = graph::write_edge_list(&product.graph);
            if out.is_some() {
                emit(out.as_deref(), &text)?;
                println!("{} {}", product.graph.order(), product.graph.size());
            } else {
                emit(None, &text)?;
                eprintln!("{} {}", product.graph.order(), product.graph.size());
            }
            Ok(0)
        }
        Command::Verify {
            no_catalog,
            seed,
            fuzz,
            max_order,
            format,
            out,
        } => {
            let config = VerifyConfig {
                catalog: !no_catalog,
                seed,
                fuzz,
                max_order,
            };
            let report = harness::verify(&config)?;
            let text = match format {
                Format::Csv => report.to_csv()?,
                Format::Json => report.to_json()?,
            };
            emit(out.as_deref(), &text)?;
            match report.first_mismatch() {
                None => eprintln!("{} records, all matched", report.records.len()),
                Some(first) => eprintln!(
                    "{} of {} records mismatched; first: {first}",
                    report.mismatches(),
                    report.records.len()
                ),
            }
            Ok(report.exit_code() as u8)
        }
        Command::Table {
            kind,
            product,
            l,
            m,
            out,
        } => {
            let cells = harness::table(kind, product, l, m)?;
            emit(out.as_deref(), &harness::table_csv(&cells)?)?;
            let flagged = cells.iter().filter(|c| c.flagged()).count();
            if flagged > 0 {
                eprintln!("{flagged} cells differ from direct computation");
                return Ok(1);
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
