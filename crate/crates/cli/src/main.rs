use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fbbgraph::correspondence::phi;
use fbbgraph::counting::{count_d, count_f, diff_bfile, emit_triangle, CountKind, TableFormat};
use fbbgraph::graphs::{DEFAULT_ENUMERATION_CAP, MAX_ENUMERATION_N};
use fbbgraph::labeling::pair_count;
use fbbgraph::render::{self, CheckStatus, RenderFormat};
use fbbgraph::verify::{all_passed, run_suite, SuiteConfig};
use fbbgraph::{build_cf, build_fbb, rank, unrank, EdgeLabel, Error, RankSet};

/// Largest `--max-n` accepted by `verify`; beyond this the lattice checks on
/// CF(n) stop being interactive.
const MAX_VERIFY_N: u32 = 16;

#[derive(Parser)]
#[command(
    name = "fbbgraph",
    version,
    about = "Fundamental basic blocks and labeled graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Label of the edge {i, j} of K_n
    Rank {
        #[arg(long)]
        n: u32,
        i: u32,
        j: u32,
    },
    /// Endpoints of the edge with label k
    Unrank {
        #[arg(long)]
        n: u32,
        k: u64,
    },
    /// The complete block CF(n)
    Cf {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The block with adjunct pairs given by a rank list
    Fbb {
        #[arg(long)]
        n: u32,
        /// Comma-separated labels in 1..=C(n,2), or `i-j` pairs
        #[arg(long)]
        ranks: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The labeled digraph of the block with the given ranks
    GraphOf {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ranks: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// A single count d(n, q) or f(n, l)
    Count {
        kind: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
    },
    /// Rows 0..=max-n of the triangle
    Table {
        kind: String,
        #[arg(long)]
        max_n: u32,
        /// csv, json or bfile
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the cross-validation suite
    Verify {
        #[arg(long)]
        max_n: u32,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        enum_cap: u32,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        inject_rank_fault: bool,
    },
    /// Compare an OEIS b-file against the computed triangle
    DiffBfile { kind: String, path: PathBuf },
}

#[derive(clap::Args)]
struct OutputArgs {
    /// text, dot, json or csv
    #[arg(long, default_value = "text")]
    format: String,
    #[arg(long)]
    output: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(text: String, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render_poset(
    p: &fbbgraph::Poset,
    rep: Option<&fbbgraph::fbb::AdjunctRepresentation>,
    title: &str,
    format: RenderFormat,
) -> String {
    match format {
        RenderFormat::Text => render::poset_text(p, rep),
        RenderFormat::Dot => render::poset_dot(p, title),
        RenderFormat::Json => render::poset_json(p),
        RenderFormat::Csv => render::poset_csv(p),
    }
}

fn off_by_one_rank(n: u32, i: u32, j: u32) -> fbbgraph::Result<EdgeLabel> {
    let k = rank(n, i, j)?.get() as u64;
    let shifted = if n == 5 && k == 7 { 8 } else { k };
    EdgeLabel::new(n, shifted)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Rank { n, i, j } => println!("{}", rank(n, i, j)?.get()),
        Command::Unrank { n, k } => {
            let (i, j) = unrank(n, k)?;
            println!("{i} {j}");
        }
        Command::Cf { n, out } => {
            let format: RenderFormat = out.format.parse()?;
            let cf = build_cf(n)?;
            let rep = cf.representation();
            let text = render_poset(cf.poset(), Some(&rep), &format!("CF({n})"), format);
            emit(text, out.output.as_ref())?;
        }
        Command::Fbb { n, ranks, out } => {
            let format: RenderFormat = out.format.parse()?;
            let f = build_fbb(n, &RankSet::parse(n, &ranks)?)?;
            let rep = f.adjunct_representation()?;
            let text = render_poset(
                f.poset(),
                Some(&rep),
                &format!("F(n={n}, l={})", f.nullity()),
                format,
            );
            emit(text, out.output.as_ref())?;
        }
        Command::GraphOf { n, ranks, out } => {
            let format: RenderFormat = out.format.parse()?;
            let g = phi(&build_fbb(n, &RankSet::parse(n, &ranks)?)?)?;
            let text = match format {
                RenderFormat::Text => render::graph_text(&g),
                RenderFormat::Dot => render::graph_dot(&g, &format!("G_F(n={n})")),
                RenderFormat::Json => render::graph_json(&g),
                RenderFormat::Csv => render::graph_csv(&g),
            };
            emit(text, out.output.as_ref())?;
        }
        Command::Count { kind, n, q } => {
            let value = match kind.parse::<CountKind>()? {
                CountKind::D => count_d(n, q),
                CountKind::F => count_f(n, q),
            };
            println!("{value}");
        }
        Command::Table {
            kind,
            max_n,
            format,
            output,
        } => {
            let kind: CountKind = kind.parse()?;
            let format: TableFormat = format.parse()?;
            emit(emit_triangle(kind, max_n, format)?, output.as_ref())?;
        }
        Command::Verify {
            max_n,
            enum_cap,
            json,
            inject_rank_fault,
        } => {
            if !(2..=MAX_VERIFY_N).contains(&max_n) {
                return Err(Failure::Usage(format!(
                    "--max-n must be in 2..={MAX_VERIFY_N}, got {max_n}"
                )));
            }
            if enum_cap > MAX_ENUMERATION_N {
                return Err(Failure::Usage(format!(
                    "--enum-cap must be at most {MAX_ENUMERATION_N}, got {enum_cap}"
                )));
            }
            if enum_cap > 8 {
                eprintln!(
                    "warning: --enum-cap {enum_cap} scans 2^{} edge subsets at n = {enum_cap}",
                    pair_count(enum_cap)
                );
            }
            let mut cfg = SuiteConfig::new(max_n);
            cfg.enum_cap = enum_cap;
            if inject_rank_fault {
                cfg.rank_fn = off_by_one_rank;
            }
            let report = run_suite(&cfg);
            if json {
                print!("{}", render::report_json(&report));
            } else {
                for c in &report.checks {
                    let status = match c.status {
                        CheckStatus::Pass => "PASS",
                        CheckStatus::Fail => "FAIL",
                    };
                    println!("{status}  {}: {}", c.name, c.detail);
                }
            }
            if !all_passed(&report) {
                let first = report
                    .checks
                    .iter()
                    .find(|c| c.status == CheckStatus::Fail)
                    .unwrap();
                return Err(Failure::Mismatch(format!(
                    "{}: {}",
                    first.name, first.detail
                )));
            }
        }
        Command::DiffBfile { kind, path } => {
            let report = diff_bfile(&path, kind.parse()?)?;
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            for m in &report.mismatches {
                println!(
                    "line {}: index {} is ({}, {}): expected {}, found {}",
                    m.line, m.index, m.n, m.q, m.expected, m.found
                );
            }
            if !report.is_clean() {
                return Err(Failure::Mismatch(format!(
                    "{} of {} entries differ",
                    report.mismatches.len(),
                    report.compared
                )));
            }
            println!("{} entries match", report.compared);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
