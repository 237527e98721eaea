mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "clockwise", version, about = "Clockwise parity orientations of multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
#[group(multiple = false)]
pub struct Uniform {
    /// Prescribe every even circuit clockwise odd.
    #[arg(long)]
    all_odd: bool,
    /// Prescribe every even circuit clockwise even.
    #[arg(long)]
    all_even: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide compatibility: an orientation or an intractable set.
    Check {
        graph: PathBuf,
        assignment: Option<PathBuf>,
        #[command(flatten)]
        uniform: Uniform,
        #[arg(long, default_value_t = commands::DEFAULT_MAX_CIRCUITS)]
        max_circuits: usize,
        /// Write a DOT rendering to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Search for a forbidden subgraph witnessing incompatibility.
    Scan {
        graph: PathBuf,
        assignment: Option<PathBuf>,
        #[command(flatten)]
        uniform: Uniform,
        /// Also decide with the solver and require agreement.
        #[arg(long)]
        cross_check: bool,
        #[arg(long, default_value_t = commands::DEFAULT_MAX_CIRCUITS)]
        max_circuits: usize,
        #[arg(long, default_value_t = commands::DEFAULT_MAX_SUBSETS)]
        max_subsets: u64,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Build an even-circuit decomposition by arc adjunctions.
    Decompose {
        graph: PathBuf,
        /// Re-check every structural property of the result.
        #[arg(long)]
        validate: bool,
        #[arg(long, default_value_t = commands::DEFAULT_MAX_CIRCUITS)]
        max_circuits: usize,
    },
    /// Find a Pfaffian orientation and count perfect matchings.
    Pfaffian {
        graph: PathBuf,
        /// Compare the count with explicit enumeration.
        #[arg(long)]
        brute_check: bool,
        #[arg(long, default_value_t = commands::DEFAULT_MAX_MATCHINGS)]
        max_matchings: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// List the built-in graphs, print one, or check them all.
    Catalog {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        selfcheck: bool,
    },
    /// Generate a corpus and cross-check the solver, brute force, the
    /// scanner and the decomposition on it.
    Corpus(commands::CorpusArgs),
}

fn read(path: &PathBuf) -> clockwise::Result<String> {
    std::fs::read_to_string(path).map_err(|e| clockwise::Error::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli, out: &mut dyn Write) -> clockwise::Result<u8> {
    match cli.command {
        Command::Check {
            graph,
            assignment,
            uniform,
            max_circuits,
            dot,
        } => {
            let g = commands::load_graph(&read(&graph)?)?;
            let j = commands::load_assignment(&g, assignment.as_ref().map(read).transpose()?.as_deref(), uniform)?;
            commands::check(&g, &j, max_circuits, dot.as_deref(), out)
        }
        Command::Scan {
            graph,
            assignment,
            uniform,
            cross_check,
            max_circuits,
            max_subsets,
            dot,
        } => {
            let g = commands::load_graph(&read(&graph)?)?;
            let text = assignment.as_ref().map(read).transpose()?;
            let j = commands::load_assignment(&g, text.as_deref(), uniform)?;
            let budget = clockwise::scan::ScanBudget {
                max_subsets,
                circuit_cap: max_circuits,
            };
            commands::scan(&g, &j, budget, cross_check, dot.as_deref(), out)
        }
        Command::Decompose {
            graph,
            validate,
            max_circuits,
        } => {
            let g = commands::load_graph(&read(&graph)?)?;
            commands::decompose(&g, validate, max_circuits, out)
        }
        Command::Pfaffian {
            graph,
            brute_check,
            max_matchings,
            dot,
        } => {
            let g = commands::load_graph(&read(&graph)?)?;
            commands::pfaffian(&g, brute_check, max_matchings, dot.as_deref(), out)
        }
        Command::Catalog { name, selfcheck } => commands::catalog(name.as_deref(), selfcheck, out),
        Command::Corpus(args) => commands::corpus(&args, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let status = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            2
        }
    };
    if out.flush().is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(status)
}
