//! `contract` command-line front end.
//!
//! Exit status: 0 = yes/valid, 1 = no/invalid, 2 = usage or I/O error,
//! 3 = search budget exceeded. Errors are reported on stderr as a single
//! line `error: <kind>: <detail>`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::engine::{
    contracts_to, cyclicity, find_suitable_pair, p4_contractible, verify_witness, Budget,
    EngineError, PatternSpec, WitnessStructure,
};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::reductions::{build_gadget, p5_witness_to_colouring, GadgetKind, LabeledGadget, ReductionError};
use crate::sweep::{run_sweep, SweepOptions, DEFAULT_SEED};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Default node budget per search when `--budget` is not given.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Debug, Parser)]
#[command(name = "contract", version, about = "Path and cycle contractibility tools")]
struct Cli {
    /// Maximum number of search nodes per decision (0 = unlimited).
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a gadget from a hypergraph (the hypergraph is normalized first).
    Gen {
        #[arg(value_parser = ["p5", "p6", "c6"])]
        kind: String,
        hypergraph: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print a 2-colouring of a hypergraph, or NONE.
    Color { hypergraph: PathBuf },
    /// Decide contractibility to a path or cycle.
    Decide {
        #[command(subcommand)]
        target: DecideTarget,
    },
    /// Length of the longest cycle the graph contracts to (0 if none).
    Cyclicity { graph: PathBuf },
    /// Check a witness structure against a graph.
    Verify { graph: PathBuf, witness: PathBuf },
    /// Read a 2-colouring off a P5 witness of a P5 gadget.
    ExtractColouring { gadget: PathBuf, witness: PathBuf },
    /// Check the gadget equivalences on small hypergraphs.
    Sweep {
        #[arg(long)]
        max_elements: usize,
        #[arg(long)]
        max_edges: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Draw this many random instances instead of enumerating.
        #[arg(long)]
        samples: Option<usize>,
        /// Also compute the cyclicity of every C6 gadget.
        #[arg(long)]
        with_cyclicity: bool,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum DecideTarget {
    Path {
        #[arg(short = 'l')]
        length: usize,
        graph: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    Cycle {
        #[arg(short = 'k')]
        length: usize,
        graph: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Pair guessing plus 2-Disjoint Connected Subgraphs.
    P4 {
        graph: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, String),
    Input(String),
    Budget(u64),
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Budget(_) => EXIT_BUDGET,
            _ => EXIT_USAGE,
        }
    }

    fn line(&self) -> String {
        let one_line = |s: &str| s.replace('\n', " ");
        match self {
            Failure::Usage(m) => format!("error: usage: {}", one_line(m)),
            Failure::Io(p, e) => format!("error: io: {}: {}", p.display(), e),
            Failure::Parse(p, m) => format!("error: parse: {}: {}", p.display(), one_line(m)),
            Failure::Input(m) => format!("error: input: {}", one_line(m)),
            Failure::Budget(n) => format!("error: budget: search exceeded {n} nodes"),
        }
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::BudgetExceeded(n) => Failure::Budget(n),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

/// Accepts a plain graph or a gadget file, whose graph is used.
fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read(path)?;
    match Graph::from_json(&text) {
        Ok(g) => Ok(g),
        Err(e) => match LabeledGadget::from_json(&text) {
            Ok(gadget) => Ok(gadget.graph),
            Err(_) => Err(Failure::Parse(path.to_path_buf(), e.to_string())),
        },
    }
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    Hypergraph::from_json(&read(path)?)
        .map_err(|e| Failure::Parse(path.to_path_buf(), e.to_string()))
}

fn load_witness(path: &Path) -> Result<WitnessStructure, Failure> {
    WitnessStructure::from_json(&read(path)?)
        .map_err(|e| Failure::Parse(path.to_path_buf(), e.to_string()))
}

/// Run the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_YES;
            }
            let first = e.to_string();
            let first = first.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(err, "{}", Failure::Usage(first.to_string()).line());
            return EXIT_USAGE;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.line());
            f.status()
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let budget = if cli.budget == 0 {
        Budget::UNLIMITED
    } else {
        Budget::nodes(cli.budget)
    };
    let mut say = |s: &str| {
        let _ = writeln!(out, "{s}");
    };
    match cli.command {
        Command::Gen {
            kind,
            hypergraph,
            output,
            dot,
        } => {
            let kind: GadgetKind = kind.parse().map_err(Failure::Usage)?;
            let h = load_hypergraph(&hypergraph)?
                .normalize()
                .map_err(|e| Failure::Input(e.to_string()))?;
            let gadget = build_gadget(kind, &h).map_err(|e| Failure::Input(e.to_string()))?;
            match output {
                Some(p) => write(&p, &format!("{}\n", gadget.to_json()))?,
                None => say(&gadget.to_json()),
            }
            if let Some(p) = dot {
                write(&p, &gadget.to_dot())?;
            }
            Ok(EXIT_YES)
        }
        Command::Color { hypergraph } => {
            let h = load_hypergraph(&hypergraph)?;
            match h.two_colouring().map_err(|e| Failure::Input(e.to_string()))? {
                Some(c) => {
                    say(&serde_json::to_string(&c).expect("colouring serializes"));
                    Ok(EXIT_YES)
                }
                None => {
                    say("NONE");
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Decide { target } => {
            let (graph, witness_path, result) = match target {
                DecideTarget::Path {
                    length,
                    graph,
                    witness,
                } => {
                    let g = load_graph(&graph)?;
                    let r = if length >= 3 {
                        find_suitable_pair(&g, length, budget).map(|r| r.map(|p| p.witness))
                    } else {
                        contracts_to(&g, &PatternSpec::Path(length), budget)
                    };
                    (g, witness, r)
                }
                DecideTarget::Cycle {
                    length,
                    graph,
                    witness,
                } => {
                    let g = load_graph(&graph)?;
                    let r = contracts_to(&g, &PatternSpec::Cycle(length), budget);
                    (g, witness, r)
                }
                DecideTarget::P4 { graph, witness } => {
                    let g = load_graph(&graph)?;
                    let r = p4_contractible(&g, budget);
                    (g, witness, r)
                }
            };
            let found = match result {
                Err(EngineError::PatternTooLarge { .. }) => None,
                other => other?,
            };
            match found {
                Some(ws) => {
                    debug_assert_eq!(verify_witness(&graph, &ws), Ok(()));
                    if let Some(p) = witness_path {
                        write(&p, &format!("{}\n", ws.to_json()))?;
                    }
                    say("yes");
                    Ok(EXIT_YES)
                }
                None => {
                    say("no");
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Cyclicity { graph } => {
            let g = load_graph(&graph)?;
            say(&cyclicity(&g, budget)?.to_string());
            Ok(EXIT_YES)
        }
        Command::Verify { graph, witness } => {
            let g = load_graph(&graph)?;
            let ws = load_witness(&witness)?;
            match verify_witness(&g, &ws) {
                Ok(()) => {
                    say("valid");
                    Ok(EXIT_YES)
                }
                Err(v) => {
                    say(&format!("invalid: condition {}: {v}", v.bullet()));
                    Ok(EXIT_NO)
                }
            }
        }
        Command::ExtractColouring { gadget, witness } => {
            let text = read(&gadget)?;
            let gadget = LabeledGadget::from_json(&text)
                .map_err(|e| Failure::Parse(gadget.clone(), e.to_string()))?;
            let ws = load_witness(&witness)?;
            match p5_witness_to_colouring(&gadget, &ws) {
                Ok(c) => {
                    say(&serde_json::to_string(&c).expect("colouring serializes"));
                    Ok(EXIT_YES)
                }
                Err(e @ ReductionError::WrongKind { .. }) => Err(Failure::Input(e.to_string())),
                Err(e) => {
                    say(&format!("invalid: {e}"));
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Sweep {
            max_elements,
            max_edges,
            seed,
            samples,
            with_cyclicity,
            output,
        } => {
            if max_elements < 2 {
                return Err(Failure::Usage("--max-elements must be at least 2".into()));
            }
            let report = run_sweep(&SweepOptions {
                max_elements,
                max_edges,
                samples,
                seed,
                budget,
                with_cyclicity,
            });
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            match output {
                Some(p) => write(&p, &format!("{text}\n"))?,
                None => say(&text),
            }
            Ok(if report.summary.disagreements > 0 {
                EXIT_NO
            } else if report.summary.budget_exceeded > 0 {
                EXIT_BUDGET
            } else {
                EXIT_YES
            })
        }
    }
}
