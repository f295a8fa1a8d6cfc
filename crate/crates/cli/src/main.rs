use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ctxsort_core::analysis::{
    cdr_sortable_search, cds_sortable_greedy, enumerate_cdr_fixed_points,
    greedy_safe_total_sequence, indiscriminate_cdr_run, parity, run_verify, SearchOptions,
    SearchOutcome, Selection, Sweep, VerifyConfig, DEFAULT_BUDGET,
};
use ctxsort_core::games::{play_out, winner_by_minimax, winner_by_parity, Rule};
use ctxsort_core::perm::{fixtures, parse_permutation_list};
use ctxsort_core::{
    build_overlap_graph, CdrMove, CdsMove, GameState, Move, OrientedGraph, SignedPermutation,
    SortTrace,
};

#[derive(Parser)]
#[command(
    name = "ctxsort",
    version,
    about = "Context directed sorting of signed permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the overlap graph of a permutation.
    Graph {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Apply one cdr or cds move.
    Apply {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        op: Op,
        /// Low index i of the cdr pointer (i,i+1).
        #[arg(long, required_if_eq("op", "cdr"))]
        pointer: Option<u32>,
        /// Low indices i,j of the two cds pointers.
        #[arg(long, value_delimiter = ',', required_if_eq("op", "cds"))]
        pointers: Option<Vec<u32>>,
    },
    /// Sort a permutation and print the trace.
    Sort {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Strategy::Search)]
        strategy: Strategy,
        /// Finish with cds moves once cdr is stuck.
        #[arg(long)]
        allow_cds: bool,
        /// Pick cdr moves at random with this seed instead of lowest first.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Check a property over many permutations.
    Verify {
        #[arg(long)]
        property: ctxsort_core::analysis::Property,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Print only FAIL and UNDECIDED records.
        #[arg(long)]
        failures_only: bool,
    },
    /// Decide the gcdr game on an overlap graph.
    Game {
        #[command(flatten)]
        input: Input,
        /// Play on a graph in text format instead of a permutation.
        #[arg(long, conflicts_with_all = ["perm", "file", "fixture"])]
        graph_file: Option<PathBuf>,
        #[arg(long, default_value = "normal")]
        rule: Rule,
        /// Also solve by minimax and report agreement.
        #[arg(long)]
        oracle: bool,
        /// Print one play-out, lowest vertex first.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// List the cdr fixed points reachable from a permutation.
    FixedPoints {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// List the built-in permutations, or print one.
    Fixtures { name: Option<String> },
    /// Parity of the length of maximal cdr sequences.
    Parity {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Args)]
struct Input {
    /// Permutation literal, e.g. "[3,-1,2]".
    #[arg(allow_hyphen_values = true)]
    perm: Option<String>,
    /// Read the permutation from a file ('#' comments allowed).
    #[arg(long, conflicts_with = "perm")]
    file: Option<PathBuf>,
    /// Use a built-in permutation (see `ctxsort fixtures`).
    #[arg(long, conflicts_with_all = ["perm", "file"])]
    fixture: Option<String>,
}

impl Input {
    fn is_given(&self) -> bool {
        self.perm.is_some() || self.file.is_some() || self.fixture.is_some()
    }

    fn load(&self) -> Result<SignedPermutation> {
        if let Some(text) = &self.perm {
            return Ok(text.parse()?);
        }
        if let Some(path) = &self.file {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let mut perms = parse_permutation_list(&text)
                .with_context(|| format!("parsing {}", path.display()))?;
            if perms.len() != 1 {
                bail!(
                    "{} holds {} permutations, expected one",
                    path.display(),
                    perms.len()
                );
            }
            return Ok(perms.remove(0));
        }
        if let Some(name) = &self.fixture {
            return fixture(name);
        }
        bail!("no permutation given; pass a literal, --file or --fixture")
    }
}

fn fixture(name: &str) -> Result<SignedPermutation> {
    fixtures()
        .remove(name)
        .ok_or_else(|| anyhow!("unknown fixture '{name}'; run `ctxsort fixtures` for the list"))
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Cdr,
    Cds,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    /// Depth-first search for a cdr sorting sequence.
    Search,
    /// Lookahead choice of vertices that keep every component oriented.
    GreedySafe,
    /// Any applicable cdr until none applies.
    Indiscriminate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// Returns the text for stdout. Failures with partial output print it
/// before returning the error.
fn run(command: Command) -> Result<String> {
    match command {
        Command::Graph { input, format } => {
            let g = build_overlap_graph(&input.load()?);
            Ok(match format {
                GraphFormat::Dot => g.to_dot(),
                GraphFormat::Text => g.to_text(),
            })
        }
        Command::Apply {
            input,
            op,
            pointer,
            pointers,
        } => {
            let perm = input.load()?;
            let mv = match op {
                Op::Cdr => Move::Cdr(CdrMove::new(pointer.expect("required by clap"))),
                Op::Cds => match pointers.expect("required by clap").as_slice() {
                    &[a, b] => Move::Cds(CdsMove::new(a, b)?),
                    other => bail!("--pointers takes two indices, got {}", other.len()),
                },
            };
            let mut trace = SortTrace::new(perm);
            trace.apply(mv)?;
            Ok(format!("{}\n{}", trace.current(), trace.to_text()))
        }
        Command::Sort {
            input,
            strategy,
            allow_cds,
            seed,
            budget,
        } => sort(&input.load()?, strategy, allow_cds, seed, budget),
        Command::Verify {
            property,
            n,
            exhaustive,
            samples,
            seed,
            budget,
            failures_only,
        } => {
            let sweep = match (exhaustive, samples) {
                (true, _) => Sweep::Exhaustive,
                (false, Some(count)) => Sweep::Samples { count, seed },
                (false, None) => bail!("pass --exhaustive or --samples K"),
            };
            let report = run_verify(VerifyConfig {
                property,
                n,
                sweep,
                budget,
            })?;
            let text = report.to_text(failures_only);
            if report.passed() {
                Ok(text)
            } else {
                print!("{text}");
                bail!(
                    "{property} check failed: {}",
                    report.summary().trim_start_matches("# summary ")
                )
            }
        }
        Command::Game {
            input,
            graph_file,
            rule,
            oracle,
            trace,
            budget,
        } => {
            let graph = match graph_file {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    text.parse::<OrientedGraph>()
                        .with_context(|| format!("parsing {}", path.display()))?
                }
                None if input.is_given() => build_overlap_graph(&input.load()?),
                None => bail!("no game given; pass a permutation or --graph-file"),
            };
            game(GameState::new(graph, rule), oracle, trace, budget)
        }
        Command::FixedPoints { input, budget } => {
            let perm = input.load()?;
            let fp = enumerate_cdr_fixed_points(&perm, budget);
            let mut out = format!(
                "# cdr fixed points of {perm} count={} complete={}\n",
                fp.points.len(),
                fp.complete
            );
            for (p, steps) in &fp.points {
                let steps: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
                writeln!(out, "{p}\tsteps={}", steps.join(","))?;
            }
            if !fp.complete {
                eprintln!("warning: budget of {budget} states exhausted; the list is partial");
            }
            Ok(out)
        }
        Command::Fixtures { name } => match name {
            Some(name) => Ok(format!("{}\n", fixture(&name)?)),
            None => {
                let mut out = String::new();
                for (name, p) in fixtures() {
                    writeln!(out, "{name}\t{p}")?;
                }
                Ok(out)
            }
        },
        Command::Parity { input } => Ok(format!("{}\n", parity(&input.load()?))),
    }
}

fn sort(
    perm: &SignedPermutation,
    strategy: Strategy,
    allow_cds: bool,
    seed: Option<u64>,
    budget: usize,
) -> Result<String> {
    let mut trace = SortTrace::new(perm.clone());
    let pointers = match strategy {
        Strategy::Search => {
            let opts = SearchOptions {
                budget,
                ..SearchOptions::default()
            };
            match cdr_sortable_search(perm, opts) {
                SearchOutcome::Reached(w) => w.pointers,
                SearchOutcome::Unreachable if allow_cds => {
                    indiscriminate_cdr_run(perm, selection(seed)).0
                }
                SearchOutcome::Unreachable => bail!("{perm} is not sortable by cdr alone"),
                SearchOutcome::Undecided { explored } => {
                    bail!("search gave up after {explored} states; raise --budget")
                }
            }
        }
        Strategy::GreedySafe => greedy_safe_total_sequence(perm)?.pointers,
        Strategy::Indiscriminate => indiscriminate_cdr_run(perm, selection(seed)).0,
    };
    for p in pointers {
        trace.apply(Move::Cdr(CdrMove { pointer: p }))?;
    }
    if allow_cds {
        for m in cds_sortable_greedy(trace.current()).moves {
            trace.apply(Move::Cds(m))?;
        }
    }
    let (k, m) = (trace.cdr_count(), trace.cds_count());
    let out = format!("{}k={k}, m={m}, k+2m={}\n", trace.to_text(), k + 2 * m);
    let end = trace.current();
    if end.is_identity() || end.is_reverse_identity() {
        Ok(out)
    } else {
        print!("{out}");
        bail!("stopped at {end}, which is neither the identity nor its reverse")
    }
}

fn selection(seed: Option<u64>) -> Selection {
    seed.map_or(Selection::Lowest, Selection::Seeded)
}

fn game(state: GameState, oracle: bool, trace: bool, budget: usize) -> Result<String> {
    let mut out = String::new();
    let (plies, _) = play_out(&state, Selection::Lowest);
    if trace {
        for p in &plies {
            writeln!(out, "{p}")?;
        }
    }
    let winner = winner_by_parity(&state);
    let length = if plies.len() % 2 == 0 { "even" } else { "odd" };
    writeln!(out, "winner: {winner} (parity {length})")?;
    if oracle {
        let exact = winner_by_minimax(&state, budget)?;
        if exact != winner {
            print!("{out}");
            bail!("minimax says {exact}, parity says {winner}");
        }
        writeln!(out, "oracle: minimax {exact}, agrees with parity")?;
    }
    Ok(out)
}
