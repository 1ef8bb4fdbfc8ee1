use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use orthoposet::bridges::{incomparability_orthoset, strict_comparability_orthoset};
use orthoposet::census::{
    census_run, explore, random_poset, search_counterexample, verify_theorems_with, SearchPredicate,
};
use orthoposet::io::{
    emit_dot_hasse, emit_dot_lattice, emit_json_report, parse_poset_file_with, to_canonical_json,
    to_poset_file, LogicReport, Report,
};
use orthoposet::{Limits, Logic, Poset};

/// Decide N-freeness, Dacey, compatibility, orthomodularity and Boolean-ness
/// of finite posets and their orthosets.
#[derive(Parser)]
#[command(name = "orthoposet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest poset accepted.
    #[arg(long, global = true, default_value_t = Limits::default().max_elements)]
    max_elements: usize,
    /// Largest orthoset whose closed sets are enumerated.
    #[arg(long, global = true, default_value_t = Limits::default().max_closed_elements)]
    max_closed_elements: usize,
    /// Largest number of closed sets produced by one enumeration.
    #[arg(long, global = true, default_value_t = Limits::default().max_family)]
    max_family: usize,
    /// Largest logic materialized.
    #[arg(long, global = true, default_value_t = Limits::default().max_lattice)]
    max_lattice: usize,
    /// Largest size for exhaustive enumeration (at most 7).
    #[arg(long, global = true, default_value_t = Limits::default().max_census_n)]
    max_census_n: usize,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits {
            max_elements: self.max_elements,
            max_closed_elements: self.max_closed_elements,
            max_family: self.max_family,
            max_lattice: self.max_lattice,
            max_census_n: self.max_census_n,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every predicate on a poset file and report witnesses.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = AnalyzeFormat::Json)]
        format: AnalyzeFormat,
        /// Include the analysis time in microseconds.
        #[arg(long)]
        timing: bool,
    },
    /// Print the logic of a poset's orthoset.
    Logic {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = LogicFormat::Json)]
        format: LogicFormat,
        #[arg(long, value_enum, default_value_t = Relation::Incomparability)]
        orthogonality: Relation,
    },
    /// Check the equivalences over every labeled poset up to a size.
    Census {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Find the first labeled poset satisfying a predicate.
    Search {
        /// nfree_but_strict_not_dacey or strict_dacey
        #[arg(long)]
        predicate: SearchPredicate,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        workers: Option<usize>,
        /// List one poset per isomorphism class instead of the first hit.
        #[arg(long)]
        all: bool,
    },
    /// Write a poset file.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Probability of each forward pair in a random poset.
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AnalyzeFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum LogicFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Relation {
    Incomparability,
    Strict,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Chain,
    Antichain,
    N,
    Diamond22,
    Random,
}

fn read_poset(path: &Path, limits: &Limits) -> Result<Poset> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_poset_file_with(&text, limits).with_context(|| format!("parsing {}", path.display()))
}

fn workers(requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let limits = cli.limits.limits();
    match cli.command {
        Command::Analyze {
            file,
            format,
            timing,
        } => {
            let p = read_poset(&file, &limits)?;
            match format {
                AnalyzeFormat::Dot => print!("{}", emit_dot_hasse(&p)),
                AnalyzeFormat::Json => {
                    let start = Instant::now();
                    let analysis = verify_theorems_with(&p, &limits)?;
                    let mut report = Report::new(&p, &analysis);
                    if timing {
                        report.timing_us = Some(start.elapsed().as_micros() as u64);
                    }
                    print!("{}", emit_json_report(&report));
                }
            }
        }
        Command::Logic {
            file,
            format,
            orthogonality,
        } => {
            let p = read_poset(&file, &limits)?;
            let o = match orthogonality {
                Relation::Incomparability => incomparability_orthoset(&p),
                Relation::Strict => strict_comparability_orthoset(&p),
            };
            let logic = Logic::build_with(&o, &limits)?;
            let names: Vec<String> = (0..p.len()).map(|x| p.label(x)).collect();
            match format {
                LogicFormat::Dot => print!("{}", emit_dot_lattice(&logic, &names)),
                LogicFormat::Json => {
                    print!("{}", to_canonical_json(&LogicReport::new(&logic, &names)?))
                }
            }
        }
        Command::Census { max_n, workers: k } => {
            let summaries = census_run(max_n, workers(k), &limits)?;
            for s in summaries.iter().filter(|s| !s.is_consistent()) {
                eprintln!("n = {}: {} violations", s.n, s.violations.len());
            }
            print!("{}", to_canonical_json(&summaries));
        }
        Command::Search {
            predicate,
            max_n,
            workers: k,
            all,
        } => {
            if all {
                let found = explore(predicate, max_n, &limits)?;
                for p in &found {
                    println!("# {} elements", p.len());
                    println!("{}", to_poset_file(p));
                }
                if !found.is_empty() {
                    return Ok(ExitCode::from(2));
                }
                eprintln!("no poset satisfies {predicate} up to n = {max_n}");
            } else {
                match search_counterexample(predicate, max_n, workers(k), &limits)? {
                    Some(found) => {
                        println!(
                            "# {predicate}: n = {} shard = {} offset = {}",
                            found.n, found.shard, found.offset
                        );
                        print!("{}", to_poset_file(&found.poset));
                        return Ok(ExitCode::from(2));
                    }
                    None => eprintln!("no poset satisfies {predicate} up to n = {max_n}"),
                }
            }
        }
        Command::Generate {
            kind,
            n,
            seed,
            edge_prob,
        } => {
            let size = |n: Option<usize>| -> Result<usize> {
                let Some(n) = n else {
                    bail!("--n is required for this kind")
                };
                ensure!(
                    n <= limits.max_elements,
                    "--n {n} exceeds --max-elements {}",
                    limits.max_elements
                );
                Ok(n)
            };
            let p = match kind {
                Kind::Chain => Poset::chain(size(n)?),
                Kind::Antichain => Poset::antichain(size(n)?),
                Kind::Random => random_poset(size(n)?, seed, edge_prob)?,
                Kind::N => Poset::n_shape(),
                Kind::Diamond22 => Poset::diamond22(),
            };
            print!("{}", to_poset_file(&p));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
