use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use autotopism::conditions::{classify, Condition, Construction, Status, Verdict};
use autotopism::construct::realize;
use autotopism::latin::LatinSquare;
use autotopism::perm::{parse_permutation, CycleStructure, Isotopism, StructureTriple};
use autotopism::search::{
    count_delta_with, enumerate_table_with, exists_witness_with, format_table, Count, SearchConfig, SearchError,
    DEFAULT_BOUND,
};

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const INPUT: u8 = 2;
const BOUND: u8 = 3;

#[derive(Parser)]
#[command(name = "autotopism", version, about = "Decide, construct and count autotopisms of Latin squares")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether an isotopism is an autotopism of a square file.
    Verify {
        square: PathBuf,
        /// Row permutation in cycle notation, e.g. "(1 2 3)(4 5)".
        #[arg(long)]
        alpha: String,
        /// Column permutation; defaults to alpha.
        #[arg(long)]
        beta: Option<String>,
        /// Symbol permutation; defaults to alpha.
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Decide membership of a cycle-structure triple.
    Classify {
        #[command(flatten)]
        triple: TripleArgs,
        /// Resolve UNDECIDED by exhaustive search within the order bound.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Print a square admitting the canonical isotopism of a triple.
    Witness {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Count the squares admitting the canonical isotopism of a triple.
    Count {
        #[command(flatten)]
        triple: TripleArgs,
        /// Stop once this many squares are found and print ">=K".
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print the table of member cycle structures of one order.
    Table {
        #[arg(long)]
        order: usize,
        /// Confirm every row by construction or search (order at most 7).
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args)]
struct TripleArgs {
    /// Cycle structure such as "3.2.1^2".
    #[arg(long)]
    alpha: String,
    /// Defaults to alpha.
    #[arg(long)]
    beta: Option<String>,
    /// Defaults to alpha.
    #[arg(long)]
    gamma: Option<String>,
}

impl TripleArgs {
    fn parse(&self) -> Result<StructureTriple, String> {
        let cs = |s: &str| s.parse::<CycleStructure>().map_err(|e| format!("{s:?}: {e}"));
        let a = cs(&self.alpha)?;
        let b = self.beta.as_deref().map_or(Ok(a.clone()), cs)?;
        let c = self.gamma.as_deref().map_or(Ok(a.clone()), cs)?;
        StructureTriple::new(a, b, c).map_err(|e| e.to_string())
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

struct Failure(u8, String);

type Outcome = Result<u8, Failure>;

fn input_error(msg: impl ToString) -> Failure {
    Failure(INPUT, msg.to_string())
}

fn search_error(e: SearchError) -> Failure {
    match e {
        SearchError::TooLarge { .. } | SearchError::Budget(_) => Failure(BOUND, e.to_string()),
        SearchError::DegreeMismatch { .. } => Failure(INPUT, e.to_string()),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(j).build().map_err(input_error)?;
            Ok(pool.install(f))
        }
    }
}

fn verify(square: &PathBuf, alpha: &str, beta: Option<&str>, gamma: Option<&str>) -> Outcome {
    let text = fs::read_to_string(square).map_err(|e| input_error(format!("{}: {e}", square.display())))?;
    let l: LatinSquare = text.parse().map_err(input_error)?;
    let n = l.order();
    let p = |s: &str| parse_permutation(s, n).map_err(|e| input_error(format!("{s:?}: {e}")));
    let a = p(alpha)?;
    let b = beta.map_or(Ok(a.clone()), p)?;
    let c = gamma.map_or(Ok(a.clone()), p)?;
    let theta = Isotopism::new(a, b, c).map_err(input_error)?;
    match l.first_violation(&theta).map_err(input_error)? {
        None => {
            println!("AUTOTOPISM");
            Ok(OK)
        }
        Some((i, j)) => {
            println!("NOT AUTOTOPISM: cell ({i}, {j}) maps to a cell with a different symbol");
            Ok(NEGATIVE)
        }
    }
}

/// Classification, escalated to search when `search` is set.
fn decide(t: &StructureTriple, search: bool, bound: usize) -> Result<Verdict, Failure> {
    let verdict = classify(t);
    if verdict.status() != Status::Undecided || !search {
        return Ok(verdict);
    }
    let cfg = SearchConfig { bound: Some(bound), ..SearchConfig::default() };
    Ok(match exists_witness_with(&Isotopism::canonical(t), &cfg).map_err(search_error)? {
        Some(l) => Verdict::Member { via: Construction::Search, witness: Some(l) },
        None => Verdict::NonMember(Condition::NoSquare),
    })
}

fn exit_for(status: Status) -> u8 {
    match status {
        Status::Member => OK,
        Status::NonMember => NEGATIVE,
        Status::Undecided => BOUND,
    }
}

fn witness(t: &StructureTriple, output: Option<&PathBuf>, bound: usize) -> Outcome {
    let verdict = classify(t);
    if verdict.status() == Status::NonMember {
        println!("{}", verdict.report().trim_end());
        return Ok(NEGATIVE);
    }
    let square = match realize(t) {
        Ok((l, _)) => l,
        Err(_) => {
            let cfg = SearchConfig { bound: Some(bound), ..SearchConfig::default() };
            match exists_witness_with(&Isotopism::canonical(t), &cfg).map_err(search_error)? {
                Some(l) => l,
                None => {
                    println!("NONMEMBER {}", Condition::NoSquare);
                    return Ok(NEGATIVE);
                }
            }
        }
    };
    let theta = Isotopism::canonical(t);
    eprintln!("# isotopism {theta}");
    match output {
        Some(path) => {
            fs::write(path, square.to_string()).map_err(|e| input_error(format!("{}: {e}", path.display())))?
        }
        None => emit(&square.to_string()),
    }
    Ok(OK)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Verify { square, alpha, beta, gamma } => verify(&square, &alpha, beta.as_deref(), gamma.as_deref()),
        Command::Classify { triple, search, bound } => {
            let t = triple.parse().map_err(input_error)?;
            let v = decide(&t, search, bound)?;
            emit(&v.report());
            Ok(exit_for(v.status()))
        }
        Command::Witness { triple, output, bound } => {
            let t = triple.parse().map_err(input_error)?;
            witness(&t, output.as_ref(), bound)
        }
        Command::Count { triple, limit, bound, jobs } => {
            let t = triple.parse().map_err(input_error)?;
            if let Verdict::NonMember(c) = classify(&t) {
                eprintln!("# excluded by {c}");
                emit("0\n");
                return Ok(NEGATIVE);
            }
            let cfg = SearchConfig { bound: Some(bound), ..SearchConfig::default() };
            let count =
                with_jobs(jobs, || count_delta_with(&Isotopism::canonical(&t), limit, &cfg))?.map_err(search_error)?;
            emit(&format!("{count}\n"));
            Ok(match count {
                Count::Exact(0) => NEGATIVE,
                _ => OK,
            })
        }
        Command::Table { order, exhaustive, jobs } => {
            if order == 0 {
                return Err(input_error("order must be positive"));
            }
            if exhaustive && order > 7 {
                return Err(input_error("exhaustive tables are limited to order 7"));
            }
            let cfg = SearchConfig::default();
            let progress = |done: usize, total: usize| {
                if done.is_multiple_of(64) || done == total {
                    eprint!("\r{done}/{total}");
                    if done == total {
                        eprintln!();
                    }
                }
            };
            let entries =
                with_jobs(jobs, || enumerate_table_with(order, exhaustive, &cfg, progress))?.map_err(search_error)?;
            if let Some(e) = entries.iter().find(|e| exhaustive && !e.confirmed) {
                eprintln!("unconfirmed: {} ({})", e.triple, e.provenance);
            }
            emit(&format_table(&entries));
            Ok(OK)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
