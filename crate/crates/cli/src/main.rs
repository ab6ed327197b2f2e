use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context as _;
use chessboard_cli::verify::{self, RunOptions, Status, Suite, CRITERIA};
use chessboard_cli::{guard, GUARD_LIMIT};
use chessboard_core::invariants::{
    betti_table_hochster, betti_table_koszul, invariant_report, ReportOptions,
};
use chessboard_core::ring::{parse_ideal, write_ideal};
use chessboard_core::{Board, FieldSpec, Fixture, MonomialIdeal, Subset, VariableSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "chessboard", version, about = "Facet ideals of chessboard complexes and their invariants")]
struct Cli {
    /// Worker threads for the homology kernels (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a board ideal in the plain-text ideal format.
    Ideal(Source),
    /// List the minimal primes of F(m,n).
    Primes {
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Print the JSON invariant report of a board ideal.
    Invariants {
        #[command(flatten)]
        source: Source,
        /// Field characteristic.
        #[arg(long = "char", default_value_t = 32003)]
        characteristic: u32,
        /// Number of ambient variables (default: the board size).
        #[arg(long)]
        ambient: Option<usize>,
        /// Run even when the predicted work exceeds the guard.
        #[arg(long)]
        allow_long: bool,
    },
    /// Graded Betti table of an ideal file.
    Betti {
        /// Ideal file; `-` reads standard input.
        file: Option<PathBuf>,
        /// Use a named fixture instead of a file.
        #[arg(long, conflicts_with = "file")]
        fixture: Option<Fixture>,
        /// Board width for the fixture.
        #[arg(long, requires = "fixture")]
        n: Option<usize>,
        #[arg(long = "char", default_value_t = 32003)]
        characteristic: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        allow_long: bool,
    },
    /// Search for an induced matching in the chessboard complex.
    Matching {
        #[command(flatten)]
        board: BoardArgs,
        /// Largest matching size tried.
        #[arg(long, default_value_t = 3)]
        k_max: usize,
    },
    /// Run the reproduction catalog.
    Verify {
        #[arg(long, value_enum, default_value = "paper")]
        suite: Suite,
        /// Run long cases even when over the guard.
        #[arg(long)]
        allow_long: bool,
        /// Emit the cases as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Clone, Copy)]
struct BoardArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct Source {
    #[arg(long, required_unless_present = "fixture")]
    m: Option<usize>,
    #[arg(long, required_unless_present_all = ["fixture"])]
    n: Option<usize>,
    /// Power of the ideal, 1 to 4.
    #[arg(long, default_value_t = 1)]
    power: u32,
    #[arg(long, value_enum, default_value = "facet")]
    kind: Kind,
    /// A named fixture; `--n` is its board width.
    #[arg(long, conflicts_with_all = ["m", "kind"])]
    fixture: Option<Fixture>,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Kind {
    Facet,
    StanleyReisner,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Method {
    Formula,
    Brute,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Reasons to stop, each with its exit code.
enum Failure {
    Usage(String),
    Verification(String),
    Guard(u128),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

impl From<chessboard_core::Error> for Failure {
    fn from(e: chessboard_core::Error) -> Self {
        Failure::Other(e.into())
    }
}

type Outcome = Result<(), Failure>;

const MAX_SIDE: usize = 6;
const MAX_POWER: u32 = 4;

fn check_board(b: BoardArgs) -> Result<Board, Failure> {
    if !(1 <= b.m && b.m <= b.n && b.n <= MAX_SIDE) {
        return Err(Failure::Usage(format!(
            "board {}x{} out of range: need 1 <= m <= n <= {MAX_SIDE}",
            b.m, b.n
        )));
    }
    Ok(Board::new(b.m, b.n)?)
}

/// The ideal named by `source`, with JSON describing where it came from.
fn build(source: &Source) -> Result<(MonomialIdeal, serde_json::Value), Failure> {
    if !(1..=MAX_POWER).contains(&source.power) {
        return Err(Failure::Usage(format!("power {} out of range 1..={MAX_POWER}", source.power)));
    }
    let (base, origin) = match source.fixture {
        Some(fx) => {
            let n = source.n.unwrap_or(fx.min_n());
            if fx != Fixture::LSix && !(fx.min_n()..=MAX_SIDE).contains(&n) {
                return Err(Failure::Usage(format!(
                    "fixture {} needs {} <= n <= {MAX_SIDE}",
                    fx.name(),
                    fx.min_n()
                )));
            }
            (fx.ideal(n)?, json!({ "fixture": fx.name(), "n": n }))
        }
        None => {
            let dims = BoardArgs { m: source.m.unwrap_or(0), n: source.n.unwrap_or(0) };
            let board = check_board(dims)?;
            let ideal = match source.kind {
                Kind::Facet => board.facet_ideal(),
                Kind::StanleyReisner => board.stanley_reisner_ideal(),
            };
            (ideal, json!({ "board": [dims.m, dims.n], "kind": source.kind }))
        }
    };
    let ideal = base.power(source.power)?;
    let mut origin = origin;
    origin["power"] = json!(source.power);
    Ok((ideal, origin))
}

fn field(p: u32) -> Result<FieldSpec, Failure> {
    FieldSpec::new(p).map_err(|e| Failure::Usage(e.to_string()))
}

fn print_json(value: &impl Serialize) -> Outcome {
    let text = serde_json::to_string_pretty(value).context("serializing JSON")?;
    emit(&text);
    Ok(())
}

/// Writes to standard output; a closed pipe ends the process quietly.
fn emit_raw(text: &str) {
    use std::io::Write as _;
    if std::io::stdout().lock().write_all(text.as_bytes()).is_err() {
        std::process::exit(0);
    }
}

fn emit(line: &str) {
    emit_raw(&format!("{line}\n"));
}

fn labels(vars: &VariableSet, set: Subset) -> Vec<String> {
    set.iter().map(|v| vars.label(v).to_string()).collect()
}

fn cmd_primes(b: BoardArgs, method: Method) -> Outcome {
    let board = check_board(b)?;
    let formula = || board.minimal_primes_formula();
    let brute = || board.facet_ideal().minimal_primes();
    let primes = match method {
        Method::Formula => formula(),
        Method::Brute => brute()?,
        Method::Both => {
            let (f, c) = (formula(), brute()?);
            if f != c {
                return Err(Failure::Verification(format!(
                    "formula gives {} primes, cover enumeration gives {}",
                    f.len(),
                    c.len()
                )));
            }
            f
        }
    };
    for p in &primes {
        emit(&labels(board.vars(), *p).join(" "));
    }
    emit(&format!("count {}", primes.len()));
    Ok(())
}

fn cmd_invariants(source: &Source, p: u32, ambient: Option<usize>, allow_long: bool) -> Outcome {
    let f = field(p)?;
    let (ideal, origin) = build(source)?;
    let work = guard(&ideal, allow_long).map_err(Failure::Guard)?;
    let ambient = ambient.unwrap_or(ideal.nvars());
    let report = invariant_report(&ideal, ambient, f, ReportOptions { cross_check: true })?;
    let mut out = origin;
    out["predicted_work"] = json!(work.to_string());
    out["report"] = serde_json::to_value(&report).context("serializing report")?;
    print_json(&out)
}

fn read_ideal(path: &PathBuf) -> Result<MonomialIdeal, Failure> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_ideal(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn cmd_betti(
    file: Option<PathBuf>,
    fixture: Option<Fixture>,
    n: Option<usize>,
    p: u32,
    format: Format,
    allow_long: bool,
) -> Outcome {
    let f = field(p)?;
    let ideal = match (file, fixture) {
        (Some(path), _) => read_ideal(&path)?,
        (None, Some(fx)) => fx.ideal(n.unwrap_or(fx.min_n()))?,
        (None, None) => return Err(Failure::Usage("give an ideal file or --fixture".into())),
    };
    guard(&ideal, allow_long).map_err(Failure::Guard)?;
    let table = betti_table_koszul(&ideal, f)?;
    let hochster = if ideal.is_squarefree() && ideal.support().len() <= 40 {
        let h = betti_table_hochster(&ideal, f)?;
        if h != table {
            return Err(Failure::Verification(
                "Hochster and lcm-lattice tables disagree".into(),
            ));
        }
        Some(true)
    } else {
        None
    };
    match format {
        Format::Text => {
            emit_raw(&table.render());
            if let Some(r) = table.reg() {
                emit(&format!("reg {r}"));
            }
            if hochster.is_some() {
                emit("hochster cross-check: agrees");
            }
            Ok(())
        }
        Format::Json => print_json(&json!({
            "table": table,
            "hochster_agrees": hochster,
        })),
    }
}

fn cmd_matching(b: BoardArgs, k_max: usize) -> Outcome {
    let board = check_board(b)?;
    let cx = board.chessboard_complex();
    let found = cx.induced_matching_bound(k_max)?;
    let witness: Vec<Vec<String>> = found.witness.iter().map(|f| labels(board.vars(), *f)).collect();
    print_json(&json!({
        "board": [b.m, b.n],
        "k_max": k_max,
        "value": found.value,
        "witness": witness,
    }))
}

fn cmd_verify(suite: Suite, allow_long: bool, as_json: bool) -> Outcome {
    let options = RunOptions { long_budget: (!allow_long).then_some(GUARD_LIMIT) };
    let cases = verify::run_suite(suite, options);
    if as_json {
        print_json(&cases)?;
    } else {
        for c in &cases {
            emit(&verify::format_case(c));
        }
        emit("");
        for k in CRITERIA {
            let mine: Vec<_> = cases.iter().filter(|c| c.criterion == k.number).collect();
            if mine.is_empty() {
                continue;
            }
            let failed = mine.iter().filter(|c| c.status == Status::Fail).count();
            let skipped = mine.iter().filter(|c| c.status == Status::SkippedLong).count();
            let ms: u64 = mine.iter().map(|c| c.runtime_ms).sum();
            let label = if failed > 0 {
                "FAIL"
            } else if skipped == mine.len() {
                "SKIPPED-LONG"
            } else {
                "PASS"
            };
            emit(&format!(
                "{label} criterion {:>2}: {} ({} cases, {failed} failed, {skipped} skipped, {ms} ms)",
                k.number,
                k.title,
                mine.len()
            ));
        }
    }
    let failed = cases.iter().filter(|c| c.status == Status::Fail).count();
    if failed > 0 {
        return Err(Failure::Verification(format!("{failed} case(s) failed")));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Ideal(source) => {
            let (ideal, _) = build(&source)?;
            emit_raw(&write_ideal(&ideal));
            Ok(())
        }
        Command::Primes { board, method } => cmd_primes(board, method),
        Command::Invariants { source, characteristic, ambient, allow_long } => {
            cmd_invariants(&source, characteristic, ambient, allow_long)
        }
        Command::Betti { file, fixture, n, characteristic, format, allow_long } => {
            cmd_betti(file, fixture, n, characteristic, format, allow_long)
        }
        Command::Matching { board, k_max } => cmd_matching(board, k_max),
        Command::Verify { suite, allow_long, json } => cmd_verify(suite, allow_long, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(work)) => {
            eprintln!(
                "error: predicted work {work} exceeds the limit {GUARD_LIMIT}; pass --allow-long to run anyway"
            );
            ExitCode::from(3)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
