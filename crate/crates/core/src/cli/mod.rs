//! `cegis-lab run|demo|table`.

pub mod config;
pub mod log;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::engines::{run_engine, RunSettings};
use crate::error::{Error, Result};
use crate::harness::{
    convergence_verdict, default_budget, default_window, demo_gold, demo_lemma1, demo_lemma2,
    demo_rectangle, demo_theorem1, Lemma2Config, SeparationReport, Status, Theorem1Config,
};
use crate::trace::trace_generate;

pub use config::RunConfig;
pub use log::{IterationRecordLine, RunSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_STALLED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
/// Converged to a program that differs from the target.
pub const EXIT_MISMATCH: i32 = 4;
/// A demo ran but its expected conclusion did not hold.
pub const EXIT_DEMO_FAILED: i32 = 2;

/// Default output directory when neither `--out` nor the config sets one.
pub const LOG_DIR_ENV: &str = "CEGIS_LAB_LOG_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "cegis-lab",
    version,
    about = "Counterexample-guided synthesis experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one engine on one target.
    Run(Box<RunArgs>),
    /// Run one of the shipped demonstrations.
    Demo(DemoArgs),
    /// Render a JSON Lines file as a Markdown table.
    Table { log: PathBuf },
}

#[derive(Debug, Args)]
struct RunArgs {
    /// TOML file with run settings; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    target: Option<String>,
    #[arg(long)]
    engine: Option<String>,
    #[arg(long)]
    generalizer: Option<String>,
    #[arg(long)]
    strategy: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated codes for the consistent-avoiding strategy.
    #[arg(long, value_delimiter = ',')]
    avoid: Option<Vec<u64>>,
    #[arg(long)]
    schedule: Option<String>,
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    universe_bound: Option<u64>,
    #[arg(long)]
    grid: Option<i64>,
    #[arg(long)]
    window: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DemoName {
    Theorem1,
    Lemma1,
    Lemma2,
    Rectangle,
    Gold,
}

#[derive(Debug, Args)]
struct DemoArgs {
    #[arg(value_enum)]
    name: DemoName,
    /// Largest chain index (lemma1).
    #[arg(long, default_value_t = 20)]
    imax: u64,
    /// Per-run budget; demo default when unset.
    #[arg(long)]
    budget: Option<usize>,
    /// Trace seeds (theorem1), comma-separated.
    #[arg(long, value_delimiter = ',')]
    seeds: Option<Vec<u64>>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command; returns the
/// process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let outcome = match cli.command {
        Command::Run(args) => args.into_config().and_then(|c| cmd_run(&c)),
        Command::Demo(args) => cmd_demo(&args),
        Command::Table { log } => cmd_table(&log),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

impl RunArgs {
    fn into_config(self) -> Result<RunConfig> {
        let mut c = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        macro_rules! set {
            ($($field:ident),*) => {$(
                if let Some(v) = self.$field { c.$field = v; }
            )*};
        }
        macro_rules! set_opt {
            ($($field:ident),*) => {$(
                if self.$field.is_some() { c.$field = self.$field; }
            )*};
        }
        set!(family, target, engine, strategy, seed, avoid, schedule);
        set_opt!(generalizer, budget, universe_bound, grid, window, out);
        Ok(c)
    }
}

fn output_dir(explicit: Option<&Path>) -> PathBuf {
    explicit
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(LOG_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("cegis-lab-out"))
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| Error::Config(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    Ok(path)
}

/// Executes one configured run, writes `run.jsonl` and `summary.json`, and
/// maps the verdict to an exit code.
pub fn cmd_run(config: &RunConfig) -> Result<i32> {
    let family = config.family()?;
    let target = config.target_index(&family)?;
    let variant = config.engine()?;
    let generalizer = config.generalizer(&family)?;
    let strategy = config.strategy()?;
    let schedule = config.schedule()?;
    let budget = config.budget.unwrap_or_else(|| default_budget(&family));
    let window = config.window.unwrap_or_else(|| default_window(&family));

    let language = family.language(&target)?;
    let trace = trace_generate(&language, schedule, config.seed, budget)?;
    let settings = RunSettings::new(budget).with_strategy(strategy.clone());
    let run = run_engine(variant, &family, &language, &trace, &generalizer, &settings)?;
    let verdict = convergence_verdict(&run, &language, window)?;

    let summary = RunSummary::new(&run, &target.to_string(), &strategy.to_string(), &verdict);
    let dir = output_dir(config.out.as_deref());
    let log_path = write_file(&dir, "run.jsonl", &log::run_jsonl(&run))?;
    let summary_json = serde_json::to_string_pretty(&summary).expect("summaries serialize");
    write_file(&dir, "summary.json", &(summary_json.clone() + "\n"))?;
    println!("{summary_json}");
    eprintln!("log: {}", log_path.display());

    Ok(match verdict.status {
        Status::Converged(_) if verdict.semantic_match => EXIT_OK,
        Status::Converged(_) => EXIT_MISMATCH,
        Status::Stalled => EXIT_STALLED,
        Status::BudgetExhausted => EXIT_BUDGET,
    })
}

fn run_demo(args: &DemoArgs) -> Result<SeparationReport> {
    match args.name {
        DemoName::Theorem1 => {
            let mut config = Theorem1Config::default();
            if let Some(seeds) = &args.seeds {
                config.seeds = seeds.clone();
            }
            if let Some(b) = args.budget {
                config.chain_budget = Some(b);
                config.rect_budget = b;
            }
            demo_theorem1(&config)
        }
        DemoName::Lemma1 => demo_lemma1(args.imax, args.budget),
        DemoName::Lemma2 => demo_lemma2(&Lemma2Config {
            budget: args.budget,
            ..Lemma2Config::default()
        }),
        DemoName::Rectangle => demo_rectangle(args.budget),
        DemoName::Gold => demo_gold(args.budget),
    }
}

/// Runs a demo and writes `<name>.md`, `<name>.json` and `<name>.jsonl`.
fn cmd_demo(args: &DemoArgs) -> Result<i32> {
    let report = run_demo(args)?;
    let dir = output_dir(args.out.as_deref());
    let md = report.to_markdown();
    write_file(&dir, &format!("{}.md", report.demo), &md)?;
    write_file(
        &dir,
        &format!("{}.json", report.demo),
        &(report.to_json() + "\n"),
    )?;
    write_file(&dir, &format!("{}.jsonl", report.demo), &report.to_jsonl())?;
    print!("{md}");
    Ok(if report.passed {
        EXIT_OK
    } else {
        EXIT_DEMO_FAILED
    })
}

fn cmd_table(path: &Path) -> Result<i32> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
    print!("{}", jsonl_table(&text)?);
    Ok(EXIT_OK)
}

/// Markdown table of JSON Lines objects; columns are the keys in order of
/// first appearance.
pub fn jsonl_table(text: &str) -> Result<String> {
    let mut columns: Vec<String> = Vec::new();
    let mut rows = Vec::new();
    for (k, line) in text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
    {
        let value: serde_json::Value = serde_json::from_str(line)
            .map_err(|e| Error::Config(format!("line {}: {e}", k + 1)))?;
        let serde_json::Value::Object(map) = value else {
            return Err(Error::Config(format!("line {}: not a JSON object", k + 1)));
        };
        for key in map.keys() {
            if !columns.contains(key) {
                columns.push(key.clone());
            }
        }
        rows.push(map);
    }
    let mut out = format!("| {} |\n", columns.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(columns.len())));
    for row in rows {
        let cells: Vec<String> = columns
            .iter()
            .map(|c| match row.get(c) {
                None | Some(serde_json::Value::Null) => String::new(),
                Some(serde_json::Value::String(s)) => s.replace('|', "\\|"),
                Some(v) => v.to_string(),
            })
            .collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    Ok(out)
}
