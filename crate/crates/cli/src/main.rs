use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use log::info;

use lkv_core::algebra::DeltaMode;
use lkv_core::bk::bk_table;
use lkv_core::bounds::{
    lower_bound_report, parse_seed_file, results_csv, results_json, results_pretty, run_table, upper_bound_report,
    BoundConfig, CheckpointConfig, SeedElement, TableMeta, TableRequest, DEFAULT_CHECKPOINT_ROWS,
};
use lkv_core::lie::{dim_f2, dim_sder};
use lkv_core::modmat::{validate_prime, DEFAULT_PRIME};
use lkv_core::selftest::run_selftest;
use lkv_core::words::count_cyclic_words;

#[derive(Parser, Debug)]
#[command(name = "lkv", version, about = "Bigraded dimensions of the linearized Kashiwara-Vergne Lie algebra")]
struct Cli {
    /// Prime for the modular rank computations.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u64,

    /// Seed for the fold multipliers.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "LKV_THREADS")]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Mode::Strip1)]
    delta_mode: Mode,

    /// First Lyndon length of the generating pairs (default: floor((W+1)/2)).
    #[arg(long, global = true)]
    w1: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Extra lower-bound generators, one `name weight depth (coeff word)*` record per line.
    #[arg(long, global = true)]
    seeds: Option<PathBuf>,

    /// Directory for fold checkpoints of the upper-bound matrices.
    #[arg(long, global = true)]
    checkpoint: Option<PathBuf>,

    #[arg(long, global = true)]
    max_weight: Option<usize>,

    #[arg(long, global = true)]
    max_depth: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Strip1,
    Strip2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DimKind {
    F2,
    Sder,
    Cyclic,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension formulas: f2 W [D], sder W D, cyclic LEN YCOUNT.
    Dims { kind: DimKind, w: usize, d: Option<usize> },
    /// Broadhurst-Kreimer numbers up to --max-weight (default 30).
    BkTable,
    /// Upper bound for dim lkv in weight W, depth D.
    Upper { w: usize, d: usize },
    /// Lower bound from Lie monomials in the sigma-bar generators and --seeds.
    Lower { w: usize, d: usize },
    /// Both bounds for every cell up to --max-weight (default 11) and --max-depth.
    Table,
    /// Oracle-backed consistency suites and the reference table up to --max-weight (default 11).
    Selftest,
}

impl Cli {
    fn bound_config(&self) -> BoundConfig {
        BoundConfig {
            prime: self.prime,
            seed: self.seed,
            w1: self.w1,
            delta_mode: match self.delta_mode {
                Mode::Strip1 => DeltaMode::Strip1,
                Mode::Strip2 => DeltaMode::Strip2,
            },
            checkpoint: self.checkpoint.clone().map(|dir| CheckpointConfig { dir, every_rows: DEFAULT_CHECKPOINT_ROWS }),
        }
    }

    fn load_seeds(&self, w_max: usize) -> Result<Vec<SeedElement>> {
        let Some(path) = &self.seeds else { return Ok(Vec::new()) };
        let m = validate_prime(self.prime, w_max)?;
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        parse_seed_file(&text, m).with_context(|| format!("parsing {}", path.display()))
    }
}

fn print_json<T: serde::Serialize>(v: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<bool> {
    let cfg = cli.bound_config();
    if let Some(dir) = &cfg.checkpoint {
        std::fs::create_dir_all(&dir.dir).with_context(|| format!("creating {}", dir.dir.display()))?;
    }
    match &cli.command {
        Command::Dims { kind, w, d } => {
            let value = match (kind, d) {
                (DimKind::F2, d) => dim_f2(*w, *d)?,
                (DimKind::Sder, Some(d)) => dim_sder(*w, *d)?,
                (DimKind::Cyclic, Some(d)) => count_cyclic_words(*w, *d)?,
                (_, None) => bail!("this dimension needs both W and D"),
            };
            println!("{value}");
        }
        Command::BkTable => {
            let table = bk_table(cli.max_weight.unwrap_or(30))?;
            println!("W,D,BK");
            for ((w, d), v) in table {
                if cli.max_depth.is_none_or(|m| d <= m) {
                    println!("{w},{d},{v}");
                }
            }
        }
        Command::Upper { w, d } => {
            let start = Instant::now();
            let report = upper_bound_report(*w, *d, &cfg)?;
            info!("upper ({w},{d}) took {:.3}s", start.elapsed().as_secs_f64());
            match cli.format {
                Format::Json => print_json(&serde_json::json!({ "config": cfg, "result": report }))?,
                _ => println!("{}", report.lkv),
            }
        }
        Command::Lower { w, d } => {
            let extra = cli.load_seeds(*w)?;
            let start = Instant::now();
            let report = lower_bound_report(*w, *d, &extra, &cfg)?;
            info!("lower ({w},{d}) took {:.3}s", start.elapsed().as_secs_f64());
            match cli.format {
                Format::Json => print_json(&serde_json::json!({ "config": cfg, "result": report }))?,
                _ => println!("{}", report.rank),
            }
        }
        Command::Table => {
            let max_weight = cli.max_weight.unwrap_or(11);
            let extra = cli.load_seeds(max_weight)?;
            let req = TableRequest { max_weight, min_weight: 1, max_depth: cli.max_depth, with_lower: true };
            let start = Instant::now();
            let results = run_table(&req, &extra, &cfg)?;
            info!("table up to weight {max_weight} took {:.3}s", start.elapsed().as_secs_f64());
            let meta = TableMeta {
                prime: cfg.prime,
                seed: cfg.seed,
                w1: cfg.w1,
                delta_mode: cfg.delta_mode,
                max_weight,
                max_depth: cli.max_depth,
                with_lower: true,
                extra_seeds: extra.iter().map(|s| s.name.clone()).collect(),
            };
            let rendered = match cli.format {
                Format::Csv => results_csv(&results),
                Format::Json => results_json(&meta, &results),
                Format::Table => results_pretty(&results),
            };
            print!("{rendered}");
        }
        Command::Selftest => {
            let report = run_selftest(&cfg, cli.max_weight.unwrap_or(11))?;
            match cli.format {
                Format::Json => print_json(&report)?,
                _ => print!("{}", report.render()),
            }
            return Ok(report.all_passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} worker threads: {e}");
            return ExitCode::FAILURE;
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
