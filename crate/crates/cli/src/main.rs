use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use pmc_core::bnc::{CutSelection, SolveConfig, SolveStatus};
use pmc_core::instance::{gen_bipartite, gen_erdos_renyi, parse_instance, write_instance, Instance, TimeInterval};
use pmc_core::model::{build_af, build_rf, Formulation};
use pmc_core::graph::{distance_ordering, greedy_maximal_clique};
use pmc_core::oracle::brute_force_makespan;

mod bench;

const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Bad parameters exit with [`EXIT_USAGE`], everything else with 1.
enum Failure {
    Usage(String),
    Other(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Other(s)
    }
}

#[derive(Parser)]
#[command(name = "pmc", version, about = "Exact scheduling of conflicting jobs on identical machines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance file.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        /// Print the report as a CSV record (with header) instead of text.
        #[arg(long)]
        csv: bool,
    },
    /// Write random instance files.
    #[command(subcommand)]
    Generate(Generate),
    /// Solve every instance of a directory under one or more configurations.
    Bench(bench::BenchArgs),
    /// Optimal makespan by exhaustive search (small instances only).
    Oracle { file: PathBuf },
    /// Write the MILP of an instance in MPS format.
    Export {
        file: PathBuf,
        #[arg(long, default_value = "rf")]
        formulation: Formulation,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// Erdős–Rényi conflict graphs.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: f64,
        /// a = [1,10], b = [1,50], c = [1,100], or LO-HI.
        #[arg(long, default_value = "a")]
        interval: TimeInterval,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Random bipartite conflict graphs with one time per side.
    Bip {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: f64,
        #[arg(long)]
        m: usize,
        #[arg(long = "pa", default_value_t = 1)]
        time_a: u64,
        #[arg(long = "pb", default_value_t = 1)]
        time_b: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

#[derive(Args, Clone, Debug)]
pub struct SolverArgs {
    #[arg(long, default_value = "rf")]
    pub formulation: Formulation,
    #[arg(long, default_value = "clique")]
    pub cuts: CutSelection,
    /// Separate at the root only (pass `--root-only false` to cut at every node).
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub root_only: bool,
    #[arg(long, default_value_t = 0.3)]
    pub density_threshold: f64,
    /// Seconds.
    #[arg(long, default_value_t = 840.0)]
    pub time_limit: f64,
    /// Seconds.
    #[arg(long, default_value_t = 5.0)]
    pub heuristic_budget: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub node_limit: Option<u64>,
}

impl SolverArgs {
    pub fn config(&self) -> Result<SolveConfig, String> {
        let secs = |name: &str, v: f64| {
            Duration::try_from_secs_f64(v).map_err(|_| format!("--{name} must be a nonnegative number of seconds"))
        };
        if !(0.0..=1.0).contains(&self.density_threshold) {
            return Err("--density-threshold must lie in [0, 1]".into());
        }
        Ok(SolveConfig {
            formulation: self.formulation,
            cuts: self.cuts,
            root_only: self.root_only,
            density_threshold: self.density_threshold,
            time_limit: secs("time-limit", self.time_limit)?,
            heuristic_budget: secs("heuristic-budget", self.heuristic_budget)?,
            seed: self.seed,
            node_limit: self.node_limit,
            ..SolveConfig::default()
        })
    }
}

pub fn read_instance(path: &Path) -> Result<Instance, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut inst = parse_instance(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if inst.name.is_empty() {
        inst.name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    }
    Ok(inst)
}

fn init_logging() {
    let level = match std::env::var("PMC_LOG").as_deref() {
        Ok("quiet") => "off",
        Ok("info") => "info",
        Ok("debug") => "debug",
        _ => "warn",
    };
    let _ = env_logger::Builder::new().parse_filters(level).format_timestamp(None).try_init();
}

fn write_files(out: &Path, files: Vec<(String, Instance)>) -> Result<(), String> {
    fs::create_dir_all(out).map_err(|e| format!("{}: {e}", out.display()))?;
    for (name, inst) in files {
        let path = out.join(&name);
        fs::write(&path, write_instance(&inst)).map_err(|e| format!("{}: {e}", path.display()))?;
        println!("{}", path.display());
    }
    Ok(())
}

fn generate(cmd: Generate) -> Result<(), Failure> {
    match cmd {
        Generate::Gnp {
            n,
            d,
            interval,
            m,
            count,
            seed,
            out,
        } => {
            let mut files = Vec::new();
            for j in 1..=count {
                let mut inst = gen_erdos_renyi(n, d, interval, m, seed.wrapping_add(j as u64)).map_err(|e| Failure::Usage(e.to_string()))?;
                inst.name = format!("rand_{n}_{d}_{interval}_{j}");
                files.push((inst.name.clone(), inst));
            }
            Ok(write_files(&out, files)?)
        }
        Generate::Bip {
            n,
            d,
            m,
            time_a,
            time_b,
            count,
            seed,
            out,
        } => {
            let mut files = Vec::new();
            for j in 1..=count {
                let mut inst =
                    gen_bipartite(n, d, m, time_a, time_b, seed.wrapping_add(j as u64)).map_err(|e| Failure::Usage(e.to_string()))?;
                inst.name = format!("bip_{n}_{d}_{j}");
                files.push((inst.name.clone(), inst));
            }
            Ok(write_files(&out, files)?)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Solve { file, solver, csv } => {
            let config = solver.config().map_err(Failure::Usage)?;
            let inst = read_instance(&file)?;
            let report = pmc_core::solve(&inst, &config).map_err(|e| e.to_string())?;
            if csv {
                let mut w = csv::Writer::from_writer(std::io::stdout());
                w.write_record(pmc_core::bnc::CSV_HEADER).map_err(|e| e.to_string())?;
                w.write_record(report.csv_record()).map_err(|e| e.to_string())?;
                w.flush().map_err(|e| e.to_string())?;
            } else {
                print!("{}", report.to_text());
            }
            Ok(if report.status == SolveStatus::Unknown {
                ExitCode::from(EXIT_UNKNOWN)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Generate(cmd) => generate(cmd).map(|_| ExitCode::SUCCESS),
        Command::Bench(args) => {
            let config = args.solver.config().map_err(Failure::Usage)?;
            bench::run(&args, config)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { file } => {
            let inst = read_instance(&file)?;
            match brute_force_makespan(&inst).map_err(|e| e.to_string())? {
                Some(v) => println!("optimal {v}"),
                None => println!("infeasible"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Export {
            file,
            formulation,
            seed,
            output,
        } => {
            let inst = read_instance(&file)?;
            let model = match formulation {
                Formulation::Af => build_af(&inst),
                Formulation::Rf => {
                    let g = inst.graph();
                    build_rf(&inst, &distance_ordering(g, &greedy_maximal_clique(g, seed))).map_err(|e| e.to_string())?
                }
            };
            let text = model.to_mps(&inst.name);
            match output {
                Some(path) => fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    init_logging();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
