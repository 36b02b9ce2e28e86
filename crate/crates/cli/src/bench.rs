//! Batch runs over a directory of instance files.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use log::{info, warn};
use rayon::prelude::*;

use pmc_core::bnc::{CutSelection, SolveConfig, SolveReport, SolveStatus, CSV_HEADER};
use pmc_core::model::Formulation;

use crate::{read_instance, SolverArgs};

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Directory of instance files (searched non-recursively).
    pub dir: PathBuf,
    /// Configurations as FORMULATION:CUTS, e.g. `rf:clique`; repeatable.
    #[arg(long = "config", value_parser = parse_pair)]
    pub configs: Vec<(Formulation, CutSelection)>,
    /// CSV destination; stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Concurrent solves.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub solver: SolverArgs,
}

fn parse_pair(s: &str) -> Result<(Formulation, CutSelection), String> {
    let (f, c) = s.split_once(':').ok_or_else(|| format!("expected FORMULATION:CUTS, got `{s}`"))?;
    Ok((f.parse()?, c.parse()?))
}

enum Row {
    Solved(Box<SolveReport>),
    Unreadable { file: String, formulation: Formulation, cuts: CutSelection, seed: u64 },
}

fn unsolved(r: &SolveReport) -> bool {
    !matches!(r.status, SolveStatus::Optimal | SolveStatus::Infeasible)
}

/// Density group of an instance: the second field of a generated name
/// (`rand_<n>_<d>_...`), else the graph's density to two decimals.
fn density_key(r: &SolveReport, fallback: f64) -> String {
    let fields: Vec<&str> = r.instance.split('_').collect();
    match fields.get(2).filter(|_| fields.len() >= 4) {
        Some(d) if d.parse::<f64>().is_ok() => d.to_string(),
        _ => format!("{fallback:.2}"),
    }
}

/// Unsolved runs, all runs, gaps of unsolved runs with a schedule.
type Tally = (usize, usize, Vec<f64>);

/// Per (config, density): unsolved count and mean gap over unsolved runs
/// that found a schedule.
fn summary(reports: &[(SolveReport, f64)]) -> Vec<Vec<String>> {
    let mut groups: BTreeMap<(String, String, String), Tally> = BTreeMap::new();
    for (r, density) in reports {
        let key = (r.formulation.to_string(), r.cuts.to_string(), density_key(r, *density));
        let e = groups.entry(key).or_default();
        e.1 += 1;
        if unsolved(r) {
            e.0 += 1;
            if let Some(g) = r.gap_pct() {
                e.2.push(g);
            }
        }
    }
    groups
        .into_iter()
        .map(|((f, c, d), (open, total, gaps))| {
            let mean = if gaps.is_empty() {
                String::new()
            } else {
                format!("{:.4}", gaps.iter().sum::<f64>() / gaps.len() as f64)
            };
            vec![
                format!("summary d={d}"),
                f,
                c,
                format!("unsolved={open}/{total}"),
                String::new(),
                String::new(),
                mean,
                String::new(),
                String::new(),
                String::new(),
                String::new(),
            ]
        })
        .collect()
}

fn instance_files(dir: &Path) -> Result<Vec<PathBuf>, String> {
    let entries = fs::read_dir(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    Ok(files)
}

pub fn run(args: &BenchArgs, base: SolveConfig) -> Result<(), String> {
    let configs = if args.configs.is_empty() {
        vec![(base.formulation, base.cuts)]
    } else {
        args.configs.clone()
    };
    let files = instance_files(&args.dir)?;
    let tasks: Vec<(usize, &PathBuf)> = (0..configs.len()).flat_map(|c| files.iter().map(move |f| (c, f))).collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| e.to_string())?;
    let rows: Vec<(Row, f64)> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(c, path)| {
                let (formulation, cuts) = configs[c];
                let config = SolveConfig {
                    formulation,
                    cuts,
                    ..base.clone()
                };
                let unreadable = || Row::Unreadable {
                    file: path.file_name().unwrap_or_default().to_string_lossy().into_owned(),
                    formulation,
                    cuts,
                    seed: config.seed,
                };
                match read_instance(path) {
                    Ok(inst) => match pmc_core::solve(&inst, &config) {
                        Ok(r) => {
                            info!("{} {formulation}:{cuts} {} in {:.2}s", r.instance, r.status, r.elapsed.as_secs_f64());
                            (Row::Solved(Box::new(r)), inst.graph().density())
                        }
                        Err(e) => {
                            warn!("{}: {e}", path.display());
                            (unreadable(), 0.0)
                        }
                    },
                    Err(e) => {
                        warn!("skipping {e}");
                        (unreadable(), 0.0)
                    }
                }
            })
            .collect()
    });

    let sink: Box<dyn std::io::Write> = match &args.output {
        Some(p) => Box::new(fs::File::create(p).map_err(|e| format!("{}: {e}", p.display()))?),
        None => Box::new(std::io::stdout()),
    };
    let mut w = csv::Writer::from_writer(sink);
    let err = |e: csv::Error| e.to_string();
    w.write_record(CSV_HEADER).map_err(err)?;
    let mut reports = Vec::new();
    for (row, density) in rows {
        match row {
            Row::Solved(r) => {
                w.write_record(r.csv_record()).map_err(err)?;
                reports.push((*r, density));
            }
            Row::Unreadable {
                file,
                formulation,
                cuts,
                seed,
            } => {
                let mut rec = vec![String::new(); CSV_HEADER.len()];
                rec[0] = file;
                rec[1] = formulation.to_string();
                rec[2] = cuts.to_string();
                rec[3] = "error".into();
                rec[10] = seed.to_string();
                w.write_record(rec).map_err(err)?;
            }
        }
    }
    for rec in summary(&reports) {
        w.write_record(rec).map_err(err)?;
    }
    w.flush().map_err(|e| e.to_string())
}
