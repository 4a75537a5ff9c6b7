//! Parallel, seed-deterministic experiment runner.
//!
//! Trial `i` uses seed `trial_seed(master, i)` no matter which worker runs
//! it, and results are collected in trial order, so outputs do not depend on
//! the number of jobs.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use pathramsey_core::components::{colour_with, dr_trial, summarize, trial_seed, Summary};
use pathramsey_core::exponents::pairing_simple_probability;
use pathramsey_core::generators::{gen_pairing, gen_regular_simple, generate};
use pathramsey_core::path::longest_path_lower;
use pathramsey_core::rng::{derive_seed, rng_from_seed};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{ExperimentConfig, ExperimentKind, ModelName};

/// Pairing draws allowed per trial when a simple regular graph is needed.
const MAX_PAIRINGS: u64 = 100_000;

#[derive(Debug, Clone, PartialEq)]
pub struct TrialRows {
    pub trial: u64,
    pub seed: u64,
    /// Vertex count of the sampled graph.
    pub order: usize,
    /// One value per colour (or a single value).
    pub values: Vec<usize>,
    pub score: f64,
}

#[derive(Debug, Clone)]
pub struct ExperimentOutput {
    pub csv: String,
    pub summary: Value,
}

fn run_trial(cfg: &ExperimentConfig, trial: u64) -> Result<TrialRows> {
    let seed = trial_seed(cfg.seed, trial);
    match cfg.experiment {
        ExperimentKind::Components => {
            let t = dr_trial(
                cfg.n,
                cfg.p.unwrap_or(0.0),
                cfg.r,
                cfg.strategy,
                trial,
                seed,
            )?;
            Ok(TrialRows {
                trial,
                seed,
                order: cfg.n,
                values: t.per_colour,
                score: t.ratio,
            })
        }
        ExperimentKind::MonoPath => {
            let spec = cfg.spec(seed);
            let g = match cfg.model {
                ModelName::Pairing => gen_regular_simple(&spec, MAX_PAIRINGS)?,
                _ => generate(&spec)?,
            };
            let mut rng = rng_from_seed(derive_seed(seed, 1));
            let col = colour_with(&g, cfg.r, cfg.strategy, &mut rng)?;
            let values = (0..cfg.r)
                .map(|c| Ok(longest_path_lower(&col.class(&g, c)?)?.order()))
                .collect::<Result<Vec<_>>>()?;
            let best = values.iter().copied().max().unwrap_or(0);
            Ok(TrialRows {
                trial,
                seed,
                order: g.n(),
                values,
                score: best as f64 / (g.n().max(1) as f64),
            })
        }
        ExperimentKind::SimpleFraction => {
            let g = gen_pairing(&cfg.spec(seed))?;
            let simple = usize::from(g.is_simple());
            Ok(TrialRows {
                trial,
                seed,
                order: g.n(),
                values: vec![simple],
                score: simple as f64,
            })
        }
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .context("building worker pool")
}

/// Runs all trials on `jobs` workers (0 = one per core).
pub fn run_trials(cfg: &ExperimentConfig, jobs: usize) -> Result<Vec<TrialRows>> {
    pool(jobs)?.install(|| {
        (0..cfg.trials)
            .into_par_iter()
            .map(|i| run_trial(cfg, i))
            .collect()
    })
}

fn csv_for(cfg: &ExperimentConfig, rows: &[TrialRows]) -> String {
    let mut out = String::new();
    match cfg.experiment {
        ExperimentKind::Components => out.push_str("trial,seed,colour,comp_size,ratio\n"),
        ExperimentKind::MonoPath => out.push_str("trial,seed,colour,path_order,ratio\n"),
        ExperimentKind::SimpleFraction => out.push_str("trial,seed,simple\n"),
    }
    for row in rows {
        match cfg.experiment {
            ExperimentKind::SimpleFraction => {
                let _ = writeln!(out, "{},{},{}", row.trial, row.seed, row.values[0]);
            }
            _ => {
                let n = row.order.max(1) as f64;
                for (c, &v) in row.values.iter().enumerate() {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{:.6}",
                        row.trial,
                        row.seed,
                        c,
                        v,
                        v as f64 / n
                    );
                }
            }
        }
    }
    out
}

fn summary_json(s: &Summary) -> Value {
    serde_json::to_value(s).expect("plain data")
}

fn summary_for(cfg: &ExperimentConfig, rows: &[TrialRows]) -> Value {
    let scores: Vec<f64> = rows.iter().map(|r| r.score).collect();
    let stats = summarize(&scores)
        .map(|s| summary_json(&s))
        .unwrap_or(Value::Null);
    let extra = match cfg.experiment {
        ExperimentKind::Components => {
            let target = if cfg.r >= 2 {
                1.0 / (cfg.r - 1) as f64
            } else {
                1.0
            };
            json!({ "statistic": "max monochromatic component / n", "reference_1_over_r_minus_1": target })
        }
        ExperimentKind::MonoPath => {
            json!({ "statistic": "max monochromatic path order (greedy lower bound) / n" })
        }
        ExperimentKind::SimpleFraction => {
            let trials = rows.len() as f64;
            let frac = scores.iter().sum::<f64>() / trials;
            let d = cfg.d.unwrap_or(0) as f64;
            json!({
                "statistic": "fraction of simple pairings",
                "fraction": frac,
                "standard_error": (frac * (1.0 - frac) / trials).sqrt(),
                "limit_exp_minus_d2_minus_1_over_4": pairing_simple_probability(d),
            })
        }
    };
    json!({
        "config": cfg,
        "summary": stats,
        "notes": extra,
    })
}

pub fn run_experiment(cfg: &ExperimentConfig, jobs: usize) -> Result<ExperimentOutput> {
    let rows = run_trials(cfg, jobs)?;
    Ok(ExperimentOutput {
        csv: csv_for(cfg, &rows),
        summary: summary_for(cfg, &rows),
    })
}

/// Writes `<name>.csv` and `<name>.summary.json` into `dir`.
pub fn write_outputs(
    cfg: &ExperimentConfig,
    out: &ExperimentOutput,
    dir: &Path,
) -> Result<(PathBuf, PathBuf)> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let csv_path = dir.join(format!("{}.csv", cfg.name));
    let json_path = dir.join(format!("{}.summary.json", cfg.name));
    fs::write(&csv_path, &out.csv).with_context(|| format!("writing {}", csv_path.display()))?;
    let mut text = serde_json::to_string_pretty(&out.summary)?;
    text.push('\n');
    fs::write(&json_path, text).with_context(|| format!("writing {}", json_path.display()))?;
    Ok((csv_path, json_path))
}
