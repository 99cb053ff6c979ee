use std::path::PathBuf;

use anyhow::bail;
use clap::{Args, Subcommand};
use serde::Serialize;

use comparability_core::analysis::{
    balls_into_bins, run_grid_experiment, run_ranked_experiment, Assertion, BallsConfig,
    BallsReport, GridExperimentConfig, GridReport, RankedExperimentConfig, RankedReport,
};
use comparability_core::rng::child_seed;
use comparability_core::{GridParams, RankVariant, RankedParams};

use super::gen::VariantArg;

#[derive(Subcommand)]
pub enum ExperimentKind {
    /// Throw balls into bins and record per-trial maximum loads
    Balls(BallsArgs),
    /// Sweep chain-grid instances over seeds
    Grid(GridArgs),
    /// Sweep expander-ranked instances over seeds
    Ranked(RankedArgs),
}

#[derive(Args)]
pub struct BallsArgs {
    #[arg(long)]
    bins: u64,
    #[arg(long)]
    balls: u64,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Master seed
    #[arg(long)]
    seed: u64,
    /// Report file; stdout summary either way
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct GridArgs {
    /// Cell sizes to sweep, comma separated
    #[arg(long, value_delimiter = ',')]
    a: Vec<usize>,
    /// Grid sides to sweep, comma separated
    #[arg(long, value_delimiter = ',')]
    b: Vec<usize>,
    /// Target vertex counts to sweep (sized by the construction formulas)
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Seeds per parameter point, derived from the master seed
    #[arg(long, default_value_t = 5)]
    seeds: usize,
    /// Master seed
    #[arg(long)]
    seed: u64,
    /// Assert that at least 90% of witnesses land in [a/20, a]
    #[arg(long)]
    assert_band: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct RankedArgs {
    /// Number of orders
    #[arg(long)]
    r: usize,
    #[arg(long, value_delimiter = ',')]
    b: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    a: Vec<usize>,
    /// Target vertex counts to sweep (require --epsilon)
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long, value_enum, default_value_t = VariantArg::Overlapping)]
    variant: VariantArg,
    /// Also run the other variant at every point
    #[arg(long)]
    both_variants: bool,
    #[arg(long, default_value_t = 5)]
    seeds: usize,
    /// Master seed
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
#[serde(tag = "experiment", rename_all = "lowercase")]
enum ExperimentOutput {
    Balls { report: BallsReport },
    Grid { reports: Vec<GridReport> },
    Ranked { report: RankedReport },
}

pub fn run(kind: ExperimentKind) -> anyhow::Result<u8> {
    let (output, assertions, out) = match kind {
        ExperimentKind::Balls(args) => {
            if args.bins < 1 || args.balls < 1 || args.trials < 1 {
                bail!("bins, balls, and trials must all be at least 1");
            }
            let report = balls_into_bins(&BallsConfig {
                bins: args.bins,
                balls: args.balls,
                trials: args.trials,
                seed: args.seed,
            });
            println!(
                "balls: bins={} balls={} trials={} max_load min/mean/max = {}/{:.3}/{}{}",
                args.bins,
                args.balls,
                args.trials,
                report.aggregate.min,
                report.aggregate.mean,
                report.aggregate.max,
                match report.predicted_max_load {
                    Some(p) => format!(" prediction={p:.3}"),
                    None => " (outside prediction regime)".to_string(),
                }
            );
            let assertions = report.assertions.clone();
            (ExperimentOutput::Balls { report }, assertions, args.out)
        }
        ExperimentKind::Grid(args) => {
            let seeds: Vec<u64> = (0..args.seeds as u64).map(|i| child_seed(args.seed, i)).collect();
            let mut points: Vec<(usize, usize)> = Vec::new();
            for &a in &args.a {
                for &b in &args.b {
                    points.push((a, b));
                }
            }
            for &n in &args.n {
                let p = GridParams::from_target_n(n, 0)?;
                points.push((p.cell_size, p.side));
            }
            if points.is_empty() {
                bail!("give --a and --b lists, or --n");
            }
            let mut reports = Vec::new();
            let mut assertions = Vec::new();
            for (a, b) in points {
                let mut config = GridExperimentConfig::new(a, b, seeds.clone());
                config.assert_witness_band = args.assert_band;
                let report = run_grid_experiment(&config)?;
                println!(
                    "grid a={a} b={b} n={}: witness min/mean/max = {}/{:.2}/{} ({} seeds)",
                    report.n,
                    report.witness_aggregate.min,
                    report.witness_aggregate.mean,
                    report.witness_aggregate.max,
                    args.seeds,
                );
                assertions.extend(report.assertions.clone());
                reports.push(report);
            }
            (ExperimentOutput::Grid { reports }, assertions, args.out)
        }
        ExperimentKind::Ranked(args) => {
            let seeds: Vec<u64> = (0..args.seeds as u64).map(|i| child_seed(args.seed, i)).collect();
            let variants: Vec<RankVariant> = if args.both_variants {
                vec![RankVariant::Overlapping, RankVariant::Disjoint]
            } else {
                vec![args.variant.into()]
            };
            let mut points = Vec::new();
            for &variant in &variants {
                for &b in &args.b {
                    for &a in &args.a {
                        points.push(RankedParams::new(args.r, b, a, 0, variant)?);
                    }
                }
                for &n in &args.n {
                    let Some(eps) = args.epsilon else {
                        bail!("--n requires --epsilon");
                    };
                    points.push(RankedParams::from_target_n(n, eps, args.r, 0, variant)?);
                }
            }
            if points.is_empty() {
                bail!("give --b and --a lists, or --n with --epsilon");
            }
            let mut config = RankedExperimentConfig::new(points, seeds);
            config.epsilon = args.epsilon;
            // The sparsity bound is a theorem only for formula-sized points.
            config.assert_edge_bound = !args.n.is_empty() && args.b.is_empty() && args.a.is_empty();
            config.biclique_limit = super::biclique_limit();
            let report = run_ranked_experiment(&config)?;
            for t in &report.trials {
                println!(
                    "ranked r={} b={} a={} variant={:?} seed={}: n={} edges={} max_degree={}",
                    t.params.dims,
                    t.params.side,
                    t.params.cell_size,
                    t.params.variant,
                    t.params.seed,
                    t.n,
                    t.edges,
                    t.max_degree,
                );
            }
            let assertions = report.assertions.clone();
            (ExperimentOutput::Ranked { report }, assertions, args.out)
        }
    };

    let mut failed = false;
    for Assertion { name, pass, detail } in &assertions {
        println!("[{}] {name}: {detail}", if *pass { "PASS" } else { "FAIL" });
        failed |= !pass;
    }

    if let Some(path) = out {
        let mut text = serde_json::to_string_pretty(&output)?;
        text.push('\n');
        std::fs::write(path, text)?;
    }

    Ok(if failed { 1 } else { 0 })
}
