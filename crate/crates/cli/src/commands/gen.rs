use std::path::PathBuf;

use anyhow::bail;
use clap::{Args, Subcommand, ValueEnum};

use comparability_core::{GridParams, RankVariant, RankedParams};

use crate::instance::{grid_instance, ranked_instance, InstanceFile};

#[derive(Subcommand)]
pub enum GenKind {
    /// Chain-grid instance: a vertices per cell on a b x b grid
    Grid(GenGrid),
    /// Expander-ranked instance: r orders on b^r cells of size a
    Ranked(GenRanked),
}

#[derive(Args)]
pub struct GenGrid {
    /// Cell size (chains per row)
    #[arg(long)]
    a: Option<usize>,
    /// Grid side
    #[arg(long)]
    b: Option<usize>,
    /// Target vertex count; sizes a and b by the construction formulas
    #[arg(long)]
    n: Option<usize>,
    /// Master seed (required: every instance must be regenerable)
    #[arg(long)]
    seed: u64,
    /// Output file
    #[arg(long)]
    out: PathBuf,
    /// Omit the creation timestamp so identical runs are byte-identical
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args)]
pub struct GenRanked {
    /// Number of orders
    #[arg(long)]
    r: usize,
    /// Grid side
    #[arg(long)]
    b: Option<usize>,
    /// Cell size (expander vertex count)
    #[arg(long)]
    a: Option<usize>,
    /// Target vertex count; sizes a and b from epsilon
    #[arg(long)]
    n: Option<usize>,
    /// Sparsity exponent used with --n
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long, value_enum, default_value_t = VariantArg::Overlapping)]
    variant: VariantArg,
    /// Master seed (required: every instance must be regenerable)
    #[arg(long)]
    seed: u64,
    /// Output file
    #[arg(long)]
    out: PathBuf,
    /// Omit the creation timestamp so identical runs are byte-identical
    #[arg(long)]
    deterministic: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Overlapping,
    Disjoint,
}

impl From<VariantArg> for RankVariant {
    fn from(v: VariantArg) -> RankVariant {
        match v {
            VariantArg::Overlapping => RankVariant::Overlapping,
            VariantArg::Disjoint => RankVariant::Disjoint,
        }
    }
}

pub fn run(kind: GenKind) -> anyhow::Result<u8> {
    let (file, out) = match kind {
        GenKind::Grid(args) => {
            let params = match (args.a, args.b, args.n) {
                (Some(a), Some(b), None) => GridParams::new(a, b, args.seed)?,
                (None, None, Some(n)) => GridParams::from_target_n(n, args.seed)?,
                _ => bail!("give either --a and --b, or --n"),
            };
            (grid_instance(params, args.deterministic), args.out)
        }
        GenKind::Ranked(args) => {
            let params = match (args.b, args.a, args.n, args.epsilon) {
                (Some(b), Some(a), None, None) => {
                    RankedParams::new(args.r, b, a, args.seed, args.variant.into())?
                }
                (None, None, Some(n), Some(eps)) => RankedParams::from_target_n(
                    n,
                    eps,
                    args.r,
                    args.seed,
                    args.variant.into(),
                )?,
                _ => bail!("give either --b and --a, or --n and --epsilon"),
            };
            (ranked_instance(params, args.deterministic)?, args.out)
        }
    };
    file.write(&out)?;
    println!("{} out={}", summary_line(&file)?, out.display());
    Ok(0)
}

pub(crate) fn summary_line(file: &InstanceFile) -> anyhow::Result<String> {
    let graph = file.to_union_graph()?;
    Ok(format!(
        "kind={} n={} edges={} max_degree={}",
        file.kind,
        file.n,
        graph.edge_count(),
        graph.max_degree()
    ))
}
