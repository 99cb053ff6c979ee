use std::path::PathBuf;

use anyhow::bail;
use clap::Args;
use serde::Serialize;

use comparability_core::analysis::{
    max_balanced_biclique_exact, max_clique_exact, max_independent_exact, OracleResult,
};
use comparability_core::{
    extract_homogeneous, guaranteed_homogeneous_size, GridConstruction, HomogeneousKind,
    RankedConstruction,
};

use crate::instance::{Construction, InstanceFile, Kind};

#[derive(Args)]
pub struct AnalyzeArgs {
    file: PathBuf,
    /// Exact maximum clique
    #[arg(long)]
    omega: bool,
    /// Exact maximum independent set
    #[arg(long)]
    alpha: bool,
    /// Exact maximum balanced biclique
    #[arg(long)]
    biclique: bool,
    /// Guaranteed homogeneous set extracted from the stored orders
    #[arg(long)]
    homogeneous: bool,
    /// Node budget; also lifts the oracle size caps
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Serialize)]
struct AnalyzeReport {
    n: usize,
    kind: Kind,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega: Option<OracleResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<OracleResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    biclique: Option<OracleResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    homogeneous: Option<HomogeneousReport>,
}

#[derive(Serialize)]
struct HomogeneousReport {
    kind: HomogeneousKind,
    size: usize,
    guarantee: f64,
    meets_guarantee: bool,
    verified: bool,
    vertices: Vec<u32>,
}

pub fn run(args: AnalyzeArgs) -> anyhow::Result<u8> {
    if !(args.omega || args.alpha || args.biclique || args.homogeneous) {
        bail!("select at least one of --omega, --alpha, --biclique, --homogeneous");
    }
    let file = InstanceFile::load(&args.file)?;
    let graph = file.to_simple_graph()?;
    let n = graph.n();

    let clique_cap = super::clique_limit();
    let biclique_cap = super::biclique_limit();
    let budget = args.budget.unwrap_or(u64::MAX);

    let mut report = AnalyzeReport {
        n,
        kind: file.kind,
        omega: None,
        alpha: None,
        biclique: None,
        homogeneous: None,
    };

    if args.omega {
        check_cap(n, clique_cap, args.budget.is_some(), "--omega")?;
        report.omega = Some(max_clique_exact(&graph, budget));
    }
    if args.alpha {
        check_cap(n, clique_cap, args.budget.is_some(), "--alpha")?;
        report.alpha = Some(max_independent_exact(&graph, budget));
    }
    if args.biclique {
        check_cap(n, biclique_cap, args.budget.is_some(), "--biclique")?;
        report.biclique = Some(max_balanced_biclique_exact(&graph, n.max(biclique_cap))?);
    }
    if args.homogeneous {
        let orders = match &file.construction {
            Some(Construction::Grid { params, .. }) => {
                GridConstruction::build(*params).orders()
            }
            Some(Construction::Ranked { params, .. }) => {
                RankedConstruction::build(*params)?.orders().to_vec()
            }
            None => bail!(
                "--homogeneous needs a construction instance; generic files carry no orders"
            ),
        };
        let set = extract_homogeneous(&orders)?;
        let guarantee = guaranteed_homogeneous_size(n, orders.len());
        report.homogeneous = Some(HomogeneousReport {
            kind: set.kind,
            size: set.vertices.len(),
            guarantee,
            meets_guarantee: set.vertices.len() as f64 + 1e-9 >= guarantee,
            verified: set.verify(&graph),
            vertices: set.vertices,
        });
    }

    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(0)
}

fn check_cap(n: usize, cap: usize, overridden: bool, what: &str) -> anyhow::Result<()> {
    if n > cap && !overridden {
        bail!("{what}: n = {n} exceeds the oracle limit {cap}; pass --budget to override");
    }
    Ok(())
}
