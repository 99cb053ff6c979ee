use std::path::PathBuf;

use clap::Args;

use comparability_core::{GridConstruction, RankVariant, RankedConstruction};

use crate::instance::{Construction, InstanceFile};

#[derive(Args)]
pub struct VerifyArgs {
    file: PathBuf,
    /// Materialize and audit the stored orders only when n is at most this
    #[arg(long, default_value_t = 2048)]
    audit_limit: usize,
}

struct Checklist {
    results: Vec<(String, bool)>,
}

impl Checklist {
    fn new() -> Self {
        Checklist {
            results: Vec::new(),
        }
    }

    fn record(&mut self, name: &str, pass: bool) {
        println!("[{}] {}", if pass { "PASS" } else { "FAIL" }, name);
        self.results.push((name.to_string(), pass));
    }

    fn all_pass(&self) -> bool {
        self.results.iter().all(|(_, p)| *p)
    }
}

pub fn run(args: VerifyArgs) -> anyhow::Result<u8> {
    // A file that does not parse is malformed: the error path exits 2.
    let file = InstanceFile::load_schema(&args.file)?;
    let mut checks = Checklist::new();

    let violations = file.structural_violations();
    checks.record("format.canonical-structure", violations.is_empty());
    for v in &violations {
        println!("       {v}");
    }
    if !violations.is_empty() {
        // Content cannot be trusted past this point.
        return Ok(1);
    }

    let stored = file.to_union_graph()?;
    if let Some(rebuilt) = file.rebuild_union_graph()? {
        checks.record("construction.edges-match-rebuild", stored == rebuilt);
    }

    match &file.construction {
        Some(Construction::Grid { params, .. }) => {
            let gc = GridConstruction::build(*params);
            let simple = stored.to_simple();
            checks.record(
                "grid.alpha-witness-independent",
                simple.is_independent(&gc.alpha_witness()),
            );
            let witness = gc.greedy_clique_witness();
            checks.record("grid.greedy-witness-clique", simple.is_clique(&witness));
            checks.record(
                "grid.edge-labels-disjoint",
                stored
                    .labeled_edges()
                    .iter()
                    .all(|&(_, _, mask)| mask.count_ones() == 1),
            );
            if file.n <= args.audit_limit {
                checks.record(
                    "grid.orders-are-partial-orders",
                    gc.order1().validate().ok() && gc.order2().validate().ok(),
                );
                checks.record("grid.cross-pair-coverage", grid_coverage_holds(&gc));
            }
        }
        Some(Construction::Ranked { params, .. }) => {
            let rc = RankedConstruction::build(*params)?;
            if let Some(bound) = params.degree_bound() {
                checks.record(
                    "ranked.max-degree-within-bound",
                    (stored.max_degree() as u128) <= bound,
                );
            }
            match params.variant {
                RankVariant::Disjoint => checks.record(
                    "ranked.edge-labels-disjoint",
                    stored
                        .labeled_edges()
                        .iter()
                        .all(|&(_, _, mask)| mask.count_ones() == 1),
                ),
                RankVariant::Overlapping => {}
            }
            if file.n <= args.audit_limit {
                checks.record(
                    "ranked.orders-are-partial-orders",
                    rc.orders().iter().all(|p| p.validate().ok()),
                );
            }
        }
        None => {}
    }

    Ok(if checks.all_pass() { 0 } else { 1 })
}

/// Vertices in different rows and columns must be comparable in exactly one
/// order and one direction; all other cross pairs follow the chain rules.
fn grid_coverage_holds(gc: &GridConstruction) -> bool {
    let n = gc.n() as u32;
    for v in 0..n {
        for w in v + 1..n {
            let (i, j) = gc.cell_of(v);
            let (i2, j2) = gc.cell_of(w);
            let dirs = [gc.less1(v, w), gc.less1(w, v), gc.less2(v, w), gc.less2(w, v)];
            let count = dirs.iter().filter(|&&d| d).count();
            let expected = if i != i2 && j != j2 {
                1
            } else if i == i2 && j != j2 {
                usize::from(gc.row_chain_of(v) == gc.row_chain_of(w))
            } else if j == j2 && i != i2 {
                usize::from(gc.position_of(v) == gc.position_of(w))
            } else {
                0
            };
            if count != expected {
                return false;
            }
        }
    }
    true
}
