use std::io::Write;
use std::path::PathBuf;

use clap::{Args, ValueEnum};

use crate::instance::InstanceFile;

#[derive(Args)]
pub struct ExportArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    format: Format,
    /// Export the complement graph instead
    #[arg(long)]
    complement: bool,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dimacs,
    Dot,
}

pub fn run(args: ExportArgs) -> anyhow::Result<u8> {
    let file = InstanceFile::load(&args.file)?;
    let text = if args.complement {
        let graph = file.to_simple_graph()?.complement();
        match args.format {
            Format::Dimacs => dimacs(graph.n(), graph.edges()),
            Format::Dot => dot_unlabeled(graph.n(), graph.edges()),
        }
    } else {
        let union = file.to_union_graph()?;
        match args.format {
            Format::Dimacs => dimacs(union.n(), union.labeled_edges().iter().map(|&(u, v, _)| (u, v))),
            Format::Dot => dot_labeled(&file),
        }
    };
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(0)
}

/// DIMACS edge format: `p edge n m` then 1-indexed `e u v` lines, sorted.
fn dimacs(n: usize, edges: impl Iterator<Item = (u32, u32)>) -> String {
    let list: Vec<(u32, u32)> = edges.collect();
    let mut out = format!("p edge {} {}\n", n, list.len());
    for (u, v) in list {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

fn dot_labeled(file: &InstanceFile) -> String {
    let mut out = String::from("graph instance {\n");
    for v in 0..file.n {
        out.push_str(&format!("  {v};\n"));
    }
    for rec in &file.edges {
        let labels: Vec<String> = rec.2.iter().map(u8::to_string).collect();
        out.push_str(&format!(
            "  {} -- {} [label=\"{}\"];\n",
            rec.0,
            rec.1,
            labels.join(",")
        ));
    }
    out.push_str("}\n");
    out
}

fn dot_unlabeled(n: usize, edges: impl Iterator<Item = (u32, u32)>) -> String {
    let mut out = String::from("graph instance {\n");
    for v in 0..n {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in edges {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
