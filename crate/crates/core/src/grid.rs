//! The chain-grid construction.
//!
//! Vertices live in a b x b grid of cells of size a. Each row is covered by
//! a random chains (successors drawn cell by cell via per-cell random
//! bijections), each column by a fixed chains, and two vertices in different
//! rows and columns are comparable in exactly one of the two orders. The
//! union graph has independence number exactly a, clique number at most a
//! with high probability, and a greedy witness clique of size close to a.

use std::collections::HashSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{union_graphs, LabeledUnionGraph};
use crate::order::StrictOrder;
use crate::rng::{shuffle, substream, STREAM_GRID_CELL};

/// Parameters of a chain-grid instance: cell size `a`, grid side `b`, and
/// the master seed. The vertex count is `a * b^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridParams {
    #[serde(rename = "a")]
    pub cell_size: usize,
    #[serde(rename = "b")]
    pub side: usize,
    pub seed: u64,
}

impl GridParams {
    pub fn new(cell_size: usize, side: usize, seed: u64) -> Result<Self> {
        if cell_size < 1 {
            return Err(Error::TooSmall {
                what: "cell size",
                min: 1,
                got: cell_size,
            });
        }
        if side < 1 {
            return Err(Error::TooSmall {
                what: "grid side",
                min: 1,
                got: side,
            });
        }
        Ok(GridParams {
            cell_size,
            side,
            seed,
        })
    }

    /// Sizes an instance near `n` vertices:
    /// `b = round(n^(1/3) (ln ln n / ln n)^(1/3))`, `a = round(n / b^2)`,
    /// both clamped to at least 1. The realized vertex count
    /// [`GridParams::vertex_count`] may differ slightly from `n`.
    pub fn from_target_n(n: usize, seed: u64) -> Result<Self> {
        if n < 100 {
            return Err(Error::TooSmall {
                what: "target vertex count",
                min: 100,
                got: n,
            });
        }
        let nf = n as f64;
        let b = (nf.powf(1.0 / 3.0) * (nf.ln().ln() / nf.ln()).powf(1.0 / 3.0)).round();
        let side = (b as usize).max(1);
        let cell_size = ((nf / (side * side) as f64).round() as usize).max(1);
        GridParams::new(cell_size, side, seed)
    }

    pub fn vertex_count(&self) -> usize {
        self.cell_size * self.side * self.side
    }
}

/// A built chain-grid instance.
///
/// Comparator queries (`less1`, `less2`) run in O(1) off the stored cell
/// bijections. The closed relations themselves are quadratic in n, so they
/// materialize lazily on first use of [`GridConstruction::order1`] /
/// [`GridConstruction::order2`]; witness and chain machinery never needs
/// them.
#[derive(Debug)]
pub struct GridConstruction {
    params: GridParams,
    /// (cell * a + k) -> vertex: the random bijection from chain indices to
    /// cell members.
    member: Vec<u32>,
    /// vertex -> its chain index k within its cell.
    chain1: Vec<u32>,
    order1: OnceLock<StrictOrder>,
    order2: OnceLock<StrictOrder>,
}

impl GridConstruction {
    /// Deterministic build: each cell's bijection is drawn from a substream
    /// keyed by (seed, row, column), so the result is independent of
    /// iteration order.
    pub fn build(params: GridParams) -> Self {
        let (a, b) = (params.cell_size, params.side);
        let n = params.vertex_count();
        let mut member = vec![0u32; n];
        let mut chain1 = vec![0u32; n];
        for row in 0..b {
            for col in 0..b {
                let cell = row * b + col;
                let base = (cell * a) as u32;
                let mut perm: Vec<u32> = (0..a as u32).collect();
                let mut rng =
                    substream(params.seed, STREAM_GRID_CELL, row as u64, col as u64);
                shuffle(&mut rng, &mut perm);
                for (k, &p) in perm.iter().enumerate() {
                    member[cell * a + k] = base + p;
                    chain1[(base + p) as usize] = k as u32;
                }
            }
        }
        GridConstruction {
            params,
            member,
            chain1,
            order1: OnceLock::new(),
            order2: OnceLock::new(),
        }
    }

    pub fn params(&self) -> &GridParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.vertex_count()
    }

    /// (row, column) of the vertex's cell.
    #[inline]
    pub fn cell_of(&self, v: u32) -> (usize, usize) {
        let cell = v as usize / self.params.cell_size;
        (cell / self.params.side, cell % self.params.side)
    }

    /// Position within the cell; also the vertex's column-chain index, since
    /// the column bijections are the identity layout.
    #[inline]
    pub fn position_of(&self, v: u32) -> usize {
        v as usize % self.params.cell_size
    }

    /// The vertex's row-chain index k (its preimage under the cell's random
    /// bijection).
    #[inline]
    pub fn row_chain_of(&self, v: u32) -> usize {
        self.chain1[v as usize] as usize
    }

    /// First order: v < w iff the cells strictly increase in both row and
    /// column, or the cells share a row, the column increases, and both
    /// vertices lie on the same row chain.
    #[inline]
    pub fn less1(&self, v: u32, w: u32) -> bool {
        let (i, j) = self.cell_of(v);
        let (i2, j2) = self.cell_of(w);
        (i < i2 && j < j2)
            || (i == i2 && j < j2 && self.chain1[v as usize] == self.chain1[w as usize])
    }

    /// Second order: v < w iff the row increases while the column strictly
    /// decreases, or the row increases within the same column along a common
    /// column chain.
    #[inline]
    pub fn less2(&self, v: u32, w: u32) -> bool {
        let (i, j) = self.cell_of(v);
        let (i2, j2) = self.cell_of(w);
        i < i2 && (j > j2 || (j == j2 && self.position_of(v) == self.position_of(w)))
    }

    pub fn comparable(&self, v: u32, w: u32) -> bool {
        self.less1(v, w) || self.less1(w, v) || self.less2(v, w) || self.less2(w, v)
    }

    /// The k'th chain of row `row`: one vertex per cell of the row, in
    /// column order.
    pub fn row_chain(&self, row: usize, chain: usize) -> Result<Vec<u32>> {
        let (a, b) = (self.params.cell_size, self.params.side);
        if row >= b {
            return Err(Error::IndexOutOfRange {
                what: "row",
                got: row,
                limit: b,
            });
        }
        if chain >= a {
            return Err(Error::IndexOutOfRange {
                what: "chain",
                got: chain,
                limit: a,
            });
        }
        Ok((0..b)
            .map(|col| self.member[(row * b + col) * a + chain])
            .collect())
    }

    /// The l'th chain of column `col`, in row order.
    pub fn col_chain(&self, col: usize, chain: usize) -> Result<Vec<u32>> {
        let (a, b) = (self.params.cell_size, self.params.side);
        if col >= b {
            return Err(Error::IndexOutOfRange {
                what: "column",
                got: col,
                limit: b,
            });
        }
        if chain >= a {
            return Err(Error::IndexOutOfRange {
                what: "chain",
                got: chain,
                limit: a,
            });
        }
        Ok((0..b)
            .map(|row| ((row * b + col) * a + chain) as u32)
            .collect())
    }

    /// Intersection of a union of row chains (one per row) with a union of
    /// column chains (one per column). The result is a clique of the union
    /// graph for every choice of selectors.
    pub fn structural_clique(
        &self,
        row_chains: &[usize],
        col_chains: &[usize],
    ) -> Result<Vec<u32>> {
        let b = self.params.side;
        for (name, sel) in [("row selectors", row_chains), ("column selectors", col_chains)] {
            if sel.len() != b {
                return Err(Error::InvalidParameter(format!(
                    "{name}: expected {b} entries, got {}",
                    sel.len()
                )));
            }
        }
        let mut rows: HashSet<u32> = HashSet::with_capacity(b * b);
        for (row, &k) in row_chains.iter().enumerate() {
            rows.extend(self.row_chain(row, k)?);
        }
        let mut out = Vec::new();
        for (col, &l) in col_chains.iter().enumerate() {
            for v in self.col_chain(col, l)? {
                if rows.contains(&v) {
                    out.push(v);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Clique witness from the greedy procedure: fix the first chain of each
    /// row, then give every column the chain that meets those row chains the
    /// most (ties to the smallest chain index).
    pub fn greedy_clique_witness(&self) -> Vec<u32> {
        let (a, b) = (self.params.cell_size, self.params.side);
        let mut counts = vec![0usize; a];
        let mut col_sel = vec![0usize; b];
        for (col, sel) in col_sel.iter_mut().enumerate() {
            counts.iter_mut().for_each(|c| *c = 0);
            for row in 0..b {
                // Chain-0 member of cell (row, col); its column chain is its
                // cell position.
                let v = self.member[(row * b + col) * a];
                counts[self.position_of(v)] += 1;
            }
            let best = counts
                .iter()
                .enumerate()
                .max_by_key(|&(l, &c)| (c, std::cmp::Reverse(l)))
                .map(|(l, _)| l)
                .unwrap_or(0);
            *sel = best;
        }
        let row_sel = vec![0usize; b];
        self.structural_clique(&row_sel, &col_sel)
            .expect("selectors are in range by construction")
    }

    /// The first cell: an independent set of size a, identical for every
    /// seed.
    pub fn alpha_witness(&self) -> Vec<u32> {
        (0..self.params.cell_size as u32).collect()
    }

    /// Closed relation of the first order. Materializes O(n^2) pairs on
    /// first call.
    pub fn order1(&self) -> &StrictOrder {
        self.order1.get_or_init(|| {
            let (a, b) = (self.params.cell_size, self.params.side);
            let n = self.n();
            let mut succ: Vec<Vec<u32>> = vec![Vec::new(); n];
            for v in 0..n as u32 {
                let (i, j) = self.cell_of(v);
                let k = self.chain1[v as usize] as usize;
                let list = &mut succ[v as usize];
                for i2 in i + 1..b {
                    for j2 in j + 1..b {
                        let base = ((i2 * b + j2) * a) as u32;
                        list.extend(base..base + a as u32);
                    }
                }
                for j2 in j + 1..b {
                    list.push(self.member[(i * b + j2) * a + k]);
                }
            }
            StrictOrder::from_closed(n, succ)
        })
    }

    /// Closed relation of the second order. Materializes O(n^2) pairs on
    /// first call.
    pub fn order2(&self) -> &StrictOrder {
        self.order2.get_or_init(|| {
            let (a, b) = (self.params.cell_size, self.params.side);
            let n = self.n();
            let mut succ: Vec<Vec<u32>> = vec![Vec::new(); n];
            for v in 0..n as u32 {
                let (i, j) = self.cell_of(v);
                let p = self.position_of(v);
                let list = &mut succ[v as usize];
                for i2 in i + 1..b {
                    for j2 in 0..j {
                        let base = ((i2 * b + j2) * a) as u32;
                        list.extend(base..base + a as u32);
                    }
                    list.push(((i2 * b + j) * a + p) as u32);
                }
            }
            StrictOrder::from_closed(n, succ)
        })
    }

    /// Both orders, cloned for APIs that take owned slices.
    pub fn orders(&self) -> Vec<StrictOrder> {
        vec![self.order1().clone(), self.order2().clone()]
    }

    /// The labeled union of both comparability graphs.
    pub fn union_graph(&self) -> LabeledUnionGraph {
        union_graphs(&self.orders()).expect("orders share a vertex count")
    }
}
