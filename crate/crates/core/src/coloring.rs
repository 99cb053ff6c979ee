//! Proper colorings of comparability graphs and the homogeneous-set
//! extraction built on them.
//!
//! A chain-height coloring uses exactly as many colors as the longest chain,
//! which equals the clique number of the comparability graph. Taking the
//! product of such colorings across r orders colors the union graph with at
//! most the product of the clique numbers, and either a longest chain (a
//! clique of the union) or a largest product color class (an independent set
//! of the union) has size at least n^(1/(r+1)).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::order::StrictOrder;

/// A vertex coloring with compact integer color ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    palette_size: usize,
}

impl Coloring {
    /// Wraps raw color ids; the palette size is the number of distinct ids.
    pub fn from_colors(colors: Vec<u32>) -> Self {
        let mut distinct: Vec<u32> = colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        Coloring {
            colors,
            palette_size: distinct.len(),
        }
    }

    pub fn color(&self, v: u32) -> u32 {
        self.colors[v as usize]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    /// Edge-scan properness check.
    pub fn is_proper_for(&self, g: &SimpleGraph) -> bool {
        g.edges()
            .all(|(u, v)| self.colors[u as usize] != self.colors[v as usize])
    }

    /// Vertices of the most common color; ties break toward the smallest
    /// color id.
    pub fn largest_class(&self) -> Vec<u32> {
        let mut counts = vec![0usize; self.palette_size.max(1)];
        for &c in &self.colors {
            counts[c as usize] += 1;
        }
        let best = counts
            .iter()
            .enumerate()
            .max_by_key(|&(c, &cnt)| (cnt, std::cmp::Reverse(c)))
            .map(|(c, _)| c as u32)
            .unwrap_or(0);
        (0..self.colors.len() as u32)
            .filter(|&v| self.colors[v as usize] == best)
            .collect()
    }
}

/// Colors every vertex by the length of the longest chain ending at it.
///
/// The palette size equals the longest chain length, i.e. the clique number
/// of the comparability graph, and the coloring is proper for it.
pub fn mirsky_coloring(p: &StrictOrder) -> Coloring {
    let n = p.n();
    let pred = p.predecessors();
    // Kahn topological sweep over the closed relation.
    let mut indeg: Vec<usize> = pred.iter().map(Vec::len).collect();
    let mut queue: Vec<u32> = (0..n as u32).filter(|&v| indeg[v as usize] == 0).collect();
    let mut colors = vec![0u32; n];
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &w in p.successors(v) {
            colors[w as usize] = colors[w as usize].max(colors[v as usize] + 1);
            indeg[w as usize] -= 1;
            if indeg[w as usize] == 0 {
                queue.push(w);
            }
        }
    }
    debug_assert_eq!(head, n, "relation is not acyclic");
    let palette_size = if n == 0 {
        0
    } else {
        *colors.iter().max().unwrap() as usize + 1
    };
    Coloring {
        colors,
        palette_size,
    }
}

/// Combines colorings coordinate-wise and canonicalizes the occurring tuples
/// to integers by lexicographic rank.
pub fn product_coloring(parts: &[Coloring]) -> Result<Coloring> {
    let first = parts.first().ok_or(Error::EmptyInput)?;
    let n = first.n();
    for c in parts {
        if c.n() != n {
            return Err(Error::MismatchedVertexCount {
                left: n,
                right: c.n(),
            });
        }
    }
    let tuples: Vec<Vec<u32>> = (0..n)
        .map(|v| parts.iter().map(|c| c.colors[v]).collect())
        .collect();
    let mut distinct = tuples.clone();
    distinct.sort();
    distinct.dedup();
    let colors = tuples
        .iter()
        .map(|t| distinct.binary_search(t).unwrap() as u32)
        .collect();
    Ok(Coloring {
        colors,
        palette_size: distinct.len(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HomogeneousKind {
    Clique,
    Independent,
}

/// A clique or independent set of an associated graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogeneousSet {
    pub kind: HomogeneousKind,
    pub vertices: Vec<u32>,
}

impl HomogeneousSet {
    /// Edge-scan certification against `g`.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        match self.kind {
            HomogeneousKind::Clique => g.is_clique(&self.vertices),
            HomogeneousKind::Independent => g.is_independent(&self.vertices),
        }
    }
}

/// The size every extraction is guaranteed to reach: n^(1/(r+1)).
pub fn guaranteed_homogeneous_size(n: usize, r: usize) -> f64 {
    (n as f64).powf(1.0 / (r as f64 + 1.0))
}

/// Extracts a homogeneous set of the union graph of `orders` of size at
/// least n^(1/(r+1)).
///
/// Both candidates are computed: the longest chain over all orders (a clique
/// of the union) and the largest color class of the product of chain-height
/// colorings (an independent set). The larger wins; ties go to the clique.
pub fn extract_homogeneous(orders: &[StrictOrder]) -> Result<HomogeneousSet> {
    if orders.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = orders[0].n();
    for p in orders {
        if p.n() != n {
            return Err(Error::MismatchedVertexCount {
                left: n,
                right: p.n(),
            });
        }
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }

    let colorings: Vec<Coloring> = orders.iter().map(mirsky_coloring).collect();
    let (best_idx, _) = colorings
        .iter()
        .enumerate()
        .max_by_key(|(i, c)| (c.palette_size(), std::cmp::Reverse(*i)))
        .expect("nonempty");
    let chain = longest_chain(&orders[best_idx], &colorings[best_idx]);

    let class = product_coloring(&colorings)?.largest_class();

    if chain.len() >= class.len() {
        Ok(HomogeneousSet {
            kind: HomogeneousKind::Clique,
            vertices: chain,
        })
    } else {
        Ok(HomogeneousSet {
            kind: HomogeneousKind::Independent,
            vertices: class,
        })
    }
}

/// Recovers a maximum chain by walking heights downward from a vertex of
/// maximal height.
fn longest_chain(p: &StrictOrder, heights: &Coloring) -> Vec<u32> {
    let n = p.n();
    if n == 0 {
        return Vec::new();
    }
    let pred = p.predecessors();
    let top = (0..n as u32)
        .max_by_key(|&v| (heights.color(v), std::cmp::Reverse(v)))
        .unwrap();
    let mut chain = vec![top];
    let mut cur = top;
    while heights.color(cur) > 0 {
        let want = heights.color(cur) - 1;
        let prev = pred[cur as usize]
            .iter()
            .copied()
            .find(|&u| heights.color(u) == want)
            .expect("height function admits a predecessor one level down");
        chain.push(prev);
        cur = prev;
    }
    chain.reverse();
    chain
}
