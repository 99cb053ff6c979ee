//! The expander-ranked construction.
//!
//! Vertices live in b^r cells indexed by rank vectors in [1, b]^r, each
//! cell holding the a vertices of a fixed 3-regular expander. Order s
//! relates v < w when the rank of w dominates the rank of v toward axis s
//! (the s'th coordinate difference realizes the Chebyshev distance) and
//! their expander labels are adjacent in the power of H given by that
//! distance. Loops in the powers make equal labels comparable across cells.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expander::{graph_power, random_regular, PowerGraph, RegularGraph};
use crate::graph::{union_graphs, LabeledUnionGraph};
use crate::order::StrictOrder;

/// Non-strict rank dominance toward `axis`: b - a achieves the Chebyshev
/// distance on that coordinate. Reflexive; on equal vectors it holds for
/// every axis.
pub fn axis_le(axis: usize, a: &[f64], b: &[f64]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if axis >= a.len() {
        return Err(Error::IndexOutOfRange {
            what: "axis",
            got: axis,
            limit: a.len(),
        });
    }
    let max = a
        .iter()
        .zip(b)
        .map(|(x, y)| (y - x).abs())
        .fold(0.0f64, f64::max);
    Ok(b[axis] - a[axis] == max)
}

/// Strict rank dominance toward `axis`.
pub fn axis_lt(axis: usize, a: &[f64], b: &[f64]) -> Result<bool> {
    Ok(axis_le(axis, a, b)? && a != b)
}

/// The disjoint variant: the axis realizing the Chebyshev distance must be
/// strictly unique among axes before `axis`. Any two distinct vectors are
/// comparable by exactly one (axis, direction).
pub fn axis_lt_disjoint(axis: usize, a: &[f64], b: &[f64]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if axis >= a.len() {
        return Err(Error::IndexOutOfRange {
            what: "axis",
            got: axis,
            limit: a.len(),
        });
    }
    if a == b {
        return Ok(false);
    }
    let max = a
        .iter()
        .zip(b)
        .map(|(x, y)| (y - x).abs())
        .fold(0.0f64, f64::max);
    Ok(b[axis] - a[axis] == max && a[..axis].iter().zip(b).all(|(x, y)| (y - x).abs() < max))
}

// Exact integer twins of the comparators, used when scanning cell pairs.
fn int_axis_lt(axis: usize, a: &[i64], b: &[i64]) -> bool {
    let max = a.iter().zip(b).map(|(x, y)| (y - x).abs()).max().unwrap_or(0);
    b[axis] - a[axis] == max && a != b
}

fn int_axis_lt_disjoint(axis: usize, a: &[i64], b: &[i64]) -> bool {
    if a == b {
        return false;
    }
    let max = a.iter().zip(b).map(|(x, y)| (y - x).abs()).max().unwrap_or(0);
    b[axis] - a[axis] == max
        && a[..axis].iter().zip(b).all(|(x, y)| (y - x).abs() < max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RankVariant {
    /// Ranks may be comparable toward several axes; edges carry every label.
    Overlapping,
    /// Every distinct rank pair is comparable toward exactly one axis, so
    /// the r comparability graphs are pairwise edge-disjoint.
    Disjoint,
}

/// Parameters of a ranked instance: r orders on b^r cells of size a over a
/// d-regular expander. The vertex count is `a * b^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedParams {
    #[serde(rename = "r")]
    pub dims: usize,
    #[serde(rename = "b")]
    pub side: usize,
    #[serde(rename = "a")]
    pub cell_size: usize,
    #[serde(rename = "d")]
    pub degree: usize,
    pub seed: u64,
    pub variant: RankVariant,
}

impl RankedParams {
    /// Degree defaults to 3.
    pub fn new(
        dims: usize,
        side: usize,
        cell_size: usize,
        seed: u64,
        variant: RankVariant,
    ) -> Result<Self> {
        Self::with_degree(dims, side, cell_size, 3, seed, variant)
    }

    pub fn with_degree(
        dims: usize,
        side: usize,
        cell_size: usize,
        degree: usize,
        seed: u64,
        variant: RankVariant,
    ) -> Result<Self> {
        for (what, v) in [("order count", dims), ("grid side", side), ("cell size", cell_size)] {
            if v < 1 {
                return Err(Error::TooSmall { what, min: 1, got: v });
            }
        }
        if cell_size * degree % 2 == 1 {
            return Err(Error::InfeasibleDegree {
                n: cell_size,
                degree,
            });
        }
        Ok(RankedParams {
            dims,
            side,
            cell_size,
            degree,
            seed,
            variant,
        })
    }

    /// Sizes an instance near `n` vertices for a sparsity exponent
    /// `epsilon`: `b = round(epsilon * ln n / ln 9)` clamped to at least 1,
    /// `a = round(n / b^r)` clamped to at least 2 and bumped by one if
    /// `a * d` is odd.
    pub fn from_target_n(
        n: usize,
        epsilon: f64,
        dims: usize,
        seed: u64,
        variant: RankVariant,
    ) -> Result<Self> {
        if n < 100 {
            return Err(Error::TooSmall {
                what: "target vertex count",
                min: 100,
                got: n,
            });
        }
        if !(epsilon > 0.0 && epsilon <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "epsilon must be in (0, 1], got {epsilon}"
            )));
        }
        if dims < 1 {
            return Err(Error::TooSmall {
                what: "order count",
                min: 1,
                got: dims,
            });
        }
        let degree = 3usize;
        let side = ((epsilon * (n as f64).ln() / 9f64.ln()).round() as usize).max(1);
        let cells = (side as f64).powi(dims as i32);
        let mut cell_size = ((n as f64 / cells).round() as usize).max(2);
        if cell_size * degree % 2 == 1 {
            cell_size += 1;
        }
        RankedParams::with_degree(dims, side, cell_size, degree, seed, variant)
    }

    pub fn cell_count(&self) -> usize {
        self.side.pow(self.dims as u32)
    }

    pub fn vertex_count(&self) -> usize {
        self.cell_size * self.cell_count()
    }

    /// b^r * 3^b, the degree bound for 3-regular expanders.
    pub fn degree_bound(&self) -> Option<u128> {
        if self.degree != 3 {
            return None;
        }
        let b = self.side as u32;
        Some((self.side as u128).pow(self.dims as u32) * 3u128.pow(b))
    }
}

/// A built ranked instance.
pub struct RankedConstruction {
    params: RankedParams,
    expander: RegularGraph,
    sample_attempts: usize,
    powers: Vec<PowerGraph>,
    orders: Vec<StrictOrder>,
}

impl RankedConstruction {
    pub fn build(params: RankedParams) -> Result<Self> {
        let (r, b, a) = (params.dims, params.side, params.cell_size);
        let (expander, sample_attempts) =
            random_regular(a, params.degree, params.seed)?;
        let simple = expander.to_simple();
        let powers: Vec<PowerGraph> = (0..b).map(|k| graph_power(&simple, k)).collect();

        let cells = params.cell_count();
        let n = params.vertex_count();
        let ranks: Vec<Vec<i64>> = (0..cells).map(|c| decode_rank(c, r, b)).collect();

        let mut orders = Vec::with_capacity(r);
        for axis in 0..r {
            let mut succ: Vec<Vec<u32>> = vec![Vec::new(); n];
            for (ca, alpha) in ranks.iter().enumerate() {
                for (cb, beta) in ranks.iter().enumerate() {
                    let related = match params.variant {
                        RankVariant::Overlapping => int_axis_lt(axis, alpha, beta),
                        RankVariant::Disjoint => int_axis_lt_disjoint(axis, alpha, beta),
                    };
                    if !related {
                        continue;
                    }
                    let k = alpha
                        .iter()
                        .zip(beta)
                        .map(|(x, y)| (y - x).abs())
                        .max()
                        .unwrap() as usize;
                    let power = &powers[k];
                    let base_a = (ca * a) as u32;
                    let base_b = (cb * a) as u32;
                    for x in 0..a as u32 {
                        let list = &mut succ[(base_a + x) as usize];
                        list.extend(power.neighbors(x).iter().map(|&y| base_b + y));
                    }
                }
            }
            orders.push(StrictOrder::from_closed(n, succ));
        }
        Ok(RankedConstruction {
            params,
            expander,
            sample_attempts,
            powers,
            orders,
        })
    }

    pub fn params(&self) -> &RankedParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.vertex_count()
    }

    pub fn expander(&self) -> &RegularGraph {
        &self.expander
    }

    /// Pairing-model attempts consumed when sampling the expander.
    pub fn sample_attempts(&self) -> usize {
        self.sample_attempts
    }

    /// H^0 .. H^(b-1).
    pub fn powers(&self) -> &[PowerGraph] {
        &self.powers
    }

    pub fn orders(&self) -> &[StrictOrder] {
        &self.orders
    }

    /// The rank vector (coordinates in [1, b]) of a vertex's cell.
    pub fn rank_of(&self, v: u32) -> Vec<i64> {
        decode_rank(
            v as usize / self.params.cell_size,
            self.params.dims,
            self.params.side,
        )
    }

    /// The vertex's expander label; the per-cell bijection is the identity
    /// position map.
    pub fn label_of(&self, v: u32) -> u32 {
        (v as usize % self.params.cell_size) as u32
    }

    pub fn union_graph(&self) -> LabeledUnionGraph {
        union_graphs(&self.orders).expect("orders share a vertex count")
    }

    /// Exact maximum degree of the union graph.
    pub fn max_degree(&self) -> usize {
        self.union_graph().max_degree()
    }
}

/// Cell index -> rank vector with coordinates in [1, b], first coordinate
/// most significant.
fn decode_rank(cell: usize, dims: usize, side: usize) -> Vec<i64> {
    let mut rank = vec![0i64; dims];
    let mut rest = cell;
    for slot in rank.iter_mut().rev() {
        *slot = (rest % side) as i64 + 1;
        rest /= side;
    }
    rank
}
