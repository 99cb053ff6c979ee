//! Random regular graphs, exact vertex expansion, graph powers with loops,
//! and the product bound that expansion imposes on power-separated sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::rng::{shuffle, substream, STREAM_PAIRING, STREAM_SUBSET};

/// Simple d-regular graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularGraph {
    n: usize,
    degree: usize,
    adj: Vec<Vec<u32>>,
}

impl RegularGraph {
    /// Validates simplicity and exact regularity.
    pub fn from_adjacency(adj: Vec<Vec<u32>>) -> Result<Self> {
        let n = adj.len();
        let degree = adj.first().map(Vec::len).unwrap_or(0);
        let mut sorted = adj;
        for (v, list) in sorted.iter_mut().enumerate() {
            list.sort_unstable();
            if list.len() != degree {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} has degree {}, expected {degree}",
                    list.len()
                )));
            }
            if list.windows(2).any(|w| w[0] == w[1]) || list.contains(&(v as u32)) {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} has a loop or multi-edge"
                )));
            }
            if list.iter().any(|&u| u as usize >= n) {
                return Err(Error::IndexOutOfRange {
                    what: "vertex",
                    got: n,
                    limit: n,
                });
            }
        }
        // Symmetry.
        for v in 0..n {
            for &u in &sorted[v] {
                if sorted[u as usize].binary_search(&(v as u32)).is_err() {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(RegularGraph {
            n,
            degree,
            adj: sorted,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn to_simple(&self) -> SimpleGraph {
        let edges: Vec<(u32, u32)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(v, list)| {
                list.iter()
                    .copied()
                    .filter(move |&u| (v as u32) < u)
                    .map(move |u| (v as u32, u))
            })
            .collect();
        SimpleGraph::from_edges(self.n, &edges).expect("regular graph is simple")
    }
}

pub const DEFAULT_REJECTION_LIMIT: usize = 10_000;

/// Samples a uniform simple d-regular graph by the pairing model: shuffle
/// the d*n degree stubs, pair them up, and resample on loops or
/// multi-edges. Returns the graph and the number of attempts used.
pub fn random_regular(n: usize, degree: usize, seed: u64) -> Result<(RegularGraph, usize)> {
    random_regular_with_limit(n, degree, seed, DEFAULT_REJECTION_LIMIT)
}

pub fn random_regular_with_limit(
    n: usize,
    degree: usize,
    seed: u64,
    attempt_limit: usize,
) -> Result<(RegularGraph, usize)> {
    if n * degree % 2 == 1 || degree >= n {
        return Err(Error::InfeasibleDegree { n, degree });
    }
    if degree == 0 {
        return Ok((
            RegularGraph {
                n,
                degree,
                adj: vec![Vec::new(); n],
            },
            1,
        ));
    }
    let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| std::iter::repeat(v).take(degree)).collect();
    for attempt in 0..attempt_limit {
        let mut rng = substream(seed, STREAM_PAIRING, attempt as u64, 0);
        shuffle(&mut rng, &mut stubs);
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut simple = true;
        'pairing: for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u as usize].contains(&v) {
                simple = false;
                break 'pairing;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        if simple {
            for list in &mut adj {
                list.sort_unstable();
            }
            return Ok((RegularGraph { n, degree, adj }, attempt + 1));
        }
    }
    Err(Error::RejectionLimitExceeded {
        attempts: attempt_limit,
    })
}

/// N[U]: U together with every neighbor of U, sorted.
pub fn closed_neighborhood(h: &RegularGraph, set: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = set.to_vec();
    for &v in set {
        out.extend_from_slice(h.neighbors(v));
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// How an expansion value was obtained.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum CertificateMode {
    /// Minimum taken over every nonempty set of at most n/2 vertices;
    /// `witness` attains it and `min_ratio` is |N[witness]| / |witness|.
    Exact {
        witness: Vec<u32>,
        min_ratio: (u64, u64),
    },
    /// Upper bound from sampled sets only.
    Estimated { samples: usize },
}

/// A vertex-expansion value for a graph: every U with |U| <= n/2 satisfies
/// |N[U]| >= (1 + lambda) |U| when the mode is exact.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpansionCertificate {
    pub lambda: f64,
    pub mode: CertificateMode,
}

impl ExpansionCertificate {
    pub fn is_exact(&self) -> bool {
        matches!(self.mode, CertificateMode::Exact { .. })
    }
}

#[derive(Clone, Copy, Debug)]
pub enum ExpansionMode {
    Exact,
    Estimated { budget: usize, seed: u64 },
}

pub const DEFAULT_EXACT_EXPANSION_LIMIT: usize = 20;

/// Computes the vertex expansion of `h`.
///
/// Exact mode enumerates all 2^n - 1 nonempty subsets (capped at
/// [`DEFAULT_EXACT_EXPANSION_LIMIT`] vertices); estimated mode samples
/// `budget` sets and returns an upper bound on lambda.
pub fn vertex_expansion(h: &RegularGraph, mode: ExpansionMode) -> Result<ExpansionCertificate> {
    vertex_expansion_with_limit(h, mode, DEFAULT_EXACT_EXPANSION_LIMIT)
}

pub fn vertex_expansion_with_limit(
    h: &RegularGraph,
    mode: ExpansionMode,
    exact_limit: usize,
) -> Result<ExpansionCertificate> {
    let n = h.n();
    match mode {
        ExpansionMode::Exact => {
            if n > exact_limit {
                return Err(Error::LimitExceeded { n, limit: exact_limit });
            }
            if n == 0 {
                return Err(Error::EmptyInput);
            }
            // Closed neighborhoods as bitmasks; n <= exact_limit <= 64 here.
            let nb: Vec<u64> = (0..n)
                .map(|v| {
                    let mut m = 1u64 << v;
                    for &u in h.neighbors(v as u32) {
                        m |= 1 << u;
                    }
                    m
                })
                .collect();
            let half = n / 2;
            let mut best: Option<(u64, u64, u64)> = None; // (|N[U]|, |U|, mask)
            for mask in 1u64..(1 << n) {
                let size = mask.count_ones() as u64;
                if size as usize > half {
                    continue;
                }
                let mut closed = 0u64;
                let mut rest = mask;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    closed |= nb[v];
                    rest &= rest - 1;
                }
                let grown = closed.count_ones() as u64;
                let better = match best {
                    None => true,
                    // grown/size < g0/s0 compared exactly in integers
                    Some((g0, s0, _)) => grown * s0 < g0 * size,
                };
                if better {
                    best = Some((grown, size, mask));
                }
            }
            match best {
                None => {
                    // n == 1: no nonempty U with |U| <= 0 exists; the
                    // expansion condition is vacuous.
                    Ok(ExpansionCertificate {
                        lambda: 0.0,
                        mode: CertificateMode::Exact {
                            witness: Vec::new(),
                            min_ratio: (1, 1),
                        },
                    })
                }
                Some((grown, size, mask)) => {
                    let witness = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
                    Ok(ExpansionCertificate {
                        lambda: grown as f64 / size as f64 - 1.0,
                        mode: CertificateMode::Exact {
                            witness,
                            min_ratio: (grown, size),
                        },
                    })
                }
            }
        }
        ExpansionMode::Estimated { budget, seed } => {
            if budget == 0 {
                return Err(Error::BudgetZero);
            }
            if n < 2 {
                return Err(Error::TooSmall {
                    what: "vertex count for estimated expansion",
                    min: 2,
                    got: n,
                });
            }
            let mut lambda = f64::INFINITY;
            let mut pool: Vec<u32> = (0..n as u32).collect();
            for trial in 0..budget {
                let mut rng = substream(seed, STREAM_SUBSET, trial as u64, 0);
                use rand::Rng;
                let size = rng.gen_range(1..=n / 2);
                // Partial Fisher-Yates: the first `size` entries after
                // shuffling a prefix.
                for i in 0..size {
                    let j = rng.gen_range(i..n);
                    pool.swap(i, j);
                }
                let set = &pool[..size];
                let grown = closed_neighborhood(h, set).len() as f64;
                lambda = lambda.min(grown / size as f64 - 1.0);
            }
            Ok(ExpansionCertificate {
                lambda,
                mode: CertificateMode::Estimated { samples: budget },
            })
        }
    }
}

/// The k'th power of a graph, with a loop at every vertex for all k >= 0.
/// Two vertices are adjacent iff their distance in the base graph is at
/// most k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerGraph {
    n: usize,
    exponent: usize,
    adj: Vec<Vec<u32>>, // sorted, includes v itself
}

impl PowerGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// Closed neighborhood in the power: includes the vertex itself.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Cross edges only, u < v (loops omitted from the count).
    pub fn cross_edge_count(&self) -> usize {
        (self.adj.iter().map(Vec::len).sum::<usize>() - self.n) / 2
    }
}

/// Builds the k'th power of any simple graph by a depth-k BFS from every
/// vertex.
pub fn graph_power(h: &SimpleGraph, k: usize) -> PowerGraph {
    let n = h.n();
    let mut adj = Vec::with_capacity(n);
    let mut dist = vec![usize::MAX; n];
    let mut queue: Vec<u32> = Vec::new();
    for start in 0..n as u32 {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        queue.push(start);
        dist[start as usize] = 0;
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            if dist[v as usize] == k {
                continue;
            }
            for &w in h.neighbors(v) {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = dist[v as usize] + 1;
                    queue.push(w);
                }
            }
        }
        let mut reach = queue.clone();
        reach.sort_unstable();
        adj.push(reach);
    }
    PowerGraph {
        n,
        exponent: k,
        adj,
    }
}

/// Outcome of checking the expansion product bound on a pair of sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundCheck {
    /// Some power edge joins X and Y (loops count when they intersect), so
    /// the bound's hypothesis fails.
    Vacuous,
    Holds,
    /// |X||Y| > n^2 (1+lambda)^{-k} with no power edge between X and Y:
    /// impossible for a correct certificate.
    Violation,
}

/// Checks that power-separated sets satisfy |X||Y| <= n^2 (1+lambda)^{-k},
/// where k is the power's exponent. Requires an exact certificate.
///
/// The comparison is carried out in exact integer arithmetic via the
/// certificate's minimum ratio whenever the products fit in u128.
pub fn check_expander_bound(
    power: &PowerGraph,
    cert: &ExpansionCertificate,
    x: &[u32],
    y: &[u32],
) -> Result<BoundCheck> {
    let CertificateMode::Exact { min_ratio: (num, den), .. } = cert.mode else {
        return Err(Error::NonExactCertificate);
    };
    for &u in x {
        for &v in y {
            if power.has_edge(u, v) {
                return Ok(BoundCheck::Vacuous);
            }
        }
    }
    let n = power.n() as u128;
    let k = power.exponent() as u32;
    let product = x.len() as u128 * y.len() as u128;
    // |X||Y| * (num/den)^k <= n^2
    let holds = match (
        (num as u128).checked_pow(k).and_then(|p| product.checked_mul(p)),
        (den as u128).checked_pow(k).and_then(|p| (n * n).checked_mul(p)),
    ) {
        (Some(lhs), Some(rhs)) => lhs <= rhs,
        _ => {
            let bound = (n * n) as f64 * (1.0 + cert.lambda).powi(-(k as i32));
            product as f64 <= bound
        }
    };
    Ok(if holds {
        BoundCheck::Holds
    } else {
        BoundCheck::Violation
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> RegularGraph {
        RegularGraph::from_adjacency(vec![
            vec![1, 2, 3],
            vec![0, 2, 3],
            vec![0, 1, 3],
            vec![0, 1, 2],
        ])
        .unwrap()
    }

    fn cycle(n: usize) -> RegularGraph {
        let adj = (0..n)
            .map(|v| {
                vec![
                    ((v + n - 1) % n) as u32,
                    ((v + 1) % n) as u32,
                ]
            })
            .collect();
        RegularGraph::from_adjacency(adj).unwrap()
    }

    #[test]
    fn four_vertices_of_degree_three_is_complete() {
        let (h, _) = random_regular(4, 3, 123).unwrap();
        for v in 0..4u32 {
            assert_eq!(h.neighbors(v).len(), 3);
        }
        assert_eq!(h, k4());
    }

    #[test]
    fn odd_stub_count_is_infeasible() {
        assert!(matches!(
            random_regular(5, 3, 0),
            Err(Error::InfeasibleDegree { .. })
        ));
        assert!(matches!(
            random_regular(3, 3, 0),
            Err(Error::InfeasibleDegree { .. })
        ));
    }

    #[test]
    fn sampling_is_deterministic_and_simple() {
        let (h1, attempts1) = random_regular(10, 3, 7).unwrap();
        let (h2, attempts2) = random_regular(10, 3, 7).unwrap();
        assert_eq!(h1, h2);
        assert_eq!(attempts1, attempts2);
        for v in 0..10u32 {
            assert_eq!(h1.neighbors(v).len(), 3);
            assert!(!h1.has_edge(v, v));
        }
    }

    #[test]
    fn closed_neighborhood_cases() {
        let h = k4();
        assert!(closed_neighborhood(&h, &[]).is_empty());
        assert_eq!(closed_neighborhood(&h, &[0]), vec![0, 1, 2, 3]);
        assert_eq!(
            closed_neighborhood(&h, &[0, 1, 2, 3]),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn exact_expansion_of_k4_is_one() {
        let cert = vertex_expansion(&k4(), ExpansionMode::Exact).unwrap();
        assert_eq!(cert.lambda, 1.0);
        let CertificateMode::Exact { min_ratio, witness } = cert.mode else {
            panic!("expected exact mode")
        };
        assert_eq!(min_ratio, (4, 2));
        assert_eq!(witness.len(), 2);
    }

    #[test]
    fn exact_expansion_of_c6_is_two_thirds() {
        let cert = vertex_expansion(&cycle(6), ExpansionMode::Exact).unwrap();
        assert!((cert.lambda - 2.0 / 3.0).abs() < 1e-12);
        let CertificateMode::Exact { min_ratio, .. } = cert.mode else {
            panic!("expected exact mode")
        };
        assert_eq!(min_ratio, (5, 3));
    }

    #[test]
    fn exact_expansion_agrees_with_subset_oracle() {
        // Independent oracle: enumerate subsets as index combinations and
        // compute N[U] with the public closed_neighborhood.
        fn oracle(h: &RegularGraph) -> f64 {
            let n = h.n();
            let mut best = f64::INFINITY;
            for mask in 1u32..(1 << n) {
                let set: Vec<u32> =
                    (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
                if set.len() > n / 2 {
                    continue;
                }
                let ratio = closed_neighborhood(h, &set).len() as f64 / set.len() as f64;
                best = best.min(ratio - 1.0);
            }
            best
        }
        for seed in 0..5u64 {
            let (h, _) = random_regular(10, 3, seed).unwrap();
            let cert = vertex_expansion(&h, ExpansionMode::Exact).unwrap();
            assert!((cert.lambda - oracle(&h)).abs() < 1e-12);
            assert!(cert.lambda > 0.0, "connected sample should expand");
        }
    }

    #[test]
    fn estimated_expansion_upper_bounds_exact() {
        let (h, _) = random_regular(14, 3, 3).unwrap();
        let exact = vertex_expansion(&h, ExpansionMode::Exact).unwrap();
        let est = vertex_expansion(
            &h,
            ExpansionMode::Estimated {
                budget: 200,
                seed: 5,
            },
        )
        .unwrap();
        assert!(est.lambda >= exact.lambda - 1e-12);
        assert!(!est.is_exact());
    }

    #[test]
    fn estimated_expansion_rejects_zero_budget() {
        let (h, _) = random_regular(8, 3, 1).unwrap();
        assert!(matches!(
            vertex_expansion(&h, ExpansionMode::Estimated { budget: 0, seed: 0 }),
            Err(Error::BudgetZero)
        ));
    }

    #[test]
    fn power_zero_is_loops_only() {
        let p = graph_power(&k4().to_simple(), 0);
        for v in 0..4u32 {
            assert_eq!(p.neighbors(v), &[v]);
        }
        assert_eq!(p.cross_edge_count(), 0);
    }

    #[test]
    fn square_of_path_is_complete_with_loops() {
        let path = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let p = graph_power(&path, 2);
        for u in 0..3u32 {
            for v in 0..3u32 {
                assert!(p.has_edge(u, v));
            }
        }
        assert_eq!(p.cross_edge_count(), 3);
    }

    #[test]
    fn power_one_of_k4_is_k4_plus_loops() {
        let p = graph_power(&k4().to_simple(), 1);
        assert_eq!(p.cross_edge_count(), 6);
        for v in 0..4u32 {
            assert!(p.has_edge(v, v));
        }
    }

    #[test]
    fn power_monotone_and_matches_boolean_squaring() {
        // Boolean closure oracle over u64 rows.
        fn boolean_power(h: &RegularGraph, k: usize) -> Vec<u64> {
            let n = h.n();
            let base: Vec<u64> = (0..n)
                .map(|v| {
                    let mut m = 1u64 << v;
                    for &u in h.neighbors(v as u32) {
                        m |= 1 << u;
                    }
                    m
                })
                .collect();
            let mut rows: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
            for _ in 0..k {
                rows = rows
                    .iter()
                    .map(|&row| {
                        let mut next = 0u64;
                        let mut bits = row;
                        while bits != 0 {
                            let v = bits.trailing_zeros() as usize;
                            next |= base[v];
                            bits &= bits - 1;
                        }
                        next
                    })
                    .collect();
            }
            rows
        }
        for seed in 0..3u64 {
            let (h, _) = random_regular(12, 3, seed).unwrap();
            let simple = h.to_simple();
            let mut prev: Option<PowerGraph> = None;
            for k in 0..4 {
                let p = graph_power(&simple, k);
                let rows = boolean_power(&h, k);
                for v in 0..12usize {
                    let got: u64 = p
                        .neighbors(v as u32)
                        .iter()
                        .fold(0, |m, &u| m | 1 << u);
                    assert_eq!(got, rows[v], "power {k}, vertex {v}");
                }
                if let Some(q) = &prev {
                    for v in 0..12u32 {
                        for &u in q.neighbors(v) {
                            assert!(p.has_edge(v, u), "power edges must be monotone in k");
                        }
                    }
                }
                prev = Some(p);
            }
        }
    }

    #[test]
    fn bound_check_is_vacuous_on_empty_or_meeting_sets() {
        let h = k4();
        let cert = vertex_expansion(&h, ExpansionMode::Exact).unwrap();
        let p2 = graph_power(&h.to_simple(), 2);
        assert_eq!(
            check_expander_bound(&p2, &cert, &[], &[1]).unwrap(),
            BoundCheck::Holds
        );
        // Intersecting sets meet through loops.
        assert_eq!(
            check_expander_bound(&p2, &cert, &[0, 1], &[1, 2]).unwrap(),
            BoundCheck::Vacuous
        );
        // K4 has diameter 1: disjoint nonempty sets always see each other.
        assert_eq!(
            check_expander_bound(&p2, &cert, &[0], &[3]).unwrap(),
            BoundCheck::Vacuous
        );
    }

    #[test]
    fn bound_check_requires_exact_certificate() {
        let (h, _) = random_regular(10, 3, 2).unwrap();
        let est = vertex_expansion(&h, ExpansionMode::Estimated { budget: 5, seed: 0 }).unwrap();
        let p = graph_power(&h.to_simple(), 1);
        assert!(matches!(
            check_expander_bound(&p, &est, &[0], &[5]),
            Err(Error::NonExactCertificate)
        ));
    }
}
