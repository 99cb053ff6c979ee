//! Halving separations by hyperplane translates.
//!
//! Given two equal-size multisets of points, a translate of any hyperplane
//! can separate half of one from half of the other. Applying this to the
//! difference and sum hyperplanes of every coordinate pair leaves subsets of
//! size at least m * 2^(-r^2) in which one multiset dominates the other
//! toward a single axis.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ranked::axis_le;

/// Which input multiset took the lower halfspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    First,
    Second,
}

/// Result of one halving separation. `first` and `second` index into the
/// input multisets; every selected point of the lower side projects to at
/// most `threshold`, every selected point of the upper side to at least
/// `threshold`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Separation {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub threshold: f64,
    pub lower: Side,
}

/// Separates ceil(m/2) points of `a` from ceil(m/2) points of `b` by a
/// translate of the hyperplane orthogonal to `normal`.
///
/// The threshold is the smallest value at which either multiset accumulates
/// ceil(m/2) projections; that multiset takes the lower halfspace (ties go
/// to `a`). Boundary points are assigned deterministically by
/// (projection, index) order, the lower side keeping the smallest and the
/// upper side the largest.
pub fn separate_halves(a: &[Vec<f64>], b: &[Vec<f64>], normal: &[f64]) -> Result<Separation> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::EmptyInput);
    }
    if normal.iter().all(|&c| c == 0.0) {
        return Err(Error::ZeroNormal);
    }
    let dim = normal.len();
    for p in a.iter().chain(b) {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                left: p.len(),
                right: dim,
            });
        }
        if !p.iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidParameter("points must be finite".into()));
        }
    }

    let project = |points: &[Vec<f64>]| -> Vec<(f64, usize)> {
        let mut ps: Vec<(f64, usize)> = points
            .iter()
            .enumerate()
            .map(|(i, p)| (dot(normal, p), i))
            .collect();
        ps.sort_by(|x, y| x.partial_cmp(y).expect("finite projections"));
        ps
    };
    let pa = project(a);
    let pb = project(b);

    let m = a.len();
    let take = m.div_ceil(2);
    let ta = pa[take - 1].0;
    let tb = pb[take - 1].0;
    let (lower, threshold) = if ta <= tb {
        (Side::First, ta)
    } else {
        (Side::Second, tb)
    };

    let select_low = |ps: &[(f64, usize)]| ps[..take].iter().map(|&(_, i)| i).collect::<Vec<_>>();
    let select_high = |ps: &[(f64, usize)]| ps[m - take..].iter().map(|&(_, i)| i).collect::<Vec<_>>();

    let (first, second) = match lower {
        Side::First => (select_low(&pa), select_high(&pb)),
        Side::Second => (select_high(&pa), select_low(&pb)),
    };
    Ok(Separation {
        first,
        second,
        threshold,
        lower,
    })
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Comparable subsets extracted by repeated halving. Indices refer to the
/// input multisets; `forward` means the ranks behind `first` all dominate
/// toward `axis` below the ranks behind `second` (otherwise the reverse).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparableSubsets {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub axis: usize,
    pub forward: bool,
}

/// Shrinks two equal-size rank multisets to subsets of at least
/// m * 2^(-r^2) points each such that one wholly dominates the other toward
/// some axis.
///
/// One halving separation runs per hyperplane x_i - x_j = t and
/// x_i + x_j = t over coordinate pairs i < j; for r = 1, where no pairs
/// exist, a single separation along the only coordinate is used instead.
/// The dominating (axis, direction) is then found by checking each
/// candidate against every surviving pair; the separations guarantee one
/// exists.
pub fn comparable_subsets(x: &[Vec<f64>], y: &[Vec<f64>]) -> Result<ComparableSubsets> {
    if x.len() != y.len() {
        return Err(Error::SizeMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let dims = x[0].len();
    if dims == 0 {
        return Err(Error::EmptyInput);
    }

    let mut normals: Vec<Vec<f64>> = Vec::new();
    if dims == 1 {
        normals.push(vec![1.0]);
    } else {
        for i in 0..dims {
            for j in i + 1..dims {
                let mut diff = vec![0.0; dims];
                diff[i] = 1.0;
                diff[j] = -1.0;
                normals.push(diff);
                let mut sum = vec![0.0; dims];
                sum[i] = 1.0;
                sum[j] = 1.0;
                normals.push(sum);
            }
        }
    }

    let mut xi: Vec<usize> = (0..x.len()).collect();
    let mut yi: Vec<usize> = (0..y.len()).collect();
    for normal in &normals {
        let xs: Vec<Vec<f64>> = xi.iter().map(|&i| x[i].clone()).collect();
        let ys: Vec<Vec<f64>> = yi.iter().map(|&i| y[i].clone()).collect();
        let sep = separate_halves(&xs, &ys, normal)?;
        xi = sep.first.iter().map(|&i| xi[i]).collect();
        yi = sep.second.iter().map(|&i| yi[i]).collect();
    }
    xi.sort_unstable();
    yi.sort_unstable();

    for axis in 0..dims {
        for forward in [true, false] {
            let ok = xi.iter().all(|&i| {
                yi.iter().all(|&j| {
                    let (lo, hi) = if forward { (&x[i], &y[j]) } else { (&y[j], &x[i]) };
                    axis_le(axis, lo, hi).unwrap_or(false)
                })
            });
            if ok {
                return Ok(ComparableSubsets {
                    first: xi,
                    second: yi,
                    axis,
                    forward,
                });
            }
        }
    }
    Err(Error::InvalidParameter(
        "no dominating axis found; inputs are numerically degenerate".into(),
    ))
}
