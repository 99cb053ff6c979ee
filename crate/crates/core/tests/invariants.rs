//! Cross-module property tests.

use comparability_core::*;
use proptest::prelude::*;

/// Random pair list oriented by a permutation, so closure always succeeds.
fn acyclic_pairs(n: usize) -> impl Strategy<Value = Vec<(u32, u32)>> {
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .collect();
    proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_always_validates(pairs in acyclic_pairs(12)) {
        let p = StrictOrder::transitive_closure(12, &pairs).unwrap();
        prop_assert!(p.validate().ok());
        prop_assert!(check_partial_order(12, &p.pairs().collect::<Vec<_>>()).ok());
    }

    #[test]
    fn product_of_mirsky_colorings_is_proper_for_the_union(
        p1 in acyclic_pairs(10),
        p2 in acyclic_pairs(10),
    ) {
        let a = StrictOrder::transitive_closure(10, &p1).unwrap();
        let b = StrictOrder::transitive_closure(10, &p2).unwrap();
        let ca = mirsky_coloring(&a);
        let cb = mirsky_coloring(&b);
        prop_assert!(ca.is_proper_for(&comparability_graph(&a)));
        prop_assert!(cb.is_proper_for(&comparability_graph(&b)));
        let union = union_graphs(&[a, b]).unwrap().to_simple();
        let prod = product_coloring(&[ca.clone(), cb.clone()]).unwrap();
        prop_assert!(prod.is_proper_for(&union));
        prop_assert!(prod.palette_size() <= ca.palette_size() * cb.palette_size());
    }

    #[test]
    fn extraction_is_homogeneous_and_large_enough(
        p1 in acyclic_pairs(14),
        p2 in acyclic_pairs(14),
        p3 in acyclic_pairs(14),
    ) {
        let orders = vec![
            StrictOrder::transitive_closure(14, &p1).unwrap(),
            StrictOrder::transitive_closure(14, &p2).unwrap(),
            StrictOrder::transitive_closure(14, &p3).unwrap(),
        ];
        let set = extract_homogeneous(&orders).unwrap();
        let g = union_graphs(&orders).unwrap().to_simple();
        prop_assert!(set.verify(&g));
        prop_assert!(set.vertices.len() as f64 + 1e-9 >= guaranteed_homogeneous_size(14, 3));
    }

    #[test]
    fn grid_union_labels_match_comparators(
        a in 1usize..=3,
        b in 1usize..=3,
        seed in 0u64..1000,
    ) {
        let gc = GridConstruction::build(GridParams::new(a, b, seed).unwrap());
        let union = gc.union_graph();
        let n = gc.n() as u32;
        for v in 0..n {
            for w in v + 1..n {
                let mut mask = 0u32;
                if gc.less1(v, w) || gc.less1(w, v) { mask |= 1; }
                if gc.less2(v, w) || gc.less2(w, v) { mask |= 2; }
                prop_assert_eq!(union.labels(v, w).unwrap_or(0), mask);
            }
        }
    }

    #[test]
    fn separations_always_separate(
        points in prop::collection::vec(
            prop::collection::vec(-50.0f64..50.0, 3),
            2..=20,
        ),
        normal_pick in 0usize..4,
    ) {
        let m = points.len() / 2;
        let a: Vec<Vec<f64>> = points[..m].to_vec();
        let b: Vec<Vec<f64>> = points[m..2 * m].to_vec();
        let normal = match normal_pick {
            0 => vec![1.0, 0.0, 0.0],
            1 => vec![1.0, -1.0, 0.0],
            2 => vec![1.0, 1.0, 0.0],
            _ => vec![0.5, 0.25, -1.0],
        };
        let sep = separate_halves(&a, &b, &normal).unwrap();
        let dot = |p: &[f64]| -> f64 { p.iter().zip(&normal).map(|(x, y)| x * y).sum() };
        prop_assert_eq!(sep.first.len(), (m + 1) / 2);
        prop_assert_eq!(sep.second.len(), (m + 1) / 2);
        match sep.lower {
            Side::First => {
                for &i in &sep.first { prop_assert!(dot(&a[i]) <= sep.threshold); }
                for &j in &sep.second { prop_assert!(dot(&b[j]) >= sep.threshold); }
            }
            Side::Second => {
                for &j in &sep.second { prop_assert!(dot(&b[j]) <= sep.threshold); }
                for &i in &sep.first { prop_assert!(dot(&a[i]) >= sep.threshold); }
            }
        }
    }

    #[test]
    fn comparable_subsets_dominate_on_integer_ranks(
        xs in prop::collection::vec(prop::collection::vec(1i64..=6, 2), 1..=24),
        ys_seed in 0u64..500,
    ) {
        let m = xs.len();
        // Second multiset: deterministic variation of the first.
        let ys: Vec<Vec<i64>> = xs
            .iter()
            .enumerate()
            .map(|(i, p)| {
                p.iter()
                    .map(|&c| 1 + (c + i as i64 + ys_seed as i64) % 6)
                    .collect()
            })
            .collect();
        let xf: Vec<Vec<f64>> = xs.iter().map(|p| p.iter().map(|&c| c as f64).collect()).collect();
        let yf: Vec<Vec<f64>> = ys.iter().map(|p| p.iter().map(|&c| c as f64).collect()).collect();
        let got = comparable_subsets(&xf, &yf).unwrap();
        prop_assert!(got.first.len() as f64 + 1e-9 >= m as f64 * 2f64.powi(-4));
        for &i in &got.first {
            for &j in &got.second {
                let (lo, hi) = if got.forward { (&xf[i], &yf[j]) } else { (&yf[j], &xf[i]) };
                prop_assert!(axis_le(got.axis, lo, hi).unwrap());
            }
        }
    }
}
