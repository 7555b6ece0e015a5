//! Randomized invariants over small graphs and graph pairs.

#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;

use tensorcc::closed_forms::{
    cc_lower_bound, cc_upper_bound_check, product_global_cc, product_global_cc_exact,
    product_global_cc_pointwise, product_local_cc, Relation, TOLERANCE,
};
use tensorcc::exact::to_f64;
use tensorcc::generators::erdos_renyi;
use tensorcc::io::{read_edge_list, write_edge_list};
use tensorcc::product::{product_degree, tensor_product, PairEncoding};
use tensorcc::triangles::{
    global_cc, global_cc_exact, is_triangle_free, local_cc, oracle_triangles, triangles_per_vertex,
};
use tensorcc::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=n * (n - 1) / 2 + 1).prop_map(move |pairs| {
            Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degree_sum_is_twice_edges(g in graph(14)) {
        prop_assert_eq!(g.degrees().sum::<usize>(), 2 * g.edge_count());
        for v in 0..g.n() {
            prop_assert_eq!(g.neighbors(v).unwrap().len(), g.degree(v).unwrap());
        }
        prop_assert!(g.validate().is_ok());
    }

    #[test]
    fn from_edges_ignores_order_and_orientation(
        g in graph(12),
        flips in prop::collection::vec(any::<bool>(), 80),
        seed in any::<u64>(),
    ) {
        let mut edges: Vec<_> = g
            .edges()
            .zip(flips.iter().cycle())
            .map(|((u, v), &f)| if f { (v, u) } else { (u, v) })
            .collect();
        // Deterministic shuffle plus a duplicated prefix.
        let k = edges.len();
        if k > 0 {
            edges.rotate_left((seed as usize) % k);
            let dup: Vec<_> = edges.iter().take(3).map(|&(u, v)| (v, u)).collect();
            edges.extend(dup);
        }
        prop_assert_eq!(Graph::from_edges(g.n(), edges).unwrap(), g);
    }

    #[test]
    fn neighborhood_min_degree_bounds(g in graph(12)) {
        for v in 0..g.n() {
            let d = g.degree(v).unwrap();
            if d >= 1 {
                let m = g.neighborhood_min_degree(v).unwrap();
                prop_assert!(m < d);
            }
        }
        if g.min_degree().unwrap() >= 1 {
            prop_assert!(g.sigma().unwrap() < g.min_degree().unwrap());
        }
    }

    #[test]
    fn merge_kernel_matches_oracle(g in graph(16)) {
        let t = triangles_per_vertex(&g);
        for v in 0..g.n() {
            prop_assert_eq!(t[v], oracle_triangles(&g, v).unwrap());
        }
        prop_assert_eq!(t.iter().sum::<u64>() % 3, 0);
    }

    #[test]
    fn local_cc_is_one_exactly_on_complete_neighborhoods(g in graph(12)) {
        for v in 0..g.n() {
            let c = local_cc(&g, v).unwrap();
            prop_assert!((0.0..=1.0).contains(&c));
            let nv = g.neighbors(v).unwrap();
            let complete = nv.len() >= 2
                && nv.iter().all(|&a| nv.iter().all(|&b| a == b || g.has_edge(a, b)));
            prop_assert_eq!(c == 1.0, complete);
        }
        let gc = global_cc(&g).unwrap();
        prop_assert!((0.0..=1.0).contains(&gc));
    }

    #[test]
    fn relabeling_permutes_local_cc(
        (g, perm) in graph(12).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })
    ) {
        let r = g.relabel(&perm).unwrap();
        prop_assert_eq!(global_cc_exact(&g).unwrap(), global_cc_exact(&r).unwrap());
        prop_assert!((global_cc(&g).unwrap() - global_cc(&r).unwrap()).abs() <= TOLERANCE);
        for v in 0..g.n() {
            prop_assert_eq!(local_cc(&g, v).unwrap(), local_cc(&r, perm[v]).unwrap());
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph(14)) {
        prop_assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap().graph, g);
    }

    #[test]
    fn edge_list_ignores_line_endings_and_spacing(g in graph(10)) {
        let text = write_edge_list(&g).replace('\n', "\r\n").replace(' ', " \t ");
        prop_assert_eq!(read_edge_list(&text).unwrap().graph, g);
    }

    #[test]
    fn erdos_renyi_is_reproducible(n in 1usize..30, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = erdos_renyi(n, p, seed).unwrap();
        prop_assert_eq!(&g, &erdos_renyi(n, p, seed).unwrap());
        prop_assert!(g.validate().is_ok());
    }

    #[test]
    fn pair_encoding_is_a_bijection(ng in 1usize..20, nh in 1usize..20) {
        let enc = PairEncoding::new(ng, nh);
        let mut seen = vec![false; ng * nh];
        for u in 0..ng {
            for v in 0..nh {
                let p = enc.encode(u, v).unwrap();
                prop_assert!(!seen[p.encoded]);
                seen[p.encoded] = true;
                prop_assert_eq!(enc.decode(p.encoded).unwrap(), p);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn product_structure(g in graph(8), h in graph(8)) {
        let p = tensor_product(&g, &h).unwrap();
        prop_assert!(p.validate().is_ok());
        prop_assert_eq!(p.edge_count(), 2 * g.edge_count() * h.edge_count());
        let enc = PairEncoding::new(g.n(), h.n());
        for u in 0..g.n() {
            for v in 0..h.n() {
                let x = enc.encode(u, v).unwrap().encoded;
                prop_assert_eq!(p.degree(x).unwrap(), product_degree(&g, &h, u, v).unwrap());
            }
        }
        if is_triangle_free(&g) || is_triangle_free(&h) {
            prop_assert!(is_triangle_free(&p));
        }
        let q = tensor_product(&h, &g).unwrap();
        prop_assert_eq!(global_cc_exact(&p).unwrap(), global_cc_exact(&q).unwrap());
    }

    #[test]
    fn closed_forms_match_materialized_product(g in graph(8), h in graph(8)) {
        let p = tensor_product(&g, &h).unwrap();
        let tg = triangles_per_vertex(&g);
        let th = triangles_per_vertex(&h);
        let enc = PairEncoding::new(g.n(), h.n());
        for u in 0..g.n() {
            for v in 0..h.n() {
                let x = enc.encode(u, v).unwrap().encoded;
                prop_assert_eq!(oracle_triangles(&p, x).unwrap(), 2 * tg[u] * th[v]);
                let implicit = product_local_cc(&g, &h, u, v).unwrap();
                prop_assert!((implicit - local_cc(&p, x).unwrap()).abs() <= TOLERANCE);
            }
        }
        let explicit = global_cc(&p).unwrap();
        prop_assert!((product_global_cc(&g, &h).unwrap() - explicit).abs() <= TOLERANCE);
        prop_assert!((product_global_cc_pointwise(&g, &h).unwrap() - explicit).abs() <= TOLERANCE);
        let exact = product_global_cc_exact(&g, &h).unwrap();
        prop_assert_eq!(&exact, &global_cc_exact(&p).unwrap());
        prop_assert!((to_f64(&exact) - explicit).abs() <= TOLERANCE);
    }

    #[test]
    fn bounds_hold(g in graph(9), h in graph(9)) {
        let up = cc_upper_bound_check(&g, &h).unwrap();
        // The comparison holds even without the minimum-degree hypothesis.
        prop_assert!(up.holds);
        prop_assert!(up.relation != Relation::Above);
        if up.applicable {
            prop_assert!(up.classification_ok());
        }
        if let Some(lb) = cc_lower_bound(&g, &h).unwrap() {
            prop_assert!(up.implicit_exact >= lb.bound_exact);
        }
    }
}
