mod common;

use avgconn::connectivity::{all_pairs_connectivity, ConnectivityProfile};
use avgconn::graph::{parse_graph6, write_graph6, ConnectedGraphs};
use avgconn::harness::analyze;
use avgconn::matching::maximum_matching;
use avgconn::spectral::{
    dominance_holds, eigen_symmetric, gershgorin_bound, perron_vector, rayleigh_quotient,
    spectral_radius_default, SymmetricMatrix,
};
use avgconn::Graph;
use common::{kappa_by_cuts, lambda_max};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn rows_of(m: &SymmetricMatrix) -> Vec<Vec<f64>> {
    (0..m.order()).map(|i| m.row(i).to_vec()).collect()
}

#[test]
fn jacobi_matches_nalgebra_on_every_small_graph() {
    let mut checked = 0;
    for n in 2..=6 {
        for g in ConnectedGraphs::new(n).unwrap() {
            let a = ConnectivityProfile::compute(&g).unwrap().matrix();
            let ours = eigen_symmetric(&a).unwrap().lambda_max();
            let theirs = lambda_max(&rows_of(&a));
            assert!((ours - theirs).abs() < 1e-12, "{g:?}: {ours} vs {theirs}");
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 4 + 38 + 728 + 26704);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn eigen_routes_agree(g in graph_strategy(9)) {
        prop_assume!(g.is_connected());
        let a = ConnectivityProfile::compute(&g).unwrap().matrix();
        let jac = eigen_symmetric(&a).unwrap().lambda_max();
        let pow = spectral_radius_default(&a).unwrap();
        let reference = lambda_max(&rows_of(&a));
        prop_assert!((jac - reference).abs() < 1e-12);
        prop_assert!((pow - reference).abs() < 1e-9);
        prop_assert!(gershgorin_bound(&a) >= reference - 1e-12);
        let x = perron_vector(&a).unwrap();
        prop_assert!(x.iter().all(|&xi| xi > 0.0));
        prop_assert!((rayleigh_quotient(&a, &x).unwrap() - reference).abs() < 1e-9);
        let ones = vec![1.0; g.order()];
        prop_assert!(rayleigh_quotient(&a, &ones).unwrap() <= reference + 1e-12);
    }

    #[test]
    fn transmissions_lie_between_degree_and_connectivity(g in graph_strategy(9)) {
        prop_assume!(g.is_connected());
        let p = ConnectivityProfile::compute(&g).unwrap();
        let n = g.order();
        let min_kappa = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| p.kappa.get(u, v))
            .min()
            .unwrap();
        for v in 0..n {
            let t = p.transmissions[v];
            prop_assert!(2.0 * min_kappa as f64 / n as f64 <= t + 1e-12);
            prop_assert!(t <= 2.0 * g.degree(v) as f64 / n as f64 + 1e-12);
        }
    }

    #[test]
    fn flow_matches_cuts_on_larger_graphs(g in graph_strategy(9)) {
        let k = all_pairs_connectivity(&g).unwrap();
        let n = g.order();
        for u in 0..n {
            for v in u + 1..n {
                prop_assert_eq!(k.get(u, v), kappa_by_cuts(&g, u, v));
            }
        }
    }

    #[test]
    fn adding_an_edge_dominates(g in graph_strategy(8), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.is_connected() && !g.is_complete());
        let n = g.order();
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        let (u, v) = missing[pick.index(missing.len())];
        let mut edges = g.edges();
        edges.push((u, v));
        let h = Graph::new(n, &edges).unwrap();
        let a = ConnectivityProfile::compute(&g).unwrap().matrix();
        let b = ConnectivityProfile::compute(&h).unwrap().matrix();
        prop_assert!(dominance_holds(&b, &a).unwrap());
        let (ra, rb) = (analyze(&g).unwrap().rho, analyze(&h).unwrap().rho);
        prop_assert!(rb >= ra - 1e-12);
        prop_assert!(maximum_matching(&h).alpha_prime >= maximum_matching(&g).alpha_prime);
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        let text = write_graph6(&g).unwrap();
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn reports_hold_every_bound(g in graph_strategy(9)) {
        prop_assume!(g.is_connected());
        let r = analyze(&g).unwrap();
        prop_assert!(r.violations().is_empty(), "{}", r.to_json());
        prop_assert_eq!(r.to_json(), analyze(&g).unwrap().to_json());
    }
}
