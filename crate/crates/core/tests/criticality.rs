use fibindex::bounds::GraphClass;
use fibindex::canon::graph_from_code;
use fibindex::criticality::{classify_edges, EdgeKind};
use fibindex::search::build_extremal_report;
use fibindex::{
    check_critical_connectivity, check_critical_vertex_identities, enumerate_graphs, find_alpha_critical_decomposition,
    generate, is_alpha_critical_edge, is_alpha_critical_graph, stability_number, Family, FamilySpec, Graph,
};

/// Largest stable set by checking every subset.
fn alpha_oracle(g: &Graph) -> usize {
    let n = g.order();
    (0..1u64 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || g.neighbors(v) & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

#[test]
fn stability_number_matches_subset_search() {
    for n in 0..=6usize {
        for code in 0..1u64 << (n * n.saturating_sub(1) / 2) {
            let g = graph_from_code(n, code).unwrap();
            assert_eq!(stability_number(&g), alpha_oracle(&g), "n = {n}, code = {code}");
        }
    }
}

#[test]
fn critical_edges_match_oracle() {
    for n in 2..=5usize {
        for code in 0..1u64 << (n * (n - 1) / 2) {
            let g = graph_from_code(n, code).unwrap();
            let alpha = alpha_oracle(&g);
            for (u, v) in g.edges() {
                let after = alpha_oracle(&g.delete_edge(u, v).unwrap());
                assert_eq!(is_alpha_critical_edge(&g, u, v).unwrap(), after > alpha);
            }
        }
    }
}

#[test]
fn non_edges_are_rejected() {
    let g = generate(&FamilySpec::new(Family::Path, 4)).unwrap();
    assert!(is_alpha_critical_edge(&g, 0, 2).is_err());
    assert!(is_alpha_critical_edge(&g, 0, 9).is_err());
}

/// Connected α-critical graphs at n ≤ 6 satisfy the vertex identities and stay
/// connected after deleting any vertex; a max-degree vertex has Δ + 1 ≥ ⌈n/α⌉.
#[test]
fn critical_graphs_from_the_scan() {
    let mut checked = 0;
    for n in 1..=6 {
        for g in enumerate_graphs(n, false).unwrap() {
            if !is_alpha_critical_graph(&g) {
                continue;
            }
            checked += 1;
            for v in (0..n).filter(|&v| g.degree(v) > 0) {
                assert!(check_critical_vertex_identities(&g, v).unwrap());
            }
            if g.is_connected() {
                assert!(check_critical_connectivity(&g).unwrap());
                let alpha = stability_number(&g);
                assert!(g.max_degree() + 1 >= n.div_ceil(alpha));
            }
        }
    }
    assert!(checked > 20);
}

#[test]
fn precondition_violations_are_errors() {
    let p4 = generate(&FamilySpec::new(Family::Path, 4)).unwrap();
    assert!(check_critical_connectivity(&p4).is_err());
    assert!(check_critical_vertex_identities(&p4, 1).is_err());
    let k3_plus_point = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2)]).unwrap();
    assert!(check_critical_vertex_identities(&k3_plus_point, 3).is_err());
    assert!(check_critical_connectivity(&k3_plus_point).is_err());
}

#[test]
fn extremal_connected_graphs_have_only_critical_edges_and_safe_bridges() {
    for n in 2..=6 {
        let report = build_extremal_report(n, GraphClass::Connected).unwrap();
        for rec in &report.records {
            for form in &rec.maximizers {
                let g = form.to_graph();
                for (e, kind) in classify_edges(&g) {
                    assert_ne!(kind, EdgeKind::Safe, "{form}: edge {e:?}");
                }
                if let Some(d) = find_alpha_critical_decomposition(&g).unwrap() {
                    assert!(d.is_alpha_critical(), "{form}");
                    assert_eq!(d.g1.order() + d.g2.order(), n);
                    assert_eq!(stability_number(&d.g1) + stability_number(&d.g2), rec.alpha);
                }
            }
        }
    }
}

#[test]
fn decomposition_of_turan_connected() {
    let tc = generate(&FamilySpec::with_alpha(Family::TuranConnected, 7, 3)).unwrap();
    let d = find_alpha_critical_decomposition(&tc).unwrap().unwrap();
    assert_eq!(d.bridge, (0, 3));
    assert_eq!(d.g1.order(), 2);
    assert!(d.g1.is_complete());
    let tc52 = generate(&FamilySpec::with_alpha(Family::TuranConnected, 5, 2)).unwrap();
    assert_eq!(
        fibindex::canonical_form(&d.g2).unwrap(),
        fibindex::canonical_form(&tc52).unwrap()
    );
    assert_eq!((d.v1, d.v2), (0, 0));

    let k4 = generate(&FamilySpec::new(Family::Complete, 4)).unwrap();
    assert!(find_alpha_critical_decomposition(&k4).unwrap().is_none());
    let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert!(find_alpha_critical_decomposition(&split).is_err());
}

#[test]
fn general_maximizers_are_alpha_critical() {
    for n in 1..=7 {
        let report = build_extremal_report(n, GraphClass::General).unwrap();
        for rec in &report.records {
            for form in &rec.maximizers {
                assert!(is_alpha_critical_graph(&form.to_graph()), "{form}");
            }
        }
    }
}
