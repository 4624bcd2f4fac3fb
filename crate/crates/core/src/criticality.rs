//! Stability number, α-critical edges and graphs, and α-safe bridge decompositions.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{invalid, Result};
use crate::graph::{bit, bits, component_masks, Graph};

struct AlphaSolver<'a> {
    adj: &'a [u64],
    memo: HashMap<u64, u32>,
}

impl AlphaSolver<'_> {
    fn solve(&mut self, set: u64) -> u32 {
        let isolated = bits(set).filter(|&v| self.adj[v] & set == 0).fold(0, |a, v| a | bit(v));
        let rest = set & !isolated;
        let mut total = isolated.count_ones();
        if rest != 0 {
            for comp in component_masks(self.adj, rest) {
                total += self.solve_connected(comp);
            }
        }
        total
    }

    fn solve_connected(&mut self, comp: u64) -> u32 {
        if let Some(&a) = self.memo.get(&comp) {
            return a;
        }
        let mut pivot = 0;
        let mut pivot_degree = 0;
        let mut clique = true;
        for v in bits(comp) {
            let d = (self.adj[v] & comp).count_ones();
            if d > pivot_degree {
                pivot = v;
                pivot_degree = d;
            }
            clique &= self.adj[v] & comp == comp & !bit(v);
        }
        if clique {
            return 1;
        }
        let taken = 1 + self.solve(comp & !(self.adj[pivot] | bit(pivot)));
        // α(comp − v) <= |comp| − 1
        let best = if comp.count_ones() - 1 <= taken {
            taken
        } else {
            taken.max(self.solve(comp & !bit(pivot)))
        };
        self.memo.insert(comp, best);
        best
    }
}

pub(crate) fn stability_of(adj: &[u64], set: u64) -> usize {
    AlphaSolver {
        adj,
        memo: HashMap::new(),
    }
    .solve(set) as usize
}

/// α(G), the size of a maximum stable set, by branching
/// α(G) = max(α(G − v), 1 + α(G − N\[v\])) on a vertex of maximum degree.
pub fn stability_number(g: &Graph) -> usize {
    stability_of(g.rows(), g.vertex_mask())
}

/// True iff α(G − e) > α(G); false means the edge is α-safe.
pub fn is_alpha_critical_edge(g: &Graph, u: usize, v: usize) -> Result<bool> {
    let without = g.delete_edge(u, v)?;
    Ok(stability_number(&without) > stability_number(g))
}

/// True iff every edge is α-critical. Edgeless graphs qualify.
pub fn is_alpha_critical_graph(g: &Graph) -> bool {
    let alpha = stability_number(g);
    g.edges()
        .all(|(u, v)| stability_number(&g.delete_edge(u, v).expect("edge from edges()")) > alpha)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeKind {
    /// Removing the edge raises α.
    Critical,
    /// α-safe and a bridge.
    SafeBridge,
    /// α-safe and on a cycle.
    Safe,
}

/// Classifies every edge, in lexicographic edge order.
pub fn classify_edges(g: &Graph) -> Vec<((usize, usize), EdgeKind)> {
    let alpha = stability_number(g);
    let bridges = g.bridges();
    g.edges()
        .map(|(u, v)| {
            let without = g.delete_edge(u, v).expect("edge from edges()");
            let kind = if stability_number(&without) > alpha {
                EdgeKind::Critical
            } else if bridges.binary_search(&(u, v)).is_ok() {
                EdgeKind::SafeBridge
            } else {
                EdgeKind::Safe
            };
            ((u, v), kind)
        })
        .collect()
}

/// Split of a connected graph along an α-safe bridge `v1 v2`.
///
/// `g1` and `g2` are the two components of G − e, reindexed in increasing
/// original order; `v1` and `v2` index the former bridge endpoints inside them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub g1: Graph,
    pub v1: usize,
    pub g2: Graph,
    pub v2: usize,
    /// The bridge in the original labeling, smaller endpoint first.
    pub bridge: (usize, usize),
    /// Whether `g1` is α-critical. Guaranteed only when the input is extremal.
    pub g1_alpha_critical: bool,
}

impl Decomposition {
    /// Whether the decomposition is α-critical in the sense that `g1` is.
    pub fn is_alpha_critical(&self) -> bool {
        self.g1_alpha_critical
    }
}

struct Candidate {
    side: u64,
    endpoint: usize,
    other: usize,
    bridge: (usize, usize),
    form: Option<CanonicalForm>,
}

impl Candidate {
    /// Minimum order of g1, then smallest canonical form, then smallest bridge, then v1.
    fn cmp_key(&self, other: &Candidate) -> Ordering {
        self.side
            .count_ones()
            .cmp(&other.side.count_ones())
            .then_with(|| match (&self.form, &other.form) {
                (Some(a), Some(b)) => a.cmp(b),
                _ => Ordering::Equal,
            })
            .then_with(|| self.bridge.cmp(&other.bridge))
            .then_with(|| self.endpoint.cmp(&other.endpoint))
    }
}

/// Among all α-safe bridges of a connected graph, the decomposition with the
/// smallest `g1`. `None` iff there is no α-safe bridge.
pub fn find_alpha_critical_decomposition(g: &Graph) -> Result<Option<Decomposition>> {
    if !g.is_connected() {
        return Err(invalid("decomposition requires a connected graph"));
    }
    let adj = g.rows();
    let alpha = stability_number(g);
    let mut best: Option<Candidate> = None;
    for (a, b) in g.bridges() {
        let mut rows = adj.to_vec();
        rows[a] &= !bit(b);
        rows[b] &= !bit(a);
        let side_a = crate::graph::grow_component(&rows, g.vertex_mask(), bit(a));
        let side_b = g.vertex_mask() & !side_a;
        if stability_of(&rows, side_a) + stability_of(&rows, side_b) != alpha {
            continue;
        }
        for (side, endpoint, other) in [(side_a, a, b), (side_b, b, a)] {
            let g1 = g.induced(side);
            let form = canonical_form(&g1).ok();
            let cand = Candidate {
                side,
                endpoint,
                other,
                bridge: (a, b),
                form,
            };
            if best.as_ref().is_none_or(|cur| cand.cmp_key(cur) == Ordering::Less) {
                best = Some(cand);
            }
        }
    }
    Ok(best.map(|c| {
        let rest = g.vertex_mask() & !c.side;
        let index_in = |set: u64, v: usize| (set & (bit(v) - 1)).count_ones() as usize;
        let g1 = g.induced(c.side);
        let g1_alpha_critical = is_alpha_critical_graph(&g1);
        Decomposition {
            v1: index_in(c.side, c.endpoint),
            g2: g.induced(rest),
            v2: index_in(rest, c.other),
            g1,
            bridge: c.bridge,
            g1_alpha_critical,
        }
    }))
}

/// For an α-critical graph and a non-isolated vertex `v`, checks
/// α(G) = α(G − v) = α(G − N\[v\]) + 1.
pub fn check_critical_vertex_identities(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    if g.degree(v) == 0 {
        return Err(invalid(format!("vertex {v} is isolated")));
    }
    if !is_alpha_critical_graph(g) {
        return Err(invalid("graph is not alpha-critical"));
    }
    let alpha = stability_number(g);
    let minus_v = stability_number(&g.delete_vertex(v)?);
    let minus_closed = stability_number(&g.delete_closed_neighborhood(v)?);
    Ok(minus_v == alpha && minus_closed + 1 == alpha)
}

/// For a connected α-critical graph, checks that G − v stays connected for every v.
pub fn check_critical_connectivity(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(invalid("graph is not connected"));
    }
    if !is_alpha_critical_graph(g) {
        return Err(invalid("graph is not alpha-critical"));
    }
    if g.order() == 1 {
        return Ok(true);
    }
    Ok((0..g.order()).all(|v| g.delete_vertex(v).expect("vertex in range").is_connected()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{canonical_form, graph_from_code};
    use crate::generators::{generate, turan_connected_hub_edges, Family, FamilySpec};

    fn fam(family: Family, n: usize) -> Graph {
        generate(&FamilySpec::new(family, n)).unwrap()
    }

    fn fam_a(family: Family, n: usize, a: usize) -> Graph {
        generate(&FamilySpec::with_alpha(family, n, a)).unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        let adj = g.rows();
        (0..1u64 << g.order())
            .filter(|&s| bits(s).all(|v| adj[v] & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn stability_examples() {
        for n in 1..8 {
            assert_eq!(stability_number(&fam(Family::Complete, n)), 1);
        }
        assert_eq!(stability_number(&fam(Family::EmptyComplement, 6)), 6);
        assert_eq!(stability_number(&fam_a(Family::Turan, 7, 3)), 3);
        assert_eq!(stability_number(&fam(Family::Cycle, 5)), 2);
        assert_eq!(stability_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn stability_matches_brute_force_up_to_six() {
        for n in 0..=6usize {
            for code in 0..1u64 << (n * n.saturating_sub(1) / 2) {
                let g = graph_from_code(n, code).unwrap();
                let alpha = stability_number(&g);
                assert_eq!(alpha, brute_alpha(&g), "n={n} code={code}");
                if n <= 5 {
                    for (u, v) in g.edges() {
                        let a = stability_number(&g.delete_edge(u, v).unwrap());
                        assert!(a == alpha || a == alpha + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn critical_edges() {
        for n in 2..7 {
            let k = fam(Family::Complete, n);
            assert!(k.edges().all(|(u, v)| is_alpha_critical_edge(&k, u, v).unwrap()));
        }
        let c5 = fam(Family::Cycle, 5);
        assert!(c5.edges().all(|(u, v)| is_alpha_critical_edge(&c5, u, v).unwrap()));
        let tc = fam_a(Family::TuranConnected, 7, 3);
        for (u, v) in turan_connected_hub_edges(7, 3).unwrap() {
            assert!(!is_alpha_critical_edge(&tc, u, v).unwrap());
        }
        assert!(is_alpha_critical_edge(&c5, 0, 2).is_err());
    }

    #[test]
    fn critical_graphs() {
        assert!(is_alpha_critical_graph(&fam(Family::EmptyComplement, 5)));
        assert!(is_alpha_critical_graph(&fam_a(Family::Turan, 8, 3)));
        assert!(!is_alpha_critical_graph(&fam_a(Family::TuranConnected, 7, 3)));
        assert!(is_alpha_critical_graph(&fam(Family::Cycle, 7)));
        assert!(!is_alpha_critical_graph(&fam(Family::Cycle, 6)));
    }

    #[test]
    fn edge_classification() {
        let kinds = classify_edges(&fam_a(Family::TuranConnected, 7, 3));
        let safe: Vec<_> = kinds
            .iter()
            .filter(|(_, k)| *k == EdgeKind::SafeBridge)
            .map(|(e, _)| *e)
            .collect();
        assert_eq!(safe, vec![(0, 3), (0, 5)]);
        assert!(classify_edges(&fam(Family::Cycle, 6))
            .iter()
            .any(|(_, k)| *k == EdgeKind::Safe));
    }

    #[test]
    fn decomposition_of_turan_connected_7_3() {
        let g = fam_a(Family::TuranConnected, 7, 3);
        let d = find_alpha_critical_decomposition(&g).unwrap().unwrap();
        assert_eq!(d.bridge, (0, 3));
        assert_eq!(d.g1, fam(Family::Complete, 2));
        assert_eq!(d.v1, 0);
        assert_eq!(
            canonical_form(&d.g2).unwrap(),
            canonical_form(&fam_a(Family::TuranConnected, 5, 2)).unwrap()
        );
        assert_eq!(d.v2, 0);
        assert!(d.g1_alpha_critical);
        assert_eq!(stability_number(&d.g1) + stability_number(&d.g2), 3);
    }

    #[test]
    fn no_decomposition_without_safe_bridges() {
        assert!(find_alpha_critical_decomposition(&fam(Family::Cycle, 5))
            .unwrap()
            .is_none());
        for n in 1..6 {
            assert!(find_alpha_critical_decomposition(&fam(Family::Complete, n))
                .unwrap()
                .is_none());
        }
        let disconnected = fam(Family::EmptyComplement, 2);
        assert!(find_alpha_critical_decomposition(&disconnected).is_err());
    }

    #[test]
    fn critical_identities_on_named_graphs() {
        for g in [
            fam(Family::Cycle, 7),
            fam(Family::Complete, 4),
            fam_a(Family::Turan, 6, 2),
        ] {
            for v in 0..g.order() {
                assert!(check_critical_vertex_identities(&g, v).unwrap());
            }
        }
        for g in [fam(Family::Cycle, 5), fam(Family::Complete, 6), fam(Family::Cycle, 9)] {
            assert!(check_critical_connectivity(&g).unwrap());
        }
        let tc = fam_a(Family::TuranConnected, 7, 3);
        assert!(check_critical_vertex_identities(&tc, 0).is_err());
        assert!(check_critical_connectivity(&tc).is_err());
        let t = fam_a(Family::Turan, 5, 5);
        assert!(check_critical_vertex_identities(&t, 0).is_err());
        assert!(check_critical_connectivity(&fam_a(Family::Turan, 6, 2)).is_err());
    }
}
