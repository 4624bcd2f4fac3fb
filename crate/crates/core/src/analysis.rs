//! Everything the front ends print about a single graph.

use serde::{Deserialize, Serialize};

use crate::bounds::{check_bounds, BoundReport, GraphClass};
use crate::canon::{canonical_form, CanonicalForm, CANONICAL_LIMIT};
use crate::count::BigCount;
use crate::counting::fibonacci_index;
use crate::criticality::{is_alpha_critical_graph, stability_number};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub n: usize,
    pub m: usize,
    /// The graph in edge-list format, so the analysis can be recomputed.
    pub edge_list: String,
    pub alpha: usize,
    pub fib: BigCount,
    pub alpha_critical: bool,
    pub connected: bool,
    pub tree: bool,
    /// Present for orders within the canonical-form limit.
    pub canonical_form: Option<CanonicalForm>,
    /// One report per class the graph belongs to: general, then connected, then tree.
    pub bounds: Vec<BoundReport>,
}

impl Analysis {
    pub fn of(g: &Graph) -> Result<Self> {
        let connected = g.is_connected();
        let tree = g.is_tree();
        let mut bounds = Vec::new();
        if g.order() > 0 {
            for class in [GraphClass::General, GraphClass::Connected, GraphClass::Tree] {
                if class.contains(g) {
                    bounds.push(check_bounds(g, class)?);
                }
            }
        }
        Ok(Analysis {
            n: g.order(),
            m: g.size(),
            edge_list: g.to_edge_list(),
            alpha: stability_number(g),
            fib: fibonacci_index(g),
            alpha_critical: is_alpha_critical_graph(g),
            connected,
            tree,
            canonical_form: if g.order() <= CANONICAL_LIMIT {
                Some(canonical_form(g)?)
            } else {
                None
            },
            bounds,
        })
    }

    pub fn bound(&self, class: GraphClass) -> Option<&BoundReport> {
        self.bounds.iter().find(|b| b.graph_class == class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};

    fn analyze(spec: &str) -> Analysis {
        Analysis::of(&generate(&spec.parse::<FamilySpec>().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn classes_follow_structure() {
        let t = analyze("turan:n=7,alpha=3");
        assert_eq!(t.bounds.len(), 1);
        assert!(t.alpha_critical && t.bound(GraphClass::General).unwrap().upper_tight);
        let c = analyze("cycle:n=5");
        assert_eq!(c.bounds.len(), 2);
        assert!(c.bound(GraphClass::Connected).unwrap().upper_tight);
        let s = analyze("star:n=7");
        assert_eq!((s.fib.clone(), s.alpha, s.bounds.len()), (BigCount::from(65u64), 6, 3));
        let empty = Analysis::of(&Graph::empty(0).unwrap()).unwrap();
        assert!(empty.bounds.is_empty());
        assert_eq!(empty.fib, 1u64);
    }
}
