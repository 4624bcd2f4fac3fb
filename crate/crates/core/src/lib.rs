//! Exact stable-set counting for small graphs.
//!
//! The Fibonacci index F(G) of a graph is the number of its stable sets,
//! the empty set included. This crate computes it exactly, together with the
//! stability number α(G), α-criticality of edges and graphs, the extremal
//! values of F over graphs of fixed order and stability number, and an
//! exhaustive search that checks which graphs attain them.
//!
//! ```
//! use fibindex::{fibonacci_index, generate, FamilySpec};
//!
//! let spec: FamilySpec = "turan:n=7,alpha=3".parse().unwrap();
//! let g = generate(&spec).unwrap();
//! assert_eq!(fibonacci_index(&g).to_string(), "36");
//! ```

pub mod analysis;
pub mod bounds;
pub mod canon;
pub mod count;
pub mod counting;
pub mod criticality;
pub mod error;
pub mod generators;
pub mod graph;
pub mod search;

pub use analysis::Analysis;
pub use bounds::{
    check_bounds, f_tree_closed, f_turan_closed, f_turan_connected, f_turan_recursive, lower_bound, BoundReport,
    GraphClass,
};
pub use canon::{canonical_form, CanonicalForm, CANONICAL_LIMIT};
pub use count::BigCount;
pub use counting::{
    fibonacci_index, fibonacci_index_naive, fibonacci_index_with_stats, fibonacci_of_path_closed, CountStats,
};
pub use criticality::{
    check_critical_connectivity, check_critical_vertex_identities, find_alpha_critical_decomposition,
    is_alpha_critical_edge, is_alpha_critical_graph, stability_number, Decomposition,
};
pub use error::{Error, Result};
pub use generators::{family_identities_check, generate, random_graph, Family, FamilySpec};
pub use graph::{Graph, MAX_VERTICES};
pub use search::{
    build_extremal_report, counterexample_size_vs_fib, enumerate_graphs, verify_theorems, ExtremalReport,
    VerificationVerdict,
};
