//! WebAssembly bindings behind the browser demo in `www/`.
//!
//! Every export takes and returns strings; results are JSON documents and
//! errors come back as thrown JavaScript strings.

use fibindex::bounds::upper_bound;
use fibindex::criticality::{classify_edges, EdgeKind};
use fibindex::search::{build_extremal_report, feasible_alphas};
use fibindex::{
    f_turan_closed, f_turan_connected, generate, lower_bound, Analysis, BigCount, FamilySpec, Graph, GraphClass,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest order the demo analyzes.
pub const ANALYZE_LIMIT: usize = 40;
/// Largest order of the in-browser exhaustive search.
pub const SEARCH_LIMIT: usize = 7;
/// Largest order for the bound curves.
pub const CURVE_LIMIT: usize = 60;

#[derive(Serialize)]
struct DrawnEdge {
    u: usize,
    v: usize,
    kind: &'static str,
}

#[derive(Serialize)]
struct AnalyzeOutput {
    #[serde(flatten)]
    analysis: Analysis,
    edges: Vec<DrawnEdge>,
}

#[derive(Serialize)]
struct CurvePoint {
    alpha: usize,
    lower: BigCount,
    turan: BigCount,
    turan_connected: Option<BigCount>,
}

fn parse_input(input: &str) -> Result<Graph, String> {
    let trimmed = input.trim();
    let g = if trimmed.contains(':') {
        trimmed.parse::<FamilySpec>().and_then(|spec| generate(&spec))
    } else {
        Graph::parse_edge_list(&format!("{trimmed}\n"))
    }
    .map_err(|e| e.to_string())?;
    if g.order() > ANALYZE_LIMIT {
        return Err(format!(
            "the demo analyzes graphs with at most {ANALYZE_LIMIT} vertices"
        ));
    }
    Ok(g)
}

fn kind_name(kind: EdgeKind) -> &'static str {
    match kind {
        EdgeKind::Critical => "critical",
        EdgeKind::SafeBridge => "safe-bridge",
        EdgeKind::Safe => "safe",
    }
}

/// Analysis of a generator spec (`cycle:n=5`) or an edge list, plus every edge
/// classified as critical, safe bridge or safe.
pub fn analyze_json(input: &str) -> Result<String, String> {
    let g = parse_input(input)?;
    let analysis = Analysis::of(&g).map_err(|e| e.to_string())?;
    let edges = classify_edges(&g)
        .into_iter()
        .map(|((u, v), kind)| DrawnEdge {
            u,
            v,
            kind: kind_name(kind),
        })
        .collect();
    Ok(serde_json::to_string(&AnalyzeOutput { analysis, edges }).expect("serializable"))
}

/// Lower bound, f_T and f_TC for every α at order `n`.
pub fn bound_curves_json(n: usize) -> Result<String, String> {
    if !(1..=CURVE_LIMIT).contains(&n) {
        return Err(format!("n must be between 1 and {CURVE_LIMIT}"));
    }
    let points: Vec<CurvePoint> = (1..=n)
        .map(|alpha| CurvePoint {
            alpha,
            lower: lower_bound(n, alpha).expect("alpha in range"),
            turan: f_turan_closed(n, alpha).expect("alpha in range"),
            turan_connected: f_turan_connected(n, alpha).ok(),
        })
        .collect();
    Ok(serde_json::to_string(&points).expect("serializable"))
}

#[derive(Serialize)]
struct ExtremalRow {
    alpha: usize,
    graph_count: usize,
    min_fib: BigCount,
    max_fib: BigCount,
    upper: BigCount,
    minimizers: Vec<String>,
    maximizers: Vec<String>,
}

/// Extremal values and graphs per α over all graphs (or connected graphs) of order `n`.
pub fn extremal_json(n: usize, class: &str) -> Result<String, String> {
    let class: GraphClass = class.parse().map_err(|e: fibindex::Error| e.to_string())?;
    if class == GraphClass::Tree {
        return Err("search covers the general and connected classes".into());
    }
    if !(1..=SEARCH_LIMIT).contains(&n) {
        return Err(format!("n must be between 1 and {SEARCH_LIMIT}"));
    }
    let report = build_extremal_report(n, class).map_err(|e| e.to_string())?;
    let rows: Vec<ExtremalRow> = feasible_alphas(class, n)
        .filter_map(|alpha| report.record(alpha))
        .map(|rec| ExtremalRow {
            alpha: rec.alpha,
            graph_count: rec.graph_count,
            min_fib: rec.min_fib.clone(),
            max_fib: rec.max_fib.clone(),
            upper: upper_bound(class, n, rec.alpha).expect("feasible alpha"),
            minimizers: rec.minimizers.iter().map(|f| f.to_graph().to_edge_list()).collect(),
            maximizers: rec.maximizers.iter().map(|f| f.to_graph().to_edge_list()).collect(),
        })
        .collect();
    Ok(serde_json::to_string(&rows).expect("serializable"))
}

#[wasm_bindgen]
pub fn analyze(input: &str) -> Result<String, JsValue> {
    analyze_json(input).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn bound_curves(n: usize) -> Result<String, JsValue> {
    bound_curves_json(n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn extremal(n: usize, class: &str) -> Result<String, JsValue> {
    extremal_json(n, class).map_err(|e| JsValue::from_str(&e))
}
