use fibindex_demo::{analyze_json, bound_curves_json, extremal_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn analyze_accepts_specs_and_edge_lists() {
    let spec = parse(&analyze_json("turan-connected:n=7,alpha=3").unwrap());
    assert_eq!(spec["fib"], "31");
    let kinds: Vec<&str> = spec["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds.iter().filter(|&&k| k == "safe-bridge").count(), 2);
    assert_eq!(kinds.len(), 7);

    let list = parse(&analyze_json("5 5\n0 1\n1 2\n2 3\n3 4\n0 4").unwrap());
    assert_eq!(list["fib"], "11");
    assert!(list["edges"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["kind"] == "critical"));
}

#[test]
fn analyze_reports_errors() {
    assert!(analyze_json("turan-connected:n=5,alpha=5")
        .unwrap_err()
        .contains("alpha <= n-1"));
    assert!(analyze_json("3 1\n0 7").is_err());
    assert!(analyze_json("path:n=41").is_err());
}

#[test]
fn curves_are_ordered() {
    let points = parse(&bound_curves_json(10).unwrap());
    let points = points.as_array().unwrap();
    assert_eq!(points.len(), 10);
    assert_eq!(points[2]["turan"], "80");
    assert!(points[9]["turan_connected"].is_null());
    assert!(bound_curves_json(0).is_err());
}

#[test]
fn extremal_table() {
    let rows = parse(&extremal_json(5, "connected").unwrap());
    let row = rows.as_array().unwrap().iter().find(|r| r["alpha"] == 2).unwrap();
    assert_eq!(row["max_fib"], "11");
    assert_eq!(row["maximizers"].as_array().unwrap().len(), 2);
    assert!(extremal_json(8, "general").is_err());
    assert!(extremal_json(5, "tree").is_err());
}
