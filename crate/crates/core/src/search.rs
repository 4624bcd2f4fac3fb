//! Exhaustive scan of all non-isomorphic graphs of small order and mechanical
//! checks of the extremal characterizations against the scan.
//!
//! Labeled graphs are walked by adjacency code; a graph is kept iff its own
//! labeling is already canonical, so each isomorphism class is visited once
//! without a seen-set. The code range is cut into fixed chunks, workers scan
//! chunks independently and the results are concatenated in chunk order, so
//! the output does not depend on the number of threads.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::{expected_maximizers, lower_bound, upper_bound, GraphClass, MAXIMIZER_OVERRIDES};
use crate::canon::{canonical_form, graph_from_code, is_canonical, CanonicalForm};
use crate::count::BigCount;
use crate::counting::fibonacci_index;
use crate::criticality::stability_number;
use crate::error::{invalid, Error, Result};
use crate::generators::{generate, Family, FamilySpec};
use crate::graph::Graph;

/// Largest order the enumerator accepts.
pub const ENUMERATION_LIMIT: usize = 8;
/// Largest order for which the theorem checks run by default.
pub const VERIFY_LIMIT: usize = 7;

const CHUNKS: u64 = 512;

fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

fn check_enumeration_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::Capability {
            what: "exhaustive graph enumeration",
            limit,
            n,
        })
    } else {
        Ok(())
    }
}

/// One representative per isomorphism class, in increasing canonical order.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    check_enumeration_limit(n, ENUMERATION_LIMIT)?;
    let total = 1u64 << pair_count(n);
    Ok((0..total).filter_map(move |code| {
        let g = graph_from_code(n, code).expect("code within range");
        let keep = is_canonical(&g).expect("order within limit") && (!connected_only || g.is_connected());
        keep.then_some(g)
    }))
}

/// Invariants of one isomorphism class, as recorded by the scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    pub form: CanonicalForm,
    pub alpha: usize,
    pub fib: BigCount,
    pub connected: bool,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ScanOptions {
    /// Worker threads; `None` uses the global pool. Ignored without the `parallel` feature.
    pub threads: Option<usize>,
}

fn scan_chunk(n: usize, start: u64, end: u64) -> Vec<ScanEntry> {
    let mut out = Vec::new();
    for code in start..end {
        let g = graph_from_code(n, code).expect("code within range");
        if !is_canonical(&g).expect("order within limit") {
            continue;
        }
        out.push(ScanEntry {
            form: CanonicalForm::from_canonical_code(n, code),
            alpha: stability_number(&g),
            fib: fibonacci_index(&g),
            connected: g.is_connected(),
        });
    }
    out
}

fn chunk_bounds(total: u64) -> Vec<(u64, u64)> {
    let chunks = CHUNKS.min(total);
    (0..chunks)
        .map(|i| (total * i / chunks, total * (i + 1) / chunks))
        .collect()
}

/// Scans every isomorphism class of order `n`, ordered by canonical form.
pub fn scan(n: usize, options: &ScanOptions) -> Result<Vec<ScanEntry>> {
    check_enumeration_limit(n, ENUMERATION_LIMIT)?;
    let bounds = chunk_bounds(1u64 << pair_count(n));
    let parts = run_chunks(n, &bounds, options)?;
    let mut entries: Vec<ScanEntry> = parts.into_iter().flatten().collect();
    entries.sort_by_key(|e| e.form);
    Ok(entries)
}

#[cfg(feature = "parallel")]
fn run_chunks(n: usize, bounds: &[(u64, u64)], options: &ScanOptions) -> Result<Vec<Vec<ScanEntry>>> {
    use rayon::prelude::*;
    let work = || -> Vec<Vec<ScanEntry>> { bounds.par_iter().map(|&(s, e)| scan_chunk(n, s, e)).collect() };
    match options.threads {
        None => Ok(work()),
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| invalid(format!("cannot start {threads} worker threads: {e}")))
            .map(|pool| pool.install(work)),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_chunks(n: usize, bounds: &[(u64, u64)], _options: &ScanOptions) -> Result<Vec<Vec<ScanEntry>>> {
    Ok(bounds.iter().map(|&(s, e)| scan_chunk(n, s, e)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaRecord {
    pub alpha: usize,
    pub min_fib: BigCount,
    pub max_fib: BigCount,
    pub minimizers: Vec<CanonicalForm>,
    pub maximizers: Vec<CanonicalForm>,
    pub graph_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub graph_class: GraphClass,
    pub records: Vec<AlphaRecord>,
    /// Non-isomorphic graphs of the class that were scanned.
    pub enumeration_total: usize,
}

impl ExtremalReport {
    pub fn record(&self, alpha: usize) -> Option<&AlphaRecord> {
        self.records.iter().find(|r| r.alpha == alpha)
    }

    /// Summarizes scan entries of order `n`; entries must be sorted by form.
    pub fn from_scan(n: usize, class: GraphClass, entries: &[ScanEntry]) -> Result<Self> {
        if class == GraphClass::Tree {
            return Err(invalid("extremal reports cover the general and connected classes"));
        }
        let mut by_alpha: BTreeMap<usize, AlphaRecord> = BTreeMap::new();
        let mut total = 0;
        for e in entries {
            if class == GraphClass::Connected && !e.connected {
                continue;
            }
            total += 1;
            let rec = by_alpha.entry(e.alpha).or_insert_with(|| AlphaRecord {
                alpha: e.alpha,
                min_fib: e.fib.clone(),
                max_fib: e.fib.clone(),
                minimizers: Vec::new(),
                maximizers: Vec::new(),
                graph_count: 0,
            });
            rec.graph_count += 1;
            if e.fib < rec.min_fib {
                rec.min_fib = e.fib.clone();
                rec.minimizers.clear();
            }
            if e.fib == rec.min_fib {
                rec.minimizers.push(e.form);
            }
            if e.fib > rec.max_fib {
                rec.max_fib = e.fib.clone();
                rec.maximizers.clear();
            }
            if e.fib == rec.max_fib {
                rec.maximizers.push(e.form);
            }
        }
        Ok(ExtremalReport {
            n,
            graph_class: class,
            records: by_alpha.into_values().collect(),
            enumeration_total: total,
        })
    }
}

/// Minimum and maximum of F for every α over the class, with all graphs attaining them.
pub fn build_extremal_report(n: usize, class: GraphClass) -> Result<ExtremalReport> {
    build_extremal_report_with(n, class, &ScanOptions::default())
}

pub fn build_extremal_report_with(n: usize, class: GraphClass, options: &ScanOptions) -> Result<ExtremalReport> {
    ExtremalReport::from_scan(n, class, &scan(n, options)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theorem {
    /// Minimum is 2^α + n − α, attained only by CS(n, α), in both classes.
    #[serde(rename = "lower-bound")]
    LowerBound,
    /// Maximum over all graphs is f_T(n, α), attained only by T(n, α).
    #[serde(rename = "general-maximizer")]
    GeneralUpper,
    /// Maximum over connected graphs is f_TC(n, α), attained by TC(n, α) (and C_5 at (5, 2)).
    #[serde(rename = "connected-maximizer")]
    ConnectedUpper,
}

impl Theorem {
    pub fn tag(self) -> &'static str {
        match self {
            Theorem::LowerBound => "lower-bound",
            Theorem::GeneralUpper => "general-maximizer",
            Theorem::ConnectedUpper => "connected-maximizer",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub graph_class: GraphClass,
    pub alpha: usize,
    pub expected: Vec<CanonicalForm>,
    pub observed: Vec<CanonicalForm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationVerdict {
    pub theorem: Theorem,
    pub n: usize,
    pub pass: bool,
    pub discrepancies: Vec<Discrepancy>,
}

/// α values a graph of order `n` in `class` can have.
pub fn feasible_alphas(class: GraphClass, n: usize) -> std::ops::RangeInclusive<usize> {
    match class {
        GraphClass::General => 1..=n,
        _ if n == 1 => 1..=1,
        _ => 1..=n.saturating_sub(1),
    }
}

fn sorted_forms(graphs: &[Graph]) -> Result<Vec<CanonicalForm>> {
    let mut forms = graphs.iter().map(canonical_form).collect::<Result<Vec<_>>>()?;
    forms.sort();
    forms.dedup();
    Ok(forms)
}

enum Extreme {
    Min,
    Max,
}

fn compare(
    report: &ExtremalReport,
    extreme: Extreme,
    expected: impl Fn(usize) -> Result<(Vec<Graph>, BigCount)>,
) -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    for alpha in feasible_alphas(report.graph_class, report.n) {
        let (graphs, value) = expected(alpha)?;
        let expected_forms = sorted_forms(&graphs)?;
        let (observed, observed_value) = match (report.record(alpha), &extreme) {
            (Some(r), Extreme::Min) => (r.minimizers.clone(), Some(&r.min_fib)),
            (Some(r), Extreme::Max) => (r.maximizers.clone(), Some(&r.max_fib)),
            (None, _) => (Vec::new(), None),
        };
        if observed != expected_forms || observed_value != Some(&value) {
            out.push(Discrepancy {
                graph_class: report.graph_class,
                alpha,
                expected: expected_forms,
                observed,
            });
        }
    }
    Ok(out)
}

fn verdict(theorem: Theorem, n: usize, discrepancies: Vec<Discrepancy>) -> VerificationVerdict {
    VerificationVerdict {
        theorem,
        n,
        pass: discrepancies.is_empty(),
        discrepancies,
    }
}

/// Checks the three characterizations against the general and connected reports of one order.
pub fn verify_reports(general: &ExtremalReport, connected: &ExtremalReport) -> Result<Vec<VerificationVerdict>> {
    let n = general.n;
    if connected.n != n || general.graph_class != GraphClass::General || connected.graph_class != GraphClass::Connected
    {
        return Err(invalid("expected a general and a connected report of the same order"));
    }
    let minimum = |alpha| -> Result<(Vec<Graph>, BigCount)> {
        let cs = generate(&FamilySpec::with_alpha(Family::CompleteSplit, n, alpha))?;
        Ok((vec![cs], lower_bound(n, alpha)?))
    };
    let mut lower = compare(general, Extreme::Min, minimum)?;
    lower.extend(compare(connected, Extreme::Min, minimum)?);
    let maximum = |class| {
        move |alpha| -> Result<(Vec<Graph>, BigCount)> {
            Ok((expected_maximizers(class, n, alpha)?, upper_bound(class, n, alpha)?))
        }
    };
    let general_upper = compare(general, Extreme::Max, maximum(GraphClass::General))?;
    let connected_upper = compare(connected, Extreme::Max, maximum(GraphClass::Connected))?;
    Ok(vec![
        verdict(Theorem::LowerBound, n, lower),
        verdict(Theorem::GeneralUpper, n, general_upper),
        verdict(Theorem::ConnectedUpper, n, connected_upper),
    ])
}

/// Both reports and all verdicts for order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub general: ExtremalReport,
    pub connected: ExtremalReport,
    pub verdicts: Vec<VerificationVerdict>,
}

impl Verification {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    /// The report file for one class: its report plus the verdicts that concern it.
    pub fn report_file(&self, class: GraphClass) -> ReportFile {
        let (report, theorems) = match class {
            GraphClass::Connected => (&self.connected, [Theorem::LowerBound, Theorem::ConnectedUpper]),
            _ => (&self.general, [Theorem::LowerBound, Theorem::GeneralUpper]),
        };
        ReportFile {
            report: report.clone(),
            verdicts: self
                .verdicts
                .iter()
                .filter(|v| theorems.contains(&v.theorem))
                .cloned()
                .collect(),
        }
    }
}

/// Contents of `report-<class>-n<order>.json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub report: ExtremalReport,
    pub verdicts: Vec<VerificationVerdict>,
}

impl ReportFile {
    pub fn file_name(&self) -> String {
        report_file_name(self.report.graph_class, self.report.n)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn report_file_name(class: GraphClass, n: usize) -> String {
    format!("report-{class}-n{n}.json")
}

/// Scans order `n` once and checks all three characterizations.
pub fn verify_theorems(n: usize) -> Result<Verification> {
    verify_theorems_with(n, &ScanOptions::default(), VERIFY_LIMIT)
}

/// As [`verify_theorems`], with an explicit order limit (at most [`ENUMERATION_LIMIT`]).
pub fn verify_theorems_with(n: usize, options: &ScanOptions, limit: usize) -> Result<Verification> {
    check_enumeration_limit(n, limit.min(ENUMERATION_LIMIT))?;
    if n == 0 {
        return Err(invalid("verification needs n >= 1"));
    }
    let entries = scan(n, options)?;
    let general = ExtremalReport::from_scan(n, GraphClass::General, &entries)?;
    let connected = ExtremalReport::from_scan(n, GraphClass::Connected, &entries)?;
    let verdicts = verify_reports(&general, &connected)?;
    Ok(Verification {
        general,
        connected,
        verdicts,
    })
}

/// Exceptional `(n, α)` pairs in the connected maximizer table, for display.
pub fn connected_exceptions() -> impl Iterator<Item = (usize, usize)> {
    MAXIMIZER_OVERRIDES
        .iter()
        .filter(|(c, ..)| *c == GraphClass::Connected)
        .map(|&(_, n, a, _)| (n, a))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub fib: BigCount,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            n: g.order(),
            m: g.size(),
            alpha: stability_number(g),
            fib: fibonacci_index(g),
        }
    }
}

/// Same order and α, fewer edges, yet fewer stable sets.
fn fewer_edges_fewer_sets(sparse: &GraphSummary, dense: &GraphSummary) -> bool {
    sparse.n == dense.n && sparse.alpha == dense.alpha && sparse.m < dense.m && sparse.fib < dense.fib
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaledPair {
    pub copies: usize,
    pub sparse: GraphSummary,
    pub dense: GraphSummary,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranStarRow {
    pub r: usize,
    /// F(T(2r, r)), computed.
    pub turan_fib: BigCount,
    /// F(S_2r), computed.
    pub star_fib: BigCount,
    pub turan_edges: usize,
    pub star_edges: usize,
    /// turan_fib = 3^r and star_fib = 2^(2r−1) + 1.
    pub closed_forms_match: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    /// P_3 ⊎ P_3.
    pub sparse: GraphSummary,
    /// Spider: a center with three leaves and one pendant path of two vertices.
    pub dense: GraphSummary,
    pub holds: bool,
    pub scaled: Vec<ScaledPair>,
    pub turan_vs_star: Vec<TuranStarRow>,
}

impl CounterexampleReport {
    pub fn all_hold(&self) -> bool {
        self.holds
            && self.scaled.iter().all(|s| s.holds)
            && self.turan_vs_star.iter().all(|r| r.holds && r.closed_forms_match)
    }
}

/// P_3 ⊎ P_3.
pub fn two_paths() -> Graph {
    let p3 = generate(&FamilySpec::new(Family::Path, 3)).expect("valid spec");
    p3.disjoint_union(&p3).expect("order 6")
}

/// Center 0 with leaves 1, 2, 3 and the pendant path 0 – 4 – 5.
pub fn spider() -> Graph {
    Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)]).expect("valid edges")
}

fn copies(g: &Graph, k: usize) -> Graph {
    (1..k).fold(g.clone(), |acc, _| acc.disjoint_union(g).expect("within 64 vertices"))
}

/// Pairs of graphs where more edges come with more stable sets.
pub fn counterexample_size_vs_fib() -> CounterexampleReport {
    let (g3, g4) = (two_paths(), spider());
    let sparse = GraphSummary::of(&g3);
    let dense = GraphSummary::of(&g4);
    let holds = fewer_edges_fewer_sets(&sparse, &dense);
    let scaled = [2, 3]
        .into_iter()
        .map(|k| {
            let sparse = GraphSummary::of(&copies(&g3, k));
            let dense = GraphSummary::of(&copies(&g4, k));
            ScaledPair {
                copies: k,
                holds: fewer_edges_fewer_sets(&sparse, &dense),
                sparse,
                dense,
            }
        })
        .collect();
    let turan_vs_star = (3..=10)
        .map(|r| {
            let t = generate(&FamilySpec::with_alpha(Family::Turan, 2 * r, r)).expect("valid spec");
            let s = generate(&FamilySpec::new(Family::Star, 2 * r)).expect("valid spec");
            let turan_fib = fibonacci_index(&t);
            let star_fib = fibonacci_index(&s);
            let closed_forms_match = turan_fib == BigCount::pow(3, r) && star_fib == BigCount::pow2(2 * r - 1) + 1;
            TuranStarRow {
                r,
                holds: turan_fib < star_fib && t.size() < s.size(),
                turan_edges: t.size(),
                star_edges: s.size(),
                closed_forms_match,
                turan_fib,
                star_fib,
            }
        })
        .collect();
    CounterexampleReport {
        sparse,
        dense,
        holds,
        scaled,
        turan_vs_star,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_classes(n: usize, connected_only: bool) -> usize {
        let mut seen = std::collections::HashSet::new();
        for code in 0..1u64 << pair_count(n) {
            let g = graph_from_code(n, code).unwrap();
            if !connected_only || g.is_connected() {
                seen.insert(canonical_form(&g).unwrap());
            }
        }
        seen.len()
    }

    #[test]
    fn enumeration_matches_brute_force_dedup() {
        assert_eq!(
            enumerate_graphs(3, false).unwrap().count(),
            brute_force_classes(3, false)
        );
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(4, true).unwrap().count(), brute_force_classes(4, true));
        assert_eq!(enumerate_graphs(4, true).unwrap().count(), 6);
        assert_eq!(enumerate_graphs(1, false).unwrap().count(), 1);
        assert_eq!(
            enumerate_graphs(5, false).unwrap().count(),
            brute_force_classes(5, false)
        );
        assert!(matches!(
            enumerate_graphs(9, false),
            Err(Error::Capability { limit: 8, .. })
        ));
    }

    #[test]
    fn connected_5_2_has_two_maximizers() {
        let r = build_extremal_report(5, GraphClass::Connected).unwrap();
        let rec = r.record(2).unwrap();
        assert_eq!(rec.max_fib, 11u64);
        let tc = canonical_form(&generate(&FamilySpec::with_alpha(Family::TuranConnected, 5, 2)).unwrap()).unwrap();
        let c5 = canonical_form(&generate(&FamilySpec::new(Family::Cycle, 5)).unwrap()).unwrap();
        let mut expected = vec![tc, c5];
        expected.sort();
        assert_eq!(rec.maximizers, expected);
    }

    #[test]
    fn general_6_3_and_4_4() {
        let r = build_extremal_report(6, GraphClass::General).unwrap();
        let rec = r.record(3).unwrap();
        assert_eq!(rec.max_fib, 27u64);
        let t63 = canonical_form(&generate(&FamilySpec::with_alpha(Family::Turan, 6, 3)).unwrap()).unwrap();
        assert_eq!(rec.maximizers, vec![t63]);
        let r4 = build_extremal_report(4, GraphClass::General).unwrap();
        let rec = r4.record(4).unwrap();
        assert_eq!(
            (rec.min_fib.clone(), rec.max_fib.clone()),
            (BigCount::from(16u64), BigCount::from(16u64))
        );
        assert_eq!(rec.graph_count, 1);
        assert_eq!(rec.maximizers, vec![canonical_form(&Graph::empty(4).unwrap()).unwrap()]);
    }

    #[test]
    fn verdicts_small_orders() {
        for n in 1..=5 {
            let v = verify_theorems(n).unwrap();
            assert!(v.all_pass(), "n = {n}: {:?}", v.verdicts);
        }
        assert!(verify_theorems(0).is_err());
        assert!(matches!(verify_theorems(8), Err(Error::Capability { limit: 7, .. })));
    }

    #[test]
    fn a_wrong_expectation_is_reported() {
        let v = verify_theorems(4).unwrap();
        let mut general = v.general.clone();
        let rec = general.records.iter_mut().find(|r| r.alpha == 2).unwrap();
        rec.maximizers.push(rec.minimizers[0]);
        rec.maximizers.sort();
        let verdicts = verify_reports(&general, &v.connected).unwrap();
        let general = verdicts.iter().find(|v| v.theorem == Theorem::GeneralUpper).unwrap();
        assert!(!general.pass);
        assert_eq!(general.discrepancies.len(), 1);
        assert_eq!(general.discrepancies[0].alpha, 2);
    }

    #[test]
    fn counterexample_values() {
        let r = counterexample_size_vs_fib();
        assert_eq!(r.sparse.fib, 25u64);
        assert_eq!(r.dense.fib, 26u64);
        assert_eq!((r.sparse.m, r.dense.m), (4, 5));
        assert_eq!((r.sparse.alpha, r.dense.alpha), (4, 4));
        assert!(r.all_hold());
        assert_eq!(r.turan_vs_star[0].turan_fib, 27u64);
        assert_eq!(r.turan_vs_star[0].star_fib, 33u64);
    }

    #[test]
    fn report_file_names() {
        assert_eq!(report_file_name(GraphClass::Connected, 6), "report-connected-n6.json");
        let v = verify_theorems(3).unwrap();
        let file = v.report_file(GraphClass::General);
        assert_eq!(file.file_name(), "report-general-n3.json");
        let back: ReportFile = serde_json::from_str(&file.to_json()).unwrap();
        assert_eq!(back, file);
    }
}
