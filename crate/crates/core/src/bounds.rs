//! Closed forms and recurrences for the extremal values of F over graphs of
//! given order and stability number, plus a per-graph compliance check.
//!
//! * `f_T(n, α)`: F of the Turán graph T(n, α), the maximum over all graphs.
//! * `f_TC(n, α)`: F of the Turán-connected graph TC(n, α), the maximum over
//!   connected graphs (C_5 ties it at `(5, 2)`).
//! * `2^α + n − α`: the minimum over both classes, attained by CS(n, α).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CANONICAL_LIMIT};
use crate::count::BigCount;
use crate::counting::fibonacci_index;
use crate::criticality::stability_number;
use crate::error::{invalid, Error, Result};
use crate::generators::{generate, Family, FamilySpec};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    General,
    Connected,
    Tree,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::General => "general",
            GraphClass::Connected => "connected",
            GraphClass::Tree => "tree",
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::General => true,
            GraphClass::Connected => g.is_connected(),
            GraphClass::Tree => g.is_tree(),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(GraphClass::General),
            "connected" => Ok(GraphClass::Connected),
            "tree" => Ok(GraphClass::Tree),
            _ => Err(invalid(format!("unknown graph class {s:?}"))),
        }
    }
}

fn check_turan_range(n: usize, alpha: usize) -> Result<()> {
    if alpha < 1 || alpha > n {
        Err(invalid(format!("need 1 <= alpha <= n, got n = {n}, alpha = {alpha}")))
    } else {
        Ok(())
    }
}

fn check_connected_range(n: usize, alpha: usize) -> Result<()> {
    if alpha < 1 || alpha + 1 > n {
        Err(invalid(format!(
            "turan-connected values need 1 <= alpha <= n-1, got n = {n}, alpha = {alpha}"
        )))
    } else {
        Ok(())
    }
}

/// `f_T(n, α) = (⌈n/α⌉ + 1)^p (⌊n/α⌋ + 1)^(α − p)` with `p = n mod α`.
pub fn f_turan_closed(n: usize, alpha: usize) -> Result<BigCount> {
    check_turan_range(n, alpha)?;
    let p = n % alpha;
    let ceil = n.div_ceil(alpha) as u64;
    let floor = (n / alpha) as u64;
    Ok(BigCount::pow(ceil + 1, p) * BigCount::pow(floor + 1, alpha - p))
}

/// `f_T` by the vertex-deletion recurrence:
/// `n + 1` if α = 1, `2^n` if α = n, else `f_T(n − 1, α) + f_T(n − ⌈n/α⌉, α − 1)`.
pub fn f_turan_recursive(n: usize, alpha: usize) -> Result<BigCount> {
    check_turan_range(n, alpha)?;
    Ok(TuranRecurrence::default().eval(n, alpha))
}

#[derive(Default)]
struct TuranRecurrence {
    memo: HashMap<(usize, usize), BigCount>,
}

impl TuranRecurrence {
    fn eval(&mut self, n: usize, alpha: usize) -> BigCount {
        if alpha == 1 {
            return BigCount::from(n + 1);
        }
        if alpha == n {
            return BigCount::pow2(n);
        }
        if let Some(v) = self.memo.get(&(n, alpha)) {
            return v.clone();
        }
        let value = self.eval(n - 1, alpha) + self.eval(n - n.div_ceil(alpha), alpha - 1);
        self.memo.insert((n, alpha), value.clone());
        value
    }
}

/// `f_TC(n, α)`: `n + 1` if α = 1, `2^(n−1) + 1` if α = n − 1, else
/// `f_T(n − 1, α) + f_T(n', α')` with `n' = n − ⌈n/α⌉ − α + 1`, `α' = min(n', α − 1)`.
pub fn f_turan_connected(n: usize, alpha: usize) -> Result<BigCount> {
    check_connected_range(n, alpha)?;
    if alpha == 1 {
        return Ok(BigCount::from(n + 1));
    }
    if alpha == n - 1 {
        return Ok(BigCount::pow2(n - 1) + 1);
    }
    let reduced_n = n - n.div_ceil(alpha) - alpha + 1;
    let reduced_alpha = reduced_n.min(alpha - 1);
    Ok(f_turan_closed(n - 1, alpha)? + f_turan_closed(reduced_n, reduced_alpha)?)
}

/// Maximum F over trees: `3^x 2^y + 2^x` with `x = n − α − 1` pending
/// 2-paths and `y = 2α − n + 1` pending leaves around the center.
pub fn f_tree_closed(n: usize, alpha: usize) -> Result<BigCount> {
    if alpha + 1 > n || 2 * alpha < n || alpha < 1 {
        return Err(invalid(format!(
            "trees need n/2 <= alpha <= n-1, got n = {n}, alpha = {alpha}"
        )));
    }
    let x = n - alpha - 1;
    let y = 2 * alpha + 1 - n;
    Ok(BigCount::pow(3, x) * BigCount::pow2(y) + BigCount::pow2(x))
}

/// Minimum F over graphs of order n and stability α: `2^α + n − α`.
pub fn lower_bound(n: usize, alpha: usize) -> Result<BigCount> {
    check_turan_range(n, alpha)?;
    Ok(BigCount::pow2(alpha) + (n - alpha) as u64)
}

/// Graphs attaining the maximum of F in `class` at `(n, α)`, beyond the
/// Turán and Turán-connected graphs themselves.
pub const MAXIMIZER_OVERRIDES: &[(GraphClass, usize, usize, &[FamilySpec])] = &[(
    GraphClass::Connected,
    5,
    2,
    &[
        FamilySpec {
            family: Family::TuranConnected,
            n: 5,
            alpha: Some(2),
        },
        FamilySpec {
            family: Family::Cycle,
            n: 5,
            alpha: None,
        },
    ],
)];

/// The graphs expected to maximize F in `class` at `(n, α)`.
///
/// Connected graphs with α = n exist only for n = 1, where K_1 is the answer.
pub fn expected_maximizers(class: GraphClass, n: usize, alpha: usize) -> Result<Vec<Graph>> {
    check_turan_range(n, alpha)?;
    if let Some((.., specs)) = MAXIMIZER_OVERRIDES
        .iter()
        .find(|(c, on, oa, _)| *c == class && *on == n && *oa == alpha)
    {
        return specs.iter().map(generate).collect();
    }
    let spec = match class {
        GraphClass::General => FamilySpec::with_alpha(Family::Turan, n, alpha),
        _ if alpha == n => FamilySpec::new(Family::Complete, n),
        _ => FamilySpec::with_alpha(Family::TuranConnected, n, alpha),
    };
    Ok(vec![generate(&spec)?])
}

/// The maximum value of F in `class` at `(n, α)`.
pub fn upper_bound(class: GraphClass, n: usize, alpha: usize) -> Result<BigCount> {
    match class {
        GraphClass::General => f_turan_closed(n, alpha),
        _ if alpha == n && n == 1 => Ok(BigCount::from(2u64)),
        GraphClass::Connected => f_turan_connected(n, alpha),
        GraphClass::Tree => f_tree_closed(n, alpha),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub fib: BigCount,
    /// `2^α + n − α`
    pub lower: BigCount,
    /// `f_T` for the general class, `f_TC` for connected graphs, the tree maximum for trees.
    pub upper: BigCount,
    pub lower_tight: bool,
    pub upper_tight: bool,
    pub graph_class: GraphClass,
}

/// Evaluates both bounds for `g` in `class` after checking that `g` belongs to it.
///
/// For orders within the canonical-form limit the tightness flags are
/// cross-checked against the extremal graphs; a disagreement is reported as
/// [`Error::Inconsistent`].
pub fn check_bounds(g: &Graph, class: GraphClass) -> Result<BoundReport> {
    let n = g.order();
    if n == 0 {
        return Err(invalid("bounds are defined for graphs with at least one vertex"));
    }
    if !class.contains(g) {
        return Err(invalid(format!("graph is not in the {class} class")));
    }
    let alpha = stability_number(g);
    let fib = fibonacci_index(g);
    let lower = lower_bound(n, alpha)?;
    let upper = upper_bound(class, n, alpha)?;
    if fib < lower || fib > upper {
        return Err(Error::Inconsistent(format!(
            "F = {fib} outside [{lower}, {upper}] at n = {n}, alpha = {alpha}"
        )));
    }
    let report = BoundReport {
        n,
        m: g.size(),
        alpha,
        lower_tight: fib == lower,
        upper_tight: fib == upper,
        fib,
        lower,
        upper,
        graph_class: class,
    };
    if n <= CANONICAL_LIMIT {
        let form = canonical_form(g)?;
        let cs = generate(&FamilySpec::with_alpha(Family::CompleteSplit, n, alpha))?;
        let is_min = canonical_form(&cs)? == form;
        let mut is_max = false;
        for h in expected_maximizers(class, n, alpha)? {
            is_max |= canonical_form(&h)? == form;
        }
        if is_min != report.lower_tight || is_max != report.upper_tight {
            return Err(Error::Inconsistent(format!(
                "tightness disagrees with the extremal graphs at n = {n}, alpha = {alpha}"
            )));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::fibonacci_index_naive;

    fn fam(family: Family, n: usize) -> Graph {
        generate(&FamilySpec::new(family, n)).unwrap()
    }

    fn fam_a(family: Family, n: usize, a: usize) -> Graph {
        generate(&FamilySpec::with_alpha(family, n, a)).unwrap()
    }

    #[test]
    fn turan_values() {
        assert_eq!(f_turan_closed(7, 3).unwrap(), 36u64);
        assert_eq!(
            f_turan_closed(7, 3).unwrap(),
            fibonacci_index_naive(&fam_a(Family::Turan, 7, 3)).unwrap()
        );
        for n in 1..12 {
            assert_eq!(f_turan_closed(n, 1).unwrap(), (n + 1) as u64);
            assert_eq!(f_turan_closed(n, n).unwrap(), BigCount::pow2(n));
        }
        assert_eq!(f_turan_recursive(7, 3).unwrap(), 36u64);
        assert_eq!(f_turan_recursive(6, 3).unwrap(), 27u64);
        assert_eq!(f_turan_recursive(4, 2).unwrap(), 9u64);
        assert_eq!(f_turan_recursive(5, 5).unwrap(), 32u64);
        assert_eq!(f_turan_recursive(4, 1).unwrap(), 5u64);
        assert!(f_turan_closed(3, 0).is_err());
        assert!(f_turan_closed(3, 4).is_err());
        assert!(f_turan_recursive(3, 4).is_err());
    }

    #[test]
    fn turan_connected_values() {
        assert_eq!(f_turan_connected(7, 3).unwrap(), 31u64);
        assert_eq!(f_turan_connected(5, 2).unwrap(), 11u64);
        assert_eq!(f_turan_connected(7, 4).unwrap(), 40u64);
        for n in 2..12 {
            assert_eq!(f_turan_connected(n, 1).unwrap(), (n + 1) as u64);
            assert_eq!(f_turan_connected(n, n - 1).unwrap(), BigCount::pow2(n - 1) + 1);
        }
        assert_eq!(
            f_turan_connected(7, 3).unwrap(),
            fibonacci_index_naive(&fam_a(Family::TuranConnected, 7, 3)).unwrap()
        );
        assert!(f_turan_connected(5, 5).is_err());
        assert!(f_turan_connected(5, 0).is_err());
    }

    #[test]
    fn tree_values() {
        assert_eq!(f_tree_closed(7, 4).unwrap(), 40u64);
        assert_eq!(f_tree_closed(6, 3).unwrap(), 22u64);
        assert_eq!(
            f_tree_closed(6, 3).unwrap(),
            fibonacci_index_naive(&fam_a(Family::TuranConnected, 6, 3)).unwrap()
        );
        for n in 2..12 {
            assert_eq!(f_tree_closed(n, n - 1).unwrap(), BigCount::pow2(n - 1) + 1);
        }
        assert!(f_tree_closed(7, 3).is_err());
        assert!(f_tree_closed(7, 7).is_err());
    }

    #[test]
    fn lower_values() {
        assert_eq!(lower_bound(7, 3).unwrap(), 12u64);
        assert_eq!(
            lower_bound(7, 3).unwrap(),
            fibonacci_index_naive(&fam_a(Family::CompleteSplit, 7, 3)).unwrap()
        );
        for n in 1..12 {
            assert_eq!(lower_bound(n, 1).unwrap(), (n + 1) as u64);
            assert_eq!(lower_bound(n, n).unwrap(), BigCount::pow2(n));
        }
    }

    #[test]
    fn report_for_turan_7_3() {
        let r = check_bounds(&fam_a(Family::Turan, 7, 3), GraphClass::General).unwrap();
        assert_eq!(r.fib, 36u64);
        assert_eq!(r.upper, 36u64);
        assert_eq!(r.lower, 12u64);
        assert!(r.upper_tight && !r.lower_tight);
    }

    #[test]
    fn report_for_c5() {
        let r = check_bounds(&fam(Family::Cycle, 5), GraphClass::Connected).unwrap();
        assert_eq!(r.fib, 11u64);
        assert_eq!(r.upper, 11u64);
        assert!(r.upper_tight);
    }

    #[test]
    fn report_for_p4_tree() {
        // P_4 is TC(4, 2), so the tree bound is attained.
        let r = check_bounds(&fam(Family::Path, 4), GraphClass::Tree).unwrap();
        assert_eq!((r.fib.clone(), r.alpha), (BigCount::from(8u64), 2));
        assert_eq!(r.lower, 6u64);
        assert_eq!(r.upper, 8u64);
        assert!(r.upper_tight && !r.lower_tight);
    }

    #[test]
    fn class_mismatch_and_small_orders() {
        let t = fam_a(Family::Turan, 7, 3);
        assert!(check_bounds(&t, GraphClass::Connected).is_err());
        assert!(check_bounds(&fam(Family::Cycle, 5), GraphClass::Tree).is_err());
        assert!(check_bounds(&Graph::empty(0).unwrap(), GraphClass::General).is_err());
        let k1 = fam(Family::Complete, 1);
        for class in [GraphClass::General, GraphClass::Connected, GraphClass::Tree] {
            let r = check_bounds(&k1, class).unwrap();
            assert!(r.lower_tight && r.upper_tight);
        }
    }

    #[test]
    fn large_graphs_skip_the_canonical_cross_check() {
        let r = check_bounds(&fam_a(Family::Turan, 30, 7), GraphClass::General).unwrap();
        assert!(r.upper_tight);
    }
}
