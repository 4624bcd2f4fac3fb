//! Named graph families with fixed labelings.
//!
//! | family | labeling |
//! |---|---|
//! | `turan` | cliques occupy consecutive index blocks from 0; the first `n mod α` have `⌈n/α⌉` vertices |
//! | `turan-connected` | the `turan` labeling plus edges from vertex 0 to the first vertex of every other clique |
//! | `complete-split` | stable set `0..α`, clique `α..n`, all cross edges |
//! | `star` | center 0 |
//! | `path` / `cycle` | `0 - 1 - ... - (n-1)` (closed for the cycle) |

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CANONICAL_LIMIT};
use crate::error::{invalid, Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Complete,
    /// The edgeless graph, complement of K_n.
    EmptyComplement,
    Path,
    Cycle,
    Star,
    CompleteSplit,
    Turan,
    TuranConnected,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Complete,
        Family::EmptyComplement,
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::CompleteSplit,
        Family::Turan,
        Family::TuranConnected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::EmptyComplement => "empty-complement",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::CompleteSplit => "complete-split",
            Family::Turan => "turan",
            Family::TuranConnected => "turan-connected",
        }
    }

    pub fn needs_alpha(self) -> bool {
        matches!(self, Family::CompleteSplit | Family::Turan | Family::TuranConnected)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| invalid(format!("unknown graph family {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    /// Required by `complete-split`, `turan` and `turan-connected`; ignored otherwise.
    pub alpha: Option<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec { family, n, alpha: None }
    }

    pub fn with_alpha(family: Family, n: usize, alpha: usize) -> Self {
        FamilySpec {
            family,
            n,
            alpha: Some(alpha),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n > MAX_VERTICES {
            return Err(Error::Capability {
                what: "graph storage",
                limit: MAX_VERTICES,
                n,
            });
        }
        match self.family {
            Family::Complete | Family::EmptyComplement => Ok(()),
            Family::Path | Family::Star if n < 1 => Err(invalid(format!("{} requires n >= 1", self.family))),
            Family::Cycle if n < 3 => Err(invalid("cycle requires n >= 3")),
            Family::Path | Family::Star | Family::Cycle => Ok(()),
            family => {
                let alpha = self.alpha.ok_or_else(|| invalid(format!("{family} requires alpha")))?;
                let top = if family == Family::TuranConnected {
                    n.saturating_sub(1)
                } else {
                    n
                };
                if alpha < 1 || alpha > top {
                    let bound = if family == Family::TuranConnected { "n-1" } else { "n" };
                    return Err(invalid(format!(
                        "{family} requires 1 <= alpha <= {bound}, got n = {n}, alpha = {alpha}"
                    )));
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:n={}", self.family, self.n)?;
        if let Some(alpha) = self.alpha {
            write!(f, ",alpha={alpha}")?;
        }
        Ok(())
    }
}

/// Parses `family:key=value,...`, e.g. `turan:n=7,alpha=3`. Keys are `n` and `alpha`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, params) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("generator spec {s:?} must look like family:key=value,...")))?;
        let family: Family = family.parse()?;
        let mut n = None;
        let mut alpha = None;
        for pair in params.split(',') {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| invalid(format!("expected key=value, got {pair:?}")))?;
            let value: usize = value
                .parse()
                .map_err(|_| invalid(format!("value of {key} is not a nonnegative integer: {value:?}")))?;
            let slot = match key {
                "n" => &mut n,
                "alpha" => &mut alpha,
                _ => return Err(invalid(format!("unknown key {key:?} in generator spec"))),
            };
            if slot.replace(value).is_some() {
                return Err(invalid(format!("key {key:?} given twice")));
            }
        }
        let n = n.ok_or_else(|| invalid("generator spec requires n"))?;
        let spec = FamilySpec { family, n, alpha };
        spec.validate()?;
        Ok(spec)
    }
}

/// Sizes of the cliques of T(n, α) in label order.
pub fn turan_clique_sizes(n: usize, alpha: usize) -> Vec<usize> {
    let (q, p) = (n / alpha, n % alpha);
    (0..alpha).map(|i| if i < p { q + 1 } else { q }).collect()
}

fn turan_rows(n: usize, alpha: usize) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    let mut start = 0;
    for size in turan_clique_sizes(n, alpha) {
        let block = ((1u64 << size) - 1) << start;
        for (v, row) in rows.iter_mut().enumerate().skip(start).take(size) {
            *row = block & !bit(v);
        }
        start += size;
    }
    rows
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let alpha = spec.alpha.unwrap_or(0);
    let edges: Vec<(usize, usize)> = match spec.family {
        Family::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        Family::EmptyComplement => Vec::new(),
        Family::Path => (1..n).map(|v| (v - 1, v)).collect(),
        Family::Cycle => (0..n).map(|v| (v, (v + 1) % n)).collect(),
        Family::Star => (1..n).map(|v| (0, v)).collect(),
        Family::CompleteSplit => {
            let clique = (alpha..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let cross = (0..alpha).flat_map(|u| (alpha..n).map(move |v| (u, v)));
            clique.chain(cross).collect()
        }
        Family::Turan => return Graph::from_rows(turan_rows(n, alpha)),
        Family::TuranConnected => {
            let mut rows = turan_rows(n, alpha);
            let mut start = 0;
            for (i, size) in turan_clique_sizes(n, alpha).into_iter().enumerate() {
                if i > 0 {
                    rows[0] |= bit(start);
                    rows[start] |= bit(0);
                }
                start += size;
            }
            return Graph::from_rows(rows);
        }
    };
    Graph::from_edges(n, edges)
}

/// The `α − 1` hub edges that turn T(n, α) into TC(n, α), in the generator's labeling.
pub fn turan_connected_hub_edges(n: usize, alpha: usize) -> Result<Vec<(usize, usize)>> {
    FamilySpec::with_alpha(Family::TuranConnected, n, alpha).validate()?;
    let mut out = Vec::new();
    let mut start = 0;
    for (i, size) in turan_clique_sizes(n, alpha).into_iter().enumerate() {
        if i > 0 {
            out.push((0, start));
        }
        start += size;
    }
    Ok(out)
}

/// Checks the small-parameter coincidences between the families at order `n`:
/// T(n,1) ≃ TC(n,1) ≃ CS(n,1) ≃ K_n, T(n,n) ≃ CS(n,n) ≃ K̄_n and
/// TC(n,n−1) ≃ CS(n,n−1) ≃ S_n.
pub fn family_identities_check(n: usize) -> Result<bool> {
    if n < 3 {
        return Err(invalid(format!("family identities are checked for n >= 3, got {n}")));
    }
    if n > CANONICAL_LIMIT {
        return Err(Error::Capability {
            what: "canonical form",
            limit: CANONICAL_LIMIT,
            n,
        });
    }
    let form = |spec: FamilySpec| generate(&spec).and_then(|g| canonical_form(&g));
    let all_equal = |specs: &[FamilySpec]| -> Result<bool> {
        let first = form(specs[0])?;
        for &s in &specs[1..] {
            if form(s)? != first {
                return Ok(false);
            }
        }
        Ok(true)
    };
    use Family::*;
    Ok(all_equal(&[
        FamilySpec::new(Complete, n),
        FamilySpec::with_alpha(Turan, n, 1),
        FamilySpec::with_alpha(TuranConnected, n, 1),
        FamilySpec::with_alpha(CompleteSplit, n, 1),
    ])? && all_equal(&[
        FamilySpec::new(EmptyComplement, n),
        FamilySpec::with_alpha(Turan, n, n),
        FamilySpec::with_alpha(CompleteSplit, n, n),
    ])? && all_equal(&[
        FamilySpec::new(Star, n),
        FamilySpec::with_alpha(TuranConnected, n, n - 1),
        FamilySpec::with_alpha(CompleteSplit, n, n - 1),
    ])?)
}

/// Seeded G(n, p) graph.
///
/// The stream is ChaCha8 seeded with `seed_from_u64(seed)`. Pairs are visited
/// as `(0,1), (0,2), ..., (0,n-1), (1,2), ...`; each consumes one `u64` whose
/// top 53 bits form a uniform `x` in `[0, 1)`, and the edge is present iff `x < p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("edge probability must lie in [0, 1], got {p}")));
    }
    if n > MAX_VERTICES {
        return Graph::empty(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if x < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}
