//! Exact canonical forms for small graphs.
//!
//! The form of a graph is the lexicographically smallest upper-triangular
//! adjacency string over all relabelings. Pairs are read column by column,
//! `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`, so placing the vertex at
//! position `k` fixes the next `k` characters and a partial labeling is a
//! prefix. Branches whose prefix already exceeds the best string are cut.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::graph::{bit, Graph};

/// Hard limit on the order accepted by [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 10;

/// Isomorphism-invariant fingerprint: equal iff the graphs are isomorphic.
///
/// `code` holds the adjacency string with its first character in the most
/// significant of the `n(n-1)/2` low bits, so comparing codes of equal order
/// compares strings lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Adjacency string of `g` under its own labeling.
pub fn labeled_code(g: &Graph) -> u64 {
    let adj = g.rows();
    let mut code = 0u64;
    for j in 1..g.order() {
        for row in &adj[..j] {
            code = (code << 1) | ((row >> j) & 1);
        }
    }
    code
}

/// Graph whose labeled string is `code`.
pub fn graph_from_code(n: usize, code: u64) -> Result<Graph> {
    if n > CANONICAL_LIMIT + 1 {
        return Err(Error::Capability {
            what: "adjacency codes",
            limit: CANONICAL_LIMIT + 1,
            n,
        });
    }
    let len = pair_count(n);
    if len < 64 && code >> len != 0 {
        return Err(invalid(format!("code has bits beyond the {len} pairs of order {n}")));
    }
    let mut rows = vec![0u64; n];
    let mut t = len;
    for j in 1..n {
        for i in 0..j {
            t -= 1;
            if (code >> t) & 1 == 1 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    Graph::from_rows(rows)
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    len: u32,
    best: u64,
    perm: [usize; CANONICAL_LIMIT + 1],
    /// Stop at the first labeling strictly below `best`.
    first_smaller: bool,
    found_smaller: bool,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, used: u64, prefix: u64) {
        let shift = self.len - pair_count(depth + 1);
        for w in 0..self.n {
            if used & bit(w) != 0 {
                continue;
            }
            let row = self.adj[w];
            let mut next = prefix;
            for &p in &self.perm[..depth] {
                next = (next << 1) | ((row >> p) & 1);
            }
            if next > self.best >> shift {
                continue;
            }
            self.perm[depth] = w;
            if depth + 1 == self.n {
                if next < self.best {
                    self.best = next;
                    self.found_smaller = true;
                    if self.first_smaller {
                        return;
                    }
                }
            } else {
                self.run(depth + 1, used | bit(w), next);
                if self.first_smaller && self.found_smaller {
                    return;
                }
            }
        }
    }
}

fn check_limit(g: &Graph) -> Result<()> {
    if g.order() > CANONICAL_LIMIT {
        Err(Error::Capability {
            what: "canonical form",
            limit: CANONICAL_LIMIT,
            n: g.order(),
        })
    } else {
        Ok(())
    }
}

/// Minimal adjacency string over all vertex permutations.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_limit(g)?;
    let n = g.order();
    let own = labeled_code(g);
    if n <= 1 {
        return Ok(CanonicalForm { n: n as u8, code: 0 });
    }
    let mut search = Search {
        adj: g.rows(),
        n,
        len: pair_count(n),
        best: own,
        perm: [0; CANONICAL_LIMIT + 1],
        first_smaller: false,
        found_smaller: false,
    };
    search.run(0, 0, 0);
    Ok(CanonicalForm {
        n: n as u8,
        code: search.best,
    })
}

/// True iff the graph's own labeling already yields its canonical string.
/// Exits at the first relabeling that beats it.
pub fn is_canonical(g: &Graph) -> Result<bool> {
    check_limit(g)?;
    let n = g.order();
    if n <= 1 {
        return Ok(true);
    }
    let mut search = Search {
        adj: g.rows(),
        n,
        len: pair_count(n),
        best: labeled_code(g),
        perm: [0; CANONICAL_LIMIT + 1],
        first_smaller: true,
        found_smaller: false,
    };
    search.run(0, 0, 0);
    Ok(!search.found_smaller)
}

impl CanonicalForm {
    /// Wraps a code already known to be canonical.
    pub(crate) fn from_canonical_code(n: usize, code: u64) -> Self {
        CanonicalForm { n: n as u8, code }
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// The representative graph labeled by this form.
    pub fn to_graph(&self) -> Graph {
        graph_from_code(self.order(), self.code).expect("canonical codes are well formed")
    }
}

impl fmt::Display for CanonicalForm {
    /// `<n>:<adjacency string>`, e.g. `3:011` for the path on three vertices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        let len = pair_count(self.order());
        for t in (0..len).rev() {
            f.write_str(if (self.code >> t) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for CanonicalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, string) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("canonical form {s:?} lacks ':'")))?;
        let n: usize = n.parse().map_err(|_| invalid(format!("bad order in {s:?}")))?;
        if n > CANONICAL_LIMIT || string.len() != pair_count(n) as usize {
            return Err(invalid(format!("canonical form {s:?} has the wrong length")));
        }
        let mut code = 0u64;
        for c in string.bytes() {
            code = (code << 1)
                | match c {
                    b'0' => 0,
                    b'1' => 1,
                    _ => return Err(invalid(format!("bad character in {s:?}"))),
                };
        }
        let form = CanonicalForm { n: n as u8, code };
        if canonical_form(&form.to_graph())? != form {
            return Err(invalid(format!("{s:?} is not a canonical string")));
        }
        Ok(form)
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
