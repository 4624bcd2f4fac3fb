//! Simple undirected graphs on at most 64 vertices, stored as adjacency bit-rows.

use std::fmt;

use crate::error::{invalid, Error, Result};

/// Largest supported order. One `u64` row per vertex.
pub const MAX_VERTICES: usize = 64;

/// Iterates the set bits of a word, lowest first.
pub(crate) fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Connected pieces of the subgraph induced by `within`, ordered by lowest vertex.
pub(crate) fn component_masks(adj: &[u64], within: u64) -> Vec<u64> {
    let mut rest = within;
    let mut out = Vec::new();
    while rest != 0 {
        let comp = grow_component(adj, within, rest & rest.wrapping_neg());
        out.push(comp);
        rest &= !comp;
    }
    out
}

pub(crate) fn grow_component(adj: &[u64], within: u64, seed: u64) -> u64 {
    let mut comp = seed;
    let mut frontier = seed;
    while frontier != 0 {
        let mut reach = 0;
        for v in bits(frontier) {
            reach |= adj[v];
        }
        frontier = reach & within & !comp;
        comp |= frontier;
    }
    comp
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency table is the bit-set N(v). Rows are kept
/// symmetric and loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            if g.adj[u] & bit(v) != 0 {
                return Err(invalid(format!("duplicate edge ({u}, {v})")));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and the absence of loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let outside = !full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & outside != 0 {
                return Err(invalid(format!("row {v} references a vertex >= {n}")));
            }
            if row & bit(v) != 0 {
                return Err(invalid(format!("self-loop at vertex {v}")));
            }
            for u in bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(invalid(format!("asymmetric adjacency between {v} and {u}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    /// Number of vertices n(G).
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges m(G).
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Open neighborhood N(v) as a bit-set.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood N[v] as a bit-set.
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | bit(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    pub fn is_complete(&self) -> bool {
        let all = self.vertex_mask();
        (0..self.n).all(|v| self.adj[v] | bit(v) == all)
    }

    /// Subgraph induced by `keep`, reindexed in increasing vertex order.
    pub fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let old: Vec<usize> = bits(keep).collect();
        let mut new_index = [0usize; MAX_VERTICES];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let rows = old
            .iter()
            .map(|&v| bits(self.adj[v] & keep).fold(0u64, |acc, u| acc | bit(new_index[u])))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// G − v, with the remaining vertices shifted down to close the gap.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertex_mask() & !bit(v)))
    }

    /// G − N\[v\].
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertex_mask() & !self.closed_neighbors(v)))
    }

    /// G − e for the edge `uv`; the vertex set is unchanged.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_edge(u, v)?;
        let mut rows = self.adj.clone();
        rows[u] &= !bit(v);
        rows[v] &= !bit(u);
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// G + e for a non-edge `uv`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || self.has_edge(u, v) {
            return Err(invalid(format!("({u}, {v}) cannot be added as a new edge")));
        }
        let mut rows = self.adj.clone();
        rows[u] |= bit(v);
        rows[v] |= bit(u);
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let shift = self.n;
        let rows = self
            .adj
            .iter()
            .copied()
            .chain(other.adj.iter().map(|&r| r << shift))
            .collect();
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(invalid("permutation length differs from graph order"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(invalid("not a permutation of the vertex set"));
            }
            seen |= bit(p);
        }
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= bit(perm[v]);
            rows[perm[v]] |= bit(perm[u]);
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph::from_rows_unchecked(rows)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        component_masks(&self.adj, self.vertex_mask())
    }

    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_masks().into_iter().map(|c| self.induced(c)).collect()
    }

    /// True iff the graph has exactly one component. The empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && grow_component(&self.adj, self.vertex_mask(), 1) == self.vertex_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.size() == self.n - 1
    }

    /// All bridges `(u, v)` with `u < v`, sorted, found by a lowpoint DFS.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; self.n];
        let mut low = vec![0usize; self.n];
        let mut clock = 0;
        let mut out = Vec::new();
        for root in 0..self.n {
            if disc[root] != UNSEEN {
                continue;
            }
            // (vertex, parent, unexplored neighbors)
            let mut stack: Vec<(usize, usize, u64)> = vec![(root, UNSEEN, self.adj[root])];
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            while let Some(top) = stack.last_mut() {
                let (v, parent, pending) = *top;
                if pending == 0 {
                    stack.pop();
                    if parent != UNSEEN {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push((parent.min(v), parent.max(v)));
                        }
                    }
                    continue;
                }
                let w = pending.trailing_zeros() as usize;
                top.2 &= pending - 1;
                if w == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, v, self.adj[w]));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether the edge `uv` of a connected graph is a bridge.
    pub fn is_bridge(&self, u: usize, v: usize) -> Result<bool> {
        self.check_edge(u, v)?;
        if !self.is_connected() {
            return Err(invalid("bridge test requires a connected graph"));
        }
        let key = (u.min(v), u.max(v));
        Ok(self.bridges().binary_search(&key).is_ok())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(invalid(format!("vertex {v} out of range for n = {}", self.n)))
        }
    }

    pub(crate) fn check_edge(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(invalid(format!("({u}, {v}) is not an edge")))
        }
    }

    /// Parses the edge-list text format: a header `n m`, then exactly `m`
    /// lines `u v` with `u < v`, single-space separated, LF terminated.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().unwrap_or((1, ""));
        let (n, m) = parse_pair(header, 1)?;
        if n > MAX_VERTICES {
            return Err(Error::Parse {
                line: 1,
                message: format!("order {n} exceeds the supported maximum {MAX_VERTICES}"),
            });
        }
        let mut rows = vec![0u64; n];
        for k in 0..m {
            let (line_no, line) = lines.next().ok_or_else(|| Error::Parse {
                line: k + 2,
                message: format!("expected {m} edge lines, found {k}"),
            })?;
            let (u, v) = parse_pair(line, line_no)?;
            let fail = |message: String| Error::Parse { line: line_no, message };
            if u == v {
                return Err(fail(format!("self-loop at vertex {u}")));
            }
            if u > v {
                return Err(fail(format!("endpoints must satisfy u < v, got {u} {v}")));
            }
            if v >= n {
                return Err(fail(format!("vertex {v} out of range for n = {n}")));
            }
            if rows[u] & bit(v) != 0 {
                return Err(fail(format!("duplicate edge {u} {v}")));
            }
            rows[u] |= bit(v);
            rows[v] |= bit(u);
        }
        // A single trailing LF is allowed, nothing else.
        match lines.next() {
            None => {}
            Some((_, "")) if lines.next().is_none() => {}
            Some((line, _)) => {
                return Err(Error::Parse {
                    line,
                    message: format!("unexpected content after {m} edge lines"),
                })
            }
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Serializes to the edge-list format, edges in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.size());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capability {
            what: "graph storage",
            limit: MAX_VERTICES,
            n,
        })
    } else {
        Ok(())
    }
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let fail = |message: &str| Error::Parse {
        line: line_no,
        message: message.to_string(),
    };
    let mut parts = line.split(' ');
    let a = parts.next().ok_or_else(|| fail("missing first number"))?;
    let b = parts
        .next()
        .ok_or_else(|| fail("expected two space-separated numbers"))?;
    if parts.next().is_some() {
        return Err(fail("expected exactly two numbers"));
    }
    Ok((parse_decimal(a, line_no)?, parse_decimal(b, line_no)?))
}

fn parse_decimal(token: &str, line_no: usize) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            line: line_no,
            message: format!("not a decimal number: {token:?}"),
        });
    }
    token.parse().map_err(|_| Error::Parse {
        line: line_no,
        message: format!("number too large: {token}"),
    })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
