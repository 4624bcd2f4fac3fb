//! Exact Fibonacci index F(G), the number of stable sets including the empty one.
//!
//! The counter works on vertex subsets of one fixed graph. A subset is split
//! into connected pieces whose counts multiply; isolated vertices contribute a
//! factor of two each and a clique on `k` vertices counts `k + 1`. Anything
//! else branches on a vertex `v` of maximum degree (lowest index on ties):
//! `F(S) = F(S - v) + F(S - N[v])`. Connected pieces are memoized by their
//! bit-set for the duration of one call.

use std::collections::HashMap;
use std::time::Duration;

use serde::Serialize;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::{bit, bits, component_masks, Graph};

/// Largest order accepted by the subset-enumeration oracle.
pub const NAIVE_LIMIT: usize = 25;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CountStats {
    /// Connected pieces that were branched on.
    pub branch_nodes: u64,
    pub memo_hits: u64,
    #[serde(serialize_with = "serialize_secs")]
    pub elapsed: Duration,
}

fn serialize_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

struct Counter<'a> {
    adj: &'a [u64],
    memo: HashMap<u64, BigCount>,
    stats: CountStats,
}

impl Counter<'_> {
    fn count(&mut self, set: u64) -> BigCount {
        let isolated = bits(set).filter(|&v| self.adj[v] & set == 0).fold(0, |a, v| a | bit(v));
        let rest = set & !isolated;
        let mut total = BigCount::pow2(isolated.count_ones() as usize);
        if rest != 0 {
            for comp in component_masks(self.adj, rest) {
                total = total * self.count_connected(comp);
            }
        }
        total
    }

    fn count_connected(&mut self, comp: u64) -> BigCount {
        if let Some(hit) = self.memo.get(&comp) {
            self.stats.memo_hits += 1;
            return hit.clone();
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
            return BigCount::from(comp.count_ones() as u64 + 1);
        }
        self.stats.branch_nodes += 1;
        let without = self.count(comp & !bit(pivot));
        let with = self.count(comp & !(self.adj[pivot] | bit(pivot)));
        let total = without + with;
        self.memo.insert(comp, total.clone());
        total
    }
}

/// Exact F(G) by memoized branch-and-reduce.
pub fn fibonacci_index(g: &Graph) -> BigCount {
    fibonacci_index_with_stats(g).0
}

pub fn fibonacci_index_with_stats(g: &Graph) -> (BigCount, CountStats) {
    let clock = Stopwatch::start();
    let mut counter = Counter {
        adj: g.rows(),
        memo: HashMap::new(),
        stats: CountStats::default(),
    };
    let total = counter.count(g.vertex_mask());
    let mut stats = counter.stats;
    stats.elapsed = clock.elapsed();
    (total, stats)
}

/// F(G) by checking every vertex subset. Independent of the branching code.
pub fn fibonacci_index_naive(g: &Graph) -> Result<BigCount> {
    let n = g.order();
    if n > NAIVE_LIMIT {
        return Err(Error::Capability {
            what: "naive stable-set enumeration",
            limit: NAIVE_LIMIT,
            n,
        });
    }
    let adj = g.rows();
    let stable = (0..1u64 << n).filter(|&s| bits(s).all(|v| adj[v] & s == 0)).count();
    Ok(BigCount::from(stable))
}

/// The Fibonacci number f_k with f_0 = 0, f_1 = 1.
pub fn fibonacci_number(k: usize) -> BigCount {
    let (mut a, mut b) = (BigCount::zero(), BigCount::one());
    for _ in 0..k {
        let next = a.clone() + &b;
        a = b;
        b = next;
    }
    a
}

/// F(P_n) = f_{n+2}.
pub fn fibonacci_of_path_closed(n: usize) -> BigCount {
    fibonacci_number(n + 2)
}

struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    fn start() -> Self {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        return self.start.elapsed();
        #[cfg(target_arch = "wasm32")]
        Duration::ZERO
    }
}
