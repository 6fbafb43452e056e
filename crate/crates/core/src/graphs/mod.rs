//! Simple undirected graphs and the graph-side algorithms: powers of cycles,
//! induced-subgraph search, `G(n, p)` sampling and cycle manipulation.

mod cycles;
mod induced;
mod random;

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

pub use cycles::{
    common_neighbour_condition, cycle_lengths, cycle_power, find_cycle_with_length,
    shorten_cycle, Cycle, MAX_CYCLE_SEARCH_VERTICES,
};
pub use induced::{contains_induced, find_induced};
pub(crate) use cycles::find_independent_set;
pub(crate) use induced::search_order as search_order_for_embedding;
pub use random::{sample_gnp, trial_seed};

/// A simple labelled graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    /// The cycle `0 - 1 - ... - (h-1) - 0`.
    pub fn cycle(h: usize) -> Result<Self> {
        cycle_power(h, 1)
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::invalid(format!("duplicate edge ({u}, {v})")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Sets or clears the pair `uv`. Panics on a loop.
    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert_ne!(u, v, "loops are not allowed");
        self.adj[u * self.n + v] = present;
        self.adj[v * self.n + u] = present;
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        let present = self.has_edge(u, v);
        self.set_edge(u, v, !present);
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter().enumerate().filter(|(_, &e)| e).map(|(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours(v).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&e| e).count() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.edge_count() == 0
    }

    /// Number of pairs on which `self` and `other` differ.
    pub fn symmetric_difference(&self, other: &Graph) -> Result<usize> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let diff = self.adj.iter().zip(&other.adj).filter(|(a, b)| a != b).count();
        Ok(diff / 2)
    }

    /// Parses the text format: first line `n`, then one `u v` pair per line.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line_no, first) = lines.next().ok_or_else(|| Error::parse(1, "missing vertex count"))?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::parse(line_no, format!("bad vertex count {first:?}")))?;
        let mut g = Graph::empty(n);
        for (line_no, line) in lines {
            let mut tokens = line.split_whitespace();
            let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                return Err(Error::parse(line_no, format!("expected `u v`, got {line:?}")));
            };
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(line_no, format!("bad vertex {s:?}")))
            };
            let (u, v) = (parse(a)?, parse(b)?);
            if u >= n || v >= n {
                return Err(Error::parse(line_no, format!("vertex out of range in {line:?}")));
            }
            if u == v {
                return Err(Error::parse(line_no, format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
