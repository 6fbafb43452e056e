//! Coloured regularity graphs: complete graphs with black/white vertices and
//! black/white/grey edges. A CRG encodes a rule for editing a graph; see
//! [`edit_graph`].

mod canonical;
mod embed;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::graphs::Graph;
use crate::{Error, Result};

pub use canonical::{are_isomorphic, canonical_code, canonical_form, CanonicalCode};
pub use embed::{edit_graph, embeds, in_forb_family, Embedding};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexColour {
    White,
    Black,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeColour {
    Grey,
    White,
    Black,
}

impl VertexColour {
    fn symbol(self) -> char {
        match self {
            VertexColour::White => 'W',
            VertexColour::Black => 'B',
        }
    }
}

impl EdgeColour {
    fn symbol(self) -> char {
        match self {
            EdgeColour::Grey => 'g',
            EdgeColour::White => 'w',
            EdgeColour::Black => 'b',
        }
    }
}

/// A coloured regularity graph on vertices `0..k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Crg {
    vertices: Vec<VertexColour>,
    edges: Vec<EdgeColour>,
}

impl Crg {
    /// A CRG with the given vertex colours and every edge grey.
    pub fn all_grey(vertices: Vec<VertexColour>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::invalid("a CRG needs at least one vertex"));
        }
        let k = vertices.len();
        Ok(Crg {
            vertices,
            edges: vec![EdgeColour::Grey; k * k],
        })
    }

    /// Builds a CRG from vertex colours and an edge-colouring function, which
    /// is queried once per pair `u < v`.
    pub fn from_fn(
        vertices: Vec<VertexColour>,
        mut edge: impl FnMut(usize, usize) -> EdgeColour,
    ) -> Result<Self> {
        let mut crg = Crg::all_grey(vertices)?;
        let k = crg.k();
        for u in 0..k {
            for v in u + 1..k {
                crg.set_edge(u, v, edge(u, v));
            }
        }
        Ok(crg)
    }

    /// `K(r, s)`: `r` white vertices followed by `s` black vertices, all edges grey.
    pub fn grey_clique(r: usize, s: usize) -> Result<Self> {
        if r + s == 0 {
            return Err(Error::invalid("K(0, 0) has no vertices"));
        }
        let mut vertices = vec![VertexColour::White; r];
        vertices.extend(std::iter::repeat_n(VertexColour::Black, s));
        Crg::all_grey(vertices)
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_colour(&self, v: usize) -> VertexColour {
        self.vertices[v]
    }

    pub fn vertex_colours(&self) -> &[VertexColour] {
        &self.vertices
    }

    /// Colour of the pair `uv`, `u != v`.
    pub fn edge_colour(&self, u: usize, v: usize) -> EdgeColour {
        debug_assert_ne!(u, v);
        self.edges[u * self.k() + v]
    }

    pub fn set_edge(&mut self, u: usize, v: usize, colour: EdgeColour) {
        assert_ne!(u, v, "a CRG has no loops");
        let k = self.k();
        self.edges[u * k + v] = colour;
        self.edges[v * k + u] = colour;
    }

    pub fn set_vertex(&mut self, v: usize, colour: VertexColour) {
        self.vertices[v] = colour;
    }

    pub fn black_vertices(&self) -> Vec<usize> {
        self.vertices_of(VertexColour::Black)
    }

    pub fn white_vertices(&self) -> Vec<usize> {
        self.vertices_of(VertexColour::White)
    }

    fn vertices_of(&self, colour: VertexColour) -> Vec<usize> {
        (0..self.k()).filter(|&v| self.vertices[v] == colour).collect()
    }

    /// All pairs `u < v` of the given colour.
    pub fn edges_of(&self, colour: EdgeColour) -> Vec<(usize, usize)> {
        let k = self.k();
        let mut out = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                if self.edge_colour(u, v) == colour {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The sub-CRG on `subset`, relabelled in the given order.
    pub fn sub_crg(&self, subset: &[usize]) -> Result<Crg> {
        if subset.is_empty() {
            return Err(Error::invalid("sub-CRG on an empty vertex set"));
        }
        let mut seen = vec![false; self.k()];
        for &v in subset {
            if v >= self.k() || seen[v] {
                return Err(Error::invalid(format!("bad sub-CRG vertex {v}")));
            }
            seen[v] = true;
        }
        Crg::from_fn(subset.iter().map(|&v| self.vertices[v]).collect(), |i, j| {
            self.edge_colour(subset[i], subset[j])
        })
    }

    /// Vertex sets of the components: connected components of the graph of
    /// non-grey edges. Sorted by least vertex.
    pub fn component_sets(&self) -> Vec<Vec<usize>> {
        let k = self.k();
        let mut label = vec![usize::MAX; k];
        let mut out = Vec::new();
        for start in 0..k {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut comp = vec![start];
            label[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in 0..k {
                    if v != u && label[v] == usize::MAX && self.edge_colour(u, v) != EdgeColour::Grey {
                        label[v] = id;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The finest decomposition into sub-CRGs with only grey edges between them.
    pub fn components(&self) -> Vec<Crg> {
        self.component_sets()
            .iter()
            .map(|s| self.sub_crg(s).expect("components are nonempty"))
            .collect()
    }

    /// Grey-path distance from `v` to every vertex (`None` when unreachable).
    pub fn grey_distances(&self, v: usize) -> Vec<Option<usize>> {
        let k = self.k();
        let mut dist = vec![None; k];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for w in 0..k {
                if w != u && dist[w].is_none() && self.edge_colour(u, w) == EdgeColour::Grey {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// `{u : 1 <= dist_G(u, v) <= i}`; `v` itself is excluded.
    pub fn grey_neighbourhood(&self, v: usize, i: usize) -> Result<BTreeSet<usize>> {
        let mut ball = self.closed_grey_neighbourhood(v, i)?;
        ball.remove(&v);
        Ok(ball)
    }

    /// `{u : dist_G(u, v) <= i}`, which contains `v` at distance zero.
    pub fn closed_grey_neighbourhood(&self, v: usize, i: usize) -> Result<BTreeSet<usize>> {
        if v >= self.k() {
            return Err(Error::invalid(format!("vertex {v} out of range")));
        }
        Ok(self
            .grey_distances(v)
            .into_iter()
            .enumerate()
            .filter(|(_, d)| d.is_some_and(|d| d <= i))
            .map(|(u, _)| u)
            .collect())
    }

    /// The graph of grey edges on `vertices`, relabelled in the given order.
    pub fn grey_graph_on(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.edge_colour(u, v) == EdgeColour::Grey {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// `K_B`: grey edges among the black vertices, with the black vertex labels.
    pub fn black_grey_graph(&self) -> (Graph, Vec<usize>) {
        let black = self.black_vertices();
        (self.grey_graph_on(&black), black)
    }

    /// Parses the text format: a `B`/`W` string of length `k`, then for each
    /// `i < k - 1` a row of `b`/`w`/`g` giving the colours of `i j`, `j > i`.
    pub fn parse(text: &str) -> Result<Crg> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line_no, first) = lines.next().ok_or_else(|| Error::parse(1, "missing vertex colours"))?;
        let vertices = first
            .chars()
            .map(|c| match c {
                'B' => Ok(VertexColour::Black),
                'W' => Ok(VertexColour::White),
                other => Err(Error::parse(line_no, format!("bad vertex colour {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut crg = Crg::all_grey(vertices).map_err(|e| Error::parse(line_no, e.to_string()))?;
        let k = crg.k();
        for i in 0..k.saturating_sub(1) {
            let (line_no, row) = lines
                .next()
                .ok_or_else(|| Error::parse(line_no + i + 1, format!("missing edge row {}", i + 1)))?;
            if row.chars().count() != k - 1 - i {
                return Err(Error::parse(
                    line_no,
                    format!("edge row {} must have length {}", i + 1, k - 1 - i),
                ));
            }
            for (off, c) in row.chars().enumerate() {
                let colour = match c {
                    'b' => EdgeColour::Black,
                    'w' => EdgeColour::White,
                    'g' => EdgeColour::Grey,
                    other => return Err(Error::parse(line_no, format!("bad edge colour {other:?}"))),
                };
                crg.set_edge(i, i + 1 + off, colour);
            }
        }
        if let Some((line_no, extra)) = lines.next() {
            return Err(Error::parse(line_no, format!("unexpected trailing line {extra:?}")));
        }
        Ok(crg)
    }

    pub fn to_text(&self) -> String {
        let k = self.k();
        let mut out: String = self.vertices.iter().map(|c| c.symbol()).collect();
        out.push('\n');
        for i in 0..k.saturating_sub(1) {
            out.extend((i + 1..k).map(|j| self.edge_colour(i, j).symbol()));
            out.push('\n');
        }
        out
    }
}

impl FromStr for Crg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Crg::parse(s)
    }
}

impl fmt::Debug for Crg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Crg({:?})", self.to_text().trim_end().replace('\n', "|"))
    }
}

impl fmt::Display for Crg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
