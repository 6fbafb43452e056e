//! Weighted graphs satisfying the degree condition conjectured to force a
//! cycle of length between `h/2` and `h`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::editdist::p_zero;
use crate::graphs::{cycle_lengths, find_cycle_with_length, Cycle, Graph};
use crate::qp::WeightVector;
use crate::rational::{ceil_div, check_open_unit_interval};
use crate::{Error, Rational, Result};

/// A graph with nonnegative vertex weights summing to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub graph: Graph,
    pub weights: WeightVector,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != graph.n() {
            return Err(Error::DimensionMismatch {
                expected: graph.n(),
                got: weights.len(),
            });
        }
        Ok(WeightedGraph {
            graph,
            weights: WeightVector::new(weights)?,
        })
    }

    pub fn uniform(graph: Graph) -> Result<Self> {
        let weights = WeightVector::uniform(graph.n())?;
        Ok(WeightedGraph { graph, weights })
    }

    /// Parses a graph file followed by a line `weights a/b c/d ...`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph_lines = Vec::new();
        let mut weights = None;
        for (i, line) in text.lines().enumerate() {
            match line.trim().strip_prefix("weights") {
                Some(rest) => {
                    let parsed = rest
                        .split_whitespace()
                        .map(crate::rational::parse_rational)
                        .collect::<Result<Vec<_>>>()
                        .map_err(|e| Error::parse(i + 1, e.to_string()))?;
                    weights = Some(parsed);
                }
                None => graph_lines.push(line),
            }
        }
        let graph = Graph::parse(&graph_lines.join("\n"))?;
        match weights {
            Some(w) => WeightedGraph::new(graph, w),
            None => WeightedGraph::uniform(graph),
        }
    }
}

/// Outcome of [`check_setup`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetupReport {
    /// Right-hand side constant `(ceil(h/3) - 1)p / (1 + (ceil(h/3) - 2)p)`.
    pub threshold: Rational,
    /// Vertices whose neighbourhood weight falls short of the bound.
    pub failing: Vec<usize>,
    /// A cycle with length in `h/2..=h`, if the graph has one.
    pub cycle: Option<Cycle>,
}

impl SetupReport {
    pub fn setup_holds(&self) -> bool {
        self.failing.is_empty()
    }

    /// The degree condition holds but no cycle of the wanted length exists.
    pub fn counterexample(&self) -> bool {
        self.setup_holds() && self.cycle.is_none()
    }
}

/// For even `h` and `0 < p <= p_0(h, 1)`, checks
/// `sum_{u ~ v} x(u) >= (ceil(h/3) - 1)p/(1 + (ceil(h/3) - 2)p) + (1-2p)/p x(v)`
/// at every vertex and searches for a cycle with length in `h/2..=h`.
pub fn check_setup(wg: &WeightedGraph, h: usize, p: &Rational) -> Result<SetupReport> {
    if h % 2 != 0 {
        return Err(Error::invalid(format!("h = {h} must be even")));
    }
    check_open_unit_interval(p)?;
    let p0 = p_zero(h, 1)?.p0;
    if *p > p0 {
        return Err(Error::precondition(format!("p = {p} exceeds p_0 = {p0}")));
    }
    let third = Rational::from_integer(BigInt::from(ceil_div(h as u64, 3)));
    let one = Rational::one();
    let two = &one + &one;
    let threshold = (&third - &one) * p / (&one + (&third - &two) * p);
    let slope = (&one - &two * p) / p;
    let g = &wg.graph;
    let failing = (0..g.n())
        .filter(|&v| {
            let mass = wg.weights.mass(g.neighbours(v));
            mass < &threshold + &slope * wg.weights.get(v)
        })
        .collect();
    let lengths = cycle_lengths(g)?;
    let cycle = match (h / 2..=h.min(g.n())).find(|&l| l >= 3 && lengths[l]) {
        Some(l) => find_cycle_with_length(g, l)?,
        None => None,
    };
    debug_assert!(!threshold.is_negative());
    Ok(SetupReport {
        threshold,
        failing,
        cycle,
    })
}
