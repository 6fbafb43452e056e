//! Exact `dist(G, Forb(F))` for small graphs and its Monte Carlo average over
//! `G(n, p)`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::graphs::{find_induced, sample_gnp, trial_seed, Graph};
use crate::rational::check_unit_interval;
use crate::{Error, Rational, Result};

/// Largest host graph the exact oracle accepts.
pub const MAX_ORACLE_VERTICES: usize = 16;

fn check_family(forbidden: &[Graph]) -> Result<()> {
    if forbidden.is_empty() {
        return Err(Error::invalid("forbidden family is empty"));
    }
    // With both a complete and an edgeless member the class is finite, so
    // large graphs have nothing to be edited into.
    let complete = forbidden.iter().any(Graph::is_complete);
    let edgeless = forbidden.iter().any(Graph::is_edgeless);
    if complete && edgeless {
        return Err(Error::invalid(
            "forbidden family contains both a complete and an edgeless graph, so the property is trivial",
        ));
    }
    Ok(())
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * n + v
}

struct Deepening<'a> {
    forbidden: &'a [Graph],
    g: Graph,
    frozen: Vec<bool>,
}

impl Deepening<'_> {
    fn find_copy(&self) -> Option<Vec<usize>> {
        self.forbidden.iter().find_map(|h| find_induced(&self.g, h))
    }

    /// Can `G` be made free of induced forbidden copies with at most `budget`
    /// further pair flips, never touching a frozen pair?
    fn solve(&mut self, budget: usize) -> bool {
        let Some(copy) = self.find_copy() else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        // Some pair inside this copy must be flipped. Branch on which one is
        // flipped first; earlier choices stay frozen in later branches.
        let n = self.g.n();
        let mut pairs = Vec::new();
        for (i, &u) in copy.iter().enumerate() {
            for &v in &copy[i + 1..] {
                if !self.frozen[pair_index(n, u, v)] {
                    pairs.push((u, v));
                }
            }
        }
        let mut newly_frozen = Vec::new();
        let mut found = false;
        for (u, v) in pairs {
            let idx = pair_index(n, u, v);
            self.frozen[idx] = true;
            self.g.toggle_edge(u, v);
            found = self.solve(budget - 1);
            self.g.toggle_edge(u, v);
            newly_frozen.push(idx);
            if found {
                break;
            }
        }
        for idx in newly_frozen {
            self.frozen[idx] = false;
        }
        found
    }
}

/// Least number of pair flips turning `G` into a graph with no induced copy
/// of any member of `forbidden`.
pub fn min_edits(g: &Graph, forbidden: &[Graph]) -> Result<usize> {
    if g.n() > MAX_ORACLE_VERTICES {
        return Err(Error::SizeCap {
            what: "host graph order for the exact oracle",
            limit: MAX_ORACLE_VERTICES,
            got: g.n(),
        });
    }
    check_family(forbidden)?;
    let n = g.n();
    let mut search = Deepening {
        forbidden,
        g: g.clone(),
        frozen: vec![false; n * n],
    };
    let total = n * n.saturating_sub(1) / 2;
    for budget in 0..=total {
        if search.solve(budget) {
            return Ok(budget);
        }
    }
    unreachable!("the complete or the edgeless graph avoids a non-trivial family")
}

/// `dist(G, Forb(F)) = min |E(G) xor E(G')| / C(n, 2)`.
pub fn dist_to_property(g: &Graph, forbidden: &[Graph]) -> Result<Rational> {
    let edits = min_edits(g, forbidden)?;
    let n = g.n();
    if n < 2 {
        return Ok(Rational::zero());
    }
    Ok(Rational::new(BigInt::from(edits), BigInt::from(n * (n - 1) / 2)))
}

/// Monte Carlo estimate of `E[dist(G(n, p), Forb(F))]`.
#[derive(Clone, Debug, PartialEq)]
pub struct EstimateReport {
    pub n: usize,
    pub p: Rational,
    pub seed: u64,
    pub trials: usize,
    /// Exact distance of each trial, in trial order.
    pub distances: Vec<Rational>,
    pub mean: Rational,
    /// Sample standard deviation over `sqrt(trials)`; zero for one trial.
    pub std_error: f64,
}

/// Samples `trials` graphs `G(n, p)`, trial `i` with seed `seed + i`, and
/// averages their exact distances. Trials run in parallel; the result does
/// not depend on the schedule.
pub fn monte_carlo_ed(n: usize, p: &Rational, forbidden: &[Graph], trials: usize, seed: u64) -> Result<EstimateReport> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::SizeCap {
            what: "host graph order for the exact oracle",
            limit: MAX_ORACLE_VERTICES,
            got: n,
        });
    }
    check_unit_interval(p)?;
    check_family(forbidden)?;
    let distances = (0..trials)
        .into_par_iter()
        .map(|i| dist_to_property(&sample_gnp(n, p, trial_seed(seed, i))?, forbidden))
        .collect::<Result<Vec<_>>>()?;
    let count = Rational::from_integer(BigInt::from(trials));
    let mean = crate::rational::sum(&distances) / &count;
    let std_error = if trials == 1 {
        0.0
    } else {
        let m = mean.to_f64().unwrap_or(0.0);
        let ss: f64 = distances
            .iter()
            .map(|d| {
                let x = d.to_f64().unwrap_or(0.0) - m;
                x * x
            })
            .sum();
        (ss / (trials - 1) as f64).sqrt() / (trials as f64).sqrt()
    };
    Ok(EstimateReport {
        n,
        p: p.clone(),
        seed,
        trials,
        distances,
        mean,
        std_error,
    })
}
