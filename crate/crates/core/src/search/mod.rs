//! Search for candidate CRGs: members of `K(Forb(C_h^t))` whose value
//! `g_K(p)` lies strictly below `gamma(p)`.
//!
//! Any candidate contains a p-core sub-CRG that is again a candidate, so the
//! search only needs to cover CRGs shaped like p-core CRGs, and may discard
//! anything that violates a property every p-core candidate has.

mod checks;
mod enumerate;
mod setup;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::crg::{in_forb_family, Crg, EdgeColour, VertexColour};
use crate::graphs::{cycle_power, Graph};
use crate::qp::{is_p_core, p_core_structure_violations, solve_g, MAX_QP_VERTICES};
use crate::rational::{ceil_div, check_open_unit_interval, display};
use crate::spectrum::gamma_closed_form;
use crate::{Error, Rational, Result};

pub use checks::{
    check_black_vertex_properties, check_forbidden_cycles, check_long_grey_cycle, check_white_vertex_count,
    evaluate_black_vertex_items, weighted_common_neighbour_check, BlackVertexReport, CheckOutcome,
    CommonNeighbourReport,
};
pub use enumerate::{enumerate_crgs, Constraints, Shape, MAX_EXHAUSTIVE_K};
pub use setup::{check_setup, SetupReport, WeightedGraph};

/// Filters applied before `g_K(p)` is evaluated. Each is a property of every
/// p-core candidate, enabled only where its hypotheses hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prune {
    /// Exactly `t - 1` white vertices. Needs `p <= 1/2`, `h >= 2t(t+1) + 1`.
    WhiteCount,
    /// The cycle bans of [`check_forbidden_cycles`]. Needs `p <= 1/2`,
    /// `h >= 2t + 2`.
    ForbiddenCycles,
    /// More than `(ceil(h/(2t+1)) - 1)(t - r)` black grey neighbours at every
    /// black vertex. Needs `(t+1) | h`, `h >= t(2t+1)`,
    /// `p <= 1/ceil(h/(2t+1))`.
    DegreeFloor,
}

impl Prune {
    pub fn name(self) -> &'static str {
        match self {
            Prune::WhiteCount => "white-count",
            Prune::ForbiddenCycles => "forbidden-cycles",
            Prune::DegreeFloor => "degree-floor",
        }
    }
}

/// The prunes whose hypotheses hold at `(h, t, p)`.
pub fn active_prunes(h: usize, t: usize, p: &Rational) -> Vec<Prune> {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let mut out = Vec::new();
    if *p <= half && h > 2 * t * (t + 1) {
        out.push(Prune::WhiteCount);
    }
    if *p <= half && h >= 2 * t + 2 {
        out.push(Prune::ForbiddenCycles);
    }
    let l0 = ceil_div(h as u64, 2 * t as u64 + 1);
    if h % (t + 1) == 0 && h >= t * (2 * t + 1) && *p <= Rational::new(BigInt::one(), BigInt::from(l0)) {
        out.push(Prune::DegreeFloor);
    }
    out
}

fn degree_floor_ok(k: &Crg, h: usize, t: usize) -> bool {
    let r = k.white_vertices().len();
    if r >= t {
        return true;
    }
    let floor = (ceil_div(h as u64, 2 * t as u64 + 1) as usize - 1) * (t - r);
    k.black_vertices().into_iter().all(|v| {
        let count = k
            .black_vertices()
            .into_iter()
            .filter(|&u| u != v && k.edge_colour(u, v) == EdgeColour::Grey)
            .count();
        count > floor
    })
}

/// The first active prune that rejects `k`, if any.
fn rejected_by(k: &Crg, h: usize, t: usize, prunes: &[Prune]) -> Result<Option<Prune>> {
    for &prune in prunes {
        let ok = match prune {
            Prune::WhiteCount => check_white_vertex_count(k, t),
            Prune::ForbiddenCycles => check_forbidden_cycles(k, h, t)?.passed,
            Prune::DegreeFloor => degree_floor_ok(k, h, t),
        };
        if !ok {
            return Ok(Some(prune));
        }
    }
    Ok(None)
}

/// A CRG in `K(Forb(C_h^t))` with `g_K(p) < gamma(p)`, with the outcome of
/// each structural check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateReport {
    pub crg: Crg,
    pub g_value: Rational,
    pub gamma_value: Rational,
    /// `gamma - g`, always positive.
    pub slack: Rational,
    pub checks: BTreeMap<&'static str, bool>,
}

impl CandidateReport {
    fn build(crg: Crg, h: usize, t: usize, p: &Rational, g_value: Rational, gamma_value: Rational) -> Result<Self> {
        let slack = &gamma_value - &g_value;
        debug_assert!(slack.is_positive());
        let mut checks = BTreeMap::new();
        let p_core = is_p_core(&crg, p)?;
        checks.insert("p-core", p_core);
        checks.insert("p-core-shape", p_core_structure_violations(&crg, p).passed());
        checks.insert("white-count", check_white_vertex_count(&crg, t));
        checks.insert("forbidden-cycles", check_forbidden_cycles(&crg, h, t)?.passed);
        checks.insert("long-grey-cycle", check_long_grey_cycle(&crg, h, t)?.is_some());
        if let Ok(rep) = check_black_vertex_properties(&crg, p, h, t) {
            for (item, name) in [(1, "black-total-degree"), (2, "black-black-degree"), (3, "black-weight"), (4, "black-count")] {
                checks.insert(name, rep.item_passed(item));
            }
        }
        Ok(CandidateReport {
            crg,
            g_value,
            gamma_value,
            slack,
            checks,
        })
    }

    /// Structured text: the CRG in its file format, then values and checks.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("crg:\n");
        out.push_str(&self.crg.to_text());
        let _ = writeln!(out, "g = {}", display(&self.g_value));
        let _ = writeln!(out, "gamma = {}", display(&self.gamma_value));
        let _ = writeln!(out, "eps = {}", display(&self.slack));
        for (name, ok) in &self.checks {
            let _ = writeln!(out, "check {name}: {}", if *ok { "pass" } else { "fail" });
        }
        out
    }
}

/// Counts for one CRG order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelStats {
    pub k: usize,
    /// Isomorphism classes produced by the enumeration (or samples drawn).
    pub enumerated: usize,
    /// Discarded by a prune.
    pub pruned: usize,
    /// Survivors whose `g_K(p)` was computed.
    pub evaluated: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub h: usize,
    pub t: usize,
    pub p: Rational,
    pub gamma: Rational,
    /// False for sampled searches.
    pub exhaustive: bool,
    pub prunes: Vec<Prune>,
    pub levels: Vec<LevelStats>,
    pub candidate: Option<CandidateReport>,
}

impl SearchOutcome {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "h = {}, t = {}, p = {}", self.h, self.t, display(&self.p));
        let _ = writeln!(out, "gamma = {}", display(&self.gamma));
        let _ = writeln!(out, "mode = {}", if self.exhaustive { "exhaustive" } else { "heuristic (non-exhaustive)" });
        let names: Vec<&str> = self.prunes.iter().map(|p| p.name()).collect();
        let _ = writeln!(out, "prunes = {}", if names.is_empty() { "none".to_string() } else { names.join(",") });
        for l in &self.levels {
            let _ = writeln!(out, "k = {}: enumerated {}, pruned {}, evaluated {}", l.k, l.enumerated, l.pruned, l.evaluated);
        }
        match &self.candidate {
            Some(c) => {
                out.push_str("candidate found\n");
                out.push_str(&c.to_text());
            }
            None => {
                let k_max = self.levels.last().map_or(0, |l| l.k);
                if self.exhaustive {
                    let _ = writeln!(out, "no candidate among all CRGs with k <= {k_max}");
                } else {
                    let _ = writeln!(out, "no candidate among the sampled CRGs");
                }
            }
        }
        out
    }
}

fn check_search_params(h: usize, t: usize, p: &Rational) -> Result<(Graph, Rational)> {
    check_open_unit_interval(p)?;
    let gamma = gamma_closed_form(h, t, p)?;
    Ok((cycle_power(h, t)?, gamma))
}

/// Evaluates survivors in order and returns the first candidate.
fn first_candidate(
    survivors: &[Crg],
    forbidden: &Graph,
    p: &Rational,
    gamma: &Rational,
) -> Result<Option<(Crg, Rational)>> {
    let hits: Vec<Result<Option<(usize, Rational)>>> = survivors
        .par_iter()
        .enumerate()
        .map(|(i, k)| {
            let g = solve_g(k, p)?.value;
            if g < *gamma && in_forb_family(k, std::slice::from_ref(forbidden))? {
                Ok(Some((i, g)))
            } else {
                Ok(None)
            }
        })
        .collect();
    for hit in hits {
        if let Some((i, g)) = hit? {
            return Ok(Some((survivors[i].clone(), g)));
        }
    }
    Ok(None)
}

/// Exhaustive search over all CRGs with at most `k_max` vertices, by
/// increasing order and canonical order within an order. Returns the first
/// candidate or a certificate of absence (the per-order counts).
pub fn find_candidate_crg(h: usize, t: usize, p: &Rational, k_max: usize) -> Result<SearchOutcome> {
    if k_max > MAX_EXHAUSTIVE_K {
        return Err(Error::SizeCap {
            what: "k_max for exhaustive search",
            limit: MAX_EXHAUSTIVE_K,
            got: k_max,
        });
    }
    let (forbidden, gamma) = check_search_params(h, t, p)?;
    let prunes = active_prunes(h, t, p);
    let mut constraints = Constraints::p_core_shape(p);
    if prunes.contains(&Prune::WhiteCount) {
        constraints = constraints.with_white_count(t - 1);
    }
    let mut outcome = SearchOutcome {
        h,
        t,
        p: p.clone(),
        gamma: gamma.clone(),
        exhaustive: true,
        prunes: prunes.clone(),
        levels: Vec::new(),
        candidate: None,
    };
    for k in 1..=k_max {
        let all = enumerate_crgs(k, &constraints)?;
        let mut survivors = Vec::new();
        for crg in &all {
            if rejected_by(crg, h, t, &prunes)?.is_none() {
                survivors.push(crg.clone());
            }
        }
        outcome.levels.push(LevelStats {
            k,
            enumerated: all.len(),
            pruned: all.len() - survivors.len(),
            evaluated: survivors.len(),
        });
        if let Some((crg, g)) = first_candidate(&survivors, &forbidden, p, &gamma)? {
            outcome.candidate = Some(CandidateReport::build(crg, h, t, p, g, gamma.clone())?);
            break;
        }
    }
    Ok(outcome)
}

/// Draws a random CRG on `k` vertices with the p-core shape at `p` and, if
/// given, exactly `whites` white vertices.
fn random_shaped_crg(rng: &mut ChaCha8Rng, k: usize, shape: Shape, whites: Option<usize>) -> Crg {
    let vertices: Vec<VertexColour> = (0..k)
        .map(|i| match whites {
            Some(r) => {
                if i < r {
                    VertexColour::White
                } else {
                    VertexColour::Black
                }
            }
            None => {
                if rng.random_bool(0.5) {
                    VertexColour::Black
                } else {
                    VertexColour::White
                }
            }
        })
        .collect();
    let colours = [EdgeColour::Grey, EdgeColour::White, EdgeColour::Black];
    let mut edges = Vec::with_capacity(k * k);
    for u in 0..k {
        for v in u + 1..k {
            let allowed: Vec<EdgeColour> = colours
                .into_iter()
                .filter(|&e| shape.allows(e, vertices[u], vertices[v]))
                .collect();
            edges.push(allowed[rng.random_range(0..allowed.len())]);
        }
    }
    let mut it = edges.into_iter();
    Crg::from_fn(vertices, |_, _| it.next().expect("one colour per pair")).expect("shape-consistent colours")
}

/// Sampled search on `k`-vertex CRGs for orders beyond exhaustive reach,
/// using the same prunes. The outcome is flagged non-exhaustive.
pub fn heuristic_search(h: usize, t: usize, p: &Rational, k: usize, samples: usize, seed: u64) -> Result<SearchOutcome> {
    if k == 0 || k > MAX_QP_VERTICES {
        return Err(Error::SizeCap {
            what: "CRG order for heuristic search",
            limit: MAX_QP_VERTICES,
            got: k,
        });
    }
    let (forbidden, gamma) = check_search_params(h, t, p)?;
    let prunes = active_prunes(h, t, p);
    let whites = prunes.contains(&Prune::WhiteCount).then(|| t - 1);
    if whites.is_some_and(|r| r > k) {
        return Err(Error::invalid(format!("k = {k} cannot hold {} white vertices", t - 1)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = Shape::at(p);
    let mut survivors = Vec::new();
    for _ in 0..samples {
        let crg = random_shaped_crg(&mut rng, k, shape, whites);
        if rejected_by(&crg, h, t, &prunes)?.is_none() {
            survivors.push(crg);
        }
    }
    let mut outcome = SearchOutcome {
        h,
        t,
        p: p.clone(),
        gamma: gamma.clone(),
        exhaustive: false,
        prunes,
        levels: vec![LevelStats {
            k,
            enumerated: samples,
            pruned: samples - survivors.len(),
            evaluated: survivors.len(),
        }],
        candidate: None,
    };
    if let Some((crg, g)) = first_candidate(&survivors, &forbidden, p, &gamma)? {
        outcome.candidate = Some(CandidateReport::build(crg, h, t, p, g, gamma)?);
    }
    Ok(outcome)
}

/// Result of re-examining discarded CRGs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub discarded: usize,
    pub audited: usize,
    /// Audited CRGs that turned out to be p-core candidates after all.
    pub violations: Vec<(Prune, Crg)>,
    /// CRGs outside the p-core shape that are p-core candidates.
    pub shape_violations: Vec<Crg>,
}

/// Samples each discarded CRG with probability `rate` and verifies it is not
/// a p-core candidate. CRGs outside the p-core shape are audited the same
/// way for orders up to `min(k_max, 4)`.
pub fn audit_pruning(h: usize, t: usize, p: &Rational, k_max: usize, rate: f64, seed: u64) -> Result<AuditReport> {
    if k_max > MAX_EXHAUSTIVE_K {
        return Err(Error::SizeCap {
            what: "k_max for exhaustive search",
            limit: MAX_EXHAUSTIVE_K,
            got: k_max,
        });
    }
    let (forbidden, gamma) = check_search_params(h, t, p)?;
    let prunes = active_prunes(h, t, p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let is_p_core_candidate = |k: &Crg| -> Result<bool> {
        Ok(solve_g(k, p)?.value < gamma
            && is_p_core(k, p)?
            && in_forb_family(k, std::slice::from_ref(&forbidden))?)
    };
    let mut report = AuditReport {
        discarded: 0,
        audited: 0,
        violations: Vec::new(),
        shape_violations: Vec::new(),
    };
    for k in 1..=k_max {
        for crg in enumerate_crgs(k, &Constraints::p_core_shape(p))? {
            let Some(prune) = rejected_by(&crg, h, t, &prunes)? else {
                continue;
            };
            report.discarded += 1;
            if rng.random_bool(rate) {
                report.audited += 1;
                if is_p_core_candidate(&crg)? {
                    report.violations.push((prune, crg));
                }
            }
        }
    }
    let shape = Constraints::p_core_shape(p);
    for k in 2..=k_max.min(4) {
        for crg in enumerate_crgs(k, &Constraints::none())? {
            if shape.accepts(&crg) {
                continue;
            }
            report.discarded += 1;
            if rng.random_bool(rate) {
                report.audited += 1;
                if is_p_core_candidate(&crg)? {
                    report.shape_violations.push(crg);
                }
            }
        }
    }
    Ok(report)
}
