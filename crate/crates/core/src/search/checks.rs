//! Structural predicates a candidate CRG for `Forb(C_h^t)` must satisfy.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::crg::{Crg, EdgeColour};
use crate::graphs::{cycle_lengths, find_cycle_with_length, find_independent_set};
use crate::qp::{degree_profile, is_p_core, solve_g, WeightVector};
use crate::rational::{ceil_div, check_open_unit_interval};
use crate::spectrum::gamma_closed_form;
use crate::{Error, Rational, Result};

fn rat(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Outcome of a single pass/fail predicate with a human-readable reason.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(detail: impl Into<String>) -> Self {
        CheckOutcome {
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        CheckOutcome {
            passed: false,
            detail: detail.into(),
        }
    }
}

/// Cycle bans on `K_B` implied by `K` lying in `K(Forb(C_h^t))`, with `r`
/// the number of white vertices of `K`:
///
/// * `r < t`: no grey cycle with length in `ceil(h/(t+r+1))..=floor(h/t)`;
/// * `r = t`: at most `ceil(h/(2t+1)) - 1` black vertices;
/// * `r > t`: `(t+1)` does not divide `h` and there are no black vertices.
pub fn check_forbidden_cycles(k: &Crg, h: usize, t: usize) -> Result<CheckOutcome> {
    if t < 1 {
        return Err(Error::invalid("t must be at least 1"));
    }
    let r = k.white_vertices().len();
    let black = k.black_vertices().len();
    if r < t {
        let lo = ceil_div(h as u64, (t + r + 1) as u64) as usize;
        let hi = h / t;
        let (kb, _) = k.black_grey_graph();
        let lengths = cycle_lengths(&kb)?;
        return Ok(match (lo..=hi.min(black)).find(|&l| l >= 3 && lengths[l]) {
            Some(l) => CheckOutcome::fail(format!("K_B has a grey cycle of length {l} in [{lo}, {hi}]")),
            None => CheckOutcome::pass(format!("K_B has no grey cycle of length in [{lo}, {hi}]")),
        });
    }
    if r == t {
        let cap = ceil_div(h as u64, (2 * t + 1) as u64) as usize - 1;
        return Ok(if black <= cap {
            CheckOutcome::pass(format!("{black} black vertices <= {cap}"))
        } else {
            CheckOutcome::fail(format!("{black} black vertices > {cap}"))
        });
    }
    Ok(if h % (t + 1) == 0 {
        CheckOutcome::fail(format!("{r} > t white vertices but t + 1 divides h = {h}"))
    } else if black > 0 {
        CheckOutcome::fail(format!("{r} > t white vertices and {black} black vertices"))
    } else {
        CheckOutcome::pass(format!("{r} white vertices, no black vertices"))
    })
}

/// `|VW(K)| = t - 1`.
pub fn check_white_vertex_count(k: &Crg, t: usize) -> bool {
    t >= 1 && k.white_vertices().len() == t - 1
}

/// Black vertices failing each of the four degree and weight conditions on a
/// candidate with slack `eps = gamma - g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlackVertexReport {
    pub eps: Rational,
    /// `d_G(v) = (t-1 + (l_0-t)p)/D + eps/p + (1-2p)/p x(v)`, `D = t + (l_0-t-1)p`.
    pub total_degree: Vec<usize>,
    /// `d_G^B(v) = (t-r-1 + (l_0-t+r)p)/D + (r+1) eps/p + (1-2p)/p x(v)`.
    pub black_degree: Vec<usize>,
    /// `x(v) <= p/D - eps/(1-p)`.
    pub weight_bound: Vec<usize>,
    /// `deg_G^B(v) > (l_0 - 1)(t - r)`.
    pub black_count: Vec<usize>,
}

impl BlackVertexReport {
    pub fn passed(&self) -> bool {
        self.total_degree.is_empty()
            && self.black_degree.is_empty()
            && self.weight_bound.is_empty()
            && self.black_count.is_empty()
    }

    pub fn item_passed(&self, item: usize) -> bool {
        match item {
            1 => self.total_degree.is_empty(),
            2 => self.black_degree.is_empty(),
            3 => self.weight_bound.is_empty(),
            4 => self.black_count.is_empty(),
            _ => false,
        }
    }
}

/// Evaluates the four black-vertex conditions on arbitrary weights and slack,
/// without checking that `K` is a p-core candidate.
pub fn evaluate_black_vertex_items(
    k: &Crg,
    p: &Rational,
    h: usize,
    t: usize,
    x: &WeightVector,
    eps: &Rational,
) -> Result<BlackVertexReport> {
    check_open_unit_interval(p)?;
    if t < 1 {
        return Err(Error::invalid("t must be at least 1"));
    }
    let profile = degree_profile(k, x)?;
    let r = k.white_vertices().len() as u64;
    let (t64, l0) = (t as u64, ceil_div(h as u64, 2 * t as u64 + 1));
    let one = Rational::one();
    let d = rat(t64) + (rat(l0) - rat(t64 + 1)) * p;
    let slope = (&one - rat(2) * p) / p;
    let total_const = (rat(t64) - &one + (rat(l0) - rat(t64)) * p) / &d + eps / p;
    let black_const = (rat(t64) - rat(r) - &one + (rat(l0) + rat(r) - rat(t64)) * p) / &d + rat(r + 1) * eps / p;
    let weight_cap = p / &d - eps / (&one - p);
    let count_floor = (l0 - 1) * t64.saturating_sub(r);

    let mut report = BlackVertexReport {
        eps: eps.clone(),
        total_degree: Vec::new(),
        black_degree: Vec::new(),
        weight_bound: Vec::new(),
        black_count: Vec::new(),
    };
    for v in k.black_vertices() {
        let xv = x.get(v);
        if profile.grey[v] != &total_const + &slope * xv {
            report.total_degree.push(v);
        }
        if profile.grey_black[v] != &black_const + &slope * xv {
            report.black_degree.push(v);
        }
        if *xv > weight_cap {
            report.weight_bound.push(v);
        }
        if profile.grey_black_count[v] as u64 <= count_floor {
            report.black_count.push(v);
        }
    }
    Ok(report)
}

/// The black-vertex conditions on a p-core candidate `K`: checks that
/// `(t+1) | h`, `h >= t(2t+1)`, `p <= 1/ceil(h/(2t+1))`, `r < t`, that `K` is
/// p-core and that `g_K(p) < gamma(p)`, then evaluates them at the optimal
/// weights with `eps = gamma - g`.
pub fn check_black_vertex_properties(k: &Crg, p: &Rational, h: usize, t: usize) -> Result<BlackVertexReport> {
    check_open_unit_interval(p)?;
    if t < 1 {
        return Err(Error::invalid("t must be at least 1"));
    }
    if h % (t + 1) != 0 || h < t * (2 * t + 1) {
        return Err(Error::precondition(format!("need (t+1) | h and h >= t(2t+1), got h = {h}, t = {t}")));
    }
    let l0 = ceil_div(h as u64, 2 * t as u64 + 1);
    if *p > Rational::new(BigInt::one(), BigInt::from(l0)) {
        return Err(Error::precondition(format!("p = {p} exceeds 1/{l0}")));
    }
    let r = k.white_vertices().len();
    if r >= t {
        return Err(Error::precondition(format!("{r} white vertices, need fewer than t = {t}")));
    }
    if !is_p_core(k, p)? {
        return Err(Error::precondition(format!("CRG is not {p}-core")));
    }
    let res = solve_g(k, p)?;
    let gamma = gamma_closed_form(h, t, p)?;
    let eps = &gamma - &res.value;
    if !eps.is_positive() {
        return Err(Error::precondition(format!("g = {} is not below gamma = {gamma}", res.value)));
    }
    evaluate_black_vertex_items(k, p, h, t, &res.weights, &eps)
}

/// A longest grey cycle of `K_B`, in `K`'s labels, if it has length at least
/// `ceil(h/(2t))`; `None` otherwise.
pub fn check_long_grey_cycle(k: &Crg, h: usize, t: usize) -> Result<Option<Vec<usize>>> {
    if t < 1 {
        return Err(Error::invalid("t must be at least 1"));
    }
    let need = (ceil_div(h as u64, 2 * t as u64) as usize).max(3);
    let (kb, labels) = k.black_grey_graph();
    let lengths = cycle_lengths(&kb)?;
    let Some(len) = (need..lengths.len()).rev().find(|&l| lengths[l]) else {
        return Ok(None);
    };
    let cycle = find_cycle_with_length(&kb, len)?.expect("length was found above");
    Ok(Some(cycle.vertices().iter().map(|&i| labels[i]).collect()))
}

/// Outcome of [`weighted_common_neighbour_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonNeighbourReport {
    /// Whether `d_G(v) > 1/m` for every vertex.
    pub hypothesis: bool,
    /// An `m`-set whose grey neighbourhoods are pairwise disjoint, found while
    /// the hypothesis holds.
    pub violation: Option<Vec<usize>>,
}

impl CommonNeighbourReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// On an all-black CRG with grey and white edges: if `d_G(v) > 1/m` for all
/// `v`, then every `m` vertices include two with a common grey neighbour.
/// Searches for a counterexample set.
pub fn weighted_common_neighbour_check(k: &Crg, x: &WeightVector, m: usize) -> Result<CommonNeighbourReport> {
    if m < 2 {
        return Err(Error::precondition(format!("m = {m} must be at least 2")));
    }
    if !k.white_vertices().is_empty() {
        return Err(Error::precondition("CRG has white vertices"));
    }
    if !k.edges_of(EdgeColour::Black).is_empty() {
        return Err(Error::precondition("CRG has black edges"));
    }
    let n = k.k();
    if n > 64 {
        return Err(Error::SizeCap {
            what: "CRG order for common-neighbour check",
            limit: 64,
            got: n,
        });
    }
    let profile = degree_profile(k, x)?;
    let threshold = Rational::new(BigInt::one(), BigInt::from(m));
    let hypothesis = profile.grey.iter().all(|d| *d > threshold);
    if !hypothesis || n < m {
        return Ok(CommonNeighbourReport {
            hypothesis,
            violation: None,
        });
    }
    let nbr: Vec<u64> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| u != v && k.edge_colour(u, v) == EdgeColour::Grey)
                .fold(0u64, |acc, u| acc | 1 << u)
        })
        .collect();
    let share: Vec<u64> = (0..n)
        .map(|a| (0..n).filter(|&b| b != a && nbr[a] & nbr[b] != 0).fold(0u64, |acc, b| acc | 1 << b))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let violation = find_independent_set(&share, all, m).map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect());
    Ok(CommonNeighbourReport { hypothesis, violation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crg::VertexColour;
    use crate::rational::ratio;

    fn all_black(k: usize, grey: impl Fn(usize, usize) -> bool) -> Crg {
        Crg::from_fn(vec![VertexColour::Black; k], |u, v| {
            if grey(u, v) {
                EdgeColour::Grey
            } else {
                EdgeColour::White
            }
        })
        .unwrap()
    }

    fn cyclic(k: usize) -> impl Fn(usize, usize) -> bool {
        move |u, v| (u + 1) % k == v || (v + 1) % k == u
    }

    #[test]
    fn forbidden_cycle_examples() {
        assert!(check_forbidden_cycles(&Crg::grey_clique(1, 3).unwrap(), 10, 1).unwrap().passed);
        assert!(!check_forbidden_cycles(&Crg::grey_clique(1, 4).unwrap(), 10, 1).unwrap().passed);
        assert!(!check_forbidden_cycles(&Crg::grey_clique(0, 10).unwrap(), 10, 1).unwrap().passed);
        assert!(!check_forbidden_cycles(&Crg::grey_clique(2, 0).unwrap(), 10, 1).unwrap().passed);
        assert!(check_forbidden_cycles(&Crg::grey_clique(2, 0).unwrap(), 9, 1).unwrap().passed);
        assert!(check_forbidden_cycles(&all_black(4, cyclic(4)), 10, 1).unwrap().passed);
    }

    #[test]
    fn white_count_examples() {
        assert!(check_white_vertex_count(&Crg::grey_clique(0, 3).unwrap(), 1));
        assert!(!check_white_vertex_count(&Crg::grey_clique(1, 3).unwrap(), 1));
        assert!(check_white_vertex_count(&Crg::grey_clique(1, 3).unwrap(), 2));
    }

    #[test]
    fn long_cycle_examples() {
        let c = check_long_grey_cycle(&Crg::grey_clique(0, 6).unwrap(), 10, 1).unwrap().unwrap();
        assert_eq!(c.len(), 6);
        assert!(check_long_grey_cycle(&Crg::grey_clique(0, 4).unwrap(), 10, 1).unwrap().is_none());
        // Grey 5-cycle with white chords.
        let c = check_long_grey_cycle(&all_black(5, cyclic(5)), 10, 1).unwrap().unwrap();
        assert_eq!(c.len(), 5);
        // Labels refer to K, skipping white vertices.
        let mixed = Crg::parse("WBBBBB\nggggg\ngwwg\ngww\ngw\ng\n").unwrap();
        let c = check_long_grey_cycle(&mixed, 10, 1).unwrap().unwrap();
        assert!(c.iter().all(|&v| v >= 1));
    }

    #[test]
    fn black_vertex_preconditions() {
        // K(0,4) at p = 1/8 has g = 7/32 > gamma = 7/80.
        let err = check_black_vertex_properties(&Crg::grey_clique(0, 4).unwrap(), &ratio(1, 8), 10, 1);
        assert!(matches!(err, Err(Error::Precondition(_))));
        let err = check_black_vertex_properties(&Crg::grey_clique(0, 4).unwrap(), &ratio(1, 3), 10, 1);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn black_vertex_item_four_violation() {
        // Grey 4-cycle: every black vertex has 2 black grey neighbours, but
        // h = 10, t = 1 demands more than (4 - 1)(1 - 0) = 3.
        let k = all_black(4, cyclic(4));
        let x = WeightVector::uniform(4).unwrap();
        let rep = evaluate_black_vertex_items(&k, &ratio(1, 8), 10, 1, &x, &ratio(1, 100)).unwrap();
        assert!(!rep.item_passed(4));
        assert_eq!(rep.black_count, vec![0, 1, 2, 3]);
    }

    #[test]
    fn common_neighbour_examples() {
        let k5 = Crg::grey_clique(0, 5).unwrap();
        let rep = weighted_common_neighbour_check(&k5, &WeightVector::uniform(5).unwrap(), 3).unwrap();
        assert!(rep.hypothesis && rep.passed());

        let triangles = all_black(6, |u, v| u / 3 == v / 3);
        let rep = weighted_common_neighbour_check(&triangles, &WeightVector::uniform(6).unwrap(), 2).unwrap();
        assert!(!rep.hypothesis && rep.passed());

        let err = weighted_common_neighbour_check(&k5, &WeightVector::uniform(5).unwrap(), 1);
        assert!(matches!(err, Err(Error::Precondition(_))));
        let err = weighted_common_neighbour_check(&Crg::grey_clique(1, 2).unwrap(), &WeightVector::uniform(3).unwrap(), 2);
        assert!(err.is_err());
    }
}
