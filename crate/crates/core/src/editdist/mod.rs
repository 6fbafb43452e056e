//! Edit distance: the exact oracle, Monte Carlo estimation, the classical
//! editing strategies and the closed-form edit distance functions of
//! `Forb(C_h^t)` with their regimes.

mod oracle;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{ceil_div, check_open_unit_interval, check_unit_interval};
use crate::spectrum::gamma_closed_form;
use crate::{Error, Rational, Result};

pub use oracle::{dist_to_property, min_edits, monte_carlo_ed, EstimateReport, MAX_ORACLE_VERTICES};

fn rat(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Normalised edit costs of the three classical strategies for `Forb(C_h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyBounds {
    /// `ceil(h/2) - 1` black parts: `(1-p)/(ceil(h/2) - 1)`.
    pub cliques: Rational,
    /// One white part and `ceil(h/3) - 1` black parts:
    /// `p(1-p)/(1 + (ceil(h/3) - 2) p)`.
    pub mixed: Rational,
    /// Two white parts, odd `h` only: `p/2`.
    pub bipartite: Option<Rational>,
}

impl StrategyBounds {
    pub fn min(&self) -> Rational {
        let best = self.cliques.clone().min(self.mixed.clone());
        match &self.bipartite {
            Some(b) => best.min(b.clone()),
            None => best,
        }
    }
}

pub fn strategy_edit_bounds(h: usize, p: &Rational) -> Result<StrategyBounds> {
    if h < 4 {
        return Err(Error::invalid(format!("h = {h} is below 4")));
    }
    check_unit_interval(p)?;
    let h = h as u64;
    let q = Rational::one() - p;
    let cliques = &q / rat(ceil_div(h, 2) - 1);
    let mixed = p * &q / (Rational::one() + rat(ceil_div(h, 3)) * p - rat(2) * p);
    let bipartite = (h % 2 == 1).then(|| p / rat(2));
    Ok(StrategyBounds { cliques, mixed, bipartite })
}

/// `(h, t, c_0, l_0, p_0)` with `c_0 = floor((floor(h/t) + 1)/3)`,
/// `l_0 = ceil(h/(2t+1))` and `p_0 = t/(c_0 l_0 - c_0 - l_0 + t + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegimeParams {
    pub h: usize,
    pub t: usize,
    pub c0: u64,
    pub l0: u64,
    pub p0: Rational,
    /// Whether `h >= 4t(2t+1)`, under which the middle regime is known to
    /// start at `p_0`.
    pub hypothesis_holds: bool,
}

/// Computes `p_0`. Requires `t >= 1` and `(t+1) | h`; `h >= 4t(2t+1)` is
/// reported rather than enforced so that `h = 10, t = 1` can be evaluated.
pub fn p_zero(h: usize, t: usize) -> Result<RegimeParams> {
    if t < 1 {
        return Err(Error::invalid("t must be at least 1"));
    }
    if h % (t + 1) != 0 {
        return Err(Error::precondition(format!("t + 1 = {} does not divide h = {h}", t + 1)));
    }
    let (hh, tt) = (h as u64, t as u64);
    let c0 = (hh / tt + 1) / 3;
    let l0 = ceil_div(hh, 2 * tt + 1);
    let denom = (c0 * l0 + tt + 1) as i128 - (c0 + l0) as i128;
    if denom <= 0 {
        return Err(Error::precondition(format!("p_0 denominator {denom} is not positive at h = {h}, t = {t}")));
    }
    Ok(RegimeParams {
        h,
        t,
        c0,
        l0,
        p0: Rational::new(BigInt::from(tt), BigInt::from(denom)),
        hypothesis_holds: h >= 4 * t * (2 * t + 1),
    })
}

/// Which known result (or conjecture) gives the edit distance at `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `p` is 0 or 1, where the edit distance vanishes.
    Boundary,
    /// `t = 1`, `4 <= h <= 9`: the classical strategies are optimal for all `p`.
    SmallCycle,
    /// `(t+1)` does not divide `h`: `gamma` for all `p`.
    NonDivisible,
    /// `(t+1) | h` and `p >= 1/l_0`: `gamma`.
    Upper,
    /// `(t+1) | h` and `p_0 <= p <= 1/l_0`: `p(1-p)/(t + (l_0 - t - 1) p)`.
    Middle,
    /// `h = 10`, `t = 1`, `0 < p < 1/7`: `p(1-p)/(1 + 2p)`.
    C10SmallP,
    /// `h = 12`, `t = 1`, `0 < p < 1/10`: `p(1-p)/(1 + 2p)`.
    C12SmallP,
    /// `(t+1) | h`, `0 < p < p_0` for other `(h, t)`: `gamma` is only
    /// conjectured to be the edit distance.
    ConjecturalGap,
}

impl Regime {
    pub fn tag(self) -> &'static str {
        match self {
            Regime::Boundary => "boundary",
            Regime::SmallCycle => "small-cycle",
            Regime::NonDivisible => "non-divisible",
            Regime::Upper => "upper",
            Regime::Middle => "middle",
            Regime::C10SmallP => "c10-small-p",
            Regime::C12SmallP => "c12-small-p",
            Regime::ConjecturalGap => "conjectural-gap",
        }
    }

    pub fn is_proven(self) -> bool {
        self != Regime::ConjecturalGap
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Value of the edit distance function with the regime it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdValue {
    pub value: Rational,
    pub regime: Regime,
    pub proven: bool,
}

/// The formula attached to `regime`, evaluated at `p` in `(0, 1)` without
/// checking that `p` lies in the regime's interval.
pub fn regime_formula(h: usize, t: usize, regime: Regime, p: &Rational) -> Result<Rational> {
    match regime {
        Regime::Boundary => Ok(Rational::zero()),
        Regime::SmallCycle | Regime::NonDivisible | Regime::Upper | Regime::ConjecturalGap => {
            gamma_closed_form(h, t, p)
        }
        Regime::Middle | Regime::C10SmallP | Regime::C12SmallP => {
            check_open_unit_interval(p)?;
            if t < 1 {
                return Err(Error::invalid("t must be at least 1"));
            }
            let l0 = ceil_div(h as u64, 2 * t as u64 + 1);
            let q = Rational::one() - p;
            let slope = rat(l0) - rat(t as u64 + 1);
            Ok(p * &q / (rat(t as u64) + slope * p))
        }
    }
}

/// The known edit distance of `Forb(C_h^t)` at `p`, or `gamma` flagged as
/// unproven inside the gap below `p_0`.
pub fn ed_closed_form(h: usize, t: usize, p: &Rational) -> Result<EdValue> {
    let regime = classify(h, t, p)?;
    Ok(EdValue {
        value: regime_formula(h, t, regime, p)?,
        regime,
        proven: regime.is_proven(),
    })
}

fn classify(h: usize, t: usize, p: &Rational) -> Result<Regime> {
    if t < 1 {
        return Err(Error::invalid("t must be at least 1"));
    }
    check_unit_interval(p)?;
    let small_cycle = t == 1 && (4..=9).contains(&h);
    let covered = small_cycle || h > 2 * t * (t + 1);
    if !covered {
        return Err(Error::precondition(format!("no known result covers h = {h}, t = {t}")));
    }
    if p.is_zero() || p.is_one() {
        return Ok(Regime::Boundary);
    }
    if small_cycle {
        return Ok(Regime::SmallCycle);
    }
    if h % (t + 1) != 0 {
        return Ok(Regime::NonDivisible);
    }
    let l0 = ceil_div(h as u64, 2 * t as u64 + 1);
    if *p >= Rational::new(BigInt::one(), BigInt::from(l0)) {
        return Ok(Regime::Upper);
    }
    let params = p_zero(h, t)?;
    match (h, t) {
        (10, 1) if *p < params.p0 => Ok(Regime::C10SmallP),
        (12, 1) if *p < params.p0 => Ok(Regime::C12SmallP),
        (10, 1) | (12, 1) => Ok(Regime::Middle),
        _ if params.hypothesis_holds && *p >= params.p0 => Ok(Regime::Middle),
        _ if params.hypothesis_holds => Ok(Regime::ConjecturalGap),
        _ => Err(Error::precondition(format!(
            "no known result covers h = {h}, t = {t} below p = 1/{l0}"
        ))),
    }
}

/// `(1-2p)(1-p) / ((ceil(h/(2t)) - 3) p^2)` at `p = 1/ceil(h/(2t+1))`.
pub fn long_cycle_ratio(h: usize, t: usize) -> Result<Rational> {
    if t < 1 {
        return Err(Error::invalid("t must be at least 1"));
    }
    let half = ceil_div(h as u64, 2 * t as u64);
    if half <= 3 {
        return Err(Error::invalid(format!("ceil(h/(2t)) = {half} must exceed 3")));
    }
    let p = Rational::new(BigInt::one(), BigInt::from(ceil_div(h as u64, 2 * t as u64 + 1)));
    let one = Rational::one();
    Ok((&one - rat(2) * &p) * (&one - &p) / (rat(half - 3) * &p * &p))
}
