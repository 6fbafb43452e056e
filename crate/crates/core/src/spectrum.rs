//! Clique spectra `Gamma(H)`: the pairs `(r, s)` for which no forbidden graph
//! embeds into the all-grey CRG `K(r, s)`, and the upper bound
//! `gamma_H(p) = min g_{K(r,s)}(p)` over the spectrum.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::crg::{embeds, Crg};
use crate::graphs::Graph;
use crate::qp::g_closed_form;
use crate::rational::{ceil_div, check_open_unit_interval};
use crate::{Error, Rational, Result};

/// `Gamma(H)` restricted to the window `0..=r_max` x `0..=s_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSpectrum {
    r_max: usize,
    s_max: usize,
    member: Vec<bool>,
    /// Members on the window edge, whose extremality the window cannot confirm.
    pub warnings: Vec<String>,
}

impl CliqueSpectrum {
    /// Builds a spectrum from an explicit membership predicate. The result is
    /// made downward closed.
    pub fn from_fn(r_max: usize, s_max: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut member = vec![false; (r_max + 1) * (s_max + 1)];
        for r in 0..=r_max {
            for s in 0..=s_max {
                let below = (r == 0 || member[(r - 1) * (s_max + 1) + s])
                    && (s == 0 || member[r * (s_max + 1) + s - 1]);
                member[r * (s_max + 1) + s] = below && f(r, s);
            }
        }
        let mut spec = CliqueSpectrum {
            r_max,
            s_max,
            member,
            warnings: Vec::new(),
        };
        spec.warnings = spec.boundary_warnings();
        spec
    }

    pub fn r_max(&self) -> usize {
        self.r_max
    }

    pub fn s_max(&self) -> usize {
        self.s_max
    }

    pub fn contains(&self, r: usize, s: usize) -> bool {
        r <= self.r_max && s <= self.s_max && self.member[r * (self.s_max + 1) + s]
    }

    /// All members, ordered by `r` then `s`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..=self.r_max {
            for s in 0..=self.s_max {
                if self.contains(r, s) {
                    out.push((r, s));
                }
            }
        }
        out
    }

    /// Members `(r, s)` with neither `(r + 1, s)` nor `(r, s + 1)` a member.
    pub fn extreme_points(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .into_iter()
            .filter(|&(r, s)| !self.contains(r + 1, s) && !self.contains(r, s + 1))
            .collect()
    }

    pub fn is_extreme(&self, r: usize, s: usize) -> bool {
        self.contains(r, s) && !self.contains(r + 1, s) && !self.contains(r, s + 1)
    }

    fn boundary_warnings(&self) -> Vec<String> {
        self.extreme_points()
            .into_iter()
            .filter(|&(r, s)| r == self.r_max || s == self.s_max)
            .map(|(r, s)| {
                format!(
                    "extreme point ({r}, {s}) touches the window boundary (r_max = {}, s_max = {})",
                    self.r_max, self.s_max
                )
            })
            .collect()
    }
}

/// Window guaranteed to contain every extreme point of `Forb(C_h^t)`:
/// `r_max = t + 2`, `s_max = ceil(h / 2)`.
pub fn default_window(h: usize, t: usize) -> (usize, usize) {
    (t + 2, ceil_div(h as u64, 2) as usize)
}

/// Computes the spectrum of `Forb(forbidden)` by embedding tests.
///
/// Cells are processed by increasing `r + s`; a cell is only tested when both
/// of its lower neighbours are members. Cells on one anti-diagonal are tested
/// in parallel.
pub fn clique_spectrum(forbidden: &[Graph], r_max: usize, s_max: usize) -> Result<CliqueSpectrum> {
    if forbidden.is_empty() {
        return Err(Error::invalid("forbidden family is empty"));
    }
    let width = s_max + 1;
    let mut member = vec![false; (r_max + 1) * width];
    for d in 0..=r_max + s_max {
        let cells: Vec<(usize, usize)> = (0..=d.min(r_max))
            .filter(|&r| d - r <= s_max)
            .map(|r| (r, d - r))
            .filter(|&(r, s)| (r == 0 || member[(r - 1) * width + s]) && (s == 0 || member[r * width + s - 1]))
            .collect();
        let results: Vec<bool> = cells
            .par_iter()
            .map(|&(r, s)| {
                if r + s == 0 {
                    return true;
                }
                let k = Crg::grey_clique(r, s).expect("r + s >= 1");
                forbidden.iter().all(|h| embeds(h, &k).is_none())
            })
            .collect();
        for (&(r, s), ok) in cells.iter().zip(results) {
            member[r * width + s] = ok;
        }
    }
    Ok(CliqueSpectrum::from_fn(r_max, s_max, |r, s| member[r * width + s]))
}

/// `gamma(p)`: the least `p(1-p)/(r(1-p) + s p)` over the extreme points.
pub fn gamma_from_spectrum(spec: &CliqueSpectrum, p: &Rational) -> Result<Rational> {
    check_open_unit_interval(p)?;
    spec.extreme_points()
        .into_iter()
        .filter(|&(r, s)| r + s > 0)
        .map(|(r, s)| g_closed_form(r, s, p))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or_else(|| Error::invalid("spectrum contains only (0, 0)"))
}

/// `gamma(p)` minimised over every member rather than the extreme points.
pub fn gamma_over_all_pairs(spec: &CliqueSpectrum, p: &Rational) -> Result<Rational> {
    check_open_unit_interval(p)?;
    spec.pairs()
        .into_iter()
        .filter(|&(r, s)| r + s > 0)
        .map(|(r, s)| g_closed_form(r, s, p))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or_else(|| Error::invalid("spectrum contains only (0, 0)"))
}

fn check_gamma_hypotheses(h: usize, t: usize) -> Result<()> {
    if t < 1 {
        return Err(Error::invalid("t must be at least 1"));
    }
    if h < (t * (t + 1)).max(4) {
        return Err(Error::invalid(format!(
            "h = {h} is below max(t(t+1), 4) = {}",
            (t * (t + 1)).max(4)
        )));
    }
    Ok(())
}

/// The term `p(1-p) / (r(1-p) + (ceil(h/(t+r+1)) - 1) p)`.
pub fn gamma_term(h: usize, t: usize, r: usize, p: &Rational) -> Rational {
    let q = Rational::one() - p;
    let s = ceil_div(h as u64, (t + r + 1) as u64) - 1;
    let denom = Rational::from_integer(BigInt::from(r)) * &q + Rational::from_integer(BigInt::from(s)) * p;
    p * q / denom
}

/// `gamma(p)` for `Forb(C_h^t)` in closed form. Requires `t >= 1` and
/// `h >= max(t(t+1), 4)`.
pub fn gamma_closed_form(h: usize, t: usize, p: &Rational) -> Result<Rational> {
    check_gamma_hypotheses(h, t)?;
    check_open_unit_interval(p)?;
    let mut best = (0..=t).map(|r| gamma_term(h, t, r, p)).min().expect("t >= 1");
    if h % (t + 1) != 0 {
        let extra = p / Rational::from_integer(BigInt::from(t + 1));
        best = best.min(extra);
    }
    Ok(best)
}

/// `gamma(p) = p(1-p) / (t(1-p) + (ceil(h/(2t+1)) - 1) p)` for `(t+1) | h`,
/// `h >= t(2t+1)` and `0 < p <= 1/ceil(h/(2t+1))`.
///
/// # Panics
///
/// If the `r = t` term is not the minimum of the closed form.
pub fn gamma_small_p(h: usize, t: usize, p: &Rational) -> Result<Rational> {
    if t < 1 {
        return Err(Error::invalid("t must be at least 1"));
    }
    if h % (t + 1) != 0 {
        return Err(Error::precondition(format!("t + 1 = {} does not divide h = {h}", t + 1)));
    }
    if h < t * (2 * t + 1) {
        return Err(Error::precondition(format!("h = {h} is below t(2t+1) = {}", t * (2 * t + 1))));
    }
    check_open_unit_interval(p)?;
    let l0 = ceil_div(h as u64, (2 * t + 1) as u64);
    let cap = Rational::new(BigInt::one(), BigInt::from(l0));
    if *p > cap {
        return Err(Error::precondition(format!("p = {p} exceeds 1/{l0}")));
    }
    let value = gamma_term(h, t, t, p);
    let general = gamma_closed_form(h, t, p)?;
    assert_eq!(value, general, "r = t term is not minimal at h = {h}, t = {t}, p = {p}");
    Ok(value)
}

/// Renders the window as a table: one row per cell with membership and
/// extreme-point markers.
pub fn spectrum_table(spec: &CliqueSpectrum) -> Vec<(usize, usize, bool, bool)> {
    let mut rows = Vec::new();
    for r in 0..=spec.r_max {
        for s in 0..=spec.s_max {
            rows.push((r, s, spec.contains(r, s), spec.is_extreme(r, s)));
        }
    }
    rows
}
