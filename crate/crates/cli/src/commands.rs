use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use num_traits::{One, Zero};
use thiserror::Error;

use crgedit::editdist::{dist_to_property, ed_closed_form, min_edits, monte_carlo_ed, p_zero};
use crgedit::graphs::cycle_power;
use crgedit::qp::{is_p_core, p_core_structure_violations, solve_g, symmetrisation_check};
use crgedit::rational::{display, parse_rational, to_f64};
use crgedit::search::{check_setup, find_candidate_crg, heuristic_search};
use crgedit::spectrum::{clique_spectrum, default_window, gamma_closed_form, gamma_from_spectrum, spectrum_table};
use crgedit::{Crg, Graph, Rational, WeightedGraph};

use crate::{Command, Family};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] crgedit::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: crgedit::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::File { .. } => 2,
            CliError::Core(e) => match e {
                crgedit::Error::Parse { .. } | crgedit::Error::DimensionMismatch { .. } => 2,
                crgedit::Error::InvalidParameter(_) | crgedit::Error::Precondition(_) => 3,
                crgedit::Error::SizeCap { .. } => 4,
            },
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Evenly spaced rational grid, both endpoints included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub start: Rational,
    pub end: Rational,
    pub steps: usize,
}

impl Grid {
    pub fn points(&self) -> Vec<Rational> {
        let step = (&self.end - &self.start) / Rational::from_integer(self.steps.into());
        (0..=self.steps)
            .map(|i| &self.start + &step * Rational::from_integer(i.into()))
            .collect()
    }
}

pub fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, end, steps] = parts[..] else {
        return Err(format!("grid {s:?} must look like start:end:steps"));
    };
    let start = parse_rational(start).map_err(|e| e.to_string())?;
    let end = parse_rational(end).map_err(|e| e.to_string())?;
    let steps: usize = steps.trim().parse().map_err(|_| format!("bad step count {steps:?}"))?;
    if steps == 0 {
        return Err("step count must be at least 1".into());
    }
    if start < Rational::zero() || end > Rational::one() || start > end {
        return Err(format!("grid must satisfy 0 <= start <= end <= 1, got {start} and {end}"));
    }
    Ok(Grid { start, end, steps })
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> crgedit::Result<T>) -> Result<T> {
    parse(&read(path)?).map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn family(f: &Family) -> Result<Vec<Graph>> {
    match f.h {
        Some(h) => Ok(vec![cycle_power(h, f.t)?]),
        None => f.forbidden.iter().map(|p| load(p, Graph::parse)).collect(),
    }
}

fn weights_text(out: &mut String, weights: &[Rational]) {
    for (v, w) in weights.iter().enumerate() {
        let _ = writeln!(out, "x[{v}] = {}", display(w));
    }
}

pub fn run(command: Command) -> Result<String> {
    let mut out = String::new();
    match command {
        Command::Edfun { h, t, p } => {
            let ed = ed_closed_form(h, t, &p)?;
            let _ = writeln!(out, "ed = {}", display(&ed.value));
            let _ = writeln!(out, "regime = {}", ed.regime);
            let _ = writeln!(out, "proven = {}", ed.proven);
        }
        Command::Gamma { h, t, p, brute } => {
            let gamma = gamma_closed_form(h, t, &p)?;
            let _ = writeln!(out, "gamma = {}", display(&gamma));
            if brute {
                let (r_max, s_max) = default_window(h, t);
                let spec = clique_spectrum(&[cycle_power(h, t)?], r_max, s_max)?;
                let brute_gamma = gamma_from_spectrum(&spec, &p)?;
                let _ = writeln!(out, "gamma (spectrum) = {}", display(&brute_gamma));
                let _ = writeln!(out, "agree = {}", brute_gamma == gamma);
            }
        }
        Command::Spectrum { family: f, r_max, s_max, p, csv } => {
            let forbidden = family(&f)?;
            let (dr, ds) = match f.h {
                Some(h) => default_window(h, f.t),
                None => {
                    let n = forbidden.iter().map(Graph::n).max().unwrap_or(1);
                    (n, n)
                }
            };
            let spec = clique_spectrum(&forbidden, r_max.unwrap_or(dr), s_max.unwrap_or(ds))?;
            let table = spectrum_table(&spec);
            let _ = writeln!(out, "{:>3} {:>3}  member  extreme", "r", "s");
            for &(r, s, member, extreme) in &table {
                let _ = writeln!(
                    out,
                    "{r:>3} {s:>3}  {:<6}  {}",
                    if member { "yes" } else { "no" },
                    if extreme { "*" } else { "" }
                );
            }
            let extremes: Vec<String> = spec.extreme_points().iter().map(|(r, s)| format!("({r},{s})")).collect();
            let _ = writeln!(out, "extreme points: {}", extremes.join(" "));
            for w in &spec.warnings {
                let _ = writeln!(out, "warning: {w}");
            }
            if let Some(p) = p {
                let _ = writeln!(out, "gamma = {}", display(&gamma_from_spectrum(&spec, &p)?));
            }
            if let Some(path) = csv {
                let mut text = String::from("r,s,member,extreme\n");
                for (r, s, member, extreme) in table {
                    let _ = writeln!(text, "{r},{s},{member},{extreme}");
                }
                write_file(&path, &text)?;
            }
        }
        Command::Gk { crg, p } => {
            let k = load(&crg, Crg::parse)?;
            let res = solve_g(&k, &p)?;
            let _ = writeln!(out, "g = {}", display(&res.value));
            let support: Vec<String> = res.support.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "support = {}", support.join(" "));
            weights_text(&mut out, res.weights.as_slice());
        }
        Command::Pcore { crg, p } => {
            let k = load(&crg, Crg::parse)?;
            let core = is_p_core(&k, &p)?;
            let _ = writeln!(out, "p-core = {core}");
            if core {
                let report = p_core_structure_violations(&k, &p);
                let _ = writeln!(out, "structure = {}", if report.passed() { "pass" } else { "fail" });
                for v in &report.violations {
                    let _ = writeln!(out, "  {}-{} {:?}: {}", v.pair.0, v.pair.1, v.colour, v.rule);
                }
                if p <= Rational::new(1.into(), 2.into()) {
                    let sym = symmetrisation_check(&k, &p)?;
                    let _ = writeln!(out, "g = {}", display(&sym.g));
                    let _ = writeln!(out, "weight identities = {}", if sym.passed() { "pass" } else { "fail" });
                    weights_text(&mut out, sym.weights.as_slice());
                }
            }
        }
        Command::Embed { graph, crg } => {
            let g = load(&graph, Graph::parse)?;
            let k = load(&crg, Crg::parse)?;
            match crgedit::crg::embeds(&g, &k) {
                Some(emb) => {
                    let _ = writeln!(out, "embeds = true");
                    let pairs: Vec<String> = emb.map.iter().enumerate().map(|(u, x)| format!("{u}->{x}")).collect();
                    let _ = writeln!(out, "map = {}", pairs.join(" "));
                }
                None => {
                    let _ = writeln!(out, "embeds = false");
                }
            }
        }
        Command::Dist { graph, family: f } => {
            let g = load(&graph, Graph::parse)?;
            let forbidden = family(&f)?;
            let edits = min_edits(&g, &forbidden)?;
            let _ = writeln!(out, "edits = {edits}");
            let _ = writeln!(out, "dist = {}", display(&dist_to_property(&g, &forbidden)?));
        }
        Command::Montecarlo { n, p, trials, seed, family: f } => {
            let forbidden = family(&f)?;
            let rep = monte_carlo_ed(n, &p, &forbidden, trials, seed)?;
            let _ = writeln!(out, "n = {}, p = {}, trials = {}, seed = {}", rep.n, rep.p, rep.trials, rep.seed);
            let _ = writeln!(out, "mean = {}", display(&rep.mean));
            let _ = writeln!(out, "std error = {:.10}", rep.std_error);
        }
        Command::Pzero { h, t } => {
            let params = p_zero(h, t)?;
            let _ = writeln!(out, "p0 = {}", display(&params.p0));
            let _ = writeln!(out, "c0 = {}, l0 = {}", params.c0, params.l0);
            let _ = writeln!(out, "h >= 4t(2t+1): {}", params.hypothesis_holds);
        }
        Command::Search { h, t, p, kmax, heuristic, seed } => {
            let outcome = match heuristic {
                Some(samples) => heuristic_search(h, t, &p, kmax, samples, seed)?,
                None => find_candidate_crg(h, t, &p, kmax)?,
            };
            out.push_str(&outcome.to_text());
        }
        Command::Curve { h, t, grid, output } => {
            let csv = curve_csv(h, t, &grid)?;
            match output {
                Some(path) => write_file(&path, &csv)?,
                None => out.push_str(&csv),
            }
        }
        Command::SetupCheck { graph, h, p } => {
            let wg = load(&graph, WeightedGraph::parse)?;
            let rep = check_setup(&wg, h, &p)?;
            let _ = writeln!(out, "threshold = {}", display(&rep.threshold));
            let failing: Vec<String> = rep.failing.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "failing vertices = {}", if failing.is_empty() { "none".into() } else { failing.join(" ") });
            match &rep.cycle {
                Some(c) => {
                    let vs: Vec<String> = c.vertices().iter().map(usize::to_string).collect();
                    let _ = writeln!(out, "cycle (length {}) = {}", c.len(), vs.join(" "));
                }
                None => {
                    let _ = writeln!(out, "cycle = none");
                }
            }
            let _ = writeln!(out, "setup holds = {}", rep.setup_holds());
            let _ = writeln!(out, "counterexample = {}", rep.counterexample());
        }
    }
    Ok(out)
}

/// Header `p,gamma,ed,regime,proven` followed by decimal columns.
pub fn curve_csv(h: usize, t: usize, grid: &Grid) -> Result<String> {
    let mut csv = String::from("p,gamma,ed,regime,proven,p_decimal,gamma_decimal,ed_decimal\n");
    for p in grid.points() {
        let ed = ed_closed_form(h, t, &p)?;
        // gamma vanishes at both ends, as every bound does.
        let gamma = if p.is_zero() || p.is_one() { Rational::zero() } else { gamma_closed_form(h, t, &p)? };
        let _ = writeln!(
            csv,
            "{p},{gamma},{},{},{},{:.10},{:.10},{:.10}",
            ed.value,
            ed.regime,
            ed.proven,
            to_f64(&p),
            to_f64(&gamma),
            to_f64(&ed.value)
        );
    }
    Ok(csv)
}
