//! The quadratic program `g_K(p) = min { x^T M_K(p) x : x >= 0, sum x = 1 }`,
//! solved exactly, and the p-core machinery built on it.

mod linear;
mod pcore;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::crg::{Crg, EdgeColour, VertexColour};
use crate::rational::{check_open_unit_interval, check_unit_interval};
use crate::{Error, Rational, Result};

pub use pcore::{
    check_p_core_structure, component_additivity_check, degree_profile, is_p_core, is_p_core_exhaustive,
    p_core_structure_violations, symmetrisation_check, DegreeProfile, StructureReport,
    StructureViolation, SymmetrisationReport,
};

/// Largest CRG the support-enumeration solver accepts.
pub const MAX_QP_VERTICES: usize = 16;

/// `M_K(p)`: `p` on white vertices and white edges, `1 - p` on black vertices
/// and black edges, `0` on grey edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QpMatrix {
    k: usize,
    entries: Vec<Rational>,
}

impl QpMatrix {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.k + j]
    }

    /// `x^T M x`.
    pub fn quadratic_form(&self, x: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.k {
            if x[i].is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for j in 0..self.k {
                row += self.get(i, j) * &x[j];
            }
            acc += &x[i] * row;
        }
        acc
    }
}

/// Nonnegative rational weights on the vertices of a CRG summing to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::invalid("weight vector is empty"));
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::invalid(format!("negative weight {w}")));
        }
        let total = crate::rational::sum(&weights);
        if !total.is_one() {
            return Err(Error::invalid(format!("weights sum to {total}, not 1")));
        }
        Ok(WeightVector(weights))
    }

    pub fn uniform(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("weight vector is empty"));
        }
        let w = Rational::new(BigInt::one(), BigInt::from(k));
        Ok(WeightVector(vec![w; k]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.0[v]
    }

    /// Total weight of a vertex set.
    pub fn mass(&self, vertices: impl IntoIterator<Item = usize>) -> Rational {
        vertices.into_iter().fold(Rational::zero(), |acc, v| acc + &self.0[v])
    }
}

/// Optimum of the program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QpResult {
    pub value: Rational,
    pub weights: WeightVector,
    /// Vertices of positive weight, ascending.
    pub support: Vec<usize>,
}

pub fn build_matrix(k: &Crg, p: &Rational) -> Result<QpMatrix> {
    check_unit_interval(p)?;
    let q = Rational::one() - p;
    let n = k.k();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let e = if i == j {
                match k.vertex_colour(i) {
                    VertexColour::White => p.clone(),
                    VertexColour::Black => q.clone(),
                }
            } else {
                match k.edge_colour(i, j) {
                    EdgeColour::White => p.clone(),
                    EdgeColour::Black => q.clone(),
                    EdgeColour::Grey => Rational::zero(),
                }
            };
            entries.push(e);
        }
    }
    Ok(QpMatrix { k: n, entries })
}

struct Stationary {
    value: Rational,
    support: Vec<usize>,
    x: Vec<Rational>,
}

/// Exact `g_K(p)` for `0 < p < 1`.
///
/// Every nonempty support `S` is tried: the KKT system `M_S x = lambda 1`,
/// `1^T x = 1` is solved exactly and kept when `x >= 0`; its value is then
/// `lambda`. Supports with a singular system are skipped, since an optimum
/// of least support always has a nonsingular one. Ties are broken towards
/// the lexicographically least support.
pub fn solve_g(k: &Crg, p: &Rational) -> Result<QpResult> {
    check_open_unit_interval(p)?;
    let n = k.k();
    if n > MAX_QP_VERTICES {
        return Err(Error::SizeCap {
            what: "CRG order for the exact QP",
            limit: MAX_QP_VERTICES,
            got: n,
        });
    }
    let matrix = build_matrix(k, p)?;
    // Scale M by denom(p) so the KKT system is integral.
    let den = p.denom().clone();
    let white = p.numer().clone();
    let black = &den - &white;
    let scaled: Vec<BigInt> = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            let colour_is_black = if i == j {
                k.vertex_colour(i) == VertexColour::Black
            } else {
                match k.edge_colour(i, j) {
                    EdgeColour::Grey => return BigInt::zero(),
                    EdgeColour::Black => true,
                    EdgeColour::White => false,
                }
            };
            if colour_is_black {
                black.clone()
            } else {
                white.clone()
            }
        })
        .collect();

    let best = (1u32..1 << n)
        .into_par_iter()
        .filter_map(|mask| stationary_point(n, &scaled, &den, mask))
        .min_by(|a, b| a.value.cmp(&b.value).then_with(|| a.support.cmp(&b.support)))
        .expect("singleton supports are always feasible");

    debug_assert_eq!(matrix.quadratic_form(&best.x), best.value);
    Ok(QpResult {
        value: best.value,
        weights: WeightVector(best.x),
        support: best.support,
    })
}

fn stationary_point(n: usize, scaled: &[BigInt], den: &BigInt, mask: u32) -> Option<Stationary> {
    let support: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
    let m = support.len();
    // Unknowns: x_S then mu = den * lambda.
    let mut a = vec![vec![BigInt::zero(); m + 1]; m + 1];
    let mut b = vec![BigInt::zero(); m + 1];
    for (r, &i) in support.iter().enumerate() {
        for (c, &j) in support.iter().enumerate() {
            a[r][c] = scaled[i * n + j].clone();
        }
        a[r][m] = BigInt::from(-1);
    }
    for c in 0..m {
        a[m][c] = BigInt::one();
    }
    b[m] = BigInt::one();
    let sol = linear::solve_integer_system(a, b)?;
    if sol[..m].iter().any(|x| x.is_negative()) {
        return None;
    }
    let value = &sol[m] / Rational::from_integer(den.clone());
    let mut x = vec![Rational::zero(); n];
    for (r, &i) in support.iter().enumerate() {
        x[i] = sol[r].clone();
    }
    let support = (0..n).filter(|&v| x[v].is_positive()).collect();
    Some(Stationary { value, support, x })
}

/// `g_{K(r,s)}(p) = p(1-p) / (r(1-p) + s p)`.
pub fn g_closed_form(r: usize, s: usize, p: &Rational) -> Result<Rational> {
    if r + s == 0 {
        return Err(Error::invalid("K(0, 0) has no vertices"));
    }
    check_open_unit_interval(p)?;
    let q = Rational::one() - p;
    let denom = Rational::from_integer(BigInt::from(r)) * &q + Rational::from_integer(BigInt::from(s)) * p;
    Ok(p * q / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn black_pair(edge: EdgeColour) -> Crg {
        Crg::from_fn(vec![VertexColour::Black; 2], |_, _| edge).unwrap()
    }

    #[test]
    fn matrix_examples() {
        let p = ratio(1, 3);
        let m = build_matrix(&Crg::grey_clique(1, 1).unwrap(), &p).unwrap();
        assert_eq!((m.get(0, 0), m.get(1, 1), m.get(0, 1)), (&p, &ratio(2, 3), &int(0)));

        let m = build_matrix(&black_pair(EdgeColour::White), &p).unwrap();
        assert_eq!(m.entries, vec![ratio(2, 3), ratio(1, 3), ratio(1, 3), ratio(2, 3)]);

        let wb = Crg::parse("WB\nw\n").unwrap();
        let m = build_matrix(&wb, &p).unwrap();
        assert_eq!(m.entries, vec![p.clone(), p.clone(), p.clone(), ratio(2, 3)]);

        assert!(build_matrix(&wb, &ratio(4, 3)).is_err());
    }

    #[test]
    fn solves_k12_at_quarter() {
        let res = solve_g(&Crg::grey_clique(1, 2).unwrap(), &ratio(1, 4)).unwrap();
        assert_eq!(res.value, ratio(3, 20));
        assert_eq!(res.weights.as_slice(), &[ratio(3, 5), ratio(1, 5), ratio(1, 5)]);
        assert_eq!(res.support, vec![0, 1, 2]);
    }

    #[test]
    fn single_white_vertex() {
        let p = ratio(2, 7);
        let res = solve_g(&Crg::grey_clique(1, 0).unwrap(), &p).unwrap();
        assert_eq!(res.value, p);
        assert_eq!(res.weights.as_slice(), &[int(1)]);
    }

    /// min over x in [0,1] of x^T M x for a 2x2 matrix, by a fine grid
    /// refined with the exact stationary point of the parabola.
    fn two_vertex_oracle(m: [[f64; 2]; 2]) -> (f64, f64) {
        let f = |x: f64| m[0][0] * x * x + 2.0 * m[0][1] * x * (1.0 - x) + m[1][1] * (1.0 - x) * (1.0 - x);
        let mut best = (f(0.0), 0.0);
        for i in 0..=10_000 {
            let x = i as f64 / 10_000.0;
            if f(x) < best.0 {
                best = (f(x), x);
            }
        }
        best
    }

    #[test]
    fn black_pair_with_white_edge_matches_oracle() {
        let (value, x) = two_vertex_oracle([[2.0 / 3.0, 1.0 / 3.0], [1.0 / 3.0, 2.0 / 3.0]]);
        assert!((value - 0.5).abs() < 1e-9 && (x - 0.5).abs() < 1e-9);
        let res = solve_g(&black_pair(EdgeColour::White), &ratio(1, 3)).unwrap();
        assert_eq!(res.value, ratio(1, 2));
        assert_eq!(res.weights.as_slice(), &[ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn ties_prefer_least_support() {
        // Black edge between black vertices: every x gives 1 - p.
        let res = solve_g(&black_pair(EdgeColour::Black), &ratio(1, 3)).unwrap();
        assert_eq!(res.value, ratio(2, 3));
        assert_eq!(res.support, vec![0]);
    }

    #[test]
    fn rejects_degenerate_p() {
        let k = Crg::grey_clique(1, 1).unwrap();
        assert!(solve_g(&k, &int(0)).is_err());
        assert!(solve_g(&k, &int(1)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(g_closed_form(1, 2, &ratio(1, 4)).unwrap(), ratio(3, 20));
        let p = ratio(3, 11);
        assert_eq!(g_closed_form(1, 0, &p).unwrap(), p);
        assert_eq!(g_closed_form(0, 1, &p).unwrap(), int(1) - &p);
        assert_eq!(g_closed_form(0, 4, &ratio(1, 2)).unwrap(), ratio(1, 8));
        assert!(g_closed_form(0, 0, &p).is_err());
    }

    #[test]
    fn solver_matches_closed_form_on_grey_cliques() {
        for p in [ratio(1, 10), ratio(1, 3), ratio(1, 2), ratio(5, 7), ratio(99, 100)] {
            for r in 0..=4 {
                for s in 0..=4 {
                    if r + s == 0 {
                        continue;
                    }
                    let k = Crg::grey_clique(r, s).unwrap();
                    assert_eq!(solve_g(&k, &p).unwrap().value, g_closed_form(r, s, &p).unwrap());
                }
            }
        }
    }

    #[test]
    fn weight_vector_validation() {
        assert!(WeightVector::new(vec![ratio(1, 2), ratio(1, 3)]).is_err());
        assert!(WeightVector::new(vec![ratio(3, 2), ratio(-1, 2)]).is_err());
        assert!(WeightVector::new(vec![]).is_err());
        assert_eq!(WeightVector::uniform(4).unwrap().mass(0..4), int(1));
    }
}
