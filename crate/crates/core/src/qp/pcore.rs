//! p-core CRGs: the test itself, the colouring shape every p-core has, and
//! the identities satisfied by its optimal weights.

use num_traits::{One, Signed, Zero};

use super::{solve_g, WeightVector};
use crate::crg::{Crg, EdgeColour, VertexColour};
use crate::rational::check_open_unit_interval;
use crate::{Error, Rational, Result};

/// Checks `1/g_K(p) = sum over components of 1/g_{K_i}(p)`.
pub fn component_additivity_check(k: &Crg, p: &Rational) -> Result<bool> {
    let whole = solve_g(k, p)?.value;
    let mut inverse_sum = Rational::zero();
    for comp in k.components() {
        inverse_sum += solve_g(&comp, p)?.value.recip();
    }
    Ok(whole.recip() == inverse_sum)
}

/// True iff `g_K(p) < g_{K'}(p)` for every proper sub-CRG `K'`.
///
/// Only the one-vertex deletions are solved: any proper sub-CRG lies inside
/// some `K - v`, and `g` can only grow when vertices are removed.
pub fn is_p_core(k: &Crg, p: &Rational) -> Result<bool> {
    check_open_unit_interval(p)?;
    if k.k() == 1 {
        return Ok(true);
    }
    let g = solve_g(k, p)?.value;
    for v in 0..k.k() {
        let rest: Vec<usize> = (0..k.k()).filter(|&u| u != v).collect();
        if solve_g(&k.sub_crg(&rest)?, p)?.value <= g {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`is_p_core`] by comparison against all `2^k - 2` proper sub-CRGs.
pub fn is_p_core_exhaustive(k: &Crg, p: &Rational) -> Result<bool> {
    check_open_unit_interval(p)?;
    let n = k.k();
    let g = solve_g(k, p)?.value;
    for mask in 1u32..(1 << n) - 1 {
        let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if solve_g(&k.sub_crg(&subset)?, p)?.value <= g {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureViolation {
    pub pair: (usize, usize),
    pub colour: EdgeColour,
    pub rule: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub violations: Vec<StructureViolation>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The colouring every p-core CRG must have, checked after confirming `K` is
/// p-core.
pub fn check_p_core_structure(k: &Crg, p: &Rational) -> Result<StructureReport> {
    if !is_p_core(k, p)? {
        return Err(Error::precondition(format!("CRG is not {p}-core")));
    }
    Ok(p_core_structure_violations(k, p))
}

/// The shape conditions without the p-core precondition. For `p < 1/2`: no
/// black edges and no white edge at a white vertex; for `p = 1/2`: every edge
/// grey; for `p > 1/2` the colour-swapped conditions.
pub fn p_core_structure_violations(k: &Crg, p: &Rational) -> StructureReport {
    let half = Rational::new(1.into(), 2.into());
    let mut violations = Vec::new();
    for u in 0..k.k() {
        for v in u + 1..k.k() {
            let colour = k.edge_colour(u, v);
            let touches = |c: VertexColour| k.vertex_colour(u) == c || k.vertex_colour(v) == c;
            let rule = if colour == EdgeColour::Grey {
                None
            } else if *p == half {
                Some("non-grey edge at p = 1/2")
            } else if *p < half {
                match colour {
                    EdgeColour::Black => Some("black edge below p = 1/2"),
                    _ if touches(VertexColour::White) => Some("white edge at a white vertex"),
                    _ => None,
                }
            } else {
                match colour {
                    EdgeColour::White => Some("white edge above p = 1/2"),
                    _ if touches(VertexColour::Black) => Some("black edge at a black vertex"),
                    _ => None,
                }
            };
            if let Some(rule) = rule {
                violations.push(StructureViolation {
                    pair: (u, v),
                    colour,
                    rule,
                });
            }
        }
    }
    StructureReport { violations }
}

/// Weighted grey degrees of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    /// `d_G(v)`: weight of grey neighbours.
    pub grey: Vec<Rational>,
    /// `d_G^W(v)`: weight of white grey neighbours.
    pub grey_white: Vec<Rational>,
    /// `d_G^B(v)`: weight of black grey neighbours.
    pub grey_black: Vec<Rational>,
    /// `deg_G^B(v)`: number of black grey neighbours.
    pub grey_black_count: Vec<usize>,
}

pub fn degree_profile(k: &Crg, x: &WeightVector) -> Result<DegreeProfile> {
    if x.len() != k.k() {
        return Err(Error::DimensionMismatch {
            expected: k.k(),
            got: x.len(),
        });
    }
    let n = k.k();
    let mut profile = DegreeProfile {
        grey: vec![Rational::zero(); n],
        grey_white: vec![Rational::zero(); n],
        grey_black: vec![Rational::zero(); n],
        grey_black_count: vec![0; n],
    };
    for v in 0..n {
        for u in (0..n).filter(|&u| u != v && k.edge_colour(u, v) == EdgeColour::Grey) {
            match k.vertex_colour(u) {
                VertexColour::White => profile.grey_white[v] += x.get(u),
                VertexColour::Black => {
                    profile.grey_black[v] += x.get(u);
                    profile.grey_black_count[v] += 1;
                }
            }
        }
        profile.grey[v] = &profile.grey_white[v] + &profile.grey_black[v];
    }
    Ok(profile)
}

/// Outcome of [`symmetrisation_check`]; each list holds failing vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrisationReport {
    pub g: Rational,
    pub weights: WeightVector,
    /// White vertices whose weight is not `g / p`.
    pub white_weight: Vec<usize>,
    /// Black vertices violating `d_G(v) = (p - g)/p + (1 - 2p)/p * x(v)`.
    pub black_degree: Vec<usize>,
    /// Black vertices violating `x(v) <= g / (1 - p)`.
    pub black_weight_bound: Vec<usize>,
    pub zero_weight: Vec<usize>,
}

impl SymmetrisationReport {
    pub fn passed(&self) -> bool {
        self.white_weight.is_empty()
            && self.black_degree.is_empty()
            && self.black_weight_bound.is_empty()
            && self.zero_weight.is_empty()
    }
}

/// Verifies the weight identities of a p-core CRG for `0 < p <= 1/2`.
pub fn symmetrisation_check(k: &Crg, p: &Rational) -> Result<SymmetrisationReport> {
    check_open_unit_interval(p)?;
    if *p > Rational::new(1.into(), 2.into()) {
        return Err(Error::precondition(format!("p = {p} exceeds 1/2")));
    }
    if !is_p_core(k, p)? {
        return Err(Error::precondition(format!("CRG is not {p}-core")));
    }
    let res = solve_g(k, p)?;
    let g = res.value;
    let x = res.weights;
    let profile = degree_profile(k, &x)?;
    let one = Rational::one();
    let two = &one + &one;
    let slope = (&one - &two * p) / p;
    let intercept = (p - &g) / p;
    let bound = &g / (&one - p);

    let mut report = SymmetrisationReport {
        g: g.clone(),
        weights: x.clone(),
        white_weight: Vec::new(),
        black_degree: Vec::new(),
        black_weight_bound: Vec::new(),
        zero_weight: Vec::new(),
    };
    for v in 0..k.k() {
        let w = x.get(v);
        if !w.is_positive() {
            report.zero_weight.push(v);
        }
        match k.vertex_colour(v) {
            VertexColour::White => {
                if *w != &g / p {
                    report.white_weight.push(v);
                }
            }
            VertexColour::Black => {
                if profile.grey[v] != &intercept + &slope * w {
                    report.black_degree.push(v);
                }
                if *w > bound {
                    report.black_weight_bound.push(v);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qp::g_closed_form;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn black_pair(edge: EdgeColour) -> Crg {
        Crg::from_fn(vec![VertexColour::Black; 2], |_, _| edge).unwrap()
    }

    #[test]
    fn additivity_examples() {
        let p = ratio(2, 9);
        assert!(component_additivity_check(&Crg::grey_clique(2, 3).unwrap(), &p).unwrap());
        assert!(component_additivity_check(&Crg::grey_clique(0, 1).unwrap(), &p).unwrap());
        let k = Crg::parse("WWB\ngw\nw\n").unwrap();
        assert_eq!(k.components().len(), 1);
        assert!(component_additivity_check(&k, &p).unwrap());
    }

    #[test]
    fn p_core_examples() {
        let k12 = Crg::grey_clique(1, 2).unwrap();
        assert!(is_p_core(&k12, &ratio(1, 4)).unwrap());
        // Oracle: every proper sub-CRG of K(1,2) is a grey clique, so its
        // value comes from the closed form.
        let g = g_closed_form(1, 2, &ratio(1, 4)).unwrap();
        for (r, s) in [(1, 0), (0, 1), (1, 1), (0, 2)] {
            assert!(g < g_closed_form(r, s, &ratio(1, 4)).unwrap());
        }
        assert!(!is_p_core(&black_pair(EdgeColour::Black), &ratio(1, 3)).unwrap());
        assert!(is_p_core(&Crg::grey_clique(0, 1).unwrap(), &ratio(1, 3)).unwrap());
    }

    #[test]
    fn structure_examples() {
        let r = check_p_core_structure(&Crg::grey_clique(1, 3).unwrap(), &ratio(1, 8)).unwrap();
        assert!(r.passed());
        let r = check_p_core_structure(&black_pair(EdgeColour::White), &ratio(1, 3)).unwrap();
        assert!(r.passed());
        let ww = Crg::parse("WW\nw\n").unwrap();
        let r = p_core_structure_violations(&ww, &ratio(1, 3));
        assert!(!r.passed());
        assert_eq!(r.violations[0].pair, (0, 1));
        // Two whites joined by a white edge tie a single white vertex.
        assert!(check_p_core_structure(&ww, &ratio(1, 3)).is_err());
    }

    #[test]
    fn structure_mirrors_above_half() {
        let bb = black_pair(EdgeColour::Black);
        assert_eq!(p_core_structure_violations(&bb, &ratio(2, 3)).violations.len(), 1);
        let ww_black = Crg::parse("WW\nb\n").unwrap();
        assert!(p_core_structure_violations(&ww_black, &ratio(2, 3)).passed());
        assert!(!p_core_structure_violations(&ww_black, &ratio(1, 2)).passed());
    }

    #[test]
    fn degree_profile_examples() {
        let k02 = Crg::grey_clique(0, 2).unwrap();
        let prof = degree_profile(&k02, &WeightVector::uniform(2).unwrap()).unwrap();
        assert_eq!(prof.grey, vec![ratio(1, 2), ratio(1, 2)]);

        let k12 = Crg::grey_clique(1, 2).unwrap();
        let x = solve_g(&k12, &ratio(1, 4)).unwrap().weights;
        let prof = degree_profile(&k12, &x).unwrap();
        assert_eq!(prof.grey, vec![ratio(2, 5), ratio(4, 5), ratio(4, 5)]);
        assert_eq!(prof.grey_black_count, vec![2, 1, 1]);

        let white = Crg::from_fn(vec![VertexColour::Black; 3], |_, _| EdgeColour::White).unwrap();
        let prof = degree_profile(&white, &WeightVector::uniform(3).unwrap()).unwrap();
        assert!(prof.grey.iter().all(Zero::is_zero));

        assert!(degree_profile(&k12, &WeightVector::uniform(2).unwrap()).is_err());
    }

    #[test]
    fn symmetrisation_examples() {
        let r = symmetrisation_check(&Crg::grey_clique(1, 2).unwrap(), &ratio(1, 4)).unwrap();
        assert!(r.passed());
        assert_eq!(r.weights.get(0), &ratio(3, 5));

        let r = symmetrisation_check(&Crg::grey_clique(0, 4).unwrap(), &ratio(1, 8)).unwrap();
        assert!(r.passed());
        assert_eq!(r.g, ratio(7, 32));
        assert_eq!(r.weights.get(0), &(&r.g / (int(1) - ratio(1, 8))));

        let r = symmetrisation_check(&Crg::grey_clique(0, 1).unwrap(), &ratio(1, 3)).unwrap();
        assert!(r.passed());

        assert!(symmetrisation_check(&Crg::grey_clique(0, 1).unwrap(), &ratio(2, 3)).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn single_deletion_test_matches_exhaustive(k in crate::crg::tests::arb_crg(5), d in 2i64..12) {
            let p = ratio(1, d);
            prop_assert_eq!(is_p_core(&k, &p).unwrap(), is_p_core_exhaustive(&k, &p).unwrap());
        }

        #[test]
        fn additivity_holds(k in crate::crg::tests::arb_crg(6), d in 2i64..12, n in 1i64..12) {
            let p = ratio(n.min(d - 1), d);
            prop_assert!(component_additivity_check(&k, &p).unwrap());
        }

        #[test]
        fn deleting_vertices_never_lowers_g(k in crate::crg::tests::arb_crg(5), v in 0usize..5) {
            prop_assume!(k.k() > 1);
            let p = ratio(2, 7);
            let v = v % k.k();
            let rest: Vec<usize> = (0..k.k()).filter(|&u| u != v).collect();
            let g = solve_g(&k, &p).unwrap().value;
            prop_assert!(g <= solve_g(&k.sub_crg(&rest).unwrap(), &p).unwrap().value);
        }
    }
}
