//! Isomorph-free enumeration of CRGs under hereditary colouring constraints.

use std::collections::BTreeMap;

use crate::crg::{canonical_code, canonical_form, CanonicalCode, Crg, EdgeColour, VertexColour};
use crate::{Error, Rational, Result};

/// Largest order enumerated exhaustively.
pub const MAX_EXHAUSTIVE_K: usize = 7;

/// The colouring every p-core CRG has at a given `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `p < 1/2`: no black edges, no white edge at a white vertex.
    BelowHalf,
    /// `p = 1/2`: all edges grey.
    Half,
    /// `p > 1/2`: no white edges, no black edge at a black vertex.
    AboveHalf,
}

impl Shape {
    pub fn at(p: &Rational) -> Shape {
        let half = Rational::new(1.into(), 2.into());
        match p.cmp(&half) {
            std::cmp::Ordering::Less => Shape::BelowHalf,
            std::cmp::Ordering::Equal => Shape::Half,
            std::cmp::Ordering::Greater => Shape::AboveHalf,
        }
    }

    pub fn allows(self, edge: EdgeColour, a: VertexColour, b: VertexColour) -> bool {
        match (self, edge) {
            (_, EdgeColour::Grey) => true,
            (Shape::Half, _) => false,
            (Shape::BelowHalf, EdgeColour::Black) | (Shape::AboveHalf, EdgeColour::White) => false,
            (Shape::BelowHalf, EdgeColour::White) => a == VertexColour::Black && b == VertexColour::Black,
            (Shape::AboveHalf, EdgeColour::Black) => a == VertexColour::White && b == VertexColour::White,
        }
    }
}

/// Structural filters for [`enumerate_crgs`]. All but `white_count` are
/// hereditary and prune the enumeration tree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    pub shape: Option<Shape>,
    pub all_grey: bool,
    pub max_white: Option<usize>,
    pub white_count: Option<usize>,
}

impl Constraints {
    pub fn none() -> Self {
        Constraints::default()
    }

    pub fn p_core_shape(p: &Rational) -> Self {
        Constraints {
            shape: Some(Shape::at(p)),
            ..Constraints::default()
        }
    }

    pub fn all_grey() -> Self {
        Constraints {
            all_grey: true,
            ..Constraints::default()
        }
    }

    pub fn with_white_count(mut self, r: usize) -> Self {
        self.white_count = Some(r);
        self.max_white = Some(self.max_white.map_or(r, |m| m.min(r)));
        self
    }

    fn edge_ok(&self, edge: EdgeColour, a: VertexColour, b: VertexColour) -> bool {
        (!self.all_grey || edge == EdgeColour::Grey) && self.shape.is_none_or(|s| s.allows(edge, a, b))
    }

    /// Whether `k` meets every constraint.
    pub fn accepts(&self, k: &Crg) -> bool {
        let whites = k.white_vertices().len();
        if self.max_white.is_some_and(|m| whites > m) || self.white_count.is_some_and(|r| whites != r) {
            return false;
        }
        (0..k.k()).all(|u| {
            (u + 1..k.k()).all(|v| self.edge_ok(k.edge_colour(u, v), k.vertex_colour(u), k.vertex_colour(v)))
        })
    }
}

const VERTEX_COLOURS: [VertexColour; 2] = [VertexColour::White, VertexColour::Black];
const EDGE_COLOURS: [EdgeColour; 3] = [EdgeColour::Grey, EdgeColour::White, EdgeColour::Black];

/// One representative of each isomorphism class of CRGs on `k` vertices
/// meeting `constraints`, in canonical form and sorted by canonical code.
///
/// Classes on `j + 1` vertices are generated by adding a vertex to the
/// representatives on `j` vertices; this reaches every class because the
/// constraints are inherited by sub-CRGs.
pub fn enumerate_crgs(k: usize, constraints: &Constraints) -> Result<Vec<Crg>> {
    if k == 0 {
        return Err(Error::invalid("CRGs have at least one vertex"));
    }
    if k > MAX_EXHAUSTIVE_K {
        return Err(Error::SizeCap {
            what: "CRG order for exhaustive enumeration",
            limit: MAX_EXHAUSTIVE_K,
            got: k,
        });
    }
    let hereditary = Constraints {
        white_count: None,
        ..constraints.clone()
    };
    let mut level: BTreeMap<CanonicalCode, Crg> = BTreeMap::new();
    for c in VERTEX_COLOURS {
        let single = Crg::all_grey(vec![c])?;
        if hereditary.accepts(&single) {
            level.insert(canonical_code(&single), single);
        }
    }
    for _ in 1..k {
        let mut next = BTreeMap::new();
        for base in level.values() {
            for c in VERTEX_COLOURS {
                extend(base, c, &hereditary, &mut next);
            }
        }
        level = next;
    }
    Ok(level.into_values().filter(|crg| constraints.accepts(crg)).collect())
}

fn extend(base: &Crg, colour: VertexColour, constraints: &Constraints, out: &mut BTreeMap<CanonicalCode, Crg>) {
    let n = base.k();
    let mut vertices = base.vertex_colours().to_vec();
    vertices.push(colour);
    if constraints.max_white.is_some_and(|m| vertices.iter().filter(|&&c| c == VertexColour::White).count() > m) {
        return;
    }
    let options: Vec<Vec<EdgeColour>> = (0..n)
        .map(|u| {
            EDGE_COLOURS
                .into_iter()
                .filter(|&e| constraints.edge_ok(e, base.vertex_colour(u), colour))
                .collect()
        })
        .collect();
    let mut choice = vec![0usize; n];
    loop {
        let k = Crg::from_fn(vertices.clone(), |u, v| {
            if v == n {
                options[u][choice[u]]
            } else if u == n {
                options[v][choice[v]]
            } else {
                base.edge_colour(u, v)
            }
        })
        .expect("colours are consistent");
        let form = canonical_form(&k);
        out.entry(canonical_code(&form)).or_insert(form);
        // Odometer over the new vertex's edge colours.
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crg::are_isomorphic;
    use crate::rational::ratio;

    /// Counts isomorphism classes by listing every labelled CRG and merging
    /// classes by brute-force permutation search.
    fn brute_force_classes(k: usize, constraints: &Constraints) -> usize {
        let pairs = k * (k - 1) / 2;
        let mut reps: Vec<Crg> = Vec::new();
        for vmask in 0u32..1 << k {
            let vs: Vec<VertexColour> = (0..k)
                .map(|i| if vmask >> i & 1 == 1 { VertexColour::Black } else { VertexColour::White })
                .collect();
            for mut code in 0..3usize.pow(pairs as u32) {
                let mut cols = Vec::with_capacity(pairs);
                for _ in 0..pairs {
                    cols.push(EDGE_COLOURS[code % 3]);
                    code /= 3;
                }
                let mut it = cols.into_iter();
                let crg = Crg::from_fn(vs.clone(), |_, _| it.next().unwrap()).unwrap();
                if constraints.accepts(&crg) && !reps.iter().any(|r| permutation_isomorphic(r, &crg)) {
                    reps.push(crg);
                }
            }
        }
        reps.len()
    }

    fn permutation_isomorphic(a: &Crg, b: &Crg) -> bool {
        fn go(a: &Crg, b: &Crg, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
            let i = map.len();
            if i == a.k() {
                return true;
            }
            for j in 0..b.k() {
                if used[j] || a.vertex_colour(i) != b.vertex_colour(j) {
                    continue;
                }
                if (0..i).any(|u| a.edge_colour(u, i) != b.edge_colour(map[u], j)) {
                    continue;
                }
                used[j] = true;
                map.push(j);
                if go(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
            false
        }
        a.k() == b.k() && go(a, b, &mut Vec::new(), &mut vec![false; b.k()])
    }

    #[test]
    fn single_vertex() {
        assert_eq!(enumerate_crgs(1, &Constraints::none()).unwrap().len(), 2);
    }

    #[test]
    fn two_vertices_below_half() {
        let c = Constraints::p_core_shape(&ratio(1, 3));
        let found = enumerate_crgs(2, &c).unwrap();
        // BB grey, BB white, BW grey, WW grey.
        assert_eq!(found.len(), 4);
        assert_eq!(found.len(), brute_force_classes(2, &c));
    }

    #[test]
    fn three_vertices_all_grey() {
        assert_eq!(enumerate_crgs(3, &Constraints::all_grey()).unwrap().len(), 4);
    }

    #[test]
    fn counts_match_brute_force() {
        for k in 1..=4 {
            for c in [
                Constraints::none(),
                Constraints::p_core_shape(&ratio(1, 3)),
                Constraints::p_core_shape(&ratio(2, 3)),
                Constraints::p_core_shape(&ratio(1, 2)).with_white_count(1),
            ] {
                assert_eq!(enumerate_crgs(k, &c).unwrap().len(), brute_force_classes(k, &c), "k = {k}, {c:?}");
            }
        }
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let all = enumerate_crgs(4, &Constraints::p_core_shape(&ratio(1, 4))).unwrap();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(!are_isomorphic(a, b));
                assert!(!permutation_isomorphic(a, b));
            }
        }
    }

    #[test]
    fn black_grey_graphs_on_seven_vertices() {
        // Grey/white colourings of K_7 on black vertices are graphs on 7 vertices.
        let c = Constraints::p_core_shape(&ratio(1, 4)).with_white_count(0);
        assert_eq!(enumerate_crgs(7, &c).unwrap().len(), 1044);
    }

    #[test]
    fn caps_exhaustive_order() {
        assert!(matches!(enumerate_crgs(8, &Constraints::all_grey()), Err(Error::SizeCap { .. })));
    }
}
