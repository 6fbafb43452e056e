use super::{Crg, EdgeColour, VertexColour};
use crate::graphs::Graph;
use crate::{Error, Result};

/// A witness `H -> K`: `map[u]` is the CRG vertex receiving `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks both embedding conditions on every pair of `h`.
    pub fn is_valid(&self, h: &Graph, k: &Crg) -> bool {
        self.map.len() == h.n()
            && self.map.iter().all(|&x| x < k.k())
            && (0..h.n()).all(|u| (u + 1..h.n()).all(|v| pair_ok(k, h.has_edge(u, v), self.map[u], self.map[v])))
    }
}

fn pair_ok(k: &Crg, edge: bool, x: usize, y: usize) -> bool {
    if x == y {
        let want = if edge { VertexColour::Black } else { VertexColour::White };
        return k.vertex_colour(x) == want;
    }
    match k.edge_colour(x, y) {
        EdgeColour::Grey => true,
        EdgeColour::Black => edge,
        EdgeColour::White => !edge,
    }
}

/// Searches for an embedding of `h` into `k`.
///
/// Backtracking over `V(h)` in descending-degree order (ties towards vertices
/// with more placed neighbours), trying black CRG vertices before white ones.
/// Interchangeable CRG vertices (same colour, same edge colours to every other
/// vertex) are opened in index order only, which removes their permutations
/// from the search without losing any embedding up to automorphism.
pub fn embeds(h: &Graph, k: &Crg) -> Option<Embedding> {
    let n = h.n();
    if n == 0 {
        return Some(Embedding { map: vec![] });
    }
    let order = crate::graphs::search_order_for_embedding(h);
    let twin_class = twin_classes(k);
    let mut candidates: Vec<usize> = k.black_vertices();
    candidates.extend(k.white_vertices());
    let mut ctx = Search {
        h,
        k,
        order: &order,
        candidates: &candidates,
        twin_class: &twin_class,
        map: vec![usize::MAX; n],
        load: vec![0; k.k()],
    };
    if ctx.extend(0) {
        Some(Embedding { map: ctx.map })
    } else {
        None
    }
}

/// `class[v]` is the least vertex interchangeable with `v`.
fn twin_classes(k: &Crg) -> Vec<usize> {
    let n = k.k();
    let twins = |u: usize, v: usize| {
        k.vertex_colour(u) == k.vertex_colour(v)
            && (0..n)
                .filter(|&w| w != u && w != v)
                .all(|w| k.edge_colour(u, w) == k.edge_colour(v, w))
    };
    let mut class: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if let Some(rep) = (0..v).find(|&u| class[u] == u && twins(u, v)) {
            class[v] = rep;
        }
    }
    class
}

struct Search<'a> {
    h: &'a Graph,
    k: &'a Crg,
    order: &'a [usize],
    candidates: &'a [usize],
    twin_class: &'a [usize],
    map: Vec<usize>,
    load: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        for &x in self.candidates {
            // Only the first unused member of a twin class may be opened.
            if self.load[x] == 0 {
                let c = self.twin_class[x];
                if (c..x).any(|y| self.twin_class[y] == c && self.load[y] == 0) {
                    continue;
                }
            }
            let fits = self.order[..depth]
                .iter()
                .all(|&w| pair_ok(self.k, self.h.has_edge(u, w), x, self.map[w]));
            if !fits {
                continue;
            }
            self.map[u] = x;
            self.load[x] += 1;
            if self.extend(depth + 1) {
                return true;
            }
            self.load[x] -= 1;
            self.map[u] = usize::MAX;
        }
        false
    }
}

/// True iff no graph of `forbidden` embeds in `k`, i.e. `k` encodes an
/// editing rule whose outputs avoid every forbidden induced subgraph.
pub fn in_forb_family(k: &Crg, forbidden: &[Graph]) -> Result<bool> {
    if forbidden.is_empty() {
        return Err(Error::invalid("the forbidden family is empty"));
    }
    Ok(forbidden.iter().all(|h| embeds(h, k).is_none()))
}

/// Edits `g` by the rules of `k`, where vertex `v` of `g` lies in the part of
/// CRG vertex `assignment[v]`: black parts and black pairs of parts are
/// filled in, white ones are cleared, grey pairs are left alone.
pub fn edit_graph(g: &Graph, k: &Crg, assignment: &[usize]) -> Result<Graph> {
    if assignment.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: assignment.len(),
        });
    }
    if let Some(&x) = assignment.iter().find(|&&x| x >= k.k()) {
        return Err(Error::invalid(format!("assignment targets missing CRG vertex {x}")));
    }
    let mut out = g.clone();
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            let (x, y) = (assignment[a], assignment[b]);
            let forced = if x == y {
                Some(k.vertex_colour(x) == VertexColour::Black)
            } else {
                match k.edge_colour(x, y) {
                    EdgeColour::Black => Some(true),
                    EdgeColour::White => Some(false),
                    EdgeColour::Grey => None,
                }
            };
            if let Some(present) = forced {
                out.set_edge(a, b, present);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crg::tests::arb_crg;
    use crate::graphs::{contains_induced, cycle_power};
    use proptest::prelude::*;

    fn brute_embeds(h: &Graph, k: &Crg) -> bool {
        let n = h.n();
        let total = k.k().pow(n as u32);
        (0..total).any(|mut code| {
            let map: Vec<usize> = (0..n)
                .map(|_| {
                    let x = code % k.k();
                    code /= k.k();
                    x
                })
                .collect();
            Embedding { map }.is_valid(h, k)
        })
    }

    #[test]
    fn triangle_into_single_black_vertex() {
        let k = Crg::grey_clique(0, 1).unwrap();
        let e = embeds(&Graph::cycle(3).unwrap(), &k).unwrap();
        assert_eq!(e.map, vec![0, 0, 0]);
    }

    #[test]
    fn c4_does_not_embed_in_single_black_vertex() {
        assert!(embeds(&Graph::cycle(4).unwrap(), &Crg::grey_clique(0, 1).unwrap()).is_none());
    }

    #[test]
    fn c10_against_grey_cliques() {
        let c10 = Graph::cycle(10).unwrap();
        assert!(embeds(&c10, &Crg::grey_clique(1, 3).unwrap()).is_none());
        let k = Crg::grey_clique(1, 4).unwrap();
        let e = embeds(&c10, &k).unwrap();
        assert!(e.is_valid(&c10, &k));
        // The layout with black parts {1,2},{3,4},{6,7},{8,9} and white part {5,10}.
        let layout = Embedding {
            map: vec![1, 1, 2, 2, 0, 3, 3, 4, 4, 0],
        };
        assert!(layout.is_valid(&c10, &k));
    }

    #[test]
    fn forb_family_examples() {
        let c10 = Graph::cycle(10).unwrap();
        assert!(in_forb_family(&Crg::grey_clique(1, 3).unwrap(), &[c10]).unwrap());
        assert!(!in_forb_family(&Crg::grey_clique(0, 1).unwrap(), &[Graph::cycle(3).unwrap()]).unwrap());
        assert!(in_forb_family(&Crg::grey_clique(2, 0).unwrap(), &[Graph::cycle(5).unwrap()]).unwrap());
        assert!(in_forb_family(&Crg::grey_clique(2, 0).unwrap(), &[]).is_err());
    }

    #[test]
    fn edit_graph_single_vertex_rules() {
        let g = Graph::cycle(6).unwrap();
        let black = Crg::grey_clique(0, 1).unwrap();
        assert_eq!(edit_graph(&g, &black, &[0; 6]).unwrap(), Graph::complete(6));
        let white = Crg::grey_clique(1, 0).unwrap();
        assert_eq!(edit_graph(&g, &white, &[0; 6]).unwrap(), Graph::empty(6));
        assert!(edit_graph(&g, &white, &[0; 5]).is_err());
        assert!(edit_graph(&g, &white, &[1; 6]).is_err());
    }

    #[test]
    fn strategy_layout_removes_induced_c10() {
        // W = {4, 9}, B_1 = {0, 1}, B_2 = {2, 3}, B_3 = {5, 6, 7, 8}
        let c10 = Graph::cycle(10).unwrap();
        let k = Crg::grey_clique(1, 3).unwrap();
        let edited = edit_graph(&c10, &k, &[1, 1, 2, 2, 0, 3, 3, 3, 3, 0]).unwrap();
        assert!(!contains_induced(&edited, &c10));
    }

    #[test]
    fn twin_breaking_keeps_hard_negatives() {
        // C_13 needs five cliques plus an independent set: K(1,4) fails, K(1,5) works.
        let c13 = Graph::cycle(13).unwrap();
        assert!(embeds(&c13, &Crg::grey_clique(1, 4).unwrap()).is_none());
        assert!(embeds(&c13, &Crg::grey_clique(1, 5).unwrap()).is_some());
        let c12sq = cycle_power(12, 2).unwrap();
        assert!(embeds(&c12sq, &Crg::grey_clique(0, 3).unwrap()).is_none());
        assert!(embeds(&c12sq, &Crg::grey_clique(0, 4).unwrap()).is_some());
    }

    fn small_graph() -> impl Strategy<Value = Graph> {
        (1usize..=5, any::<u16>()).prop_map(|(n, mut bits)| {
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if bits & 1 == 1 {
                        g.set_edge(u, v, true);
                    }
                    bits >>= 1;
                }
            }
            g
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn agrees_with_exhaustive_assignment(h in small_graph(), k in arb_crg(4)) {
            let found = embeds(&h, &k);
            if let Some(e) = &found {
                prop_assert!(e.is_valid(&h, &k));
            }
            prop_assert_eq!(found.is_some(), brute_embeds(&h, &k));
        }

        #[test]
        fn monotone_under_sub_crgs(h in small_graph(), k in arb_crg(5), mask in 1u32..32) {
            let subset: Vec<usize> = (0..k.k()).filter(|v| mask >> v & 1 == 1).collect();
            prop_assume!(!subset.is_empty());
            let sub = k.sub_crg(&subset).unwrap();
            if embeds(&h, &sub).is_some() {
                prop_assert!(embeds(&h, &k).is_some());
            }
        }

        #[test]
        fn induced_supergraphs_inherit_non_embedding(big in small_graph(), k in arb_crg(4), mask in 1u32..32) {
            let subset: Vec<usize> = (0..big.n()).filter(|v| mask >> v & 1 == 1).collect();
            prop_assume!(!subset.is_empty());
            let h = big.induced(&subset);
            if embeds(&h, &k).is_none() {
                prop_assert!(embeds(&big, &k).is_none());
            }
        }

        #[test]
        fn edited_graph_embeds_via_assignment(g in small_graph(), k in arb_crg(4), seed in any::<u64>()) {
            let assignment: Vec<usize> = (0..g.n())
                .map(|v| ((seed >> (3 * v)) as usize) % k.k())
                .collect();
            let edited = edit_graph(&g, &k, &assignment).unwrap();
            let emb = Embedding { map: assignment };
            prop_assert!(emb.is_valid(&edited, &k));
        }
    }
}
