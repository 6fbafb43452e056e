use super::Graph;
use crate::{Error, Result};

/// Largest graph accepted by the subset-DP cycle routines.
pub const MAX_CYCLE_SEARCH_VERTICES: usize = 24;

/// `C_h^t`: vertices `0..h`, `i ~ j` iff their cyclic distance is at most `t`.
pub fn cycle_power(h: usize, t: usize) -> Result<Graph> {
    if h < 3 {
        return Err(Error::invalid(format!("cycle length h = {h} must be at least 3")));
    }
    if t < 1 {
        return Err(Error::invalid("cycle power t must be at least 1"));
    }
    let mut g = Graph::empty(h);
    for i in 0..h {
        for j in i + 1..h {
            let d = (j - i).min(h - (j - i));
            if d <= t {
                g.set_edge(i, j, true);
            }
        }
    }
    Ok(g)
}

/// A cycle of a host graph, stored as its vertices in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validates that `vertices` are distinct, at least three, and cyclically
    /// consecutive in `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let l = vertices.len();
        if l < 3 {
            return Err(Error::invalid(format!("a cycle needs at least 3 vertices, got {l}")));
        }
        let mut seen = vec![false; g.n()];
        for &v in &vertices {
            if v >= g.n() {
                return Err(Error::invalid(format!("cycle vertex {v} out of range")));
            }
            if seen[v] {
                return Err(Error::invalid(format!("cycle repeats vertex {v}")));
            }
            seen[v] = true;
        }
        for i in 0..l {
            let (a, b) = (vertices[i], vertices[(i + 1) % l]);
            if !g.has_edge(a, b) {
                return Err(Error::invalid(format!("cycle step {a} -> {b} is not an edge")));
            }
        }
        Ok(Cycle { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }
}

/// Subset DP over simple paths starting at the least vertex `s` of their
/// vertex set. `reach[sub]` is the set of endpoints of paths from `s` whose
/// vertex set is `{s} ∪ (sub << (s + 1))`.
struct PathTable {
    s: usize,
    reach: Vec<u32>,
}

impl PathTable {
    fn build(nbr: &[u32], s: usize) -> Self {
        let n = nbr.len();
        let width = n - s - 1;
        let mut reach = vec![0u32; 1 << width];
        reach[0] = 1 << s;
        for sub in 1usize..(1 << width) {
            let mut ends = 0u32;
            let mut rest = sub;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let v = s + 1 + b;
                if reach[sub ^ (1 << b)] & nbr[v] != 0 {
                    ends |= 1 << v;
                }
            }
            reach[sub] = ends;
        }
        PathTable { s, reach }
    }

    fn full_mask(&self, sub: usize) -> u32 {
        ((sub as u32) << (self.s + 1)) | (1 << self.s)
    }

    /// Recovers the path ending at `end` for subset `sub`.
    fn path(&self, nbr: &[u32], mut sub: usize, mut end: usize) -> Vec<usize> {
        let mut rev = vec![end];
        while sub != 0 {
            let bit = end - self.s - 1;
            sub ^= 1 << bit;
            let prev = self.reach[sub] & nbr[end];
            end = prev.trailing_zeros() as usize;
            rev.push(end);
        }
        rev.reverse();
        rev
    }
}

fn neighbour_masks(g: &Graph) -> Result<Vec<u32>> {
    if g.n() > MAX_CYCLE_SEARCH_VERTICES {
        return Err(Error::SizeCap {
            what: "graph order for cycle search",
            limit: MAX_CYCLE_SEARCH_VERTICES,
            got: g.n(),
        });
    }
    Ok((0..g.n())
        .map(|v| g.neighbours(v).fold(0u32, |m, u| m | (1 << u)))
        .collect())
}

/// `lengths[l]` is true iff `g` has a cycle of length exactly `l`.
pub fn cycle_lengths(g: &Graph) -> Result<Vec<bool>> {
    let nbr = neighbour_masks(g)?;
    let n = g.n();
    let mut lengths = vec![false; n + 1];
    for s in 0..n {
        let table = PathTable::build(&nbr, s);
        for (sub, &ends) in table.reach.iter().enumerate() {
            let size = sub.count_ones() as usize + 1;
            if size >= 3 && ends & nbr[s] != 0 {
                lengths[size] = true;
            }
        }
    }
    Ok(lengths)
}

/// Some cycle of `g` of exactly `len` vertices, if one exists.
pub fn find_cycle_with_length(g: &Graph, len: usize) -> Result<Option<Cycle>> {
    let nbr = neighbour_masks(g)?;
    let n = g.n();
    if len < 3 || len > n {
        return Ok(None);
    }
    for s in 0..n {
        if n - s < len {
            break;
        }
        let table = PathTable::build(&nbr, s);
        for (sub, &ends) in table.reach.iter().enumerate() {
            if sub.count_ones() as usize + 1 != len {
                continue;
            }
            let closing = ends & nbr[s];
            if closing != 0 {
                debug_assert_eq!(table.full_mask(sub).count_ones() as usize, len);
                let end = closing.trailing_zeros() as usize;
                let path = table.path(&nbr, sub, end);
                return Cycle::new(g, path).map(Some);
            }
        }
    }
    Ok(None)
}

/// True iff every set of `floor(m/3)` vertices of `g` contains two distinct
/// vertices with a common neighbour.
///
/// For `m = 5` the sets have a single vertex, so the condition can never hold
/// and `false` is returned. If `g` has fewer than `floor(m/3)` vertices the
/// condition holds vacuously.
pub fn common_neighbour_condition(g: &Graph, m: usize) -> Result<bool> {
    if m < 5 {
        return Err(Error::invalid(format!("m = {m} must be at least 5")));
    }
    let size = m / 3;
    if size < 2 {
        return Ok(false);
    }
    let n = g.n();
    if n > 64 {
        return Err(Error::SizeCap {
            what: "graph order for common-neighbour check",
            limit: 64,
            got: n,
        });
    }
    if n < size {
        return Ok(true);
    }
    // share[a] = vertices b != a with a common neighbour of a.
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbours(v).fold(0u64, |m, u| m | (1 << u)))
        .collect();
    let share: Vec<u64> = (0..n)
        .map(|a| {
            let mut s = 0u64;
            for w in 0..n {
                if nbr[w] >> a & 1 == 1 {
                    s |= nbr[w];
                }
            }
            s & !(1 << a)
        })
        .collect();
    // The condition fails iff the "shares a neighbour" graph has an
    // independent set of the given size.
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(find_independent_set(&share, all, size).is_none())
}

/// An independent set of `need` vertices inside `candidates`, as a bitmask.
pub(crate) fn find_independent_set(adj: &[u64], candidates: u64, need: usize) -> Option<u64> {
    if need == 0 {
        return Some(0);
    }
    if (candidates.count_ones() as usize) < need {
        return None;
    }
    let v = candidates.trailing_zeros() as usize;
    let rest = candidates & !(1 << v);
    find_independent_set(adj, rest & !adj[v], need - 1)
        .map(|s| s | 1 << v)
        .or_else(|| find_independent_set(adj, rest, need))
}

/// Given a cycle of length at least `m` in a graph satisfying
/// [`common_neighbour_condition`], returns a cycle of length in
/// `[ceil(m/2), m - 1]`.
///
/// Each round takes `M = {u_1, u_4, ..., u_{3 floor(m/3) - 2}}` on the current
/// cycle, picks the least pair of `M` (by cycle position) with a common
/// neighbour `v` (least label), and reroutes through `v`. Every round yields a
/// strictly shorter cycle of length at least `ceil(m/2)`.
pub fn shorten_cycle(g: &Graph, cycle: &Cycle, m: usize) -> Result<Cycle> {
    if m < 5 {
        return Err(Error::invalid(format!("m = {m} must be at least 5")));
    }
    Cycle::new(g, cycle.vertices.clone())?;
    if cycle.len() < m {
        return Err(Error::precondition(format!(
            "cycle has length {} < m = {m}",
            cycle.len()
        )));
    }
    if !common_neighbour_condition(g, m)? {
        return Err(Error::precondition(format!(
            "common-neighbour condition fails for m = {m}"
        )));
    }
    let mut current = cycle.vertices.clone();
    while current.len() >= m {
        let next = shorten_once(g, &current, m)?;
        debug_assert!(next.len() < current.len() && next.len() >= m.div_ceil(2));
        current = next;
    }
    Cycle::new(g, current)
}

fn shorten_once(g: &Graph, cyc: &[usize], m: usize) -> Result<Vec<usize>> {
    let l = cyc.len();
    let picks: Vec<usize> = (0..m / 3).map(|i| 3 * i).collect();
    let mut on_cycle = vec![usize::MAX; g.n()];
    for (pos, &v) in cyc.iter().enumerate() {
        on_cycle[v] = pos;
    }
    for (a, &i) in picks.iter().enumerate() {
        for &j in &picks[a + 1..] {
            let (ui, uj) = (cyc[i], cyc[j]);
            let Some(v) = (0..g.n()).find(|&v| g.has_edge(v, ui) && g.has_edge(v, uj)) else {
                continue;
            };
            let gap = j - i;
            let half = m.div_ceil(2);
            let out = if on_cycle[v] == usize::MAX {
                if gap + 2 >= half {
                    // u_i C u_j v u_i
                    let mut c: Vec<usize> = cyc[i..=j].to_vec();
                    c.push(v);
                    c
                } else {
                    // u_i v u_j C u_i
                    let mut c = vec![ui, v];
                    c.extend((j..l).chain(0..i).map(|k| cyc[k]));
                    c
                }
            } else {
                let pv = on_cycle[v];
                let cyc_adj = |p: usize| (p + 1) % l == pv || (pv + 1) % l == p;
                // The chord endpoint is whichever of u_i, u_j is not a cycle
                // neighbour of v; at least one is, since both arcs between u_i
                // and u_j have length at least 3.
                let a_pos = if !cyc_adj(i) { i } else { j };
                debug_assert!(!cyc_adj(a_pos));
                // Arc a -> v (forward) and v -> a (forward), each closed by the chord.
                let forward = (pv + l - a_pos) % l;
                let backward = l - forward;
                if forward >= backward {
                    (0..=forward).map(|k| cyc[(a_pos + k) % l]).collect()
                } else {
                    (0..=backward).map(|k| cyc[(pv + k) % l]).collect()
                }
            };
            return Ok(out);
        }
    }
    Err(Error::precondition(
        "no pair of the chosen cycle vertices has a common neighbour",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_power_examples() {
        let c5 = cycle_power(5, 1).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));

        let g = cycle_power(10, 2).unwrap();
        assert_eq!(g.edge_count(), 20);
        for i in 0..10 {
            assert_eq!(g.degree(i), 4);
            for d in [1, 2, 8, 9] {
                assert!(g.has_edge(i, (i + d) % 10));
            }
        }
        assert_eq!(cycle_power(6, 3).unwrap(), Graph::complete(6));
    }

    #[test]
    fn cycle_power_regularity() {
        for h in 3..14 {
            for t in 1..8 {
                let g = cycle_power(h, t).unwrap();
                let d = (2 * t).min(h - 1);
                assert!((0..h).all(|v| g.degree(v) == d), "h={h} t={t}");
                assert_eq!(g.is_complete(), h <= 2 * t + 1);
            }
        }
    }

    #[test]
    fn cycle_power_rejects_bad_parameters() {
        assert!(cycle_power(2, 1).is_err());
        assert!(cycle_power(5, 0).is_err());
    }

    #[test]
    fn cycle_validation() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(Cycle::new(&c5, vec![0, 1, 2, 3, 4]).is_ok());
        assert!(Cycle::new(&c5, vec![0, 1, 2]).is_err());
        assert!(Cycle::new(&c5, vec![0, 1]).is_err());
        assert!(Cycle::new(&c5, vec![0, 1, 2, 3, 4, 0]).is_err());
    }

    #[test]
    fn cycle_lengths_of_known_graphs() {
        let l = cycle_lengths(&Graph::complete(5)).unwrap();
        assert_eq!(l, vec![false, false, false, true, true, true]);
        let l = cycle_lengths(&Graph::cycle(7).unwrap()).unwrap();
        assert_eq!(l.iter().filter(|&&b| b).count(), 1);
        assert!(l[7]);
        assert!(cycle_lengths(&Graph::empty(6)).unwrap().iter().all(|&b| !b));
    }

    #[test]
    fn found_cycles_are_valid() {
        let k6 = Graph::complete(6);
        for len in 3..=6 {
            let c = find_cycle_with_length(&k6, len).unwrap().unwrap();
            assert_eq!(c.len(), len);
        }
        assert!(find_cycle_with_length(&Graph::cycle(6).unwrap(), 5).unwrap().is_none());
    }

    #[test]
    fn cycle_search_is_capped() {
        assert!(matches!(
            cycle_lengths(&Graph::empty(25)),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn common_neighbour_examples() {
        assert!(common_neighbour_condition(&Graph::complete(6), 9).unwrap());
        let matching = Graph::from_edges(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
        assert!(!common_neighbour_condition(&matching, 9).unwrap());
        let star = Graph::from_edges(8, &(1..8).map(|v| (0, v)).collect::<Vec<_>>()).unwrap();
        assert!(common_neighbour_condition(&star, 12).unwrap());
    }

    #[test]
    fn common_neighbour_degenerate_cases() {
        // floor(5/3) = 1: no set has two vertices.
        assert!(!common_neighbour_condition(&Graph::complete(6), 5).unwrap());
        assert!(common_neighbour_condition(&Graph::complete(6), 4).is_err());
    }

    /// Direct check over all floor(m/3)-subsets.
    fn common_neighbour_brute(g: &Graph, m: usize) -> bool {
        let size = m / 3;
        if size < 2 {
            return false;
        }
        let n = g.n();
        let shares = |a: usize, b: usize| (0..n).any(|w| g.has_edge(w, a) && g.has_edge(w, b));
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == size)
            .all(|s| {
                let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
                vs.iter()
                    .enumerate()
                    .any(|(i, &a)| vs[i + 1..].iter().any(|&b| shares(a, b)))
            })
    }

    #[test]
    fn common_neighbour_matches_brute_force() {
        let mut seed = 1u64;
        for _ in 0..200 {
            let g = crate::graphs::sample_gnp(9, &crate::rational::ratio(1, 4), seed).unwrap();
            seed += 1;
            for m in [6, 9, 12] {
                assert_eq!(
                    common_neighbour_condition(&g, m).unwrap(),
                    common_neighbour_brute(&g, m)
                );
            }
        }
    }

    fn wheel(rim: usize) -> Graph {
        let mut g = Graph::empty(rim + 1);
        for i in 0..rim {
            g.set_edge(i, (i + 1) % rim, true);
            g.set_edge(i, rim, true);
        }
        g
    }

    #[test]
    fn shortens_wheel_rim() {
        let g = wheel(9);
        let rim = Cycle::new(&g, (0..9).collect()).unwrap();
        let c = shorten_cycle(&g, &rim, 9).unwrap();
        assert!((5..=8).contains(&c.len()), "len {}", c.len());
    }

    #[test]
    fn shortens_chorded_twelve_cycle() {
        // C_12 plus the chord u_1 u_7 and a hub adjacent to every rim vertex
        // so that the common-neighbour condition holds for m = 10.
        let mut g = Graph::empty(13);
        for i in 0..12 {
            g.set_edge(i, (i + 1) % 12, true);
            g.set_edge(i, 12, true);
        }
        g.set_edge(0, 6, true);
        assert!(common_neighbour_condition(&g, 10).unwrap());
        let c12 = Cycle::new(&g, (0..12).collect()).unwrap();
        let c = shorten_cycle(&g, &c12, 10).unwrap();
        assert!((5..=9).contains(&c.len()), "len {}", c.len());
    }

    #[test]
    fn shorten_rejects_short_cycles_and_failed_hypothesis() {
        let g = wheel(9);
        let c4 = Cycle::new(&g, vec![0, 1, 2, 9]).unwrap();
        assert!(matches!(shorten_cycle(&g, &c4, 5), Err(Error::Precondition(_))));
        let c12 = Graph::cycle(12).unwrap();
        let c = Cycle::new(&c12, (0..12).collect()).unwrap();
        assert!(matches!(shorten_cycle(&c12, &c, 9), Err(Error::Precondition(_))));
    }
}
