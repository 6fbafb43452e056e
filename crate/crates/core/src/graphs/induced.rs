use super::Graph;

/// Whether some vertex subset of `g` induces a copy of `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    find_induced(g, h).is_some()
}

/// An injective map `V(h) -> V(g)` (indexed by vertex of `h`) preserving both
/// adjacency and non-adjacency, if one exists.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let (gn, hn) = (g.n(), h.n());
    if hn > gn {
        return None;
    }
    let g_deg: Vec<usize> = (0..gn).map(|v| g.degree(v)).collect();
    let h_deg: Vec<usize> = (0..hn).map(|v| h.degree(v)).collect();

    // The i-th largest degree of h must not exceed the i-th largest degree of g,
    // and likewise for non-degrees.
    let mut gs = g_deg.clone();
    let mut hs = h_deg.clone();
    gs.sort_unstable_by(|a, b| b.cmp(a));
    hs.sort_unstable_by(|a, b| b.cmp(a));
    if hs.iter().zip(&gs).any(|(a, b)| a > b) {
        return None;
    }
    let mut gc: Vec<usize> = g_deg.iter().map(|d| gn - 1 - d).collect();
    let mut hc: Vec<usize> = h_deg.iter().map(|d| hn - 1 - d).collect();
    gc.sort_unstable_by(|a, b| b.cmp(a));
    hc.sort_unstable_by(|a, b| b.cmp(a));
    if hc.iter().zip(&gc).any(|(a, b)| a > b) {
        return None;
    }

    let order = search_order(h);
    let mut map = vec![usize::MAX; hn];
    let mut used = vec![false; gn];
    let ctx = Ctx {
        g,
        h,
        g_deg: &g_deg,
        h_deg: &h_deg,
        order: &order,
    };
    if ctx.extend(0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Descending degree, ties broken towards vertices with more already-placed
/// neighbours so that adjacency constraints bite early.
pub(crate) fn search_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = h.neighbours(v).filter(|&u| placed[u]).count();
                (linked, h.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Ctx<'a> {
    g: &'a Graph,
    h: &'a Graph,
    g_deg: &'a [usize],
    h_deg: &'a [usize],
    order: &'a [usize],
}

impl Ctx<'_> {
    fn extend(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let (gn, hn) = (self.g.n(), self.h.n());
        let u = self.order[depth];
        for x in 0..gn {
            if used[x]
                || self.g_deg[x] < self.h_deg[u]
                || gn - 1 - self.g_deg[x] < hn - 1 - self.h_deg[u]
            {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.h.has_edge(u, w) == self.g.has_edge(x, map[w]));
            if !consistent {
                continue;
            }
            map[u] = x;
            used[x] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            used[x] = false;
            map[u] = usize::MAX;
        }
        false
    }
}
