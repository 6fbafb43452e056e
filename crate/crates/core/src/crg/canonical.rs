use super::{Crg, EdgeColour, VertexColour};

/// Colour matrix of a CRG under some vertex order: vertex colours first, then
/// the upper triangle row by row. Compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

fn vertex_code(c: VertexColour) -> u8 {
    match c {
        VertexColour::White => 0,
        VertexColour::Black => 1,
    }
}

fn edge_code(c: EdgeColour) -> u8 {
    match c {
        EdgeColour::Grey => 0,
        EdgeColour::White => 1,
        EdgeColour::Black => 2,
    }
}

/// Colour-degree invariant of a vertex; preserved by isomorphisms.
fn invariant(k: &Crg, v: usize) -> [u8; 7] {
    let mut inv = [0u8; 7];
    inv[0] = vertex_code(k.vertex_colour(v));
    for u in (0..k.k()).filter(|&u| u != v) {
        let slot = 1 + 3 * vertex_code(k.vertex_colour(u)) as usize + edge_code(k.edge_colour(u, v)) as usize;
        inv[slot] += 1;
    }
    inv
}

fn code_under(k: &Crg, order: &[usize]) -> CanonicalCode {
    let n = order.len();
    let mut code = Vec::with_capacity(n + n * (n - 1) / 2);
    code.extend(order.iter().map(|&v| vertex_code(k.vertex_colour(v))));
    for i in 0..n {
        for j in i + 1..n {
            code.push(edge_code(k.edge_colour(order[i], order[j])));
        }
    }
    CanonicalCode(code)
}

/// Canonical code of `k`, identical for isomorphic CRGs.
///
/// Vertices are first sorted by a colour-degree invariant; the code is the
/// lexicographically least colour matrix over all orders that keep that sort,
/// i.e. over all permutations within invariant classes.
pub fn canonical_code(k: &Crg) -> CanonicalCode {
    canonical_order(k).1
}

/// `k` relabelled into its canonical vertex order.
pub fn canonical_form(k: &Crg) -> Crg {
    let (order, _) = canonical_order(k);
    k.sub_crg(&order).expect("order is a permutation")
}

pub fn are_isomorphic(a: &Crg, b: &Crg) -> bool {
    a.k() == b.k() && canonical_code(a) == canonical_code(b)
}

fn canonical_order(k: &Crg) -> (Vec<usize>, CanonicalCode) {
    let n = k.k();
    let invs: Vec<[u8; 7]> = (0..n).map(|v| invariant(k, v)).collect();
    let mut sorted: Vec<usize> = (0..n).collect();
    sorted.sort_by_key(|&v| invs[v]);
    // block[i] = index of the invariant class occupying slot i
    let mut slots_block = Vec::with_capacity(n);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in sorted.iter().enumerate() {
        if i == 0 || invs[v] != invs[sorted[i - 1]] {
            blocks.push(Vec::new());
        }
        blocks.last_mut().expect("pushed above").push(v);
        slots_block.push(blocks.len() - 1);
    }
    let mut best: Option<(Vec<usize>, CanonicalCode)> = None;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    permute(k, &blocks, &slots_block, &mut order, &mut used, &mut best);
    best.expect("at least one ordering")
}

fn permute(
    k: &Crg,
    blocks: &[Vec<usize>],
    slots_block: &[usize],
    order: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut Option<(Vec<usize>, CanonicalCode)>,
) {
    let slot = order.len();
    if slot == slots_block.len() {
        let code = code_under(k, order);
        if best.as_ref().is_none_or(|(_, b)| code < *b) {
            *best = Some((order.clone(), code));
        }
        return;
    }
    for &v in &blocks[slots_block[slot]] {
        if used[v] {
            continue;
        }
        used[v] = true;
        order.push(v);
        permute(k, blocks, slots_block, order, used, best);
        order.pop();
        used[v] = false;
    }
}
