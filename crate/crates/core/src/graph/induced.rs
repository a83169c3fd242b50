use super::{Graph, HPattern, VertexSet, PATTERN_CAP};
use crate::error::GraphError;

/// `embedding[i]` is the host vertex playing pattern vertex `i`.
pub type Embedding = Vec<usize>;

/// Searches `g` for an induced copy of `h`.
///
/// Exhaustive backtracking: pattern vertices are placed one at a time and the
/// candidate set of each is the intersection of the neighbourhoods (or
/// non-neighbourhoods) of the hosts already placed.
pub fn find_induced(g: &Graph, h: &HPattern) -> Result<Option<Embedding>, GraphError> {
    find_induced_within(g, &g.vertices(), h)
}

/// Like [`find_induced`], restricted to the vertices of `within`.
pub fn find_induced_within(g: &Graph, within: &VertexSet, h: &HPattern) -> Result<Option<Embedding>, GraphError> {
    let hg = h.graph();
    if hg.n() > PATTERN_CAP {
        return Err(GraphError::PatternTooLarge { size: hg.n(), cap: PATTERN_CAP });
    }
    Ok(search(g, within, hg))
}

/// Induced copies of `h` that use host vertex `v`.
///
/// Cheaper than a full search when `g` was H-free before `v` was added.
pub fn find_induced_through(g: &Graph, v: usize, h: &HPattern) -> Result<Option<Embedding>, GraphError> {
    let hg = h.graph();
    if hg.n() > PATTERN_CAP {
        return Err(GraphError::PatternTooLarge { size: hg.n(), cap: PATTERN_CAP });
    }
    let within = g.vertices();
    let single = VertexSet::from_iter(g.n(), [v]);
    for a in 0..hg.n() {
        if hg.degree(a) > g.degree(v) {
            continue;
        }
        if let Some(e) = run(g, &within, hg, Some((a, &single))) {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

pub(crate) fn search(g: &Graph, within: &VertexSet, hg: &Graph) -> Option<Embedding> {
    run(g, within, hg, None)
}

fn run(g: &Graph, within: &VertexSet, hg: &Graph, pin: Option<(usize, &VertexSet)>) -> Option<Embedding> {
    let k = hg.n();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > within.len() {
        return None;
    }
    let order = placement_order(hg, pin.map(|(a, _)| a));
    let mut host = vec![usize::MAX; k];
    let mut used = VertexSet::new(g.n());
    let first = match pin {
        Some((_, s)) => s.intersection(within),
        None => within.clone(),
    };
    if place(g, &first, within, hg, &order, 0, &mut host, &mut used) {
        Some(host)
    } else {
        None
    }
}

fn placement_order(hg: &Graph, start: Option<usize>) -> Vec<usize> {
    let k = hg.n();
    let mut order = Vec::with_capacity(k);
    let mut placed = VertexSet::new(k);
    if let Some(a) = start {
        placed.insert(a);
        order.push(a);
    }
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| (hg.neighbors(v).intersection_len(&placed), hg.degree(v), usize::MAX - v))
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn place(
    g: &Graph,
    first: &VertexSet,
    within: &VertexSet,
    hg: &Graph,
    order: &[usize],
    depth: usize,
    host: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let hv = order[depth];
    let mut cand = if depth == 0 { first.clone() } else { within.difference(used) };
    for &prev in &order[..depth] {
        let gv = host[prev];
        if hg.has_edge(hv, prev) {
            cand.intersect_with(g.neighbors(gv));
        } else {
            cand.difference_with(g.neighbors(gv));
        }
        if cand.is_empty() {
            return false;
        }
    }
    let need = hg.degree(hv);
    for gv in cand.iter() {
        if g.degree(gv) < need {
            continue;
        }
        host[hv] = gv;
        used.insert(gv);
        if place(g, first, within, hg, order, depth + 1, host, used) {
            return true;
        }
        used.remove(gv);
    }
    host[hv] = usize::MAX;
    false
}
