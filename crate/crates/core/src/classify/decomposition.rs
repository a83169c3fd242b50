//! Partitions of a pattern into cliques whose interactions follow a target graph.

use std::fmt;

use crate::graph::{find_induced, Graph, HPattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecompositionMode {
    /// Adjacent parts sit on target edges.
    Plain,
    /// Target edges carry complete interactions.
    Strong,
    /// Target edges carry a clique, or a clique of size at least 3 minus one edge.
    AlmostStrong,
    /// As `AlmostStrong`, except one target edge may carry any `C_4`-free interaction.
    NearlyStrong,
}

/// Targets searched by [`find_clique_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetFamily {
    Paths,
    ClawSubdivisions,
    /// Trees with at most one branching vertex.
    OneBranchTrees,
    Explicit(Graph),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueDecomposition {
    pub target: Graph,
    /// `parts[t]` is the clique placed on target vertex `t`.
    pub parts: Vec<Vec<usize>>,
    pub mode: DecompositionMode,
}

impl fmt::Display for CliqueDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| format!("{p:?}")).collect();
        write!(f, "{:?} on {:?}: {}", self.mode, self.target, parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Interaction {
    Empty,
    Complete,
    MissingOneEdge,
    C4Free,
    Other,
}

fn interaction(h: &Graph, a: &[usize], b: &[usize]) -> Interaction {
    let edges = a.iter().map(|&u| b.iter().filter(|&&v| h.has_edge(u, v)).count()).sum::<usize>();
    let full = a.len() * b.len();
    if edges == 0 {
        Interaction::Empty
    } else if edges == full {
        Interaction::Complete
    } else if edges + 1 == full && a.len() + b.len() >= 3 {
        Interaction::MissingOneEdge
    } else {
        let union: Vec<usize> = a.iter().chain(b).copied().collect();
        let c4 = find_induced(&h.induced(&union), &HPattern::cycle(4)).expect("C4 within cap");
        if c4.is_none() {
            Interaction::C4Free
        } else {
            Interaction::Other
        }
    }
}

/// Cost of an interaction on a target edge: `None` if forbidden, `Some(1)` if it
/// uses the single relaxed slot of a nearly strong decomposition.
fn edge_cost(mode: DecompositionMode, x: Interaction) -> Option<usize> {
    use Interaction::*;
    match (mode, x) {
        (DecompositionMode::Plain, _) => Some(0),
        (_, Complete) => Some(0),
        (DecompositionMode::Strong, _) => None,
        (_, MissingOneEdge) => Some(0),
        (DecompositionMode::NearlyStrong, Empty | C4Free) => Some(1),
        _ => None,
    }
}

/// Checks a given placement of cliques on target vertices.
pub fn is_clique_decomposition(h: &Graph, target: &Graph, parts: &[Vec<usize>], mode: DecompositionMode) -> bool {
    if parts.len() != target.n() || parts.iter().any(|p| p.is_empty() || !h.is_clique_slice(p)) {
        return false;
    }
    let mut seen = vec![false; h.n()];
    for &v in parts.iter().flatten() {
        if v >= h.n() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    if seen.iter().any(|s| !s) {
        return false;
    }
    let mut relaxed = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let x = interaction(h, &parts[i], &parts[j]);
            if target.has_edge(i, j) {
                match edge_cost(mode, x) {
                    Some(c) => relaxed += c,
                    None => return false,
                }
            } else if x != Interaction::Empty {
                return false;
            }
        }
    }
    relaxed <= 1
}

/// Paths and subdivided claws on exactly `l` vertices, as requested by `family`.
fn targets(family: &TargetFamily, l: usize) -> Vec<Graph> {
    let paths = || vec![Graph::path(l)];
    let claws = || {
        let mut out = Vec::new();
        for a in 1..l {
            for b in 1..=a {
                for c in 1..=b {
                    if 1 + a + b + c == l {
                        out.push(HPattern::subdivided_claw(a, b, c).graph().clone());
                    }
                }
            }
        }
        out
    };
    match family {
        TargetFamily::Paths => paths(),
        TargetFamily::ClawSubdivisions => claws(),
        TargetFamily::OneBranchTrees => paths().into_iter().chain(claws()).collect(),
        TargetFamily::Explicit(t) if t.n() == l => vec![t.clone()],
        TargetFamily::Explicit(_) => Vec::new(),
    }
}

/// Exhaustive search over partitions of `V(H)` into cliques and over the targets of `family`.
pub fn find_clique_decomposition(h: &HPattern, family: &TargetFamily, mode: DecompositionMode) -> Option<CliqueDecomposition> {
    let g = h.graph();
    if g.n() == 0 {
        return None;
    }
    let max_parts = match family {
        TargetFamily::Explicit(t) => t.n(),
        _ => g.n(),
    };
    let mut found = None;
    let mut parts: Vec<Vec<usize>> = Vec::new();
    partitions(g, 0, max_parts, &mut parts, &mut |parts| {
        for t in targets(family, parts.len()) {
            if let Some(order) = place(g, &t, parts, mode) {
                found = Some(CliqueDecomposition {
                    target: t,
                    parts: order.into_iter().map(|i| parts[i].clone()).collect(),
                    mode,
                });
                return true;
            }
        }
        false
    });
    found
}

/// Partitions of `0..n` into cliques, vertices added in index order. Stops when `visit` returns true.
fn partitions(g: &Graph, v: usize, max_parts: usize, parts: &mut Vec<Vec<usize>>, visit: &mut dyn FnMut(&[Vec<usize>]) -> bool) -> bool {
    if v == g.n() {
        return visit(parts);
    }
    for i in 0..parts.len() {
        if parts[i].iter().all(|&u| g.has_edge(u, v)) {
            parts[i].push(v);
            let stop = partitions(g, v + 1, max_parts, parts, visit);
            parts[i].pop();
            if stop {
                return true;
            }
        }
    }
    if parts.len() < max_parts {
        parts.push(vec![v]);
        let stop = partitions(g, v + 1, max_parts, parts, visit);
        parts.pop();
        if stop {
            return true;
        }
    }
    false
}

/// A bijection from target vertices to parts satisfying `mode`, as `order[t] = part`.
fn place(h: &Graph, t: &Graph, parts: &[Vec<usize>], mode: DecompositionMode) -> Option<Vec<usize>> {
    let l = parts.len();
    let mut inter = vec![vec![Interaction::Empty; l]; l];
    for i in 0..l {
        for j in i + 1..l {
            let x = interaction(h, &parts[i], &parts[j]);
            inter[i][j] = x;
            inter[j][i] = x;
        }
    }
    // A part adjacent to more parts than any target vertex has neighbours cannot be placed.
    let max_deg = (0..t.n()).map(|v| t.degree(v)).max().unwrap_or(0);
    if (0..l).any(|i| (0..l).filter(|&j| inter[i][j] != Interaction::Empty).count() > max_deg) {
        return None;
    }
    let mut order = Vec::with_capacity(l);
    let mut used = vec![false; l];
    fn go(t: &Graph, inter: &[Vec<Interaction>], mode: DecompositionMode, order: &mut Vec<usize>, used: &mut [bool], relaxed: usize) -> bool {
        let pos = order.len();
        if pos == inter.len() {
            return true;
        }
        for part in 0..inter.len() {
            if used[part] {
                continue;
            }
            let mut extra = 0;
            let ok = order.iter().enumerate().all(|(q, &other)| {
                let x = inter[part][other];
                if t.has_edge(pos, q) {
                    match edge_cost(mode, x) {
                        Some(c) => {
                            extra += c;
                            true
                        }
                        None => false,
                    }
                } else {
                    x == Interaction::Empty
                }
            });
            if !ok || relaxed + extra > 1 {
                continue;
            }
            used[part] = true;
            order.push(part);
            if go(t, inter, mode, order, used, relaxed + extra) {
                return true;
            }
            order.pop();
            used[part] = false;
        }
        false
    }
    go(t, &inter, mode, &mut order, &mut used, 0).then_some(order)
}
