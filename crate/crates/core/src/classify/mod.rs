//! Complexity verdicts for fixed patterns `H`.
//!
//! Hardness rules are closed upward (a pattern containing a hard induced
//! subpattern is hard), tractability rules downward (an induced subpattern of a
//! tractable pattern is tractable). Anything not settled by a rule stays open.

mod decomposition;

use std::fmt;

pub use decomposition::{find_clique_decomposition, is_clique_decomposition, CliqueDecomposition, DecompositionMode, TargetFamily};

use crate::graph::{find_induced, Graph, HPattern};
use crate::hardness::double_broom;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Complexity {
    Polynomial,
    Fpt,
    W1Hard,
    NpHardOpenFpt,
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelStatus {
    PolyKernel,
    TuringKernelNoPk,
    NoPolyKernel,
    OpenKernel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub complexity: Complexity,
    pub kernel: KernelStatus,
    pub rules_fired: Vec<String>,
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Complexity::Polynomial => "polynomial",
            Complexity::Fpt => "FPT",
            Complexity::W1Hard => "W[1]-hard",
            Complexity::NpHardOpenFpt => "NP-hard, FPT status open",
            Complexity::Open => "open",
        })
    }
}

impl fmt::Display for KernelStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KernelStatus::PolyKernel => "polynomial kernel",
            KernelStatus::TuringKernelNoPk => "polynomial Turing kernel, no polynomial kernel",
            KernelStatus::NoPolyKernel => "no polynomial kernel",
            KernelStatus::OpenKernel => "kernel status open",
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {} [{}]", self.complexity, self.kernel, self.rules_fired.join("; "))
    }
}

/// Factors of the maximal join decomposition: complements of the complement's components.
pub fn join_factors(h: &HPattern) -> Vec<HPattern> {
    let co = h.graph().complement();
    co.connected_components()
        .into_iter()
        .map(|c| HPattern::from_graph(h.graph().induced(&c.to_vec())))
        .collect()
}

pub fn is_path(g: &Graph) -> bool {
    g.n() > 0 && g.is_connected() && g.edge_count() + 1 == g.n() && (0..g.n()).all(|v| g.degree(v) <= 2)
}

/// A tree with exactly one vertex of degree 3 and none of higher degree.
pub fn is_subdivided_claw(g: &Graph) -> bool {
    g.n() > 0
        && g.is_connected()
        && g.edge_count() + 1 == g.n()
        && (0..g.n()).all(|v| g.degree(v) <= 3)
        && (0..g.n()).filter(|&v| g.degree(v) == 3).count() == 1
}

/// `K_s ⊎ K_1` for `s >= 3`.
fn is_clique_plus_isolated(g: &Graph) -> bool {
    let comps = g.connected_components();
    comps.len() == 2
        && comps.iter().any(|c| c.len() == 1)
        && comps.iter().any(|c| c.len() >= 3 && g.is_clique(c))
}

/// MIS is NP-hard in `H_i`-free graphs by the classical reduction rule.
pub fn np_hard_connected(h: &HPattern) -> bool {
    let g = h.graph();
    (g.n() > 0 && g.is_connected() && !is_path(g) && !is_subdivided_claw(g)) || is_clique_plus_isolated(g)
}

/// Repeatedly removes simplicial vertices.
pub fn is_chordal(g: &Graph) -> bool {
    let mut left = g.vertices();
    while !left.is_empty() {
        let simplicial = left.iter().find(|&v| g.is_clique(&g.neighbors(v).intersection(&left)));
        match simplicial {
            Some(v) => left.remove(v),
            None => return false,
        }
    }
    true
}

fn contains(h: &Graph, p: &HPattern) -> bool {
    p.n() <= h.n() && find_induced(h, p).expect("patterns within cap").is_some()
}

fn induced_in(h: &Graph, host: &Graph) -> bool {
    h.n() <= host.n() && find_induced(host, &HPattern::from_graph(h.clone())).expect("patterns within cap").is_some()
}

/// Edges of the complement, restricted to its non-isolated vertices.
fn complement_core(h: &Graph) -> (Graph, Vec<usize>) {
    let co = h.complement();
    let core: Vec<usize> = (0..co.n()).filter(|&v| co.degree(v) > 0).collect();
    (co.induced(&core), core)
}

fn is_cluster(h: &Graph) -> bool {
    h.connected_components().iter().all(|c| h.is_clique(c))
}

/// Induced subgraph of some `K_r \ K_s` with `s <= 3`.
fn in_clique_minus_clique(h: &Graph) -> bool {
    let (core, _) = complement_core(h);
    core.n() <= 3 && core.is_clique(&core.vertices())
}

/// Induced subgraph of some `K_r \ K_{s1,s2}`.
fn in_clique_minus_biclique(h: &Graph) -> bool {
    let (core, _) = complement_core(h);
    if core.n() == 0 {
        return true;
    }
    if !core.is_connected() {
        return false;
    }
    let mut side = core.non_neighbors(0);
    side.insert(0);
    let other = core.neighbors(0).clone();
    core.is_independent(&side)
        && core.is_independent(&other)
        && side.iter().all(|u| other.iter().all(|v| core.has_edge(u, v)))
}

/// Induced subgraph of some `K_r \ K_{1,r-2}`: the complement is a star plus at most one isolated vertex.
fn in_turing_family(h: &Graph) -> bool {
    let co = h.complement();
    let (core, _) = complement_core(h);
    let isolated = co.n() - core.n();
    if core.n() == 0 {
        return true;
    }
    let star = core.is_connected() && (0..core.n()).filter(|&v| core.degree(v) > 1).count() <= 1 && core.edge_count() + 1 == core.n();
    star && isolated <= 1
}

/// Shape of the complement's non-trivial part for the polynomial-kernel families.
enum KernelShape {
    Complete,
    MinusEdge,
    MinusP3,
}

fn kernel_shape(h: &Graph) -> Option<KernelShape> {
    let (core, _) = complement_core(h);
    match (core.n(), core.edge_count()) {
        (0, _) => Some(KernelShape::Complete),
        (2, 1) => Some(KernelShape::MinusEdge),
        (3, 2) => Some(KernelShape::MinusP3),
        _ => None,
    }
}

/// Connected induced subgraphs of `g` on at least `min` vertices.
fn connected_induced(g: &Graph, min: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    (1u32..1 << n)
        .filter(|m| m.count_ones() as usize >= min)
        .map(|m| (0..n).filter(|v| m >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|vs| g.induced(vs).is_connected())
        .collect()
}

/// Connected `H'` with no nearly strong decomposition on a path and no almost strong one on a subdivided claw.
fn escapes_second_construction(h: &HPattern) -> bool {
    find_clique_decomposition(h, &TargetFamily::Paths, DecompositionMode::NearlyStrong).is_none()
        && find_clique_decomposition(h, &TargetFamily::ClawSubdivisions, DecompositionMode::AlmostStrong).is_none()
}

fn hardness_rules(g: &Graph, rules: &mut Vec<String>) -> bool {
    if !is_chordal(g) {
        rules.push("W[1]-hard: not chordal, the grid tiling reduction has no induced cycle of length 4 or more".into());
        return true;
    }
    if contains(g, &HPattern::star(4)) {
        rules.push("W[1]-hard: contains K1,4, excluded by the grid tiling reduction".into());
        return true;
    }
    if let Some(d) = (1..).take_while(|d| d + 5 <= g.n()).find(|&d| contains(g, &double_broom(d))) {
        rules.push(format!(
            "W[1]-hard: contains a tree with two branching vertices at distance {d}, excluded by the grid tiling reduction"
        ));
        return true;
    }
    if contains(g, &HPattern::t_graph(1, 2, 2)) {
        rules.push("W[1]-hard: contains T1,2,2, absent from the anti-matching construction with branching links".into());
        return true;
    }
    for vs in connected_induced(g, 4) {
        let sub = HPattern::from_graph(g.induced(&vs));
        if escapes_second_construction(&sub) {
            let what = if vs.len() == g.n() { "H".to_string() } else { format!("induced subgraph on {vs:?}") };
            if find_clique_decomposition(&sub, &TargetFamily::OneBranchTrees, DecompositionMode::Plain).is_none() {
                rules.push(format!("W[1]-hard: {what} has no clique decomposition on a tree with one branching vertex"));
            } else {
                rules.push(format!(
                    "W[1]-hard: {what} has no nearly strong path decomposition and no almost strong subdivided-claw decomposition"
                ));
            }
            return true;
        }
    }
    false
}

fn polynomial_rules(g: &Graph, rules: &mut Vec<String>) -> bool {
    if g.edge_count() == 0 {
        rules.push(format!("polynomial: independence number below {} (brute force)", g.n()));
        return true;
    }
    if induced_in(g, &Graph::path(6)) {
        rules.push("polynomial: induced subgraph of P6, P6-free graphs are solvable in polynomial time".into());
        return true;
    }
    if induced_in(g, &Graph::star(3)) {
        rules.push("polynomial: induced subgraph of the claw, claw-free graphs are solvable in polynomial time".into());
        return true;
    }
    false
}

fn fpt_rules(g: &Graph, rules: &mut Vec<String>) -> bool {
    let before = rules.len();
    if is_cluster(g) {
        rules.push("FPT: disjoint union of cliques, cluster-free solver".into());
    } else if in_clique_minus_clique(g) {
        rules.push("FPT: induced subgraph of K_r minus a clique of size at most 3, clique-minus-triangle solver".into());
    } else if in_clique_minus_biclique(g) {
        rules.push("FPT: induced subgraph of K_r minus a complete bipartite graph, iterative expansion solver".into());
    } else if induced_in(g, HPattern::gem().graph()) {
        rules.push("FPT: induced subgraph of the gem, randomized gem solver".into());
    }
    rules.len() > before
}

fn np_hard_rules(g: &Graph, rules: &mut Vec<String>) -> bool {
    let comps = g.connected_components();
    if let Some(c) = comps.iter().find(|c| {
        let cg = g.induced(&c.to_vec());
        !is_path(&cg) && !is_subdivided_claw(&cg)
    }) {
        rules.push(format!(
            "NP-hard: component {:?} is connected and neither a path nor a subdivided claw",
            c.to_vec()
        ));
        return true;
    }
    false
}

fn kernel_rules(h: &HPattern, complexity: Complexity, rules: &mut Vec<String>) -> KernelStatus {
    let g = h.graph();
    match complexity {
        Complexity::Polynomial => return KernelStatus::PolyKernel,
        Complexity::W1Hard => {
            rules.push("no kernel: W[1]-hard".into());
            return KernelStatus::NoPolyKernel;
        }
        _ => {}
    }
    let hard_factor = join_factors(h).into_iter().find(np_hard_connected);
    let turing = in_turing_family(g);
    if let Some(f) = hard_factor {
        rules.push(format!(
            "no polynomial kernel: join factor {f} is NP-hard, OR-composition by joins"
        ));
        if turing {
            rules.push("polynomial Turing kernel: induced subgraph of K_r minus K1,r-2".into());
            return KernelStatus::TuringKernelNoPk;
        }
        return KernelStatus::NoPolyKernel;
    }
    match kernel_shape(g) {
        Some(KernelShape::Complete) => {
            rules.push("polynomial kernel: clique, Ramsey bound".into());
            KernelStatus::PolyKernel
        }
        Some(KernelShape::MinusEdge) => {
            rules.push("polynomial kernel: induced subgraph of K_r minus an edge".into());
            KernelStatus::PolyKernel
        }
        Some(KernelShape::MinusP3) => {
            rules.push("polynomial kernel: induced subgraph of K_r minus K1,2".into());
            KernelStatus::PolyKernel
        }
        None => {
            if turing {
                rules.push("polynomial Turing kernel: induced subgraph of K_r minus K1,r-2".into());
            }
            KernelStatus::OpenKernel
        }
    }
}

/// Complexity and kernel status of MIS in `H`-free graphs.
pub fn verdict(h: &HPattern) -> Verdict {
    let g = h.graph();
    let mut rules = Vec::new();
    let complexity = if polynomial_rules(g, &mut rules) {
        Complexity::Polynomial
    } else if fpt_rules(g, &mut rules) {
        Complexity::Fpt
    } else if hardness_rules(g, &mut rules) {
        Complexity::W1Hard
    } else if np_hard_rules(g, &mut rules) {
        Complexity::NpHardOpenFpt
    } else {
        Complexity::Open
    };
    debug_assert!(
        !matches!(complexity, Complexity::Polynomial | Complexity::Fpt) || !hardness_rules(g, &mut Vec::new()),
        "{h} is both tractable and hard"
    );
    let kernel = kernel_rules(h, complexity, &mut rules);
    if matches!(complexity, Complexity::Open | Complexity::NpHardOpenFpt) && !g.is_connected() {
        rules.push("open: decomposition rules cover connected patterns only".into());
    } else if complexity == Complexity::Open {
        rules.push("open: no rule applies".into());
    }
    Verdict {
        complexity,
        kernel,
        rules_fired: rules,
    }
}

/// The eleven patterns on four vertices, in table order.
pub fn four_vertex_patterns() -> Vec<HPattern> {
    let named = |edges: &[(usize, usize)], name: &str| {
        HPattern::named(Graph::from_edges(4, edges.iter().copied()).expect("valid edges"), name)
    };
    vec![
        named(&[], "4K1"),
        named(&[(0, 1)], "K2|2K1"),
        named(&[(0, 1), (0, 2)], "P3|K1"),
        named(&[(0, 1), (2, 3)], "2K2"),
        named(&[(0, 1), (0, 2), (0, 3)], "claw"),
        named(&[(0, 1), (1, 2), (2, 3)], "P4"),
        named(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], "K4"),
        named(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], "diamond"),
        named(&[(0, 1), (0, 2), (0, 3), (1, 2)], "paw"),
        named(&[(0, 1), (0, 2), (1, 2)], "K3|K1"),
        named(&[(0, 1), (1, 2), (2, 3), (3, 0)], "C4"),
    ]
}

/// Expected (complexity, kernel) for each row of [`four_vertex_patterns`].
pub fn four_vertex_table() -> Vec<(Complexity, KernelStatus)> {
    use Complexity::*;
    use KernelStatus::*;
    let mut rows = vec![(Polynomial, PolyKernel); 6];
    rows.extend([(Fpt, PolyKernel), (Fpt, PolyKernel), (Fpt, PolyKernel), (Fpt, TuringKernelNoPk), (W1Hard, NoPolyKernel)]);
    rows
}

/// `H'` is an induced subgraph of `H`.
pub fn is_induced_subpattern(sub: &HPattern, h: &HPattern) -> bool {
    induced_in(sub.graph(), h.graph())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u32..1 << pairs.len())
            .map(|m| Graph::from_edges(n, (0..pairs.len()).filter(|i| m >> i & 1 == 1).map(|i| pairs[i])).unwrap())
            .collect()
    }

    #[test]
    fn four_vertex_table_rows() {
        for (h, want) in four_vertex_patterns().iter().zip(four_vertex_table()) {
            let v = verdict(h);
            assert_eq!((v.complexity, v.kernel), want, "{h}: {v}");
            assert!(!v.rules_fired.is_empty());
        }
    }

    #[test]
    fn join_factors_examples() {
        let gem = join_factors(&HPattern::gem());
        let mut sizes: Vec<usize> = gem.iter().map(HPattern::n).collect();
        sizes.sort();
        assert_eq!(sizes, [1, 4]);
        assert!(gem.iter().any(|f| is_path(f.graph()) && f.n() == 4));
        let k3k1 = HPattern::parse("K3|K1").unwrap();
        assert_eq!(join_factors(&k3k1).len(), 1);
        assert_eq!(join_factors(&HPattern::complete(5)).len(), 5);
    }

    #[test]
    fn joined_factors_rebuild_the_pattern() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                let h = HPattern::from_graph(g.clone());
                let factors = join_factors(&h);
                let joined = factors.iter().skip(1).fold(factors[0].graph().clone(), |acc, f| acc.join(f.graph()));
                assert!(induced_in(&joined, &g) && joined.n() == g.n(), "{g:?}");
            }
        }
    }

    #[test]
    fn np_hardness_predicate() {
        assert!(!np_hard_connected(&HPattern::path(4)));
        assert!(np_hard_connected(&HPattern::cycle(4)));
        assert!(np_hard_connected(&HPattern::parse("K3|K1").unwrap()));
        assert!(!np_hard_connected(&HPattern::subdivided_claw(1, 2, 3)));
        assert!(!np_hard_connected(&HPattern::parse("K2|K1").unwrap()));
    }

    #[test]
    fn named_verdicts() {
        let c4 = verdict(&HPattern::cycle(4));
        assert_eq!(c4.complexity, Complexity::W1Hard);
        let paw = verdict(&HPattern::paw());
        assert_eq!((paw.complexity, paw.kernel), (Complexity::Fpt, KernelStatus::PolyKernel));
        let k3k1 = verdict(&HPattern::parse("K3|K1").unwrap());
        assert_eq!(k3k1.kernel, KernelStatus::TuringKernelNoPk);
        assert_eq!(verdict(&HPattern::t_graph(1, 2, 2)).complexity, Complexity::W1Hard);
        let cricket = verdict(&HPattern::cricket());
        assert_eq!((cricket.complexity, cricket.kernel), (Complexity::NpHardOpenFpt, KernelStatus::OpenKernel));
        assert_eq!(verdict(&HPattern::star(4)).complexity, Complexity::W1Hard);
        assert_eq!(verdict(&HPattern::gem()).complexity, Complexity::Fpt);
        let k5_k22 = verdict(&HPattern::clique_minus_biclique(5, 2, 2));
        assert_eq!((k5_k22.complexity, k5_k22.kernel), (Complexity::Fpt, KernelStatus::OpenKernel));
        let k5_k13 = verdict(&HPattern::clique_minus_star(5, 3));
        assert_eq!((k5_k13.complexity, k5_k13.kernel), (Complexity::Fpt, KernelStatus::TuringKernelNoPk));
    }

    #[test]
    fn monotone_under_induced_subgraphs() {
        let graphs: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
        let verdicts: Vec<Verdict> = graphs.iter().map(|g| verdict(&HPattern::from_graph(g.clone()))).collect();
        let tractable = |c: Complexity| matches!(c, Complexity::Polynomial | Complexity::Fpt);
        for (i, small) in graphs.iter().enumerate() {
            for (j, big) in graphs.iter().enumerate() {
                if !induced_in(small, big) {
                    continue;
                }
                let (vs, vb) = (&verdicts[i], &verdicts[j]);
                if vs.complexity == Complexity::W1Hard {
                    assert_eq!(vb.complexity, Complexity::W1Hard, "{small:?} in {big:?}");
                }
                if tractable(vb.complexity) {
                    assert!(tractable(vs.complexity), "{small:?} in {big:?}");
                }
                if vb.complexity == Complexity::Polynomial {
                    assert_eq!(vs.complexity, Complexity::Polynomial);
                }
                if vb.kernel == KernelStatus::PolyKernel {
                    assert_eq!(vs.kernel, KernelStatus::PolyKernel, "{small:?} in {big:?}");
                }
            }
        }
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&Graph::complete(5)));
        assert!(is_chordal(HPattern::gem().graph()));
        assert!(!is_chordal(&Graph::cycle(5)));
        assert!(!is_chordal(&Graph::petersen()));
    }
}
