//! Parameterized solvers for MIS in H-free graphs.
//!
//! The generic engine ([`driver`]) runs iterative expansion: it collects
//! disjoint independent sets of size `k-1`, extracts Ramsey-structured cliques
//! from them and hands structured instances ([`FaugInstance`]) to a
//! pattern-specific solver ([`triangle`], [`bipartite`], [`gem`]). Disjoint
//! unions of cliques are handled directly by [`cluster`].

pub mod bipartite;
pub mod cluster;
pub mod cograph;
pub mod driver;
pub mod gem;
pub mod triangle;

pub use cluster::{solve_cluster_free, ClusterOutcome, IsFamily};
pub use driver::{
    iterexp_driver, ramsey_extraction_stage, solve_hfree, Extraction, ExpansionSolver, Mode, OracleExpansion, Pipeline,
    SolverConfig,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Relation between two Ramsey-extracted cliques `C_a`, `C_b` (index-aligned).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// No edges.
    Empty,
    /// `c_j^a c_{j'}^b` is an edge iff `j != j'`.
    Full,
    /// Edge iff `j < j'`.
    SemiFullAsc,
    /// Edge iff `j > j'`.
    SemiFullDesc,
}

impl Relation {
    fn edge(self, j: usize, jj: usize) -> bool {
        match self {
            Relation::Empty => false,
            Relation::Full => j != jj,
            Relation::SemiFullAsc => j < jj,
            Relation::SemiFullDesc => j > jj,
        }
    }
}

/// `k-1` vertex-disjoint cliques of equal size whose index-aligned columns are
/// independent and whose pairwise relations are one of the four [`Relation`]s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyCliques {
    cliques: Vec<Vec<usize>>,
    relations: Vec<Vec<Relation>>,
}

impl RamseyCliques {
    /// Classifies every pair and checks the definition edge by edge.
    pub fn new(g: &Graph, cliques: Vec<Vec<usize>>) -> Result<Self> {
        let q = cliques.first().map_or(0, Vec::len);
        if cliques.iter().any(|c| c.len() != q) {
            return Err(Error::InvalidInput("Ramsey-extracted cliques must have equal size".into()));
        }
        for c in &cliques {
            if !g.is_clique_slice(c) {
                return Err(Error::InvalidInput(format!("{c:?} is not a clique")));
            }
        }
        for j in 0..q {
            let column: Vec<usize> = cliques.iter().map(|c| c[j]).collect();
            if !g.is_independent_slice(&column) {
                return Err(Error::InvalidInput(format!("column {j} is not independent")));
            }
        }
        let t = cliques.len();
        let mut relations = vec![vec![Relation::Empty; t]; t];
        for a in 0..t {
            for b in 0..t {
                if a == b {
                    continue;
                }
                let fits = |rel: Relation| {
                    (0..q).all(|j| (0..q).all(|jj| g.has_edge(cliques[a][j], cliques[b][jj]) == rel.edge(j, jj)))
                };
                relations[a][b] = [Relation::Empty, Relation::Full, Relation::SemiFullAsc, Relation::SemiFullDesc]
                    .into_iter()
                    .find(|&rel| fits(rel))
                    .ok_or_else(|| Error::InvalidInput(format!("cliques {a} and {b} have no valid relation")))?;
            }
        }
        Ok(RamseyCliques { cliques, relations })
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn count(&self) -> usize {
        self.cliques.len()
    }

    pub fn size(&self) -> usize {
        self.cliques.first().map_or(0, Vec::len)
    }

    pub fn relation(&self, a: usize, b: usize) -> Relation {
        self.relations[a][b]
    }

    pub fn as_set(&self, p: usize, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.cliques[p].iter().copied())
    }
}

/// A structured instance: candidate sets `X_1..X_k` and Ramsey-extracted
/// cliques `C_1..C_{k-1}` such that every `X_i` is complete or anticomplete to
/// every `C_p` and the part/clique incidence graph is connected.
#[derive(Debug, Clone)]
pub struct FaugInstance {
    pub graph: Graph,
    /// Vertices of the surrounding search; recursive calls stay inside it.
    pub alive: VertexSet,
    pub k: usize,
    pub parts: Vec<VertexSet>,
    pub cliques: RamseyCliques,
    /// `bip[i][p]`: `X_i` is complete to `C_p`.
    pub bip: Vec<Vec<bool>>,
}

impl FaugInstance {
    /// Builds the instance, deriving the incidence graph and asserting the invariants.
    pub fn new(graph: Graph, alive: VertexSet, parts: Vec<VertexSet>, cliques: RamseyCliques) -> Result<Self> {
        let k = parts.len();
        if cliques.count() + 1 != k {
            return Err(Error::InvalidInput(format!("{k} parts need {} cliques, got {}", k - 1, cliques.count())));
        }
        let n = graph.n();
        let mut used = VertexSet::new(n);
        for c in cliques.cliques() {
            for &v in c {
                used.insert(v);
            }
        }
        let mut bip = vec![vec![false; k - 1]; k];
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidInput(format!("part {i} is empty")));
            }
            if !part.is_disjoint(&used) {
                return Err(Error::InvalidInput(format!("part {i} overlaps a clique or another part")));
            }
            used.union_with(part);
            for p in 0..k - 1 {
                let cp = cliques.as_set(p, n);
                let mut kinds = part.iter().map(|v| graph.neighbors(v).intersection_len(&cp));
                let first = kinds.next().unwrap();
                if first != 0 && first != cp.len() || kinds.any(|c| c != first) {
                    return Err(Error::InvalidInput(format!("part {i} is not uniform towards clique {p}")));
                }
                bip[i][p] = first != 0;
            }
        }
        let inst = FaugInstance {
            graph,
            alive,
            k,
            parts,
            cliques,
            bip,
        };
        if !inst.bip_connected() {
            return Err(Error::InvalidInput("part/clique incidence graph is disconnected".into()));
        }
        Ok(inst)
    }

    pub fn bip_connected(&self) -> bool {
        bip_connected(&self.bip)
    }

    pub fn union_of_parts(&self) -> VertexSet {
        let mut all = VertexSet::new(self.graph.n());
        for p in &self.parts {
            all.union_with(p);
        }
        all
    }

    /// Exhaustive search for an independent set with one vertex in every part.
    pub fn rainbow_brute_force(&self) -> Option<Vec<usize>> {
        fn go(inst: &FaugInstance, i: usize, pick: &mut Vec<usize>) -> bool {
            if i == inst.k {
                return true;
            }
            for v in inst.parts[i].iter() {
                if pick.iter().all(|&u| !inst.graph.has_edge(u, v)) {
                    pick.push(v);
                    if go(inst, i + 1, pick) {
                        return true;
                    }
                    pick.pop();
                }
            }
            false
        }
        let mut pick = Vec::new();
        go(self, 0, &mut pick).then_some(pick)
    }
}

pub(crate) fn bip_connected(bip: &[Vec<bool>]) -> bool {
    let k = bip.len();
    if k == 0 {
        return true;
    }
    let cols = bip[0].len();
    let mut part_seen = vec![false; k];
    let mut clique_seen = vec![false; cols];
    let mut stack = vec![0usize];
    part_seen[0] = true;
    while let Some(i) = stack.pop() {
        for p in 0..cols {
            if bip[i][p] && !clique_seen[p] {
                clique_seen[p] = true;
                for (j, seen) in part_seen.iter_mut().enumerate() {
                    if bip[j][p] && !*seen {
                        *seen = true;
                        stack.push(j);
                    }
                }
            }
        }
    }
    part_seen.iter().all(|&s| s) && clique_seen.iter().all(|&s| s)
}

/// Recursive MIS calls made by the structured solvers when they branch on a vertex.
pub trait MisRecursion {
    /// An independent set of size `k` inside `alive`, if one is found.
    fn solve_mis(&mut self, alive: &VertexSet, k: usize) -> Result<Option<VertexSet>>;
}

/// Solver for the structured problem on one [`FaugInstance`].
pub trait FaugSolver {
    /// Clique size `f(k)` the solver expects.
    fn clique_size(&self, k: usize) -> usize;
    fn solve(&self, inst: &FaugInstance, rec: &mut dyn MisRecursion, rng: &mut dyn rand::RngCore)
        -> Result<Option<VertexSet>>;
}

/// For each part smaller than `threshold`, branch on its vertices: a rainbow
/// solution uses one of them. Returns `None` when no part is small.
pub(crate) fn branch_on_small_part(
    inst: &FaugInstance,
    threshold: u64,
    rec: &mut dyn MisRecursion,
) -> Option<Result<Option<VertexSet>>> {
    let small = inst.parts.iter().find(|p| (p.len() as u64) < threshold)?;
    let mut run = || -> Result<Option<VertexSet>> {
        for v in small.iter() {
            let rest = inst.alive.difference(&inst.graph.closed_neighbors(v));
            if let Some(mut s) = rec.solve_mis(&rest, inst.k - 1)? {
                s.insert(v);
                return Ok(Some(s));
            }
        }
        Ok(None)
    };
    Some(run())
}

/// Exhaustive recursion used in tests and as a fallback oracle.
pub struct ExactRecursion {
    pub graph: Graph,
}

impl MisRecursion for ExactRecursion {
    fn solve_mis(&mut self, alive: &VertexSet, k: usize) -> Result<Option<VertexSet>> {
        Ok(crate::graph::AlphaSearch::new(&self.graph).within(alive.clone()).decide(k)?)
    }
}

#[cfg(test)]
pub(crate) mod testkit {
    use super::*;

    /// Cliques `C_0..C_{t-1}` of size `q` on fresh vertices `base..`, with the
    /// given relation between consecutive cliques and `Empty` otherwise.
    pub fn add_cliques(g: &mut Graph, base: usize, t: usize, q: usize, rel: &dyn Fn(usize, usize) -> Relation) -> Vec<Vec<usize>> {
        let cliques: Vec<Vec<usize>> = (0..t).map(|p| (0..q).map(|j| base + p * q + j).collect()).collect();
        for c in &cliques {
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        for a in 0..t {
            for b in a + 1..t {
                let r = rel(a, b);
                for j in 0..q {
                    for jj in 0..q {
                        if r.edge(j, jj) {
                            g.add_edge(cliques[a][j], cliques[b][jj]);
                        }
                    }
                }
            }
        }
        cliques
    }
}

#[cfg(test)]
mod tests {
    use super::testkit::add_cliques;
    use super::*;

    #[test]
    fn relations_are_classified() {
        for rel in [Relation::Empty, Relation::Full, Relation::SemiFullAsc, Relation::SemiFullDesc] {
            let mut g = Graph::new(8);
            let cliques = add_cliques(&mut g, 0, 2, 4, &|_, _| rel);
            let rc = RamseyCliques::new(&g, cliques).unwrap();
            assert_eq!(rc.relation(0, 1), rel);
        }
    }

    #[test]
    fn full_relation_is_an_anti_matching() {
        let mut g = Graph::new(6);
        let cliques = add_cliques(&mut g, 0, 2, 3, &|_, _| Relation::Full);
        assert!(RamseyCliques::new(&g, cliques.clone()).is_ok());
        for j in 0..3 {
            assert!(!g.has_edge(cliques[0][j], cliques[1][j]));
        }
        g.add_edge(cliques[0][1], cliques[1][1]);
        assert!(RamseyCliques::new(&g, cliques).is_err());
    }

    #[test]
    fn instance_invariants() {
        let mut g = Graph::new(5);
        let cliques = add_cliques(&mut g, 0, 1, 3, &|_, _| Relation::Empty);
        for c in &cliques[0] {
            g.add_edge(*c, 3);
            g.add_edge(*c, 4);
        }
        let rc = RamseyCliques::new(&g, cliques).unwrap();
        let parts = vec![VertexSet::from_iter(5, [3]), VertexSet::from_iter(5, [4])];
        let inst = FaugInstance::new(g.clone(), g.vertices(), parts, rc.clone()).unwrap();
        assert_eq!(inst.bip, vec![vec![true], vec![true]]);
        assert_eq!(inst.rainbow_brute_force(), Some(vec![3, 4]));
        g.remove_edge(0, 4);
        let parts = vec![VertexSet::from_iter(5, [3]), VertexSet::from_iter(5, [4])];
        assert!(FaugInstance::new(g, VertexSet::full(5), parts, rc).is_err());
    }
}
