//! Simple undirected graphs over `0..n` with bit-vector adjacency rows.
//!
//! Everything else in the crate is built on [`Graph`] and [`VertexSet`]. Graphs
//! are immutable once handed out: the builder methods take `&mut self` but the
//! algorithms only ever read.

mod induced;
mod mis;
mod pattern;
mod set;

pub use induced::{find_induced, find_induced_through, find_induced_within, Embedding};
pub use mis::{alpha_exact, greedy_clique_cover, AlphaSearch, MisResult};
pub use pattern::{HPattern, PATTERN_CAP};
pub use set::{Iter as VertexSetIter, VertexSet};

use crate::error::GraphError;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
            labels: None,
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n)
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// Star `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Panics on self-loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn non_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].complement();
        s.remove(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
    }

    pub fn clear_labels(&mut self) {
        self.labels = None;
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    pub fn is_independent_slice(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let k = set.len();
        set.iter().all(|v| self.adj[v].intersection_len(set) == k - 1)
    }

    pub fn is_clique_slice(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Induced subgraph on `vs` (in the given order); vertex `i` of the result is `vs[i]`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::new(vs.len());
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if self.has_edge(vs[i], vs[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(vs.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    pub fn induced_set(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let vs = set.to_vec();
        (self.induced(&vs), vs)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for v in 0..self.n {
            g.adj[v] = self.non_neighbors(v);
        }
        g.labels = self.labels.clone();
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g.labels = merge_labels(self, other);
        g
    }

    /// Join: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// Connected components of `G[within]`, each sorted, ordered by smallest vertex.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let mut comp = VertexSet::new(self.n);
            comp.insert(s);
            let mut frontier = comp.clone();
            left.remove(s);
            while !frontier.is_empty() {
                let mut next = VertexSet::new(self.n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(&left);
                left.difference_with(&next);
                comp.union_with(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.connected_components().len() == 1
    }

    /// Vertices of `within` in `N(set)`, excluding `set` itself.
    pub fn neighborhood_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in set.iter() {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(set);
        out
    }

    /// Extends `clique` greedily (smallest index first) to a maximal clique inside `within`.
    pub fn maximalize_clique(&self, clique: &mut VertexSet, within: &VertexSet) {
        let mut cand = within.clone();
        for v in clique.iter() {
            cand.intersect_with(&self.adj[v]);
        }
        while let Some(v) = cand.first() {
            clique.insert(v);
            cand.intersect_with(&self.adj[v]);
        }
    }
}

fn merge_labels(a: &Graph, b: &Graph) -> Option<Vec<String>> {
    if a.labels.is_none() && b.labels.is_none() {
        return None;
    }
    let side = |g: &Graph| -> Vec<String> {
        match &g.labels {
            Some(l) => l.clone(),
            None => vec![String::new(); g.n],
        }
    };
    let mut out = side(a);
    out.extend(side(b));
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::gnp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn join_of_two_singletons_is_an_edge() {
        assert_eq!(Graph::new(1).join(&Graph::new(1)), Graph::complete(2));
    }

    #[test]
    fn complement_is_an_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..=12 {
            let g = gnp(&mut rng, n, 0.4);
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn disjoint_union_of_edges() {
        let g = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.connected_components().len(), 2);
        assert_eq!(alpha_exact(&g, 1000).unwrap().alpha, 2);
    }

    #[test]
    fn components_partition_vertices() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = gnp(&mut rng, 15, 0.12);
            let comps = g.connected_components();
            let mut seen = VertexSet::new(g.n());
            for c in &comps {
                assert!(seen.is_disjoint(c));
                seen.union_with(c);
                for v in c.iter() {
                    assert!(g.neighbors(v).difference(c).is_empty());
                }
            }
            assert_eq!(seen.len(), g.n());
        }
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1))));
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }
}
