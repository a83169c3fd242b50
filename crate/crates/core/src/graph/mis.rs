use super::{Graph, VertexSet};
use crate::error::BudgetExceeded;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisResult {
    pub alpha: usize,
    pub witness: VertexSet,
}

/// Maximum independent set of `g` by branch and bound, visiting at most `budget` nodes.
pub fn alpha_exact(g: &Graph, budget: u64) -> Result<MisResult, BudgetExceeded> {
    AlphaSearch::new(g).budget(budget).run()
}

/// Greedy partition of `within` into cliques: seed with the smallest remaining
/// vertex, grow by smallest common neighbour.
pub fn greedy_clique_cover(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut left = within.clone();
    let mut cover = Vec::new();
    while let Some(v) = left.first() {
        let mut clique = VertexSet::new(g.n());
        clique.insert(v);
        let mut cand = left.intersection(g.neighbors(v));
        while let Some(u) = cand.first() {
            clique.insert(u);
            cand.intersect_with(g.neighbors(u));
        }
        left.difference_with(&clique);
        cover.push(clique);
    }
    cover
}

/// Configurable exact search.
///
/// The upper bound at a node with candidate set `P` is `|current| + cover(P)`,
/// where `cover(P)` is the smaller of a greedy clique cover of `P` and the number
/// of hint cliques meeting `P`. Branching picks the smallest clique of the cover:
/// at most one of its vertices is in any independent set.
pub struct AlphaSearch<'g> {
    g: &'g Graph,
    within: Option<VertexSet>,
    hint: Vec<VertexSet>,
    budget: u64,
}

impl<'g> AlphaSearch<'g> {
    pub fn new(g: &'g Graph) -> Self {
        AlphaSearch {
            g,
            within: None,
            hint: Vec::new(),
            budget: u64::MAX,
        }
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    /// Restricts the search to `G[within]`.
    pub fn within(mut self, within: VertexSet) -> Self {
        self.within = Some(within);
        self
    }

    /// Cliques covering every vertex of the search range; used as an extra bound.
    pub fn cover_hint(mut self, cliques: Vec<VertexSet>) -> Self {
        debug_assert!(cliques.iter().all(|c| self.g.is_clique(c)));
        self.hint = cliques;
        self
    }

    pub fn run(&self) -> Result<MisResult, BudgetExceeded> {
        let mut st = self.state(0);
        self.branch(&mut st, self.range())?;
        Ok(MisResult {
            alpha: st.best.len(),
            witness: VertexSet::from_iter(self.g.n(), st.best),
        })
    }

    /// An independent set of size `target` if one exists.
    pub fn decide(&self, target: usize) -> Result<Option<VertexSet>, BudgetExceeded> {
        if target == 0 {
            return Ok(Some(VertexSet::new(self.g.n())));
        }
        let mut st = self.state(target);
        self.branch(&mut st, self.range())?;
        Ok(if st.found {
            Some(VertexSet::from_iter(self.g.n(), st.best.into_iter().take(target)))
        } else {
            None
        })
    }

    fn range(&self) -> VertexSet {
        self.within.clone().unwrap_or_else(|| self.g.vertices())
    }

    fn state(&self, target: usize) -> State {
        State {
            current: Vec::new(),
            best: Vec::new(),
            floor: target.saturating_sub(1),
            target,
            found: false,
            nodes: 0,
        }
    }

    fn bound_and_pivot(&self, p: &VertexSet) -> (usize, VertexSet) {
        let cover = greedy_clique_cover(self.g, p);
        let mut bound = cover.len();
        let mut pivot = cover.into_iter().min_by_key(|c| c.len()).unwrap();
        if !self.hint.is_empty() {
            let meeting: Vec<VertexSet> = self
                .hint
                .iter()
                .map(|c| c.intersection(p))
                .filter(|c| !c.is_empty())
                .collect();
            bound = bound.min(meeting.len());
            if let Some(small) = meeting.into_iter().min_by_key(|c| c.len()) {
                if small.len() < pivot.len() {
                    pivot = small;
                }
            }
        }
        (bound, pivot)
    }

    fn branch(&self, st: &mut State, p: VertexSet) -> Result<(), BudgetExceeded> {
        st.nodes += 1;
        if st.nodes > self.budget {
            return Err(BudgetExceeded { limit: self.budget });
        }
        if p.is_empty() {
            if st.current.len() > st.best.len().max(st.floor) {
                st.best = st.current.clone();
                st.found = st.target > 0 && st.best.len() >= st.target;
            }
            return Ok(());
        }
        let (bound, pivot) = self.bound_and_pivot(&p);
        if st.current.len() + bound <= st.best.len().max(st.floor) {
            return Ok(());
        }
        for v in pivot.iter() {
            let mut next = p.clone();
            next.difference_with(self.g.neighbors(v));
            next.remove(v);
            st.current.push(v);
            self.branch(st, next)?;
            st.current.pop();
            if st.found {
                return Ok(());
            }
        }
        self.branch(st, p.difference(&pivot))
    }
}

struct State {
    current: Vec<usize>,
    best: Vec<usize>,
    floor: usize,
    target: usize,
    found: bool,
    nodes: u64,
}
