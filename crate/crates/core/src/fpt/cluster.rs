//! MIS in graphs without `q` disjoint, mutually anticomplete copies of `K_r`.
//!
//! Induction on `q`. For every `r`-clique `C` with minimum vertex `c`, the
//! vertices above `c` that see nothing of `C` induce a graph with one copy
//! fewer; its independent sets `S_1` are extended below `c` by repeatedly
//! picking one of the `Ram(r,k)` largest remaining candidates. When no size-`k`
//! set turns up, the sets visited form a family containing every independent
//! set of the graph.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::error::{Error, Result, Violation};
use crate::graph::{Graph, VertexSet};
use crate::ramsey::{ramsey_bound, ramsey_extract_within, OutcomeKind};

/// Independent sets collected by the cluster solver.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IsFamily {
    pub members: Vec<VertexSet>,
}

impl IsFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.members.contains(set)
    }

    /// `Ram(r,k)^{qk} · n^{qr}` with the binomial Ramsey bound.
    pub fn size_bound(n: usize, r: usize, k: usize, q: usize) -> BigUint {
        BigUint::from(ramsey_bound(r, k)).pow((q * k) as u32) * BigUint::from(n).pow((q * r) as u32)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClusterOutcome {
    /// An independent set of size `k`.
    Found(VertexSet),
    /// `alpha < k`; the family holds every independent set of the input.
    Below(IsFamily),
}

impl ClusterOutcome {
    pub fn found(self) -> Option<VertexSet> {
        match self {
            ClusterOutcome::Found(s) => Some(s),
            ClusterOutcome::Below(_) => None,
        }
    }
}

/// Decides `alpha(G) >= k` for a `qK_r`-free graph `g`.
pub fn solve_cluster_free(g: &Graph, k: usize, r: usize, q: usize) -> Result<ClusterOutcome> {
    solve_cluster_free_within(g, &g.vertices(), k, r, q)
}

/// [`solve_cluster_free`] on `G[within]`.
pub fn solve_cluster_free_within(g: &Graph, within: &VertexSet, k: usize, r: usize, q: usize) -> Result<ClusterOutcome> {
    if r == 0 || q == 0 {
        return Err(Error::InvalidInput("cluster pattern needs r, q >= 1".into()));
    }
    if k == 0 {
        return Ok(ClusterOutcome::Found(VertexSet::new(g.n())));
    }
    let solver = ClusterSolver {
        g,
        k,
        r,
        top: ramsey_bound(r, k).min(g.n() as u64 + 1) as usize,
    };
    let out = solver.solve(within, q, &[])?;
    if let ClusterOutcome::Found(s) = &out {
        debug_assert!(s.len() >= k && g.is_independent(s));
    }
    Ok(out)
}

struct ClusterSolver<'g> {
    g: &'g Graph,
    k: usize,
    r: usize,
    top: usize,
}

enum Step {
    Found(VertexSet),
    Continue,
}

impl ClusterSolver<'_> {
    /// `outer` holds the cliques chosen on the levels above, for violation reports.
    fn solve(&self, within: &VertexSet, q: usize, outer: &[usize]) -> Result<ClusterOutcome> {
        if q == 1 {
            return self.base(within, outer);
        }
        let mut family = HashSet::new();
        let mut order = Vec::new();
        if let Step::Found(s) = self.extend(&mut family, &mut order, VertexSet::new(self.g.n()), within.clone(), self.k)? {
            return Ok(ClusterOutcome::Found(s));
        }
        for clique in self.cliques(within) {
            let c = clique[0];
            let mut upper = within.clone();
            upper.retain_above(c);
            for &v in &clique {
                upper.remove(v);
                upper.difference_with(self.g.neighbors(v));
            }
            let stacked: Vec<usize> = outer.iter().chain(&clique).copied().collect();
            let inner = match self.solve(&upper, q - 1, &stacked)? {
                ClusterOutcome::Found(s) => return Ok(ClusterOutcome::Found(s)),
                ClusterOutcome::Below(fam) => fam,
            };
            for s1 in inner.members {
                let mut lower = within.clone();
                lower.retain_below(c + 1);
                lower.difference_with(&self.g.neighborhood_of_set(&s1));
                lower.difference_with(&s1);
                if let Step::Found(s) = self.extend(&mut family, &mut order, s1, lower, self.k)? {
                    return Ok(ClusterOutcome::Found(s));
                }
            }
        }
        Ok(ClusterOutcome::Below(IsFamily { members: order }))
    }

    /// Records `set`, then extends it by one of the largest candidates, at most `rounds` times.
    fn extend(
        &self,
        family: &mut HashSet<VertexSet>,
        order: &mut Vec<VertexSet>,
        set: VertexSet,
        cand: VertexSet,
        rounds: usize,
    ) -> Result<Step> {
        if set.len() >= self.k {
            return Ok(Step::Found(set));
        }
        if family.insert(set.clone()) {
            order.push(set.clone());
        }
        if rounds == 0 || cand.is_empty() {
            return Ok(Step::Continue);
        }
        let all = cand.to_vec();
        let top: Vec<usize> = all.iter().rev().take(self.top).copied().collect();
        if top.len() == self.top {
            let top_set = VertexSet::from_iter(self.g.n(), top.iter().copied());
            if let Some(out) = ramsey_extract_within(self.g, &top_set, self.r, self.k, &mut 0) {
                if out.kind == OutcomeKind::IndependentSet {
                    return Ok(Step::Found(out.members));
                }
            }
        }
        for &x in &top {
            let mut next = cand.clone();
            next.retain_below(x);
            next.difference_with(self.g.neighbors(x));
            let mut grown = set.clone();
            grown.insert(x);
            if let Step::Found(s) = self.extend(family, order, grown, next, rounds - 1)? {
                return Ok(Step::Found(s));
            }
        }
        Ok(Step::Continue)
    }

    fn base(&self, within: &VertexSet, outer: &[usize]) -> Result<ClusterOutcome> {
        if within.len() as u64 >= ramsey_bound(self.r, self.k) {
            let out = ramsey_extract_within(self.g, within, self.r, self.k, &mut 0).expect("bound reached");
            return match out.kind {
                OutcomeKind::IndependentSet => Ok(ClusterOutcome::Found(out.members)),
                OutcomeKind::Clique => {
                    let emb: Vec<usize> = outer.iter().copied().chain(out.members.iter()).collect();
                    Err(Violation::new(format!("{}K{}", emb.len() / self.r, self.r), Some(emb)).into())
                }
            };
        }
        let mut members = Vec::new();
        let mut current = VertexSet::new(self.g.n());
        if let Some(s) = self.enumerate(within.clone(), &mut current, &mut members) {
            return Ok(ClusterOutcome::Found(s));
        }
        Ok(ClusterOutcome::Below(IsFamily { members }))
    }

    /// All independent sets of `G[cand]` extending `current`.
    fn enumerate(&self, mut cand: VertexSet, current: &mut VertexSet, out: &mut Vec<VertexSet>) -> Option<VertexSet> {
        if current.len() >= self.k {
            return Some(current.clone());
        }
        out.push(current.clone());
        while let Some(v) = cand.first() {
            cand.remove(v);
            let next = cand.difference(self.g.neighbors(v));
            current.insert(v);
            let hit = self.enumerate(next, current, out);
            current.remove(v);
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    /// Every `r`-clique of `G[within]` as an increasing vertex list.
    fn cliques(&self, within: &VertexSet) -> Vec<Vec<usize>> {
        fn go(g: &Graph, r: usize, cand: VertexSet, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == r {
                out.push(cur.clone());
                return;
            }
            for v in cand.iter() {
                let mut next = cand.intersection(g.neighbors(v));
                next.retain_above(v);
                cur.push(v);
                go(g, r, next, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self.g, self.r, within.clone(), &mut Vec::new(), &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{alpha_exact, HPattern};
    use crate::sample::rejection_sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn all_independent_sets(g: &Graph) -> Vec<VertexSet> {
        (0u32..1 << g.n())
            .map(|m| VertexSet::from_iter(g.n(), (0..g.n()).filter(|v| m >> v & 1 == 1)))
            .filter(|s| g.is_independent(s))
            .collect()
    }

    #[test]
    fn c5_examples() {
        let c5 = Graph::cycle(5);
        let s = solve_cluster_free(&c5, 2, 2, 2).unwrap().found().unwrap();
        assert_eq!(s.len(), 2);
        assert!(c5.is_independent(&s));
        assert!(matches!(solve_cluster_free(&c5, 3, 2, 2).unwrap(), ClusterOutcome::Below(_)));
    }

    #[test]
    fn single_vertex() {
        let k3 = Graph::complete(3);
        for (r, q) in [(1, 2), (2, 2), (3, 3)] {
            assert_eq!(solve_cluster_free(&k3, 1, r, q).unwrap().found().unwrap().len(), 1);
        }
    }

    #[test]
    fn cluster_copy_is_reported() {
        let g = Graph::complete(6);
        assert!(matches!(solve_cluster_free(&g, 2, 3, 1), Err(Error::Violation(_))));
        let two = Graph::complete(6).disjoint_union(&Graph::complete(6));
        match solve_cluster_free(&two, 3, 3, 2) {
            Err(Error::Violation(v)) => {
                let emb = v.embedding.unwrap();
                assert_eq!(v.pattern, "2K3");
                assert_eq!(&two.induced(&emb), HPattern::cluster(3, 2).graph());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn family_contains_every_independent_set() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for (r, q) in [(2, 2), (3, 2), (1, 3), (2, 3)] {
            let h = HPattern::cluster(r, q);
            for round in 0..25 {
                let Some(g) = rejection_sample(&mut rng, 5 + round % 7, 0.6, &h, 200) else { continue };
                let alpha = alpha_exact(&g, 1 << 20).unwrap().alpha;
                for k in 1..=alpha + 1 {
                    match solve_cluster_free(&g, k, r, q).unwrap() {
                        ClusterOutcome::Found(s) => {
                            assert!(k <= alpha);
                            assert!(s.len() >= k && g.is_independent(&s));
                        }
                        ClusterOutcome::Below(fam) => {
                            assert!(k > alpha, "{g:?} k={k}");
                            for s in all_independent_sets(&g) {
                                assert!(fam.contains(&s), "{s:?} missing for {g:?}");
                            }
                            assert!(BigUint::from(fam.len()) <= IsFamily::size_bound(g.n(), r, k, q));
                        }
                    }
                }
            }
        }
    }
}
