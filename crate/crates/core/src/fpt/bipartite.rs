//! Rainbow independent sets in `(K_{3r} \ K_{r,r})`-free structured instances.
//!
//! Each large part holds an `r`-clique. If two Ramsey-extracted cliques with no
//! edges between them were both reachable from one part, or a part missed a
//! clique, slices of the cliques would complete the pattern. Hence the parts
//! together are `(K_r ⊎ K_r)`-free and the cluster solver finishes the job.

use rand::RngCore;

use super::cluster::solve_cluster_free_within;
use super::{branch_on_small_part, FaugInstance, FaugSolver, MisRecursion, Relation};
use crate::error::{Error, Result, Violation};
use crate::graph::{Graph, HPattern, VertexSet};
use crate::ramsey::{ramsey_bound, ramsey_extract_within, OutcomeKind};

/// Solver for `H = K_{3r} \ K_{r,r}`; cliques have size `3r`.
#[derive(Debug, Clone)]
pub struct BipartiteSolver {
    pub r: usize,
}

impl FaugSolver for BipartiteSolver {
    fn clique_size(&self, _k: usize) -> usize {
        3 * self.r
    }

    fn solve(&self, inst: &FaugInstance, rec: &mut dyn MisRecursion, _rng: &mut dyn RngCore) -> Result<Option<VertexSet>> {
        solve_faug_clique_minus_bipartite(inst, self.r, rec)
    }
}

pub fn solve_faug_clique_minus_bipartite(inst: &FaugInstance, r: usize, rec: &mut dyn MisRecursion) -> Result<Option<VertexSet>> {
    let g = &inst.graph;
    let k = inst.k;
    if inst.cliques.size() != 3 * r {
        return Err(Error::InvalidInput(format!("cliques must have size {}", 3 * r)));
    }
    if k == 1 {
        return Ok(inst.parts[0].first().map(|v| VertexSet::from_iter(g.n(), [v])));
    }
    if let Some(out) = branch_on_small_part(inst, ramsey_bound(r, k), rec) {
        return out;
    }
    let mut part_cliques = Vec::with_capacity(k);
    for part in &inst.parts {
        let out = ramsey_extract_within(g, part, r, k, &mut 0).expect("part reaches the Ramsey bound");
        if out.kind == OutcomeKind::IndependentSet {
            return Ok(Some(out.members));
        }
        part_cliques.push(out.members.to_vec());
    }
    let witness = Witness { inst, r };
    witness.check_y_is_clique(&part_cliques)?;
    witness.check_complete_bipartite(&part_cliques)?;
    let union = inst.union_of_parts();
    Ok(solve_cluster_free_within(g, &union, k, r, 2)?.found())
}

struct Witness<'a> {
    inst: &'a FaugInstance,
    r: usize,
}

impl Witness<'_> {
    fn slice(&self, p: usize, s: usize) -> &[usize] {
        &self.inst.cliques.cliques()[p][s * self.r..(s + 1) * self.r]
    }

    fn pattern(&self) -> HPattern {
        HPattern::clique_minus_biclique(3 * self.r, self.r, self.r)
    }

    fn report(&self, emb: Vec<usize>) -> Error {
        debug_assert_eq!(&self.inst.graph.induced(&emb), self.pattern().graph());
        Violation::new(self.pattern().to_string(), Some(emb)).into()
    }

    /// `[left, right, middle]` induces the pattern.
    fn fits(g: &Graph, left: &[usize], right: &[usize], middle: &[usize]) -> bool {
        let complete = |a: &[usize], b: &[usize]| a.iter().all(|&u| b.iter().all(|&v| g.has_edge(u, v)));
        let none = |a: &[usize], b: &[usize]| a.iter().all(|&u| b.iter().all(|&v| !g.has_edge(u, v)));
        none(left, right) && complete(left, middle) && complete(right, middle)
    }

    fn first_fit(&self, candidates: impl Iterator<Item = (Vec<usize>, Vec<usize>, Vec<usize>)>) -> Option<Vec<usize>> {
        candidates
            .filter(|(l, rt, m)| Self::fits(&self.inst.graph, l, rt, m))
            .map(|(l, rt, m)| [l, rt, m].concat())
            .next()
    }

    /// Cliques linked by non-empty relations form one clique.
    fn check_y_is_clique(&self, part_cliques: &[Vec<usize>]) -> Result<()> {
        let inst = self.inst;
        let t = inst.k - 1;
        let linked = |a: usize, b: usize| a != b && inst.cliques.relation(a, b) != Relation::Empty;
        for mid in 0..t {
            for a in 0..t {
                for b in a + 1..t {
                    if linked(a, mid) && linked(mid, b) && !linked(a, b) {
                        let combos = (0..27).map(|c| {
                            let (sa, sm, sb) = (c / 9, c / 3 % 3, c % 3);
                            (self.slice(a, sa).to_vec(), self.slice(b, sb).to_vec(), self.slice(mid, sm).to_vec())
                        });
                        let emb = self
                            .first_fit(combos)
                            .ok_or_else(|| Error::InvalidInput("no slice certificate for a P3 of cliques".into()))?;
                        return Err(self.report(emb));
                    }
                }
            }
        }
        // Y is a disjoint union of cliques; a part reaching two of them completes the pattern.
        for (h, row) in inst.bip.iter().enumerate() {
            let seen: Vec<usize> = (0..t).filter(|&p| row[p]).collect();
            for (i, &a) in seen.iter().enumerate() {
                if let Some(&b) = seen[i + 1..].iter().find(|&&b| !linked(a, b)) {
                    return Err(self.report([self.slice(a, 0), self.slice(b, 0), &part_cliques[h]].concat()));
                }
            }
        }
        Ok(())
    }

    fn check_complete_bipartite(&self, part_cliques: &[Vec<usize>]) -> Result<()> {
        let inst = self.inst;
        let t = inst.k - 1;
        for (h, row) in inst.bip.iter().enumerate() {
            let Some(missed) = (0..t).find(|&p| !row[p]) else { continue };
            let seen = (0..t).find(|&p| row[p]).expect("incidence graph is connected");
            let combos = (0..9).filter(|c| c / 3 != c % 3).map(|c| {
                (part_cliques[h].clone(), self.slice(missed, c / 3).to_vec(), self.slice(seen, c % 3).to_vec())
            });
            let emb = self
                .first_fit(combos)
                .ok_or_else(|| Error::InvalidInput("no slice certificate for a missed clique".into()))?;
            return Err(self.report(emb));
        }
        Ok(())
    }
}
