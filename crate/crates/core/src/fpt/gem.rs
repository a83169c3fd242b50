//! Rainbow independent sets in gem-free structured instances.
//!
//! Cliques are single vertices `c_p`, so every part is dominated by some `c_p`
//! and is a cograph. After replacing each part by one clique of its cover, the
//! balanced-diamond branching rule strips edges between parts until every
//! component of their union is a module towards the `c_p`, hence a cograph.

use std::collections::BTreeMap;

use rand::{Rng, RngCore};

use super::cograph::{cograph_alpha, cograph_clique_cover, find_p4};
use super::{FaugInstance, FaugSolver, MisRecursion};
use crate::error::{Error, Result, Violation};
use crate::graph::{find_induced_within, HPattern, VertexSet};

#[derive(Debug, Clone)]
pub struct GemSolver {
    pub runs: usize,
}

impl FaugSolver for GemSolver {
    fn clique_size(&self, _k: usize) -> usize {
        1
    }

    fn solve(&self, inst: &FaugInstance, _rec: &mut dyn MisRecursion, rng: &mut dyn RngCore) -> Result<Option<VertexSet>> {
        solve_faug_gem(inst, self.runs, rng)
    }
}

/// One-sided: a returned set is always independent of size `>= k`.
pub fn solve_faug_gem(inst: &FaugInstance, runs: usize, rng: &mut dyn RngCore) -> Result<Option<VertexSet>> {
    let g = &inst.graph;
    let k = inst.k;
    if inst.cliques.size() != 1 {
        return Err(Error::InvalidInput("gem instances use single-vertex cliques".into()));
    }
    let mut covers = Vec::with_capacity(k);
    for (i, part) in inst.parts.iter().enumerate() {
        if let Some(p4) = find_p4(g, part) {
            let p = (0..k - 1).find(|&p| inst.bip[i][p]).ok_or_else(|| Error::InvalidInput("isolated part".into()))?;
            return Err(gem_violation(inst.cliques.cliques()[p][0], p4));
        }
        let alpha = cograph_alpha(g, part)?;
        if alpha.len() >= k {
            return Ok(Some(alpha));
        }
        covers.push(cograph_clique_cover(g, part)?);
    }
    let mut search = Branching { inst, rng, used_random: false };
    for run in 0..runs.max(1) {
        search.used_random = false;
        let mut tuple = vec![0usize; k];
        loop {
            let parts: Vec<VertexSet> = (0..k).map(|i| covers[i][tuple[i]].clone()).collect();
            if let Some(s) = search.branch(parts)? {
                debug_assert!(g.is_independent(&s) && s.len() >= k);
                return Ok(Some(s));
            }
            if !advance(&mut tuple, &covers) {
                break;
            }
        }
        if !search.used_random && run == 0 {
            break;
        }
    }
    Ok(None)
}

fn gem_violation(centre: usize, p4: Vec<usize>) -> Error {
    let mut emb = vec![centre];
    emb.extend(p4);
    Violation::new("gem", Some(emb)).into()
}

fn advance(tuple: &mut [usize], covers: &[Vec<VertexSet>]) -> bool {
    for (i, t) in tuple.iter_mut().enumerate() {
        *t += 1;
        if *t < covers[i].len() {
            return true;
        }
        *t = 0;
    }
    false
}

/// Number of part pairs with at least one edge between them.
pub fn part_adjacency_edges(inst: &FaugInstance, parts: &[VertexSet]) -> usize {
    let g = &inst.graph;
    let mut count = 0;
    for i in 0..parts.len() {
        let reach = g.neighborhood_of_set(&parts[i]);
        count += parts[i + 1..].iter().filter(|p| !p.is_disjoint(&reach)).count();
    }
    count
}

/// Two clique parts without a balanced diamond: vertices sharing a neighbour
/// across have equal neighbourhoods, so the edges form disjoint bicliques.
struct PairSplit {
    lonely_i: VertexSet,
    lonely_j: VertexSet,
    blocks: Vec<(VertexSet, VertexSet)>,
}

fn split_pair(inst: &FaugInstance, xi: &VertexSet, xj: &VertexSet) -> Option<PairSplit> {
    let g = &inst.graph;
    let mut groups: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    let mut lonely_i = VertexSet::new(g.n());
    for a in xi.iter() {
        let across = xj.intersection(g.neighbors(a));
        if across.is_empty() {
            lonely_i.insert(a);
        } else {
            groups.entry(across).or_insert_with(|| VertexSet::new(g.n())).insert(a);
        }
    }
    let keys: Vec<&VertexSet> = groups.keys().collect();
    for (x, a) in keys.iter().enumerate() {
        if keys[x + 1..].iter().any(|b| !a.is_disjoint(b)) {
            return None;
        }
    }
    let mut lonely_j = xj.clone();
    for key in groups.keys() {
        lonely_j.difference_with(key);
    }
    let blocks = groups.into_iter().map(|(b, a)| (a, b)).collect();
    Some(PairSplit { lonely_i, lonely_j, blocks })
}

struct Branching<'a, 'r> {
    inst: &'a FaugInstance,
    rng: &'r mut dyn RngCore,
    used_random: bool,
}

impl Branching<'_, '_> {
    fn branch(&mut self, parts: Vec<VertexSet>) -> Result<Option<VertexSet>> {
        let g = &self.inst.graph;
        let k = parts.len();
        let mut target = None;
        'outer: for i in 0..k {
            let reach = g.neighborhood_of_set(&parts[i]);
            for j in i + 1..k {
                if parts[j].is_disjoint(&reach) {
                    continue;
                }
                if let Some(split) = split_pair(self.inst, &parts[i], &parts[j]) {
                    target = Some((i, j, split));
                    break 'outer;
                }
            }
        }
        let Some((i, j, split)) = target else {
            return self.finish(&parts);
        };
        let before = part_adjacency_edges(self.inst, &parts);
        let mut options = Vec::with_capacity(3);
        options.push((split.lonely_i.clone(), parts[j].clone()));
        options.push((parts[i].clone(), split.lonely_j.clone()));
        let mut left = split.lonely_i;
        let mut right = split.lonely_j;
        for (a, b) in &split.blocks {
            if self.rng.gen_bool(0.5) {
                left.union_with(a);
            } else {
                right.union_with(b);
            }
        }
        self.used_random |= split.blocks.len() > 1;
        options.push((left, right));
        for (new_i, new_j) in options {
            if new_i.is_empty() || new_j.is_empty() {
                continue;
            }
            let mut next = parts.clone();
            next[i] = new_i;
            next[j] = new_j;
            assert!(part_adjacency_edges(self.inst, &next) < before, "branching must remove a part-adjacency edge");
            if let Some(s) = self.branch(next)? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// Components of the union are cographs; their optima add up.
    fn finish(&mut self, parts: &[VertexSet]) -> Result<Option<VertexSet>> {
        let g = &self.inst.graph;
        let mut union = VertexSet::new(g.n());
        for p in parts {
            union.union_with(p);
        }
        let mut total = VertexSet::new(g.n());
        for comp in g.components_within(&union) {
            match cograph_alpha(g, &comp) {
                Ok(s) => total.union_with(&s),
                Err(Error::Violation(_)) => {
                    let gem = find_induced_within(g, &self.inst.alive, &HPattern::gem())?;
                    return Err(match gem {
                        Some(emb) => Violation::new("gem", Some(emb)).into(),
                        None => Error::InvalidInput("final component is not a cograph".into()),
                    });
                }
                Err(e) => return Err(e),
            }
        }
        Ok((total.len() >= self.inst.k).then_some(total))
    }
}

#[cfg(test)]
mod tests {
    use super::super::RamseyCliques;
    use super::*;
    use crate::graph::{find_induced, AlphaSearch, Graph};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Centres `0..k-1`, then parts; part `i` dominated by the centres in `bip[i]`.
    fn instance(k: usize, part_sizes: &[usize], bip: &[Vec<bool>], edges: &[(usize, usize)]) -> FaugInstance {
        let base = k - 1;
        let n = base + part_sizes.iter().sum::<usize>();
        let mut g = Graph::new(n);
        let mut parts = Vec::new();
        let mut next = base;
        for (i, &s) in part_sizes.iter().enumerate() {
            let part: Vec<usize> = (next..next + s).collect();
            next += s;
            for p in 0..k - 1 {
                if bip[i][p] {
                    for &v in &part {
                        g.add_edge(p, v);
                    }
                }
            }
            parts.push(VertexSet::from_iter(n, part));
        }
        for &(u, v) in edges {
            g.add_edge(base + u, base + v);
        }
        let rc = RamseyCliques::new(&g, (0..k - 1).map(|p| vec![p]).collect()).unwrap();
        FaugInstance::new(g.clone(), g.vertices(), parts, rc).unwrap()
    }

    fn star_bip(k: usize) -> Vec<Vec<bool>> {
        (0..k).map(|i| (0..k - 1).map(|p| p == i || p + 1 == i).collect()).collect()
    }

    #[test]
    fn independent_singletons() {
        let inst = instance(3, &[1, 1, 1], &star_bip(3), &[]);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let s = solve_faug_gem(&inst, 1, &mut rng).unwrap().unwrap();
        assert_eq!(s.len(), 3);
    }

    fn random_gem_free(rng: &mut ChaCha8Rng, k: usize, size: usize, p: f64) -> Option<FaugInstance> {
        let total = k * size;
        let mut edges = Vec::new();
        for u in 0..total {
            for v in u + 1..total {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let inst = instance(k, &vec![size; k], &star_bip(k), &edges);
        find_induced(&inst.graph, &HPattern::gem()).unwrap().is_none().then_some(inst)
    }

    #[test]
    fn planted_success_rate() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let k = 3;
        let runs = 1 << (k * k + 1);
        let mut trials = 0;
        let mut hits = 0;
        while trials < 100 {
            let Some(inst) = random_gem_free(&mut rng, k, 3, 0.45) else { continue };
            if inst.rainbow_brute_force().is_none() {
                continue;
            }
            trials += 1;
            let mut run_rng = ChaCha8Rng::seed_from_u64(trials);
            if let Some(s) = solve_faug_gem(&inst, runs, &mut run_rng).unwrap() {
                assert!(inst.graph.is_independent(&s) && s.len() >= k);
                hits += 1;
            }
        }
        assert!(hits >= 50, "{hits}/100");
    }

    #[test]
    fn never_reports_when_alpha_is_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let mut checked = 0;
        for round in 0..3000 {
            let k = 2 + round % 2;
            let Some(inst) = random_gem_free(&mut rng, k, 2 + round % 3, [0.6, 0.75, 0.9][round % 3]) else { continue };
            let alpha = AlphaSearch::new(&inst.graph).within(inst.union_of_parts()).run().unwrap().alpha;
            if alpha >= k {
                continue;
            }
            checked += 1;
            for seed in 0..5 {
                let mut run_rng = ChaCha8Rng::seed_from_u64(seed);
                assert_eq!(solve_faug_gem(&inst, 8, &mut run_rng).unwrap(), None);
            }
        }
        assert!(checked >= 5, "{checked}");
    }

    #[test]
    fn p4_part_is_reported() {
        let inst = instance(2, &[4, 1], &[vec![true], vec![true]], &[(0, 1), (1, 2), (2, 3)]);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        match solve_faug_gem(&inst, 1, &mut rng) {
            Err(Error::Violation(v)) => {
                assert_eq!(&inst.graph.induced(&v.embedding.unwrap()), HPattern::gem().graph());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn diamond_free_pair_splits_into_bicliques() {
        let inst = instance(2, &[3, 3], &[vec![true], vec![true]], &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 3)]);
        let split = split_pair(&inst, &inst.parts[0], &inst.parts[1]).unwrap();
        assert_eq!(split.blocks.len(), 1);
        assert_eq!(split.lonely_i.len(), 1);
        assert_eq!(split.lonely_j.len(), 2);
    }
}
