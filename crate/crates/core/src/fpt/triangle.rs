//! Rainbow independent sets in `(K_{r+3} \ K_3)`-free structured instances.
//!
//! The part/clique incidence graph is a path `X_1 C X_2 C … C X_k`. After
//! guessing the endpoints `x_1`, `x_k`, only "long" edges between parts at
//! distance two or more obstruct a left-to-right dynamic programme; random
//! separation removes them.

use rand::{Rng, RngCore};

use super::{branch_on_small_part, FaugInstance, FaugSolver, MisRecursion};
use crate::error::{Error, Result, Violation};
use crate::graph::VertexSet;
use crate::ramsey::{ramsey_bound, ramsey_extract_within, OutcomeKind};

/// Solver for `H = K_{r+3} \ K_3`; cliques have size `r`.
#[derive(Debug, Clone)]
pub struct TriangleSolver {
    pub r: usize,
    pub separations: usize,
}

impl FaugSolver for TriangleSolver {
    fn clique_size(&self, _k: usize) -> usize {
        self.r
    }

    fn solve(&self, inst: &FaugInstance, rec: &mut dyn MisRecursion, rng: &mut dyn RngCore) -> Result<Option<VertexSet>> {
        solve_faug_clique_minus_triangle(inst, self.r, self.separations, rng, rec)
    }
}

fn pattern_name(r: usize) -> String {
    format!("K{}-K3", r + 3)
}

pub fn solve_faug_clique_minus_triangle(
    inst: &FaugInstance,
    r: usize,
    separations: usize,
    rng: &mut dyn RngCore,
    rec: &mut dyn MisRecursion,
) -> Result<Option<VertexSet>> {
    let g = &inst.graph;
    let k = inst.k;
    if k == 1 {
        return Ok(inst.parts[0].first().map(|v| VertexSet::from_iter(g.n(), [v])));
    }
    if let Some(out) = branch_on_small_part(inst, ramsey_bound(r, k), rec) {
        return out;
    }
    let cliques = inst.cliques.cliques();
    for (i, part) in inst.parts.iter().enumerate() {
        let adjacent: Vec<usize> = (0..k - 1).filter(|&p| inst.bip[i][p]).collect();
        if adjacent.len() >= 3 {
            let out = ramsey_extract_within(g, part, r, k, &mut 0).expect("part reaches the Ramsey bound");
            if out.kind == OutcomeKind::IndependentSet {
                return Ok(Some(out.members));
            }
            let mut emb: Vec<usize> = adjacent[..3].iter().map(|&p| cliques[p][0]).collect();
            emb.extend(out.members.iter());
            return Err(Violation::new(pattern_name(r), Some(emb)).into());
        }
    }
    for p in 0..k - 1 {
        let adjacent: Vec<usize> = (0..k).filter(|&i| inst.bip[i][p]).collect();
        if adjacent.len() >= 3 {
            let [a, b, c] = [adjacent[0], adjacent[1], adjacent[2]];
            let triple = inst.parts[a].iter().find_map(|x| {
                inst.parts[b].difference(g.neighbors(x)).iter().find_map(|y| {
                    let z = inst.parts[c].difference(g.neighbors(x)).difference(g.neighbors(y)).first()?;
                    Some([x, y, z])
                })
            });
            return match triple {
                None => Ok(None),
                Some(t) => {
                    let mut emb = t.to_vec();
                    emb.extend(&cliques[p]);
                    Err(Violation::new(pattern_name(r), Some(emb)).into())
                }
            };
        }
    }
    let order = path_order(inst)?;
    let parts: Vec<&VertexSet> = order.iter().map(|&(i, _)| &inst.parts[i]).collect();
    let first = parts[0];
    let last = parts[k - 1];
    for x1 in first.iter() {
        for xk in last.difference(g.neighbors(x1)).iter() {
            if k == 2 {
                return Ok(Some(VertexSet::from_iter(g.n(), [x1, xk])));
            }
            let blocked = g.neighbors(x1).union(g.neighbors(xk));
            let middle: Vec<VertexSet> = parts[1..k - 1].iter().map(|p| p.difference(&blocked)).collect();
            if middle.iter().any(VertexSet::is_empty) {
                continue;
            }
            check_long_degree(inst, &order[1..k - 1], &middle, r)?;
            if let Some(mut sol) = separate_and_join(inst, &middle, separations, rng) {
                sol.insert(x1);
                sol.insert(xk);
                debug_assert!(g.is_independent(&sol) && sol.len() == k);
                return Ok(Some(sol));
            }
        }
    }
    Ok(None)
}

/// Parts in path order, each with the clique following it.
fn path_order(inst: &FaugInstance) -> Result<Vec<(usize, Option<usize>)>> {
    let k = inst.k;
    let degree = |i: usize| inst.bip[i].iter().filter(|&&b| b).count();
    let start = (0..k)
        .find(|&i| degree(i) == 1)
        .ok_or_else(|| Error::InvalidInput("incidence graph is not a path".into()))?;
    let mut order = Vec::with_capacity(k);
    let mut used_clique = vec![false; k - 1];
    let mut cur = start;
    loop {
        let next_clique = (0..k - 1).find(|&p| inst.bip[cur][p] && !used_clique[p]);
        order.push((cur, next_clique));
        let Some(p) = next_clique else { break };
        used_clique[p] = true;
        cur = (0..k)
            .find(|&j| j != cur && inst.bip[j][p])
            .ok_or_else(|| Error::InvalidInput("incidence graph is not a path".into()))?;
    }
    if order.len() != k {
        return Err(Error::InvalidInput("incidence graph is not a path".into()));
    }
    Ok(order)
}

/// A vertex with `Ram(r,3)` long neighbours in one part yields the pattern.
fn check_long_degree(inst: &FaugInstance, order: &[(usize, Option<usize>)], middle: &[VertexSet], r: usize) -> Result<()> {
    let g = &inst.graph;
    let bound = ramsey_bound(r, 3);
    let cliques = inst.cliques.cliques();
    for (i, xi) in middle.iter().enumerate() {
        for (j, xj) in middle.iter().enumerate() {
            if i.abs_diff(j) < 2 {
                continue;
            }
            for x in xi.iter() {
                let nbrs = xj.intersection(g.neighbors(x));
                if (nbrs.len() as u64) < bound {
                    continue;
                }
                let out = ramsey_extract_within(g, &nbrs, r, 3, &mut 0).expect("bound reached");
                let around: Vec<usize> = (0..inst.k - 1).filter(|&p| inst.bip[order[j].0][p]).collect();
                let emb: Vec<usize> = match out.kind {
                    OutcomeKind::IndependentSet => out.members.iter().chain(cliques[around[0]].iter().copied()).collect(),
                    OutcomeKind::Clique => [x, cliques[around[0]][0], cliques[around[1]][0]]
                        .into_iter()
                        .chain(out.members.iter())
                        .collect(),
                };
                return Err(Violation::new(pattern_name(r), Some(emb)).into());
            }
        }
    }
    Ok(())
}

/// Random separation on long-edge endpoints followed by the path DP.
fn separate_and_join(inst: &FaugInstance, middle: &[VertexSet], separations: usize, rng: &mut dyn RngCore) -> Option<VertexSet> {
    let g = &inst.graph;
    let m = middle.len();
    let long_nbrs = |i: usize, v: usize, sets: &[VertexSet]| {
        (0..m).filter(|&j| i.abs_diff(j) >= 2).any(|j| !sets[j].is_disjoint(g.neighbors(v)))
    };
    let has_long = (0..m).any(|i| middle[i].iter().any(|v| long_nbrs(i, v, middle)));
    if !has_long {
        return path_dp(inst, middle);
    }
    for _ in 0..separations.max(1) {
        let mut kept: Vec<VertexSet> = middle.to_vec();
        for (i, set) in kept.iter_mut().enumerate() {
            for v in middle[i].iter() {
                if long_nbrs(i, v, middle) && rng.gen_bool(0.5) {
                    set.remove(v);
                }
            }
        }
        let cleaned: Vec<VertexSet> = (0..m)
            .map(|i| {
                let mut s = kept[i].clone();
                for v in kept[i].iter() {
                    if long_nbrs(i, v, &kept) {
                        s.remove(v);
                    }
                }
                s
            })
            .collect();
        if cleaned.iter().any(VertexSet::is_empty) {
            continue;
        }
        if let Some(sol) = path_dp(inst, &cleaned) {
            return Some(sol);
        }
    }
    None
}

/// One vertex per layer, consecutive choices non-adjacent.
fn path_dp(inst: &FaugInstance, layers: &[VertexSet]) -> Option<VertexSet> {
    let g = &inst.graph;
    let mut reach: Vec<Vec<(usize, usize)>> = Vec::with_capacity(layers.len());
    reach.push(layers[0].iter().map(|v| (v, usize::MAX)).collect());
    for layer in &layers[1..] {
        let prev = reach.last().unwrap();
        let row: Vec<(usize, usize)> = layer
            .iter()
            .filter_map(|x| prev.iter().position(|&(y, _)| !g.has_edge(x, y)).map(|at| (x, at)))
            .collect();
        if row.is_empty() {
            return None;
        }
        reach.push(row);
    }
    let mut sol = VertexSet::new(g.n());
    let mut at = 0;
    for row in reach.iter().rev() {
        let (v, parent) = row[at];
        sol.insert(v);
        at = parent;
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::super::testkit::add_cliques;
    use super::super::{ExactRecursion, RamseyCliques, Relation};
    use super::*;
    use crate::graph::{find_induced, Graph, HPattern};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Path instance: clique parts of the given sizes, clique `p` complete to parts `p` and `p+1`.
    fn path_instance(r: usize, sizes: &[usize], extra: &[(usize, usize, usize, usize)]) -> FaugInstance {
        let k = sizes.len();
        let base = r * (k - 1);
        let n = base + sizes.iter().sum::<usize>();
        let mut g = Graph::new(n);
        let cliques = add_cliques(&mut g, 0, k - 1, r, &|_, _| Relation::Empty);
        let mut parts = Vec::new();
        let mut next = base;
        for (i, &s) in sizes.iter().enumerate() {
            let part: Vec<usize> = (next..next + s).collect();
            next += s;
            for (a, &u) in part.iter().enumerate() {
                for &v in &part[a + 1..] {
                    g.add_edge(u, v);
                }
            }
            for p in [i.wrapping_sub(1), i] {
                if p < k - 1 {
                    for &c in &cliques[p] {
                        for &v in &part {
                            g.add_edge(c, v);
                        }
                    }
                }
            }
            parts.push(part);
        }
        for &(a, ai, b, bi) in extra {
            g.add_edge(parts[a][ai], parts[b][bi]);
        }
        let rc = RamseyCliques::new(&g, cliques).unwrap();
        let sets = parts.iter().map(|p| VertexSet::from_iter(n, p.iter().copied())).collect();
        FaugInstance::new(g.clone(), g.vertices(), sets, rc).unwrap()
    }

    fn run(inst: &FaugInstance, r: usize, seps: usize, seed: u64) -> Result<Option<VertexSet>> {
        let mut rec = ExactRecursion { graph: inst.graph.clone() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        solve_faug_clique_minus_triangle(inst, r, seps, &mut rng, &mut rec)
    }

    #[test]
    fn singleton_path() {
        let inst = path_instance(1, &[1, 1, 1, 1], &[]);
        let sol = run(&inst, 1, 1, 0).unwrap().unwrap();
        assert_eq!(sol.len(), 4);
        assert!(inst.graph.is_independent(&sol));
    }

    #[test]
    fn long_edge_covering_every_rainbow_set() {
        // Endpoint parts block all of X_2 and X_4 but one vertex each; those two are adjacent.
        let r = 2;
        let mut extra = vec![(1, 0, 3, 0)];
        for a in 0..5 {
            for b in 1..5 {
                extra.push((0, a, 1, b));
                extra.push((4, a, 3, b));
            }
        }
        let inst = path_instance(r, &[5; 5], &extra);
        assert!(find_induced(&inst.graph, &HPattern::clique_minus_clique(r + 3, 3)).unwrap().is_none());
        assert_eq!(inst.rainbow_brute_force(), None);
        assert_eq!(run(&inst, r, 256, 3).unwrap(), None);
    }

    /// Random partial matchings between parts, denser between path neighbours.
    fn random_extra(rng: &mut ChaCha8Rng, k: usize, size: usize, p: f64) -> Vec<(usize, usize, usize, usize)> {
        let mut extra = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                let q = if b == a + 1 { p } else { p / 3.0 };
                let shift = rng.gen_range(0..size);
                for ai in 0..size {
                    if rng.gen_bool(q) {
                        extra.push((a, ai, b, (ai + shift) % size));
                    }
                }
            }
        }
        extra
    }

    #[test]
    fn matches_rainbow_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let r = 2;
        let h = HPattern::clique_minus_clique(r + 3, 3);
        let (mut checked, mut yes) = (0, 0);
        for round in 0..150 {
            let p = [0.4, 0.7, 1.0][round % 3];
            let extra = random_extra(&mut rng, 5, 5, p);
            let inst = path_instance(r, &[5; 5], &extra);
            if find_induced(&inst.graph, &h).unwrap().is_some() {
                continue;
            }
            checked += 1;
            let expect = inst.rainbow_brute_force().is_some();
            yes += expect as usize;
            let got = run(&inst, r, 1024, round as u64).unwrap();
            if let Some(s) = &got {
                assert!(inst.graph.is_independent(s) && s.len() == 5);
            }
            assert_eq!(got.is_some(), expect);
        }
        assert!(checked > 10 && yes > 0, "{yes}/{checked}");
    }

    #[test]
    fn planted_separation_success_rate() {
        // X_2 and X_4 each keep four candidates, every one a long-edge endpoint.
        let mut extra = Vec::new();
        for a in 0..5 {
            extra.push((0, a, 1, 4));
            extra.push((4, a, 3, 4));
        }
        for (a, b) in [(0, 1), (1, 0), (2, 3), (3, 2)] {
            extra.push((1, a, 3, b));
        }
        let inst = path_instance(2, &[5; 5], &extra);
        assert!(find_induced(&inst.graph, &HPattern::clique_minus_clique(5, 3)).unwrap().is_none());
        assert!(inst.rainbow_brute_force().is_some());
        let hits = (0..100).filter(|&s| run(&inst, 2, 1 << 10, s).unwrap().is_some()).count();
        assert!(hits >= 50, "{hits}");
    }

    #[test]
    fn degree_three_part_is_reported() {
        let r = 1;
        let mut g = Graph::new(3 + 4);
        let cliques = add_cliques(&mut g, 0, 3, r, &|_, _| Relation::Empty);
        for c in 0..3 {
            g.add_edge(c, 3);
        }
        for (i, v) in [4, 5, 6].into_iter().enumerate() {
            g.add_edge(i, v);
        }
        let rc = RamseyCliques::new(&g, cliques).unwrap();
        let parts = [3, 4, 5, 6].map(|v| VertexSet::from_iter(g.n(), [v])).to_vec();
        let inst = FaugInstance::new(g.clone(), g.vertices(), parts, rc).unwrap();
        match run(&inst, r, 4, 0) {
            Err(Error::Violation(v)) => {
                let emb = v.embedding.unwrap();
                assert_eq!(&g.induced(&emb), HPattern::clique_minus_clique(4, 3).graph());
            }
            other => panic!("{other:?}"),
        }
    }
}
