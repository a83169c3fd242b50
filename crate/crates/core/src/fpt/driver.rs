//! Iterative expansion and Ramsey extraction.
//!
//! [`iterexp_driver`] grows disjoint independent sets of size `k-1`; when it
//! runs out it branches on their vertices, otherwise it hands them to an
//! [`ExpansionSolver`]. [`RamseyExpansion`] is the generic expansion: it types
//! pairs of seed sets, finds a monochromatic clique of seeds, reads off
//! Ramsey-extracted cliques and colour-codes the remaining vertices into
//! structured instances for a [`FaugSolver`].

use std::collections::HashMap;

use num_bigint::BigUint;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bipartite::BipartiteSolver;
use super::cluster::solve_cluster_free;
use super::gem::GemSolver;
use super::triangle::TriangleSolver;
use super::{bip_connected, FaugInstance, FaugSolver, MisRecursion, RamseyCliques};
use crate::error::{BudgetExceeded, Error, Result};
use crate::graph::{AlphaSearch, Graph, HPattern, VertexSet};
use crate::ramsey::ramsey_multicolor_bound;

/// How the thresholds of the extraction are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Seed count `Ram_ℓ(h)` and clique size `h = f·2^{k(k-1)}`; feasible for `k <= 2`.
    Faithful,
    /// Caller-supplied counts with complete fallbacks.
    #[default]
    Desk,
}

#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub mode: Mode,
    pub seed: u64,
    /// Initial number of seed sets `m`; defaults to `h`.
    pub seed_sets: Option<usize>,
    /// Size `h` of the monochromatic clique of seeds; never below `k`.
    pub clique_target: Option<usize>,
    /// Colour-coding repetitions; defaults to `⌈e^k · ln 100⌉`.
    pub colorings: Option<usize>,
    pub separations: usize,
    /// Runs of the gem branching; defaults to `min(2^{k²+1}, 4096)`.
    pub gem_runs: Option<usize>,
    /// Limit on recursive calls.
    pub budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            mode: Mode::Desk,
            seed: 0,
            seed_sets: None,
            clique_target: None,
            colorings: None,
            separations: 1 << 10,
            gem_runs: None,
            budget: 10_000_000,
        }
    }
}

impl SolverConfig {
    pub fn with_seed(seed: u64) -> Self {
        SolverConfig { seed, ..Self::default() }
    }

    /// `h`: in desk mode the smallest size that still guarantees `f` common
    /// indices for any planted solution, `(f-1)·2^{k(k-1)} + 1`.
    pub fn clique_target(&self, k: usize, f: usize) -> usize {
        let types = 1usize.checked_shl((k * (k - 1)) as u32).unwrap_or(usize::MAX);
        let h = match (self.mode, self.clique_target) {
            (_, Some(h)) => h,
            (Mode::Faithful, None) => f.saturating_mul(types),
            (Mode::Desk, None) => (f - 1).saturating_mul(types).saturating_add(1),
        };
        h.max(k).max(f)
    }

    pub fn seed_count(&self, k: usize, f: usize) -> Result<usize> {
        let h = self.clique_target(k, f);
        match (self.mode, self.seed_sets) {
            (_, Some(m)) => Ok(m),
            (Mode::Desk, None) => Ok(h),
            (Mode::Faithful, None) => {
                let colors = 1usize
                    .checked_shl(((k - 1) * (k - 1)) as u32)
                    .ok_or_else(|| Error::Unsupported(format!("faithful constants for k = {k}")))?;
                let bound: BigUint = ramsey_multicolor_bound(colors, h);
                usize::try_from(&bound)
                    .map_err(|_| Error::Unsupported(format!("faithful seed count for k = {k} exceeds the address space")))
            }
        }
    }

    pub fn colorings(&self, k: usize) -> usize {
        self.colorings.unwrap_or_else(|| ((k as f64).exp() * 100f64.ln()).ceil() as usize)
    }

    pub fn gem_runs(&self, k: usize) -> usize {
        self.gem_runs.unwrap_or_else(|| 1usize.checked_shl((k * k + 1) as u32).unwrap_or(usize::MAX).min(4096))
    }
}

/// Solves the expansion problem once `seeds` (disjoint independent sets of
/// size `k-1` inside `alive`) are available.
pub trait ExpansionSolver {
    /// Number of seed sets to collect before expanding.
    fn seed_count(&self, k: usize) -> Result<usize>;

    fn expand(
        &self,
        g: &Graph,
        alive: &VertexSet,
        k: usize,
        seeds: &[VertexSet],
        rec: &mut dyn MisRecursion,
        rng: &mut dyn RngCore,
    ) -> Result<Option<VertexSet>>;
}

/// Expansion by exhaustive search; for testing the driver in isolation.
pub struct OracleExpansion {
    pub seeds: usize,
}

impl ExpansionSolver for OracleExpansion {
    fn seed_count(&self, _k: usize) -> Result<usize> {
        Ok(self.seeds)
    }

    fn expand(
        &self,
        g: &Graph,
        alive: &VertexSet,
        k: usize,
        _seeds: &[VertexSet],
        _rec: &mut dyn MisRecursion,
        _rng: &mut dyn RngCore,
    ) -> Result<Option<VertexSet>> {
        Ok(AlphaSearch::new(g).within(alive.clone()).decide(k)?)
    }
}

/// An independent set of size `k` in `g`, or `None` when the search finds none.
pub fn iterexp_driver<E: ExpansionSolver>(g: &Graph, k: usize, expansion: &E, config: &SolverConfig) -> Result<Option<VertexSet>> {
    let mut driver = Driver {
        g,
        expansion,
        rng: ChaCha8Rng::seed_from_u64(config.seed),
        memo: HashMap::new(),
        calls: 0,
        budget: config.budget,
    };
    let out = driver.solve_mis(&g.vertices(), k)?;
    if let Some(s) = &out {
        assert!(s.len() >= k && g.is_independent(s), "solver returned an invalid set");
    }
    Ok(out)
}

struct Driver<'a, E> {
    g: &'a Graph,
    expansion: &'a E,
    rng: ChaCha8Rng,
    memo: HashMap<(VertexSet, usize), Option<VertexSet>>,
    calls: u64,
    budget: u64,
}

impl<E: ExpansionSolver> MisRecursion for Driver<'_, E> {
    fn solve_mis(&mut self, alive: &VertexSet, k: usize) -> Result<Option<VertexSet>> {
        if k == 0 {
            return Ok(Some(VertexSet::new(self.g.n())));
        }
        if alive.len() < k {
            return Ok(None);
        }
        if k == 1 {
            return Ok(alive.first().map(|v| VertexSet::from_iter(self.g.n(), [v])));
        }
        let key = (alive.clone(), k);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        self.calls += 1;
        if self.calls > self.budget {
            return Err(BudgetExceeded { limit: self.budget }.into());
        }
        let out = self.solve_fresh(alive, k)?;
        self.memo.insert(key, out.clone());
        Ok(out)
    }
}

impl<E: ExpansionSolver> Driver<'_, E> {
    fn solve_fresh(&mut self, alive: &VertexSet, k: usize) -> Result<Option<VertexSet>> {
        let wanted = self.expansion.seed_count(k)?;
        let mut seeds: Vec<VertexSet> = Vec::new();
        let mut used = VertexSet::new(self.g.n());
        while seeds.len() < wanted {
            match self.solve_mis(&alive.difference(&used), k - 1)? {
                Some(s) if s.len() >= k => return Ok(Some(s)),
                Some(s) => {
                    used.union_with(&s);
                    seeds.push(s);
                }
                None => return branch_on(self.g, self, alive, &used, k),
            }
        }
        let expansion = self.expansion;
        let mut rng = ChaCha8Rng::seed_from_u64(self.rng.gen());
        expansion.expand(self.g, alive, k, &seeds, self, &mut rng)
    }
}

/// Every size-`k` set meeting `touch`: branch on each of its vertices.
fn branch_on(g: &Graph, rec: &mut dyn MisRecursion, alive: &VertexSet, touch: &VertexSet, k: usize) -> Result<Option<VertexSet>> {
    for v in touch.iter() {
        let rest = alive.difference(&g.closed_neighbors(v));
        if let Some(mut s) = rec.solve_mis(&rest, k - 1)? {
            s.insert(v);
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Result of one pass of [`ramsey_extraction_stage`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extraction {
    /// An independent set of size `k`, from the early exit or a visited instance.
    Found(VertexSet),
    /// The seeds contain no monochromatic clique of the requested size.
    NoMonochromaticClique,
    /// Every emitted instance was visited without success.
    Exhausted,
}

/// Which edges run between seed `a` and seed `b`, as a `(k-1)²` bit pattern.
pub fn pair_type(g: &Graph, a: &[usize], b: &[usize]) -> Vec<bool> {
    a.iter().flat_map(|&u| b.iter().map(move |&v| g.has_edge(u, v))).collect()
}

/// Seeds `0..m` with every pair of the same type, of size `h`, if any.
fn monochromatic_clique(g: &Graph, rows: &[Vec<usize>], h: usize) -> Option<Vec<usize>> {
    let m = rows.len();
    if m < h {
        return None;
    }
    if h <= 1 {
        return Some((0..h).collect());
    }
    let mut by_type: HashMap<Vec<bool>, Vec<(usize, usize)>> = HashMap::new();
    for i in 0..m {
        for j in i + 1..m {
            by_type.entry(pair_type(g, &rows[i], &rows[j])).or_default().push((i, j));
        }
    }
    let mut colours: Vec<_> = by_type.into_iter().collect();
    colours.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then_with(|| a.0.cmp(&b.0)));
    let needed = h * (h - 1) / 2;
    for (_, pairs) in colours.into_iter().filter(|(_, p)| p.len() >= needed) {
        let mut aux = Graph::complete(m);
        for (i, j) in pairs {
            aux.remove_edge(i, j);
        }
        if let Ok(Some(set)) = AlphaSearch::new(&aux).decide(h) {
            return Some(set.to_vec());
        }
    }
    None
}

/// Next `f`-subset of `0..h` in lexicographic order.
fn next_subset(sub: &mut [usize], h: usize) -> bool {
    let f = sub.len();
    for i in (0..f).rev() {
        if sub[i] < h - f + i {
            sub[i] += 1;
            for j in i + 1..f {
                sub[j] = sub[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Extracts Ramsey cliques from the seeds and visits every colour-coded
/// structured instance, stopping at the first independent set returned.
#[allow(clippy::too_many_arguments)]
pub fn ramsey_extraction_stage(
    g: &Graph,
    alive: &VertexSet,
    k: usize,
    seeds: &[VertexSet],
    f: usize,
    h: usize,
    colorings: usize,
    rng: &mut dyn RngCore,
    visit: &mut dyn FnMut(FaugInstance) -> Result<Option<VertexSet>>,
) -> Result<Extraction> {
    let n = g.n();
    let h = h.max(k).max(f);
    let rows: Vec<Vec<usize>> = seeds.iter().map(VertexSet::to_vec).collect();
    if rows.iter().any(|r| r.len() != k - 1) {
        return Err(Error::InvalidInput(format!("seed sets must have size {}", k - 1)));
    }
    let Some(chosen) = monochromatic_clique(g, &rows, h) else {
        return Ok(Extraction::NoMonochromaticClique);
    };
    let columns: Vec<Vec<usize>> = (0..k - 1).map(|p| chosen.iter().map(|&j| rows[j][p]).collect()).collect();
    if let Some(indep) = columns.iter().find(|c| g.is_independent_slice(c)) {
        return Ok(Extraction::Found(VertexSet::from_iter(n, indep[..k].iter().copied())));
    }
    let mut seed_union = VertexSet::new(n);
    for s in seeds {
        seed_union.union_with(s);
    }
    let mut subset: Vec<usize> = (0..f).collect();
    loop {
        let picked: Vec<Vec<usize>> = columns.iter().map(|c| subset.iter().map(|&j| c[j]).collect()).collect();
        let cliques = RamseyCliques::new(g, picked)?;
        let sets: Vec<VertexSet> = (0..k - 1).map(|p| cliques.as_set(p, n)).collect();
        let mut signature: HashMap<usize, Vec<bool>> = HashMap::new();
        for v in alive.difference(&seed_union).iter() {
            let counts: Vec<usize> = sets.iter().map(|c| g.neighbors(v).intersection_len(c)).collect();
            if counts.iter().all(|&c| c == 0 || c == f) {
                signature.insert(v, counts.iter().map(|&c| c == f).collect());
            }
        }
        let mut cand: Vec<usize> = signature.keys().copied().collect();
        cand.sort_unstable();
        for _ in 0..colorings {
            let mut classes: Vec<std::collections::BTreeMap<Vec<bool>, VertexSet>> = vec![Default::default(); k];
            for &v in &cand {
                classes[rng.gen_range(0..k)]
                    .entry(signature[&v].clone())
                    .or_insert_with(|| VertexSet::new(n))
                    .insert(v);
            }
            if classes.iter().any(|c| c.is_empty()) {
                continue;
            }
            let groups: Vec<Vec<(&Vec<bool>, &VertexSet)>> = classes.iter().map(|c| c.iter().collect()).collect();
            let mut tuple = vec![0usize; k];
            loop {
                let bip: Vec<Vec<bool>> = (0..k).map(|i| groups[i][tuple[i]].0.clone()).collect();
                if bip_connected(&bip) {
                    let parts = (0..k).map(|i| groups[i][tuple[i]].1.clone()).collect();
                    let inst = FaugInstance::new(g.clone(), alive.clone(), parts, cliques.clone())?;
                    if let Some(s) = visit(inst)? {
                        return Ok(Extraction::Found(s));
                    }
                }
                let mut i = 0;
                while i < k {
                    tuple[i] += 1;
                    if tuple[i] < groups[i].len() {
                        break;
                    }
                    tuple[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
        if !next_subset(&mut subset, h) {
            return Ok(Extraction::Exhausted);
        }
    }
}

/// Iterative expansion through Ramsey extraction and a structured solver.
pub struct Pipeline {
    solver: Box<dyn FaugSolver>,
    config: SolverConfig,
}

impl Pipeline {
    pub fn new(solver: Box<dyn FaugSolver>, config: SolverConfig) -> Self {
        Pipeline { solver, config }
    }
}

impl ExpansionSolver for Pipeline {
    fn seed_count(&self, k: usize) -> Result<usize> {
        self.config.seed_count(k, self.solver.clique_size(k))
    }

    fn expand(
        &self,
        g: &Graph,
        alive: &VertexSet,
        k: usize,
        seeds: &[VertexSet],
        rec: &mut dyn MisRecursion,
        rng: &mut dyn RngCore,
    ) -> Result<Option<VertexSet>> {
        let mut seeds = seeds.to_vec();
        let mut used = VertexSet::new(g.n());
        for s in &seeds {
            used.union_with(s);
        }
        if let Some(s) = branch_on(g, rec, alive, &used, k)? {
            return Ok(Some(s));
        }
        let f = self.solver.clique_size(k);
        let h = self.config.clique_target(k, f);
        let colorings = self.config.colorings(k);
        loop {
            let outcome = {
                let mut solver_rng = ChaCha8Rng::seed_from_u64(rng.gen());
                let solver = &*self.solver;
                let mut visit = |inst: FaugInstance| -> Result<Option<VertexSet>> {
                    let out = solver.solve(&inst, &mut *rec, &mut solver_rng)?;
                    if let Some(s) = &out {
                        assert!(s.len() >= k && g.is_independent(s), "structured solver returned an invalid set");
                    }
                    Ok(out)
                };
                ramsey_extraction_stage(g, alive, k, &seeds, f, h, colorings, rng, &mut visit)?
            };
            match outcome {
                Extraction::Found(s) => return Ok(Some(s)),
                Extraction::Exhausted => return Ok(None),
                Extraction::NoMonochromaticClique => match rec.solve_mis(&alive.difference(&used), k - 1)? {
                    None => return Ok(None),
                    Some(s) if s.len() >= k => return Ok(Some(s)),
                    Some(s) => {
                        if let Some(found) = branch_on(g, rec, alive, &s, k)? {
                            return Ok(Some(found));
                        }
                        used.union_with(&s);
                        seeds.push(s);
                    }
                },
            }
        }
    }
}

/// Solver chosen for a forbidden pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// `qK_r`.
    Cluster { r: usize, q: usize },
    /// Induced subgraph of `K_{3r} \ K_{r,r}`.
    Bipartite { r: usize },
    /// `K_{r+3} \ K_3`.
    Triangle { r: usize },
    Gem,
}

/// Recognises the supported pattern families up to isomorphism.
pub fn route(h: &HPattern) -> Result<Route> {
    let hg = h.graph();
    let n = hg.n();
    let unsupported = || Error::Unsupported(format!("no FPT solver for {h}-free graphs"));
    if n == 0 {
        return Err(unsupported());
    }
    let comps = hg.connected_components();
    let r = comps[0].len();
    if comps.iter().all(|c| c.len() == r && hg.is_clique(c)) {
        return Ok(Route::Cluster { r, q: comps.len() });
    }
    if n == 5 && crate::graph::find_induced(hg, &HPattern::gem())?.is_some() {
        return Ok(Route::Gem);
    }
    let co = hg.complement();
    let big: Vec<VertexSet> = co.connected_components().into_iter().filter(|c| c.len() > 1).collect();
    let [part] = big.as_slice() else { return Err(unsupported()) };
    let (sub, _) = co.induced_set(part);
    if sub.n() == 3 && sub.edge_count() == 3 {
        return Ok(Route::Triangle { r: n - 3 });
    }
    let first = part.first().unwrap();
    let side: Vec<usize> = part.iter().filter(|&v| v == first || !co.has_edge(first, v)).collect();
    let other: Vec<usize> = part.iter().filter(|v| !side.contains(v)).collect();
    let complete_bipartite = co.is_independent_slice(&side)
        && co.is_independent_slice(&other)
        && side.iter().all(|&a| other.iter().all(|&b| co.has_edge(a, b)));
    if complete_bipartite {
        let (s1, s2) = (side.len(), other.len());
        return Ok(Route::Bipartite { r: s1.max(s2).max(n - s1 - s2) });
    }
    Err(unsupported())
}

/// An independent set of exactly `k` vertices in the `H`-free graph `g`, or `None`.
///
/// Cluster patterns are solved directly; the others run iterative expansion
/// with the matching structured solver. Randomized steps are seeded from
/// `config.seed` and only ever cause false negatives.
pub fn solve_hfree(g: &Graph, k: usize, h: &HPattern, config: &SolverConfig) -> Result<Option<VertexSet>> {
    let trim = |set: VertexSet| VertexSet::from_iter(g.n(), set.iter().take(k));
    let solver: Box<dyn FaugSolver> = match route(h)? {
        Route::Cluster { r, q } => return Ok(solve_cluster_free(g, k, r, q)?.found().map(trim)),
        Route::Bipartite { r } => Box::new(BipartiteSolver { r }),
        Route::Triangle { r } => Box::new(TriangleSolver {
            r,
            separations: config.separations,
        }),
        Route::Gem => Box::new(GemSolver {
            runs: config.gem_runs(k),
        }),
    };
    Ok(iterexp_driver(g, k, &Pipeline::new(solver, config.clone()), config)?.map(trim))
}
