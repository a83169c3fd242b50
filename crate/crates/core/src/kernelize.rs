//! Kernels for clique-minus-star-free graphs.
//!
//! * [`kernel_krfree`]: Ramsey kernel for `K_r`-free graphs.
//! * [`kernel_paw_like`]: `O(k^{r-1})` kernel for `(K_r \ K_{1,2})`-free graphs,
//!   and [`kernel_clique_minus_edge`] for `(K_r \ K_2)`-free graphs.
//! * [`turing_kernel_star`] / [`solve_via_turing`]: polynomial Turing kernel for
//!   `(K_r \ K_{1,r-2})`-free graphs, and [`solve_clique_plus_isolated`] for
//!   `(K_{r-1} ⊎ K_1)`-free graphs.

use crate::error::{Error, Result, Violation};
use crate::graph::{alpha_exact, find_induced, Graph, HPattern, VertexSet, PATTERN_CAP};
use crate::ramsey::{eh_extract, ramsey_bound, ramsey_extract, OutcomeKind, RamseyOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelVerdict {
    Reduced,
    /// Independent set of size `k` in the input graph.
    SolvedYes(VertexSet),
    SolvedNo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    /// Enough vertices for Ramsey to force an independent set of size `k`.
    RamseyYes,
    /// Fewer vertices than the Ramsey bound: the graph is its own kernel.
    RamseySmall,
    /// Parts beyond the first `q` of a complete multipartite piece were deleted.
    MultipartiteCut { clique: usize, parts: usize, q: usize, removed: usize },
    /// A vertex outside the multipartite piece meets more than `r-4` parts; `q` was widened.
    WidenedCut { touched: usize },
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub reduced: Graph,
    pub k_out: usize,
    /// `kept[i]` is the input vertex that became vertex `i` of `reduced`.
    pub kept: Vec<usize>,
    pub trace: Vec<Rule>,
    pub verdict: KernelVerdict,
}

impl KernelResult {
    fn unchanged(g: &Graph, k: usize, trace: Vec<Rule>, verdict: KernelVerdict) -> Self {
        KernelResult {
            reduced: g.clone(),
            k_out: k,
            kept: (0..g.n()).collect(),
            trace,
            verdict,
        }
    }

    /// Decides the kernel with the exact oracle.
    pub fn decide(&self, budget: u64) -> Result<bool> {
        Ok(match &self.verdict {
            KernelVerdict::SolvedYes(_) => true,
            KernelVerdict::SolvedNo => false,
            KernelVerdict::Reduced => alpha_exact(&self.reduced, budget)?.alpha >= self.k_out,
        })
    }
}

fn check_free(g: &Graph, h: &HPattern) -> Result<()> {
    if h.n() <= PATTERN_CAP {
        if let Some(e) = find_induced(g, h)? {
            return Err(Violation::new(h.to_string(), Some(e)).into());
        }
    }
    Ok(())
}

fn trivial(g: &Graph, k: usize) -> Option<KernelResult> {
    match (k, g.n()) {
        (0, _) => Some(KernelResult::unchanged(g, k, vec![Rule::Trivial], KernelVerdict::SolvedYes(VertexSet::new(g.n())))),
        (1, n) if n > 0 => Some(KernelResult::unchanged(
            g,
            k,
            vec![Rule::Trivial],
            KernelVerdict::SolvedYes(VertexSet::from_iter(n, [0])),
        )),
        (_, 0) => Some(KernelResult::unchanged(g, k, vec![Rule::Trivial], KernelVerdict::SolvedNo)),
        _ => None,
    }
}

/// Ramsey kernel for `K_r`-free graphs: at least `C(r+k-2, r-1)` vertices force an
/// independent set of size `k`, otherwise the input is already small.
pub fn kernel_krfree(g: &Graph, k: usize, r: usize) -> Result<KernelResult> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    check_free(g, &HPattern::complete(r))?;
    kernel_krfree_unchecked(g, k, r)
}

fn kernel_krfree_unchecked(g: &Graph, k: usize, r: usize) -> Result<KernelResult> {
    if let Some(done) = trivial(g, k) {
        return Ok(done);
    }
    if r == 1 {
        // K_1-free means empty, handled above.
        return Ok(KernelResult::unchanged(g, k, vec![Rule::Trivial], KernelVerdict::SolvedNo));
    }
    if (g.n() as u64) < ramsey_bound(r, k) {
        return Ok(KernelResult::unchanged(g, k, vec![Rule::RamseySmall], KernelVerdict::Reduced));
    }
    match ramsey_extract(g, r, k)? {
        RamseyOutcome {
            kind: OutcomeKind::IndependentSet,
            members,
        } => Ok(KernelResult::unchanged(g, k, vec![Rule::RamseyYes], KernelVerdict::SolvedYes(members))),
        RamseyOutcome { members, .. } => {
            Err(Violation::new(HPattern::complete(r).to_string(), Some(members.to_vec())).into())
        }
    }
}

/// Kernel with `O(k^{r-1})` vertices for `(K_r \ K_{1,2})`-free graphs, `r >= 4`.
///
/// Each round finds a large clique `C` (Erdős–Hajnal extraction, completed by a
/// Ramsey search), extends it to a maximal clique, checks that `C` together
/// with its `(|C|-1)`-neighbours is complete multipartite, and deletes all parts
/// but the `q = (k-1)(r-4)+1` largest. Rounds repeat until no clique of size
/// `max(q+1, r-1)` is found.
pub fn kernel_paw_like(g: &Graph, k: usize, r: usize) -> Result<KernelResult> {
    if r < 4 {
        return Err(Error::InvalidInput(format!("kernel_paw_like needs r >= 4, got {r}")));
    }
    let h = HPattern::clique_minus_star(r, 2);
    check_free(g, &h)?;
    if let Some(done) = trivial(g, k) {
        return Ok(done);
    }
    let mut alive = g.vertices();
    let mut trace = Vec::new();
    let q = (k - 1) * (r - 4) + 1;
    let want = (q + 1).max(r - 1);
    while !alive.is_empty() {
        let (sub, map) = g.induced_set(&alive);
        let clique = match large_clique(&sub, r, k, want)? {
            Found::Independent(is) => {
                let witness = VertexSet::from_iter(g.n(), is.iter().map(|v| map[v]).take(k));
                trace.push(Rule::RamseyYes);
                return Ok(KernelResult::unchanged(g, k, trace, KernelVerdict::SolvedYes(witness)));
            }
            Found::Clique(c) => c,
            Found::Nothing => break,
        };
        let cut = multipartite_cut(&sub, &clique, &h, k, r)?;
        if let Some(touched) = cut.widened {
            trace.push(Rule::WidenedCut { touched });
        }
        trace.push(Rule::MultipartiteCut {
            clique: clique.len(),
            parts: cut.parts,
            q: cut.q,
            removed: cut.removed.len(),
        });
        for v in cut.removed.iter() {
            alive.remove(map[v]);
        }
    }
    let kept = alive.to_vec();
    Ok(KernelResult {
        reduced: g.induced(&kept),
        k_out: k,
        kept,
        trace,
        verdict: KernelVerdict::Reduced,
    })
}

/// Kernel for `(K_r \ K_2)`-free graphs, which are `(K_{r+1} \ K_{1,2})`-free.
pub fn kernel_clique_minus_edge(g: &Graph, k: usize, r: usize) -> Result<KernelResult> {
    check_free(g, &HPattern::clique_minus_clique(r, 2))?;
    if r <= 2 {
        // 2K_1-free: a clique.
        let verdict = match (k, g.n()) {
            (0, _) => KernelVerdict::SolvedYes(VertexSet::new(g.n())),
            (1, n) if n > 0 => KernelVerdict::SolvedYes(VertexSet::from_iter(n, [0])),
            _ => KernelVerdict::SolvedNo,
        };
        return Ok(KernelResult::unchanged(g, k, vec![Rule::Trivial], verdict));
    }
    kernel_paw_like(g, k, r + 1)
}

enum Found {
    Clique(VertexSet),
    Independent(VertexSet),
    Nothing,
}

fn large_clique(g: &Graph, r: usize, k: usize, want: usize) -> Result<Found> {
    let eh = eh_extract(g, r, 2)?;
    if eh.kind == OutcomeKind::IndependentSet && eh.len() >= k {
        return Ok(Found::Independent(eh.members));
    }
    let mut best = if eh.kind == OutcomeKind::Clique { eh.members } else { VertexSet::new(g.n()) };
    if best.len() < want && (g.n() as u64) >= ramsey_bound(want, k) {
        let out = ramsey_extract(g, want, k)?;
        match out.kind {
            OutcomeKind::IndependentSet => return Ok(Found::Independent(out.members)),
            OutcomeKind::Clique => best = out.members,
        }
    }
    if best.len() < want {
        return Ok(Found::Nothing);
    }
    let all = g.vertices();
    g.maximalize_clique(&mut best, &all);
    Ok(Found::Clique(best))
}

struct Cut {
    removed: VertexSet,
    parts: usize,
    q: usize,
    widened: Option<usize>,
}

fn violation(h: &HPattern, e: Vec<usize>) -> Error {
    Violation::new(h.to_string(), Some(e)).into()
}

fn multipartite_cut(g: &Graph, clique: &VertexSet, h: &HPattern, k: usize, r: usize) -> Result<Cut> {
    let n = g.n();
    let cv = clique.to_vec();
    let size = cv.len();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<VertexSet> = cv
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            part_of[x] = i;
            VertexSet::from_iter(n, [x])
        })
        .collect();
    let mut outside = Vec::new();
    for u in g.neighborhood_of_set(clique).iter() {
        let nc = g.neighbors(u).intersection(clique);
        let missed = clique.difference(&nc);
        if nc.len() + 1 == size {
            let x = missed.first().unwrap();
            part_of[u] = part_of[x];
            parts[part_of[x]].insert(u);
        } else if nc.len() + 4 <= r {
            outside.push(u);
        } else {
            let mut e = vec![u];
            e.extend(missed.iter().take(2));
            e.extend(nc.iter().take(r - 3));
            return Err(violation(h, e));
        }
    }
    // Same part: independent; different parts: complete.
    let b: Vec<usize> = (0..n).filter(|&u| part_of[u] != usize::MAX && !clique.contains(u)).collect();
    for (i, &u) in b.iter().enumerate() {
        for &v in &b[i + 1..] {
            let (pu, pv) = (part_of[u], part_of[v]);
            let adjacent = g.has_edge(u, v);
            if pu == pv && adjacent {
                let x = cv[pu];
                let mut e = vec![x, u, v];
                e.extend(cv.iter().copied().filter(|&c| c != x).take(r - 3));
                return Err(violation(h, e));
            }
            if pu != pv && !adjacent {
                let (xu, xv) = (cv[pu], cv[pv]);
                let mut e = vec![u, v, xu];
                e.extend(cv.iter().copied().filter(|&c| c != xu && c != xv).take(r - 3));
                return Err(violation(h, e));
            }
        }
    }
    let mut piece = VertexSet::new(n);
    for p in &parts {
        piece.union_with(p);
    }
    let far = clique.union(&g.neighborhood_of_set(clique)).complement();
    outside.extend(far.iter());
    let touched = outside
        .iter()
        .map(|&u| {
            let mut seen = VertexSet::new(size);
            for w in g.neighbors(u).intersection(&piece).iter() {
                seen.insert(part_of[w]);
            }
            seen.len()
        })
        .max()
        .unwrap_or(0);
    let mut widened = None;
    let per_vertex = if touched > r - 4 {
        if let Some(e) = find_induced(g, h)? {
            return Err(violation(h, e));
        }
        widened = Some(touched);
        touched
    } else {
        r - 4
    };
    let q = (k - 1) * per_vertex + 1;
    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(parts[i].len()), parts[i].first().unwrap()));
    let mut removed = VertexSet::new(n);
    for &i in order.iter().skip(q) {
        removed.union_with(&parts[i]);
    }
    Ok(Cut {
        removed,
        parts: size,
        q,
        widened,
    })
}

/// One bounded-size instance produced by the Turing kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubInstance {
    pub graph: Graph,
    pub k: usize,
    /// Vertices of the component graph behind `graph`'s vertices.
    pub origin: Vec<usize>,
}

/// The instances for one connected component and one target size `i`:
/// the component has an independent set of size `i` iff `immediate` is set or
/// some subinstance is a yes-instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuringKernelOutput {
    pub target: usize,
    pub immediate: Option<VertexSet>,
    pub subinstances: Vec<SubInstance>,
}

impl TuringKernelOutput {
    fn yes(target: usize, witness: VertexSet) -> Self {
        TuringKernelOutput {
            target,
            immediate: Some(witness),
            subinstances: Vec::new(),
        }
    }

    /// Disjunction over the subinstances, each decided by the exact oracle.
    pub fn decide(&self, budget: u64) -> Result<bool> {
        if self.immediate.is_some() {
            return Ok(true);
        }
        for sub in &self.subinstances {
            if alpha_exact(&sub.graph, budget)?.alpha >= sub.k {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Turing kernel for `(K_r \ K_{1,r-2})`-free graphs.
#[derive(Debug, Clone)]
pub struct TuringKernel {
    r: usize,
    threshold: usize,
    budget: u64,
}

impl TuringKernel {
    /// Clique threshold `r²`: smaller cliques mean the component is already small.
    pub fn new(r: usize) -> Result<Self> {
        if r < 4 {
            return Err(Error::InvalidInput(format!("the Turing kernel needs r >= 4, got {r}")));
        }
        Ok(TuringKernel {
            r,
            threshold: r * r,
            budget: 10_000_000,
        })
    }

    /// Smallest clique threshold for which the structural claims hold.
    pub fn min_threshold(r: usize) -> usize {
        ((r - 1) * (r - 3) + 1).max(2 * r - 5)
    }

    /// Lowers or raises the clique threshold, never below [`Self::min_threshold`].
    pub fn threshold(mut self, t: usize) -> Self {
        self.threshold = t.max(Self::min_threshold(self.r));
        self
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    /// Instances for a connected graph `g` and target `i`.
    pub fn component(&self, g: &Graph, i: usize) -> Result<TuringKernelOutput> {
        let r = self.r;
        let n = g.n();
        let h = HPattern::clique_minus_star(r, r - 2);
        if i == 0 {
            return Ok(TuringKernelOutput::yes(0, VertexSet::new(n)));
        }
        if n == 0 {
            return Ok(TuringKernelOutput {
                target: i,
                immediate: None,
                subinstances: Vec::new(),
            });
        }
        if i == 1 {
            return Ok(TuringKernelOutput::yes(1, VertexSet::from_iter(n, [0])));
        }
        let eh = eh_extract(g, r, r - 2)?;
        if eh.kind == OutcomeKind::IndependentSet && eh.len() >= i {
            return Ok(TuringKernelOutput::yes(i, VertexSet::from_iter(n, eh.members.iter().take(i))));
        }
        let mut clique = if eh.kind == OutcomeKind::Clique { eh.members } else { VertexSet::new(n) };
        if clique.len() <= self.threshold {
            return Ok(TuringKernelOutput {
                target: i,
                immediate: None,
                subinstances: vec![SubInstance {
                    graph: g.clone(),
                    k: i,
                    origin: (0..n).collect(),
                }],
            });
        }
        g.maximalize_clique(&mut clique, &g.vertices());
        let b = g.neighborhood_of_set(&clique);
        for u in b.iter() {
            let nc = g.neighbors(u).intersection(&clique);
            if nc.len() + r - 3 < clique.len() {
                let mut e = vec![u];
                e.extend(clique.difference(&nc).iter().take(r - 2));
                e.push(nc.first().unwrap());
                return Err(violation(&h, e));
            }
        }
        let rest = clique.union(&b).complement();
        if let Some(v) = rest.iter().find(|&v| !g.neighbors(v).is_disjoint(&b)) {
            let u = g.neighbors(v).intersection(&b).first().unwrap();
            let nc = g.neighbors(u).intersection(&clique);
            let mut e = vec![v];
            e.extend(nc.iter().take(r - 2));
            e.push(u);
            return Err(violation(&h, e));
        }
        if !rest.is_empty() {
            return Err(Error::InvalidInput("Turing kernel needs a connected component".into()));
        }
        let mut subinstances = Vec::new();
        let mut push = |set: VertexSet, k: usize| -> Result<Option<VertexSet>> {
            let origin = set.to_vec();
            let sub = g.induced(&origin);
            let kr = kernel_krfree_unchecked(&sub, k, r - 2)?;
            match kr.verdict {
                KernelVerdict::SolvedYes(w) => Ok(Some(VertexSet::from_iter(n, w.iter().map(|v| origin[v])))),
                KernelVerdict::SolvedNo => Ok(None),
                KernelVerdict::Reduced => {
                    subinstances.push(SubInstance {
                        graph: sub,
                        k,
                        origin,
                    });
                    Ok(None)
                }
            }
        };
        for u in b.iter() {
            let avoid_u = b.difference(&g.closed_neighbors(u));
            if let Some(mut w) = push(avoid_u.clone(), i - 1)? {
                w.insert(u);
                return Ok(TuringKernelOutput::yes(i, w));
            }
            for v in clique.difference(g.neighbors(u)).iter() {
                let set = avoid_u.difference(g.neighbors(v));
                if let Some(mut w) = push(set, i - 2)? {
                    w.insert(u);
                    w.insert(v);
                    return Ok(TuringKernelOutput::yes(i, w));
                }
            }
        }
        Ok(TuringKernelOutput {
            target: i,
            immediate: None,
            subinstances,
        })
    }

    /// Maximum independent set size of a connected graph, capped at `k`, via the
    /// kernel and the exact oracle on each subinstance.
    pub fn component_alpha(&self, g: &Graph, k: usize) -> Result<usize> {
        let mut best = 0;
        for i in 1..=k {
            if !self.component(g, i)?.decide(self.budget)? {
                break;
            }
            best = i;
        }
        Ok(best)
    }

    /// Decides `alpha(g) >= k` by summing per-component maxima.
    pub fn solve(&self, g: &Graph, k: usize) -> Result<bool> {
        check_free(g, &HPattern::clique_minus_star(self.r, self.r - 2))?;
        let mut total = 0;
        for comp in g.connected_components() {
            if total >= k {
                break;
            }
            let (sub, _) = g.induced_set(&comp);
            total += self.component_alpha(&sub, k - total)?;
        }
        Ok(total >= k)
    }
}

/// Instances for every component of `g` and every target `1..=k`.
pub fn turing_kernel_star(g: &Graph, k: usize, r: usize) -> Result<Vec<TuringKernelOutput>> {
    let tk = TuringKernel::new(r)?;
    check_free(g, &HPattern::clique_minus_star(r, r - 2))?;
    let mut out = Vec::new();
    for comp in g.connected_components() {
        let (sub, _) = g.induced_set(&comp);
        for i in 1..=k {
            out.push(tk.component(&sub, i)?);
        }
    }
    Ok(out)
}

/// Decides `alpha(g) >= k` for `(K_r \ K_{1,r-2})`-free `g` through the Turing kernel.
pub fn solve_via_turing(g: &Graph, k: usize, r: usize) -> Result<bool> {
    TuringKernel::new(r)?.solve(g, k)
}

/// `(K_{r-1} ⊎ K_1)`-free graphs, i.e. `(K_r \ K_{1,r-1})`-free, are
/// `(K_{r+1} \ K_{1,r-1})`-free, so the Turing kernel applies with `r+1`.
pub fn solve_clique_plus_isolated(g: &Graph, k: usize, r: usize) -> Result<bool> {
    check_free(g, &HPattern::clique_minus_star(r, r - 1))?;
    solve_via_turing(g, k, r + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::grow_hfree;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn multipartite(parts: &[usize]) -> Graph {
        parts.iter().fold(Graph::new(0), |acc, &p| acc.join(&Graph::new(p)))
    }

    #[test]
    fn krfree_examples() {
        let res = kernel_krfree(&Graph::new(6), 3, 3).unwrap();
        assert!(matches!(res.verdict, KernelVerdict::SolvedYes(ref w) if w.len() == 3));
        let res = kernel_krfree(&Graph::cycle(5), 3, 3).unwrap();
        assert_eq!(res.verdict, KernelVerdict::Reduced);
        assert_eq!(res.reduced.n(), 5);
        assert!(!res.decide(1000).unwrap());
        let c5 = Graph::cycle(5);
        let res = kernel_krfree(&c5.disjoint_union(&c5), 4, 3).unwrap();
        assert!(matches!(res.verdict, KernelVerdict::SolvedYes(ref w) if w.len() == 4));
        assert!(matches!(kernel_krfree(&Graph::complete(3), 2, 3), Err(Error::Violation(_))));
    }

    #[test]
    fn multipartite_parts_are_cut() {
        let (k, r) = (3, 5);
        let g = multipartite(&vec![2; k * (r - 4) + 5]);
        let res = kernel_paw_like(&g, k, r).unwrap();
        let q = (k - 1) * (r - 4) + 1;
        assert_eq!(res.reduced.n(), 2 * q);
        assert_eq!(alpha_exact(&res.reduced, 1000).unwrap().alpha, 2);
        assert_eq!(alpha_exact(&g, 1000).unwrap().alpha, 2);
        assert!(res.trace.iter().any(|t| matches!(t, Rule::MultipartiteCut { .. })));
    }

    #[test]
    fn small_inputs_unchanged() {
        let g = Graph::cycle(5);
        let res = kernel_paw_like(&g, 3, 4).unwrap();
        assert_eq!(res.reduced, g);
        assert!(!res.decide(100).unwrap());
    }

    #[test]
    fn paw_kernel_preserves_answers() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let h = HPattern::paw();
        for round in 0..40 {
            let g = grow_hfree(&mut rng, 12 + round % 20, [0.3, 0.6, 0.85][round % 3], &h, 20);
            let alpha = alpha_exact(&g, 10_000_000).unwrap().alpha;
            for k in 1..=5 {
                let res = kernel_paw_like(&g, k, 4).unwrap();
                assert_eq!(res.decide(10_000_000).unwrap(), alpha >= k, "round {round} k {k}");
                assert_eq!(g.induced(&res.kept), res.reduced);
                if let KernelVerdict::SolvedYes(w) = &res.verdict {
                    assert!(g.is_independent(w) && w.len() >= k);
                }
            }
        }
    }

    #[test]
    fn clique_minus_edge_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let h = HPattern::diamond();
        for round in 0..20 {
            let g = grow_hfree(&mut rng, 20, [0.3, 0.7][round % 2], &h, 20);
            let alpha = alpha_exact(&g, 10_000_000).unwrap().alpha;
            for k in 1..=4 {
                let res = kernel_clique_minus_edge(&g, k, 4).unwrap();
                assert_eq!(res.decide(10_000_000).unwrap(), alpha >= k);
            }
        }
    }

    #[test]
    fn turing_on_clique_plus_point() {
        let g = Graph::complete(50).disjoint_union(&Graph::new(1));
        assert!(solve_via_turing(&g, 2, 5).unwrap());
        assert!(!solve_via_turing(&g, 3, 5).unwrap());
    }

    #[test]
    fn turing_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let h = HPattern::clique_minus_star(5, 3);
        for round in 0..25 {
            let g = grow_hfree(&mut rng, 15 + round % 20, [0.5, 0.8, 0.95][round % 3], &h, 20);
            let alpha = alpha_exact(&g, 10_000_000).unwrap().alpha;
            let tk = TuringKernel::new(5).unwrap().threshold(0);
            for k in 1..=5 {
                assert_eq!(tk.solve(&g, k).unwrap(), alpha >= k, "round {round} k {k}");
                assert_eq!(solve_via_turing(&g, k, 5).unwrap(), alpha >= k);
            }
        }
    }

    #[test]
    fn turing_subinstances_are_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let h = HPattern::clique_minus_star(5, 3);
        let g = grow_hfree(&mut rng, 40, 0.9, &h, 30);
        for out in turing_kernel_star(&g, 4, 5).unwrap() {
            for sub in &out.subinstances {
                if sub.graph.n() < g.n() {
                    assert!((sub.graph.n() as u64) < ramsey_bound(3, sub.k.max(1)));
                }
            }
        }
    }

    #[test]
    fn clique_plus_isolated_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let h = HPattern::parse("K3|K1").unwrap();
        for round in 0..20 {
            let g = grow_hfree(&mut rng, 18, [0.5, 0.8][round % 2], &h, 20);
            let alpha = alpha_exact(&g, 10_000_000).unwrap().alpha;
            for k in 1..=4 {
                assert_eq!(solve_clique_plus_isolated(&g, k, 4).unwrap(), alpha >= k);
            }
        }
    }
}
