//! W[1]-hardness instances from Grid Tiling, and the join composition used
//! for kernel lower bounds.
//!
//! Each tile becomes a gadget of `8(p+1)` main cliques of `n_t` vertices: a
//! directed cycle of `4p+4` cycle cliques and four paths of `p+1` cliques
//! hanging off the branching cliques `c_1`, `c_{p+2}`, `c_{2p+3}`, `c_{3p+4}`.
//! Vertex `a` of every main clique stands for the tile element `s_a`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result, Violation};
use crate::graph::{find_induced, Graph, HPattern, VertexSet};

/// A tile element, both coordinates in `1..=m`.
pub type Pair = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridTiling {
    k: usize,
    m: usize,
    tiles: Vec<Vec<Vec<Pair>>>,
}

/// One chosen index per tile, `choice[i][j]` indexing into `S_{i,j}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GtSolution {
    pub choice: Vec<Vec<usize>>,
}

impl GridTiling {
    /// Validates that all tiles are non-empty, equally sized, duplicate-free and inside `[m]×[m]`.
    pub fn new(k: usize, m: usize, tiles: Vec<Vec<Vec<Pair>>>) -> Result<Self> {
        if k == 0 || tiles.len() != k || tiles.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidInput(format!("expected a {k}×{k} array of tiles")));
        }
        let n_t = tiles[0][0].len();
        for tile in tiles.iter().flatten() {
            if tile.is_empty() || tile.len() != n_t {
                return Err(Error::InvalidInput("tiles must be non-empty and of equal size".into()));
            }
            if let Some(&(a, b)) = tile.iter().find(|&&(a, b)| a == 0 || b == 0 || a > m || b > m) {
                return Err(Error::InvalidInput(format!("pair ({a},{b}) outside [{m}]×[{m}]")));
            }
            let mut sorted = tile.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != tile.len() {
                return Err(Error::InvalidInput("tile repeats a pair".into()));
            }
        }
        Ok(GridTiling { k, m, tiles })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n_t(&self) -> usize {
        self.tiles[0][0].len()
    }

    pub fn tile(&self, i: usize, j: usize) -> &[Pair] {
        &self.tiles[i][j]
    }

    /// Row agreement with the right neighbour and column agreement with the one below, toroidally.
    pub fn is_feasible(&self, sol: &GtSolution) -> bool {
        let k = self.k;
        if sol.choice.len() != k || sol.choice.iter().any(|row| row.len() != k) {
            return false;
        }
        if sol.choice.iter().flatten().any(|&x| x >= self.n_t()) {
            return false;
        }
        let at = |i: usize, j: usize| self.tiles[i][j][sol.choice[i][j]];
        (0..k).all(|i| {
            (0..k).all(|j| at(i, j).0 == at(i, (j + 1) % k).0 && at(i, j).1 == at((i + 1) % k, j).1)
        })
    }

    /// Tries all `n_t^{k²}` assignments.
    pub fn brute_force(&self) -> Option<GtSolution> {
        let (k, n_t) = (self.k, self.n_t());
        let mut flat = vec![0usize; k * k];
        loop {
            let sol = GtSolution {
                choice: flat.chunks(k).map(<[usize]>::to_vec).collect(),
            };
            if self.is_feasible(&sol) {
                return Some(sol);
            }
            let mut pos = 0;
            loop {
                if pos == flat.len() {
                    return None;
                }
                flat[pos] += 1;
                if flat[pos] < n_t {
                    break;
                }
                flat[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// Random Grid Tiling instance with `n_t` distinct pairs per tile.
///
/// With `planted`, tile `(i,j)` contains `(a_i, b_j)` for random row values
/// `a_i` and column values `b_j`, and the returned solution selects it.
pub fn gen_grid_tiling(k: usize, m: usize, n_t: usize, planted: bool, seed: u64) -> Result<(GridTiling, Option<GtSolution>)> {
    if k == 0 || m == 0 || n_t == 0 || n_t > m * m {
        return Err(Error::InvalidInput(format!("need k, m >= 1 and 1 <= n_t <= m² (k={k}, m={m}, n_t={n_t})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<Pair> = (1..=m).flat_map(|a| (1..=m).map(move |b| (a, b))).collect();
    let rows: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=m)).collect();
    let cols: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=m)).collect();
    let mut tiles = vec![vec![Vec::new(); k]; k];
    let mut choice = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut tile: Vec<Pair> = if planted {
                let target = (rows[i], cols[j]);
                let others: Vec<Pair> = all.iter().copied().filter(|&s| s != target).collect();
                let mut picked: Vec<Pair> = others.choose_multiple(&mut rng, n_t - 1).copied().collect();
                picked.push(target);
                picked
            } else {
                all.choose_multiple(&mut rng, n_t).copied().collect()
            };
            tile.shuffle(&mut rng);
            if planted {
                choice[i][j] = tile.iter().position(|&s| s == (rows[i], cols[j])).expect("planted pair");
            }
            tiles[i][j] = tile;
        }
    }
    let gt = GridTiling::new(k, m, tiles)?;
    let sol = planted.then_some(GtSolution { choice });
    debug_assert!(sol.as_ref().is_none_or(|s| gt.is_feasible(s)));
    Ok((gt, sol))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Half graphs on the cycle, compatibility graphs on the paths.
    First,
    /// Anti-matchings everywhere except the link between two gadgets.
    Second,
    /// The second variant plus an anti-matching between the two cycle neighbours of each branching clique.
    Third,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::First => "first",
            Variant::Second => "second",
            Variant::Third => "third",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "first" | "1" => Ok(Variant::First),
            "second" | "2" => Ok(Variant::Second),
            "third" | "3" => Ok(Variant::Third),
            _ => Err(Error::InvalidInput(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arm {
    Top,
    Right,
    Bottom,
    Left,
}

/// Position of a main clique inside its gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Cycle clique `c_t`, `t` in `1..=4p+4`.
    Cycle(usize),
    /// Clique `step` (0-based, in arc direction) of the path on `arm`.
    Path(Arm, usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Cycle(t) => write!(f, "c{t}"),
            Role::Path(arm, s) => {
                let name = match arm {
                    Arm::Top => "top",
                    Arm::Right => "right",
                    Arm::Bottom => "bottom",
                    Arm::Left => "left",
                };
                write!(f, "{name}{s}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainClique {
    pub gadget: (usize, usize),
    pub role: Role,
    /// `vertices[a]` represents tile element `a`.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ConstructionOutput {
    pub graph: Graph,
    pub k_prime: usize,
    pub variant: Variant,
    pub p: usize,
    pub k: usize,
    pub n_t: usize,
    pub main_cliques: Vec<MainClique>,
}

impl ConstructionOutput {
    pub fn cliques_per_gadget(&self) -> usize {
        8 * (self.p + 1)
    }

    pub fn clique(&self, gadget: (usize, usize), role: Role) -> &MainClique {
        let base = (gadget.0 * self.k + gadget.1) * self.cliques_per_gadget();
        &self.main_cliques[base + role_index(role, self.p)]
    }

    pub fn cycle_cliques(&self, gadget: (usize, usize)) -> impl Iterator<Item = &MainClique> + '_ {
        (1..=4 * self.p + 4).map(move |t| self.clique(gadget, Role::Cycle(t)))
    }

    /// Main cliques as vertex sets, a clique cover for exact search.
    pub fn cover(&self) -> Vec<VertexSet> {
        let n = self.graph.n();
        self.main_cliques
            .iter()
            .map(|c| VertexSet::from_iter(n, c.vertices.iter().copied()))
            .collect()
    }
}

fn role_index(role: Role, p: usize) -> usize {
    let cyc = 4 * p + 4;
    match role {
        Role::Cycle(t) => t - 1,
        Role::Path(arm, s) => {
            let a = match arm {
                Arm::Top => 0,
                Arm::Right => 1,
                Arm::Bottom => 2,
                Arm::Left => 3,
            };
            cyc + a * (p + 1) + s
        }
    }
}

fn roles(p: usize) -> Vec<Role> {
    let mut out: Vec<Role> = (1..=4 * p + 4).map(Role::Cycle).collect();
    for arm in [Arm::Top, Arm::Right, Arm::Bottom, Arm::Left] {
        out.extend((0..=p).map(|s| Role::Path(arm, s)));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ArcKind {
    Half,
    Row,
    Column,
}

/// Arcs of one gadget as (tail, head, kind).
fn gadget_arcs(p: usize) -> Vec<(Role, Role, ArcKind)> {
    let cyc = 4 * p + 4;
    let mut arcs: Vec<(Role, Role, ArcKind)> = (1..=cyc)
        .map(|t| (Role::Cycle(t), Role::Cycle(t % cyc + 1), ArcKind::Half))
        .collect();
    for s in 0..p {
        arcs.push((Role::Path(Arm::Top, s), Role::Path(Arm::Top, s + 1), ArcKind::Column));
        arcs.push((Role::Path(Arm::Right, s), Role::Path(Arm::Right, s + 1), ArcKind::Row));
        arcs.push((Role::Path(Arm::Bottom, s), Role::Path(Arm::Bottom, s + 1), ArcKind::Column));
        arcs.push((Role::Path(Arm::Left, s), Role::Path(Arm::Left, s + 1), ArcKind::Row));
    }
    arcs.push((Role::Path(Arm::Top, p), Role::Cycle(1), ArcKind::Column));
    arcs.push((Role::Cycle(p + 2), Role::Path(Arm::Right, 0), ArcKind::Row));
    arcs.push((Role::Cycle(2 * p + 3), Role::Path(Arm::Bottom, 0), ArcKind::Column));
    arcs.push((Role::Path(Arm::Left, p), Role::Cycle(3 * p + 4), ArcKind::Row));
    arcs
}

fn branching(p: usize) -> [usize; 4] {
    [1, p + 2, 2 * p + 3, 3 * p + 4]
}

/// `s` is row-compatible with `t` when `s.0 >= t.0`, column-compatible when `s.1 >= t.1`.
fn compatible(kind: ArcKind, s: Pair, t: Pair) -> bool {
    match kind {
        ArcKind::Row => s.0 >= t.0,
        ArcKind::Column => s.1 >= t.1,
        ArcKind::Half => unreachable!("half graphs do not compare tile elements"),
    }
}

struct Builder<'a> {
    gt: &'a GridTiling,
    p: usize,
    graph: Graph,
    cliques: Vec<MainClique>,
}

impl Builder<'_> {
    fn clique(&self, gadget: (usize, usize), role: Role) -> &MainClique {
        let base = (gadget.0 * self.gt.k + gadget.1) * 8 * (self.p + 1);
        &self.cliques[base + role_index(role, self.p)]
    }

    /// Adds an edge between vertex `a` of `from` and vertex `b` of `to` whenever `edge(a, b)`.
    fn connect(&mut self, from: ((usize, usize), Role), to: ((usize, usize), Role), edge: impl Fn(usize, usize) -> bool) {
        let xs = self.clique(from.0, from.1).vertices.clone();
        let ys = self.clique(to.0, to.1).vertices.clone();
        for (a, &u) in xs.iter().enumerate() {
            for (b, &v) in ys.iter().enumerate() {
                if edge(a, b) {
                    self.graph.add_edge(u, v);
                }
            }
        }
    }
}

/// Builds the hardness construction for `gt`, with paths of `p+1` cliques.
pub fn build_construction(gt: &GridTiling, variant: Variant, p: usize) -> Result<ConstructionOutput> {
    construct(gt, variant, p, true)
}

/// The gadget of a single tile, with no links between gadgets.
pub fn tile_gadget(tile: &[Pair], m: usize, variant: Variant, p: usize) -> Result<ConstructionOutput> {
    let gt = GridTiling::new(1, m, vec![vec![tile.to_vec()]])?;
    let mut out = construct(&gt, variant, p, false)?;
    out.k_prime = 8 * (p + 1);
    Ok(out)
}

fn construct(gt: &GridTiling, variant: Variant, p: usize, link: bool) -> Result<ConstructionOutput> {
    if p == 0 {
        return Err(Error::InvalidInput("p must be at least 1".into()));
    }
    let (k, n_t) = (gt.k, gt.n_t());
    let per = 8 * (p + 1);
    let n = k * k * per * n_t;
    let mut graph = Graph::new(n);
    let mut cliques = Vec::with_capacity(k * k * per);
    let mut labels = Vec::with_capacity(n);
    for i in 0..k {
        for j in 0..k {
            for role in roles(p) {
                let start = cliques.len() * n_t;
                let vertices: Vec<usize> = (start..start + n_t).collect();
                for (a, &u) in vertices.iter().enumerate() {
                    labels.push(format!("g{i},{j}:{role}:{}", a + 1));
                    for &v in &vertices[a + 1..] {
                        graph.add_edge(u, v);
                    }
                }
                cliques.push(MainClique { gadget: (i, j), role, vertices });
            }
        }
    }
    graph.set_labels(labels);
    let mut b = Builder { gt, p, graph, cliques };
    let anti = |a: usize, bb: usize| a != bb;
    for i in 0..k {
        for j in 0..k {
            let tile = gt.tile(i, j);
            for (tail, head, kind) in gadget_arcs(p) {
                let from = ((i, j), tail);
                let to = ((i, j), head);
                match (variant, kind) {
                    (Variant::First, ArcKind::Half) => b.connect(from, to, |a, bb| a > bb),
                    (Variant::First, _) => b.connect(from, to, |a, bb| !compatible(kind, tile[a], tile[bb])),
                    _ => b.connect(from, to, anti),
                }
            }
            if variant == Variant::Third {
                let cyc = 4 * p + 4;
                for t in branching(p) {
                    let before = (t + cyc - 2) % cyc + 1;
                    let after = t % cyc + 1;
                    b.connect(((i, j), Role::Cycle(before)), ((i, j), Role::Cycle(after)), anti);
                }
            }
            if link {
                let right = (i, (j + 1) % k);
                let below = ((i + 1) % k, j);
                let (row_next, col_next) = (gt.tile(right.0, right.1), gt.tile(below.0, below.1));
                b.connect(((i, j), Role::Path(Arm::Right, p)), (right, Role::Path(Arm::Left, 0)), |a, bb| {
                    !compatible(ArcKind::Row, tile[a], row_next[bb])
                });
                b.connect(((i, j), Role::Path(Arm::Bottom, p)), (below, Role::Path(Arm::Top, 0)), |a, bb| {
                    !compatible(ArcKind::Column, tile[a], col_next[bb])
                });
            }
        }
    }
    let out = ConstructionOutput {
        graph: b.graph,
        k_prime: per * k * k,
        variant,
        p,
        k,
        n_t,
        main_cliques: b.cliques,
    };
    debug_assert!(out.cover().iter().all(|c| out.graph.is_clique(c)));
    Ok(out)
}

/// Picks vertex `s*_{i,j}` in every main clique of gadget `(i,j)`.
pub fn lift_solution(sol: &GtSolution, out: &ConstructionOutput) -> Result<VertexSet> {
    let k = out.k;
    if sol.choice.len() != k || sol.choice.iter().any(|r| r.len() != k || r.iter().any(|&x| x >= out.n_t)) {
        return Err(Error::InvalidInput("solution does not match the construction".into()));
    }
    let set = VertexSet::from_iter(
        out.graph.n(),
        out.main_cliques.iter().map(|c| c.vertices[sol.choice[c.gadget.0][c.gadget.1]]),
    );
    if !out.graph.is_independent(&set) {
        return Err(Error::InvalidInput("solution is not feasible".into()));
    }
    Ok(set)
}

/// Reads one index per gadget from its first cycle clique.
pub fn project_solution(is: &VertexSet, out: &ConstructionOutput) -> Result<GtSolution> {
    if is.len() != out.k_prime || !out.graph.is_independent(is) {
        return Err(Error::InvalidInput(format!(
            "expected an independent set of size {}, got {} vertices",
            out.k_prime,
            is.len()
        )));
    }
    let mut choice = vec![vec![0; out.k]; out.k];
    for (i, row) in choice.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let c1 = out.clique((i, j), Role::Cycle(1));
            *x = c1
                .vertices
                .iter()
                .position(|&v| is.contains(v))
                .ok_or_else(|| Error::InvalidInput(format!("gadget ({i},{j}) misses its first cycle clique")))?;
        }
    }
    Ok(GtSolution { choice })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExclusionReport {
    /// Names of the patterns searched for.
    pub checked: Vec<String>,
    pub violations: Vec<Violation>,
}

impl ExclusionReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn found(&self, pattern: &str) -> bool {
        self.violations.iter().any(|v| v.pattern == pattern)
    }
}

/// Searches `out` for `K_{1,4}`, the cycles `C_4..=C_{p1}` and every tree in `trees`.
///
/// Each tree must have two branching vertices at distance at most `p2`.
pub fn verify_exclusions(out: &ConstructionOutput, p1: usize, p2: usize, trees: &[HPattern]) -> Result<ExclusionReport> {
    let mut patterns = vec![HPattern::star(4)];
    patterns.extend((4..=p1).map(HPattern::cycle));
    for t in trees {
        match branching_distance(t.graph()) {
            Some(d) if d <= p2 => patterns.push(t.clone()),
            _ => {
                return Err(Error::InvalidInput(format!(
                    "{t} is not a tree with two branching vertices at distance <= {p2}"
                )))
            }
        }
    }
    let mut report = ExclusionReport::default();
    for h in patterns {
        report.checked.push(h.to_string());
        if let Some(emb) = find_induced(&out.graph, &h)? {
            report.violations.push(Violation::new(h.to_string(), Some(emb)));
        }
    }
    Ok(report)
}

/// Distance between the two branching vertices of a tree that has exactly two.
pub fn branching_distance(t: &Graph) -> Option<usize> {
    let n = t.n();
    if n == 0 || t.edge_count() + 1 != n || !t.is_connected() {
        return None;
    }
    let br: Vec<usize> = (0..n).filter(|&v| t.degree(v) >= 3).collect();
    let [a, b] = br[..] else { return None };
    let mut dist = vec![usize::MAX; n];
    dist[a] = 0;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        for v in t.neighbors(u).iter() {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    Some(dist[b])
}

/// Two branching vertices joined by a path with `d` edges, each with two extra leaves.
pub fn double_broom(d: usize) -> HPattern {
    let mut g = Graph::new(d + 5);
    for v in 0..d {
        g.add_edge(v, v + 1);
    }
    g.add_edge(0, d + 1);
    g.add_edge(0, d + 2);
    g.add_edge(d, d + 3);
    g.add_edge(d, d + 4);
    HPattern::named(g, format!("double-broom{d}"))
}

/// `G_1 + G_2 + … + G_t`.
pub fn or_compose(graphs: &[Graph]) -> Result<Graph> {
    let (first, rest) = graphs
        .split_first()
        .ok_or_else(|| Error::InvalidInput("nothing to compose".into()))?;
    Ok(rest.iter().fold(first.clone(), |acc, g| acc.join(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{alpha_exact, AlphaSearch};
    use crate::sample::gnp;

    fn all_tilings(k: usize, m: usize, n_t: usize) -> Vec<GridTiling> {
        let pairs: Vec<Pair> = (1..=m).flat_map(|a| (1..=m).map(move |b| (a, b))).collect();
        let mut subsets = Vec::new();
        for mask in 0u32..1 << pairs.len() {
            if mask.count_ones() as usize == n_t {
                subsets.push((0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect::<Vec<_>>());
            }
        }
        let cells = k * k;
        let mut out = Vec::new();
        let mut idx = vec![0; cells];
        loop {
            let tiles = (0..k).map(|i| (0..k).map(|j| subsets[idx[i * k + j]].clone()).collect()).collect();
            out.push(GridTiling::new(k, m, tiles).unwrap());
            let mut pos = 0;
            loop {
                if pos == cells {
                    return out;
                }
                idx[pos] += 1;
                if idx[pos] < subsets.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }

    #[test]
    fn single_tile_is_feasible() {
        for seed in 0..10 {
            let (gt, _) = gen_grid_tiling(1, 3, 2, false, seed).unwrap();
            assert!(gt.brute_force().is_some());
        }
    }

    #[test]
    fn planted_certificate_is_feasible() {
        for seed in 0..20 {
            let (gt, sol) = gen_grid_tiling(2, 3, 2, true, seed).unwrap();
            assert!(gt.is_feasible(&sol.unwrap()));
        }
    }

    #[test]
    fn rejects_oversized_tiles() {
        assert!(gen_grid_tiling(2, 2, 5, false, 0).is_err());
        assert!(GridTiling::new(1, 2, vec![vec![vec![(1, 3)]]]).is_err());
    }

    #[test]
    fn single_singleton_gadget() {
        let (gt, _) = gen_grid_tiling(1, 2, 1, false, 3).unwrap();
        let out = build_construction(&gt, Variant::First, 1).unwrap();
        assert_eq!(out.graph.n(), 16);
        assert_eq!(out.k_prime, 16);
        assert_eq!(alpha_exact(&out.graph, 1 << 24).unwrap().alpha, 16);
    }

    #[test]
    fn planted_lift_has_full_size() {
        for variant in [Variant::First, Variant::Second, Variant::Third] {
            let (gt, sol) = gen_grid_tiling(2, 2, 2, true, 5).unwrap();
            let sol = sol.unwrap();
            let out = build_construction(&gt, variant, 1).unwrap();
            assert_eq!(out.graph.n(), 128);
            assert_eq!(out.main_cliques.len(), 64);
            let lifted = lift_solution(&sol, &out).unwrap();
            assert_eq!(lifted.len(), 64);
            assert!(out.graph.is_independent(&lifted));
            assert_eq!(project_solution(&lifted, &out).unwrap(), sol);
        }
    }

    #[test]
    fn second_variant_uses_anti_matchings() {
        let out = tile_gadget(&[(1, 1), (2, 1), (1, 2)], 2, Variant::Second, 1).unwrap();
        let g = &out.graph;
        for (tail, head, _) in gadget_arcs(1) {
            let x = &out.clique((0, 0), tail).vertices;
            let y = &out.clique((0, 0), head).vertices;
            for (a, &u) in x.iter().enumerate() {
                for (b, &v) in y.iter().enumerate() {
                    assert_eq!(g.has_edge(u, v), a != b, "{tail} {head} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn third_variant_links_branching_neighbours() {
        let out = tile_gadget(&[(1, 1), (2, 2)], 2, Variant::Third, 1).unwrap();
        let c8 = &out.clique((0, 0), Role::Cycle(8)).vertices;
        let c2 = &out.clique((0, 0), Role::Cycle(2)).vertices;
        assert!(!out.graph.has_edge(c8[0], c2[0]));
        assert!(out.graph.has_edge(c8[0], c2[1]));
    }

    #[test]
    fn gadget_solutions_share_a_cycle_index() {
        let tile = [(1, 2), (2, 1)];
        let out = tile_gadget(&tile, 2, Variant::First, 1).unwrap();
        let g = &out.graph;
        let mut seen = 0;
        // Every maximum independent set meets each of the 16 main cliques once.
        let mut pick = vec![0usize; out.main_cliques.len()];
        loop {
            let set: Vec<usize> = out.main_cliques.iter().zip(&pick).map(|(c, &a)| c.vertices[a]).collect();
            if g.is_independent_slice(&set) {
                seen += 1;
                let xs: Vec<usize> = (1..=8).map(|t| pick[role_index(Role::Cycle(t), 1)]).collect();
                assert!(xs.iter().all(|&x| x == xs[0]));
            }
            let mut pos = 0;
            while pos < pick.len() {
                pick[pos] += 1;
                if pick[pos] < 2 {
                    break;
                }
                pick[pos] = 0;
                pos += 1;
            }
            if pos == pick.len() {
                break;
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn feasibility_matches_alpha_for_singleton_tiles() {
        for variant in [Variant::First, Variant::Second, Variant::Third] {
            for gt in all_tilings(2, 2, 1).into_iter().step_by(7) {
                let out = build_construction(&gt, variant, 1).unwrap();
                let found = AlphaSearch::new(&out.graph).cover_hint(out.cover()).decide(out.k_prime).unwrap();
                assert_eq!(found.is_some(), gt.brute_force().is_some(), "{variant} {gt:?}");
                if let Some(is) = found {
                    assert!(gt.is_feasible(&project_solution(&is, &out).unwrap()));
                }
            }
        }
    }

    #[test]
    fn first_variant_exclusions() {
        let (gt, _) = gen_grid_tiling(2, 2, 2, false, 11).unwrap();
        let first = build_construction(&gt, Variant::First, 1).unwrap();
        let report = verify_exclusions(&first, 5, 1, &[double_broom(1)]).unwrap();
        assert!(report.is_clean(), "{report:?}");
        let second = build_construction(&gt, Variant::Second, 1).unwrap();
        assert!(verify_exclusions(&second, 4, 1, &[]).unwrap().found("C4"));
    }

    #[test]
    fn rejects_non_broom_trees() {
        let (gt, _) = gen_grid_tiling(1, 2, 1, false, 0).unwrap();
        let out = build_construction(&gt, Variant::First, 1).unwrap();
        assert!(verify_exclusions(&out, 4, 1, &[HPattern::claw()]).is_err());
        assert!(verify_exclusions(&out, 4, 1, &[double_broom(2)]).is_err());
        assert_eq!(branching_distance(double_broom(3).graph()), Some(3));
    }

    #[test]
    fn join_composition() {
        let k3 = or_compose(&[Graph::new(1), Graph::new(1), Graph::new(1)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let c5 = or_compose(&[Graph::cycle(5), Graph::cycle(5)]).unwrap();
        assert_eq!(alpha_exact(&c5, 1 << 20).unwrap().alpha, 2);
        assert_eq!(or_compose(&[Graph::petersen()]).unwrap(), Graph::petersen());
        assert!(or_compose(&[]).is_err());
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..30 {
            let gs: Vec<Graph> = (0..3)
                .map(|_| {
                    let n = rng.gen_range(1..=10);
                    gnp(&mut rng, n, 0.4)
                }).collect();
            let best = gs.iter().map(|g| alpha_exact(g, 1 << 20).unwrap().alpha).max().unwrap();
            assert_eq!(alpha_exact(&or_compose(&gs).unwrap(), 1 << 24).unwrap().alpha, best);
        }
    }
}
