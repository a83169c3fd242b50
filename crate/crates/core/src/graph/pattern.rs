use std::fmt;

use super::Graph;
use crate::error::{Error, GraphError};

/// Largest pattern accepted by induced-subgraph search and classification.
pub const PATTERN_CAP: usize = 10;

/// A small fixed graph used as a forbidden induced subgraph.
#[derive(Clone, PartialEq, Eq)]
pub struct HPattern {
    graph: Graph,
    name: Option<String>,
}

impl fmt::Debug for HPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPattern({self})")
    }
}

impl fmt::Display for HPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => f.write_str(n),
            None => write!(
                f,
                "H[n={}; {}]",
                self.graph.n(),
                self.graph
                    .edges()
                    .map(|(u, v)| format!("{u}-{v}"))
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }
}

impl HPattern {
    pub fn from_graph(graph: Graph) -> Self {
        HPattern { graph, name: None }
    }

    pub fn named(graph: Graph, name: impl Into<String>) -> Self {
        HPattern {
            graph,
            name: Some(name.into()),
        }
    }

    pub fn checked(graph: Graph) -> Result<Self, GraphError> {
        if graph.n() > PATTERN_CAP {
            return Err(GraphError::PatternTooLarge { size: graph.n(), cap: PATTERN_CAP });
        }
        Ok(Self::from_graph(graph))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn complete(r: usize) -> Self {
        Self::named(Graph::complete(r), format!("K{r}"))
    }

    pub fn edgeless(n: usize) -> Self {
        Self::named(Graph::new(n), format!("{n}K1"))
    }

    pub fn path(n: usize) -> Self {
        Self::named(Graph::path(n), format!("P{n}"))
    }

    pub fn cycle(n: usize) -> Self {
        Self::named(Graph::cycle(n), format!("C{n}"))
    }

    pub fn star(leaves: usize) -> Self {
        Self::named(Graph::star(leaves), format!("K1,{leaves}"))
    }

    pub fn claw() -> Self {
        Self::named(Graph::star(3), "claw")
    }

    /// `K_r` minus the edges of a graph `h` on at most `r` vertices.
    pub fn clique_minus(r: usize, h: &Graph) -> Graph {
        assert!(h.n() <= r, "removed graph larger than the clique");
        let mut g = Graph::complete(r);
        for (u, v) in h.edges() {
            g.remove_edge(u, v);
        }
        g
    }

    /// `K_r \ K_s`: a clique with `s` of its vertices made pairwise non-adjacent.
    pub fn clique_minus_clique(r: usize, s: usize) -> Self {
        Self::named(Self::clique_minus(r, &Graph::complete(s)), format!("K{r}-K{s}"))
    }

    /// `K_r \ K_{1,s}`: vertex 0 loses its edges to vertices `1..=s`.
    pub fn clique_minus_star(r: usize, s: usize) -> Self {
        Self::named(Self::clique_minus(r, &Graph::star(s)), format!("K{r}-K1,{s}"))
    }

    /// `K_r \ K_{s1,s2}`: a path of three cliques of sizes `s1`, `r-s1-s2`, `s2`.
    pub fn clique_minus_biclique(r: usize, s1: usize, s2: usize) -> Self {
        Self::named(
            Self::clique_minus(r, &Graph::complete_bipartite(s1, s2)),
            format!("K{r}-K{s1},{s2}"),
        )
    }

    /// `K_r^q`: `q` disjoint copies of `K_r`.
    pub fn cluster(r: usize, q: usize) -> Self {
        let mut g = Graph::new(0);
        for _ in 0..q {
            g = g.disjoint_union(&Graph::complete(r));
        }
        Self::named(g, format!("{q}K{r}"))
    }

    pub fn paw() -> Self {
        Self::named(Self::clique_minus(4, &Graph::star(2)), "paw")
    }

    pub fn diamond() -> Self {
        Self::named(Self::clique_minus(4, &Graph::complete(2)), "diamond")
    }

    /// Universal vertex 0 over a path `1-2-3-4`.
    pub fn gem() -> Self {
        Self::named(Graph::new(1).join(&Graph::path(4)), "gem")
    }

    /// `T_{i,j,k}`: a universal vertex over `K_i ⊎ K_j ⊎ K_k`.
    pub fn t_graph(i: usize, j: usize, k: usize) -> Self {
        let body = Graph::complete(i).disjoint_union(&Graph::complete(j)).disjoint_union(&Graph::complete(k));
        Self::named(Graph::new(1).join(&body), format!("T{i},{j},{k}"))
    }

    pub fn cricket() -> Self {
        let mut h = Self::t_graph(1, 1, 2);
        h.name = Some("cricket".into());
        h
    }

    /// Subdivided claw `S_{a,b,c}` with arms of `a`, `b`, `c` edges; centre is vertex 0.
    pub fn subdivided_claw(a: usize, b: usize, c: usize) -> Self {
        let mut g = Graph::new(1 + a + b + c);
        let mut next = 1;
        for arm in [a, b, c] {
            let mut prev = 0;
            for _ in 0..arm {
                g.add_edge(prev, next);
                prev = next;
                next += 1;
            }
        }
        Self::named(g, format!("S{a},{b},{c}"))
    }

    /// Parses pattern expressions such as `C4`, `gem`, `2K2`, `K5-K2`, `K5-K1,3`,
    /// `T1,2,2`, `K3|K1` (disjoint union) or `P4+K1` (join).
    pub fn parse(expr: &str) -> Result<Self, Error> {
        let norm: String = expr
            .replace("\\setminus", "-")
            .replace('∖', "-")
            .replace("\\uplus", "|")
            .replace('⊎', "|")
            .chars()
            .filter(|c| !matches!(c, '_' | '{' | '}' | ' ' | '\\' | '$'))
            .collect();
        if norm.is_empty() {
            return Err(Error::InvalidInput("empty pattern".into()));
        }
        let mut union: Option<Graph> = None;
        for term in norm.split('|') {
            let mut joined: Option<Graph> = None;
            for factor in term.split('+') {
                let g = parse_atom(factor)?.graph;
                joined = Some(match joined {
                    None => g,
                    Some(acc) => acc.join(&g),
                });
            }
            let g = joined.ok_or_else(|| Error::InvalidInput(format!("empty term in {expr:?}")))?;
            union = Some(match union {
                None => g,
                Some(acc) => acc.disjoint_union(&g),
            });
        }
        let graph = union.unwrap();
        if graph.n() > PATTERN_CAP {
            return Err(GraphError::PatternTooLarge { size: graph.n(), cap: PATTERN_CAP }.into());
        }
        if !norm.contains(['|', '+']) {
            return Ok(Self::named(graph, parse_atom(&norm)?.name.unwrap_or(norm)));
        }
        Ok(Self::named(graph, norm))
    }
}

fn nums(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("expected a number, got {t:?}")))
        })
        .collect()
}

fn parse_atom(atom: &str) -> Result<HPattern, Error> {
    let bad = || Error::InvalidInput(format!("unrecognised pattern {atom:?}"));
    let lower = atom.to_ascii_lowercase();
    match lower.as_str() {
        "claw" => return Ok(HPattern::claw()),
        "gem" => return Ok(HPattern::gem()),
        "paw" => return Ok(HPattern::paw()),
        "diamond" => return Ok(HPattern::diamond()),
        "cricket" => return Ok(HPattern::cricket()),
        "petersen" => return Ok(HPattern::named(Graph::petersen(), "petersen")),
        _ => {}
    }
    if let Some((left, right)) = atom.split_once('-') {
        let r = left.strip_prefix('K').ok_or_else(bad)?;
        let r: usize = r.parse().map_err(|_| bad())?;
        let right = right.strip_prefix('K').ok_or_else(bad)?;
        let ns = nums(right)?;
        let check = |used: usize| if used <= r { Ok(()) } else { Err(bad()) };
        return match ns.as_slice() {
            [s] => check(*s).map(|_| HPattern::clique_minus_clique(r, *s)),
            [1, s] => check(1 + s).map(|_| HPattern::clique_minus_star(r, *s)),
            [a, b] => check(a + b).map(|_| HPattern::clique_minus_biclique(r, *a, *b)),
            _ => Err(bad()),
        };
    }
    let first = atom.chars().next().ok_or_else(bad)?;
    if first.is_ascii_digit() {
        // qKr or qK1
        let pos = atom.find('K').ok_or_else(bad)?;
        let q: usize = atom[..pos].parse().map_err(|_| bad())?;
        let r: usize = atom[pos + 1..].parse().map_err(|_| bad())?;
        return Ok(HPattern::cluster(r, q));
    }
    let rest = &atom[1..];
    let ns = nums(rest)?;
    match (first, ns.as_slice()) {
        ('K', [r]) => Ok(HPattern::complete(*r)),
        ('K', [1, s]) => Ok(HPattern::star(*s)),
        ('K', [a, b]) => Ok(HPattern::named(Graph::complete_bipartite(*a, *b), format!("K{a},{b}"))),
        ('C', [n]) if *n >= 3 => Ok(HPattern::cycle(*n)),
        ('P', [n]) => Ok(HPattern::path(*n)),
        ('T', [i, j, k]) => Ok(HPattern::t_graph(*i, *j, *k)),
        ('S', [a, b, c]) => Ok(HPattern::subdivided_claw(*a, *b, *c)),
        _ => Err(bad()),
    }
}
