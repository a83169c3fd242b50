//! Seeded random instances for tests, benchmarks and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{find_induced, find_induced_through, Graph, HPattern};

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Draws `G(n, p)` until it is `h`-free, up to `tries` attempts.
pub fn rejection_sample<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64, h: &HPattern, tries: usize) -> Option<Graph> {
    (0..tries)
        .map(|_| gnp(rng, n, p))
        .find(|g| find_induced(g, h).expect("pattern within cap").is_none())
}

/// Grows an `h`-free graph one vertex at a time.
///
/// Each new vertex gets a random neighbourhood of density `p`; a draw that
/// creates an induced `h` is rejected and redrawn. After `tries` rejections the
/// vertex copies the neighbourhood of a random existing vertex and, failing
/// that, the graph stops growing, so the result may have fewer than `n` vertices.
pub fn grow_hfree<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64, h: &HPattern, tries: usize) -> Graph {
    let mut g = Graph::new(0);
    'grow: while g.n() < n {
        let m = g.n();
        for attempt in 0..=tries {
            let mut next = g.disjoint_union(&Graph::new(1));
            if attempt < tries {
                for u in 0..m {
                    if rng.gen_bool(p) {
                        next.add_edge(u, m);
                    }
                }
            } else if m > 0 {
                let twin = rng.gen_range(0..m);
                for u in g.neighbors(twin).iter() {
                    next.add_edge(u, m);
                }
                if rng.gen_bool(0.5) {
                    next.add_edge(twin, m);
                }
            }
            if find_induced_through(&next, m, h).expect("pattern within cap").is_none() {
                g = next;
                continue 'grow;
            }
        }
        break;
    }
    g
}

/// Random cograph built from a random union/join expression over `n` leaves.
pub fn random_cograph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    if n <= 1 {
        return Graph::new(n);
    }
    let left = rng.gen_range(1..n);
    let a = random_cograph(rng, left);
    let b = random_cograph(rng, n - left);
    if rng.gen_bool(0.5) {
        a.join(&b)
    } else {
        a.disjoint_union(&b)
    }
}

/// Relabels `g` by a uniformly random permutation.
pub fn shuffle<R: Rng + ?Sized>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    let mut out = Graph::new(g.n());
    for (u, v) in g.edges() {
        out.add_edge(perm[u], perm[v]);
    }
    out
}
