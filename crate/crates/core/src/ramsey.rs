//! Ramsey bounds and constructive clique-or-independent-set extraction.

use num_bigint::BigUint;

use crate::error::{Error, Result, Violation};
use crate::graph::{find_induced_within, Graph, HPattern, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutcomeKind {
    Clique,
    IndependentSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyOutcome {
    pub kind: OutcomeKind,
    pub members: VertexSet,
}

impl RamseyOutcome {
    fn new(kind: OutcomeKind, n: usize, members: impl IntoIterator<Item = usize>) -> Self {
        RamseyOutcome {
            kind,
            members: VertexSet::from_iter(n, members),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        match self.kind {
            OutcomeKind::Clique => g.is_clique(&self.members),
            OutcomeKind::IndependentSet => g.is_independent(&self.members),
        }
    }
}

/// Upper bound `C(r+k-2, r-1)` on the two-colour Ramsey number `Ram(r, k)`,
/// saturating at `u64::MAX`.
pub fn ramsey_bound(r: usize, k: usize) -> u64 {
    if r == 0 || k == 0 {
        return 0;
    }
    binomial(r + k - 2, r - 1)
}

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Upper bound on `Ram_l(k)`, the least order forcing a monochromatic `K_k`
/// in every `l`-colouring of the edges: `1 + l + ... + l^(L-1)` with `L = l(k-2)+2`.
pub fn ramsey_multicolor_bound(colors: usize, k: usize) -> BigUint {
    if k <= 2 || colors <= 1 {
        return BigUint::from(k);
    }
    let big_l = colors * (k - 2) + 2;
    let l = BigUint::from(colors);
    (l.pow(big_l as u32) - 1u32) / (l - 1u32)
}

/// Smallest `t` with `t^d >= n`.
pub fn ceil_root(n: u64, d: u32) -> u64 {
    assert!(d >= 1);
    if n <= 1 {
        return n;
    }
    let covers = |t: u64| t.checked_pow(d).is_none_or(|p| p >= n);
    let mut lo = 1u64;
    let mut hi = n;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if covers(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Size guaranteed by the Erdős–Hajnal extraction: `⌈n^(1/(r-1))⌉`.
pub fn eh_target(n: usize, r: usize) -> usize {
    assert!(r >= 2);
    ceil_root(n as u64, (r - 1) as u32) as usize
}

/// A clique of size `r` or an independent set of size `k`.
///
/// Rejects graphs with fewer than [`ramsey_bound`]`(r, k)` vertices.
pub fn ramsey_extract(g: &Graph, r: usize, k: usize) -> Result<RamseyOutcome> {
    if r == 0 || k == 0 {
        return Err(Error::InvalidInput("ramsey_extract needs r, k >= 1".into()));
    }
    let bound = ramsey_bound(r, k);
    if (g.n() as u64) < bound {
        return Err(Error::InvalidInput(format!(
            "{} vertices, below the bound {bound} for ({r}, {k})",
            g.n()
        )));
    }
    Ok(ramsey_extract_within(g, &g.vertices(), r, k, &mut 0).expect("bound guarantees an outcome"))
}

/// Best-effort [`ramsey_extract`] inside `within`; always succeeds when
/// `|within| >= ramsey_bound(r, k)`. `ops` accumulates vertex scans.
pub fn ramsey_extract_within(g: &Graph, within: &VertexSet, r: usize, k: usize, ops: &mut u64) -> Option<RamseyOutcome> {
    let n = g.n();
    let mut clique = Vec::new();
    let mut indep = Vec::new();
    let mut left = within.clone();
    loop {
        let (r_left, k_left) = (r - clique.len(), k - indep.len());
        if r_left == 0 {
            return Some(RamseyOutcome::new(OutcomeKind::Clique, n, clique));
        }
        if k_left == 0 {
            return Some(RamseyOutcome::new(OutcomeKind::IndependentSet, n, indep));
        }
        let v = left.first()?;
        if r_left == 1 {
            clique.push(v);
            continue;
        }
        if k_left == 1 {
            indep.push(v);
            continue;
        }
        *ops += left.len() as u64;
        left.remove(v);
        let nbrs = left.intersection(g.neighbors(v));
        if nbrs.len() as u64 >= ramsey_bound(r_left - 1, k_left) {
            clique.push(v);
            left = nbrs;
        } else {
            indep.push(v);
            left.difference_with(g.neighbors(v));
        }
    }
}

/// Constructive Erdős–Hajnal extraction in `(K_r \ K_{1,s})`-free graphs.
///
/// Returns a clique or independent set of size at least [`eh_target`]`(n, r)`.
/// If the recursion and the greedy and Ramsey fallbacks all fall short, the
/// graph is searched for the forbidden pattern and a [`Violation`] is returned;
/// [`Error::Shortfall`] is reserved for inputs that really are free of it.
pub fn eh_extract(g: &Graph, r: usize, s: usize) -> Result<RamseyOutcome> {
    eh_extract_counted(g, r, s).map(|(out, _)| out)
}

/// [`eh_extract`] together with the number of vertex scans it performed.
pub fn eh_extract_counted(g: &Graph, r: usize, s: usize) -> Result<(RamseyOutcome, u64)> {
    if r < 2 || s == 0 || s >= r {
        return Err(Error::InvalidInput(format!("eh_extract needs r >= 2 and 1 <= s < r, got r={r}, s={s}")));
    }
    let n = g.n();
    let t = eh_target(n, r);
    let mut ops = 0u64;
    let all = g.vertices();
    let mut best = match eh_rec(g, &all, r, s, t, &mut ops)? {
        Some(out) if out.len() >= t => return Ok((out, ops)),
        Some(out) => out,
        None => RamseyOutcome::new(OutcomeKind::IndependentSet, n, []),
    };
    for candidate in [greedy_clique(g, &all, &mut ops), greedy_independent(g, &all, &mut ops)] {
        if candidate.len() > best.len() {
            best = candidate;
        }
    }
    if best.len() < t && (n as u64) >= ramsey_bound(t, t) {
        if let Some(out) = ramsey_extract_within(g, &all, t, t, &mut ops) {
            best = out;
        }
    }
    if best.len() >= t {
        return Ok((best, ops));
    }
    let h = HPattern::clique_minus_star(r, s);
    if let Some(e) = find_induced_within(g, &all, &h)? {
        return Err(Violation::new(h.to_string(), Some(e)).into());
    }
    Err(Error::Shortfall { got: best.len(), wanted: t })
}

/// Least order at which the recursion below is guaranteed to reach `t` for
/// `(K_r \ K_{1,s})`-free inputs.
fn rec_threshold(r: usize, s: usize, t: usize) -> u64 {
    let t1 = t.saturating_sub(1) as u64;
    if r <= 2 {
        return t as u64;
    }
    let per_step = if s == r - 1 {
        ramsey_bound(r - 1, t.saturating_sub(1).max(1))
    } else {
        rec_threshold(r - 1, s, t)
    };
    t1.saturating_mul(per_step).saturating_add(1)
}

fn eh_rec(g: &Graph, within: &VertexSet, r: usize, s: usize, t: usize, ops: &mut u64) -> Result<Option<RamseyOutcome>> {
    let n = g.n();
    if t == 0 {
        return Ok(Some(RamseyOutcome::new(OutcomeKind::Clique, n, [])));
    }
    let Some(first) = within.first() else {
        return Ok(None);
    };
    if t == 1 {
        return Ok(Some(RamseyOutcome::new(OutcomeKind::Clique, n, [first])));
    }
    if r == 2 {
        // 2K_1-free: the whole range is a clique.
        *ops += within.len() as u64;
        return Ok(Some(RamseyOutcome {
            kind: OutcomeKind::Clique,
            members: within.clone(),
        }));
    }
    *ops += within.len() as u64;
    if s == r - 1 {
        // Forbidden K_{r-1} plus an isolated vertex: non-neighbourhoods are K_{r-1}-free.
        let (v, non) = within
            .iter()
            .map(|v| (v, within.difference(&g.closed_neighbors(v))))
            .max_by_key(|(v, non)| (non.len(), usize::MAX - v))
            .unwrap();
        *ops += within.len() as u64;
        if non.len() as u64 >= ramsey_bound(r - 1, t - 1) {
            return match ramsey_extract_within(g, &non, r - 1, t - 1, ops) {
                Some(out) if out.kind == OutcomeKind::IndependentSet => {
                    let mut members = out.members;
                    members.insert(v);
                    Ok(Some(RamseyOutcome {
                        kind: OutcomeKind::IndependentSet,
                        members,
                    }))
                }
                Some(out) => {
                    let mut e = vec![v];
                    e.extend(out.members.iter());
                    Err(Violation::new(HPattern::clique_minus_star(r, r - 1).to_string(), Some(e)).into())
                }
                None => unreachable!("bound checked"),
            };
        }
        return Ok(Some(greedy_clique(g, within, ops)));
    }
    let (v, nbrs) = within
        .iter()
        .map(|v| (v, within.intersection(g.neighbors(v))))
        .max_by_key(|(v, nb)| (nb.len(), usize::MAX - v))
        .unwrap();
    *ops += within.len() as u64;
    if nbrs.len() as u64 >= rec_threshold(r - 1, s, t) {
        return match eh_rec(g, &nbrs, r - 1, s, t, ops) {
            Err(Error::Violation(mut viol)) => {
                if let Some(e) = viol.embedding.as_mut() {
                    e.push(v);
                }
                viol.pattern = HPattern::clique_minus_star(r, s).to_string();
                Err(viol.into())
            }
            Ok(Some(mut out)) if out.kind == OutcomeKind::Clique => {
                out.members.insert(v);
                Ok(Some(out))
            }
            other => other,
        };
    }
    Ok(Some(greedy_independent(g, within, ops)))
}

fn greedy_clique(g: &Graph, within: &VertexSet, ops: &mut u64) -> RamseyOutcome {
    let mut left = within.clone();
    let mut clique = Vec::new();
    while let Some(v) = left.first() {
        *ops += 1;
        clique.push(v);
        left.intersect_with(g.neighbors(v));
    }
    RamseyOutcome::new(OutcomeKind::Clique, g.n(), clique)
}

fn greedy_independent(g: &Graph, within: &VertexSet, ops: &mut u64) -> RamseyOutcome {
    let mut left = within.clone();
    let mut indep = Vec::new();
    while let Some(v) = left.first() {
        *ops += 1;
        indep.push(v);
        left.remove(v);
        left.difference_with(g.neighbors(v));
    }
    RamseyOutcome::new(OutcomeKind::IndependentSet, g.n(), indep)
}
