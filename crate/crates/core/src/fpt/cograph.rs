//! P4-free graphs: recognition, maximum independent set and minimum clique cover
//! by recursive decomposition into components and co-components.

use crate::error::{Error, Result, Violation};
use crate::graph::{find_induced_within, Graph, HPattern, VertexSet};

/// Connected components of the complement of `G[within]`.
pub fn co_components(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut left = within.clone();
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        left.remove(start);
        let mut comp = VertexSet::new(g.n());
        comp.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let fresh = left.difference(g.neighbors(v));
            for u in fresh.iter() {
                comp.insert(u);
                stack.push(u);
            }
            left.difference_with(&fresh);
        }
        out.push(comp);
    }
    out
}

pub fn find_p4(g: &Graph, within: &VertexSet) -> Option<Vec<usize>> {
    find_induced_within(g, within, &HPattern::path(4)).expect("P4 is below the pattern cap")
}

pub fn is_p4_free(g: &Graph) -> bool {
    find_p4(g, &g.vertices()).is_none()
}

fn p4_violation(g: &Graph, within: &VertexSet) -> Error {
    Violation::new("P4", find_p4(g, within)).into()
}

/// Maximum independent set of the cograph `G[within]`.
pub fn cograph_alpha(g: &Graph, within: &VertexSet) -> Result<VertexSet> {
    if within.len() <= 1 {
        return Ok(within.clone());
    }
    let comps = g.components_within(within);
    if comps.len() > 1 {
        let mut best = VertexSet::new(g.n());
        for c in &comps {
            best.union_with(&cograph_alpha(g, c)?);
        }
        return Ok(best);
    }
    let co = co_components(g, within);
    if co.len() == 1 {
        return Err(p4_violation(g, within));
    }
    let mut best = VertexSet::new(g.n());
    for c in &co {
        let s = cograph_alpha(g, c)?;
        if s.len() > best.len() {
            best = s;
        }
    }
    Ok(best)
}

/// Partition of the cograph `G[within]` into `alpha` cliques.
pub fn cograph_clique_cover(g: &Graph, within: &VertexSet) -> Result<Vec<VertexSet>> {
    if within.is_empty() {
        return Ok(Vec::new());
    }
    if within.len() == 1 {
        return Ok(vec![within.clone()]);
    }
    let comps = g.components_within(within);
    if comps.len() > 1 {
        let mut cover = Vec::new();
        for c in &comps {
            cover.extend(cograph_clique_cover(g, c)?);
        }
        return Ok(cover);
    }
    let co = co_components(g, within);
    if co.len() == 1 {
        return Err(p4_violation(g, within));
    }
    let mut cover: Vec<VertexSet> = Vec::new();
    for c in &co {
        for (i, clique) in cograph_clique_cover(g, c)?.into_iter().enumerate() {
            match cover.get_mut(i) {
                Some(slot) => slot.union_with(&clique),
                None => cover.push(clique),
            }
        }
    }
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::alpha_exact;
    use crate::sample::random_cograph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn p4_is_rejected() {
        let p4 = Graph::path(4);
        assert!(!is_p4_free(&p4));
        assert!(matches!(cograph_alpha(&p4, &p4.vertices()), Err(Error::Violation(_))));
        assert!(cograph_clique_cover(&p4, &p4.vertices()).is_err());
    }

    #[test]
    fn complete_bipartite() {
        let g = Graph::complete_bipartite(3, 3);
        assert!(is_p4_free(&g));
        assert_eq!(cograph_alpha(&g, &g.vertices()).unwrap().len(), 3);
        let cover = cograph_clique_cover(&g, &g.vertices()).unwrap();
        assert_eq!(cover.len(), 3);
        assert!(cover.iter().all(|c| g.is_clique(c)));
    }

    #[test]
    fn random_cographs_match_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for n in (1..=14).cycle().take(120) {
            let g = random_cograph(&mut rng, n);
            assert!(is_p4_free(&g));
            let all = g.vertices();
            let s = cograph_alpha(&g, &all).unwrap();
            assert!(g.is_independent(&s));
            let alpha = alpha_exact(&g, 1 << 24).unwrap().alpha;
            assert_eq!(s.len(), alpha);
            let cover = cograph_clique_cover(&g, &all).unwrap();
            assert_eq!(cover.len(), alpha);
            assert!(cover.iter().all(|c| g.is_clique(c)));
            assert_eq!(cover.iter().map(|c| c.len()).sum::<usize>(), n);
        }
    }
}
