//! Output-sensitive maximal clique enumeration.
//!
//! The enumeration walks vertices in order and maintains a maximal clique
//! of the prefix graph `G[0..i]`. Every node of the search tree has at
//! least one child and the tree has depth `n`, so the work between two
//! consecutive outputs is polynomial. That lets a caller cap the number of
//! cliques and pay only for what it asked for.

use thiserror::Error;

use crate::bitset::BitSet;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueList {
    /// Sorted lexicographically.
    pub cliques: Vec<VertexSet>,
    /// False iff enumeration stopped at the cap.
    pub complete: bool,
}

impl CliqueList {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Indices of the cliques containing both `u` and `v`.
    pub fn containing_pair(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.cliques.len())
            .filter(|&i| self.cliques[i].contains(u) && self.cliques[i].contains(v))
            .collect()
    }

    /// For each vertex of a graph on `n` vertices, the indices of the cliques
    /// containing it.
    pub fn membership(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n];
        for (i, q) in self.cliques.iter().enumerate() {
            for v in q.iter() {
                out[v].push(i);
            }
        }
        out
    }
}

/// Enumerates maximal cliques; with `cap = Some(k)` stops as soon as more
/// than `k` have been found.
pub fn enumerate_maximal_cliques(g: &Graph, cap: Option<usize>) -> CliqueList {
    let n = g.n();
    let adj: Vec<BitSet> = (0..n)
        .map(|v| BitSet::from_iter(n, g.neighbors(v).iter().copied()))
        .collect();
    let limit = cap.map_or(usize::MAX, |c| c.saturating_add(1));
    let mut found = Vec::new();
    let mut complete = true;
    if n == 0 {
        return CliqueList {
            cliques: found,
            complete,
        };
    }

    // (i, C): C is a maximal clique of G[0..i]
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((i, clique)) = stack.pop() {
        if i == n {
            found.push(VertexSet::from(clique));
            if found.len() >= limit {
                complete = false;
                break;
            }
            continue;
        }
        let kept: Vec<usize> = clique.iter().copied().filter(|&c| adj[i].contains(c)).collect();
        if kept.len() == clique.len() {
            let mut next = clique;
            next.push(i);
            stack.push((i + 1, next));
            continue;
        }
        // i cannot join C, so C stays maximal in G[0..=i]
        let with_i = admissible_child(&adj, n, i, &clique, &kept);
        if let Some(child) = with_i {
            stack.push((i + 1, child));
        }
        stack.push((i + 1, clique));
    }

    found.sort();
    CliqueList {
        cliques: found,
        complete,
    }
}

/// The child `(C ∩ N(i)) + i`, kept iff it is maximal in `G[0..=i]` and `C`
/// is the lexicographically first maximal clique of `G[0..i]` containing
/// `C ∩ N(i)`. This makes each maximal clique of `G[0..=i]` reachable from
/// exactly one parent.
fn admissible_child(adj: &[BitSet], n: usize, i: usize, clique: &[usize], kept: &[usize]) -> Option<Vec<usize>> {
    let prefix = BitSet::prefix(n, i);

    let mut common = prefix.clone();
    for &k in kept {
        common.intersect_with(&adj[k]);
    }
    // common: vertices below i adjacent to every kept vertex (kept excluded)
    let mut extenders = common.clone();
    extenders.intersect_with(&adj[i]);
    if !extenders.is_empty() {
        return None;
    }

    let in_clique = BitSet::from_iter(n, clique.iter().copied());
    let mut greedy = common;
    while let Some(y) = greedy.first() {
        if !in_clique.contains(y) {
            return None;
        }
        greedy.intersect_with(&adj[y]);
    }

    let mut child = kept.to_vec();
    child.push(i);
    Some(child)
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliqueError {
    #[error("more than {cap} maximal cliques: not a girth-7 square candidate")]
    TooManyCliques { cap: usize },
    #[error("weights must be non-negative and finite (vertex {0})")]
    BadWeight(usize),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
}

/// Maximum-weight clique, assuming `g` has at most `cap` maximal cliques.
/// Ties go to the lexicographically smallest vertex set.
pub fn max_weight_clique(g: &Graph, weights: &[f64], cap: usize) -> Result<(VertexSet, f64), CliqueError> {
    if weights.len() != g.n() {
        return Err(CliqueError::WeightCount {
            expected: g.n(),
            got: weights.len(),
        });
    }
    if let Some(v) = weights.iter().position(|w| !(w.is_finite() && *w >= 0.0)) {
        return Err(CliqueError::BadWeight(v));
    }
    let list = enumerate_maximal_cliques(g, Some(cap));
    if !list.complete {
        return Err(CliqueError::TooManyCliques { cap });
    }
    let mut best: Option<(VertexSet, f64)> = None;
    // cliques are sorted, so strict improvement keeps the smallest on ties
    for q in list.cliques {
        let w: f64 = q.iter().map(|v| weights[v]).sum();
        if best.as_ref().is_none_or(|(_, bw)| w > *bw) {
            best = Some((q, w));
        }
    }
    Ok(best.unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};
    use crate::graph::square;

    fn sets(list: &[&[usize]]) -> Vec<VertexSet> {
        list.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn complete_graph_has_one_clique() {
        let l = enumerate_maximal_cliques(&complete(4), None);
        assert_eq!(l.cliques, sets(&[&[0, 1, 2, 3]]));
        assert!(l.complete);
    }

    #[test]
    fn p4_square_cliques() {
        let l = enumerate_maximal_cliques(&square(&path(4)), None);
        assert_eq!(l.cliques, sets(&[&[0, 1, 2], &[1, 2, 3]]));
    }

    #[test]
    fn octahedron_exceeds_cap() {
        let g = square(&cycle(6));
        let all = enumerate_maximal_cliques(&g, None);
        assert_eq!(all.len(), 8);
        let capped = enumerate_maximal_cliques(&g, Some(6));
        assert!(!capped.complete);
        assert_eq!(capped.len(), 7);
        assert!(enumerate_maximal_cliques(&g, Some(8)).complete);
    }

    #[test]
    fn isolated_vertices_and_empty_graph() {
        let l = enumerate_maximal_cliques(&Graph::empty(3), None);
        assert_eq!(l.cliques, sets(&[&[0], &[1], &[2]]));
        assert!(enumerate_maximal_cliques(&Graph::empty(0), None).is_empty());
    }

    #[test]
    fn weighted_examples() {
        let (q, w) = max_weight_clique(&complete(3), &[1.0, 2.0, 3.0], 3).unwrap();
        assert_eq!((q, w), (VertexSet::from([0, 1, 2]), 6.0));

        // {0,1,2} and {1,2,3} both weigh 7; the smaller set wins
        let (q, w) = max_weight_clique(&square(&path(4)), &[5.0, 1.0, 1.0, 5.0], 4).unwrap();
        assert_eq!(q, VertexSet::from([0, 1, 2]));
        assert_eq!(w, 7.0);

        let (q, w) = max_weight_clique(&square(&cycle(7)), &[1.0; 7], 7).unwrap();
        assert_eq!((q, w), (VertexSet::from([0, 1, 2]), 3.0));
    }

    #[test]
    fn weighted_errors() {
        let g = square(&cycle(6));
        assert_eq!(
            max_weight_clique(&g, &[1.0; 6], 6),
            Err(CliqueError::TooManyCliques { cap: 6 })
        );
        assert_eq!(
            max_weight_clique(&g, &[1.0, -1.0, 0.0, 0.0, 0.0, 0.0], 8),
            Err(CliqueError::BadWeight(1))
        );
        assert_eq!(
            max_weight_clique(&g, &[1.0], 8),
            Err(CliqueError::WeightCount { expected: 6, got: 1 })
        );
    }
}
