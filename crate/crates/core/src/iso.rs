//! Exact isomorphism test for small graphs: colour refinement plus
//! individualisation backtracking.

use thiserror::Error;

use crate::graph::Graph;

pub const DEFAULT_MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("isomorphism test limited to {bound} vertices, got {n}")]
pub struct TooLarge {
    pub n: usize,
    pub bound: usize,
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, TooLarge> {
    is_isomorphic_bounded(g1, g2, DEFAULT_MAX_VERTICES)
}

pub fn is_isomorphic_bounded(g1: &Graph, g2: &Graph, bound: usize) -> Result<bool, TooLarge> {
    find_isomorphism(g1, g2, bound).map(|m| m.is_some())
}

/// Returns `perm` with `g1.relabel(&perm) == g2`, if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph, bound: usize) -> Result<Option<Vec<usize>>, TooLarge> {
    for g in [g1, g2] {
        if g.n() > bound {
            return Err(TooLarge { n: g.n(), bound });
        }
    }
    if g1.n() != g2.n() || g1.m() != g2.m() || g1.degree_sequence() != g2.degree_sequence() {
        return Ok(None);
    }
    let n = g1.n();
    // disjoint union: g1 on 0..n, g2 on n..2n, so colours are comparable
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| g1.neighbors(v).to_vec())
        .chain((0..n).map(|v| g2.neighbors(v).iter().map(|&w| w + n).collect()))
        .collect();
    let mut colors = vec![0; 2 * n];
    refine(&adj, &mut colors);
    Ok(search(g1, g2, &adj, colors))
}

fn refine(adj: &[Vec<usize>], colors: &mut [usize]) {
    let mut classes = count_classes(colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = adj
            .iter()
            .enumerate()
            .map(|(v, list)| {
                let mut nb: Vec<usize> = list.iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = 0;
        for i in 0..sigs.len() {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                next += 1;
            }
            colors[sigs[i].2] = next;
        }
        let now = if sigs.is_empty() { 0 } else { next + 1 };
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Per colour, the members on each side; `None` if some colour is unbalanced.
fn split_classes(colors: &[usize], n: usize) -> Option<Vec<(Vec<usize>, Vec<usize>)>> {
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    let mut classes = vec![(Vec::new(), Vec::new()); k];
    for (v, &c) in colors.iter().enumerate() {
        if v < n {
            classes[c].0.push(v);
        } else {
            classes[c].1.push(v - n);
        }
    }
    classes.iter().all(|(a, b)| a.len() == b.len()).then_some(classes)
}

fn search(g1: &Graph, g2: &Graph, adj: &[Vec<usize>], colors: Vec<usize>) -> Option<Vec<usize>> {
    let n = g1.n();
    let classes = split_classes(&colors, n)?;
    match classes.iter().find(|(a, _)| a.len() > 1) {
        None => {
            let mut perm = vec![0; n];
            for (a, b) in &classes {
                if let (Some(&x), Some(&y)) = (a.first(), b.first()) {
                    perm[x] = y;
                }
            }
            let ok = g1.edges().all(|(u, v)| g2.has_edge(perm[u], perm[v]));
            ok.then_some(perm)
        }
        Some((left, right)) => {
            let v = left[0];
            let fresh = colors.len();
            right.iter().find_map(|&w| {
                let mut c = colors.clone();
                c[v] = fresh;
                c[w + n] = fresh;
                refine(adj, &mut c);
                search(g1, g2, adj, c)
            })
        }
    }
}
