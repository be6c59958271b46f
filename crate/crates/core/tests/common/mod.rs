#![allow(dead_code)]

use std::collections::HashMap;

use graphroot::generators::{complete, cycle, heawood, spider, star, subdivision, tree_from_parents};
use graphroot::{girth, Graph, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let parents: Vec<usize> = (1..n).map(|i| rng.gen_range(0..i)).collect();
    let perm = random_perm(n, rng);
    tree_from_parents(&parents).relabel(&perm)
}

pub fn random_perm(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    loop {
        let g = gnp(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// A random tree plus up to `extra` random edges, each kept only if the
/// girth stays at least `k`.
pub fn sparse_with_girth(n: usize, extra: usize, k: usize, rng: &mut impl Rng) -> Graph {
    let mut g = random_tree(n, rng);
    for _ in 0..extra * 4 {
        if g.m() >= n - 1 + extra {
            break;
        }
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let mut edges: Vec<_> = g.edges().collect();
        edges.push((u.min(v), u.max(v)));
        let h = Graph::from_edges(n, edges).unwrap();
        if girth(&h).at_least(k) {
            g = h;
        }
    }
    g
}

/// Connected graphs of girth at least seven.
pub fn girth7_corpus() -> Vec<Graph> {
    let mut r = rng(7);
    let mut out = Vec::new();
    for i in 0..100 {
        let n = 2 + (i * 198) / 99;
        out.push(random_tree(n, &mut r));
    }
    out.extend((7..=40).map(cycle));
    for legs in [
        vec![1, 1, 1],
        vec![2, 2, 2],
        vec![3, 1, 2, 4],
        vec![5, 5],
        vec![1; 12],
        vec![2, 3, 4, 5, 6],
    ] {
        out.push(spider(&legs));
    }
    for n in [5, 8, 12, 20] {
        out.push(subdivision(&star(n)));
    }
    for i in 0..60 {
        let n = 12 + i % 40;
        let g = sparse_with_girth(n, 1 + i % 5, 7, &mut r);
        out.push(g);
    }
    out
}

/// Connected graphs of girth at least six.
pub fn girth6_corpus() -> Vec<Graph> {
    let mut r = rng(6);
    let mut out = vec![cycle(6), heawood()];
    out.extend((3..=5).map(|k| subdivision(&complete(k))));
    out.extend((6..=14).map(cycle));
    for i in 0..40 {
        out.push(random_tree(3 + (i * 97) / 39, &mut r));
    }
    for i in 0..60 {
        let n = 8 + (i * 92) / 59;
        out.push(sparse_with_girth(n, 1 + i % 8, 6, &mut r));
    }
    out
}

/// Colour refinement from degrees; colours are canonical integers.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = keys.clone();
        distinct.sort();
        distinct.dedup();
        colour = keys.iter().map(|k| distinct.binary_search(k).unwrap()).collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

/// Canonical code of a graph on at most 11 vertices: the maximum adjacency
/// word over all orderings compatible with the refined colouring.
pub fn canonical_code(g: &Graph) -> (usize, u64) {
    let n = g.n();
    assert!(n <= 11);
    let colour = refine(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_colour: Vec<(usize, usize)> = (0..n).map(|v| (colour[v], v)).collect();
    by_colour.sort();
    for (c, v) in by_colour {
        match cells.last_mut() {
            Some(cell) if colour[cell[0]] == c => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    search(g, &mut cells, 0, &mut order, &mut best);
    (n, best)
}

fn search(g: &Graph, cells: &mut [Vec<usize>], ci: usize, order: &mut Vec<usize>, best: &mut u64) {
    if ci == cells.len() {
        let mut code = 0u64;
        for j in 0..order.len() {
            for i in 0..j {
                code = (code << 1) | g.has_edge(order[i], order[j]) as u64;
            }
        }
        *best = (*best).max(code);
        return;
    }
    let cell = cells[ci].clone();
    permute(&cell, &mut Vec::new(), &mut vec![false; cell.len()], &mut |p| {
        let mark = order.len();
        order.extend_from_slice(p);
        search(g, cells, ci + 1, order, best);
        order.truncate(mark);
    });
}

fn permute(items: &[usize], acc: &mut Vec<usize>, used: &mut [bool], f: &mut dyn FnMut(&[usize])) {
    if acc.len() == items.len() {
        f(acc);
        return;
    }
    for i in 0..items.len() {
        if !used[i] {
            used[i] = true;
            acc.push(items[i]);
            permute(items, acc, used, f);
            acc.pop();
            used[i] = false;
        }
    }
}

/// All graphs on `n` vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(n.min(1))];
    for k in 2..=n {
        let mut seen: HashMap<(usize, u64), Graph> = HashMap::new();
        for g in &level {
            let old: Vec<_> = g.edges().collect();
            for mask in 0u32..1 << (k - 1) {
                let mut edges = old.clone();
                edges.extend((0..k - 1).filter(|&u| mask & (1 << u) != 0).map(|u| (u, k - 1)));
                let h = Graph::from_edges(k, edges).unwrap();
                seen.entry(canonical_code(&h)).or_insert(h);
            }
        }
        let mut next: Vec<((usize, u64), Graph)> = seen.into_iter().collect();
        next.sort_by_key(|(c, _)| *c);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    level
}

pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

pub fn is_clique(g: &Graph, mask: u32) -> bool {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| mask & (1 << v) != 0).collect();
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn set_of(n: usize, mask: u32) -> VertexSet {
    (0..n).filter(|&v| mask & (1 << v) != 0).collect()
}

/// Maximal cliques by subset enumeration, sorted.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut out: Vec<VertexSet> = (1u32..1 << n)
        .filter(|&m| is_clique(g, m) && (0..n).all(|v| m & (1 << v) != 0 || !is_clique(g, m | (1 << v))))
        .map(|m| set_of(n, m))
        .collect();
    out.sort();
    out
}

/// Heaviest clique by subset enumeration; ties go to the smallest set.
pub fn brute_max_weight_clique(g: &Graph, w: &[f64]) -> (VertexSet, f64) {
    let n = g.n();
    let mut best = (VertexSet::new(), f64::NEG_INFINITY);
    for m in 1u32..1 << n {
        if !is_clique(g, m) {
            continue;
        }
        let s = set_of(n, m);
        let weight: f64 = s.iter().map(|v| w[v]).sum();
        if weight > best.1 || (weight == best.1 && s < best.0) {
            best = (s, weight);
        }
    }
    best
}
