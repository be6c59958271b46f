//! Named graph families used by tests, examples and the CLI.

use crate::graph::Graph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator edges are valid")
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    build(n, edges)
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
}

/// Star `K_{1,n-1}` centered at vertex 0.
pub fn star(n: usize) -> Graph {
    star_centered(n, 0)
}

pub fn star_centered(n: usize, center: usize) -> Graph {
    build(n, (0..n).filter(|&v| v != center).map(|v| (center, v)).collect())
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect())
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, edges)
}

/// Heawood graph: the (3,6)-cage on 14 vertices.
pub fn heawood() -> Graph {
    let mut edges: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (0..14).step_by(2) {
        edges.push((i, (i + 5) % 14));
    }
    build(14, edges)
}

/// Replaces every edge by a path of length two. Original vertices keep their
/// identifiers; the subdivision vertex of the `i`-th edge (lexicographic
/// order) is `n + i`.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    for (i, (u, v)) in g.edges().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    build(n + g.m(), edges)
}

/// Spider: a center (vertex 0) with one pendant path of each given length.
pub fn spider(legs: &[usize]) -> Graph {
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    build(n, edges)
}

/// Tree given by a parent array: vertex `i + 1` hangs below `parents[i]`.
pub fn tree_from_parents(parents: &[usize]) -> Graph {
    build(
        parents.len() + 1,
        parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect(),
    )
}

/// Disjoint union, with `h`'s vertices shifted after `g`'s.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edges().chain(h.edges().map(|(u, v)| (u + n, v + n))).collect();
    build(n + h.n(), edges)
}
