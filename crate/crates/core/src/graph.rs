//! Immutable simple undirected graphs and the elementary operations on them.
//!
//! Vertices are the dense identifiers `0..n`. Adjacency lists are kept
//! sorted, so equality of two [`Graph`] values is equality of edge sets.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph power exponent must be at least 1")]
    ZeroPower,
}

/// Sorted set of vertex identifiers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn with(&self, v: usize) -> VertexSet {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn without(&self, v: usize) -> VertexSet {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Length of a shortest cycle. `Infinite` (forests) orders above every
/// finite value, so `girth >= Girth::Finite(7)` holds for trees.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        self >= Girth::Finite(k)
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge iterator. Repeated edges collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Normalizes raw adjacency lists (sorted, deduplicated). Callers must
    /// supply symmetric, loop-free lists.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut deg_sum = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            deg_sum += list.len();
        }
        Graph { adj, m: deg_sum / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v].clone())
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.neighborhood(v).with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || connected_components(self).len() == 1
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Graph with vertices renamed by `perm` (old `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]].push(perm[v]);
            adj[perm[v]].push(perm[u]);
        }
        Graph::from_adjacency(adj)
    }
}

/// `k`-th power: `uv` is an edge iff `1 <= dist(u, v) <= k`.
pub fn power(g: &Graph, k: usize) -> Result<Graph, GraphError> {
    match k {
        0 => Err(GraphError::ZeroPower),
        1 => Ok(g.clone()),
        2 => Ok(square(g)),
        _ => Ok(bounded_bfs_power(g, k)),
    }
}

/// Square by neighborhood merging: `N(v)` in the square is the union of the
/// closed neighborhoods of `v`'s neighbors, minus `v`.
pub fn square(g: &Graph) -> Graph {
    let n = g.n();
    let mut mark = vec![usize::MAX; n];
    let mut adj = Vec::with_capacity(n);
    for v in 0..n {
        let mut list = Vec::new();
        mark[v] = v;
        for &u in g.neighbors(v) {
            if mark[u] != v {
                mark[u] = v;
                list.push(u);
            }
            for &w in g.neighbors(u) {
                if mark[w] != v {
                    mark[w] = v;
                    list.push(w);
                }
            }
        }
        adj.push(list);
    }
    Graph::from_adjacency(adj)
}

fn bounded_bfs_power(g: &Graph, k: usize) -> Graph {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut adj = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    for s in 0..n {
        let mut reached = Vec::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if dist[u] == k {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    reached.push(w);
                    queue.push_back(w);
                }
            }
        }
        dist[s] = usize::MAX;
        for &w in &reached {
            dist[w] = usize::MAX;
        }
        adj.push(reached);
    }
    Graph::from_adjacency(adj)
}

/// Shortest cycle length by a breadth-first search from every vertex, O(n·m).
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();
    for s in 0..n {
        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        'bfs: while let Some(u) = queue.pop_front() {
            // any cycle found deeper than this cannot beat `best`
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        queue.clear();
        for &t in &touched {
            dist[t] = usize::MAX;
            parent[t] = usize::MAX;
        }
        touched.clear();
        if best == 3 {
            break;
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Connected components, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comps.push(comp.into_iter().collect());
    }
    comps
}

/// An induced subgraph together with the original identifier of each of
/// its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub origin: Vec<usize>,
}

impl Subgraph {
    /// Maps a graph on the subgraph's vertices back into a graph on `n`
    /// original vertices.
    pub fn lift(&self, local: &Graph, n: usize) -> Graph {
        let edges = local.edges().map(|(u, v)| (self.origin[u], self.origin[v]));
        Graph::from_edges(n, edges).expect("origin ids are in range")
    }

    pub fn lift_set(&self, local: &VertexSet) -> VertexSet {
        local.iter().map(|v| self.origin[v]).collect()
    }

    pub fn local_id(&self, original: usize) -> Option<usize> {
        self.origin.binary_search(&original).ok()
    }
}

pub fn induced(g: &Graph, s: &VertexSet) -> Subgraph {
    let origin = s.as_slice().to_vec();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in origin.iter().enumerate() {
        local[v] = i;
    }
    let adj = origin
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| local[w] != usize::MAX)
                .map(|&w| local[w])
                .collect()
        })
        .collect();
    Subgraph {
        graph: Graph::from_adjacency(adj),
        origin,
    }
}

/// True iff `g` contains no 4-cycle as a subgraph, i.e. no two distinct
/// vertices share two common neighbors.
pub fn is_c4_free(g: &Graph) -> bool {
    let n = g.n();
    let mut hits = vec![usize::MAX; n];
    for u in 0..n {
        for &a in g.neighbors(u) {
            for &w in g.neighbors(a) {
                if w == u {
                    continue;
                }
                if hits[w] == u {
                    return false;
                }
                hits[w] = u;
            }
        }
        // reset lazily: `hits[w] == u` is only true within this round
    }
    true
}

/// True iff `g` contains a cycle of exactly `len` vertices as a subgraph.
/// Exponential in `len`; intended for short cycles on sparse graphs.
pub fn has_cycle_of_length(g: &Graph, len: usize) -> bool {
    if len < 3 || len > g.n() {
        return false;
    }
    let mut on_path = vec![false; g.n()];
    (0..g.n()).any(|s| {
        on_path[s] = true;
        let found = extend_path(g, s, s, 1, len, &mut on_path);
        on_path[s] = false;
        found
    })
}

fn extend_path(g: &Graph, start: usize, u: usize, size: usize, len: usize, on_path: &mut [bool]) -> bool {
    if size == len {
        return g.has_edge(u, start);
    }
    for &w in g.neighbors(u) {
        // the start is the smallest vertex of the cycle
        if w <= start || on_path[w] {
            continue;
        }
        on_path[w] = true;
        let found = extend_path(g, start, w, size + 1, len, on_path);
        on_path[w] = false;
        if found {
            return true;
        }
    }
    false
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut stack = Vec::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// True iff the square of `h` equals `g` edge-for-edge.
pub fn check_square_root(h: &Graph, g: &Graph) -> bool {
    h.n() == g.n() && h.m() <= g.m() && square(h) == *g
}
