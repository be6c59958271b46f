//! Set splitting to "square of a girth-four graph".
//!
//! Given a ground set `u_1..u_n` and subsets `d_1..d_m`, [`build_instance`]
//! produces a graph on `n + 4m + 5` vertices whose square roots encode
//! valid splittings. Each subset vertex `D_j` carries a three-vertex tail
//! that pins its root neighbourhood to the element vertices of `d_j`
//! ([`tail_forced_neighbors`]); any root then yields a splitting
//! ([`extract_partition`]).

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{check_square_root, Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("subset {0} is empty")]
    EmptySubset(usize),
    #[error("subset {subset} mentions element {element}, ground set is 1..={n}")]
    ElementOutOfRange { subset: usize, element: usize, n: usize },
    #[error("vertices do not form a tail pattern: {0}")]
    PatternMismatch(String),
    #[error("the given graph is not a square root of the instance graph")]
    NotARoot,
    #[error("no partition splits every subset")]
    NoValidSplitting,
    #[error("exhaustive splitting search limited to {limit} elements, got {n}")]
    GroundSetTooLarge { n: usize, limit: usize },
}

/// Ground set `{1..n}` and a family of subsets (1-indexed elements).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSplittingInstance {
    pub n: usize,
    pub subsets: Vec<Vec<usize>>,
}

impl SetSplittingInstance {
    pub fn new(n: usize, subsets: Vec<Vec<usize>>) -> Result<Self, ReductionError> {
        let mut subsets = subsets;
        for (j, d) in subsets.iter_mut().enumerate() {
            d.sort_unstable();
            d.dedup();
            if d.is_empty() {
                return Err(ReductionError::EmptySubset(j + 1));
            }
            if let Some(&e) = d.iter().find(|&&e| e == 0 || e > n) {
                return Err(ReductionError::ElementOutOfRange {
                    subset: j + 1,
                    element: e,
                    n,
                });
            }
        }
        Ok(SetSplittingInstance { n, subsets })
    }

    /// Re-checks the invariants, e.g. after deserialization.
    pub fn validated(self) -> Result<Self, ReductionError> {
        SetSplittingInstance::new(self.n, self.subsets)
    }

    pub fn m(&self) -> usize {
        self.subsets.len()
    }

    /// Five elements, four subsets: `S = {u1..u5}`,
    /// `D = {{u1,u2,u3}, {u2,u5}, {u3,u4}, {u1,u4}}`.
    pub fn sample() -> Self {
        SetSplittingInstance::new(5, vec![vec![1, 2, 3], vec![2, 5], vec![3, 4], vec![1, 4]]).expect("valid")
    }
}

/// What a vertex of the reduction graph stands for. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Element(usize),
    Subset(usize),
    /// `Tail(j, k)` is the `k`-th tail vertex (`k` in 1..=3) of subset `j`.
    Tail(usize, usize),
    S1,
    S1Prime,
    S2,
    S2Prime,
    X,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Element(i) => write!(f, "U{i}"),
            Role::Subset(j) => write!(f, "D{j}"),
            Role::Tail(j, k) => write!(f, "D{j}^{k}"),
            Role::S1 => write!(f, "S1"),
            Role::S1Prime => write!(f, "S1'"),
            Role::S2 => write!(f, "S2"),
            Role::S2Prime => write!(f, "S2'"),
            Role::X => write!(f, "X"),
        }
    }
}

impl Serialize for Role {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Reduction graph plus the role of every vertex.
#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub source: SetSplittingInstance,
    pub graph: Graph,
    pub roles: Vec<Role>,
}

impl ReductionInstance {
    pub fn element(&self, i: usize) -> usize {
        i - 1
    }

    pub fn subset(&self, j: usize) -> usize {
        self.source.n + j - 1
    }

    pub fn tail(&self, j: usize, k: usize) -> usize {
        self.source.n + self.source.m() + 3 * (j - 1) + (k - 1)
    }

    fn partition_base(&self) -> usize {
        self.source.n + 4 * self.source.m()
    }

    pub fn vertex_of(&self, role: Role) -> usize {
        let base = self.partition_base();
        match role {
            Role::Element(i) => self.element(i),
            Role::Subset(j) => self.subset(j),
            Role::Tail(j, k) => self.tail(j, k),
            Role::S1 => base,
            Role::S1Prime => base + 1,
            Role::S2 => base + 2,
            Role::S2Prime => base + 3,
            Role::X => base + 4,
        }
    }

    /// Element vertices `U_i` with `u_i` in `d_j`.
    pub fn members(&self, j: usize) -> VertexSet {
        self.source.subsets[j - 1].iter().map(|&i| self.element(i)).collect()
    }
}

pub fn build_instance(ss: &SetSplittingInstance) -> Result<ReductionInstance, ReductionError> {
    let ss = ss.clone().validated()?;
    let (n, m) = (ss.n, ss.m());
    let mut roles: Vec<Role> = (1..=n).map(Role::Element).collect();
    roles.extend((1..=m).map(Role::Subset));
    roles.extend((1..=m).flat_map(|j| (1..=3).map(move |k| Role::Tail(j, k))));
    roles.extend([Role::S1, Role::S1Prime, Role::S2, Role::S2Prime, Role::X]);

    let mut ri = ReductionInstance {
        source: ss,
        graph: Graph::empty(roles.len()),
        roles,
    };
    let at = |r: Role| ri.vertex_of(r);
    let partition = [Role::S1, Role::S1Prime, Role::S2, Role::S2Prime, Role::X].map(at);
    let mut edges = Vec::new();

    for j in 1..=m {
        let (dj, t1, t2, t3) = (
            at(Role::Subset(j)),
            at(Role::Tail(j, 1)),
            at(Role::Tail(j, 2)),
            at(Role::Tail(j, 3)),
        );
        // tail
        edges.extend([(t3, t2), (t3, t1), (t2, t1), (t2, dj), (t1, dj)]);
        edges.extend(ri.members(j).iter().map(|u| (t1, u)));
        // subset vertex
        edges.extend(partition.iter().map(|&p| (dj, p)));
        edges.extend((1..=n).map(|i| (dj, at(Role::Element(i)))));
        for k in j + 1..=m {
            if !ri.members(j).intersection(&ri.members(k)).is_empty() {
                edges.push((dj, at(Role::Subset(k))));
            }
        }
    }
    for i in 1..=n {
        let ui = at(Role::Element(i));
        edges.extend(partition.iter().map(|&p| (ui, p)));
        edges.extend((i + 1..=n).map(|k| (ui, at(Role::Element(k)))));
    }
    let [s1, s1p, s2, s2p, x] = partition;
    edges.extend([
        (s1, x),
        (s1, s1p),
        (s1, s2p),
        (s2, x),
        (s2, s1p),
        (s2, s2p),
        (s1p, x),
        (s2p, x),
    ]);

    ri.graph = Graph::from_edges(ri.roles.len(), edges).expect("construction stays in range");
    Ok(ri)
}

/// For a tail pattern `a, b, c, d` (`N(a) = {b, c}`, `N(b) = {a, c, d}`,
/// `cd` an edge), the neighbours of `d` outside `{a, b, c}` in every square
/// root of `g`: they equal `N_G(c) \ {a, b, d}`.
pub fn tail_forced_neighbors(g: &Graph, a: usize, b: usize, c: usize, d: usize) -> Result<VertexSet, ReductionError> {
    let mismatch = |what: &str| Err(ReductionError::PatternMismatch(what.to_string()));
    if [a, b, c, d].iter().any(|&v| v >= g.n()) {
        return mismatch("vertex out of range");
    }
    if g.neighborhood(a) != VertexSet::from([b, c]) {
        return mismatch("the first vertex must have exactly the second and third as neighbours");
    }
    if g.neighborhood(b) != VertexSet::from([a, c, d]) {
        return mismatch("the second vertex must have exactly the other three as neighbours");
    }
    if !g.has_edge(c, d) {
        return mismatch("the third and fourth vertices must be adjacent");
    }
    Ok(g.neighborhood(c).difference(&VertexSet::from([a, b, d])))
}

/// Two blocks of 1-indexed elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub block1: Vec<usize>,
    pub block2: Vec<usize>,
}

impl Partition {
    pub fn from_block1(n: usize, block1: impl IntoIterator<Item = usize>) -> Self {
        let mut block1: Vec<usize> = block1.into_iter().collect();
        block1.sort_unstable();
        block1.dedup();
        let block2 = (1..=n).filter(|e| block1.binary_search(e).is_err()).collect();
        Partition { block1, block2 }
    }
}

/// True iff `p` partitions the ground set and every subset meets both blocks.
pub fn validate_splitting(ss: &SetSplittingInstance, p: &Partition) -> bool {
    let mut side = vec![0u8; ss.n + 1];
    for (blk, mark) in [(&p.block1, 1u8), (&p.block2, 2u8)] {
        for &e in blk {
            if e == 0 || e > ss.n || side[e] != 0 {
                return false;
            }
            side[e] = mark;
        }
    }
    if side[1..].contains(&0) {
        return false;
    }
    ss.subsets
        .iter()
        .all(|d| d.iter().any(|&e| side[e] == 1) && d.iter().any(|&e| side[e] == 2))
}

/// How a partition was read off a root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Elements whose vertex is a root neighbour of the given partition vertex.
    NeighborsOfS1,
    NeighborsOfS2,
    NeighborsOfS1Prime,
    NeighborsOfS2Prime,
    /// Elements strictly closer to `S1` than to `S2` in the root.
    DistanceSplit,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extraction {
    pub partition: Partition,
    pub strategy: Strategy,
}

pub const EXHAUSTIVE_LIMIT: usize = 20;

/// Reads a valid splitting off any square root `h` of the instance graph.
pub fn extract_partition(ri: &ReductionInstance, h: &Graph) -> Result<Extraction, ReductionError> {
    if !check_square_root(h, &ri.graph) {
        return Err(ReductionError::NotARoot);
    }
    let n = ri.source.n;
    let element_side = |s: Role| {
        let sv = ri.vertex_of(s);
        Partition::from_block1(n, (1..=n).filter(|&i| h.has_edge(sv, ri.element(i))))
    };
    let mut candidates = vec![
        (element_side(Role::S1), Strategy::NeighborsOfS1),
        (element_side(Role::S2), Strategy::NeighborsOfS2),
        (element_side(Role::S1Prime), Strategy::NeighborsOfS1Prime),
        (element_side(Role::S2Prime), Strategy::NeighborsOfS2Prime),
    ];
    let d1 = distances(h, ri.vertex_of(Role::S1));
    let d2 = distances(h, ri.vertex_of(Role::S2));
    let closer = (1..=n).filter(|&i| d1[ri.element(i)] < d2[ri.element(i)]);
    candidates.push((Partition::from_block1(n, closer), Strategy::DistanceSplit));

    if let Some((partition, strategy)) = candidates.into_iter().find(|(p, _)| validate_splitting(&ri.source, p)) {
        return Ok(Extraction { partition, strategy });
    }
    if n > EXHAUSTIVE_LIMIT {
        return Err(ReductionError::GroundSetTooLarge {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    (0u32..1 << n)
        .map(|mask| Partition::from_block1(n, (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0)))
        .find(|p| validate_splitting(&ri.source, p))
        .map(|partition| Extraction {
            partition,
            strategy: Strategy::Exhaustive,
        })
        .ok_or(ReductionError::NoValidSplitting)
}

fn distances(h: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; h.n()];
    let mut queue = std::collections::VecDeque::from([s]);
    dist[s] = 0;
    while let Some(u) = queue.pop_front() {
        for &w in h.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}
