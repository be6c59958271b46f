//! Squares of graphs with girth at least six.
//!
//! Two reductions do the work. Fixing the root neighbourhood `U` of one
//! vertex `v` determines a `{C3, C5}`-free root completely: for a root edge
//! `xy`, `N_H(y) = N_G(y) ∩ (N_G[x] \ N_H(x))`, so neighbourhoods can be
//! propagated breadth-first from `v` ([`root_with_neighborhood`]). Fixing one root edge
//! `xy` leaves at most four choices for `U`, read off the (at most two)
//! components of the common neighbourhood `C_xy` ([`root_with_edge`]).
//! Trying every edge at a minimum-degree vertex decides the problem
//! ([`recognize_girth6`]).

use std::collections::VecDeque;

use thiserror::Error;

use crate::generators::star;
use crate::graph::{
    check_square_root, connected_components, girth, has_cycle_of_length, induced, is_c4_free, Graph, VertexSet,
};
use crate::verdict::{per_component, Reason, RootResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("prescribed neighbourhood must be non-empty")]
    EmptyNeighborhood,
    #[error("{u} is not a neighbour of {v}")]
    NotANeighbor { v: usize, u: usize },
    #[error("{0} {1} is not an edge")]
    NotAnEdge(usize, usize),
}

/// Graph, vertex and prescribed root neighbourhood of that vertex.
#[derive(Clone, Debug)]
pub struct NeighborhoodInstance<'a> {
    g: &'a Graph,
    v: usize,
    u_set: VertexSet,
}

impl<'a> NeighborhoodInstance<'a> {
    pub fn new(g: &'a Graph, v: usize, u_set: VertexSet) -> Result<Self, InstanceError> {
        if v >= g.n() {
            return Err(InstanceError::VertexOutOfRange(v));
        }
        if u_set.is_empty() {
            return Err(InstanceError::EmptyNeighborhood);
        }
        if let Some(u) = u_set.iter().find(|&u| u >= g.n() || !g.has_edge(v, u)) {
            return Err(InstanceError::NotANeighbor { v, u });
        }
        Ok(NeighborhoodInstance { g, v, u_set })
    }

    pub fn vertex(&self) -> usize {
        self.v
    }

    pub fn prescribed(&self) -> &VertexSet {
        &self.u_set
    }
}

/// Result of neighbourhood propagation before the final square check.
#[derive(Clone, Debug)]
pub struct Propagation {
    pub h: Graph,
    /// BFS parent of every reached vertex; `None` for the start vertex and
    /// for unreached vertices.
    pub parent: Vec<Option<usize>>,
    pub reached: Vec<bool>,
}

/// Breadth-first propagation of root neighbourhoods from the instance
/// vertex. Uses the closed neighbourhood `N_G[parent]`; the only extra
/// vertex this admits is the parent itself, whose edge is already present.
pub fn propagate(inst: &NeighborhoodInstance<'_>) -> Propagation {
    let g = inst.g;
    let n = g.n();
    let mut adj: Vec<VertexSet> = vec![VertexSet::new(); n];
    let mut parent = vec![None; n];
    let mut reached = vec![false; n];
    let mut queue = VecDeque::new();

    reached[inst.v] = true;
    for u in inst.u_set.iter() {
        adj[inst.v].insert(u);
        adj[u].insert(inst.v);
        reached[u] = true;
        parent[u] = Some(inst.v);
        queue.push_back(u);
    }

    let mut closed = vec![false; n];
    while let Some(u) = queue.pop_front() {
        let p = parent[u].expect("queued vertices have parents");
        closed[p] = true;
        for &w in g.neighbors(p) {
            closed[w] = true;
        }
        for w in adj[p].iter() {
            closed[w] = false;
        }
        let targets: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| closed[w]).collect();
        closed[p] = false;
        for &w in g.neighbors(p) {
            closed[w] = false;
        }

        for w in targets {
            if adj[u].insert(w) {
                adj[w].insert(u);
            }
            if !reached[w] {
                reached[w] = true;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }

    let h = Graph::from_adjacency(adj.into_iter().map(VertexSet::into_vec).collect());
    Propagation { h, parent, reached }
}

/// The unique `{C3, C5}`-free square root `H` with `N_H(v) = U`, if any.
pub fn root_with_neighborhood(inst: &NeighborhoodInstance<'_>) -> Option<Graph> {
    let h = propagate(inst).h;
    let ok = check_square_root(&h, inst.g) && !has_cycle_of_length(&h, 3) && !has_cycle_of_length(&h, 5);
    ok.then_some(h)
}

/// Graph plus an edge that must be a root edge.
#[derive(Clone, Debug)]
pub struct EdgeInstance<'a> {
    g: &'a Graph,
    x: usize,
    y: usize,
    common: VertexSet,
}

impl<'a> EdgeInstance<'a> {
    pub fn new(g: &'a Graph, x: usize, y: usize) -> Result<Self, InstanceError> {
        for v in [x, y] {
            if v >= g.n() {
                return Err(InstanceError::VertexOutOfRange(v));
            }
        }
        if !g.has_edge(x, y) {
            return Err(InstanceError::NotAnEdge(x, y));
        }
        let common = g.neighborhood(x).intersection(&g.neighborhood(y));
        Ok(EdgeInstance { g, x, y, common })
    }

    /// `C_xy = N_G(x) ∩ N_G(y)`.
    pub fn common_neighborhood(&self) -> &VertexSet {
        &self.common
    }

    /// Components of `G[C_xy]`, ordered by smallest member.
    pub fn common_components(&self) -> Vec<VertexSet> {
        let sub = induced(self.g, &self.common);
        connected_components(&sub.graph)
            .iter()
            .map(|c| sub.lift_set(c))
            .collect()
    }

    /// Neighbourhood instances to try, in the fixed order
    /// `(x, A+y), (x, B+y), (y, A+x), (y, B+x)`; `None` if `G[C_xy]` has
    /// more than two components.
    pub fn candidates(&self) -> Option<Vec<(usize, VertexSet)>> {
        let (x, y) = (self.x, self.y);
        let comps = self.common_components();
        let parts: Vec<VertexSet> = match comps.len() {
            0 => vec![VertexSet::new()],
            1 | 2 => comps,
            _ => return None,
        };
        let mut out = Vec::new();
        for part in &parts {
            out.push((x, part.with(y)));
        }
        for part in &parts {
            out.push((y, part.with(x)));
        }
        Some(out)
    }
}

/// Root of girth at least six containing the edge `xy`, if one exists.
/// `Err` carries [`Reason::C4Found`] when some candidate failed only the
/// 4-cycle filter, [`Reason::NoCandidate`] otherwise.
pub fn root_with_edge(inst: &EdgeInstance<'_>) -> Result<Graph, Reason> {
    let g = inst.g;
    if g.n() <= 2 {
        return Ok(g.clone());
    }
    let candidates = inst.candidates().ok_or(Reason::NoCandidate)?;
    let mut saw_c4 = false;
    for (v, u_set) in candidates {
        let nb = NeighborhoodInstance::new(g, v, u_set).expect("candidates lie in N(v)");
        if let Some(h) = root_with_neighborhood(&nb) {
            if is_c4_free(&h) {
                return Ok(h);
            }
            saw_c4 = true;
        }
    }
    Err(if saw_c4 { Reason::C4Found } else { Reason::NoCandidate })
}

fn recognize_component(g: &Graph) -> Result<Graph, Reason> {
    let n = g.n();
    if n <= 2 || g.is_complete() {
        return Ok(star(n));
    }
    let x = (0..n).min_by_key(|&v| g.degree(v)).expect("non-empty");
    let mut reason = Reason::NoCandidate;
    for &y in g.neighbors(x) {
        let inst = EdgeInstance::new(g, x, y).expect("y is a neighbour of x");
        match root_with_edge(&inst) {
            Ok(h) => {
                return if girth(&h).at_least(6) && check_square_root(&h, g) {
                    Ok(h)
                } else {
                    Err(Reason::SquareCheckFailed)
                };
            }
            Err(Reason::C4Found) => reason = Reason::C4Found,
            Err(_) => {}
        }
    }
    Err(reason)
}

/// Decides whether `g` is the square of a graph of girth at least six and
/// returns such a root.
pub fn recognize_girth6(g: &Graph) -> RootResult {
    per_component(g, recognize_component)
}
