//! Squares of graphs with girth at least seven.
//!
//! Such squares have a good characterization in terms of their maximal
//! cliques and *forced* edges (edges lying in two or more maximal cliques).
//! A connected, non-complete `G` is such a square iff, with `F` the graph of
//! forced edges and `V_F` its non-isolated vertices:
//!
//! 1. every vertex outside `V_F` lies in exactly one maximal clique,
//! 2. every forced edge lies in exactly two maximal cliques,
//! 3. any two forced edges sharing a vertex lie in a common maximal clique,
//! 4. for every maximal clique `Q`, `F[Q ∩ V_F]` is a star,
//! 5. `F` is connected with girth at least seven.
//!
//! The root is then rebuilt from star centers and is unique up to
//! isomorphism. A square of such a graph has at most `n` maximal cliques,
//! which bounds the enumeration.

use crate::cliques::{enumerate_maximal_cliques, CliqueList};
use crate::generators::star;
use crate::graph::{check_square_root, connected_components, girth, induced, is_bipartite, Graph, VertexSet};
use crate::verdict::{per_component, Reason, RootResult};

/// Forced edges of a graph: edges contained in at least two maximal cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedSubgraph {
    /// Forced edges over the full vertex set.
    pub f: Graph,
    /// Endpoints of forced edges.
    pub support: VertexSet,
    /// For each forced edge `(u, v)`, `u < v`, the indices of the maximal
    /// cliques containing it.
    pub incidence: Vec<((usize, usize), Vec<usize>)>,
}

/// Which family of roots the conditions characterize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootFamily {
    /// Roots of girth at least seven.
    GirthSeven,
    /// Bipartite roots without 4- and 6-cycles.
    BipartiteC4C6Free,
}

pub fn forced_edges(g: &Graph, cliques: &CliqueList) -> ForcedSubgraph {
    let membership = cliques.membership(g.n());
    let mut incidence = Vec::new();
    for (u, v) in g.edges() {
        let shared: Vec<usize> = membership[u]
            .iter()
            .copied()
            .filter(|q| cliques.cliques[*q].contains(v))
            .collect();
        if shared.len() >= 2 {
            incidence.push(((u, v), shared));
        }
    }
    let f = Graph::from_edges(g.n(), incidence.iter().map(|(e, _)| *e)).expect("subgraph of g");
    let support = (0..g.n()).filter(|&v| f.degree(v) > 0).collect();
    ForcedSubgraph { f, support, incidence }
}

/// Center of `F[s]` if it is a star (at least two vertices). For a
/// two-vertex star both vertices are centers; the smaller is returned.
fn star_center(f: &Graph, s: &VertexSet) -> Option<usize> {
    if s.len() < 2 {
        return None;
    }
    let inner_degree = |v: usize| f.neighbors(v).iter().filter(|&&w| s.contains(w)).count();
    let degrees: Vec<usize> = s.iter().map(inner_degree).collect();
    let edges: usize = degrees.iter().sum::<usize>() / 2;
    if edges != s.len() - 1 {
        return None;
    }
    s.iter().zip(&degrees).find(|(_, &d)| d == s.len() - 1).map(|(v, _)| v)
}

/// First violated condition, in the fixed order 1..5; `Ok` if all hold.
/// Expects a connected, non-complete `g` and its complete clique list.
pub fn check_conditions(
    g: &Graph,
    cliques: &CliqueList,
    fs: &ForcedSubgraph,
    family: RootFamily,
) -> Result<(), Reason> {
    let membership = cliques.membership(g.n());

    if (0..g.n()).any(|v| !fs.support.contains(v) && membership[v].len() != 1) {
        return Err(Reason::CondI);
    }

    if fs.incidence.iter().any(|(_, qs)| qs.len() != 2) {
        return Err(Reason::CondII);
    }

    for v in fs.support.iter() {
        let nb = fs.f.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                let common = membership[v]
                    .iter()
                    .any(|&q| cliques.cliques[q].contains(a) && cliques.cliques[q].contains(b));
                if !common {
                    return Err(Reason::CondIII);
                }
            }
        }
    }

    for q in &cliques.cliques {
        if star_center(&fs.f, &q.intersection(&fs.support)).is_none() {
            return Err(Reason::CondIV);
        }
    }

    let core = induced(&fs.f, &fs.support).graph;
    let connected = connected_components(&core).len() == 1;
    let shape_ok = match family {
        RootFamily::GirthSeven => girth(&core).at_least(7),
        RootFamily::BipartiteC4C6Free => is_bipartite(&core) && girth(&core).at_least(7),
    };
    if !(connected && shape_ok) {
        return Err(Reason::CondV);
    }
    Ok(())
}

/// Candidate roots from the star centers, in trial order. There are two
/// candidates only when a forced edge sits between two 2-vertex stars, where
/// either endpoint may serve as the center.
fn reconstruction_candidates(g: &Graph, cliques: &CliqueList, fs: &ForcedSubgraph) -> Vec<Graph> {
    let trace = |q: usize| cliques.cliques[q].intersection(&fs.support);
    // (clique, center) pairs
    let mut fixed: Vec<(usize, usize)> = Vec::new();
    let mut ambiguous: Vec<(usize, usize, usize, usize)> = Vec::new();

    for &((x, y), ref qs) in &fs.incidence {
        let (mut big, mut small) = (qs[0], qs[1]);
        if trace(big).len() < trace(small).len() {
            std::mem::swap(&mut big, &mut small);
        }
        let big_trace = trace(big);
        if big_trace.len() == 2 {
            ambiguous.push((big, small, x, y));
            continue;
        }
        let c = star_center(&fs.f, &big_trace).expect("condition 4 holds");
        let (cx, cy) = if c == x { (x, y) } else { (y, x) };
        fixed.push((big, cx));
        fixed.push((small, cy));
    }

    let assemble = |swap: bool| {
        let mut edges = Vec::new();
        let chosen = ambiguous.iter().flat_map(|&(big, small, x, y)| {
            if swap {
                [(big, y), (small, x)]
            } else {
                [(big, x), (small, y)]
            }
        });
        for (q, c) in fixed.iter().copied().chain(chosen) {
            edges.extend(cliques.cliques[q].iter().filter(|&w| w != c).map(|w| (c, w)));
        }
        Graph::from_edges(g.n(), edges).expect("subgraph of g")
    };

    if ambiguous.is_empty() {
        vec![assemble(false)]
    } else {
        vec![assemble(false), assemble(true)]
    }
}

/// Rebuilds the root from star centers. When an edge between two 2-vertex
/// stars makes the center choice ambiguous, the first choice whose square
/// reproduces `g` is returned.
pub fn reconstruct_root7(g: &Graph, cliques: &CliqueList, fs: &ForcedSubgraph) -> Graph {
    let candidates = reconstruction_candidates(g, cliques, fs);
    candidates
        .iter()
        .find(|h| check_square_root(h, g))
        .unwrap_or(&candidates[0])
        .clone()
}

fn root_is_acceptable(h: &Graph, g: &Graph, family: RootFamily) -> bool {
    let shape = match family {
        RootFamily::GirthSeven => girth(h).at_least(7),
        RootFamily::BipartiteC4C6Free => is_bipartite(h) && girth(h).at_least(7),
    };
    shape && check_square_root(h, g)
}

fn recognize_component(g: &Graph, family: RootFamily) -> Result<Graph, Reason> {
    let n = g.n();
    if n <= 2 || g.is_complete() {
        return Ok(star(n));
    }
    let cliques = enumerate_maximal_cliques(g, Some(n));
    if !cliques.complete {
        return Err(Reason::TooManyCliques);
    }
    let fs = forced_edges(g, &cliques);
    check_conditions(g, &cliques, &fs, family)?;
    reconstruction_candidates(g, &cliques, &fs)
        .into_iter()
        .find(|h| root_is_acceptable(h, g, family))
        .ok_or(Reason::SquareCheckFailed)
}

/// Decides whether `g` is the square of a graph of girth at least seven and
/// returns such a root. Runs in `O(n^2 m)` per component.
pub fn recognize_root7(g: &Graph) -> RootResult {
    per_component(g, |c| recognize_component(c, RootFamily::GirthSeven))
}

/// Same pipeline for roots that are bipartite without 4- and 6-cycles.
pub fn recognize_bipartite_c4c6free(g: &Graph) -> RootResult {
    per_component(g, |c| recognize_component(c, RootFamily::BipartiteC4C6Free))
}
