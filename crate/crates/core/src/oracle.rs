//! Exhaustive square-root search.
//!
//! Every square root of `g` is a spanning subgraph of `g`, so the search
//! decides, edge by edge, whether each edge of `g` belongs to the root.
//! After every decision a propagation pass forces whatever the decisions
//! so far imply:
//!
//! * two vertices that are not adjacent in `g` may not share a root
//!   neighbour;
//! * an edge of `g` that is not a root edge needs a common root neighbour
//!   of its endpoints;
//! * cycle constraints are checked incrementally.
//!
//! With pruning enabled two structural rules are added: for girth at least
//! six the closed root neighbourhood of a vertex of root degree two or more
//! is a maximal clique of `g`, and the tail pattern (a vertex `a` with
//! `N(a) = {b, c}`, `N(b) = {a, c, d}`, `cd` an edge) fixes the root
//! neighbours of `d` outside the tail.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::cliques::enumerate_maximal_cliques;
use crate::graph::{check_square_root, girth, has_cycle_of_length, Girth, Graph, VertexSet};

pub const MAX_VERTICES: usize = 128;

/// Maximal cliques kept for the neighbourhood rule; beyond this the rule is
/// skipped.
const CLIQUE_CAP_PER_VERTEX: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("graph has {n} vertices, the oracle handles at most {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("node budget exhausted after {} roots", partial.roots.len())]
    BudgetExceeded { partial: RootSearch },
}

#[derive(Clone, Debug)]
pub struct RootQuery {
    graph: Graph,
    girth_min: Option<usize>,
    girth_exact: Option<usize>,
    forbidden_cycles: BTreeSet<usize>,
    fixed_neighborhoods: Vec<(usize, VertexSet)>,
    limit: usize,
    budget: u64,
    pruning: bool,
}

impl RootQuery {
    pub fn new(graph: Graph) -> Self {
        RootQuery {
            graph,
            girth_min: None,
            girth_exact: None,
            forbidden_cycles: BTreeSet::new(),
            fixed_neighborhoods: Vec::new(),
            limit: usize::MAX,
            budget: u64::MAX,
            pruning: true,
        }
    }

    pub fn girth_min(mut self, k: usize) -> Self {
        self.girth_min = Some(k);
        self
    }

    pub fn girth_exact(mut self, k: usize) -> Self {
        self.girth_exact = Some(k);
        self
    }

    pub fn forbid<I: IntoIterator<Item = usize>>(mut self, lengths: I) -> Self {
        self.forbidden_cycles.extend(lengths);
        self
    }

    /// Requires `N_H(v) = set` in every root returned.
    pub fn fix_neighborhood(mut self, v: usize, set: VertexSet) -> Self {
        self.fixed_neighborhoods.push((v, set));
        self
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    /// Maximum number of search nodes.
    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = nodes;
        self
    }

    /// Turns off the clique and tail rules. Results must not change.
    pub fn without_pruning(mut self) -> Self {
        self.pruning = false;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn min_girth(&self) -> usize {
        self.girth_exact.or(self.girth_min).unwrap_or(3)
    }

    fn validate(&self) -> Result<(), OracleError> {
        let invalid = |s: &str| Err(OracleError::InvalidQuery(s.to_string()));
        let n = self.graph.n();
        if n > MAX_VERTICES {
            return Err(OracleError::TooLarge { n, bound: MAX_VERTICES });
        }
        if self.girth_min.is_some() && self.girth_exact.is_some() {
            return invalid("girth_min and girth_exact are mutually exclusive");
        }
        if self.girth_exact.is_some_and(|k| k < 3) {
            return invalid("girth_exact must be at least 3");
        }
        if self.limit == 0 {
            return invalid("limit must be at least 1");
        }
        if self.forbidden_cycles.iter().any(|&l| l < 3) {
            return invalid("cycle lengths start at 3");
        }
        for (v, set) in &self.fixed_neighborhoods {
            if *v >= n {
                return invalid(&format!("vertex {v} out of range"));
            }
            if let Some(u) = set.iter().find(|&u| !self.graph.has_edge(*v, u)) {
                return invalid(&format!("{u} is not a neighbour of {v}"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootSearch {
    /// Sorted by edge list.
    pub roots: Vec<Graph>,
    pub exhausted: bool,
    pub nodes: u64,
}

pub fn find_roots(q: &RootQuery) -> Result<RootSearch, OracleError> {
    q.validate()?;
    let mut s = Search::new(q);
    let outcome = s.run();
    let mut roots = s.roots;
    roots.sort_by_cached_key(|h| h.edges().collect::<Vec<_>>());
    let result = RootSearch {
        roots,
        exhausted: outcome == Outcome::Done,
        nodes: s.nodes,
    };
    match outcome {
        Outcome::OutOfBudget => Err(OracleError::BudgetExceeded { partial: result }),
        _ => Ok(result),
    }
}

/// Number of square roots of `g` per girth, without constraints.
pub fn count_roots_by_girth(g: &Graph, budget: u64) -> Result<BTreeMap<Girth, usize>, OracleError> {
    let found = find_roots(&RootQuery::new(g.clone()).budget(budget))?;
    let mut out = BTreeMap::new();
    for h in &found.roots {
        *out.entry(girth(h)).or_insert(0) += 1;
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Undecided,
    In,
    Out,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Outcome {
    Done,
    LimitReached,
    OutOfBudget,
}

struct Conflict;

type Mask = u128;

fn bit(v: usize) -> Mask {
    1 << v
}

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

struct Tail {
    d: usize,
    tail: Mask,
    forced: Mask,
}

struct Search<'q> {
    q: &'q RootQuery,
    n: usize,
    gadj: Vec<Mask>,
    edges: Vec<(usize, usize)>,
    index: Vec<Vec<usize>>,
    state: Vec<State>,
    hin: Vec<Mask>,
    hposs: Vec<Mask>,
    trail: Vec<usize>,
    min_girth: usize,
    forbidden: Vec<usize>,
    cliques: Option<Vec<Mask>>,
    tails: Vec<Tail>,
    roots: Vec<Graph>,
    nodes: u64,
}

impl<'q> Search<'q> {
    fn new(q: &'q RootQuery) -> Self {
        let g = &q.graph;
        let n = g.n();
        let gadj: Vec<Mask> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | bit(u)))
            .collect();
        let edges: Vec<_> = g.edges().collect();
        let mut index = vec![vec![usize::MAX; n]; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u][v] = i;
            index[v][u] = i;
        }
        let min_girth = q.min_girth();
        let forbidden = q.forbidden_cycles.iter().copied().filter(|&l| l >= min_girth).collect();

        let cliques = (q.pruning && min_girth >= 6)
            .then(|| enumerate_maximal_cliques(g, Some(CLIQUE_CAP_PER_VERTEX * n.max(1))))
            .filter(|list| list.complete)
            .map(|list| {
                list.cliques
                    .iter()
                    .map(|c| c.iter().fold(0, |m, v| m | bit(v)))
                    .collect()
            });
        let tails = if q.pruning { find_tails(g, &gadj) } else { Vec::new() };

        Search {
            q,
            n,
            hposs: gadj.clone(),
            gadj,
            state: vec![State::Undecided; edges.len()],
            edges,
            index,
            hin: vec![0; n],
            trail: Vec::new(),
            min_girth,
            forbidden,
            cliques,
            tails,
            roots: Vec::new(),
            nodes: 0,
        }
    }

    fn run(&mut self) -> Outcome {
        if self.seed().is_err() {
            return Outcome::Done;
        }
        self.descend()
    }

    /// Decisions implied by the query itself.
    fn seed(&mut self) -> Result<(), Conflict> {
        for (v, set) in &self.q.fixed_neighborhoods {
            let want = set.iter().fold(0, |m, u| m | bit(u));
            self.fix_neighbors(*v, self.gadj[*v], want)?;
        }
        for i in 0..self.tails.len() {
            let Tail { d, tail, forced } = self.tails[i];
            if forced & !self.gadj[d] != 0 {
                return Err(Conflict);
            }
            self.fix_neighbors(d, self.gadj[d] & !tail, forced)?;
        }
        self.propagate()
    }

    /// Among the `scope` neighbours of `v`, exactly `want` are root neighbours.
    fn fix_neighbors(&mut self, v: usize, scope: Mask, want: Mask) -> Result<(), Conflict> {
        for u in bits(scope) {
            let e = self.index[v][u];
            if want & bit(u) != 0 {
                self.set_in(e)?;
            } else {
                self.set_out(e)?;
            }
        }
        Ok(())
    }

    fn descend(&mut self) -> Outcome {
        self.nodes += 1;
        if self.nodes > self.q.budget {
            return Outcome::OutOfBudget;
        }
        let Some(e) = self.state.iter().position(|&s| s == State::Undecided) else {
            self.leaf();
            return if self.roots.len() >= self.q.limit {
                Outcome::LimitReached
            } else {
                Outcome::Done
            };
        };
        for include in [true, false] {
            let mark = self.trail.len();
            let ok = if include { self.set_in(e) } else { self.set_out(e) };
            if ok.and_then(|_| self.propagate()).is_ok() {
                let outcome = self.descend();
                if outcome != Outcome::Done {
                    return outcome;
                }
            }
            self.undo(mark);
        }
        Outcome::Done
    }

    fn leaf(&mut self) {
        let h = Graph::from_edges(
            self.n,
            (0..self.edges.len())
                .filter(|&e| self.state[e] == State::In)
                .map(|e| self.edges[e]),
        )
        .expect("root edges come from g");
        if !check_square_root(&h, &self.q.graph) {
            return;
        }
        let gh = girth(&h);
        let girth_ok = match self.q.girth_exact {
            Some(k) => gh == Girth::Finite(k),
            None => gh.at_least(self.min_girth),
        };
        if girth_ok && !self.q.forbidden_cycles.iter().any(|&l| has_cycle_of_length(&h, l)) {
            self.roots.push(h);
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("above mark");
            let (u, v) = self.edges[e];
            match self.state[e] {
                State::In => {
                    self.hin[u] &= !bit(v);
                    self.hin[v] &= !bit(u);
                }
                State::Out => {
                    self.hposs[u] |= bit(v);
                    self.hposs[v] |= bit(u);
                }
                State::Undecided => unreachable!("only decided edges are trailed"),
            }
            self.state[e] = State::Undecided;
        }
    }

    fn set_out(&mut self, e: usize) -> Result<(), Conflict> {
        match self.state[e] {
            State::Out => return Ok(()),
            State::In => return Err(Conflict),
            State::Undecided => {}
        }
        let (u, v) = self.edges[e];
        self.state[e] = State::Out;
        self.hposs[u] &= !bit(v);
        self.hposs[v] &= !bit(u);
        self.trail.push(e);
        Ok(())
    }

    fn set_in(&mut self, e: usize) -> Result<(), Conflict> {
        match self.state[e] {
            State::In => return Ok(()),
            State::Out => return Err(Conflict),
            State::Undecided => {}
        }
        let (u, v) = self.edges[e];
        if self.closes_bad_cycle(u, v) {
            return Err(Conflict);
        }
        // every root neighbour of u ends up at distance <= 2 from v
        for (a, b) in [(u, v), (v, u)] {
            let bad = self.hposs[a] & !self.gadj[b] & !bit(b);
            if bad & self.hin[a] != 0 {
                return Err(Conflict);
            }
            for w in bits(bad) {
                self.set_out(self.index[a][w])?;
            }
        }
        self.state[e] = State::In;
        self.hin[u] |= bit(v);
        self.hin[v] |= bit(u);
        self.hposs[u] |= bit(v);
        self.hposs[v] |= bit(u);
        self.trail.push(e);
        Ok(())
    }

    /// Would a root edge `uv` close a cycle that the query rules out?
    fn closes_bad_cycle(&self, u: usize, v: usize) -> bool {
        if self.min_girth > 3 && self.within(u, v, self.min_girth - 2) {
            return true;
        }
        self.forbidden.iter().any(|&l| self.path_of_length(u, v, l - 1, bit(u)))
    }

    /// Root distance from `u` to `v` is at most `d`.
    fn within(&self, u: usize, v: usize, d: usize) -> bool {
        let (mut seen, mut frontier) = (bit(u), bit(u));
        for _ in 0..d {
            let next = bits(frontier).fold(0, |m, x| m | self.hin[x]) & !seen;
            if next & bit(v) != 0 {
                return true;
            }
            if next == 0 {
                return false;
            }
            seen |= next;
            frontier = next;
        }
        false
    }

    /// A simple root path from `u` to `v` with exactly `len` edges avoiding
    /// `visited`.
    fn path_of_length(&self, u: usize, v: usize, len: usize, visited: Mask) -> bool {
        if len == 1 {
            return self.hin[u] & bit(v) != 0;
        }
        bits(self.hin[u] & !visited & !bit(v)).any(|w| self.path_of_length(w, v, len - 1, visited | bit(w)))
    }

    fn propagate(&mut self) -> Result<(), Conflict> {
        loop {
            let mark = self.trail.len();
            for e in 0..self.edges.len() {
                let (x, y) = self.edges[e];
                let support = self.hposs[x] & self.hposs[y];
                match self.state[e] {
                    State::In => {}
                    State::Out => {
                        if support == 0 {
                            return Err(Conflict);
                        }
                        if support.count_ones() == 1 {
                            let w = support.trailing_zeros() as usize;
                            self.set_in(self.index[x][w])?;
                            self.set_in(self.index[y][w])?;
                        }
                    }
                    State::Undecided => {
                        if support == 0 {
                            self.set_in(e)?;
                        } else if self.closes_bad_cycle(x, y) {
                            self.set_out(e)?;
                        }
                    }
                }
            }
            if self.cliques.is_some() {
                self.clique_rule()?;
            }
            if self.trail.len() == mark {
                return Ok(());
            }
        }
    }

    /// With girth at least six, `N_H[v]` is a maximal clique of `g` once `v`
    /// has two root neighbours.
    fn clique_rule(&mut self) -> Result<(), Conflict> {
        for v in 0..self.n {
            if self.hin[v].count_ones() < 2 {
                continue;
            }
            let must = self.hin[v] | bit(v);
            let may = self.hposs[v] | bit(v);
            let cliques = self.cliques.as_ref().expect("rule enabled");
            let mut fits = cliques.iter().filter(|&&c| c & must == must && c & !may == 0);
            let Some(&first) = fits.next() else {
                return Err(Conflict);
            };
            if fits.next().is_none() {
                self.fix_neighbors(v, self.hposs[v], first & !bit(v))?;
            }
        }
        Ok(())
    }
}

fn find_tails(g: &Graph, gadj: &[Mask]) -> Vec<Tail> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        let &[p, r] = g.neighbors(a) else { continue };
        for (b, c) in [(p, r), (r, p)] {
            if g.degree(b) != 3 || !g.has_edge(b, c) {
                continue;
            }
            let Some(d) = g.neighbors(b).iter().copied().find(|&x| x != a && x != c) else {
                continue;
            };
            if !g.has_edge(c, d) {
                continue;
            }
            let tail = bit(a) | bit(b) | bit(c);
            out.push(Tail {
                d,
                tail,
                forced: gadj[c] & !tail & !bit(d),
            });
        }
    }
    out
}
