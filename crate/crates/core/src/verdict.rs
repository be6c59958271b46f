//! Outcome of a square-root recognition.

use std::fmt;

use serde::Serialize;

use crate::graph::{Girth, Graph};

/// Why a recognizer refused.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Reason {
    #[serde(rename = "TOO_MANY_CLIQUES")]
    TooManyCliques,
    #[serde(rename = "COND_I")]
    CondI,
    #[serde(rename = "COND_II")]
    CondII,
    #[serde(rename = "COND_III")]
    CondIII,
    #[serde(rename = "COND_IV")]
    CondIV,
    #[serde(rename = "COND_V")]
    CondV,
    /// The reconstructed candidate failed the final verification. Indicates
    /// a bug; never expected in practice.
    #[serde(rename = "SQUARE_CHECK_FAILED")]
    SquareCheckFailed,
    #[serde(rename = "C4_FOUND")]
    C4Found,
    #[serde(rename = "NO_CANDIDATE")]
    NoCandidate,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::TooManyCliques => "TOO_MANY_CLIQUES",
            Reason::CondI => "COND_I",
            Reason::CondII => "COND_II",
            Reason::CondIII => "COND_III",
            Reason::CondIV => "COND_IV",
            Reason::CondV => "COND_V",
            Reason::SquareCheckFailed => "SQUARE_CHECK_FAILED",
            Reason::C4Found => "C4_FOUND",
            Reason::NoCandidate => "NO_CANDIDATE",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootResult {
    Yes { root: Graph, girth: Girth },
    No { reason: Reason },
}

impl RootResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, RootResult::Yes { .. })
    }

    pub fn root(&self) -> Option<&Graph> {
        match self {
            RootResult::Yes { root, .. } => Some(root),
            RootResult::No { .. } => None,
        }
    }

    pub fn girth(&self) -> Option<Girth> {
        match self {
            RootResult::Yes { girth, .. } => Some(*girth),
            RootResult::No { .. } => None,
        }
    }

    pub fn reason(&self) -> Option<Reason> {
        match self {
            RootResult::Yes { .. } => None,
            RootResult::No { reason } => Some(*reason),
        }
    }
}

/// Runs `recognize` on every connected component and glues the component
/// roots back together. The first refusing component decides the answer.
pub(crate) fn per_component<F>(g: &Graph, mut recognize: F) -> RootResult
where
    F: FnMut(&Graph) -> Result<Graph, Reason>,
{
    use crate::graph::{connected_components, girth, induced};

    let mut edges = Vec::new();
    for comp in connected_components(g) {
        let sub = induced(g, &comp);
        match recognize(&sub.graph) {
            Ok(local) => edges.extend(local.edges().map(|(u, v)| (sub.origin[u], sub.origin[v]))),
            Err(reason) => return RootResult::No { reason },
        }
    }
    let root = Graph::from_edges(g.n(), edges).expect("lifted edges are in range");
    let girth = girth(&root);
    RootResult::Yes { root, girth }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accessors() {
        let yes = RootResult::Yes {
            root: Graph::empty(1),
            girth: Girth::Infinite,
        };
        assert!(yes.is_yes());
        assert_eq!(yes.girth(), Some(Girth::Infinite));
        assert_eq!(yes.reason(), None);
        let no = RootResult::No { reason: Reason::CondII };
        assert_eq!(no.reason().map(Reason::code), Some("COND_II"));
        assert!(no.root().is_none());
    }
}
