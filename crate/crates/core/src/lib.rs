//! Square roots of graphs under girth constraints.
//!
//! * [`root7`]: good characterization and unique reconstruction of squares
//!   of graphs with girth at least seven.
//! * [`root6`]: polynomial recognition of squares of graphs with girth at
//!   least six.
//! * [`reduction`]: instances showing that girth-four roots are hard to
//!   find, built from set splitting.
//! * [`oracle`]: exhaustive root search used to cross-check everything.

mod bitset;
pub mod cliques;
pub mod generators;
pub mod graph;
pub mod io;
pub mod iso;
pub mod oracle;
pub mod reduction;
pub mod root6;
pub mod root7;
mod verdict;

pub use cliques::{enumerate_maximal_cliques, max_weight_clique, CliqueError, CliqueList};
pub use graph::{
    check_square_root, connected_components, girth, induced, is_c4_free, power, square, Girth, Graph, GraphError,
    Subgraph, VertexSet,
};
pub use iso::is_isomorphic;
pub use verdict::{Reason, RootResult};
