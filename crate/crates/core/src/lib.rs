//! Minimal Ramsey graphs for cyclicity: exact decision procedures,
//! machine-checkable certificates, base-graph reduction, growth
//! constructions, and forest-of-cycles embeddings for the class of graphs
//! in which every 2-edge-colouring contains a monochromatic cycle.
//!
//! The membership theory is density-based: a graph is Ramsey for cyclicity
//! at level `r` exactly when some subgraph `H` has `(e(H)-1)/(v(H)-1) >= r`,
//! equivalently when its edges do not decompose into `r` forests
//! (Nash-Williams). Everything here is exact: sparsity runs through a
//! `(k,l)`-pebble game, densities through rational arithmetic, and every
//! verdict is cross-checkable against a brute-force colouring oracle at desk
//! scale.

pub mod coloring;
pub mod constructor;
pub mod cyclotree;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod oracle;
pub mod planarity;
pub mod reducer;
pub mod sparsity;
pub mod util;

pub use coloring::{Color, ColoringError, EdgeColoring};
pub use graph::{
    parse_graph, serialize_graph, Edge, Graph, GraphError, GraphFormat, GraphTag, NamedGraph,
    ParseError, StructuralReport,
};
