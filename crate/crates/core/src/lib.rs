//! Embeddings of wheel-like networks (wheels, fans, friendship, windmill and
//! star graphs) into interconnection-network hosts.
//!
//! The crate builds guest and host families, constructs the embeddings that
//! attain the dilation, congestion and wirelength lower bounds for these
//! guests, evaluates the three metrics exactly, and certifies optimality
//! with exhaustive oracles and exact hamiltonicity checks.

pub mod bounds;
pub mod cli;
pub mod distance;
pub mod dot;
pub mod embedding;
pub mod error;
pub mod families;
pub mod graph;
pub mod hamiltonian;
pub mod oracle;

pub use distance::{all_pairs_distances, radius_diameter, shells, status_and_median, DistanceTable, Medians, Shells};
pub use embedding::{evaluate, EmbeddingMap, EmbeddingMetrics, TreeHost, WheelLike};
pub use error::{Error, Result};
pub use families::{FamilyKind, FamilySpec};
pub use graph::{Edge, Graph, Vertex};
