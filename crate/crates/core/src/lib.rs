//! Recognition, partitioning and counting of split graphs and of graphs with
//! `chi(G) + chi(complement G) = n + 1`, all from degree sequences.

pub mod bijection;
pub mod canon;
pub mod census;
pub mod codec;
pub mod degree;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod sweep;

pub use canon::{canonical, isomorphic, CanonicalCode};
pub use codec::{emit_graph6, parse_edge_list, parse_graph6};
pub use degree::{classify, profile, ClassLabel, DegreeProfile, SplitKind};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use partition::{
    abc_partition, all_ks_partitions, recognized_abc_partition, AbcPartition, KsKind, KsPartition,
    NgKind,
};
