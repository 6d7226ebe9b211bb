//! Spanning containers in arrangement graphs `A(n,k)`.
//!
//! Vertices of `A(n,k)` are sequences of `k` distinct labels from `1..=n`; two
//! vertices are adjacent when they differ in exactly one position. A spanning
//! `l`-container between `u` and `v` is a set of `l` internally disjoint
//! `u`–`v` paths covering every vertex. [`container`] builds one for every
//! `1 <= l <= k(n-k)` and [`verify::validate`] checks one.

pub mod cli;
pub mod containers;
pub mod error;
pub mod graph;
pub mod hampath;
pub mod json;
pub mod verify;

pub use containers::{container, container_with, Container, ContainerRequest};
pub use error::{Error, Result};
pub use graph::{Arrangement, ClassMap, Frame, Label, SubgraphView, Vertex};
pub use hampath::{ham_path_search, ham_path_union, Path, SearchBudget, SearchOutcome};
