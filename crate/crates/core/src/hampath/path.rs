use std::collections::HashSet;

use crate::graph::{Arrangement, SubgraphView, Vertex};

/// An ordered vertex sequence. Construction code builds paths freely; validity
/// (distinct vertices, consecutive adjacency) is checked by [`Path::is_path_in`]
/// and by the verify module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path(Vec<Vertex>);

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<&Vertex> {
        self.0.first()
    }

    pub fn last(&self) -> Option<&Vertex> {
        self.0.last()
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().cloned().collect())
    }

    /// Interior vertices (everything but the two ends).
    pub fn interior(&self) -> &[Vertex] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    /// Distinct vertices with consecutive pairs adjacent in `g`.
    pub fn is_path_in(&self, g: &Arrangement) -> bool {
        let mut seen = HashSet::new();
        self.0.iter().all(|v| g.contains(v) && seen.insert(v)) && self.0.windows(2).all(|w| g.is_adjacent(&w[0], &w[1]))
    }

    /// Hamiltonian path of `view` from `u` to `v`.
    pub fn is_hamiltonian_in(&self, view: &SubgraphView, u: &Vertex, v: &Vertex) -> bool {
        self.first() == Some(u)
            && self.last() == Some(v)
            && self.is_path_in(&view.base())
            && self.0.iter().all(|x| view.contains(x))
            && self.0.windows(2).all(|w| view.has_edge(&w[0], &w[1]))
            && self.0.len() == view.len()
    }
}

impl From<Vec<Vertex>> for Path {
    fn from(v: Vec<Vertex>) -> Self {
        Path(v)
    }
}
