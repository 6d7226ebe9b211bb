//! Spanning containers: `l` internally disjoint `u`–`v` paths that together
//! visit every vertex.
//!
//! The construction is inductive. Small `l` use Hamiltonian paths and cycles,
//! mid-range `l` use [`general`], and `l` above `(n-k)(k-1)` use [`high`];
//! both recurse into classes, which are copies of `A(n-1,k-1)`. The induction
//! bottoms out at complete graphs and at stored tables for `A(4,2)`.

mod automorphism;
pub mod base;
mod cover;
mod general;
mod high;

pub use automorphism::automorphism_transport;
pub use base::{base_table_a42, base_table_a52, complete_graph_container};
pub use cover::disjoint_path_cover;

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::{Arrangement, ClassMap, Frame, Label, Vertex};
use crate::hampath::{union_path, Path, SearchBudget};

/// `l` paths from `u` to `v` in `graph`. Produced by [`container`]; checked by
/// the verify module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Container {
    graph: Arrangement,
    u: Vertex,
    v: Vertex,
    paths: Vec<Path>,
}

impl Container {
    pub fn new(graph: Arrangement, u: Vertex, v: Vertex, paths: Vec<Path>) -> Self {
        Container { graph, u, v, paths }
    }

    pub fn graph(&self) -> Arrangement {
        self.graph
    }

    pub fn u(&self) -> &Vertex {
        &self.u
    }

    pub fn v(&self) -> &Vertex {
        &self.v
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<Path> {
        self.paths
    }

    pub fn l(&self) -> usize {
        self.paths.len()
    }

    /// Image under a vertex map, typically an automorphism or a class lift.
    pub fn map(&self, graph: Arrangement, f: impl Fn(&Vertex) -> Vertex) -> Container {
        Container {
            graph,
            u: f(&self.u),
            v: f(&self.v),
            paths: self
                .paths
                .iter()
                .map(|p| Path::new(p.vertices().iter().map(&f).collect()))
                .collect(),
        }
    }

    /// The same container read from `v` to `u`.
    pub fn reversed(&self) -> Container {
        Container {
            graph: self.graph,
            u: self.v.clone(),
            v: self.u.clone(),
            paths: self.paths.iter().map(Path::reversed).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainerRequest {
    pub graph: Arrangement,
    pub u: Vertex,
    pub v: Vertex,
    pub l: usize,
}

impl ContainerRequest {
    pub fn new(graph: Arrangement, u: Vertex, v: Vertex, l: usize) -> Result<Self> {
        let req = ContainerRequest { graph, u, v, l };
        req.check()?;
        Ok(req)
    }

    fn check(&self) -> Result<()> {
        let g = self.graph;
        g.validate(&self.u)?;
        g.validate(&self.v)?;
        if self.u == self.v {
            return Err(Error::input(format!("endpoints coincide: {:?}", self.u)));
        }
        if g.k() > 1 && g.n() - g.k() < 2 {
            return Err(Error::construction(
                "excluded-family",
                format!(
                    "A({},{}) has n-k < 2: it is bipartite with equal sides, so same-side pairs have no Hamiltonian path",
                    g.n(),
                    g.k()
                ),
            ));
        }
        if self.l == 0 || self.l > g.degree() {
            return Err(Error::input(format!(
                "l={} outside 1..={} for A({},{})",
                self.l,
                g.degree(),
                g.n(),
                g.k()
            )));
        }
        Ok(())
    }
}

/// Spanning `l`-container between `req.u` and `req.v`, with the search budget
/// taken from the environment.
pub fn container(req: &ContainerRequest) -> Result<Container> {
    container_with(req, SearchBudget::from_env())
}

pub fn container_with(req: &ContainerRequest, budget: SearchBudget) -> Result<Container> {
    req.check()?;
    let paths = build(req.graph, &req.u, &req.v, req.l, budget)?;
    Ok(Container::new(req.graph, req.u.clone(), req.v.clone(), paths))
}

/// The recursive entry point. Inputs are trusted.
pub(crate) fn build(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let (n, k) = (g.n(), g.k());
    if k == 1 {
        return Ok(complete_graph_container(g, u, v, l)?.into_paths());
    }
    if l == 1 {
        let all: BTreeSet<Label> = g.labels().collect();
        let path = union_path(g, k - 1, &all, u, v, budget).map_err(|e| e.within("hamiltonian-path"))?;
        return Ok(vec![path]);
    }
    if l == 2 {
        return hamiltonian_cycle(g, u, v, budget).map_err(|e| e.within("hamiltonian-cycle"));
    }
    if (n, k) == (4, 2) {
        return Ok(base_table_a42(u, v, l)?.into_paths());
    }
    if l <= (n - k) * (k - 1) {
        general::build(g, u, v, l, budget)
    } else {
        high::build(g, u, v, l, budget)
    }
}

/// A Hamiltonian cycle through `u` and `v`, split at both into two paths.
fn hamiltonian_cycle(g: Arrangement, u: &Vertex, v: &Vertex, budget: SearchBudget) -> Result<Vec<Path>> {
    let w = g
        .neighbors(u)?
        .into_iter()
        .find(|w| w != v)
        .expect("degree is at least two");
    let all: BTreeSet<Label> = g.labels().collect();
    let path = union_path(g, g.k() - 1, &all, u, &w, budget)?;
    let vs = path.vertices();
    let at = vs.iter().position(|x| x == v).expect("Hamiltonian path visits v");
    let first = vs[..=at].to_vec();
    let mut second = vec![u.clone()];
    second.extend(vs[at..].iter().rev().cloned());
    Ok(vec![Path::new(first), Path::new(second)])
}

/// An `l`-container of the class `A^(p,label)` joining `u` and `v`, computed in
/// `A(n-1,k-1)` and lifted back.
pub(crate) fn class_container(
    g: Arrangement,
    p: usize,
    label: Label,
    u: &Vertex,
    v: &Vertex,
    l: usize,
    budget: SearchBudget,
) -> Result<Vec<Path>> {
    let map = ClassMap::new(g, p, label)?;
    let h = map.target();
    let inner = build(h, &map.project(u), &map.project(v), l, budget)?;
    Ok(lift_paths(&inner, |x| map.lift(x)))
}

pub(crate) fn lift_paths(paths: &[Path], f: impl Fn(&Vertex) -> Vertex) -> Vec<Path> {
    paths
        .iter()
        .map(|p| Path::new(p.vertices().iter().map(&f).collect()))
        .collect()
}

/// Runs a construction in a canonical frame and maps the result back.
pub(crate) fn in_frame(
    frame: &Frame,
    u: &Vertex,
    v: &Vertex,
    f: impl FnOnce(&Vertex, &Vertex) -> Result<Vec<Path>>,
) -> Result<Vec<Path>> {
    let paths = f(&frame.to_canon(u), &frame.to_canon(v))?;
    Ok(lift_paths(&paths, |x| frame.to_real(x)))
}

/// Container paths keyed by their vertex next to the far end `end`; the value
/// is the path without `end`. A direct edge is keyed by its start.
pub(crate) fn by_last_internal(paths: &[Path]) -> HashMap<Vertex, Vec<Vertex>> {
    paths
        .iter()
        .map(|p| {
            let vs = p.vertices();
            (vs[vs.len() - 2].clone(), vs[..vs.len() - 1].to_vec())
        })
        .collect()
}

/// Container paths keyed by their second vertex; the value is the path
/// without its first vertex.
pub(crate) fn by_first_internal(paths: &[Path]) -> HashMap<Vertex, Vec<Vertex>> {
    paths
        .iter()
        .map(|p| {
            let vs = p.vertices();
            (vs[1].clone(), vs[1..].to_vec())
        })
        .collect()
}

/// Removes and returns the entry for `key`, failing at `case` when absent.
pub(crate) fn take(map: &mut HashMap<Vertex, Vec<Vertex>>, key: &Vertex, case: &str) -> Result<Vec<Vertex>> {
    map.remove(key)
        .ok_or_else(|| Error::construction(case, format!("no container path through {key:?}")))
}

/// Concatenates vertex runs into one path.
pub(crate) fn join(parts: &[&[Vertex]]) -> Path {
    Path::new(parts.iter().flat_map(|p| p.iter().cloned()).collect())
}

/// Labels of `g` outside `excluded`, ascending.
pub(crate) fn labels_except(g: Arrangement, excluded: impl IntoIterator<Item = Label>) -> Vec<Label> {
    let ex: BTreeSet<Label> = excluded.into_iter().collect();
    g.labels().filter(|l| !ex.contains(l)).collect()
}

/// `[u] + mid + [v]`.
pub(crate) fn wrap(u: &Vertex, mid: &Path, v: &Vertex) -> Path {
    join(&[std::slice::from_ref(u), mid.vertices(), std::slice::from_ref(v)])
}
