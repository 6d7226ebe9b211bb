use std::collections::{BTreeSet, HashSet};

use super::{Arrangement, Label, Vertex};
use crate::error::{Error, Result};

/// A restriction of `A(n,k)`: vertices whose label at each pinned position lies in
/// the pinned label set, minus optional vertex and edge faults.
///
/// A single pin `(p, {i})` is the class `A^(p,i)`, isomorphic to `A(n-1,k-1)`;
/// a pin `(p, I)` is the union of the classes in `I`. Pins on distinct positions
/// compose into nested decompositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphView {
    base: Arrangement,
    pins: Vec<(usize, BTreeSet<Label>)>,
    removed_vertices: HashSet<Vertex>,
    removed_edges: HashSet<(Vertex, Vertex)>,
}

fn edge_key(a: &Vertex, b: &Vertex) -> (Vertex, Vertex) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

impl SubgraphView {
    pub fn full(base: Arrangement) -> Self {
        SubgraphView {
            base,
            pins: Vec::new(),
            removed_vertices: HashSet::new(),
            removed_edges: HashSet::new(),
        }
    }

    /// The class of vertices whose label at `pos` is `label`.
    pub fn class(base: Arrangement, pos: usize, label: Label) -> Result<Self> {
        SubgraphView::full(base).pin(pos, [label])
    }

    /// The union of classes at `pos` over `labels`.
    pub fn union(base: Arrangement, pos: usize, labels: impl IntoIterator<Item = Label>) -> Result<Self> {
        SubgraphView::full(base).pin(pos, labels)
    }

    pub fn pin(mut self, pos: usize, labels: impl IntoIterator<Item = Label>) -> Result<Self> {
        self.base.check_position(pos)?;
        if self.pins.iter().any(|(p, _)| *p == pos) {
            return Err(Error::input(format!("position {pos} is already pinned")));
        }
        let set: BTreeSet<Label> = labels.into_iter().collect();
        for &l in &set {
            self.base.check_label(l)?;
        }
        self.pins.push((pos, set));
        self.pins.sort_by_key(|(p, _)| *p);
        Ok(self)
    }

    pub fn remove_vertex(&mut self, v: &Vertex) -> Result<()> {
        if !self.in_region(v) {
            return Err(Error::input(format!("removed vertex {v:?} lies outside the view")));
        }
        self.removed_vertices.insert(v.clone());
        Ok(())
    }

    pub fn remove_edge(&mut self, a: &Vertex, b: &Vertex) -> Result<()> {
        if !self.in_region(a) || !self.in_region(b) {
            return Err(Error::input(format!("removed edge {a:?}-{b:?} lies outside the view")));
        }
        if !self.base.is_adjacent(a, b) {
            return Err(Error::input(format!("{a:?} and {b:?} are not adjacent")));
        }
        self.removed_edges.insert(edge_key(a, b));
        Ok(())
    }

    pub fn without_vertices<'a>(mut self, vs: impl IntoIterator<Item = &'a Vertex>) -> Result<Self> {
        for v in vs {
            self.remove_vertex(v)?;
        }
        Ok(self)
    }

    pub fn base(&self) -> Arrangement {
        self.base
    }

    pub fn pins(&self) -> &[(usize, BTreeSet<Label>)] {
        &self.pins
    }

    pub fn removed_vertices(&self) -> &HashSet<Vertex> {
        &self.removed_vertices
    }

    pub fn removed_edges(&self) -> &HashSet<(Vertex, Vertex)> {
        &self.removed_edges
    }

    /// Valid vertex satisfying every pin, ignoring vertex faults.
    pub fn in_region(&self, v: &Vertex) -> bool {
        self.base.contains(v) && self.pins.iter().all(|(p, set)| set.contains(&v.at(*p)))
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.in_region(v) && !self.removed_vertices.contains(v)
    }

    pub fn has_edge(&self, a: &Vertex, b: &Vertex) -> bool {
        self.contains(a)
            && self.contains(b)
            && self.base.is_adjacent(a, b)
            && !self.removed_edges.contains(&edge_key(a, b))
    }

    /// Neighbors of `v` inside the view, in lexicographic order.
    pub fn neighbors(&self, v: &Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .base
            .neighbors_unchecked(v)
            .filter(|w| self.has_edge(v, w))
            .collect();
        out.sort();
        out
    }

    fn allowed(&self, pos: usize, label: Label) -> bool {
        match self.pins.iter().find(|(p, _)| *p == pos) {
            Some((_, set)) => set.contains(&label),
            None => true,
        }
    }

    /// The view's vertices in lexicographic order.
    pub fn vertices(&self) -> std::vec::IntoIter<Vertex> {
        let k = self.base.k();
        let n = self.base.n();
        let mut out = Vec::new();
        let mut cur = vec![0 as Label; k];
        let mut used = vec![false; n + 1];
        self.fill(0, &mut cur, &mut used, &mut out);
        out.into_iter()
    }

    fn fill(&self, pos: usize, cur: &mut Vec<Label>, used: &mut Vec<bool>, out: &mut Vec<Vertex>) {
        if pos == cur.len() {
            let v = Vertex::new(cur);
            if !self.removed_vertices.contains(&v) {
                out.push(v);
            }
            return;
        }
        for l in 1..=(self.base.n() as Label) {
            if used[l as usize] || !self.allowed(pos, l) {
                continue;
            }
            used[l as usize] = true;
            cur[pos] = l;
            self.fill(pos + 1, cur, used, out);
            used[l as usize] = false;
        }
    }

    pub fn len(&self) -> usize {
        self.vertices().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::falling;

    fn texts(g: &Arrangement, it: impl Iterator<Item = Vertex>) -> Vec<String> {
        it.map(|v| g.format_vertex(&v)).collect()
    }

    #[test]
    fn single_class_of_a42() {
        let g = Arrangement::new(4, 2).unwrap();
        let view = SubgraphView::class(g, 1, 1).unwrap();
        assert_eq!(texts(&g, view.vertices()), vec!["21", "31", "41"]);
    }

    #[test]
    fn full_pin_is_whole_graph() {
        let g = Arrangement::new(4, 2).unwrap();
        let view = SubgraphView::union(g, 1, [1, 2, 3, 4]).unwrap();
        assert_eq!(view.len(), 12);
    }

    #[test]
    fn removed_vertex_is_dropped() {
        let g = Arrangement::new(4, 2).unwrap();
        let mut view = SubgraphView::class(g, 1, 1).unwrap();
        view.remove_vertex(&g.parse_vertex("21").unwrap()).unwrap();
        assert_eq!(texts(&g, view.vertices()), vec!["31", "41"]);
        assert!(view.remove_vertex(&g.parse_vertex("12").unwrap()).is_err());
    }

    #[test]
    fn repeated_pin_position_rejected() {
        let g = Arrangement::new(5, 3).unwrap();
        let view = SubgraphView::class(g, 2, 1).unwrap();
        assert!(view.pin(2, [3]).is_err());
    }

    #[test]
    fn removed_edge_hides_adjacency() {
        let g = Arrangement::new(4, 2).unwrap();
        let a = g.parse_vertex("12").unwrap();
        let b = g.parse_vertex("13").unwrap();
        let mut view = SubgraphView::full(g);
        assert!(view.has_edge(&a, &b));
        view.remove_edge(&b, &a).unwrap();
        assert!(!view.has_edge(&a, &b));
        assert_eq!(view.neighbors(&a).len(), 3);
        assert!(view.remove_edge(&a, &g.parse_vertex("34").unwrap()).is_err());
    }

    #[test]
    fn nested_pins_count() {
        let g = Arrangement::new(6, 3).unwrap();
        let view = SubgraphView::class(g, 2, 4).unwrap().pin(0, [1]).unwrap();
        assert_eq!(view.len() as u128, falling(4, 1));
        assert!(view.vertices().all(|v| v.at(2) == 4 && v.at(0) == 1));
    }
}
