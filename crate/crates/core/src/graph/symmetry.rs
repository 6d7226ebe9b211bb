use super::{Arrangement, Label, Vertex};
use crate::error::{Error, Result};

/// An automorphism of `A(n,k)` built from a label permutation and a position
/// permutation acting together. Constructions work in a canonical coordinate
/// frame and map their output back through [`Frame::to_real`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    /// `labels[c - 1]` is the real label of canonical label `c`.
    labels: Vec<Label>,
    inv_labels: Vec<Label>,
    /// `positions[j]` is the real position of canonical position `j`.
    positions: Vec<usize>,
}

impl Frame {
    pub fn identity(g: Arrangement) -> Self {
        Frame::new(g.labels().collect(), (0..g.k()).collect()).expect("identity frame")
    }

    pub fn new(labels: Vec<Label>, positions: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut inv_labels = vec![0; n];
        for (c, &r) in labels.iter().enumerate() {
            if r == 0 || r as usize > n || inv_labels[r as usize - 1] != 0 {
                return Err(Error::input(format!("{labels:?} is not a label permutation")));
            }
            inv_labels[r as usize - 1] = (c + 1) as Label;
        }
        let mut seen = vec![false; positions.len()];
        for &p in &positions {
            if p >= positions.len() || seen[p] {
                return Err(Error::input(format!("{positions:?} is not a position permutation")));
            }
            seen[p] = true;
        }
        Ok(Frame {
            labels,
            inv_labels,
            positions,
        })
    }

    /// Position-only frame: canonical position `j` is real position `positions[j]`.
    pub fn positions_only(g: Arrangement, positions: Vec<usize>) -> Result<Self> {
        Frame::new(g.labels().collect(), positions)
    }

    /// Label-only frame: canonical label `c` is real label `labels[c-1]`.
    pub fn labels_only(g: Arrangement, labels: Vec<Label>) -> Result<Self> {
        Frame::new(labels, (0..g.k()).collect())
    }

    pub fn real_label(&self, canon: Label) -> Label {
        self.labels[canon as usize - 1]
    }

    pub fn canon_label(&self, real: Label) -> Label {
        self.inv_labels[real as usize - 1]
    }

    pub fn to_real(&self, c: &Vertex) -> Vertex {
        let mut out = c.clone();
        for (j, &p) in self.positions.iter().enumerate() {
            out = out.with(p, self.real_label(c.at(j)));
        }
        out
    }

    pub fn to_canon(&self, r: &Vertex) -> Vertex {
        let mut out = r.clone();
        for (j, &p) in self.positions.iter().enumerate() {
            out = out.with(j, self.canon_label(r.at(p)));
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.labels.iter().enumerate().all(|(i, &l)| l as usize == i + 1)
            && self.positions.iter().enumerate().all(|(i, &p)| p == i)
    }
}

/// The isomorphism between the class `A^(pos,label)` of `A(n,k)` and `A(n-1,k-1)`:
/// delete position `pos` and relabel `1..=n` minus `label` order-preservingly onto
/// `1..=n-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassMap {
    base: Arrangement,
    pos: usize,
    label: Label,
}

impl ClassMap {
    pub fn new(base: Arrangement, pos: usize, label: Label) -> Result<Self> {
        base.check_position(pos)?;
        base.check_label(label)?;
        if base.k() < 2 {
            return Err(Error::input("classes of A(n,1) are single vertices"));
        }
        Ok(ClassMap { base, pos, label })
    }

    pub fn base(&self) -> Arrangement {
        self.base
    }

    pub fn target(&self) -> Arrangement {
        Arrangement::new(self.base.n() - 1, self.base.k() - 1).expect("class of a valid graph")
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn label(&self) -> Label {
        self.label
    }

    pub fn project_label(&self, l: Label) -> Label {
        debug_assert_ne!(l, self.label);
        if l > self.label {
            l - 1
        } else {
            l
        }
    }

    pub fn lift_label(&self, l: Label) -> Label {
        if l >= self.label {
            l + 1
        } else {
            l
        }
    }

    pub fn project(&self, v: &Vertex) -> Vertex {
        debug_assert_eq!(v.at(self.pos), self.label, "{v:?} outside class");
        let labels: Vec<Label> = v
            .labels()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != self.pos)
            .map(|(_, &l)| self.project_label(l))
            .collect();
        Vertex::new(&labels)
    }

    pub fn lift(&self, w: &Vertex) -> Vertex {
        let mut labels: Vec<Label> = w.labels().iter().map(|&l| self.lift_label(l)).collect();
        labels.insert(self.pos, self.label);
        Vertex::new(&labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SubgraphView;

    #[test]
    fn frame_round_trip_and_adjacency() {
        let g = Arrangement::new(5, 3).unwrap();
        let f = Frame::new(vec![3, 5, 1, 2, 4], vec![2, 0, 1]).unwrap();
        for v in g.vertices() {
            let r = f.to_real(&v);
            assert!(g.contains(&r));
            assert_eq!(f.to_canon(&r), v);
            for w in g.neighbors(&v).unwrap() {
                assert!(g.is_adjacent(&r, &f.to_real(&w)));
            }
        }
    }

    #[test]
    fn class_map_is_an_isomorphism() {
        for (n, k) in [(4, 2), (5, 2), (5, 3), (4, 3)] {
            let g = Arrangement::new(n, k).unwrap();
            for pos in 0..k {
                for label in g.labels() {
                    let m = ClassMap::new(g, pos, label).unwrap();
                    let h = m.target();
                    let class: Vec<Vertex> = SubgraphView::class(g, pos, label).unwrap().vertices().collect();
                    assert_eq!(class.len() as u128, h.vertex_count());
                    for a in &class {
                        let pa = m.project(a);
                        assert!(h.contains(&pa));
                        assert_eq!(&m.lift(&pa), a);
                        for b in &class {
                            assert_eq!(g.is_adjacent(a, b), h.is_adjacent(&pa, &m.project(b)));
                        }
                    }
                }
            }
        }
    }
}
