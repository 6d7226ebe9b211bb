//! The arrangement graph `A(n,k)`.
//!
//! Vertices are k-tuples of distinct labels drawn from `1..=n`; two vertices are
//! adjacent when they differ in exactly one position. The graph is never
//! materialized: neighbors, views and counts are computed on demand.
//!
//! Positions are 0-based throughout the API. Labels are 1-based.

mod symmetry;
mod view;

pub use symmetry::{ClassMap, Frame};
pub use view::SubgraphView;

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Label = u8;

/// A vertex of `A(n,k)`: a sequence of `k` distinct labels.
///
/// The derived ordering is lexicographic over the label sequence, which is the
/// tie-break order used by every construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(SmallVec<[Label; 8]>);

impl Vertex {
    /// Wraps a label sequence without validation; see [`Arrangement::validate`].
    pub fn new(labels: &[Label]) -> Self {
        Vertex(SmallVec::from_slice(labels))
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Label at a 0-based position.
    pub fn at(&self, pos: usize) -> Label {
        self.0[pos]
    }

    pub fn contains(&self, label: Label) -> bool {
        self.0.contains(&label)
    }

    pub fn position_of(&self, label: Label) -> Option<usize> {
        self.0.iter().position(|&l| l == label)
    }

    /// Copy with the label at `pos` set to `label`.
    pub fn with(&self, pos: usize, label: Label) -> Vertex {
        let mut out = self.clone();
        out.0[pos] = label;
        out
    }

    /// The s-swap neighbor: `old` replaced by `new` at its position.
    ///
    /// Panics if `old` is absent; the caller guarantees `new` is not present.
    pub fn replaced(&self, old: Label, new: Label) -> Vertex {
        let pos = self
            .position_of(old)
            .unwrap_or_else(|| panic!("label {old} not in {self:?}"));
        debug_assert!(!self.contains(new), "label {new} already in {self:?}");
        self.with(pos, new)
    }

    /// Number of positions where the two label sequences differ.
    pub fn hamming(&self, other: &Vertex) -> usize {
        self.0.iter().zip(other.0.iter()).filter(|(a, b)| a != b).count()
    }

    /// Text form: labels joined without separator when all fit in one digit
    /// for an `n <= 9` graph, comma-separated otherwise.
    pub fn to_text(&self, n: usize) -> String {
        if n <= 9 {
            self.0.iter().map(|l| char::from(b'0' + l)).collect()
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            parts.join(",")
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.iter().copied().max().unwrap_or(0) as usize;
        f.write_str(&self.to_text(if n <= 9 { 9 } else { n }))
    }
}

/// Falling factorial `a (a-1) ... (a-b+1)`, i.e. `a!/(a-b)!`.
pub fn falling(a: usize, b: usize) -> u128 {
    if b > a {
        return 0;
    }
    ((a - b + 1)..=a).fold(1u128, |acc, x| acc * x as u128)
}

/// The arrangement graph `A(n,k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrangement {
    n: usize,
    k: usize,
}

impl Arrangement {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::input(format!("n must be at least 2, got {n}")));
        }
        if k < 1 || k >= n {
            return Err(Error::input(format!("k must satisfy 1 <= k < n, got n={n}, k={k}")));
        }
        if n > Label::MAX as usize {
            return Err(Error::input(format!("n={n} exceeds the label range")));
        }
        Ok(Arrangement { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `n!/(n-k)!`
    pub fn vertex_count(&self) -> u128 {
        falling(self.n, self.k)
    }

    /// `k(n-k)`
    pub fn degree(&self) -> usize {
        self.k * (self.n - self.k)
    }

    pub fn edge_count(&self) -> u128 {
        self.vertex_count() * self.degree() as u128 / 2
    }

    /// Size of every cross-edge set between two classes at a fixed position:
    /// `(n-2)!/(n-k-1)!`.
    pub fn cross_edge_count(&self) -> u128 {
        falling(self.n - 2, self.k - 1)
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        1..=(self.n as Label)
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.validate(v).is_ok()
    }

    pub fn validate(&self, v: &Vertex) -> Result<()> {
        if v.len() != self.k {
            return Err(Error::input(format!(
                "vertex {v:?} has {} labels, expected {}",
                v.len(),
                self.k
            )));
        }
        for (i, &l) in v.labels().iter().enumerate() {
            if l == 0 || l as usize > self.n {
                return Err(Error::input(format!(
                    "vertex {v:?} has label {l} outside 1..={}",
                    self.n
                )));
            }
            if v.labels()[..i].contains(&l) {
                return Err(Error::input(format!("vertex {v:?} repeats label {l}")));
            }
        }
        Ok(())
    }

    pub fn is_adjacent(&self, a: &Vertex, b: &Vertex) -> bool {
        a.len() == b.len() && a.hamming(b) == 1
    }

    /// All neighbors of `v`, in lexicographic order. Exactly `k(n-k)` of them.
    pub fn neighbors(&self, v: &Vertex) -> Result<Vec<Vertex>> {
        self.validate(v)?;
        let mut out: Vec<Vertex> = self.neighbors_unchecked(v).collect();
        out.sort();
        Ok(out)
    }

    /// Neighbors of a vertex already known to be valid, grouped by position.
    pub(crate) fn neighbors_unchecked<'a>(&'a self, v: &'a Vertex) -> impl Iterator<Item = Vertex> + 'a {
        (0..self.k).flat_map(move |pos| {
            self.labels()
                .filter(move |&x| !v.contains(x))
                .map(move |x| v.with(pos, x))
        })
    }

    /// Checked s-swap: replace `old` by `new`.
    pub fn swap(&self, v: &Vertex, old: Label, new: Label) -> Result<Vertex> {
        self.validate(v)?;
        if !v.contains(old) {
            return Err(Error::input(format!("label {old} does not occur in {v:?}")));
        }
        if new == 0 || new as usize > self.n {
            return Err(Error::input(format!("label {new} outside 1..={}", self.n)));
        }
        if v.contains(new) {
            return Err(Error::input(format!("label {new} already occurs in {v:?}")));
        }
        Ok(v.replaced(old, new))
    }

    /// Edges between class `(pos, i)` and class `(pos, j)`, each returned as
    /// `(endpoint in class i, endpoint in class j)` in lexicographic order of the first.
    pub fn cross_edges(&self, pos: usize, i: Label, j: Label) -> Result<Vec<(Vertex, Vertex)>> {
        if i == j {
            return Err(Error::input(format!("cross edges need distinct labels, got {i} twice")));
        }
        self.check_position(pos)?;
        self.check_label(i)?;
        self.check_label(j)?;
        let view = SubgraphView::class(*self, pos, i)?;
        Ok(view
            .vertices()
            .filter(|x| !x.contains(j))
            .map(|x| {
                let y = x.with(pos, j);
                (x, y)
            })
            .collect())
    }

    pub(crate) fn check_position(&self, pos: usize) -> Result<()> {
        if pos >= self.k {
            return Err(Error::input(format!("position {pos} outside 0..{}", self.k)));
        }
        Ok(())
    }

    pub(crate) fn check_label(&self, l: Label) -> Result<()> {
        if l == 0 || l as usize > self.n {
            return Err(Error::input(format!("label {l} outside 1..={}", self.n)));
        }
        Ok(())
    }

    /// Every vertex, in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        SubgraphView::full(*self).vertices()
    }

    /// Bijective rank in `0..n!/(n-k)!`, consistent with lexicographic order.
    pub fn rank(&self, v: &Vertex) -> u128 {
        let mut used = vec![false; self.n + 1];
        let mut rank = 0u128;
        for (i, &l) in v.labels().iter().enumerate() {
            let smaller_free = (1..l as usize).filter(|&x| !used[x]).count() as u128;
            rank += smaller_free * falling(self.n - 1 - i, self.k - 1 - i);
            used[l as usize] = true;
        }
        rank
    }

    pub fn unrank(&self, mut rank: u128) -> Vertex {
        let mut free: Vec<Label> = self.labels().collect();
        let mut out = SmallVec::new();
        for i in 0..self.k {
            let block = falling(self.n - 1 - i, self.k - 1 - i);
            let idx = (rank / block) as usize;
            rank %= block;
            out.push(free.remove(idx));
        }
        Vertex(out)
    }

    pub fn format_vertex(&self, v: &Vertex) -> String {
        v.to_text(self.n)
    }

    /// Parses the text form: contiguous digits when `n <= 9`, comma-separated
    /// otherwise (commas are also accepted for small `n`).
    pub fn parse_vertex(&self, s: &str) -> Result<Vertex> {
        let s = s.trim();
        let labels: Vec<Label> = if s.contains(',') || self.n > 9 {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<Label>()
                        .map_err(|_| Error::input(format!("bad label {p:?} in vertex {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as Label)
                        .ok_or_else(|| Error::input(format!("bad label {c:?} in vertex {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        let v = Vertex::new(&labels);
        self.validate(&v)?;
        Ok(v)
    }

    /// Graphviz export; each undirected edge once. Limited to `n <= 5`.
    pub fn to_dot(&self) -> Result<String> {
        if self.n > 5 {
            return Err(Error::input(format!(
                "DOT export is limited to n <= 5, got n={}",
                self.n
            )));
        }
        let mut out = format!("graph A_{}_{} {{\n", self.n, self.k);
        let verts: Vec<Vertex> = self.vertices().collect();
        for v in &verts {
            out.push_str(&format!("  \"{}\";\n", self.format_vertex(v)));
        }
        for v in &verts {
            for w in self.neighbors_unchecked(v) {
                if *v < w {
                    out.push_str(&format!(
                        "  \"{}\" -- \"{}\";\n",
                        self.format_vertex(v),
                        self.format_vertex(&w)
                    ));
                }
            }
        }
        out.push_str("}\n");
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, k: usize) -> Arrangement {
        Arrangement::new(n, k).unwrap()
    }

    fn vx(g: &Arrangement, s: &str) -> Vertex {
        g.parse_vertex(s).unwrap()
    }

    fn texts(g: &Arrangement, vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|v| g.format_vertex(v)).collect()
    }

    #[test]
    fn neighbors_of_12_in_a42() {
        let a = g(4, 2);
        let ns = a.neighbors(&vx(&a, "12")).unwrap();
        let mut t = texts(&a, &ns);
        t.sort();
        assert_eq!(t, vec!["13", "14", "32", "42"]);
    }

    #[test]
    fn complete_graph_neighbors() {
        let a = g(3, 1);
        assert_eq!(texts(&a, &a.neighbors(&vx(&a, "1")).unwrap()), vec!["2", "3"]);
    }

    #[test]
    fn a53_degree_six() {
        let a = g(5, 3);
        assert_eq!(a.neighbors(&vx(&a, "123")).unwrap().len(), 6);
    }

    #[test]
    fn invalid_vertices_rejected() {
        let a = g(4, 2);
        assert!(a.neighbors(&Vertex::new(&[1, 1])).unwrap_err().is_input());
        assert!(a.neighbors(&Vertex::new(&[1, 5])).unwrap_err().is_input());
        assert!(a.neighbors(&Vertex::new(&[1, 2, 3])).unwrap_err().is_input());
        assert!(a.parse_vertex("11").is_err());
        assert!(Arrangement::new(3, 3).is_err());
        assert!(Arrangement::new(1, 0).is_err());
    }

    #[test]
    fn swap_examples() {
        let a = g(4, 2);
        assert_eq!(a.format_vertex(&a.swap(&vx(&a, "12"), 2, 4).unwrap()), "14");
        assert_eq!(a.format_vertex(&a.swap(&vx(&a, "12"), 1, 3).unwrap()), "32");
        let b = g(5, 3);
        assert_eq!(b.format_vertex(&b.swap(&vx(&b, "123"), 2, 5).unwrap()), "153");
        assert!(a.swap(&vx(&a, "12"), 3, 4).unwrap_err().is_input());
        assert!(a.swap(&vx(&a, "12"), 1, 2).unwrap_err().is_input());
        assert!(a.swap(&vx(&a, "12"), 1, 5).unwrap_err().is_input());
    }

    #[test]
    fn cross_edges_examples() {
        let a = g(4, 2);
        let e = a.cross_edges(1, 1, 2).unwrap();
        assert_eq!(e.len(), 2);
        for (x, y) in &e {
            assert_eq!(x.at(1), 1);
            assert_eq!(y.at(1), 2);
            assert_eq!(x.at(0), y.at(0));
        }
        assert_eq!(g(5, 3).cross_edges(2, 1, 2).unwrap().len(), 6);
        assert!(a.cross_edges(1, 2, 2).unwrap_err().is_input());
    }

    #[test]
    fn text_form_round_trip() {
        let a = g(12, 3);
        let v = a.parse_vertex("10,2,7").unwrap();
        assert_eq!(a.format_vertex(&v), "10,2,7");
        let b = g(5, 2);
        assert_eq!(b.format_vertex(&b.parse_vertex("1,5").unwrap()), "15");
    }

    #[test]
    fn rank_is_lexicographic_bijection() {
        for (n, k) in [(4, 2), (5, 3), (6, 1), (5, 4)] {
            let a = g(n, k);
            let all: Vec<Vertex> = a.vertices().collect();
            assert_eq!(all.len() as u128, a.vertex_count());
            for (i, v) in all.iter().enumerate() {
                assert_eq!(a.rank(v), i as u128);
                assert_eq!(&a.unrank(i as u128), v);
            }
        }
    }

    #[test]
    fn dot_export() {
        let a = g(3, 1);
        let dot = a.to_dot().unwrap();
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(g(6, 2).to_dot().is_err());
        assert_eq!(g(4, 2).to_dot().unwrap().matches(" -- ").count(), 24);
    }
}
