//! Validation of candidate containers and exhaustive oracles for small graphs.
//!
//! Validators read raw label sequences, so hand-edited or corrupted files are
//! judged on what they contain rather than on what a constructor promised.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::containers::Container;
use crate::error::{Error, Result};
use crate::graph::{Arrangement, Label, SubgraphView, Vertex};

/// Largest graph the container oracle accepts.
pub const CONTAINER_ORACLE_CAP: u128 = 24;
/// Largest view the Hamiltonian path oracle accepts.
pub const HAM_ORACLE_CAP: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Code {
    NotPath,
    NotDisjoint,
    NotSpanning,
    BadEndpoints,
    DuplicateVertex,
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Code::NotPath => "NOT_PATH",
            Code::NotDisjoint => "NOT_DISJOINT",
            Code::NotSpanning => "NOT_SPANNING",
            Code::BadEndpoints => "BAD_ENDPOINTS",
            Code::DuplicateVertex => "DUPLICATE_VERTEX",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub code: Code,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn push(&mut self, code: Code, detail: String) {
        self.violations.push(Violation { code, detail });
    }

    pub fn has(&self, code: Code) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Checks raw paths against the container definition inside `host`.
///
/// Every path must be a path of `host` from `u` to `v` without repeated
/// vertices; no vertex may be interior to two paths (nor may the direct edge
/// appear twice); with `require_spanning` the paths must cover `host`.
pub fn validate_raw(
    host: &SubgraphView,
    u: &[Label],
    v: &[Label],
    paths: &[Vec<Vec<Label>>],
    require_spanning: bool,
) -> ValidationReport {
    let mut report = ValidationReport::default();
    let (u, v) = (Vertex::new(u), Vertex::new(v));
    for (name, x) in [("u", &u), ("v", &v)] {
        if !host.contains(x) {
            report.push(
                Code::BadEndpoints,
                format!("{name}={} is not a vertex of the host", text(x)),
            );
        }
    }
    if u == v {
        report.push(Code::BadEndpoints, format!("u and v coincide at {}", text(&u)));
    }
    if paths.is_empty() {
        report.push(Code::NotPath, "container has no paths".into());
    }

    let mut owner: HashMap<Vertex, usize> = HashMap::new();
    let mut direct = 0;
    for (i, raw) in paths.iter().enumerate() {
        let path: Vec<Vertex> = raw.iter().map(|x| Vertex::new(x)).collect();
        if path.len() < 2 {
            report.push(Code::NotPath, format!("path {i} has {} vertices", path.len()));
        }
        if path.first() != Some(&u) || path.last() != Some(&v) {
            let ends = match (path.first(), path.last()) {
                (Some(a), Some(b)) => format!("{} .. {}", text(a), text(b)),
                _ => "nothing".into(),
            };
            report.push(
                Code::BadEndpoints,
                format!("path {i} runs {ends}, expected {} .. {}", text(&u), text(&v)),
            );
        }
        for x in &path {
            if !host.contains(x) {
                report.push(
                    Code::NotPath,
                    format!("path {i}: {} is not a vertex of the host", text(x)),
                );
            }
        }
        for w in path.windows(2) {
            if !(host.contains(&w[0]) && host.contains(&w[1]) && host.has_edge(&w[0], &w[1])) {
                report.push(
                    Code::NotPath,
                    format!("path {i}: {} and {} are not adjacent", text(&w[0]), text(&w[1])),
                );
            }
        }
        let mut seen = HashSet::new();
        for x in &path {
            if !seen.insert(x) {
                report.push(Code::DuplicateVertex, format!("path {i} visits {} twice", text(x)));
            }
        }
        if path.len() == 2 {
            direct += 1;
        }
        if path.len() > 2 {
            for x in &path[1..path.len() - 1] {
                if *x == u || *x == v {
                    continue;
                }
                if let Some(&j) = owner.get(x) {
                    if j != i {
                        report.push(
                            Code::NotDisjoint,
                            format!("{} is interior to paths {j} and {i}", text(x)),
                        );
                    }
                } else {
                    owner.insert(x.clone(), i);
                }
            }
        }
    }
    if direct > 1 {
        report.push(
            Code::NotDisjoint,
            format!("the edge {} {} is used by {direct} paths", text(&u), text(&v)),
        );
    }
    if require_spanning {
        let mut covered: HashSet<Vertex> = owner.into_keys().collect();
        covered.insert(u.clone());
        covered.insert(v.clone());
        let missing: Vec<Vertex> = host.vertices().filter(|x| !covered.contains(x)).collect();
        if !missing.is_empty() {
            let shown: Vec<String> = missing.iter().take(8).map(text).collect();
            report.push(
                Code::NotSpanning,
                format!("{} vertices uncovered, e.g. {}", missing.len(), shown.join(" ")),
            );
        }
    }
    report.ok = report.violations.is_empty();
    report
}

fn text(x: &Vertex) -> String {
    let labels: Vec<String> = x.labels().iter().map(|l| l.to_string()).collect();
    labels.join(",")
}

/// [`validate_raw`] applied to a constructed container.
pub fn validate_container(host: &SubgraphView, c: &Container, require_spanning: bool) -> ValidationReport {
    let paths: Vec<Vec<Vec<Label>>> = c
        .paths()
        .iter()
        .map(|p| p.vertices().iter().map(|x| x.labels().to_vec()).collect())
        .collect();
    validate_raw(host, c.u().labels(), c.v().labels(), &paths, require_spanning)
}

/// Validates a container against its own graph, requiring it to span.
pub fn validate(c: &Container) -> ValidationReport {
    validate_container(&SubgraphView::full(c.graph()), c, true)
}

/// Whether `view` has a Hamiltonian path from `u` to `v`, by plain
/// backtracking. Views above [`HAM_ORACLE_CAP`] vertices are refused.
pub fn oracle_ham_path(view: &SubgraphView, u: &Vertex, v: &Vertex) -> Result<bool> {
    if view.len() > HAM_ORACLE_CAP {
        return Err(Error::input(format!(
            "view has {} vertices; the oracle cap is {HAM_ORACLE_CAP}",
            view.len()
        )));
    }
    if u == v {
        return Err(Error::input("the oracle requires u != v"));
    }
    if !view.contains(u) || !view.contains(v) {
        return Ok(false);
    }
    let verts: Vec<Vertex> = view.vertices().collect();
    let index: HashMap<&Vertex, usize> = verts.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|x| view.neighbors(x).iter().map(|y| index[y]).collect())
        .collect();
    let (s, t) = (index[u], index[v]);
    let mut used = vec![false; verts.len()];
    used[s] = true;
    Ok(extend(&adj, &mut used, s, t, verts.len() - 1))
}

fn extend(adj: &[Vec<usize>], used: &mut [bool], at: usize, t: usize, left: usize) -> bool {
    if at == t {
        return left == 0;
    }
    // Every unvisited vertex other than t needs two ways in and out.
    for x in 0..adj.len() {
        if !used[x] && x != t {
            let free = adj[x].iter().filter(|&&y| !used[y] || y == at).count();
            if free < 2 {
                return false;
            }
        }
    }
    for &y in &adj[at] {
        if !used[y] && (y != t || left == 1) {
            used[y] = true;
            if extend(adj, used, y, t, left - 1) {
                return true;
            }
            used[y] = false;
        }
    }
    false
}

/// Whether `g` has a spanning `l`-container between `u` and `v`, decided by
/// complete backtracking over path systems. Graphs above
/// [`CONTAINER_ORACLE_CAP`] vertices are refused.
pub fn oracle_container_exists(g: Arrangement, u: &Vertex, v: &Vertex, l: usize) -> Result<bool> {
    if g.vertex_count() > CONTAINER_ORACLE_CAP {
        return Err(Error::input(format!(
            "A({},{}) has {} vertices; the oracle cap is {CONTAINER_ORACLE_CAP}",
            g.n(),
            g.k(),
            g.vertex_count()
        )));
    }
    g.validate(u)?;
    g.validate(v)?;
    if u == v {
        return Err(Error::input("the oracle requires u != v"));
    }
    if l == 0 || l > g.degree() {
        return Ok(false);
    }
    let verts: Vec<Vertex> = g.vertices().collect();
    let index: HashMap<&Vertex, usize> = verts.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let adj: Vec<Vec<bool>> = verts
        .iter()
        .map(|x| verts.iter().map(|y| g.is_adjacent(x, y)).collect())
        .collect();
    let mut search = Systems {
        adj,
        s: index[u],
        t: index[v],
        l,
        used: vec![false; verts.len()],
    };
    search.used[search.s] = true;
    search.used[search.t] = true;
    let left = verts.len() - 2;
    Ok(search.next_path(0, None, left))
}

struct Systems {
    adj: Vec<Vec<bool>>,
    s: usize,
    t: usize,
    l: usize,
    used: Vec<bool>,
}

impl Systems {
    /// Starts path number `done`; its first step must exceed `prev` so each
    /// unordered system is met once.
    fn next_path(&mut self, done: usize, prev: Option<usize>, left: usize) -> bool {
        if done == self.l {
            return left == 0;
        }
        let first_min = prev.map_or(0, |p| p + 1);
        for y in first_min..self.adj.len() {
            if !self.adj[self.s][y] {
                continue;
            }
            if y == self.t {
                if self.next_path(done + 1, Some(y), left) {
                    return true;
                }
                continue;
            }
            if self.used[y] {
                continue;
            }
            self.used[y] = true;
            if self.walk(done, y, y, left - 1) {
                return true;
            }
            self.used[y] = false;
        }
        false
    }

    /// Continues path `done` from `at`; `first` is its first step.
    fn walk(&mut self, done: usize, first: usize, at: usize, left: usize) -> bool {
        if self.adj[at][self.t] && self.next_path(done + 1, Some(first), left) {
            return true;
        }
        for y in 0..self.adj.len() {
            if self.adj[at][y] && !self.used[y] {
                self.used[y] = true;
                if self.walk(done, first, y, left - 1) {
                    return true;
                }
                self.used[y] = false;
            }
        }
        false
    }
}
