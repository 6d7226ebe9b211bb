//! Bounded backtracking search for Hamiltonian paths between two fixed ends.
//!
//! The path is grown from both ends at once; each step extends the end whose
//! head has fewer unvisited neighbors, trying candidates in lexicographic order.
//! A branch is cut when some unvisited vertex keeps fewer than two usable
//! neighbors, or when the unvisited region splits.

use std::collections::HashMap;

use super::Path;
use crate::error::{Error, Result};
use crate::graph::{SubgraphView, Vertex};

pub const DEFAULT_MAX_NODES: u64 = 50_000_000;

/// Env var that overrides the default node budget.
pub const BUDGET_ENV: &str = "SPANCON_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Backtracking nodes expanded before giving up; `None` searches exhaustively.
    pub max_nodes: Option<u64>,
    /// Expansions between connectivity checks; `None` picks 1 for views of at
    /// most 30 vertices and 8 otherwise.
    pub check_interval: Option<usize>,
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Result<Self> {
        if max_nodes == 0 {
            return Err(Error::input("search budget must be positive"));
        }
        Ok(SearchBudget {
            max_nodes: Some(max_nodes),
            check_interval: None,
        })
    }

    pub fn unlimited() -> Self {
        SearchBudget {
            max_nodes: None,
            check_interval: None,
        }
    }

    /// Default budget, overridden by `SPANCON_BUDGET` when it holds a positive integer.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .filter(|&b| b > 0)
            .map(|b| SearchBudget::nodes(b).expect("positive"))
            .unwrap_or_default()
    }

    /// This budget limited to at most `nodes` expansions.
    pub(crate) fn capped(self, nodes: u64) -> Self {
        SearchBudget {
            max_nodes: Some(self.max_nodes.map_or(nodes, |m| m.min(nodes))),
            ..self
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: Some(DEFAULT_MAX_NODES),
            check_interval: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Path),
    /// The search space was exhausted: no such path exists.
    NotFound,
    /// Inconclusive.
    BudgetExceeded,
}

/// Hamiltonian path of `view` from `u` to `v`, honoring vertex and edge faults.
pub fn ham_path_search(view: &SubgraphView, u: &Vertex, v: &Vertex, budget: SearchBudget) -> Result<SearchOutcome> {
    if u == v {
        return Err(Error::input(format!("endpoints coincide: {u:?}")));
    }
    for x in [u, v] {
        if !view.contains(x) {
            return Err(Error::input(format!("endpoint {x:?} is not in the view")));
        }
    }
    let verts: Vec<Vertex> = view.vertices().collect();
    let index: HashMap<&Vertex, usize> = verts.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let g = view.base();
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|x| {
            let mut row: Vec<usize> = g
                .neighbors_unchecked(x)
                .filter_map(|w| index.get(&w).copied())
                .filter(|&j| view.removed_edges().is_empty() || view.has_edge(x, &verts[j]))
                .collect();
            row.sort_unstable();
            row
        })
        .collect();
    let interval = budget
        .check_interval
        .unwrap_or(if verts.len() <= 30 { 1 } else { 8 })
        .max(1);
    let s = index[u];
    let t = index[v];
    Ok(match hamiltonian_path(&adj, s, t, budget.max_nodes, interval) {
        Outcome::Found(idx) => SearchOutcome::Found(Path::new(idx.into_iter().map(|i| verts[i].clone()).collect())),
        Outcome::NotFound => SearchOutcome::NotFound,
        Outcome::Budget => SearchOutcome::BudgetExceeded,
    })
}

pub(crate) enum Outcome {
    Found(Vec<usize>),
    NotFound,
    Budget,
}

enum Step {
    Found,
    Dead,
    Budget,
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    matrix: Vec<bool>,
    n: usize,
    visited: Vec<bool>,
    free_deg: Vec<u32>,
    remaining: usize,
    front: Vec<usize>,
    back: Vec<usize>,
    nodes: u64,
    max_nodes: Option<u64>,
    interval: usize,
    since_check: usize,
    stack: Vec<usize>,
    mark: Vec<u32>,
    epoch: u32,
}

/// Hamiltonian path search over an index graph with sorted adjacency lists.
pub(crate) fn hamiltonian_path(
    adj: &[Vec<usize>],
    s: usize,
    t: usize,
    max_nodes: Option<u64>,
    interval: usize,
) -> Outcome {
    let n = adj.len();
    let mut matrix = vec![false; n * n];
    for (i, row) in adj.iter().enumerate() {
        for &j in row {
            matrix[i * n + j] = true;
        }
    }
    let mut search = Search {
        adj,
        matrix,
        n,
        visited: vec![false; n],
        free_deg: adj.iter().map(|r| r.len() as u32).collect(),
        remaining: n,
        front: vec![],
        back: vec![],
        nodes: 0,
        max_nodes,
        interval,
        since_check: 0,
        stack: Vec::with_capacity(n),
        mark: vec![0; n],
        epoch: 0,
    };
    search.visit(s);
    search.front.push(s);
    search.visit(t);
    search.back.push(t);
    if !search.initial_ok() {
        return Outcome::NotFound;
    }
    match search.step() {
        Step::Found => {
            let mut path = search.front.clone();
            path.extend(search.back.iter().rev());
            Outcome::Found(path)
        }
        Step::Dead => Outcome::NotFound,
        Step::Budget => Outcome::Budget,
    }
}

impl Search<'_> {
    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.matrix[a * self.n + b]
    }

    fn visit(&mut self, x: usize) {
        self.visited[x] = true;
        self.remaining -= 1;
        for &y in &self.adj[x] {
            self.free_deg[y] -= 1;
        }
    }

    fn unvisit(&mut self, x: usize) {
        self.visited[x] = false;
        self.remaining += 1;
        for &y in &self.adj[x] {
            self.free_deg[y] += 1;
        }
    }

    fn avail(&self, x: usize, a: usize, b: usize) -> u32 {
        self.free_deg[x] + self.adjacent(x, a) as u32 + self.adjacent(x, b) as u32
    }

    fn initial_ok(&mut self) -> bool {
        let a = self.front[0];
        let b = self.back[0];
        if self.remaining == 0 {
            return true;
        }
        if self.free_deg[a] == 0 || self.free_deg[b] == 0 {
            return false;
        }
        (0..self.n).all(|x| self.visited[x] || self.avail(x, a, b) >= 2) && self.connected(a, b)
    }

    /// The unvisited vertices form one component.
    fn connected(&mut self, _a: usize, _b: usize) -> bool {
        if self.remaining == 0 {
            return true;
        }
        self.epoch += 1;
        let start = match (0..self.n).find(|&x| !self.visited[x]) {
            Some(x) => x,
            None => return true,
        };
        self.stack.clear();
        self.stack.push(start);
        self.mark[start] = self.epoch;
        let mut reached = 1;
        while let Some(x) = self.stack.pop() {
            for &y in &self.adj[x] {
                if !self.visited[y] && self.mark[y] != self.epoch {
                    self.mark[y] = self.epoch;
                    reached += 1;
                    self.stack.push(y);
                }
            }
        }
        reached == self.remaining
    }

    fn step(&mut self) -> Step {
        let a = *self.front.last().unwrap();
        let b = *self.back.last().unwrap();
        if self.remaining == 0 {
            return if self.adjacent(a, b) { Step::Found } else { Step::Dead };
        }
        let use_front = self.free_deg[a] <= self.free_deg[b];
        let (head, other) = if use_front { (a, b) } else { (b, a) };
        let adj = self.adj;
        for &c in &adj[head] {
            if self.visited[c] {
                continue;
            }
            self.nodes += 1;
            if let Some(max) = self.max_nodes {
                if self.nodes > max {
                    return Step::Budget;
                }
            }
            self.visit(c);
            if use_front {
                self.front.push(c);
            } else {
                self.back.push(c);
            }
            if self.viable(head, c, other) {
                match self.step() {
                    Step::Found => return Step::Found,
                    Step::Budget => return Step::Budget,
                    Step::Dead => {}
                }
            }
            if use_front {
                self.front.pop();
            } else {
                self.back.pop();
            }
            self.unvisit(c);
        }
        Step::Dead
    }

    /// Cheap necessary conditions after `new_head` replaced `old_head`.
    fn viable(&mut self, old_head: usize, new_head: usize, other: usize) -> bool {
        if self.remaining == 0 {
            return self.adjacent(new_head, other);
        }
        if self.free_deg[new_head] == 0 || self.free_deg[other] == 0 {
            return false;
        }
        let adj = self.adj;
        for &x in &adj[old_head] {
            if !self.visited[x] && self.avail(x, new_head, other) < 2 {
                return false;
            }
        }
        self.since_check += 1;
        if self.since_check >= self.interval {
            self.since_check = 0;
            if !self.connected(new_head, other) {
                return false;
            }
        }
        true
    }
}
