//! Hamiltonian paths: a bounded search engine for small views and a
//! constructive builder for unions of classes.

mod path;
mod search;
mod union;

pub use path::Path;
pub use search::{ham_path_search, SearchBudget, SearchOutcome, BUDGET_ENV, DEFAULT_MAX_NODES};
pub use union::{ham_path_union, ham_path_union_with};

pub(crate) use union::{class_path, class_path_avoiding, union_path, union_path_avoiding};

use crate::error::{Error, Result};
use crate::graph::{SubgraphView, Vertex};

/// Search that treats anything but a found path as a construction failure at `case`.
pub(crate) fn find_path(view: &SubgraphView, u: &Vertex, v: &Vertex, budget: SearchBudget, case: &str) -> Result<Path> {
    match ham_path_search(view, u, v, budget).map_err(|e| e.within(case))? {
        SearchOutcome::Found(p) => Ok(p),
        SearchOutcome::NotFound => Err(Error::construction(
            case,
            format!(
                "no Hamiltonian path {u:?} -> {v:?} in a view of {} vertices",
                view.len()
            ),
        )),
        SearchOutcome::BudgetExceeded => Err(Error::construction(
            case,
            format!(
                "search budget exhausted for {u:?} -> {v:?} in a view of {} vertices",
                view.len()
            ),
        )),
    }
}
