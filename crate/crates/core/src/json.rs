//! Container JSON, version 1:
//!
//! ```text
//! { "schema": 1, "n": 4, "k": 2, "u": [1,2], "v": [1,3], "l": 3,
//!   "paths": [ [[1,2],[1,3]], ... ] }
//! ```
//!
//! Paths run from `u` to `v`. The writer emits one path per line so that
//! golden files diff well; the reader accepts any layout.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::containers::Container;
use crate::error::{Error, Result};
use crate::graph::{Arrangement, Label, Vertex};
use crate::hampath::Path;

pub const SCHEMA: u32 = 1;

/// The file contents as read, before any checks beyond the schema shape.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContainerDoc {
    pub schema: u32,
    pub n: usize,
    pub k: usize,
    pub u: Vec<Label>,
    pub v: Vec<Label>,
    pub l: usize,
    pub paths: Vec<Vec<Vec<Label>>>,
}

impl ContainerDoc {
    pub fn graph(&self) -> Result<Arrangement> {
        Arrangement::new(self.n, self.k)
    }

    /// Builds a [`Container`] without judging it; see the verify module.
    pub fn to_container(&self) -> Result<Container> {
        let g = self.graph()?;
        let paths = self
            .paths
            .iter()
            .map(|p| Path::new(p.iter().map(|x| Vertex::new(x)).collect()))
            .collect();
        Ok(Container::new(g, Vertex::new(&self.u), Vertex::new(&self.v), paths))
    }
}

pub fn parse(text: &str) -> Result<ContainerDoc> {
    let doc: ContainerDoc =
        serde_json::from_str(text).map_err(|e| Error::input(format!("malformed container JSON: {e}")))?;
    if doc.schema != SCHEMA {
        return Err(Error::input(format!(
            "unsupported schema {}; expected {SCHEMA}",
            doc.schema
        )));
    }
    doc.graph()?;
    if doc.l != doc.paths.len() {
        return Err(Error::input(format!(
            "l={} but {} paths are listed",
            doc.l,
            doc.paths.len()
        )));
    }
    Ok(doc)
}

fn labels(out: &mut String, x: &[Label]) {
    out.push('[');
    for (i, l) in x.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{l}").unwrap();
    }
    out.push(']');
}

pub fn to_json(c: &Container) -> String {
    let g = c.graph();
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"schema\": {SCHEMA},").unwrap();
    writeln!(out, "  \"n\": {},", g.n()).unwrap();
    writeln!(out, "  \"k\": {},", g.k()).unwrap();
    out.push_str("  \"u\": ");
    labels(&mut out, c.u().labels());
    out.push_str(",\n  \"v\": ");
    labels(&mut out, c.v().labels());
    writeln!(out, ",\n  \"l\": {},", c.l()).unwrap();
    out.push_str("  \"paths\": [\n");
    for (i, p) in c.paths().iter().enumerate() {
        out.push_str("    [");
        for (j, x) in p.vertices().iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            labels(&mut out, x.labels());
        }
        out.push(']');
        if i + 1 < c.l() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("  ]\n}\n");
    out
}
