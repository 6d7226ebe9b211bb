//! Base cases: complete graphs and stored containers for `A(4,2)` and `A(5,2)`.

use super::{automorphism_transport, Container};
use crate::error::{Error, Result};
use crate::graph::{Arrangement, Vertex};
use crate::hampath::Path;

/// Container of `A(n,1) = K_n`: the direct edge, then `l-2` two-edge paths
/// through the smallest remaining labels, then one path through everything left.
pub fn complete_graph_container(g: Arrangement, u: &Vertex, v: &Vertex, l: usize) -> Result<Container> {
    if g.k() != 1 {
        return Err(Error::input(format!("A({},{}) is not a complete graph", g.n(), g.k())));
    }
    g.validate(u)?;
    g.validate(v)?;
    if u == v {
        return Err(Error::input(format!("endpoints coincide: {u:?}")));
    }
    if l == 0 || l > g.degree() {
        return Err(Error::input(format!("l={l} outside 1..={}", g.degree())));
    }
    let rest: Vec<Vertex> = g.vertices().filter(|w| w != u && w != v).collect();
    let paths = if l == 1 {
        let mut vs = vec![u.clone()];
        vs.extend(rest);
        vs.push(v.clone());
        vec![Path::new(vs)]
    } else {
        let mut paths = vec![Path::new(vec![u.clone(), v.clone()])];
        for w in &rest[..l - 2] {
            paths.push(Path::new(vec![u.clone(), w.clone(), v.clone()]));
        }
        let mut last = vec![u.clone()];
        last.extend(rest[l - 2..].iter().cloned());
        last.push(v.clone());
        paths.push(Path::new(last));
        paths
    };
    Ok(Container::new(g, u.clone(), v.clone(), paths))
}

/// Stored 3- and 4-containers of `A(4,2)` from `12` to `13`, `34`, `23`, `21`.
/// Every pair of `A(4,2)` is the image of one of these under an automorphism.
type Rows = &'static [&'static [&'static str]];

const A42: [(&str, Rows, Rows); 4] = [
    (
        "13",
        &[
            &["12", "13"],
            &["12", "14", "13"],
            &["12", "42", "43", "41", "21", "31", "32", "34", "24", "23", "13"],
        ],
        &[
            &["12", "13"],
            &["12", "14", "13"],
            &["12", "42", "43", "13"],
            &["12", "32", "34", "31", "41", "21", "24", "23", "13"],
        ],
    ),
    (
        "34",
        &[
            &["12", "14", "34"],
            &["12", "42", "32", "34"],
            &["12", "13", "43", "23", "24", "21", "41", "31", "34"],
        ],
        &[
            &["12", "13", "43", "23", "24", "34"],
            &["12", "14", "34"],
            &["12", "32", "34"],
            &["12", "42", "41", "21", "31", "34"],
        ],
    ),
    (
        "23",
        &[
            &["12", "13", "43", "23"],
            &["12", "14", "34", "24", "23"],
            &["12", "42", "32", "31", "41", "21", "23"],
        ],
        &[
            &["12", "13", "23"],
            &["12", "14", "24", "23"],
            &["12", "32", "34", "31", "21", "23"],
            &["12", "42", "41", "43", "23"],
        ],
    ),
    (
        "21",
        &[
            &["12", "13", "43", "23", "21"],
            &["12", "14", "34", "24", "21"],
            &["12", "42", "32", "31", "41", "21"],
        ],
        &[
            &["12", "13", "43", "23", "21"],
            &["12", "14", "34", "24", "21"],
            &["12", "32", "31", "21"],
            &["12", "42", "41", "21"],
        ],
    ),
];

/// Stored containers of `A(5,2)` from `12` to `34` for `l = 4, 5, 6`.
const A52: [&[&[&str]]; 3] = [
    &[
        &["12", "14", "34"],
        &["12", "32", "34"],
        &["12", "52", "54", "34"],
        &[
            "12", "42", "43", "13", "53", "23", "21", "31", "51", "41", "45", "35", "15", "25", "24", "34",
        ],
    ],
    &[
        &["12", "14", "34"],
        &["12", "15", "25", "45", "35", "34"],
        &["12", "32", "34"],
        &["12", "52", "54", "34"],
        &["12", "42", "43", "23", "13", "53", "51", "41", "31", "21", "24", "34"],
    ],
    &[
        &["12", "14", "34"],
        &["12", "13", "53", "43", "23", "24", "34"],
        &["12", "15", "25", "45", "35", "34"],
        &["12", "32", "34"],
        &["12", "42", "41", "51", "21", "31", "34"],
        &["12", "52", "54", "34"],
    ],
];

fn parse_paths(g: Arrangement, rows: &[&[&str]]) -> Vec<Path> {
    rows.iter()
        .map(|row| Path::new(row.iter().map(|s| g.parse_vertex(s).expect("stored vertex")).collect()))
        .collect()
}

/// A 3- or 4-container of `A(4,2)` between any two distinct vertices, obtained
/// by transporting a stored one.
pub fn base_table_a42(u: &Vertex, v: &Vertex, l: usize) -> Result<Container> {
    let g = Arrangement::new(4, 2)?;
    g.validate(u)?;
    g.validate(v)?;
    if u == v {
        return Err(Error::input(format!("endpoints coincide: {u:?}")));
    }
    if !(3..=4).contains(&l) {
        return Err(Error::input(format!(
            "stored A(4,2) containers have l = 3 or 4, got {l}"
        )));
    }
    let u0 = g.parse_vertex("12")?;
    for (end, three, four) in &A42 {
        let v0 = g.parse_vertex(end)?;
        if let Ok(frame) = automorphism_transport(g, &u0, &v0, u, v) {
            let rows = if l == 3 { three } else { four };
            let stored = Container::new(g, u0.clone(), v0, parse_paths(g, rows));
            return Ok(stored.map(g, |x| frame.to_real(x)));
        }
    }
    unreachable!("every pair of A(4,2) is equivalent to a stored one")
}

/// Stored `l`-container of `A(5,2)` from `12` to `34`, `l` in `4..=6`.
pub fn base_table_a52(l: usize) -> Result<Container> {
    if !(4..=6).contains(&l) {
        return Err(Error::input(format!(
            "stored A(5,2) containers have l in 4..=6, got {l}"
        )));
    }
    let g = Arrangement::new(5, 2)?;
    let (u, v) = (g.parse_vertex("12")?, g.parse_vertex("34")?);
    Ok(Container::new(g, u, v, parse_paths(g, A52[l - 4])))
}
