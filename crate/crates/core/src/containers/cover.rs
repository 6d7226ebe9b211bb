//! Disjoint path covers: `m` vertex-disjoint paths joining sources to sinks
//! and spanning the graph.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Arrangement, ClassMap, Label, Vertex};
use crate::hampath::{class_path_avoiding, union_path_avoiding, Path, SearchBudget};

/// Spanning disjoint paths joining `sources` to `sinks` (as sets) in `g`.
///
/// Sources must have distinct labels at position `t`, and so must sinks.
/// Pairs whose labels at `t` agree are joined inside their class; the other
/// pairs run through two classes, and the last pair sweeps up the rest.
pub fn disjoint_path_cover(
    g: Arrangement,
    t: usize,
    sources: &[Vertex],
    sinks: &[Vertex],
    budget: SearchBudget,
) -> Result<Vec<Path>> {
    g.check_position(t)?;
    let m = sources.len();
    if m == 0 || m != sinks.len() || m > g.n() {
        return Err(Error::input(format!(
            "need 1 <= |sources| = |sinks| <= {}, got {} and {}",
            g.n(),
            m,
            sinks.len()
        )));
    }
    for x in sources.iter().chain(sinks) {
        g.validate(x)?;
    }
    if sources.iter().any(|a| sinks.contains(a)) {
        return Err(Error::input("sources and sinks overlap"));
    }
    for side in [sources, sinks] {
        let labels: BTreeSet<Label> = side.iter().map(|x| x.at(t)).collect();
        if labels.len() != side.len() {
            return Err(Error::input(format!("labels at position {t} repeat within {side:?}")));
        }
    }
    if g.k() > 1 && g.n() - g.k() < 2 {
        return Err(Error::input(format!("A({},{}) has n-k < 2", g.n(), g.k())));
    }
    cover(g, t, sources, sinks, &[], budget).map_err(|e| e.within("cover"))
}

pub(crate) fn cover(
    g: Arrangement,
    t: usize,
    sources: &[Vertex],
    sinks: &[Vertex],
    faults: &[Vertex],
    budget: SearchBudget,
) -> Result<Vec<Path>> {
    let mut pairs: Vec<(&Vertex, &Vertex)> = Vec::new();
    let mut open_a: Vec<&Vertex> = Vec::new();
    let mut used_b = vec![false; sinks.len()];
    for a in sources {
        match sinks.iter().position(|b| b.at(t) == a.at(t)) {
            Some(j) => {
                pairs.push((a, &sinks[j]));
                used_b[j] = true;
            }
            None => open_a.push(a),
        }
    }
    let open_b = sinks.iter().zip(&used_b).filter(|(_, u)| !**u).map(|(b, _)| b);
    pairs.extend(open_a.into_iter().zip(open_b));

    let m = pairs.len();
    let mut rest: BTreeSet<Label> = g.labels().collect();
    let mut out = Vec::with_capacity(m);
    for (j, (a, b)) in pairs.iter().enumerate() {
        let path = if j + 1 == m {
            union_path_avoiding(g, t, &rest, a, b, faults, budget)?
        } else if a.at(t) == b.at(t) {
            rest.remove(&a.at(t));
            class_path_avoiding(g, t, a.at(t), a, b, faults, budget)?
        } else {
            rest.remove(&a.at(t));
            rest.remove(&b.at(t));
            let two: BTreeSet<Label> = [a.at(t), b.at(t)].into();
            union_path_avoiding(g, t, &two, a, b, faults, budget)?
        };
        out.push(path);
    }
    Ok(out)
}

/// A disjoint path cover of the class `A^(p,label)`, pairing by position `t`
/// of the full graph.
pub(crate) fn class_cover(
    g: Arrangement,
    p: usize,
    label: Label,
    t: usize,
    sources: &[Vertex],
    sinks: &[Vertex],
    budget: SearchBudget,
) -> Result<Vec<Path>> {
    let map = ClassMap::new(g, p, label)?;
    let h = map.target();
    let inner_t = if t < p { t } else { t - 1 };
    // A vertex that is both a source and a sink is a path on its own and a
    // fault for the rest.
    let shared: Vec<Vertex> = sources.iter().filter(|x| sinks.contains(x)).cloned().collect();
    let a: Vec<Vertex> = sources
        .iter()
        .filter(|x| !shared.contains(x))
        .map(|x| map.project(x))
        .collect();
    let b: Vec<Vertex> = sinks
        .iter()
        .filter(|x| !shared.contains(x))
        .map(|x| map.project(x))
        .collect();
    let faults: Vec<Vertex> = shared.iter().map(|x| map.project(x)).collect();
    let mut paths: Vec<Path> = shared.iter().map(|x| Path::new(vec![x.clone()])).collect();
    if !a.is_empty() {
        let inner = cover(h, inner_t, &a, &b, &faults, budget)?;
        paths.extend(super::lift_paths(&inner, |x| map.lift(x)));
    }
    Ok(paths)
}
