//! Hamiltonian paths of a union of classes `A^(p,I)`, built class by class.
//!
//! Ends in different classes: walk the classes in order, hopping between
//! consecutive classes over a cross edge. Ends in the same class: split a path
//! of that class at an edge whose two ends can both hop into the next class,
//! detour through the next class, and repeat.

use std::collections::BTreeSet;

use super::{find_path, Path, SearchBudget};
use crate::error::{Error, Result};
use crate::graph::{Arrangement, ClassMap, Label, SubgraphView, Vertex};

/// Classes up to this size are handled by search; larger ones recurse.
const SEARCH_LIMIT: usize = 120;

/// Node cap for one candidate attempt; the full budget is used only once every
/// candidate has failed under it.
const CANDIDATE_NODES: u64 = 200_000;

/// Hamiltonian path of `A^(p,I)` from `u` to `v`, with the budget taken from
/// the environment. Unions of several classes need `n >= 5`.
pub fn ham_path_union(g: Arrangement, p: usize, labels: &[Label], u: &Vertex, v: &Vertex) -> Result<Path> {
    ham_path_union_with(g, p, labels, u, v, SearchBudget::from_env())
}

pub fn ham_path_union_with(
    g: Arrangement,
    p: usize,
    labels: &[Label],
    u: &Vertex,
    v: &Vertex,
    budget: SearchBudget,
) -> Result<Path> {
    g.check_position(p)?;
    let set: BTreeSet<Label> = labels.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::input("empty label set"));
    }
    for &l in &set {
        g.check_label(l)?;
    }
    g.validate(u)?;
    g.validate(v)?;
    if u == v {
        return Err(Error::input(format!("endpoints coincide: {u:?}")));
    }
    if !set.contains(&u.at(p)) || !set.contains(&v.at(p)) {
        return Err(Error::input(format!(
            "{u:?} or {v:?} lies outside the union of classes {set:?}"
        )));
    }
    if g.k() > 1 && g.n() - g.k() < 2 {
        return Err(Error::input(format!(
            "A({},{}) has n-k < 2; its classes are not Hamiltonian connected",
            g.n(),
            g.k()
        )));
    }
    if g.k() > 1 && g.n() < 5 && set.len() > 1 {
        // In A(4,2) two classes meet in only two edges; 31 -> 34 in A^(0,{2,3}) has no path.
        return Err(Error::input("unions of two or more classes need n >= 5"));
    }
    union_path(g, p, &set, u, v, budget)
}

pub(crate) fn union_path(
    g: Arrangement,
    p: usize,
    set: &BTreeSet<Label>,
    u: &Vertex,
    v: &Vertex,
    budget: SearchBudget,
) -> Result<Path> {
    union_path_avoiding(g, p, set, u, v, &[], budget)
}

/// Hamiltonian path of `A^(p,set)` minus `faults` from `u` to `v`.
pub(crate) fn union_path_avoiding(
    g: Arrangement,
    p: usize,
    set: &BTreeSet<Label>,
    u: &Vertex,
    v: &Vertex,
    faults: &[Vertex],
    budget: SearchBudget,
) -> Result<Path> {
    if g.k() == 1 {
        // Complete graph on the labels of `set`.
        let mut out = vec![u.clone()];
        out.extend(
            set.iter()
                .filter(|&&l| l != u.at(0) && l != v.at(0))
                .map(|&l| Vertex::new(&[l]))
                .filter(|x| !faults.contains(x)),
        );
        out.push(v.clone());
        return Ok(Path::new(out));
    }
    if set.len() == 1 {
        return class_path_avoiding(g, p, u.at(p), u, v, faults, budget);
    }
    if g.n() < 5 {
        let inside = faults.iter().filter(|x| set.contains(&x.at(p)));
        let view = SubgraphView::union(g, p, set.iter().copied())?.without_vertices(inside)?;
        return find_path(&view, u, v, budget, "union/small");
    }
    if u.at(p) != v.at(p) {
        different_classes(g, p, set, u, v, faults, budget).map_err(|e| e.within("union/split"))
    } else {
        same_class(g, p, set, u, v, faults, budget).map_err(|e| e.within("union/same-class"))
    }
}

/// Hamiltonian path of the single class `A^(p,label)`.
pub(crate) fn class_path(
    g: Arrangement,
    p: usize,
    label: Label,
    u: &Vertex,
    v: &Vertex,
    budget: SearchBudget,
) -> Result<Path> {
    class_path_avoiding(g, p, label, u, v, &[], budget)
}

/// Faulty classes above this size recurse instead of searching.
const FAULTY_SEARCH_LIMIT: usize = 30;

/// Hamiltonian path of the class `A^(p,label)` minus `faults`.
pub(crate) fn class_path_avoiding(
    g: Arrangement,
    p: usize,
    label: Label,
    u: &Vertex,
    v: &Vertex,
    faults: &[Vertex],
    budget: SearchBudget,
) -> Result<Path> {
    let faults: Vec<Vertex> = faults.iter().filter(|x| x.at(p) == label).cloned().collect();
    let view = SubgraphView::class(g, p, label)?.without_vertices(&faults)?;
    let size = (g.vertex_count() / g.n() as u128) as usize;
    let limit = if faults.is_empty() {
        SEARCH_LIMIT
    } else {
        FAULTY_SEARCH_LIMIT
    };
    if size <= limit || g.k() == 1 || g.n() < 6 {
        return find_path(&view, u, v, budget, "class");
    }
    let map = ClassMap::new(g, p, label)?;
    let h = map.target();
    let all: BTreeSet<Label> = h.labels().collect();
    let inner_faults: Vec<Vertex> = faults.iter().map(|x| map.project(x)).collect();
    // Split where the faults are most spread out, last position first.
    let crowding = |q: usize| {
        let mut count = vec![0usize; h.n() + 1];
        for x in &inner_faults {
            count[x.at(q) as usize] += 1;
        }
        count.into_iter().max().unwrap_or(0)
    };
    let mut positions: Vec<usize> = (0..h.k()).rev().collect();
    positions.sort_by_key(|&q| crowding(q));
    let (pu, pv) = (map.project(u), map.project(v));
    let mut last_err = None;
    for q in positions {
        match union_path_avoiding(h, q, &all, &pu, &pv, &inner_faults, budget) {
            Ok(inner) => return Ok(Path::new(inner.vertices().iter().map(|x| map.lift(x)).collect())),
            Err(e) => last_err = Some(e.within("class")),
        }
        if inner_faults.is_empty() {
            break;
        }
    }
    Err(last_err.expect("at least one position"))
}

fn different_classes(
    g: Arrangement,
    p: usize,
    set: &BTreeSet<Label>,
    u: &Vertex,
    v: &Vertex,
    faults: &[Vertex],
    budget: SearchBudget,
) -> Result<Path> {
    let mut order = vec![u.at(p)];
    order.extend(set.iter().copied().filter(|&l| l != u.at(p) && l != v.at(p)));
    order.push(v.at(p));

    let mut out: Vec<Vertex> = Vec::new();
    let mut entry = u.clone();
    let mut last_err = None;
    for j in 0..order.len() {
        if j + 1 == order.len() {
            let tail = class_path_avoiding(g, p, order[j], &entry, v, faults, budget)?;
            out.extend(tail.into_vertices());
            return Ok(Path::new(out));
        }
        let edges: Vec<(Vertex, Vertex)> = g
            .cross_edges(p, order[j], order[j + 1])?
            .into_iter()
            .filter(|(x, y)| {
                x != &entry && !(j + 2 == order.len() && y == v) && !faults.contains(x) && !faults.contains(y)
            })
            .collect();
        let mut linked = None;
        'passes: for pass in [budget.capped(CANDIDATE_NODES), budget] {
            for (x, y) in &edges {
                match class_path_avoiding(g, p, order[j], &entry, x, faults, pass) {
                    Ok(seg) => {
                        linked = Some((seg, y.clone()));
                        break 'passes;
                    }
                    Err(e) => last_err = Some(e),
                }
            }
            if pass == budget {
                break;
            }
        }
        let (seg, y) = linked.ok_or_else(|| {
            last_err.clone().unwrap_or_else(|| {
                Error::construction("union/split", format!("no usable cross edge out of class {}", order[j]))
            })
        })?;
        out.extend(seg.into_vertices());
        entry = y;
    }
    unreachable!("loop returns at the last class")
}

fn same_class(
    g: Arrangement,
    p: usize,
    set: &BTreeSet<Label>,
    u: &Vertex,
    v: &Vertex,
    faults: &[Vertex],
    budget: SearchBudget,
) -> Result<Path> {
    let mut order = vec![u.at(p)];
    order.extend(set.iter().copied().filter(|&l| l != u.at(p)));

    // Forward runs R_j and return runs H_j, collected outside in.
    let mut forward: Vec<Vec<Vertex>> = Vec::new();
    let mut back: Vec<Vec<Vertex>> = Vec::new();
    let (mut s, mut t) = (u.clone(), v.clone());
    for j in 0..order.len() - 1 {
        let (prefix, suffix, x, y) = split_class_path(g, p, order[j], order[j + 1], &s, &t, faults, budget)?;
        forward.push(prefix);
        back.push(suffix);
        s = x.with(p, order[j + 1]);
        t = y.with(p, order[j + 1]);
    }
    let middle = class_path_avoiding(g, p, *order.last().unwrap(), &s, &t, faults, budget)?;
    let mut out: Vec<Vertex> = forward.into_iter().flatten().collect();
    out.extend(middle.into_vertices());
    for seg in back.into_iter().rev() {
        out.extend(seg);
    }
    Ok(Path::new(out))
}

/// A Hamiltonian path `s -> t` of class `cur` split at an edge `(x, y)` whose
/// ends both avoid label `next`: returns `(s..x, y..t, x, y)`.
#[allow(clippy::too_many_arguments)]
fn split_class_path(
    g: Arrangement,
    p: usize,
    cur: Label,
    next: Label,
    s: &Vertex,
    t: &Vertex,
    faults: &[Vertex],
    budget: SearchBudget,
) -> Result<(Vec<Vertex>, Vec<Vertex>, Vertex, Vertex)> {
    let capped = budget.capped(CANDIDATE_NODES);
    match split_class_path_once(g, p, cur, next, s, t, faults, capped) {
        Ok(found) => Ok(found),
        Err(_) if capped != budget => split_class_path_once(g, p, cur, next, s, t, faults, budget),
        Err(e) => Err(e),
    }
}

#[allow(clippy::too_many_arguments)]
fn split_class_path_once(
    g: Arrangement,
    p: usize,
    cur: Label,
    next: Label,
    s: &Vertex,
    t: &Vertex,
    faults: &[Vertex],
    budget: SearchBudget,
) -> Result<(Vec<Vertex>, Vec<Vertex>, Vertex, Vertex)> {
    let class = SubgraphView::class(g, p, cur)?.without_vertices(faults.iter().filter(|x| x.at(p) == cur))?;
    let usable = |w: &Vertex| !w.contains(next) && !faults.contains(&w.with(p, next));
    let mut last_err = None;
    for x in class.vertices() {
        if &x == s || &x == t || !usable(&x) {
            continue;
        }
        let nbrs = class.neighbors(&x);
        let free: Vec<&Vertex> = nbrs.iter().filter(|w| usable(w)).collect();
        for (a_idx, y) in free.iter().enumerate() {
            for z in &free[a_idx + 1..] {
                for e in nbrs.iter().filter(|w| w != y && w != z) {
                    let mut view = class.clone();
                    for w in nbrs.iter().filter(|w| w != y && w != z && *w != e) {
                        view.remove_edge(&x, w)?;
                    }
                    let path = match find_path(&view, s, t, budget, "forced-edge") {
                        Ok(path) => path,
                        Err(err) => {
                            last_err = Some(err);
                            continue;
                        }
                    };
                    let vs = path.vertices();
                    let cut = vs.windows(2).position(|w| {
                        (w[0] == x && (&w[1] == *y || &w[1] == *z)) || (w[1] == x && (&w[0] == *y || &w[0] == *z))
                    });
                    let cut = cut.expect("x is interior with degree 3, so it uses y or z");
                    let (a, b) = (vs[cut].clone(), vs[cut + 1].clone());
                    return Ok((vs[..=cut].to_vec(), vs[cut + 1..].to_vec(), a, b));
                }
            }
        }
    }
    Err(last_err
        .unwrap_or_else(|| Error::construction("forced-edge", format!("no admissible split vertex in class {cur}"))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vx(g: &Arrangement, s: &str) -> Vertex {
        g.parse_vertex(s).unwrap()
    }

    fn runs(path: &Path, p: usize) -> Vec<Label> {
        let mut out: Vec<Label> = Vec::new();
        for x in path.vertices() {
            if out.last() != Some(&x.at(p)) {
                out.push(x.at(p));
            }
        }
        out
    }

    #[test]
    fn single_class_of_a42() {
        let g = Arrangement::new(4, 2).unwrap();
        let path = ham_path_union(g, 1, &[1], &vx(&g, "21"), &vx(&g, "31")).unwrap();
        let texts: Vec<String> = path.vertices().iter().map(|x| g.format_vertex(x)).collect();
        assert_eq!(texts, vec!["21", "41", "31"]);
    }

    #[test]
    fn split_shape_in_a52() {
        let g = Arrangement::new(5, 2).unwrap();
        let (u, v) = (vx(&g, "12"), vx(&g, "21"));
        let path = ham_path_union(g, 1, &[1, 2], &u, &v).unwrap();
        let view = SubgraphView::union(g, 1, [1, 2]).unwrap();
        assert!(path.is_hamiltonian_in(&view, &u, &v));
        assert_eq!(runs(&path, 1), vec![2, 1]);
    }

    #[test]
    fn same_class_shape_in_a52() {
        let g = Arrangement::new(5, 2).unwrap();
        let (u, v) = (vx(&g, "21"), vx(&g, "31"));
        let path = ham_path_union(g, 1, &[1, 2], &u, &v).unwrap();
        let view = SubgraphView::union(g, 1, [1, 2]).unwrap();
        assert!(path.is_hamiltonian_in(&view, &u, &v));
        assert_eq!(runs(&path, 1), vec![1, 2, 1]);
    }

    #[test]
    fn same_class_through_three_classes() {
        let g = Arrangement::new(5, 3).unwrap();
        let (u, v) = (vx(&g, "123"), vx(&g, "143"));
        let path = ham_path_union(g, 2, &[3, 1, 5], &u, &v).unwrap();
        let view = SubgraphView::union(g, 2, [1, 3, 5]).unwrap();
        assert!(path.is_hamiltonian_in(&view, &u, &v));
        assert_eq!(runs(&path, 2), vec![3, 1, 5, 1, 3]);
    }

    #[test]
    fn complete_graph_union() {
        let g = Arrangement::new(5, 1).unwrap();
        let path = ham_path_union(g, 0, &[1, 2, 4], &vx(&g, "4"), &vx(&g, "1")).unwrap();
        let texts: Vec<String> = path.vertices().iter().map(|x| g.format_vertex(x)).collect();
        assert_eq!(texts, vec!["4", "2", "1"]);
    }

    #[test]
    fn rejects_bad_requests() {
        let g = Arrangement::new(5, 2).unwrap();
        assert!(ham_path_union(g, 1, &[1, 2], &vx(&g, "21"), &vx(&g, "21"))
            .unwrap_err()
            .is_input());
        assert!(ham_path_union(g, 1, &[1, 2], &vx(&g, "21"), &vx(&g, "13"))
            .unwrap_err()
            .is_input());
        assert!(ham_path_union(g, 1, &[], &vx(&g, "21"), &vx(&g, "31"))
            .unwrap_err()
            .is_input());
        let star = Arrangement::new(4, 3).unwrap();
        assert!(ham_path_union(star, 2, &[3], &vx(&star, "123"), &vx(&star, "213"))
            .unwrap_err()
            .is_input());
    }
}
