//! Containers with `3 <= l <= (n-k)(k-1)`: a class container between `u` and a
//! neighbour of `v` (or `v` itself) is rerouted so that the paths end at `v`
//! and the remaining classes are swept up.

use std::collections::BTreeSet;

use super::cover::class_cover;
use super::{class_container, in_frame, join, labels_except, wrap};
use crate::error::{Error, Result};
use crate::graph::{Arrangement, Frame, Label, Vertex};
use crate::hampath::{class_path, class_path_avoiding, union_path, Path, SearchBudget};

pub(super) fn build(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let k = g.k();
    if let Some(p) = (0..k).rev().find(|&i| u.at(i) == v.at(i)) {
        return shared(g, u, v, l, p, budget).map_err(|e| e.within("general/shared"));
    }
    if let Some(p) = (0..k).rev().find(|&i| !v.contains(u.at(i))) {
        return distinct(g, u, v, l, p, budget).map_err(|e| e.within("general/distinct"));
    }
    if k == 2 {
        swapped_pair(g, u, v, l, budget).map_err(|e| e.within("general/same-labels-pair"))
    } else {
        same_labels(g, u, v, l, budget).map_err(|e| e.within("general/same-labels"))
    }
}

fn set(labels: impl IntoIterator<Item = Label>) -> BTreeSet<Label> {
    labels.into_iter().collect()
}

/// A container path split into (vertex before the end, path without the end).
fn split_end(path: &Path) -> (Vertex, Vec<Vertex>) {
    let vs = path.vertices();
    (vs[vs.len() - 2].clone(), vs[..vs.len() - 1].to_vec())
}

/// Hamiltonian path of class `label` at `p` minus `faults`.
fn class_minus(
    g: Arrangement,
    p: usize,
    label: Label,
    faults: &[Vertex],
    s: &Vertex,
    t: &Vertex,
    budget: SearchBudget,
) -> Result<Path> {
    class_path_avoiding(g, p, label, s, t, faults, budget).map_err(|e| e.within("faulty-class"))
}

fn shared(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, p: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let alpha = u.at(p);
    let mut paths = class_container(g, p, alpha, u, v, l, budget)?;
    let idx = paths
        .iter()
        .rposition(|q| q.len() > 2)
        .ok_or_else(|| Error::construction("shared", "every path is a direct edge"))?;
    let vs = paths[idx].vertices().to_vec();
    let y = &vs[1];
    let beta = labels_except(g, u.labels().iter().chain(y.labels()).copied())[0];
    let rest = set(labels_except(g, [alpha]));
    let h = union_path(g, p, &rest, &u.with(p, beta), &y.with(p, beta), budget)?;
    paths[idx] = join(&[std::slice::from_ref(u), h.vertices(), &vs[1..]]);
    Ok(paths)
}

fn distinct(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, p: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let (alpha, beta) = (u.at(p), v.at(p));
    let y = v.with(p, alpha);
    let container = class_container(g, p, alpha, u, &y, l, budget)?;
    let shortest = (0..l).min_by_key(|&i| container[i].len()).expect("l >= 1");
    let (_, last_pre) = split_end(&container[shortest]);
    let mut betas: Vec<(usize, Vertex, Vec<Vertex>)> = Vec::new();
    let mut plain: Vec<(Vertex, Vec<Vertex>)> = Vec::new();
    for (i, path) in container.iter().enumerate() {
        if i == shortest {
            continue;
        }
        let (yi, pre) = split_end(path);
        match yi.position_of(beta) {
            Some(r) => betas.push((r, yi, pre)),
            None => plain.push((yi, pre)),
        }
    }
    betas.sort_by_key(|b| b.0);
    let m = betas.len();
    let mut paths = vec![join(&[&last_pre, &[y.clone(), v.clone()]])];
    let gamma = labels_except(g, v.labels().iter().copied().chain([alpha]))[0];
    let vv = std::slice::from_ref(v);

    // Paths through the beta-neighbours of y: detour through class v_r, cross
    // to z = v^(r,alpha) in class beta, then to v.
    let mut faults: Vec<Vertex> = Vec::new();
    let zb: Vec<Vertex> = betas.iter().map(|(r, _, _)| v.with(*r, alpha)).collect();
    let detours = m.saturating_sub(1);
    for (i, (r, yi, pre)) in betas.iter().take(detours).enumerate() {
        let c = v.at(*r);
        let h = class_path(g, p, c, &yi.with(p, c), &zb[i].with(p, c), budget)?;
        paths.push(join(&[pre, h.vertices(), &[zb[i].clone(), v.clone()]]));
        faults.push(zb[i].clone());
    }
    let used: Vec<Label> = betas.iter().take(detours).map(|(r, _, _)| v.at(*r)).collect();
    let zp: Vec<Vertex> = plain.iter().map(|(yi, _)| yi.with(p, beta)).collect();

    if m == 0 {
        let n_plain = plain.len();
        for i in 0..n_plain - 2 {
            paths.push(join(&[&plain[i].1, &[zp[i].clone(), v.clone()]]));
        }
        let r = class_minus(g, p, beta, &zp[..n_plain - 2], &zp[n_plain - 2], v, budget)?;
        paths.push(join(&[&plain[n_plain - 2].1, r.vertices()]));
        let (yl, pre) = &plain[n_plain - 1];
        let at = (0..g.k()).find(|&i| yl.at(i) != y.at(i)).expect("neighbour of y");
        let rest = set(labels_except(g, [alpha, beta]));
        let h = union_path(g, p, &rest, &yl.with(p, v.at(at)), &v.with(p, yl.at(at)), budget)?;
        paths.push(join(&[pre, h.vertices(), vv]));
    } else if m < l - 1 {
        let (r, yi, pre) = &betas[m - 1];
        let rest = set(labels_except(g, used.iter().copied().chain([alpha, beta])));
        let c = v.at(*r);
        let h = union_path(g, p, &rest, &yi.with(p, c), &v.with(p, gamma), budget)?;
        paths.push(join(&[pre, h.vertices(), vv]));
        let n_plain = plain.len();
        for i in 0..n_plain - 1 {
            paths.push(join(&[&plain[i].1, &[zp[i].clone(), v.clone()]]));
            faults.push(zp[i].clone());
        }
        let r = class_minus(g, p, beta, &faults, &zp[n_plain - 1], v, budget)?;
        paths.push(join(&[&plain[n_plain - 1].1, r.vertices()]));
    } else {
        let (r, yi, pre) = &betas[m - 1];
        let rest = set(labels_except(g, used.iter().copied().chain([alpha, beta])));
        let c = v.at(*r);
        let zl = &zb[m - 1];
        let h = union_path(g, p, &rest, &yi.with(p, c), &zl.with(p, gamma), budget)?;
        let tail = class_minus(g, p, beta, &faults, zl, v, budget)?;
        paths.push(join(&[pre, h.vertices(), tail.vertices()]));
    }
    Ok(paths)
}

/// `k = 2` and `v` is `u` reversed: solved for `u = 12`, `v = 21`.
fn swapped_pair(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let mut labels = vec![u.at(0), u.at(1)];
    labels.extend(labels_except(g, labels.clone()));
    let frame = Frame::labels_only(g, labels)?;
    in_frame(&frame, u, v, |_, _| {
        let n = g.n() as Label;
        let x = |a: Label, b: Label| Vertex::new(&[a, b]);
        let (u, v) = (x(1, 2), x(2, 1));
        let r1 = class_path(g, 1, 2, &u, &x(n, 2), budget)?;
        let r3 = class_path(g, 1, 3, &x(n, 3), &x(n - 1, 3), budget)?;
        let r2 = class_path(g, 1, 1, &x(n - 1, 1), &v, budget)?;
        let mut paths = vec![join(&[r1.vertices(), r3.vertices(), r2.vertices()])];
        let l = l as Label;
        for c in 4..=l + 1 {
            let r = class_path(g, 1, c, &x(1, c), &x(2, c), budget)?;
            paths.push(wrap(&u, &r, &v));
        }
        let rest = set(l + 2..=n);
        let h = union_path(g, 1, &rest, &x(1, l + 2), &x(2, n), budget)?;
        paths.push(wrap(&u, &h, &v));
        Ok(paths)
    })
}

/// `k >= 3` and `u`, `v` carry the same labels in different orders.
fn same_labels(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let k = g.k();
    let q = v.position_of(u.at(k - 1)).expect("same label set");
    let mut positions = vec![q];
    positions.extend((0..k - 1).filter(|&i| i != q));
    positions.push(k - 1);
    let mut labels: Vec<Label> = positions.iter().map(|&i| v.at(i)).collect();
    labels.extend(labels_except(g, labels.clone()));
    let frame = Frame::new(labels, positions)?;
    in_frame(&frame, u, v, |cu, cv| same_labels_canon(g, cu, cv, l, budget))
}

/// Canonical form: `v = 1 2 .. k` and `u` ends in `1`.
fn same_labels_canon(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let k = g.k();
    let kl = k as Label;
    let p = k - 1;
    let y = v.with(0, kl).with(p, 1);
    let container = class_container(g, p, 1, u, &y, l, budget)?;
    // (position where y^i differs from y, its label there, y^i, prefix)
    let mut items: Vec<(usize, Label, Vec<Vertex>)> = container
        .iter()
        .map(|path| {
            let (yi, pre) = split_end(path);
            let d = (0..k).find(|&i| yi.at(i) != y.at(i)).expect("neighbour of y");
            (d, yi.at(d), pre)
        })
        .collect();
    items.sort_by_key(|a| (a.0, a.1));
    let (mut ones, mut rest): (Vec<_>, Vec<_>) = items.into_iter().partition(|it| it.0 == 0);
    let vv = std::slice::from_ref(v);
    let mut paths = Vec::new();

    let (tail_a, tail_b) = if ones.len() <= 2 {
        while ones.len() < 2 {
            ones.insert(0, rest.pop().expect("l >= 3"));
        }
        let b = ones.pop().unwrap();
        let a = ones.pop().unwrap();
        (a, b)
    } else {
        let b = ones.pop().unwrap();
        let a = ones.pop().unwrap();
        (a, b)
    };
    let ys = |d: usize, x: Label| y.with(d, x);
    let zs = |d: usize, x: Label| v.with(d, x);
    let classes: BTreeSet<Label> = rest.iter().map(|it| it.0 as Label + 1).collect();
    let mut faults: Vec<Vertex> = rest.iter().map(|it| zs(it.0, it.1)).collect();
    let special = if ones.is_empty() {
        let last = rest.last().expect("l >= 3");
        let z = zs(last.0, last.1);
        faults.retain(|f| *f != z);
        z
    } else {
        zs(0, tail_a.1)
    };
    let r = class_minus(g, p, kl, &faults, &special, v, budget)?;

    for &c in &classes {
        let d = c as usize - 1;
        let group: Vec<&(usize, Label, Vec<Vertex>)> = rest.iter().filter(|it| it.0 == d).collect();
        let a: Vec<Vertex> = group.iter().map(|it| ys(d, it.1).with(p, c)).collect();
        let b: Vec<Vertex> = group.iter().map(|it| zs(d, it.1).with(p, c)).collect();
        for h in class_cover(g, p, c, d, &a, &b, budget)? {
            let x = h.first().unwrap().at(d);
            let pre = &group.iter().find(|it| it.1 == x).expect("source of the cover").2;
            let z = zs(d, x);
            let end: Vec<Vertex> = if z == special {
                r.vertices().to_vec()
            } else {
                vec![z, v.clone()]
            };
            paths.push(join(&[pre, h.vertices(), &end]));
        }
    }

    if ones.is_empty() {
        let xa = tail_a.2.last().unwrap().clone();
        let taken: Vec<Label> = y.labels().iter().chain(xa.labels()).copied().collect();
        let a = labels_except(g, taken)[0];
        let b = labels_except(g, (1..=kl).chain([a]))[0];
        let ra = class_path(g, p, a, &xa.with(p, a), &v.with(p, a), budget)?;
        paths.push(join(&[&tail_a.2, ra.vertices(), vv]));
        let excluded = classes.iter().copied().chain([1, kl, a]);
        let rest_l = set(labels_except(g, excluded));
        let rl = union_path(g, p, &rest_l, &y.with(p, b), &v.with(p, b), budget)?;
        paths.push(join(&[&tail_b.2, std::slice::from_ref(&y), rl.vertices(), vv]));
    } else {
        // xs: labels of the leftover first-position neighbours, then the two
        // reserved ones, then the unused labels.
        let mut xs: Vec<Label> = ones.iter().map(|it| it.1).collect();
        xs.extend([tail_a.1, tail_b.1]);
        let taken = xs.clone();
        xs.extend(labels_except(g, (1..=kl).chain(taken)));
        let n1 = ones.len();
        for (t, it) in ones.iter().enumerate() {
            let c = xs[t + 1];
            let h = class_path(g, p, c, &ys(0, it.1).with(p, c), &v.with(p, c), budget)?;
            paths.push(join(&[&it.2, h.vertices(), vv]));
        }
        let c = xs[n1 + 1];
        let h = class_path(g, p, c, &ys(0, tail_a.1).with(p, c), &v.with(p, c), budget)?;
        paths.push(join(&[&tail_a.2, h.vertices(), vv]));
        let excluded = classes.iter().chain(&xs[1..n1 + 2]).copied().chain([1, kl]);
        let rest_l = set(labels_except(g, excluded));
        let x1 = xs[0];
        let h = union_path(g, p, &rest_l, &y.with(p, x1), &special.with(p, x1), budget)?;
        paths.push(join(&[&tail_b.2, std::slice::from_ref(&y), h.vertices(), r.vertices()]));
    }
    Ok(paths)
}
