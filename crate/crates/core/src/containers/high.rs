//! Containers with `l > (n-k)(k-1)`: more paths than a single class can carry
//! from `u`, so the construction routes some of them through other classes.

use std::collections::{BTreeSet, HashMap};

use super::cover::class_cover;
use super::{
    base_table_a52, by_first_internal, by_last_internal, class_container, in_frame, join, labels_except, take, wrap,
};
use crate::error::{Error, Result};
use crate::graph::{Arrangement, Frame, Label, Vertex};
use crate::hampath::{class_path, union_path, Path, SearchBudget};

pub(super) fn build(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let k = g.k();
    if let Some(p) = (0..k).rev().find(|&i| u.at(i) == v.at(i)) {
        return shared(g, u, v, l, p, budget).map_err(|e| e.within("high/shared"));
    }
    if let Some(p) = (0..k).rev().find(|&i| v.contains(u.at(i)) && u.contains(v.at(i))) {
        return crossed(g, u, v, l, p, budget).map_err(|e| e.within("high/crossed"));
    }
    if let Some(p) = (0..k).rev().find(|&i| !v.contains(u.at(i)) && u.contains(v.at(i))) {
        return one_sided(g, u, v, l, p, budget).map_err(|e| e.within("high/one-sided"));
    }
    if let Some(p) = (0..k).rev().find(|&i| v.contains(u.at(i)) && !u.contains(v.at(i))) {
        let paths = one_sided(g, v, u, l, p, budget).map_err(|e| e.within("high/one-sided"))?;
        return Ok(paths.iter().map(Path::reversed).collect());
    }
    if k == 2 {
        disjoint_pair(g, u, v, l, budget).map_err(|e| e.within("high/disjoint-pair"))
    } else {
        disjoint(g, u, v, l, budget).map_err(|e| e.within("high/disjoint"))
    }
}

fn base_l(g: Arrangement) -> usize {
    (g.n() - g.k()) * (g.k() - 1)
}

fn set(labels: impl IntoIterator<Item = Label>) -> BTreeSet<Label> {
    labels.into_iter().collect()
}

/// `u`, a Hamiltonian path of class `c` at `p` between the `c`-swapped ends, `v`.
fn through(g: Arrangement, p: usize, c: Label, u: &Vertex, v: &Vertex, budget: SearchBudget) -> Result<Path> {
    let mid = class_path(g, p, c, &u.with(p, c), &v.with(p, c), budget)?;
    Ok(wrap(u, &mid, v))
}

/// Splits the labels of `u` and `v` into (only in `u`, only in `v`, in neither).
fn sides(g: Arrangement, u: &Vertex, v: &Vertex) -> (Vec<Label>, Vec<Label>, Vec<Label>) {
    let mut u_only: Vec<Label> = u.labels().iter().copied().filter(|&c| !v.contains(c)).collect();
    let mut v_only: Vec<Label> = v.labels().iter().copied().filter(|&c| !u.contains(c)).collect();
    u_only.sort_unstable();
    v_only.sort_unstable();
    let w = labels_except(g, u.labels().iter().chain(v.labels()).copied());
    (u_only, v_only, w)
}

fn shared(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, p: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let l0 = base_l(g);
    let alpha = u.at(p);
    let mut paths = class_container(g, p, alpha, u, v, l0, budget)?;
    let (u_only, v_only, w) = sides(g, u, v);
    let extra = l - l0;
    if extra <= w.len() {
        for &c in &w[..extra - 1] {
            paths.push(through(g, p, c, u, v, budget)?);
        }
        let c = w[extra - 1];
        let rest = set(labels_except(g, w[..extra - 1].iter().copied().chain([alpha])));
        let h = union_path(g, p, &rest, &u.with(p, c), &v.with(p, c), budget)?;
        paths.push(wrap(u, &h, v));
    } else {
        let j = extra - w.len();
        for &c in &w {
            paths.push(through(g, p, c, u, v, budget)?);
        }
        for i in 0..j - 1 {
            let pair = set([u_only[i], v_only[i]]);
            let h = union_path(g, p, &pair, &u.with(p, v_only[i]), &v.with(p, u_only[i]), budget)?;
            paths.push(wrap(u, &h, v));
        }
        let used = w.iter().chain(&u_only[..j - 1]).chain(&v_only[..j - 1]).copied();
        let rest = set(labels_except(g, used.chain([alpha])));
        let h = union_path(
            g,
            p,
            &rest,
            &u.with(p, v_only[j - 1]),
            &v.with(p, u_only[j - 1]),
            budget,
        )?;
        paths.push(wrap(u, &h, v));
    }
    Ok(paths)
}

/// The two class containers `u -> y` (class `alpha`) and `z -> v` (class
/// `beta`) at position `p`, where `y` and `z` differ only at `p`, cut into
/// halves that are glued back together across the `alpha`/`beta` edges.
struct Bridge {
    g: Arrangement,
    p: usize,
    alpha: Label,
    beta: Label,
    y: Vertex,
    z: Vertex,
    pre: HashMap<Vertex, Vec<Vertex>>,
    suf: HashMap<Vertex, Vec<Vertex>>,
    budget: SearchBudget,
}

impl Bridge {
    fn new(
        g: Arrangement,
        u: &Vertex,
        v: &Vertex,
        p: usize,
        y: Vertex,
        z: Vertex,
        budget: SearchBudget,
    ) -> Result<Self> {
        let l0 = base_l(g);
        let (alpha, beta) = (u.at(p), v.at(p));
        let pc = class_container(g, p, alpha, u, &y, l0, budget)?;
        let qc = class_container(g, p, beta, &z, v, l0, budget)?;
        Ok(Bridge {
            g,
            p,
            alpha,
            beta,
            y,
            z,
            pre: by_last_internal(&pc),
            suf: by_first_internal(&qc),
            budget,
        })
    }

    fn pre(&mut self, key: &Vertex) -> Result<Vec<Vertex>> {
        take(&mut self.pre, key, "bridge")
    }

    fn suf(&mut self, key: &Vertex) -> Result<Vec<Vertex>> {
        take(&mut self.suf, key, "bridge")
    }

    /// One path per neighbour of `y` in class `alpha`, except the `beta`
    /// neighbours at positions in `skip`. `q` is the position where `y` and
    /// `z` differ from `v` besides `p`.
    fn defaults(&mut self, q: usize, skip: &[usize], v: &Vertex) -> Result<Vec<Path>> {
        let (p, alpha, beta) = (self.p, self.alpha, self.beta);
        let (y, z) = (self.y.clone(), self.z.clone());
        let others = labels_except(self.g, y.labels().iter().copied().chain([beta]));
        let mut out = Vec::new();
        for i in (0..self.g.k()).filter(|&i| i != p) {
            for &s in &others {
                let a = self.pre(&y.with(i, s))?;
                let b = self.suf(&z.with(i, s))?;
                out.push(join(&[&a, &b]));
            }
            if skip.contains(&i) {
                continue;
            }
            let a = self.pre(&y.with(i, beta))?;
            let b = self.suf(&z.with(i, alpha))?;
            if i == q {
                out.push(join(&[&a, &[y.clone(), z.clone()], &b]));
            } else {
                let c = y.at(i);
                let r = class_path(
                    self.g,
                    p,
                    c,
                    &y.with(i, beta).with(p, c),
                    &z.with(i, alpha).with(p, c),
                    self.budget,
                )?;
                out.push(join(&[&a, r.vertices(), &b]));
            }
        }
        debug_assert!(self.pre.is_empty() && self.suf.is_empty(), "{v:?}");
        Ok(out)
    }

    /// `prefix(y^(i,beta))`, a class-`c` path to `v^(p,c)`, then `v`.
    fn toward_v(&mut self, i: usize, c: Label, v: &Vertex) -> Result<Path> {
        let a = self.pre(&self.y.with(i, self.beta))?;
        let h = class_path(
            self.g,
            self.p,
            c,
            &self.y.with(i, self.beta).with(self.p, c),
            &v.with(self.p, c),
            self.budget,
        )?;
        Ok(join(&[&a, h.vertices(), std::slice::from_ref(v)]))
    }

    /// `u`, a path over `classes` from `u^(p,c)` to `z^(i,alpha)` with `c` at
    /// `p`, then `suffix(z^(i,alpha))`.
    fn away_from_u(&mut self, u: &Vertex, i: usize, c: Label, classes: &BTreeSet<Label>) -> Result<Path> {
        let zi = self.z.with(i, self.alpha);
        let h = union_path(
            self.g,
            self.p,
            classes,
            &u.with(self.p, c),
            &zi.with(self.p, c),
            self.budget,
        )?;
        let b = self.suf(&zi)?;
        Ok(join(&[std::slice::from_ref(u), h.vertices(), &b]))
    }
}

fn crossed(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, p: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let (alpha, beta) = (u.at(p), v.at(p));
    let q = v.position_of(alpha).expect("alpha is a label of v");
    let (u_only, v_only, w) = sides(g, u, v);
    let gamma = u_only.last().copied().unwrap_or_else(|| w[0]);
    let z = v.with(q, gamma);
    let y = z.with(p, alpha);
    let mut br = Bridge::new(g, u, v, p, y.clone(), z.clone(), budget)?;
    let extra = l - base_l(g);
    let mut paths = Vec::new();
    let mut skip = Vec::new();
    if extra <= w.len() {
        for &c in &w[..extra - 1] {
            paths.push(through(g, p, c, u, v, budget)?);
        }
        let c = w[extra - 1];
        let rest = set(u_only.iter().chain(&w[extra - 1..]).copied());
        let h = union_path(g, p, &rest, &u.with(p, c), &v.with(p, c), budget)?;
        paths.push(wrap(u, &h, v));
    } else {
        let j = extra - w.len();
        for &c in &w {
            paths.push(through(g, p, c, u, v, budget)?);
        }
        for i in 0..j - 1 {
            let at = v.position_of(v_only[i]).expect("label of v");
            skip.push(at);
            paths.push(br.toward_v(at, u_only[i], v)?);
            paths.push(br.away_from_u(u, at, v_only[i], &set([v_only[i]]))?);
        }
        let last = *v_only.last().expect("u and v differ off p");
        let at = v.position_of(last).expect("label of v");
        paths.push(br.away_from_u(u, at, last, &set([last]))?);
        let a = br.pre(&y.with(q, beta))?;
        let rest = set(u_only[j - 1..].iter().copied());
        let r = union_path(g, p, &rest, &y.with(q, beta).with(p, gamma), &v.with(p, gamma), budget)?;
        paths.push(join(&[&a, r.vertices(), std::slice::from_ref(v)]));
        let a = br.pre(&y.with(at, beta))?;
        let b = br.suf(&z.with(q, alpha))?;
        paths.push(join(&[&a, &[y.clone(), z.clone()], &b]));
        skip.extend([at, q]);
    }
    paths.extend(br.defaults(q, &skip, v)?);
    Ok(paths)
}

fn one_sided(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, p: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let (alpha, beta) = (u.at(p), v.at(p));
    let (mut u_only, v_only, w) = sides(g, u, v);
    u_only.retain(|&c| c != alpha);
    let star = *v_only.last().expect("alpha is not a label of v");
    let q = v.position_of(star).expect("label of v");
    let gamma = u_only.last().copied().unwrap_or_else(|| w[0]);
    let z = v.with(q, gamma);
    let y = z.with(p, alpha);
    let mut br = Bridge::new(g, u, v, p, y.clone(), z.clone(), budget)?;
    let extra = l - base_l(g);
    let mut paths = Vec::new();
    let skip = if extra <= w.len() + 1 {
        for &c in &w[..extra - 1] {
            paths.push(through(g, p, c, u, v, budget)?);
        }
        let rest = set(u_only.iter().chain(&w[extra - 1..]).copied().chain([star]));
        paths.push(br.away_from_u(u, q, star, &rest)?);
        let a = br.pre(&y.with(q, beta))?;
        paths.push(join(&[&a, &[y.clone(), z.clone(), v.clone()]]));
        vec![q]
    } else {
        let j = extra - w.len() - 1;
        for &c in &w {
            paths.push(through(g, p, c, u, v, budget)?);
        }
        let mut s = Vec::new();
        for i in 0..j - 1 {
            let at = v.position_of(v_only[i]).expect("label of v");
            s.push(at);
            paths.push(br.toward_v(at, u_only[i], v)?);
            paths.push(br.away_from_u(u, at, v_only[i], &set([v_only[i]]))?);
        }
        let pen = u_only.len() - 1;
        let at = v.position_of(v_only[pen]).expect("label of v");
        paths.push(br.toward_v(q, gamma, v)?);
        paths.push(br.away_from_u(u, at, v_only[pen], &set([v_only[pen]]))?);
        let rest = set(u_only[j - 1..pen].iter().copied().chain([star]));
        paths.push(br.away_from_u(u, q, star, &rest)?);
        let a = br.pre(&y.with(at, beta))?;
        paths.push(join(&[&a, &[y.clone(), z.clone(), v.clone()]]));
        s.extend([at, q]);
        s
    };
    paths.extend(br.defaults(q, &skip, v)?);
    Ok(paths)
}

/// `u` and `v` share no label, `k >= 3`.
fn disjoint(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let (n, k) = (g.n(), g.k());
    let p = k - 1;
    let (up, vp) = (u.at(p), v.at(p));
    let w = labels_except(g, u.labels().iter().chain(v.labels()).copied());
    let y = v.with(p, up);
    let z = u.with(p, vp);
    let ylab = |j: usize| match j {
        j if j + 1 < k => u.at(j),
        j if j + 1 == k => vp,
        j => w[j - k],
    };
    let zlab = |j: usize| match j {
        j if j + 1 < k => v.at(j),
        j if j + 1 == k => up,
        j => w[j - k],
    };
    let yij = |i: usize, j: usize| y.with(i, ylab(j));
    let zij = |i: usize, j: usize| z.with(i, zlab(j));
    let l0 = base_l(g);
    let pc = class_container(g, p, up, u, &y, l0, budget)?;
    let qc = class_container(g, p, vp, &z, v, l0, budget)?;
    let mut pre = by_last_internal(&pc);
    let mut suf = by_first_internal(&qc);
    let extra = l - l0;
    let m = n - k;

    let mut paths = Vec::new();
    // (class at p, position, sources, sinks)
    let mut covers: Vec<(Label, usize, Vec<Vertex>, Vec<Vertex>)> = Vec::new();
    let mut tail: Option<(Vertex, Vec<Vertex>)> = None;
    let shifted = |i: usize| -> (Vec<Vertex>, Vec<Vertex>) {
        let c = v.at(i);
        let a = (0..m).map(|j| yij(i, j).with(p, c)).collect();
        let mut b: Vec<Vertex> = (0..m).filter(|&j| j != i).map(|j| zij(i, j).with(p, c)).collect();
        b.push(zij(i - 1, i - 1).with(p, c));
        (a, b)
    };

    let first = if extra == 1 {
        let row: Vec<usize> = (1..m).filter(|&j| j + 1 != k).collect();
        let c = u.at(0);
        let (ya, zb) = (yij(0, k - 1), zij(0, k - 1));
        let rest = set(labels_except(g, v.labels().iter().copied().chain([up])));
        let h = union_path(g, p, &rest, &ya.with(p, c), &zb.with(p, c), budget)?;
        let a = take(&mut pre, &ya, "disjoint/a")?;
        let b = take(&mut suf, &zb, "disjoint/a")?;
        paths.push(join(&[&a, h.vertices(), &b]));
        row
    } else if extra <= w.len() + 1 {
        let e = extra - 1;
        for &c in &w[..e - 1] {
            paths.push(through(g, p, c, u, v, budget)?);
        }
        let c = w[e - 1];
        let rest = set(labels_except(
            g,
            v.labels().iter().chain(&w[..e - 1]).copied().chain([up]),
        ));
        let h = union_path(g, p, &rest, &u.with(p, c), &v.with(p, c), budget)?;
        paths.push(wrap(u, &h, v));
        (1..m).collect()
    } else {
        let e = extra - w.len() - 1;
        for &c in &w {
            paths.push(through(g, p, c, u, v, budget)?);
        }
        let (u0, v0, last) = (u.at(0), v.at(0), u.at(k - 2));
        let start = u.with(p, v0);
        let x1 = g
            .vertices()
            .find(|x| x.at(0) == u0 && x.at(p) == v0 && !x.contains(last) && *x != start)
            .ok_or_else(|| Error::construction("disjoint/c", "no repair edge"))?;
        let x2 = x1.with(p, last);
        let rest = set((e - 1..k - 1).map(|i| u.at(i)));
        let r = union_path(g, p, &rest, &x2, &v.with(p, last), budget)?;
        let mut tail_path = r.into_vertices();
        tail_path.push(v.clone());
        tail = Some((x1.clone(), tail_path));
        let mut a = vec![start];
        let mut b = vec![x1];
        a.extend((1..m).map(|j| yij(0, j).with(p, v0)));
        b.extend((1..m).map(|j| zij(0, j).with(p, v0)));
        covers.push((v0, 0, a, b));
        for i in 1..e {
            let c = v.at(i);
            let mut a: Vec<Vertex> = (0..m).filter(|&j| j != i).map(|j| yij(i, j).with(p, c)).collect();
            a.push(u.with(p, c));
            let (_, b) = shifted(i);
            covers.push((c, i, a, b));
            let prev = u.at(i - 1);
            let start = yij(i, i);
            let h = class_path(g, p, prev, &start.with(p, prev), &v.with(p, prev), budget)?;
            let a = take(&mut pre, &start, "disjoint/c")?;
            paths.push(join(&[&a, h.vertices(), std::slice::from_ref(v)]));
        }
        for i in e..k - 1 {
            let (a, b) = shifted(i);
            covers.push((v.at(i), i, a, b));
        }
        Vec::new()
    };
    if !first.is_empty() {
        let c = v.at(0);
        let a = first.iter().map(|&j| yij(0, j).with(p, c)).collect();
        let b = first.iter().map(|&j| zij(0, j).with(p, c)).collect();
        covers.push((c, 0, a, b));
        for i in 1..k - 1 {
            let (a, b) = shifted(i);
            covers.push((v.at(i), i, a, b));
        }
    }

    for (c, i, a, b) in covers {
        let start = u.with(p, c);
        for h in class_cover(g, p, c, i, &a, &b, budget)? {
            let (s, t) = (h.first().unwrap().clone(), h.last().unwrap().clone());
            let head = if s == start {
                vec![u.clone()]
            } else {
                take(&mut pre, &s.with(p, up), "disjoint/cover")?
            };
            let rest = match &tail {
                Some((x1, path)) if *x1 == t => path.clone(),
                _ => take(&mut suf, &t.with(p, vp), "disjoint/cover")?,
            };
            paths.push(join(&[&head, h.vertices(), &rest]));
        }
    }
    let a = take(&mut pre, &yij(0, 0), "disjoint")?;
    paths.push(join(&[&a, &[y.clone(), v.clone()]]));
    let b = take(&mut suf, &zij(k - 2, k - 2), "disjoint")?;
    paths.push(join(&[&[u.clone(), z.clone()], &b]));
    Ok(paths)
}

/// `u` and `v` share no label, `k = 2`: solved for `u = 12`, `v = 34` and
/// relabelled.
fn disjoint_pair(g: Arrangement, u: &Vertex, v: &Vertex, l: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let mut labels = vec![u.at(0), u.at(1), v.at(0), v.at(1)];
    labels.extend(labels_except(g, labels.clone()));
    let frame = Frame::labels_only(g, labels)?;
    in_frame(&frame, u, v, |_, _| pair_paths(g, l, budget))
}

fn pair_paths(g: Arrangement, l: usize, budget: SearchBudget) -> Result<Vec<Path>> {
    let n = g.n() as Label;
    if n == 5 {
        return Ok(base_table_a52(l)?.into_paths());
    }
    let x = |a: Label, b: Label| Vertex::new(&[a, b]);
    let xs = |pairs: &[(Label, Label)]| Path::new(pairs.iter().map(|&(a, b)| x(a, b)).collect());
    let run = |parts: &[&[Vertex]]| join(parts);
    let (u, v) = (x(1, 2), x(3, 4));
    let mut paths = vec![xs(&[(1, 2), (3, 2), (3, 4)]), xs(&[(1, 2), (1, 4), (3, 4)])];
    let l = l as Label;
    if l == n - 1 {
        let rest = set(labels_except(g, [2, 4]));
        let r1 = union_path(g, 1, &rest, &x(4, 1), &x(2, 1), budget)?;
        paths.push(run(&[&[u.clone(), x(4, 2)], r1.vertices(), &[x(2, 4), v.clone()]]));
        for i in 5..=n {
            paths.push(xs(&[(1, 2), (i, 2), (i, 4), (3, 4)]));
        }
        return Ok(paths);
    }
    let r1 = class_path(g, 1, 1, &x(4, 1), &x(3, 1), budget)?;
    paths.push(run(&[&[u.clone(), x(4, 2)], r1.vertices(), std::slice::from_ref(&v)]));
    let top = if l == n { 4 } else { l + 3 - n };
    let r2_classes = if l == n {
        set(labels_except(g, [1, 2, 4]))
    } else {
        set([3])
    };
    let r2 = union_path(g, 1, &r2_classes, &x(1, 3), &x(2, 3), budget)?;
    paths.push(run(&[std::slice::from_ref(&u), r2.vertices(), &[x(2, 4), v.clone()]]));
    for i in 5..=n {
        paths.push(xs(&[(1, 2), (i, 2), (i, 4), (3, 4)]));
    }
    if l > n {
        for j in 5..=top {
            let r = class_path(g, 1, j, &x(1, j), &x(3, j), budget)?;
            paths.push(wrap(&u, &r, &v));
        }
        let rest = set(labels_except(g, 1..=top));
        let h = union_path(g, 1, &rest, &x(1, top + 1), &x(3, top + 1), budget)?;
        paths.push(wrap(&u, &h, &v));
    }
    Ok(paths)
}
