//! Oracles written from the definitions alone, sharing nothing with the crate
//! beyond its public types.

#![allow(dead_code)]

use std::collections::HashSet;

use spancon::{Arrangement, Path, Vertex};

/// All arrangements of `k` labels from `1..=n`, by direct recursion.
pub fn arrangements(n: usize, k: usize) -> Vec<Vec<u8>> {
    fn grow(n: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for l in 1..=n as u8 {
            if !cur.contains(&l) {
                cur.push(l);
                grow(n, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(n, k, &mut Vec::new(), &mut out);
    out
}

/// Adjacent iff the arrangements differ in exactly one position.
pub fn adjacent(a: &[u8], b: &[u8]) -> bool {
    a.len() == b.len() && a.iter().zip(b).filter(|(x, y)| x != y).count() == 1
}

pub fn factorial_ratio(n: usize, m: usize) -> u128 {
    ((m + 1)..=n).map(|x| x as u128).product()
}

pub fn vx(g: &Arrangement, s: &str) -> Vertex {
    g.parse_vertex(s).unwrap()
}

fn labels(p: &Path) -> Vec<Vec<u8>> {
    p.vertices().iter().map(|x| x.labels().to_vec()).collect()
}

/// Checks the container definition from scratch: every path runs `u` to `v`
/// along edges, nothing repeats, interiors are disjoint, at most one direct
/// edge, and the union is `host`.
pub fn is_spanning_container(host: &[Vec<u8>], u: &[u8], v: &[u8], paths: &[Path]) -> Result<(), String> {
    let host_set: HashSet<&[u8]> = host.iter().map(|x| x.as_slice()).collect();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(u.to_vec());
    seen.insert(v.to_vec());
    let mut direct = 0;
    for (i, p) in paths.iter().enumerate() {
        let vs = labels(p);
        if vs.first().map(|x| x.as_slice()) != Some(u) || vs.last().map(|x| x.as_slice()) != Some(v) {
            return Err(format!("path {i} has wrong ends"));
        }
        if vs.len() == 2 {
            direct += 1;
        }
        for w in vs.windows(2) {
            if !adjacent(&w[0], &w[1]) {
                return Err(format!("path {i}: {:?} {:?} not adjacent", w[0], w[1]));
            }
        }
        for x in &vs[1..vs.len() - 1] {
            if !host_set.contains(x.as_slice()) {
                return Err(format!("path {i}: {x:?} outside host"));
            }
            if !seen.insert(x.clone()) {
                return Err(format!("path {i}: {x:?} repeated"));
            }
        }
    }
    if direct > 1 {
        return Err("direct edge used twice".into());
    }
    if seen.len() != host.len() || !host.iter().all(|x| seen.contains(x)) {
        return Err(format!("covers {} of {} vertices", seen.len(), host.len()));
    }
    Ok(())
}

/// Whether `p` visits every vertex of `host` exactly once, from `u` to `v`, along edges.
pub fn is_hamiltonian(host: &[Vec<u8>], u: &[u8], v: &[u8], p: &Path) -> bool {
    let vs = labels(p);
    let distinct: HashSet<&Vec<u8>> = vs.iter().collect();
    let host_set: HashSet<&Vec<u8>> = host.iter().collect();
    vs.len() == host.len()
        && distinct == host_set
        && vs.first().map(|x| x.as_slice()) == Some(u)
        && vs.last().map(|x| x.as_slice()) == Some(v)
        && vs.windows(2).all(|w| adjacent(&w[0], &w[1]))
}

/// Parity of the permutation of `1..=n` completed from the arrangement by
/// appending the one missing label.
pub fn parity(a: &[u8], n: usize) -> bool {
    let mut perm: Vec<u8> = a.to_vec();
    perm.extend((1..=n as u8).filter(|l| !a.contains(l)));
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}
