//! Transport of stored solutions along automorphisms of `A(n,k)`.

use crate::error::{Error, Result};
use crate::graph::{Arrangement, Frame, Label, Vertex};

/// A frame whose `to_real` sends `u0` to `u` and `v0` to `v`.
///
/// Label-only maps are tried first, then every position permutation in
/// lexicographic order combined with the label map it forces.
pub fn automorphism_transport(g: Arrangement, u0: &Vertex, v0: &Vertex, u: &Vertex, v: &Vertex) -> Result<Frame> {
    for x in [u0, v0, u, v] {
        g.validate(x)?;
    }
    let k = g.k();
    let mut positions: Vec<usize> = (0..k).collect();
    loop {
        if let Some(labels) = forced_labels(g, &positions, u0, v0, u, v) {
            return Frame::new(labels, positions.clone());
        }
        if !next_permutation(&mut positions) {
            break;
        }
    }
    Err(Error::construction(
        "transport",
        format!("no automorphism sends ({u0:?}, {v0:?}) to ({u:?}, {v:?})"),
    ))
}

fn forced_labels(
    g: Arrangement,
    positions: &[usize],
    u0: &Vertex,
    v0: &Vertex,
    u: &Vertex,
    v: &Vertex,
) -> Option<Vec<Label>> {
    let n = g.n();
    let mut map: Vec<Label> = vec![0; n];
    let mut used = vec![false; n + 1];
    for (from, to) in [(u0, u), (v0, v)] {
        for (j, &p) in positions.iter().enumerate() {
            let (c, r) = (from.at(j) as usize, to.at(p));
            if map[c - 1] == 0 {
                if used[r as usize] {
                    return None;
                }
                map[c - 1] = r;
                used[r as usize] = true;
            } else if map[c - 1] != r {
                return None;
            }
        }
    }
    let mut free = (1..=n as Label).filter(|&r| !used[r as usize]);
    for slot in map.iter_mut().filter(|s| **s == 0) {
        *slot = free.next().expect("counts match");
    }
    Some(map)
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len())
        .rev()
        .find(|&j| xs[j] > xs[i - 1])
        .expect("pivot has a successor");
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
