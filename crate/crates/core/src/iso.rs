//! Lattice isomorphism by invariant-pruned backtracking.
//!
//! Elements of the first lattice are assigned in index order and candidates
//! are tried in ascending order, so the bijection returned is the
//! lexicographically least isomorphism.

use crate::order::FiniteLattice;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Invariant {
    up: usize,
    down: usize,
    upper_covers: usize,
    lower_covers: usize,
}

fn invariants(l: &FiniteLattice) -> Vec<Invariant> {
    let mut upper = vec![0; l.n()];
    let mut lower = vec![0; l.n()];
    for (x, y) in l.covers() {
        upper[x] += 1;
        lower[y] += 1;
    }
    (0..l.n())
        .map(|x| Invariant {
            up: l.up_count(x),
            down: l.down_count(x),
            upper_covers: upper[x],
            lower_covers: lower[x],
        })
        .collect()
}

/// Returns an order isomorphism `a → b` as an index map, or `None`.
///
/// An order isomorphism between lattices preserves joins and meets.
pub fn is_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<usize>> {
    if a.n() != b.n() {
        return None;
    }
    let ia = invariants(a);
    let ib = invariants(b);
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let n = a.n();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| ia[x] == ib[y]).collect())
        .collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    a: &FiniteLattice,
    b: &FiniteLattice,
    candidates: &[Vec<usize>],
    x: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if x == a.n() {
        return true;
    }
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        let consistent = (0..x).all(|p| {
            let q = map[p];
            a.leq(p, x) == b.leq(q, y) && a.leq(x, p) == b.leq(y, q)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(a, b, candidates, x + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

/// Checks that `map` is a bijection `a → b` preserving join and meet.
pub fn is_lattice_isomorphism(a: &FiniteLattice, b: &FiniteLattice, map: &[usize]) -> bool {
    if a.n() != b.n() || map.len() != a.n() {
        return false;
    }
    let mut seen = vec![false; b.n()];
    for &y in map {
        if y >= b.n() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..a.n()).all(|x| {
        (0..a.n()).all(|y| {
            map[a.join(x, y)] == b.join(map[x], map[y]) && map[a.meet(x, y)] == b.meet(map[x], map[y])
        })
    })
}
