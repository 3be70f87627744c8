//! Finite lattices as explicit order relations with precomputed join/meet tables.
//!
//! Elements are the integers `0..n`. Bottom and top are computed from the
//! order, not fixed indices; the constructions in [`crate::constructions`]
//! document their own numbering.

use std::fmt;

use thiserror::Error;

use crate::bits::{words_iter, words_subset, BitMatrix};
use crate::verdict::{triples, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Join,
    Meet,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Join => "join",
            BoundKind::Meet => "meet",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("element {element} out of range for a {n}-element universe")]
    OutOfRange { element: usize, n: usize },
    #[error("cover relation has a cycle through {0} and {1}")]
    Cyclic(usize, usize),
    #[error("order has no global bottom and top")]
    Unbounded,
    #[error("no unique {kind} for ({}, {}); candidates {bounds:?}", pair.0, pair.1)]
    NotALattice {
        pair: (usize, usize),
        kind: BoundKind,
        bounds: Vec<usize>,
    },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

/// A finite bounded lattice on the universe `0..n`.
#[derive(Clone)]
pub struct FiniteLattice {
    n: usize,
    leq: BitMatrix,
    geq: BitMatrix,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
    labels: Option<Vec<String>>,
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.leq == other.leq && self.labels == other.labels
    }
}

impl Eq for FiniteLattice {}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("n", &self.n)
            .field("covers", &self.covers())
            .finish()
    }
}

impl FiniteLattice {
    /// Builds the lattice whose order is the reflexive-transitive closure of `covers`.
    pub fn from_cover_relation(n: usize, covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut leq = BitMatrix::identity(n);
        for &(x, y) in covers {
            for e in [x, y] {
                if e >= n {
                    return Err(LatticeError::OutOfRange { element: e, n });
                }
            }
            leq.set(x, y);
        }
        leq.transitive_closure();
        Self::from_closed_order(n, leq)
    }

    /// Builds a lattice from an order predicate. The predicate must already be
    /// reflexive and transitive; antisymmetry and the lattice property are checked.
    pub fn from_order<F>(n: usize, leq: F) -> Result<Self, LatticeError>
    where
        F: Fn(usize, usize) -> bool,
    {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut m = BitMatrix::new(n);
        for x in 0..n {
            for y in 0..n {
                if x == y || leq(x, y) {
                    m.set(x, y);
                }
            }
        }
        m.transitive_closure();
        Self::from_closed_order(n, m)
    }

    fn from_closed_order(n: usize, leq: BitMatrix) -> Result<Self, LatticeError> {
        for x in 0..n {
            for y in leq.row_iter(x) {
                if y != x && leq.get(y, x) {
                    return Err(LatticeError::Cyclic(x.min(y), x.max(y)));
                }
            }
        }
        let geq = leq.transpose();
        let bottom = (0..n).find(|&x| leq.row_count(x) == n);
        let top = (0..n).find(|&x| geq.row_count(x) == n);
        let (bottom, top) = match (bottom, top) {
            (Some(b), Some(t)) => (b, t),
            _ => return Err(LatticeError::Unbounded),
        };
        let join = bound_table(n, &leq, &geq, BoundKind::Join)?;
        let meet = bound_table(n, &geq, &leq, BoundKind::Meet)?;
        Ok(FiniteLattice {
            n,
            leq,
            geq,
            join,
            meet,
            bottom,
            top,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, LatticeError> {
        if labels.len() != self.n {
            return Err(LatticeError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq.get(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq.get(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y] as usize
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    /// Elements `y ≥ x`, ascending.
    pub fn up_set(&self, x: usize) -> Vec<usize> {
        self.leq.row_iter(x).collect()
    }

    /// Elements `y ≤ x`, ascending.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        self.geq.row_iter(x).collect()
    }

    pub(crate) fn up_count(&self, x: usize) -> usize {
        self.leq.row_count(x)
    }

    pub(crate) fn down_count(&self, x: usize) -> usize {
        self.geq.row_count(x)
    }

    /// The cover relation `x ⋖ y`, sorted lexicographically.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.leq.row_iter(x) {
                if y == x {
                    continue;
                }
                // the interval [x, y] has exactly two elements
                let interval = self
                    .leq
                    .row(x)
                    .iter()
                    .zip(self.geq.row(y))
                    .map(|(a, b)| (a & b).count_ones())
                    .sum::<u32>();
                if interval == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Same universe, reversed order.
    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice {
            n: self.n,
            leq: self.geq.clone(),
            geq: self.leq.clone(),
            join: self.meet.clone(),
            meet: self.join.clone(),
            bottom: self.top,
            top: self.bottom,
            labels: self.labels.clone(),
        }
    }

    /// All filters. Every filter of a finite lattice is principal, so these are
    /// the up-sets `[a)` in element order.
    pub fn filters(&self) -> SubsetFamily {
        SubsetFamily {
            n: self.n,
            members: (0..self.n).map(|a| self.up_set(a)).collect(),
        }
    }

    /// All ideals `(a]`, in element order.
    pub fn ideals(&self) -> SubsetFamily {
        SubsetFamily {
            n: self.n,
            members: (0..self.n).map(|a| self.down_set(a)).collect(),
        }
    }

    /// Filters found by testing every nonempty subset for up-closure and
    /// meet-closure. Returns `None` above `max_n` elements.
    pub fn filters_exhaustive(&self, max_n: usize) -> Option<SubsetFamily> {
        self.closed_subsets_exhaustive(max_n, true)
    }

    pub fn ideals_exhaustive(&self, max_n: usize) -> Option<SubsetFamily> {
        self.closed_subsets_exhaustive(max_n, false)
    }

    fn closed_subsets_exhaustive(&self, max_n: usize, upward: bool) -> Option<SubsetFamily> {
        let n = self.n;
        if n > max_n || n >= 32 {
            return None;
        }
        let mut members = Vec::new();
        for mask in 1u64..(1u64 << n) {
            let has = |x: usize| mask >> x & 1 == 1;
            let closed = (0..n).filter(|&x| has(x)).all(|x| {
                (0..n).all(|y| {
                    let reach = if upward { self.leq(x, y) } else { self.leq(y, x) };
                    let op_ok = !has(y)
                        || has(if upward { self.meet(x, y) } else { self.join(x, y) });
                    (!reach || has(y)) && op_ok
                })
            });
            if closed {
                members.push((0..n).filter(|&x| has(x)).collect());
            }
        }
        members.sort();
        Some(SubsetFamily { n, members })
    }

    pub fn is_distributive(&self) -> Verdict {
        Verdict::first_failure(triples(self.n), |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
        })
    }

    pub fn is_modular(&self) -> Verdict {
        Verdict::first_failure(triples(self.n), |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            !self.leq(x, z) || self.join(x, self.meet(y, z)) == self.meet(self.join(x, y), z)
        })
    }

    /// Whether `subset` is closed under join and meet.
    pub fn is_sublattice(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.n];
        for &x in subset {
            member[x] = true;
        }
        subset.iter().all(|&x| {
            subset
                .iter()
                .all(|&y| member[self.join(x, y)] && member[self.meet(x, y)])
        })
    }
}

fn bound_table(
    n: usize,
    up: &BitMatrix,
    down: &BitMatrix,
    kind: BoundKind,
) -> Result<Vec<u32>, LatticeError> {
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        for y in x..n {
            let common = up.row_and(x, y);
            // the least common bound, if any, has the largest up-set among them
            let candidate = words_iter(&common).max_by_key(|&z| (up.row_count(z), std::cmp::Reverse(z)));
            let least = candidate.filter(|&z| words_subset(&common, up.row(z)));
            match least {
                Some(z) => {
                    table[x * n + y] = z as u32;
                    table[y * n + x] = z as u32;
                }
                None => {
                    let minimal: Vec<usize> = words_iter(&common)
                        .filter(|&z| words_iter(&common).all(|w| w == z || !down.get(z, w)))
                        .collect();
                    return Err(LatticeError::NotALattice {
                        pair: (x, y),
                        kind,
                        bounds: minimal,
                    });
                }
            }
        }
    }
    Ok(table)
}

/// A family of subsets of a lattice universe (filters, ideals, ...).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetFamily {
    n: usize,
    members: Vec<Vec<usize>>,
}

impl SubsetFamily {
    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    /// Same members, sorted, for order-insensitive comparison.
    pub fn sorted(&self) -> SubsetFamily {
        let mut members = self.members.clone();
        members.sort();
        SubsetFamily { n: self.n, members }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FiniteLattice {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FiniteLattice::from_cover_relation(n, &covers).unwrap()
    }

    fn square() -> FiniteLattice {
        FiniteLattice::from_cover_relation(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn m3() -> FiniteLattice {
        FiniteLattice::from_cover_relation(5, &[(0, 2), (0, 3), (0, 4), (2, 1), (3, 1), (4, 1)])
            .unwrap()
    }

    fn n5() -> FiniteLattice {
        // 0 < 1 < 2 < 4, 0 < 3 < 4
        FiniteLattice::from_cover_relation(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn three_chain_from_covers() {
        let l = chain(3);
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 2);
        assert!(l.leq(0, 2));
        assert_eq!(l.join(0, 1), 1);
        assert_eq!(l.meet(2, 1), 1);
        assert!(l.is_chain());
    }

    #[test]
    fn diamond_from_covers() {
        let l = square();
        assert_eq!(l.join(1, 2), 3);
        assert_eq!(l.meet(1, 2), 0);
        assert!(!l.is_chain());
        assert_eq!(l.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn two_minimal_upper_bounds_is_rejected() {
        let covers = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)];
        let err = FiniteLattice::from_cover_relation(6, &covers).unwrap_err();

        // oracle: scan pairs for the first without a least upper bound
        let leq = |x: usize, y: usize| -> bool {
            let mut reach = vec![x];
            let mut i = 0;
            while i < reach.len() {
                let z = reach[i];
                for &(a, b) in &covers {
                    if a == z && !reach.contains(&b) {
                        reach.push(b);
                    }
                }
                i += 1;
            }
            reach.contains(&y)
        };
        let mut expected = None;
        'outer: for x in 0..6 {
            for y in x..6 {
                let ubs: Vec<usize> = (0..6).filter(|&z| leq(x, z) && leq(y, z)).collect();
                let minimal: Vec<usize> = ubs
                    .iter()
                    .copied()
                    .filter(|&z| ubs.iter().all(|&w| w == z || !leq(w, z)))
                    .collect();
                if minimal.len() != 1 {
                    expected = Some(((x, y), minimal));
                    break 'outer;
                }
            }
        }
        let (pair, bounds) = expected.unwrap();
        assert_eq!(pair, (1, 2));
        assert_eq!(
            err,
            LatticeError::NotALattice {
                pair,
                kind: BoundKind::Join,
                bounds
            }
        );
    }

    #[test]
    fn unbounded_and_cyclic_orders() {
        assert_eq!(
            FiniteLattice::from_cover_relation(3, &[(0, 1), (0, 2)]).unwrap_err(),
            LatticeError::Unbounded
        );
        assert_eq!(
            FiniteLattice::from_cover_relation(2, &[(0, 1), (1, 0)]).unwrap_err(),
            LatticeError::Cyclic(0, 1)
        );
        assert_eq!(
            FiniteLattice::from_cover_relation(0, &[]).unwrap_err(),
            LatticeError::Empty
        );
        assert!(matches!(
            FiniteLattice::from_cover_relation(2, &[(0, 2)]),
            Err(LatticeError::OutOfRange { element: 2, n: 2 })
        ));
    }

    #[test]
    fn one_element_lattice() {
        let l = FiniteLattice::from_cover_relation(1, &[]).unwrap();
        assert_eq!(l.bottom(), l.top());
        assert_eq!(l.filters().len(), 1);
    }

    #[test]
    fn dual_swaps_bounds_and_tables() {
        let l = n5();
        let d = l.dual();
        assert_eq!(d.bottom(), 4);
        assert_eq!(d.top(), 0);
        assert_eq!(d.join(1, 3), l.meet(1, 3));
        assert_eq!(d.dual(), l);
    }

    #[test]
    fn filters_of_small_lattices() {
        let c3 = chain(3);
        assert_eq!(
            c3.filters().sorted().members(),
            &[vec![0, 1, 2], vec![1, 2], vec![2]]
        );
        assert_eq!(square().filters_exhaustive(16).unwrap().len(), 4);
        let l = n5();
        assert_eq!(l.filters_exhaustive(16).unwrap(), l.filters().sorted());
        assert_eq!(l.ideals_exhaustive(16).unwrap(), l.ideals().sorted());
        assert_eq!(l.ideals().sorted(), l.dual().filters().sorted());
    }

    #[test]
    fn distributive_and_modular_laws() {
        assert!(square().is_distributive().holds());
        assert!(m3().is_modular().holds());
        assert!(!m3().is_distributive().holds());
        let v = n5().is_modular();
        let w = v.witness().unwrap();
        let l = n5();
        assert!(l.leq(w[0], w[2]));
        assert_ne!(
            l.join(w[0], l.meet(w[1], w[2])),
            l.meet(l.join(w[0], w[1]), w[2])
        );
    }

    #[test]
    fn labels_must_match_size() {
        let err = chain(2).with_labels(vec!["x".into()]).unwrap_err();
        assert_eq!(err, LatticeError::LabelCount { expected: 2, got: 1 });
    }
}
