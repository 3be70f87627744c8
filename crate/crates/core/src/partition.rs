//! Equivalence relations on `0..n` in canonical block form.
//!
//! A partition is stored as a restricted-growth string: element `x` carries
//! the index of its block, and blocks are numbered in order of their least
//! element. Two partitions are equal iff their label vectors are equal.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<u32>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionParseError {
    #[error("`{0}` is not an element index")]
    BadElement(String),
    #[error("element {0} appears twice")]
    Repeated(usize),
    #[error("element {0} is missing")]
    Missing(usize),
    #[error("empty block")]
    EmptyBlock,
}

impl Partition {
    /// Δ, the identity relation.
    pub fn discrete(n: usize) -> Self {
        Partition {
            labels: (0..n as u32).collect(),
        }
    }

    /// ∇, the total relation.
    pub fn total(n: usize) -> Self {
        Partition {
            labels: vec![0; n],
        }
    }

    /// Canonicalizes arbitrary block labels.
    pub fn from_labels<T: Copy + Eq + std::hash::Hash>(raw: &[T]) -> Self {
        let mut seen = std::collections::HashMap::new();
        let labels = raw
            .iter()
            .map(|l| {
                let next = seen.len() as u32;
                *seen.entry(*l).or_insert(next)
            })
            .collect();
        Partition { labels }
    }

    /// Builds a partition from blocks; elements not mentioned become singletons.
    pub fn from_blocks<B: AsRef<[usize]>>(n: usize, blocks: &[B]) -> Self {
        let mut raw: Vec<usize> = (0..n).collect();
        for block in blocks {
            let block = block.as_ref();
            if let Some(&first) = block.first() {
                for &x in block {
                    raw[x] = n + first;
                }
            }
        }
        Self::from_labels(&raw)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn block_of(&self, x: usize) -> u32 {
        self.labels[x]
    }

    #[inline]
    pub fn related(&self, x: usize, y: usize) -> bool {
        self.labels[x] == self.labels[y]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks sorted by least element, each sorted ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.labels.iter().enumerate() {
            blocks[b as usize].push(x);
        }
        blocks
    }

    pub fn class_of(&self, x: usize) -> Vec<usize> {
        let b = self.labels[x];
        (0..self.n()).filter(|&y| self.labels[y] == b).collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.num_blocks() == self.n()
    }

    pub fn is_total(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.n(), other.n());
        let mut image = vec![u32::MAX; self.num_blocks()];
        for (x, &b) in self.labels.iter().enumerate() {
            let target = &mut image[b as usize];
            if *target == u32::MAX {
                *target = other.labels[x];
            } else if *target != other.labels[x] {
                return false;
            }
        }
        true
    }

    /// Transitive closure of the union.
    pub fn join(&self, other: &Partition) -> Partition {
        debug_assert_eq!(self.n(), other.n());
        let mut uf = UnionFind::new(self.n());
        for p in [self, other] {
            let mut first = vec![usize::MAX; p.num_blocks()];
            for (x, &b) in p.labels.iter().enumerate() {
                let f = &mut first[b as usize];
                if *f == usize::MAX {
                    *f = x;
                } else {
                    uf.union(*f, x);
                }
            }
        }
        uf.into_partition()
    }

    /// Intersection.
    pub fn meet(&self, other: &Partition) -> Partition {
        debug_assert_eq!(self.n(), other.n());
        let pairs: Vec<(u32, u32)> = self
            .labels
            .iter()
            .zip(&other.labels)
            .map(|(&a, &b)| (a, b))
            .collect();
        Partition::from_labels(&pairs)
    }

    /// Image under an element map, e.g. θ′ for an involution.
    pub fn image(&self, map: &[usize]) -> Partition {
        let mut raw = vec![0u32; self.n()];
        for (x, &b) in self.labels.iter().enumerate() {
            raw[map[x]] = b;
        }
        Partition::from_labels(&raw)
    }

    /// θ ∩ S², re-indexed by position in `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Partition {
        let raw: Vec<u32> = subset.iter().map(|&x| self.labels[x]).collect();
        Partition::from_labels(&raw)
    }
}

impl fmt::Display for Partition {
    /// Blocks as space-separated elements joined with `|`, e.g. `0 1|2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&text.join("|"))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = PartitionParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let block = part
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| PartitionParseError::BadElement(t.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if block.is_empty() {
                return Err(PartitionParseError::EmptyBlock);
            }
            blocks.push(block);
        }
        let n = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for &x in blocks.iter().flatten() {
            if x >= n {
                return Err(PartitionParseError::Missing(
                    (0..n).find(|&y| !seen[y]).unwrap_or(0),
                ));
            }
            if seen[x] {
                return Err(PartitionParseError::Repeated(x));
            }
            seen[x] = true;
        }
        Ok(Partition::from_blocks(n, &blocks))
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns false if already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}

/// Every partition of `0..n`, via restricted-growth strings.
pub fn all_partitions(n: usize) -> impl Iterator<Item = Partition> {
    let mut rgs: Option<Vec<u32>> = Some(vec![0; n]);
    std::iter::from_fn(move || {
        let current = rgs.take()?;
        // advance: bump the rightmost position that may grow
        let mut next = current.clone();
        let mut i = n;
        while i > 1 {
            i -= 1;
            let max_prefix = next[..i].iter().copied().max().unwrap_or(0);
            if next[i] <= max_prefix {
                next[i] += 1;
                for v in next.iter_mut().skip(i + 1) {
                    *v = 0;
                }
                rgs = Some(next);
                break;
            }
        }
        Some(Partition { labels: current })
    })
}
