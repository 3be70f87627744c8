//! Square boolean matrices stored as packed `u64` rows.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub(crate) fn identity(n: usize) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            m.set(i, i);
        }
        m
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    #[inline]
    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub(crate) fn row_count(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn row_iter(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }

    /// Warshall closure: afterwards `get(i, j)` holds iff j is reachable from i.
    pub(crate) fn transitive_closure(&mut self) {
        let words = self.words;
        for k in 0..self.n {
            let pivot: Vec<u64> = self.row(k).to_vec();
            for i in 0..self.n {
                if i != k && self.get(i, k) {
                    let row = &mut self.bits[i * words..(i + 1) * words];
                    for (dst, src) in row.iter_mut().zip(&pivot) {
                        *dst |= src;
                    }
                }
            }
        }
    }

    pub(crate) fn transpose(&self) -> Self {
        let mut t = Self::new(self.n);
        for i in 0..self.n {
            for j in self.row_iter(i) {
                t.set(j, i);
            }
        }
        t
    }

    /// Bitwise AND of two rows, as a fresh word vector.
    pub(crate) fn row_and(&self, i: usize, j: usize) -> Vec<u64> {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| a & b)
            .collect()
    }
}

pub(crate) fn words_iter(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let bit = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(w * 64 + bit)
        })
    })
}

/// `sub ⊆ sup` for equal-length word slices.
pub(crate) fn words_subset(sub: &[u64], sup: &[u64]) -> bool {
    sub.iter().zip(sup).all(|(a, b)| a & !b == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_a_path_is_total_order() {
        let mut m = BitMatrix::identity(70);
        for i in 0..69 {
            m.set(i, i + 1);
        }
        m.transitive_closure();
        assert!(m.get(0, 69));
        assert!(m.get(3, 65));
        assert!(!m.get(65, 3));
        assert_eq!(m.row_count(0), 70);
        assert_eq!(m.row_iter(68).collect::<Vec<_>>(), vec![68, 69]);
    }

    #[test]
    fn transpose_swaps_indices() {
        let mut m = BitMatrix::new(3);
        m.set(0, 2);
        let t = m.transpose();
        assert!(t.get(2, 0));
        assert!(!t.get(0, 2));
    }
}
