//! The fixed test corpus used by `verify` and the acceptance suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{boolean, bound, chain, horizontal_sum, m_lattice, reversed_chain, sandwich, step, StepVariant};
use crate::involution::Structure;
use crate::order::FiniteLattice;

pub const RANDOM_SEED: u64 = 0x1a77_1ca5;
pub const RANDOM_COUNT: usize = 25;
pub const RANDOM_MAX_N: usize = 7;

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub structure: Structure,
}

impl Entry {
    fn new(name: impl Into<String>, structure: impl Into<Structure>) -> Self {
        Entry {
            name: name.into(),
            structure: structure.into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Corpus {
    /// Chains `L₁..L₆` (with order reversal), `L₂²`, `L₂³` (with complement),
    /// `M₃..M₅`, `N₅`, `B(L₂²)` (with extended complement) and seeded random
    /// lattices.
    pub base: Vec<Entry>,
    /// Further involution lattices: horizontal sums, sandwiches and steps.
    pub involutions: Vec<Entry>,
}

pub fn n5() -> FiniteLattice {
    FiniteLattice::from_cover_relation(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("N5 is a lattice")
}

/// A random lattice with `3..=max_n` elements: bottom `0`, top `n−1`, and a
/// random order on the middle elements, resampled until it is a lattice.
/// The result is rebuilt from its cover relation.
pub fn random_lattice(rng: &mut impl Rng, max_n: usize) -> FiniteLattice {
    let max_n = max_n.max(3);
    loop {
        let n = rng.gen_range(3..=max_n);
        let mut rel = vec![vec![false; n]; n];
        for (i, row) in rel.iter_mut().enumerate().take(n - 1).skip(1) {
            for cell in row.iter_mut().take(n - 1).skip(i + 1) {
                *cell = rng.gen_bool(0.4);
            }
        }
        let candidate = FiniteLattice::from_order(n, |x, y| x == 0 || y == n - 1 || rel[x][y]);
        if let Ok(l) = candidate {
            return FiniteLattice::from_cover_relation(n, &l.covers()).expect("same order");
        }
    }
}

pub fn random_lattices(count: usize, max_n: usize, seed: u64) -> Vec<FiniteLattice> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_lattice(&mut rng, max_n)).collect()
}

impl Corpus {
    pub fn standard() -> Self {
        let mut base = Vec::new();
        for n in 1..=6 {
            base.push(Entry::new(format!("chain({n})"), reversed_chain(n).expect("n >= 1")));
        }
        base.push(Entry::new("bool(2)", boolean(2).expect("small")));
        base.push(Entry::new("bool(3)", boolean(3).expect("small")));
        for k in 3..=5 {
            base.push(Entry::new(format!("m({k})"), m_lattice(k).expect("k >= 1")));
        }
        base.push(Entry::new("n5", n5()));
        let b2 = Structure::Involution(boolean(2).expect("small"));
        base.push(Entry::new("bound(bool(2))", bound(&b2).result));
        for (i, l) in random_lattices(RANDOM_COUNT, RANDOM_MAX_N, RANDOM_SEED).into_iter().enumerate() {
            base.push(Entry::new(format!("random#{i:02}"), l));
        }

        let rc3 = Structure::Involution(reversed_chain(3).expect("n >= 1"));
        let b1 = boolean(1).expect("small");
        let hsum = |parts: &[Structure]| horizontal_sum(parts).expect("nontrivial summands").result;
        let involutions = vec![
            Entry::new("bool(1)", b1.clone()),
            Entry::new("chain(7)", reversed_chain(7).expect("n >= 1")),
            Entry::new("hsum(rc3,rc3,rc3)", hsum(&[rc3.clone(), rc3.clone(), rc3.clone()])),
            Entry::new("hsum(bool(2),bool(2))", hsum(&[b2.clone(), b2.clone()])),
            Entry::new("hsum(bool(2),rc3)", hsum(&[b2.clone(), rc3.clone()])),
            Entry::new("sandwich(bool(2),unit)", sandwich(boolean(2).expect("small").lattice(), None).result),
            Entry::new("sandwich(n5,unit)", sandwich(&n5(), None).result),
            Entry::new("sandwich(chain(2),bool(2))", sandwich(&chain(2).expect("n >= 1"), Some(&boolean(2).expect("small"))).result),
            Entry::new("sandwich(m(3),bool(1))", sandwich(&m_lattice(3).expect("k >= 1"), Some(&b1)).result),
            Entry::new("step(bool(2),kleene)", step(&b2, StepVariant::Kleene).expect("involution").result),
            Entry::new("step(rc3,double3)", step(&rc3, StepVariant::Double3).expect("involution").result),
        ];
        Corpus { base, involutions }
    }

    pub fn all(&self) -> impl Iterator<Item = &Entry> {
        self.base.iter().chain(&self.involutions)
    }

    pub fn with_involution(&self) -> impl Iterator<Item = &Entry> {
        self.all().filter(|e| e.structure.inv().is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_lattices_are_deterministic_and_small() {
        let a = random_lattices(RANDOM_COUNT, RANDOM_MAX_N, RANDOM_SEED);
        let b = random_lattices(RANDOM_COUNT, RANDOM_MAX_N, RANDOM_SEED);
        assert_eq!(a, b);
        assert!(a.iter().all(|l| (3..=7).contains(&l.n())));
    }

    #[test]
    fn corpus_shape() {
        let c = Corpus::standard();
        assert_eq!(c.base.len(), 6 + 2 + 3 + 1 + 1 + RANDOM_COUNT);
        assert!(c.with_involution().count() >= 20);
    }
}
