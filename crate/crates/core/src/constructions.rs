//! Lattice and involution-lattice constructions with fixed element numbering.
//!
//! Numbering contracts:
//!
//! * `chain(n)`: `0 < 1 < … < n−1`.
//! * `boolean(k)`: element `x` is the bitmask of a subset of `k` atoms; `x ≤ y`
//!   iff `x & y == x`; the involution is the complement.
//! * `horizontal_sum`: bottom `0`, top `1`, then the interior of each summand
//!   in summand order, each interior in the summand's index order.
//! * `m_lattice(k)`: `horizontal_sum` of `k` copies of `chain(3)`, so bottom
//!   `0`, top `1`, midpoints `2..k+2`.
//! * `ordinal_sum(L, M)`: `L` keeps `0..|L|`; `M`'s non-bottom elements follow
//!   in `M`'s index order.
//! * `bound(L)`: `L` keeps `0..|L|`; new bottom `|L|`, new top `|L|+1`.
//! * `step(M)`: `M` keeps `0..|M|`; new bottom `|M|`, new top `|M|+1`, then
//!   the two atoms `a = |M|+2` and `b = |M|+3` of the glued square.
//! * `sandwich(L, K)`: `ordinal_sum(ordinal_sum(L, K), Lᵈ)`.

use thiserror::Error;

use crate::congruence::{is_congruence, Signature};
use crate::involution::{trivial_brouwer, InvolutionError, InvolutionLattice, Structure};
use crate::order::FiniteLattice;
use crate::partition::{Partition, UnionFind};
use crate::verdict::Verdict;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("chain length must be at least 1")]
    EmptyChain,
    #[error("M_k needs k >= 1")]
    EmptyM,
    #[error("boolean algebra exponent {0} is too large")]
    BooleanTooLarge(usize),
    #[error("horizontal sum needs at least one summand")]
    EmptySum,
    #[error("summand {0} is trivial; horizontal sums need at least two elements per summand")]
    TrivialSummand(usize),
    #[error("horizontal sum mixes plain lattices and involution lattices")]
    MixedSummands,
    #[error("{0} needs an involution lattice")]
    NeedsInvolution(&'static str),
    #[error("K is not pseudo-Kleene: witness {0:?}")]
    NotPseudoKleene(Vec<usize>),
    #[error("{0} is not a congruence of its summand")]
    NotACongruence(&'static str),
    #[error("tower seed must have at least two elements")]
    TrivialSeed,
    #[error(transparent)]
    Involution(#[from] InvolutionError),
}

/// A construction result together with the embedding of each summand.
///
/// `identified` lists result elements hit by more than one summand element,
/// with their preimages as `(summand, element)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumWitness<T> {
    pub result: T,
    pub embeddings: Vec<Vec<usize>>,
    pub identified: Vec<(usize, Vec<(usize, usize)>)>,
}

impl<T> SumWitness<T> {
    fn new(result: T, size: usize, embeddings: Vec<Vec<usize>>) -> Self {
        let mut preimages = vec![Vec::new(); size];
        for (s, emb) in embeddings.iter().enumerate() {
            for (x, &y) in emb.iter().enumerate() {
                preimages[y].push((s, x));
            }
        }
        let identified = preimages
            .into_iter()
            .enumerate()
            .filter(|(_, p)| p.len() > 1)
            .collect();
        SumWitness {
            result,
            embeddings,
            identified,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SumWitness<U> {
        SumWitness {
            result: f(self.result),
            embeddings: self.embeddings,
            identified: self.identified,
        }
    }
}

/// The `n`-element chain.
pub fn chain(n: usize) -> Result<FiniteLattice, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::EmptyChain);
    }
    Ok(FiniteLattice::from_order(n, |x, y| x <= y).expect("a chain is a lattice"))
}

/// The `n`-element chain with its order reversal `x ↦ n−1−x`.
pub fn reversed_chain(n: usize) -> Result<InvolutionLattice, ConstructionError> {
    let c = chain(n)?;
    Ok(InvolutionLattice::new(c, (0..n).rev().collect())?)
}

/// The Boolean algebra `2^k` with complement as involution.
pub fn boolean(k: usize) -> Result<InvolutionLattice, ConstructionError> {
    if k > 12 {
        return Err(ConstructionError::BooleanTooLarge(k));
    }
    let n = 1usize << k;
    let full = n - 1;
    let l = FiniteLattice::from_order(n, |x, y| x & y == x).expect("a powerset is a lattice");
    Ok(InvolutionLattice::new(l, (0..n).map(|x| x ^ full).collect())?)
}

/// `M_k`: bounds plus `k` pairwise incomparable midpoints.
pub fn m_lattice(k: usize) -> Result<FiniteLattice, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::EmptyM);
    }
    let three = Structure::Lattice(chain(3)?);
    let summands = vec![three; k];
    let w = horizontal_sum(&summands)?;
    Ok(w.result.lattice().clone())
}

/// `L ⊕ M`: the top of `L` glued to the bottom of `M`.
pub fn ordinal_sum(l: &FiniteLattice, m: &FiniteLattice) -> SumWitness<FiniteLattice> {
    let nl = l.n();
    let mut m_emb = vec![0; m.n()];
    let mut next = nl;
    for (y, slot) in m_emb.iter_mut().enumerate() {
        if y == m.bottom() {
            *slot = l.top();
        } else {
            *slot = next;
            next += 1;
        }
    }
    let n = next;
    let mut m_pre = vec![usize::MAX; n];
    for (y, &z) in m_emb.iter().enumerate() {
        m_pre[z] = y;
    }
    let leq = |x: usize, y: usize| -> bool {
        match (x < nl, y < nl) {
            (true, true) => l.leq(x, y),
            (true, false) => true,
            (false, true) => false,
            (false, false) => m.leq(m_pre[x], m_pre[y]),
        }
    };
    let result = FiniteLattice::from_order(n, leq).expect("an ordinal sum of lattices is a lattice");
    SumWitness::new(result, n, vec![(0..nl).collect(), m_emb])
}

/// `α ⊕ β` on `L ⊕ M`: the classes of `α` and `β`, with the class of the
/// glued element merged.
pub fn congruence_osum(
    l: &FiniteLattice,
    m: &FiniteLattice,
    alpha: &Partition,
    beta: &Partition,
    w: &SumWitness<FiniteLattice>,
) -> Result<Partition, ConstructionError> {
    let lattice_con = |s: &FiniteLattice, p: &Partition| {
        p.n() == s.n()
            && is_congruence(&Structure::Lattice(s.clone()), Signature::Lat, p)
                .expect("lattice signature always applies")
    };
    if !lattice_con(l, alpha) {
        return Err(ConstructionError::NotACongruence("alpha"));
    }
    if !lattice_con(m, beta) {
        return Err(ConstructionError::NotACongruence("beta"));
    }
    Ok(glue_partitions(w.result.n(), &[(alpha, &w.embeddings[0]), (beta, &w.embeddings[1])]))
}

/// Union of the images of several partitions under their embeddings.
pub fn glue_partitions(n: usize, parts: &[(&Partition, &Vec<usize>)]) -> Partition {
    let mut uf = UnionFind::new(n);
    for (p, emb) in parts {
        for block in p.blocks() {
            for pair in block.windows(2) {
                uf.union(emb[pair[0]], emb[pair[1]]);
            }
        }
    }
    uf.into_partition()
}

/// Horizontal sum: all bottoms glued, all tops glued. Summands must all be
/// plain lattices or all involution lattices; Brouwer complements are dropped.
pub fn horizontal_sum(summands: &[Structure]) -> Result<SumWitness<Structure>, ConstructionError> {
    if summands.is_empty() {
        return Err(ConstructionError::EmptySum);
    }
    if let Some(i) = summands.iter().position(|s| s.n() < 2) {
        return Err(ConstructionError::TrivialSummand(i));
    }
    let with_inv = summands.iter().filter(|s| s.inv().is_some()).count();
    if with_inv != 0 && with_inv != summands.len() {
        return Err(ConstructionError::MixedSummands);
    }
    let mut embeddings = Vec::with_capacity(summands.len());
    // owner[z] = (summand, element) for interior elements
    let mut owner: Vec<(usize, usize)> = vec![(usize::MAX, 0), (usize::MAX, 1)];
    for (i, s) in summands.iter().enumerate() {
        let l = s.lattice();
        let mut emb = vec![0; l.n()];
        for (x, slot) in emb.iter_mut().enumerate() {
            *slot = if x == l.bottom() {
                0
            } else if x == l.top() {
                1
            } else {
                owner.push((i, x));
                owner.len() - 1
            };
        }
        embeddings.push(emb);
    }
    let n = owner.len();
    let leq = |x: usize, y: usize| -> bool {
        if x == 0 || y == 1 {
            return true;
        }
        if x == 1 || y == 0 {
            return false;
        }
        let (sx, ex) = owner[x];
        let (sy, ey) = owner[y];
        sx == sy && summands[sx].lattice().leq(ex, ey)
    };
    let lattice = FiniteLattice::from_order(n, leq).expect("a horizontal sum of bounded lattices is a lattice");
    let result = if with_inv == 0 {
        Structure::Lattice(lattice)
    } else {
        let mut inv = vec![0; n];
        for (s, emb) in summands.iter().zip(&embeddings) {
            let sinv = s.inv().expect("checked above");
            for (x, &z) in emb.iter().enumerate() {
                inv[z] = emb[sinv[x]];
            }
        }
        Structure::Involution(InvolutionLattice::new(lattice, inv)?)
    };
    Ok(SumWitness::new(result, n, embeddings))
}

/// `B(L)`: a new bottom and a new top adjoined. An involution extends by `0′ = 1`.
pub fn bound(s: &Structure) -> SumWitness<Structure> {
    let l = s.lattice();
    let n = l.n();
    let (bot, top) = (n, n + 1);
    let leq = |x: usize, y: usize| -> bool {
        if x == bot || y == top {
            return true;
        }
        if x == top || y == bot {
            return false;
        }
        l.leq(x, y)
    };
    let lattice = FiniteLattice::from_order(n + 2, leq).expect("bounding a lattice gives a lattice");
    let result = match s.inv() {
        None => Structure::Lattice(lattice),
        Some(inv) => {
            let mut ext = inv.to_vec();
            ext.extend([top, bot]);
            Structure::Involution(
                InvolutionLattice::new(lattice, ext).expect("extended involution stays valid"),
            )
        }
    };
    SumWitness::new(result, n + 2, vec![(0..n).collect()])
}

/// `L ⊕ K ⊕ Lᵈ` with `′|_L` the identity-on-indices map onto `Lᵈ`, `′|_K`
/// the involution of `K` and `′|_{Lᵈ}` its inverse. `None` for `K` is the
/// one-element algebra, giving `L ⊕ Lᵈ`.
pub fn sandwich(l: &FiniteLattice, k: Option<&InvolutionLattice>) -> SumWitness<InvolutionLattice> {
    let unit;
    let k = match k {
        Some(k) => k,
        None => {
            unit = InvolutionLattice::new(chain(1).expect("n = 1"), vec![0]).expect("identity on one element");
            &unit
        }
    };
    let first = ordinal_sum(l, k.lattice());
    let d = l.dual();
    let second = ordinal_sum(&first.result, &d);
    let n = second.result.n();
    let l_emb: Vec<usize> = first.embeddings[0].iter().map(|&x| second.embeddings[0][x]).collect();
    let k_emb: Vec<usize> = first.embeddings[1].iter().map(|&x| second.embeddings[0][x]).collect();
    let d_emb = second.embeddings[1].clone();
    let mut inv = vec![usize::MAX; n];
    for x in 0..l.n() {
        inv[l_emb[x]] = d_emb[x];
        inv[d_emb[x]] = l_emb[x];
    }
    for x in 0..k.n() {
        inv[k_emb[x]] = k_emb[k.inv()[x]];
    }
    let result = InvolutionLattice::new(second.result, inv).expect("sandwich involution is valid");
    SumWitness::new(result, n, vec![l_emb, k_emb, d_emb])
}

/// `L₂ ⊕ K ⊕ L₂` with the trivial Brouwer complement.
pub fn aol_sandwich(k: &InvolutionLattice) -> Result<SumWitness<InvolutionLattice>, ConstructionError> {
    if let Verdict::Fails(w) = k.is_pseudo_kleene() {
        return Err(ConstructionError::NotPseudoKleene(w));
    }
    let two = chain(2)?;
    let w = sandwich(&two, Some(k));
    let brouwer = trivial_brouwer(w.result.lattice());
    Ok(w.map(|s| s.with_brouwer(brouwer).expect("trivial Brouwer complement is valid")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepVariant {
    /// `B(M) ⊞ L₂²` with `a′ = b`.
    Kleene,
    /// `L₃ ⊞ B(M) ⊞ L₃` with `a′ = a`, `b′ = b`.
    Double3,
    /// `B(M) ⊞ L₂²` as a plain lattice.
    Plain,
}

impl StepVariant {
    pub fn name(self) -> &'static str {
        match self {
            StepVariant::Kleene => "kleene",
            StepVariant::Double3 => "double3",
            StepVariant::Plain => "plain",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "kleene" => Some(StepVariant::Kleene),
            "double3" => Some(StepVariant::Double3),
            "plain" => Some(StepVariant::Plain),
            _ => None,
        }
    }
}

/// `B(M) ⊞ L₂²`, numbered so that `M` is literally a subset of the result.
///
/// Embeddings: `M` by identity, and the square (in `boolean(2)` numbering
/// `0, a, b, 1`) onto `[|M|, |M|+2, |M|+3, |M|+1]`.
pub fn step(m: &Structure, variant: StepVariant) -> Result<SumWitness<Structure>, ConstructionError> {
    let l = m.lattice();
    let n = l.n();
    let (bot, top, a, b) = (n, n + 1, n + 2, n + 3);
    let leq = |x: usize, y: usize| -> bool {
        if x == y || x == bot || y == top {
            return true;
        }
        if x >= n || y >= n {
            return false;
        }
        l.leq(x, y)
    };
    let lattice = FiniteLattice::from_order(n + 4, leq).expect("B(M) ⊞ L₂² is a lattice");
    let result = match variant {
        StepVariant::Plain => Structure::Lattice(lattice),
        StepVariant::Kleene | StepVariant::Double3 => {
            let inv = m.inv().ok_or(ConstructionError::NeedsInvolution(variant.name()))?;
            let mut ext = inv.to_vec();
            ext.extend([top, bot]);
            if variant == StepVariant::Kleene {
                ext.extend([b, a]);
            } else {
                ext.extend([a, b]);
            }
            Structure::Involution(InvolutionLattice::new(lattice, ext)?)
        }
    };
    Ok(SumWitness::new(result, n + 4, vec![(0..n).collect(), vec![bot, a, b, top]]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::all_congruences;
    use crate::iso::is_isomorphic;

    fn lat(l: FiniteLattice) -> Structure {
        Structure::Lattice(l)
    }

    #[test]
    fn basic_families() {
        assert_eq!(chain(2).unwrap().covers(), vec![(0, 1)]);
        assert_eq!(chain(0), Err(ConstructionError::EmptyChain));
        let m3 = m_lattice(3).unwrap();
        assert_eq!(m3.n(), 5);
        assert_eq!((m3.bottom(), m3.top()), (0, 1));
        assert_eq!(all_congruences(&lat(m3), Signature::Lat).unwrap().len(), 2);
        assert_eq!(m_lattice(0), Err(ConstructionError::EmptyM));
        let b2 = boolean(2).unwrap();
        assert_eq!(b2.inv(), &[3, 2, 1, 0]);
        assert_eq!(b2.lattice().covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(boolean(0).unwrap().n(), 1);
    }

    #[test]
    fn ordinal_sums() {
        let two = chain(2).unwrap();
        let w = ordinal_sum(&two, &two);
        assert_eq!(w.result, chain(3).unwrap());
        assert_eq!(w.embeddings, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(w.identified, vec![(1, vec![(0, 1), (1, 0)])]);
        let sq = boolean(2).unwrap().lattice().clone();
        assert_eq!(ordinal_sum(&sq, &sq).result.n(), 7);
    }

    #[test]
    fn osum_of_extreme_congruences() {
        let l = chain(3).unwrap();
        let m = boolean(2).unwrap().lattice().clone();
        let w = ordinal_sum(&l, &m);
        let d = congruence_osum(&l, &m, &Partition::discrete(3), &Partition::discrete(4), &w).unwrap();
        assert!(d.is_discrete());
        let t = congruence_osum(&l, &m, &Partition::total(3), &Partition::total(4), &w).unwrap();
        assert!(t.is_total());
        let bad: Partition = "0 2|1".parse().unwrap();
        assert_eq!(
            congruence_osum(&l, &m, &bad, &Partition::discrete(4), &w),
            Err(ConstructionError::NotACongruence("alpha"))
        );
    }

    #[test]
    fn horizontal_sums() {
        let three = lat(chain(3).unwrap());
        let w = horizontal_sum(&[three.clone(), three.clone(), three]).unwrap();
        assert!(is_isomorphic(w.result.lattice(), &m_lattice(3).unwrap()).is_some());

        let m = lat(m_lattice(2).unwrap());
        let w = horizontal_sum(&[lat(chain(2).unwrap()), m.clone()]).unwrap();
        assert!(is_isomorphic(w.result.lattice(), m.lattice()).is_some());

        let b2 = Structure::Involution(boolean(2).unwrap());
        let w = horizontal_sum(&[b2.clone(), b2.clone()]).unwrap();
        assert!(is_isomorphic(w.result.lattice(), &m_lattice(4).unwrap()).is_some());
        let s = w.result.involution().unwrap();
        assert_eq!(s.inv(), &[1, 0, 3, 2, 5, 4]);
        assert!(s.is_pseudo_kleene().holds());

        assert_eq!(
            horizontal_sum(&[lat(chain(1).unwrap())]),
            Err(ConstructionError::TrivialSummand(0))
        );
        assert_eq!(
            horizontal_sum(&[b2, lat(chain(3).unwrap())]),
            Err(ConstructionError::MixedSummands)
        );
        assert_eq!(horizontal_sum(&[]), Err(ConstructionError::EmptySum));
    }

    #[test]
    fn bounding() {
        let w = bound(&lat(chain(1).unwrap()));
        assert!(is_isomorphic(w.result.lattice(), &chain(3).unwrap()).is_some());
        let b = bound(&Structure::Involution(boolean(1).unwrap()));
        assert_eq!(b.result.inv().unwrap(), &[1, 0, 3, 2]);
        assert_eq!(b.result.lattice().bottom(), 2);
    }

    #[test]
    fn sandwich_of_two_chain_with_unit_is_reversed_three_chain() {
        let w = sandwich(&chain(2).unwrap(), None);
        assert_eq!(w.result, reversed_chain(3).unwrap());
        assert_eq!(w.embeddings, vec![vec![0, 1], vec![1], vec![2, 1]]);
    }

    #[test]
    fn sandwich_with_square_core() {
        let k = boolean(2).unwrap();
        let w = sandwich(&chain(2).unwrap(), Some(&k));
        let s = &w.result;
        assert_eq!(s.n(), 6);
        assert!(s.is_pseudo_kleene().holds());
        assert_eq!(w.embeddings[1], vec![1, 2, 3, 4]);
        assert_eq!(s.inv(), &[5, 4, 3, 2, 1, 0]);
    }

    #[test]
    fn antiortholattice_sandwich() {
        let k = reversed_chain(2).unwrap();
        let w = aol_sandwich(&k).unwrap();
        assert_eq!(w.result.lattice(), &chain(4).unwrap());
        assert!(w.result.is_antiortholattice().unwrap().holds());
        let fixed = crate::constructions::horizontal_sum(&[
            Structure::Involution(reversed_chain(3).unwrap()),
            Structure::Involution(reversed_chain(3).unwrap()),
        ])
        .unwrap();
        let k = fixed.result.involution().unwrap();
        assert_eq!(aol_sandwich(k), Err(ConstructionError::NotPseudoKleene(vec![2, 3])));
    }

    #[test]
    fn step_is_bounded_sum_with_square() {
        let m = lat(chain(1).unwrap());
        let w = step(&m, StepVariant::Plain).unwrap();
        assert!(is_isomorphic(w.result.lattice(), &m_lattice(3).unwrap()).is_some());
        let m = Structure::Involution(boolean(2).unwrap());
        let via_hsum = horizontal_sum(&[bound(&m).result, Structure::Involution(boolean(2).unwrap())]).unwrap();
        let direct = step(&m, StepVariant::Kleene).unwrap();
        assert!(is_isomorphic(direct.result.lattice(), via_hsum.result.lattice()).is_some());
        assert_eq!(direct.embeddings[1], vec![4, 6, 7, 5]);
        assert_eq!(direct.result.inv().unwrap(), &[3, 2, 1, 0, 5, 4, 7, 6]);
        let d3 = step(&m, StepVariant::Double3).unwrap();
        assert_eq!(d3.result.inv().unwrap(), &[3, 2, 1, 0, 5, 4, 6, 7]);
        assert_eq!(
            step(&lat(chain(2).unwrap()), StepVariant::Kleene),
            Err(ConstructionError::NeedsInvolution("kleene"))
        );
    }
}
