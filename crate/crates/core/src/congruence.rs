//! Congruence lattices of finite lattice-based algebras.
//!
//! [`all_congruences`] closes the principal congruences of covering pairs
//! under joins. [`brute_force_congruences`] enumerates every partition and
//! keeps the compatible ones; it shares nothing with the closure route
//! except the compatibility predicate and serves as its oracle.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::involution::Structure;
use crate::iso::is_isomorphic;
use crate::order::FiniteLattice;
use crate::partition::{all_partitions, Partition, UnionFind};

/// Default element cap for the brute-force oracle.
pub const DEFAULT_ORACLE_LIMIT: usize = 8;

/// Operation sets under which congruences are computed. Nullary constants
/// impose no compatibility condition, so `Blat` and `Bilat` have the same
/// congruences as `Lat` and `Ilat`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Signature {
    Lat,
    Blat,
    Ilat,
    Bilat,
    Bz,
}

impl Signature {
    pub const ALL: [Signature; 5] = [
        Signature::Lat,
        Signature::Blat,
        Signature::Ilat,
        Signature::Bilat,
        Signature::Bz,
    ];

    pub fn uses_involution(self) -> bool {
        matches!(self, Signature::Ilat | Signature::Bilat | Signature::Bz)
    }

    pub fn uses_brouwer(self) -> bool {
        self == Signature::Bz
    }

    pub fn name(self) -> &'static str {
        match self {
            Signature::Lat => "lat",
            Signature::Blat => "blat",
            Signature::Ilat => "ilat",
            Signature::Bilat => "bilat",
            Signature::Bz => "bz",
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Signature {
    type Err = CongruenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Signature::ALL
            .into_iter()
            .find(|sig| sig.name() == s)
            .ok_or_else(|| CongruenceError::UnknownSignature(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("signature `{0}` needs an operation the structure does not carry")]
    MissingOperation(Signature),
    #[error("unknown signature `{0}`")]
    UnknownSignature(String),
    #[error("{n} elements exceeds the oracle limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("element {0} out of range")]
    OutOfRange(usize),
    #[error("subset is not closed under the signature: witness {0:?}")]
    NotSubalgebra(Vec<usize>),
}

/// The operations of `s` visible under `sig`, as lookup tables.
struct Ops<'a> {
    lattice: &'a FiniteLattice,
    unary: Vec<&'a [usize]>,
}

impl<'a> Ops<'a> {
    fn new(s: &'a Structure, sig: Signature) -> Result<Self, CongruenceError> {
        let mut unary = Vec::new();
        if sig.uses_involution() {
            unary.push(s.inv().ok_or(CongruenceError::MissingOperation(sig))?);
        }
        if sig.uses_brouwer() {
            unary.push(s.brouwer().ok_or(CongruenceError::MissingOperation(sig))?);
        }
        Ok(Ops {
            lattice: s.lattice(),
            unary,
        })
    }

    fn n(&self) -> usize {
        self.lattice.n()
    }

    fn compatible(&self, p: &Partition) -> bool {
        let l = self.lattice;
        let n = l.n();
        let mut rep = vec![usize::MAX; p.num_blocks()];
        for x in 0..n {
            let r = &mut rep[p.block_of(x) as usize];
            if *r == usize::MAX {
                *r = x;
                continue;
            }
            let r = *r;
            // join and meet are commutative, so first-argument compatibility suffices
            for z in 0..n {
                if !p.related(l.join(x, z), l.join(r, z)) || !p.related(l.meet(x, z), l.meet(r, z)) {
                    return false;
                }
            }
            if self.unary.iter().any(|u| !p.related(u[x], u[r])) {
                return false;
            }
        }
        true
    }

    fn principal(&self, a: usize, b: usize) -> Partition {
        let l = self.lattice;
        let n = l.n();
        let mut uf = UnionFind::new(n);
        let mut queue = VecDeque::new();
        if uf.union(a, b) {
            queue.push_back((a, b));
        }
        while let Some((x, y)) = queue.pop_front() {
            for z in 0..n {
                for (u, v) in [(l.join(x, z), l.join(y, z)), (l.meet(x, z), l.meet(y, z))] {
                    if uf.union(u, v) {
                        queue.push_back((u, v));
                    }
                }
            }
            for op in &self.unary {
                let (u, v) = (op[x], op[y]);
                if uf.union(u, v) {
                    queue.push_back((u, v));
                }
            }
        }
        uf.into_partition()
    }
}

/// A set of congruences of one structure under one signature, sorted by
/// (number of blocks, canonical labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceSet {
    n: usize,
    signature: Signature,
    members: Vec<Partition>,
}

impl CongruenceSet {
    pub(crate) fn from_members(n: usize, signature: Signature, members: impl IntoIterator<Item = Partition>) -> Self {
        let mut members: Vec<Partition> = members.into_iter().collect();
        members.sort_by(|a, b| (a.num_blocks(), a.labels()).cmp(&(b.num_blocks(), b.labels())));
        members.dedup();
        CongruenceSet {
            n,
            signature,
            members,
        }
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Partition> {
        self.members.iter()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.members.iter().any(|m| m == p)
    }

    pub fn as_set(&self) -> HashSet<Partition> {
        self.members.iter().cloned().collect()
    }

    /// Members whose class of every listed constant is a singleton.
    pub fn fix_constants(&self, constants: &[usize]) -> CongruenceSet {
        let kept = self
            .members
            .iter()
            .filter(|p| constants.iter().all(|&c| p.class_of(c).len() == 1))
            .cloned();
        CongruenceSet::from_members(self.n, self.signature, kept)
    }

    /// Members `θ` with `θ = θ′` under `map`.
    pub fn fixed_by(&self, map: &[usize]) -> CongruenceSet {
        let kept = self.members.iter().filter(|p| &p.image(map) == *p).cloned();
        CongruenceSet::from_members(self.n, self.signature, kept)
    }

    /// Members of `self` together with extra partitions.
    pub fn with(&self, extra: impl IntoIterator<Item = Partition>) -> CongruenceSet {
        CongruenceSet::from_members(self.n, self.signature, self.members.iter().cloned().chain(extra))
    }

    /// Whether the set is closed under pairwise join and meet.
    pub fn is_sublattice_of_eq(&self) -> bool {
        let set = self.as_set();
        self.members.iter().all(|a| {
            self.members
                .iter()
                .all(|b| set.contains(&a.join(b)) && set.contains(&a.meet(b)))
        })
    }

    /// The refinement order as a lattice on member indices.
    pub fn to_lattice(&self) -> FiniteLattice {
        let m = &self.members;
        FiniteLattice::from_order(m.len(), |i, j| m[i].refines(&m[j]))
            .expect("a congruence set is a lattice under refinement")
    }
}

/// Checks whether `p` is compatible with every operation of `sig`.
pub fn is_congruence(s: &Structure, sig: Signature, p: &Partition) -> Result<bool, CongruenceError> {
    let ops = Ops::new(s, sig)?;
    Ok(p.n() == ops.n() && ops.compatible(p))
}

/// Least congruence containing `(a, b)`.
pub fn principal_congruence(
    s: &Structure,
    sig: Signature,
    a: usize,
    b: usize,
) -> Result<Partition, CongruenceError> {
    let ops = Ops::new(s, sig)?;
    for e in [a, b] {
        if e >= ops.n() {
            return Err(CongruenceError::OutOfRange(e));
        }
    }
    Ok(ops.principal(a, b))
}

pub fn join_partitions(p: &Partition, q: &Partition) -> Partition {
    p.join(q)
}

/// Every congruence of `s` under `sig`.
///
/// A congruence containing `x < y` contains every covering pair of a maximal
/// chain from `x` to `y`, so the principal congruences of covering pairs
/// generate all of them under joins.
pub fn all_congruences(s: &Structure, sig: Signature) -> Result<CongruenceSet, CongruenceError> {
    let ops = Ops::new(s, sig)?;
    let n = ops.n();
    let mut generators: Vec<Partition> = Vec::new();
    let mut seen_gen = HashSet::new();
    for (a, b) in s.lattice().covers() {
        let g = ops.principal(a, b);
        if seen_gen.insert(g.clone()) {
            generators.push(g);
        }
    }
    let delta = Partition::discrete(n);
    let mut found: HashSet<Partition> = HashSet::new();
    found.insert(delta.clone());
    let mut queue = VecDeque::from([delta]);
    while let Some(p) = queue.pop_front() {
        for g in &generators {
            if g.refines(&p) {
                continue;
            }
            let j = p.join(g);
            if found.insert(j.clone()) {
                queue.push_back(j);
            }
        }
    }
    Ok(CongruenceSet::from_members(n, sig, found))
}

/// Every compatible partition, by exhaustive enumeration.
pub fn brute_force_congruences(
    s: &Structure,
    sig: Signature,
    limit: usize,
) -> Result<CongruenceSet, CongruenceError> {
    let ops = Ops::new(s, sig)?;
    let n = ops.n();
    if n > limit {
        return Err(CongruenceError::TooLarge { n, limit });
    }
    let members = all_partitions(n).filter(|p| ops.compatible(p));
    Ok(CongruenceSet::from_members(n, sig, members))
}

pub fn involution_image(p: &Partition, inv: &[usize]) -> Partition {
    p.image(inv)
}

pub fn fix_constants(c: &CongruenceSet, constants: &[usize]) -> CongruenceSet {
    c.fix_constants(constants)
}

/// `θ ∩ S²` as a partition of `subset` (indexed by position), after checking
/// that `subset` is closed under the operations of `sig`.
pub fn restrict_to_subuniverse(
    s: &Structure,
    sig: Signature,
    p: &Partition,
    subset: &[usize],
) -> Result<Partition, CongruenceError> {
    let ops = Ops::new(s, sig)?;
    let l = ops.lattice;
    let mut member = vec![false; l.n()];
    for &x in subset {
        if x >= l.n() {
            return Err(CongruenceError::OutOfRange(x));
        }
        member[x] = true;
    }
    for &x in subset {
        for &y in subset {
            if !member[l.join(x, y)] || !member[l.meet(x, y)] {
                return Err(CongruenceError::NotSubalgebra(vec![x, y]));
            }
        }
        if ops.unary.iter().any(|u| !member[u[x]]) {
            return Err(CongruenceError::NotSubalgebra(vec![x]));
        }
    }
    Ok(p.restrict(subset))
}

pub fn is_simple(s: &Structure, sig: Signature) -> Result<bool, CongruenceError> {
    Ok(all_congruences(s, sig)?.len() <= 2)
}

/// `Con₀(L) = {Δ}`.
pub fn is_0_regular(l: &FiniteLattice) -> bool {
    let s = Structure::Lattice(l.clone());
    let con = all_congruences(&s, Signature::Lat).expect("lattice signature always applies");
    let fixed = con.fix_constants(&[l.bottom()]);
    fixed.len() == 1 && fixed.members()[0].is_discrete()
}

/// Whether two congruence sets are isomorphic as lattices under refinement.
pub fn conlattice_isomorphic(a: &CongruenceSet, b: &CongruenceSet) -> bool {
    a.len() == b.len() && is_isomorphic(&a.to_lattice(), &b.to_lattice()).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::InvolutionLattice;

    fn chain(n: usize) -> FiniteLattice {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FiniteLattice::from_cover_relation(n, &covers).unwrap()
    }

    fn square() -> FiniteLattice {
        FiniteLattice::from_cover_relation(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn m(k: usize) -> FiniteLattice {
        let mut covers = Vec::new();
        for i in 0..k {
            covers.push((0, i + 2));
            covers.push((i + 2, 1));
        }
        FiniteLattice::from_cover_relation(k + 2, &covers).unwrap()
    }

    fn lat(l: FiniteLattice) -> Structure {
        Structure::Lattice(l)
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Least compatible partition containing (a, b), by scanning all partitions.
    fn brute_principal(s: &Structure, a: usize, b: usize) -> Partition {
        let all = brute_force_congruences(s, Signature::Lat, 8).unwrap();
        all.iter()
            .filter(|q| q.related(a, b))
            .min_by_key(|q| std::cmp::Reverse(q.num_blocks()))
            .cloned()
            .unwrap()
    }

    #[test]
    fn principal_congruences() {
        let c3 = lat(chain(3));
        let cg = principal_congruence(&c3, Signature::Lat, 0, 1).unwrap();
        assert_eq!(cg, p("0 1|2"));
        assert_eq!(cg, brute_principal(&c3, 0, 1));
        let m3 = lat(m(3));
        for a in 0..5 {
            for b in 0..5 {
                let cg = principal_congruence(&m3, Signature::Lat, a, b).unwrap();
                if a == b {
                    assert!(cg.is_discrete());
                } else {
                    assert!(cg.is_total());
                }
            }
        }
        assert_eq!(
            principal_congruence(&m3, Signature::Lat, 0, 9),
            Err(CongruenceError::OutOfRange(9))
        );
    }

    #[test]
    fn join_of_congruences_stays_compatible() {
        let s = lat(chain(4));
        let a = principal_congruence(&s, Signature::Lat, 0, 1).unwrap();
        let b = principal_congruence(&s, Signature::Lat, 2, 3).unwrap();
        let j = join_partitions(&a, &b);
        assert_eq!(j, p("0 1|2 3"));
        assert!(is_congruence(&s, Signature::Lat, &j).unwrap());
    }

    #[test]
    fn congruence_counts() {
        assert_eq!(all_congruences(&lat(chain(3)), Signature::Lat).unwrap().len(), 4);
        let m3 = all_congruences(&lat(m(3)), Signature::Lat).unwrap();
        assert_eq!(m3.members(), &[Partition::total(5), Partition::discrete(5)]);
        let sq = InvolutionLattice::new(square(), vec![3, 2, 1, 0]).unwrap();
        let sq = Structure::Involution(sq);
        let ilat = all_congruences(&sq, Signature::Ilat).unwrap();
        let plain = all_congruences(&sq, Signature::Lat).unwrap();
        assert_eq!(ilat.members(), plain.members());
        assert_eq!(ilat.len(), 4);
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(brute_force_congruences(&lat(chain(2)), Signature::Lat, 8).unwrap().len(), 2);
        assert_eq!(brute_force_congruences(&lat(chain(4)), Signature::Lat, 8).unwrap().len(), 8);
        assert_eq!(brute_force_congruences(&lat(square()), Signature::Lat, 8).unwrap().len(), 4);
        assert_eq!(
            brute_force_congruences(&lat(chain(9)), Signature::Lat, 8),
            Err(CongruenceError::TooLarge { n: 9, limit: 8 })
        );
    }

    #[test]
    fn missing_operations_are_reported() {
        assert_eq!(
            all_congruences(&lat(chain(3)), Signature::Ilat),
            Err(CongruenceError::MissingOperation(Signature::Ilat))
        );
        let c = InvolutionLattice::new(chain(3), vec![2, 1, 0]).unwrap();
        assert_eq!(
            all_congruences(&Structure::Involution(c), Signature::Bz),
            Err(CongruenceError::MissingOperation(Signature::Bz))
        );
    }

    #[test]
    fn involution_image_on_square() {
        let theta = p("0 1|2 3");
        assert_eq!(involution_image(&theta, &[3, 2, 1, 0]), theta);
        assert_eq!(involution_image(&Partition::total(4), &[3, 2, 1, 0]), Partition::total(4));
    }

    #[test]
    fn fixing_constants() {
        let con = all_congruences(&lat(chain(3)), Signature::Lat).unwrap();
        let fixed = fix_constants(&con, &[0, 2]);
        assert_eq!(fixed.members(), &[Partition::discrete(3)]);
        assert_eq!(fix_constants(&con, &[]), con);
    }

    #[test]
    fn restriction_to_m3_inside_hsum() {
        // L3 ⊞ L2²: bounds 0, 1; x = 2; a = 3, b = 4
        let s = lat(m(3));
        let sub = [0, 1, 2, 3, 4];
        for theta in all_congruences(&s, Signature::Lat).unwrap().iter() {
            let r = restrict_to_subuniverse(&s, Signature::Lat, theta, &sub).unwrap();
            if !theta.is_total() {
                assert!(r.is_discrete());
            }
        }
        let c4 = lat(chain(4));
        assert_eq!(
            restrict_to_subuniverse(&c4, Signature::Lat, &Partition::total(4), &[1, 2]).unwrap(),
            Partition::total(2)
        );
        let sq = lat(square());
        assert_eq!(
            restrict_to_subuniverse(&sq, Signature::Lat, &Partition::total(4), &[1, 2]),
            Err(CongruenceError::NotSubalgebra(vec![1, 2]))
        );
    }

    #[test]
    fn simplicity_and_regularity() {
        assert!(is_simple(&lat(m(5)), Signature::Lat).unwrap());
        assert!(!is_simple(&lat(chain(3)), Signature::Lat).unwrap());
        assert!(is_simple(&lat(chain(1)), Signature::Lat).unwrap());
        assert!(is_0_regular(&square()));
        assert!(!is_0_regular(&chain(3)));
        assert!(is_0_regular(&m(3)));
    }

    #[test]
    fn con_lattice_shapes() {
        let c3 = all_congruences(&lat(chain(3)), Signature::Lat).unwrap();
        let sq = all_congruences(&lat(square()), Signature::Lat).unwrap();
        assert!(conlattice_isomorphic(&c3, &sq));
        assert!(is_isomorphic(&c3.to_lattice(), &square()).is_some());
        let m3 = all_congruences(&lat(m(3)), Signature::Lat).unwrap();
        assert!(is_isomorphic(&m3.to_lattice(), &chain(2)).is_some());
        assert!(conlattice_isomorphic(&m3, &m3));
        assert!(!conlattice_isomorphic(&m3, &c3));
    }

    #[test]
    fn signature_names() {
        for sig in Signature::ALL {
            assert_eq!(sig.name().parse::<Signature>().unwrap(), sig);
        }
        assert!("foo".parse::<Signature>().is_err());
    }
}
