//! Involution lattices, Brouwer complements and the Kleene/BZ taxonomy.
//!
//! Every predicate is an exhaustive check returning a [`Verdict`] whose
//! witness is the first failing tuple in lexicographic order.

use serde::Serialize;
use thiserror::Error;

use crate::order::FiniteLattice;
use crate::verdict::{pairs, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("map has {got} entries, lattice has {expected} elements")]
    WrongLength { expected: usize, got: usize },
    #[error("map sends {element} outside the universe")]
    OutOfRange { element: usize },
    #[error("not involutive at {0}")]
    NotInvolutive(usize),
    #[error("not order-reversing: {0} <= {1} but images are not reversed")]
    NotOrderReversing(usize, usize),
    #[error("Brouwer axiom `{axiom}` fails at {element}")]
    BrouwerAxiom { axiom: &'static str, element: usize },
    #[error("structure carries no Brouwer complement")]
    MissingBrouwer,
}

/// A lattice with an order-reversing involution `′` and an optional
/// Brouwer complement `~`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionLattice {
    lattice: FiniteLattice,
    inv: Vec<usize>,
    brouwer: Option<Vec<usize>>,
}

fn check_map(l: &FiniteLattice, map: &[usize]) -> Result<(), InvolutionError> {
    if map.len() != l.n() {
        return Err(InvolutionError::WrongLength {
            expected: l.n(),
            got: map.len(),
        });
    }
    if let Some(x) = (0..l.n()).find(|&x| map[x] >= l.n()) {
        return Err(InvolutionError::OutOfRange { element: x });
    }
    Ok(())
}

fn check_order_reversing(l: &FiniteLattice, map: &[usize]) -> Result<(), InvolutionError> {
    for x in 0..l.n() {
        for y in 0..l.n() {
            if l.leq(x, y) && !l.leq(map[y], map[x]) {
                return Err(InvolutionError::NotOrderReversing(x, y));
            }
        }
    }
    Ok(())
}

impl InvolutionLattice {
    /// Validates `inv` as an order-reversing involution of `lattice`.
    pub fn new(lattice: FiniteLattice, inv: Vec<usize>) -> Result<Self, InvolutionError> {
        check_map(&lattice, &inv)?;
        if let Some(x) = (0..lattice.n()).find(|&x| inv[inv[x]] != x) {
            return Err(InvolutionError::NotInvolutive(x));
        }
        check_order_reversing(&lattice, &inv)?;
        Ok(InvolutionLattice {
            lattice,
            inv,
            brouwer: None,
        })
    }

    /// Attaches a Brouwer complement after checking that it is order-reversing
    /// and satisfies `x ∧ x~ = 0` and `x ≤ x~~ = x~′`.
    pub fn with_brouwer(mut self, map: Vec<usize>) -> Result<Self, InvolutionError> {
        let l = &self.lattice;
        check_map(l, &map)?;
        check_order_reversing(l, &map)?;
        for x in 0..l.n() {
            if l.meet(x, map[x]) != l.bottom() {
                return Err(InvolutionError::BrouwerAxiom {
                    axiom: "x ∧ x~ = 0",
                    element: x,
                });
            }
            if map[map[x]] != self.inv[map[x]] {
                return Err(InvolutionError::BrouwerAxiom {
                    axiom: "x~~ = x~′",
                    element: x,
                });
            }
            if !l.leq(x, map[map[x]]) {
                return Err(InvolutionError::BrouwerAxiom {
                    axiom: "x ≤ x~~",
                    element: x,
                });
            }
        }
        self.brouwer = Some(map);
        Ok(self)
    }

    pub fn without_brouwer(mut self) -> Self {
        self.brouwer = None;
        self
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn inv(&self) -> &[usize] {
        &self.inv
    }

    pub fn brouwer(&self) -> Option<&[usize]> {
        self.brouwer.as_deref()
    }

    pub fn n(&self) -> usize {
        self.lattice.n()
    }

    /// Condition ⓚ: `a ∧ a′ ≤ b ∨ b′` for all `a, b`.
    pub fn is_pseudo_kleene(&self) -> Verdict {
        let l = &self.lattice;
        Verdict::first_failure(pairs(l.n()), |p| {
            let (a, b) = (p[0], p[1]);
            l.leq(l.meet(a, self.inv[a]), l.join(b, self.inv[b]))
        })
    }

    /// `a ≤ b` and `a′ ∧ b = 0` imply `a = b`.
    pub fn is_paraorthomodular(&self) -> Verdict {
        let l = &self.lattice;
        Verdict::first_failure(pairs(l.n()), |p| {
            let (a, b) = (p[0], p[1]);
            !(l.leq(a, b) && l.meet(self.inv[a], b) == l.bottom()) || a == b
        })
    }

    pub fn is_de_morgan(&self) -> Verdict {
        self.lattice.is_distributive()
    }

    pub fn is_kleene(&self) -> Verdict {
        match self.is_pseudo_kleene() {
            Verdict::Holds => self.lattice.is_distributive(),
            fail => fail,
        }
    }

    /// BZ-lattice: a pseudo-Kleene algebra with a Brouwer complement. The
    /// Brouwer axioms themselves are enforced by [`Self::with_brouwer`].
    pub fn is_bz(&self) -> Result<Verdict, InvolutionError> {
        if self.brouwer.is_none() {
            return Err(InvolutionError::MissingBrouwer);
        }
        Ok(self.is_pseudo_kleene())
    }

    /// PBZ*: paraorthomodular BZ-lattice with `(a ∧ a′)~ = a~ ∨ a′~`.
    pub fn is_pbz_star(&self) -> Result<Verdict, InvolutionError> {
        let bz = self.is_bz()?;
        if !bz.holds() {
            return Ok(bz);
        }
        let para = self.is_paraorthomodular();
        if !para.holds() {
            return Ok(para);
        }
        let l = &self.lattice;
        let br = self.brouwer.as_ref().expect("checked above");
        Ok(Verdict::first_failure((0..l.n()).map(|a| vec![a]), |w| {
            let a = w[0];
            let a1 = self.inv[a];
            br[l.meet(a, a1)] == l.join(br[a], br[a1])
        }))
    }

    /// PBZ* where only the bounds have a Kleene complement that is also a
    /// lattice complement.
    pub fn is_antiortholattice(&self) -> Result<Verdict, InvolutionError> {
        let pbz = self.is_pbz_star()?;
        if !pbz.holds() {
            return Ok(pbz);
        }
        let l = &self.lattice;
        Ok(Verdict::first_failure((0..l.n()).map(|x| vec![x]), |w| {
            let x = w[0];
            x == l.bottom()
                || x == l.top()
                || !(l.join(x, self.inv[x]) == l.top() && l.meet(x, self.inv[x]) == l.bottom())
        }))
    }
}

/// `0~ = 1` and `x~ = 0` for every `x ≠ 0`.
pub fn trivial_brouwer(l: &FiniteLattice) -> Vec<usize> {
    (0..l.n())
        .map(|x| if x == l.bottom() { l.top() } else { l.bottom() })
        .collect()
}

/// A plain lattice or one carrying an involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Lattice(FiniteLattice),
    Involution(InvolutionLattice),
}

impl Structure {
    pub fn lattice(&self) -> &FiniteLattice {
        match self {
            Structure::Lattice(l) => l,
            Structure::Involution(s) => s.lattice(),
        }
    }

    pub fn involution(&self) -> Option<&InvolutionLattice> {
        match self {
            Structure::Lattice(_) => None,
            Structure::Involution(s) => Some(s),
        }
    }

    pub fn inv(&self) -> Option<&[usize]> {
        self.involution().map(InvolutionLattice::inv)
    }

    pub fn brouwer(&self) -> Option<&[usize]> {
        self.involution().and_then(InvolutionLattice::brouwer)
    }

    pub fn n(&self) -> usize {
        self.lattice().n()
    }

    /// The lattice reduct as a structure.
    pub fn reduct(&self) -> Structure {
        Structure::Lattice(self.lattice().clone())
    }
}

impl From<FiniteLattice> for Structure {
    fn from(l: FiniteLattice) -> Self {
        Structure::Lattice(l)
    }
}

impl From<InvolutionLattice> for Structure {
    fn from(s: InvolutionLattice) -> Self {
        Structure::Involution(s)
    }
}

/// Taxonomy flags for one structure; a failed flag carries its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaxonomyReport {
    pub bounded: bool,
    pub distributive: bool,
    pub modular: bool,
    pub i_lattice: bool,
    pub bi_lattice: bool,
    pub pseudo_kleene: bool,
    pub de_morgan: bool,
    pub kleene: bool,
    pub paraorthomodular: bool,
    pub bz: bool,
    pub pbz_star: bool,
    pub antiortholattice: bool,
    pub witnesses: Vec<(String, Vec<usize>)>,
}

pub fn classify(s: &Structure) -> TaxonomyReport {
    let l = s.lattice();
    let mut witnesses = Vec::new();
    let mut note = |name: &str, v: &Verdict| -> bool {
        if let Verdict::Fails(w) = v {
            witnesses.push((name.to_string(), w.clone()));
        }
        v.holds()
    };
    let distributive = note("distributive", &l.is_distributive());
    let modular = note("modular", &l.is_modular());
    let mut report = TaxonomyReport {
        bounded: true,
        distributive,
        modular,
        i_lattice: false,
        bi_lattice: false,
        pseudo_kleene: false,
        de_morgan: false,
        kleene: false,
        paraorthomodular: false,
        bz: false,
        pbz_star: false,
        antiortholattice: false,
        witnesses: Vec::new(),
    };
    if let Some(inv) = s.involution() {
        report.i_lattice = true;
        report.bi_lattice = true;
        report.de_morgan = distributive;
        report.pseudo_kleene = note("pseudo_kleene", &inv.is_pseudo_kleene());
        report.kleene = report.pseudo_kleene && distributive;
        report.paraorthomodular = note("paraorthomodular", &inv.is_paraorthomodular());
        if inv.brouwer().is_some() {
            report.bz = report.pseudo_kleene;
            let pbz = inv.is_pbz_star().expect("brouwer present");
            report.pbz_star = note("pbz_star", &pbz);
            let aol = inv.is_antiortholattice().expect("brouwer present");
            report.antiortholattice = pbz.holds() && note("antiortholattice", &aol);
        }
    }
    report.witnesses = witnesses;
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FiniteLattice {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FiniteLattice::from_cover_relation(n, &covers).unwrap()
    }

    fn reversed_chain(n: usize) -> InvolutionLattice {
        InvolutionLattice::new(chain(n), (0..n).rev().collect()).unwrap()
    }

    fn square() -> InvolutionLattice {
        let l = FiniteLattice::from_cover_relation(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        InvolutionLattice::new(l, vec![3, 2, 1, 0]).unwrap()
    }

    fn m3_fixed_midpoints() -> InvolutionLattice {
        let l = FiniteLattice::from_cover_relation(5, &[(0, 2), (0, 3), (0, 4), (2, 1), (3, 1), (4, 1)])
            .unwrap();
        InvolutionLattice::new(l, vec![1, 0, 2, 3, 4]).unwrap()
    }

    #[test]
    fn validate_involution_examples() {
        let c = reversed_chain(3);
        assert_eq!(c.inv(), &[2, 1, 0]);
        square();
        let l = square().lattice().clone();
        assert_eq!(
            InvolutionLattice::new(l.clone(), vec![0, 1, 2, 3]).unwrap_err(),
            InvolutionError::NotOrderReversing(0, 1)
        );
        assert_eq!(
            InvolutionLattice::new(l.clone(), vec![3, 2, 0, 0]).unwrap_err(),
            InvolutionError::NotInvolutive(1)
        );
        assert!(matches!(
            InvolutionLattice::new(l, vec![3, 2, 1]),
            Err(InvolutionError::WrongLength { .. })
        ));
    }

    #[test]
    fn pseudo_kleene_examples() {
        assert!(square().is_pseudo_kleene().holds());
        assert!(reversed_chain(4).is_pseudo_kleene().holds());
        assert_eq!(m3_fixed_midpoints().is_pseudo_kleene(), Verdict::Fails(vec![2, 3]));
    }

    #[test]
    fn paraorthomodular_examples() {
        assert!(square().is_paraorthomodular().holds());
        assert!(reversed_chain(4).is_paraorthomodular().holds());
    }

    #[test]
    fn trivial_brouwer_maps() {
        assert_eq!(trivial_brouwer(&chain(2)), vec![1, 0]);
        assert_eq!(trivial_brouwer(&chain(3)), vec![2, 0, 0]);
        let l = chain(5);
        let b = trivial_brouwer(&l);
        assert!((0..5).all(|x| b[b[x]] == 0 || b[b[x]] == 4));
    }

    #[test]
    fn pbz_star_examples() {
        let c4 = reversed_chain(4);
        let t = trivial_brouwer(c4.lattice());
        let c4 = c4.with_brouwer(t).unwrap();
        assert!(c4.is_pbz_star().unwrap().holds());
        assert!(c4.is_antiortholattice().unwrap().holds());

        let sq = square();
        let t = trivial_brouwer(sq.lattice());
        let sq = sq.with_brouwer(t).unwrap();
        assert_eq!(sq.is_pbz_star().unwrap(), Verdict::Fails(vec![1]));
        assert_eq!(sq.is_antiortholattice().unwrap(), Verdict::Fails(vec![1]));

        let c2 = reversed_chain(2);
        let t = trivial_brouwer(c2.lattice());
        let c2 = c2.with_brouwer(t).unwrap();
        assert!(c2.is_pbz_star().unwrap().holds());
        assert!(c2.is_antiortholattice().unwrap().holds());
    }

    #[test]
    fn missing_brouwer_is_an_error() {
        assert_eq!(
            square().is_pbz_star().unwrap_err(),
            InvolutionError::MissingBrouwer
        );
        assert_eq!(
            square().is_antiortholattice().unwrap_err(),
            InvolutionError::MissingBrouwer
        );
    }

    #[test]
    fn boolean_complement_is_an_orthomodular_brouwer() {
        let sq = square();
        let inv = sq.inv().to_vec();
        let sq = sq.with_brouwer(inv).unwrap();
        assert!(sq.is_pbz_star().unwrap().holds());
        assert_eq!(sq.is_antiortholattice().unwrap(), Verdict::Fails(vec![1]));
    }

    #[test]
    fn brouwer_axioms_are_enforced() {
        let c3 = reversed_chain(3);
        assert!(matches!(
            c3.with_brouwer(vec![2, 1, 0]),
            Err(InvolutionError::BrouwerAxiom { .. })
        ));
    }

    #[test]
    fn classify_square() {
        let r = classify(&Structure::Involution(square()));
        assert!(r.kleene && r.de_morgan && r.paraorthomodular);
        assert!(!r.bz);
        let r = classify(&Structure::Lattice(chain(3)));
        assert!(!r.i_lattice && r.distributive);
    }
}
