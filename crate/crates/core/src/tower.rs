//! Finite towers `L₂ ⊂ L₃ ⊂ …` built by repeated [`step`], and the
//! subalgebra condition (s) and congruence condition (c) on families over a
//! growing element universe.
//!
//! Member `i` of a family occupies the universe prefix `0..members[i].n()`;
//! a step appends new bottom, new top, `a` and `b`.

use std::collections::HashSet;

use thiserror::Error;

use crate::congruence::{all_congruences, CongruenceError, Signature};
use crate::constructions::{step, ConstructionError, StepVariant};
use crate::involution::Structure;
use crate::partition::Partition;
use crate::verdict::Verdict;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TowerError {
    #[error("condition (s) fails: witness {0:?}")]
    ConditionSViolated(Vec<usize>),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerFamily {
    members: Vec<Structure>,
    variant: Option<StepVariant>,
}

impl TowerFamily {
    /// A family given member by member; no relation between members is assumed.
    pub fn from_members(members: Vec<Structure>) -> Self {
        TowerFamily {
            members,
            variant: None,
        }
    }

    pub fn members(&self) -> &[Structure] {
        &self.members
    }

    pub fn variant(&self) -> Option<StepVariant> {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn last(&self) -> &Structure {
        self.members.last().expect("a tower has its seed")
    }
}

/// `seed = L₂`, then `L_{i+1} = step(L_i)` for `k` steps.
pub fn tower(seed: &Structure, k: usize, variant: StepVariant) -> Result<TowerFamily, ConstructionError> {
    if seed.n() < 2 {
        return Err(ConstructionError::TrivialSeed);
    }
    let first = match (variant, seed.involution()) {
        (StepVariant::Plain, _) => seed.reduct(),
        (_, Some(s)) => Structure::Involution(s.clone().without_brouwer()),
        (_, None) => return Err(ConstructionError::NeedsInvolution(variant.name())),
    };
    let mut members = vec![first];
    for _ in 0..k {
        let next = step(members.last().expect("nonempty"), variant)?.result;
        members.push(next);
    }
    Ok(TowerFamily {
        members,
        variant: Some(variant),
    })
}

fn unary_ops(s: &Structure, sig: Signature) -> Result<Vec<&[usize]>, CongruenceError> {
    let mut out = Vec::new();
    if sig.uses_involution() {
        out.push(s.inv().ok_or(CongruenceError::MissingOperation(sig))?);
    }
    if sig.uses_brouwer() {
        out.push(s.brouwer().ok_or(CongruenceError::MissingOperation(sig))?);
    }
    Ok(out)
}

fn has_constants(sig: Signature) -> bool {
    !matches!(sig, Signature::Lat | Signature::Ilat)
}

/// Condition (s): for `i < j`, member `i` is a proper subalgebra of member `j`
/// on the shared index prefix, with the operations of member `i` being the
/// restrictions of those of member `j`.
///
/// Witnesses: `[i, j]` for size or constants, `[i, j, x, y]` for a binary
/// operation, `[i, j, x]` for a unary one.
pub fn check_condition_s(f: &TowerFamily, sig: Signature) -> Result<Verdict, CongruenceError> {
    let ms = &f.members;
    for j in 0..ms.len() {
        for i in 0..j {
            let (small, big) = (&ms[i], &ms[j]);
            let (ls, lb) = (small.lattice(), big.lattice());
            if ls.n() >= lb.n() {
                return Ok(Verdict::Fails(vec![i, j]));
            }
            if has_constants(sig) && (ls.bottom() != lb.bottom() || ls.top() != lb.top()) {
                return Ok(Verdict::Fails(vec![i, j]));
            }
            for x in 0..ls.n() {
                for y in 0..ls.n() {
                    if lb.join(x, y) != ls.join(x, y) || lb.meet(x, y) != ls.meet(x, y) {
                        return Ok(Verdict::Fails(vec![i, j, x, y]));
                    }
                }
            }
            let us = unary_ops(small, sig)?;
            let ub = unary_ops(big, sig)?;
            for x in 0..ls.n() {
                if us.iter().zip(&ub).any(|(a, b)| a[x] != b[x]) {
                    return Ok(Verdict::Fails(vec![i, j, x]));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// The congruence of member `j` collapsing the universe of member `i` and
/// leaving the rest as singletons.
pub fn collapse_member(f: &TowerFamily, i: usize, j: usize) -> Partition {
    let small = f.members[i].n();
    let block: Vec<usize> = (0..small).collect();
    Partition::from_blocks(f.members[j].n(), &[block])
}

/// Condition (c): each member's congruences are exactly Δ, ∇ and the
/// collapse of each earlier member. Requires (s). Witness: `[j]`.
pub fn check_condition_c(f: &TowerFamily, sig: Signature) -> Result<Verdict, TowerError> {
    if let Verdict::Fails(w) = check_condition_s(f, sig)? {
        return Err(TowerError::ConditionSViolated(w));
    }
    for (j, member) in f.members.iter().enumerate() {
        let n = member.n();
        let actual = all_congruences(member, sig)?.as_set();
        let mut expected: HashSet<Partition> = HashSet::new();
        expected.insert(Partition::discrete(n));
        expected.insert(Partition::total(n));
        for i in 0..j {
            expected.insert(collapse_member(f, i, j));
        }
        if actual != expected {
            return Ok(Verdict::Fails(vec![j]));
        }
    }
    Ok(Verdict::Holds)
}
