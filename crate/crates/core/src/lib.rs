//! Finite lattices, involution lattices and exact congruence-lattice computation.
//!
//! The crate covers the ordinal and horizontal sums, bounding, the
//! involution sandwich `L ⊕ K ⊕ Lᵈ`, the one-step extension
//! `B(M) ⊞ L₂²` and the tower it generates, antiortholattices with the
//! trivial Brouwer complement, and congruence lattices under the lattice,
//! involution-lattice and BZ signatures.

mod bits;
pub mod congruence;
pub mod constructions;
pub mod corpus;
pub mod document;
pub mod involution;
pub mod iso;
pub mod order;
pub mod partition;
pub mod theorems;
pub mod tower;
pub mod verdict;

pub use congruence::{
    all_congruences, brute_force_congruences, conlattice_isomorphic, fix_constants,
    involution_image, is_0_regular, is_congruence, is_simple, join_partitions,
    principal_congruence, restrict_to_subuniverse, CongruenceError, CongruenceSet, Signature,
};
pub use involution::{classify, trivial_brouwer, InvolutionError, InvolutionLattice, Structure, TaxonomyReport};
pub use iso::is_isomorphic;
pub use order::{FiniteLattice, LatticeError, SubsetFamily};
pub use partition::Partition;
pub use verdict::Verdict;
