//! Monads on cartesian categories: finite sets and presheaves on finite posets.

mod cartesian;
mod exponential;
mod finmap;
mod monads;
mod presheaf;
mod semilattice;
mod suite;
mod table;

pub use cartesian::*;
pub use exponential::{
    adjunction_check, non_equivalence_witness, AdjunctionCheck, Exponential, ExponentialMonad,
    NonEquivalenceWitness, EXPONENTIAL_CAP,
};
pub use finmap::{AllMaps, FinMap, FinSet};
pub use monads::{subset_label, IdentityMonad, PowersetMonad, POWERSET_CAP};
pub use presheaf::{FinPoset, NatTrans, Presheaf, PresheafCategory};
pub use semilattice::{
    coreflection_check, omega, omega_report, with_new_bottom, CompleteSemilattice,
    CoreflectionCheck, OmegaReport,
};
pub use suite::{
    algebras_up_to, exponential_suite, powerset_suite, proper_powerset, AlgebraCount,
    ExponentialSuite, PlusComponent, PowersetSuite, ProperPowerset, ALGEBRA_CAP, SKELETON_CAP,
};
pub use table::{table_matches, TableArrow, TableMonad, TableObject};
