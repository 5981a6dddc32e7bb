//! Finite monoids with zero, their acts in the plain category (all acts)
//! and the zeroed category (acts with a unique designated zero), and the
//! functor `F(A) = A/0A` between them.
//!
//! Everything is finite and exact: acts are action tables, and the
//! structural properties (cyclic, hollow, projective, covers, compactness)
//! are decided by exhaustive search. Monoid-level properties are checked
//! by sweeping over all small acts; see [`classifiers`].

pub mod act;
pub mod classifiers;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod fixtures;
pub mod hom;
pub mod monoid;
pub mod projectivity;
pub mod structure;
pub mod subact;

pub use act::{Act, Category};
pub use classifiers::{
    acc_cyclic_subacts_report, cyclic_acts, is_left_0perfect, is_left_0steady, is_left_perfect,
    is_left_steady, longest_cyclic_chain, Bounds, ClassifierReport, Property, Verdict, Witness,
    WitnessReason,
};
pub use constructions::{
    adjoin_zero, adjoin_zero_labeled, coproduct, coproduct_over, functor_f_mor, functor_f_obj,
    product, product_bounded, reflection_factorization, substantial_summand, CoproductTag,
    SubstantialDecomposition,
};
pub use enumeration::{
    canonical_act, canonical_monoid, enumerate_acts, enumerate_left_congruences,
    enumerate_monoids_up_to, enumerate_monoids_with_zero, for_each_act, CanonicalForm,
};
pub use error::{Error, Result};
pub use hom::{count_homs, enumerate_homs, is_isomorphic, ActHom};
pub use monoid::{Monoid, PlainMonoid};
pub use projectivity::{
    idempotents, is_cover, is_projective, principal_act, projective_cover, projective_covers,
    Cover, ProjectiveCertificate, ProjectiveSummand,
};
pub use structure::{
    decompose, is_compact_bounded, is_cyclic, is_hollow, is_locally_cyclic, is_superfluous,
    maximal_proper_subacts, Decomposition,
};
pub use subact::{all_subacts, rees_quotient, subact_generated, ActCongruence, Subact};
