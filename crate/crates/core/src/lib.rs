//! Finite permutation groups, their real group algebras under conjugation,
//! and the substructures that nested subgroup chains `Δ ≤ B ≤ Γ` induce on
//! the single-chart orbifolds `ℝ[Δ]/· ⊂ ℝ[B]/· ⊂ ℝ[Γ]/Γ`.

pub mod algebra;
pub mod catalog;
pub mod cycle;
pub mod error;
pub mod group;
pub mod iso;
pub mod perm;
pub mod quotient;
pub mod saturation;
pub mod subgroups;
pub mod substructure;
mod table;

pub use algebra::{AlgebraVector, SubalgebraSpan, Symbol};
pub use catalog::{
    enumerate_chains, sweep, Catalog, ChainClass, GroupCatalogEntry, SweepResult, SweepSummary, SweptChain,
};
pub use cycle::{parse_cycles, parse_generator_list, parse_product, render, CycleExpression};
pub use error::{GroupError, Result};
pub use group::{is_subgroup, Limits, PermGroup};
pub use iso::{fingerprint, is_isomorphic, named_iso_class, IsoFingerprint};
pub use perm::Permutation;
pub use quotient::{quotient, QuotientGroup};
pub use saturation::{is_saturated, SaturationWitness};
pub use subgroups::all_subgroups;
pub use substructure::{analyze_chain, ExactSequence, InheritanceReport, SubgroupChain, SuborbifoldModel};

/// Group-algebra vectors with arbitrary-precision rational coefficients.
pub type RationalVector = AlgebraVector<num_rational::BigRational>;

/// Group-algebra vectors with 64-bit rational coefficients.
pub type SmallRationalVector = AlgebraVector<num_rational::Rational64>;

/// Vectors whose coefficients are distinct formal labels, standing in for a
/// point with generic (pairwise distinct) real coordinates.
pub type SymbolicVector = AlgebraVector<Symbol>;
