//! Exact computation in the generalized Virasoro-like Lie algebra `L(Γ)`
//! and its tensor powers.
//!
//! `L(Γ)` has basis `L_α` (for nonzero `α` in an additive subgroup `Γ ⊂ ℂ²`)
//! together with `∂₁, ∂₂`, and bracket
//!
//! ```text
//! [L_α, L_β] = (α₁β₂ − β₁α₂) L_{α+β},    [∂ᵢ, L_α] = αᵢ L_α,    [∂₁, ∂₂] = 0
//! ```
//!
//! All coefficients live in the Gaussian rationals `ℚ(i)`, so every check in
//! this crate is exact. The crate covers the Lie bialgebra machinery on top of
//! the algebra: coboundary cobrackets `Δ_r(x) = x·r`, the classical Yang–Baxter
//! residual `c(r)`, recovery of inner witnesses for derivations `L → L⊗L`, and
//! the pipeline that certifies a tabulated cobracket as triangular coboundary.

#![allow(clippy::result_large_err, clippy::large_enum_variant)]

pub mod algebra;
pub mod bialgebra;
pub mod cohomology;
pub mod combination;
pub mod error;
pub mod lattice;
pub mod linsolve;
pub mod random;
pub mod scalar;
pub mod table;
pub mod tensor;

pub use algebra::{bracket, check_jacobi, BasisSym, LieElt};
pub use bialgebra::{
    check_cocommutator_axioms, cobracket_apply, cybe_residual, michaelis_r, mybe_defect,
    theorem_identity_defect, AxiomReport, Cobracket,
};
pub use cohomology::{
    centralizer_witness, classify, derivation_defect, inner_witness_homogeneous,
    inner_witness_window, reduce_to_antisymmetric, CentralizerWitness, Classification, Config,
    HomogeneousWitness, Reduction, Verdict, WindowWitness,
};
pub use combination::{degree_decompose, Combination, Key};
pub use error::{Error, Result};
pub use lattice::{pairing, separating_cartan, CartanElt, Degree, Lattice};
pub use scalar::Scalar;
pub use table::DerivationSpec;
pub use tensor::{act, act2, act3, antisym_defect, cyclic, twist, Tensor, Tensor2, Tensor3};
