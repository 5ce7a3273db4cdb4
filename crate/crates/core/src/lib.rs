//! Exact-arithmetic cohomology engine for homogeneous bundles on GL-flag
//! varieties, and the Hodge-diamond calculus built on top of it.
//!
//! The crate is organized bottom-up:
//!
//! - [`partitions`]: partitions, GL-weights, the Weyl dimension formula and
//!   the small tensor-decomposition rules (rank-2 Clebsch-Gordan, Pieri by
//!   the (dual-)standard representation, rank-2 Cauchy).
//! - [`bbw`]: the Bott ρ-shift algorithm deciding the cohomology of an
//!   irreducible homogeneous bundle, plus fast-path rules for twisted forms
//!   on Grassmannians (`snow_contributes`) and for `S^p U ⊗ Λ^q Q (-i)` on
//!   `Gr(2,10)`.
//! - [`twisted`]: cohomology of `Ω^j_Gr(-i)` and Hodge diamonds of
//!   Grassmannians.
//! - [`hodge`]: bivariate Hodge-Poincaré polynomials with exact big-integer
//!   coefficients.
//! - [`sections`]: Hodge diamonds of smooth hyperplane sections of `Gr(k,n)`,
//!   Calabi-Yau-type classification and related bookkeeping.
//! - [`motive`]: Grothendieck-ring style class calculus: Grassmannian/flag
//!   classes, pure-section classes, the projection and jump relations, and
//!   exceptional-object counting.
//! - [`schubert`]: Schubert calculus on `Gr(2,n)`: Pieri products, the
//!   fundamental class of the congruence `T(2,n)`, intersection numbers and
//!   the index-3 divisibility procedure.
//! - [`collections`]: exceptional-collection and acyclicity verification via
//!   Koszul/Pfaffian resolutions reduced to bundle cohomology.
//!
//! Everything is pure, deterministic and allocates through `alloc` only; no
//! floating point is used anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bbw;
pub mod collections;
pub mod error;
pub mod hodge;
pub mod motive;
pub mod partitions;
pub mod schubert;
pub mod sections;
pub mod twisted;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
