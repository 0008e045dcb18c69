//! Sequential Cohen-Macaulay profiles of graded modules over `Q[x1..xn]`.
//!
//! The crate is layered bottom-up:
//!
//! * [`kernel`]: exact rationals, monomials, orders, polynomials, free-module elements.
//! * [`groebner`]: Buchberger for submodules, normal forms, syzygies, colons,
//!   Hilbert series, dimension and length.
//! * [`homology`]: presented modules, minimal free resolutions and the
//!   deficiency modules `K^i(M) = Ext^{n-i}(M, S)`.
//! * [`monomial`]: monomial ideals, primary decomposition, associated primes
//!   of multigraded modules, dimension filtrations.
//! * [`sequences`]: classification of elements and sequences, systems of
//!   parameters, multiplicities, witness search.
//! * [`invariants`]: polynomial type, sequential polynomial type and the
//!   sCM / sgCM deciders with their cross-checks.

pub mod error;
pub mod groebner;
pub mod homology;
pub mod invariants;
pub mod kernel;
pub mod monomial;
pub mod sequences;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Length, Submodule};
pub use homology::{DeficiencyBattery, FreeResolution, PresentedModule};
pub use invariants::{Profile, SpBreakdown};
pub use kernel::{FreeElement, FreeModule, ModuleOrder, Monomial, MonomialOrder, Polynomial, Rational, Ring};
pub use monomial::{DimensionFiltration, MonomialIdeal, MonomialPrime};
pub use sequences::{ElementClassification, SequenceKind, SequenceReport};
