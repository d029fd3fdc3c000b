//! Exact computations with square-free monomial ideals and their hypergraphs:
//! associated primes of powers, symbolic powers, polarization, minors,
//! covers and matchings, and checks of when embedded primes first appear.
//!
//! Monomial arithmetic is generic over the exponent type (see
//! [`Exponent`]); the aliases below fix it to `u16`, which is what the
//! analysis layers use.

pub mod analysis;
pub mod error;
pub mod exponent;
pub mod hypergraph;
pub mod ideal;
pub mod monomial;
pub mod ntf;
pub mod polarization;
pub mod primary;
pub mod search;
pub mod prime;
pub mod text;
pub mod varset;

pub use error::{Error, Result};
pub use exponent::Exponent;
pub use hypergraph::{Hypergraph, MinorResult, MinorSpec, Packing};
pub use ideal::IdealOf;
pub use monomial::{MonomialOf, VarId};
pub use prime::MonomialPrime;
pub use text::{Format, Parsed, VarNames};
pub use varset::{VarSet, MAX_VARS};

/// Monomial with 16-bit exponents.
pub type Monomial = MonomialOf<u16>;
/// Monomial ideal with 16-bit exponents.
pub type MonomialIdeal = IdealOf<u16>;
/// Monomial with 32-bit exponents, for high powers.
pub type WideMonomial = MonomialOf<u32>;
/// Monomial ideal with 32-bit exponents.
pub type WideMonomialIdeal = IdealOf<u32>;
