//! Exact enumeration of words with run and pattern restrictions.
//!
//! Counting is done through a small calculus on the Laguerre-type
//! polynomials `l_k(t)` with generating function `e^{tx/(1+x)}`: a set of
//! factorizations gets a "Laguerre series", products of Laguerre series
//! correspond to interleaving factorizations on disjoint alphabets, and the
//! linear functional `t^n -> n!` extracts word counts. Everything is
//! computed over exact rationals; a brute-force oracle cross-checks every
//! closed form.
//!
//! The arithmetic core is generic over the coefficient scalar (anything
//! implementing [`ring::Scalar`], including `f64`); the concrete aliases
//! used throughout the counting layer fix the scalar to [`Rat`].

pub mod error;
pub mod laguerre;
pub mod oracle;
pub mod patterns;
pub mod ring;

pub use error::Error;

use num_bigint::BigInt;

/// Exact rational scalar, the coefficient field for all counting formulas.
pub type Rat = num_rational::BigRational;

/// Polynomial in the umbral variable `t` over [`Rat`].
pub type TPoly = ring::TPoly<Rat>;

/// Truncated power series in `x` with [`TPoly`] coefficients.
pub type Series = ring::Series<Rat>;

/// Polynomial in the markers `u` (parts) and `v` (first-factor length)
/// with [`Series`] coefficients.
pub type UVPoly = ring::UVPoly<Rat>;

/// Expansion of a `t`-polynomial in the `l_k` basis with [`Rat`] coefficients.
pub type LaguerreExpansion = laguerre::LaguerreExpansion<Rat>;

/// Arbitrary-precision count.
pub type Count = BigInt;
