//! The Laguerre-basis calculus.
//!
//! `l_k(t)` is the signed Laguerre polynomial `(-1)^k L_k^{(-1)}(t)` with
//! generating function `e^{tx/(1+x)}`. The functional `phi` sends `t^n` to
//! `n!`; the transform sends `u^k` to `l_k(t)`, turning ordinary
//! part-counting generating functions into Laguerre series.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::ring::{Scalar, Series, TPoly, UVPoly};
use crate::Error;

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// The polynomial `l_k(t)`.
///
/// `l_0 = 1`; for `k >= 1`,
/// `l_k(t) = sum_{i=1}^{k} (-1)^{k-i} C(k-1, k-i) t^i / i!`.
pub fn laguerre_polynomial<T: Scalar>(k: usize) -> TPoly<T> {
    if k == 0 {
        return TPoly::one();
    }
    TPoly::from_coeffs((1..=k).map(|i| {
        let mut numer = binomial(k - 1, k - i);
        if (k - i) % 2 == 1 {
            numer = -numer;
        }
        (i, T::from_big_ratio(&numer, &factorial(i)))
    }))
}

/// The linear functional `t^n -> n!`, extended linearly.
pub fn phi<T: Scalar>(p: &TPoly<T>) -> T {
    p.iter().fold(T::zero(), |acc, (deg, c)| {
        acc + c.clone() * T::from_big_ratio(&factorial(deg), &BigInt::one())
    })
}

/// Applies [`phi`] to every `x`-coefficient, leaving `x` fixed.
pub fn phi_series<T: Scalar>(s: &Series<T>) -> Series<T> {
    Series::from_coeffs(
        s.coeffs()
            .iter()
            .map(|p| TPoly::constant(phi(p)))
            .collect(),
    )
}

/// The transform sending `u^k` to `l_k(t)`, applied to a `v`-free
/// polynomial in `u`.
pub fn transform<T: Scalar>(g: &UVPoly<T>) -> Result<Series<T>, Error> {
    if g.has_v() {
        return Err(Error::VMarkerPresent);
    }
    let mut out = Series::zero(g.order());
    for ((k, _), s) in g.iter() {
        out = &out + &s.scale_t(&laguerre_polynomial(k));
    }
    Ok(out)
}

/// Exact quotient by `t`; the constant term in `t` must vanish.
pub fn divide_by_t<T: Scalar>(p: &TPoly<T>) -> Result<TPoly<T>, Error> {
    p.div_t()
}

/// [`divide_by_t`] lifted coefficient-wise to a series.
pub fn divide_series_by_t<T: Scalar>(s: &Series<T>) -> Result<Series<T>, Error> {
    Ok(Series::from_coeffs(
        s.coeffs()
            .iter()
            .map(|p| p.div_t())
            .collect::<Result<_, _>>()?,
    ))
}

/// Expansion of a `t`-polynomial in the `l_k` basis.
///
/// The basis change is triangular (`l_k` has leading term `t^k/k!`), so
/// expansion and re-summation are exact two-sided inverses.
#[derive(Debug, Clone, PartialEq)]
pub struct LaguerreExpansion<T: Scalar = BigRational> {
    coeffs: BTreeMap<usize, T>,
}

impl<T: Scalar> LaguerreExpansion<T> {
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(&k).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Re-sums the expansion back into powers of `t`.
    pub fn to_poly(&self) -> TPoly<T> {
        self.coeffs.iter().fold(TPoly::zero(), |acc, (&k, c)| {
            &acc + &laguerre_polynomial(k).scale(c)
        })
    }
}

/// Expands `p` in the `l_k` basis by back-substitution from the top degree.
pub fn expand_in_laguerre_basis<T: Scalar>(p: &TPoly<T>) -> LaguerreExpansion<T> {
    let mut rest = p.clone();
    let mut coeffs = BTreeMap::new();
    while let Some(d) = rest.degree() {
        // Leading coefficient of l_d is 1/d!.
        let c = rest.coeff(d) * T::from_big_ratio(&factorial(d), &BigInt::one());
        rest = &rest - &laguerre_polynomial(d).scale(&c);
        debug_assert!(rest.degree().map_or(true, |e| e < d));
        coeffs.insert(d, c);
    }
    LaguerreExpansion { coeffs }
}

/// Coefficients `n_{i,j,k}` of `l_i(t) l_j(t) = sum_k n_{i,j,k} l_k(t)`.
///
/// These are nonnegative integers: `n_{i,j,k}` counts factorizations over a
/// two-letter alphabet with `k` parts, `i` of one letter and `j` of the
/// other, every part Carlitz.
pub fn linearization_coefficients<T: Scalar>(i: usize, j: usize) -> LaguerreExpansion<T> {
    let product = &laguerre_polynomial::<T>(i) * &laguerre_polynomial(j);
    expand_in_laguerre_basis(&product)
}

/// `l_i(l_j(t))` expanded in the `l_k` basis.
///
/// Exploratory: for `j > 0` the coefficients appear always to be
/// nonnegative integers.
pub fn laguerre_compose<T: Scalar>(i: usize, j: usize) -> LaguerreExpansion<T> {
    let composed = laguerre_polynomial::<T>(i).compose(&laguerre_polynomial(j));
    expand_in_laguerre_basis(&composed)
}
