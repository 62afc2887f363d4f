use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::{Scalar, Series};
use crate::Error;

/// Marker variable of a [`UVPoly`]: `u` counts parts, `v` the length of
/// the first factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UVVar {
    U,
    V,
}

/// Polynomial in the markers `u` and `v` with truncated-series
/// coefficients.
///
/// Degrees in `u` and `v` are capped at the `x`-truncation order: in every
/// generating function handled here each part and each first-factor letter
/// contributes at least one `x`, so higher marker powers cannot affect the
/// retained `x`-coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct UVPoly<T: Scalar = BigRational> {
    order: usize,
    terms: BTreeMap<(usize, usize), Series<T>>,
}

impl<T: Scalar> UVPoly<T> {
    pub fn zero(order: usize) -> Self {
        UVPoly {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_series(Series::one(order))
    }

    /// Embeds a plain series as the `u^0 v^0` term.
    pub fn from_series(s: Series<T>) -> Self {
        let order = s.order();
        Self::monomial(0, 0, s, order)
    }

    /// `s * u^a v^b`; dropped entirely if a marker degree exceeds the order.
    pub fn monomial(u_deg: usize, v_deg: usize, s: Series<T>, order: usize) -> Self {
        let mut p = Self::zero(order);
        p.add_term(u_deg, v_deg, s.truncate(order));
        p
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_v(&self) -> bool {
        self.terms.keys().any(|&(_, b)| b > 0)
    }

    /// Coefficient series of `u^a v^b`.
    pub fn term(&self, u_deg: usize, v_deg: usize) -> Series<T> {
        self.terms
            .get(&(u_deg, v_deg))
            .cloned()
            .unwrap_or_else(|| Series::zero(self.order))
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Series<T>)> + '_ {
        self.terms.iter().map(|(k, s)| (*k, s))
    }

    pub fn max_u_degree(&self) -> usize {
        self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0)
    }

    fn add_term(&mut self, u_deg: usize, v_deg: usize, s: Series<T>) {
        if u_deg > self.order || v_deg > self.order || s.is_zero() {
            return;
        }
        let key = (u_deg, v_deg);
        let merged = match self.terms.remove(&key) {
            None => s,
            Some(old) => &old + &s,
        };
        if !merged.is_zero() {
            self.terms.insert(key, merged);
        }
    }

    pub fn scale_series(&self, s: &Series<T>) -> Self {
        let mut out = Self::zero(self.order);
        for (key, c) in self.iter() {
            out.add_term(key.0, key.1, c * s);
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to a marker variable.
    pub fn derivative(&self, var: UVVar) -> Self {
        let mut out = Self::zero(self.order);
        for (&(a, b), s) in &self.terms {
            match var {
                UVVar::U if a > 0 => {
                    out.add_term(a - 1, b, s.scale(&T::from_int(a as i64)));
                }
                UVVar::V if b > 0 => {
                    out.add_term(a, b - 1, s.scale(&T::from_int(b as i64)));
                }
                _ => {}
            }
        }
        out
    }

    /// Substitutes `v = 1`, eliminating the `v` marker.
    pub fn substitute_v_one(&self) -> Self {
        let mut out = Self::zero(self.order);
        for (&(a, _), s) in &self.terms {
            out.add_term(a, 0, s.clone());
        }
        out
    }

    /// Multiplicative inverse; the `u^0 v^0 x^0` coefficient must be a
    /// nonzero `t`-constant.
    pub fn invert(&self) -> Result<Self, Error> {
        let head = self.term(0, 0);
        let head_inv = head.invert()?;
        // self = head * (1 + head_inv * rest); expand the Neumann series of
        // the second factor. Every term of `rest` has marker degree >= 1,
        // so powers beyond 2*order vanish under truncation.
        let mut rest = self.clone();
        rest.terms.remove(&(0, 0));
        let step = (-&rest).scale_series(&head_inv);
        let mut acc = Self::one(self.order);
        let mut power = Self::one(self.order);
        for _ in 0..=2 * self.order {
            power = &power * &step;
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        debug_assert!((&power * &step).is_zero());
        Ok(acc.scale_series(&head_inv))
    }

    /// `numer / denom` truncated to `order` in `x` (and marker degree).
    pub fn rational(numer: &Self, denom: &Self, order: usize) -> Result<Self, Error> {
        let numer = numer.truncate(order);
        let denom = denom.truncate(order);
        Ok(&numer * &denom.invert()?)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut out = Self::zero(order);
        for (key, s) in self.iter() {
            out.add_term(key.0, key.1, s.truncate(order));
        }
        out
    }
}

impl<T: Scalar> Add for &UVPoly<T> {
    type Output = UVPoly<T>;
    fn add(self, rhs: &UVPoly<T>) -> UVPoly<T> {
        let order = self.order.min(rhs.order);
        let mut out = UVPoly::zero(order);
        for (key, s) in self.iter().chain(rhs.iter()) {
            out.add_term(key.0, key.1, s.truncate(order));
        }
        out
    }
}

impl<T: Scalar> Sub for &UVPoly<T> {
    type Output = UVPoly<T>;
    fn sub(self, rhs: &UVPoly<T>) -> UVPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &UVPoly<T> {
    type Output = UVPoly<T>;
    fn neg(self) -> UVPoly<T> {
        let mut out = UVPoly::zero(self.order);
        for (key, s) in self.iter() {
            out.add_term(key.0, key.1, -s);
        }
        out
    }
}

impl<T: Scalar> Mul for &UVPoly<T> {
    type Output = UVPoly<T>;
    fn mul(self, rhs: &UVPoly<T>) -> UVPoly<T> {
        let order = self.order.min(rhs.order);
        let mut out = UVPoly::zero(order);
        for (ka, sa) in self.iter() {
            for (kb, sb) in rhs.iter() {
                if ka.0 + kb.0 > order || ka.1 + kb.1 > order {
                    continue;
                }
                out.add_term(ka.0 + kb.0, ka.1 + kb.1, &sa.truncate(order) * &sb.truncate(order));
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Display for UVPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), s) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "u^{a} v^{b} * ({s})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, TPoly};

    fn u(order: usize) -> UVPoly {
        UVPoly::monomial(1, 0, Series::one(order), order)
    }

    fn v(order: usize) -> UVPoly {
        UVPoly::monomial(0, 1, Series::one(order), order)
    }

    #[test]
    fn derivative_and_substitution() {
        let n = 4;
        // u^2 v: d/du -> 2uv, d/dv -> u^2, v=1 -> u^2.
        let p = &(&u(n) * &u(n)) * &v(n);
        assert_eq!(p.derivative(UVVar::U), (&u(n) * &v(n)).scale_series(&Series::constant(Rat::from_int(2), n)));
        assert_eq!(p.derivative(UVVar::V), &u(n) * &u(n));
        assert_eq!(p.substitute_v_one(), &u(n) * &u(n));
        assert!(!p.substitute_v_one().has_v());
    }

    #[test]
    fn u_d2_dvdu_at_v_one() {
        // u * d^2/(dv du) of u v^2 at v = 1 is 2u.
        let n = 3;
        let p = &u(n) * &(&v(n) * &v(n));
        let d = p
            .derivative(UVVar::U)
            .derivative(UVVar::V)
            .substitute_v_one();
        let got = &u(n) * &d;
        assert_eq!(got, u(n).scale_series(&Series::constant(Rat::from_int(2), n)));
    }

    #[test]
    fn geometric_in_u_matches_direct_expansion() {
        // 1/(1 - u x) = sum_k u^k x^k under truncation.
        let n = 3;
        let ux: UVPoly = UVPoly::monomial(1, 0, Series::x_pow(1, n), n);
        let inv = (&UVPoly::one(n) - &ux).invert().unwrap();
        for k in 0..=n {
            assert_eq!(inv.term(k, 0), Series::x_pow(k, n));
        }
        // Round trip.
        let back = &inv * &(&UVPoly::one(n) - &ux);
        assert_eq!(back, UVPoly::one(n));
    }

    #[test]
    fn invert_requires_unit_head() {
        let n = 2;
        assert_eq!(u(n).invert().unwrap_err(), Error::NonUnitDenominator);
        let t_head = UVPoly::from_series(Series::monomial(0, TPoly::t(), n));
        assert_eq!(t_head.invert().unwrap_err(), Error::NonUnitDenominator);
    }
}
