use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::{Scalar, TPoly};
use crate::Error;

/// Power series in `x`, truncated at a fixed inclusive order, with
/// polynomial-in-`t` coefficients.
///
/// Arithmetic between series of different orders truncates to the minimum
/// of the two and logs a warning, so precision is never lost silently.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<T: Scalar = BigRational> {
    order: usize,
    coeffs: Vec<TPoly<T>>,
}

impl<T: Scalar> Series<T> {
    pub fn zero(order: usize) -> Self {
        Series {
            order,
            coeffs: vec![TPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::monomial(0, TPoly::constant(c), order)
    }

    /// The monomial `p(t) * x^xdeg`; zero if `xdeg` exceeds the order.
    pub fn monomial(xdeg: usize, p: TPoly<T>, order: usize) -> Self {
        let mut s = Self::zero(order);
        if xdeg <= order {
            s.coeffs[xdeg] = p;
        }
        s
    }

    pub fn x_pow(xdeg: usize, order: usize) -> Self {
        Self::monomial(xdeg, TPoly::one(), order)
    }

    pub fn from_coeffs(coeffs: Vec<TPoly<T>>) -> Self {
        assert!(!coeffs.is_empty());
        Series {
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, xdeg: usize) -> &TPoly<T> {
        &self.coeffs[xdeg]
    }

    pub fn coeffs(&self) -> &[TPoly<T>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TPoly::is_zero)
    }

    /// True iff no coefficient involves `t`.
    pub fn is_t_free(&self) -> bool {
        self.coeffs.iter().all(TPoly::is_constant)
    }

    /// Scalar coefficients of a `t`-free series.
    pub fn scalar_coeffs(&self) -> Vec<T> {
        debug_assert!(self.is_t_free());
        self.coeffs.iter().map(|p| p.coeff(0)).collect()
    }

    /// Laguerre-carrier invariant: the `t`-degree of every coefficient is
    /// bounded by its `x`-degree.
    pub fn is_laguerre_carrier(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(j, p)| p.degree().map_or(true, |d| d <= j))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Series {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn common_order(&self, rhs: &Self) -> usize {
        if self.order != rhs.order {
            log::warn!(
                "mixing series of orders {} and {}; truncating to the minimum",
                self.order,
                rhs.order
            );
        }
        self.order.min(rhs.order)
    }

    pub fn scale(&self, c: &T) -> Self {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn scale_t(&self, p: &TPoly<T>) -> Self {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|q| q * p).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse. The `x`-constant term must be a nonzero
    /// `t`-constant.
    pub fn invert(&self) -> Result<Self, Error> {
        let head = self.coeff(0);
        if head.is_zero() || !head.is_constant() {
            return Err(Error::NonUnitDenominator);
        }
        let c0 = head.coeff(0);
        let mut inv = Vec::with_capacity(self.order + 1);
        inv.push(TPoly::constant(T::one() / c0.clone()));
        for n in 1..=self.order {
            let mut acc = TPoly::zero();
            for k in 1..=n {
                acc = &acc + &(self.coeff(k) * &inv[n - k]);
            }
            inv.push((-&acc).scale(&(T::one() / c0.clone())));
        }
        Ok(Series {
            order: self.order,
            coeffs: inv,
        })
    }

    /// `numer / denom` as a truncated series; the usual way to expand a
    /// closed-form rational generating function.
    pub fn rational(numer: &Self, denom: &Self, order: usize) -> Result<Self, Error> {
        let numer = numer.truncate(order);
        let denom = denom.truncate(order);
        Ok(&numer * &denom.invert()?)
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self, Error> {
        if !self.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out = Vec::with_capacity(self.order + 1);
        out.push(TPoly::one());
        // F' = A' F, coefficient-wise: n F_n = sum_{k=1..n} k A_k F_{n-k}.
        for n in 1..=self.order {
            let mut acc = TPoly::zero();
            for k in 1..=n {
                let term = self.coeff(k).scale(&T::from_int(k as i64));
                acc = &acc + &(&term * &out[n - k]);
            }
            out.push(acc.scale(&(T::one() / T::from_int(n as i64))));
        }
        Ok(Series {
            order: self.order,
            coeffs: out,
        })
    }
}

impl<T: Scalar> Add for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: &Series<T>) -> Series<T> {
        let order = self.common_order(rhs);
        Series {
            order,
            coeffs: (0..=order)
                .map(|n| self.coeff(n) + rhs.coeff(n))
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: &Series<T>) -> Series<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| -p).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: &Series<T>) -> Series<T> {
        let order = self.common_order(rhs);
        let mut coeffs = vec![TPoly::zero(); order + 1];
        for i in 0..=order {
            if self.coeff(i).is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeff(j).is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(self.coeff(i) * rhs.coeff(j));
            }
        }
        Series { order, coeffs }
    }
}

impl<T: Scalar> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "[{p}]")?,
                1 => write!(f, "[{p}]*x")?,
                _ => write!(f, "[{p}]*x^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}
