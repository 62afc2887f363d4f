use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::Scalar;
use crate::Error;

/// Polynomial in the umbral variable `t`.
///
/// Zero coefficients are never stored; the zero polynomial has an empty
/// coefficient map and no degree.
#[derive(Debug, Clone, PartialEq)]
pub struct TPoly<T: Scalar = BigRational> {
    coeffs: BTreeMap<usize, T>,
}

impl<T: Scalar> TPoly<T> {
    pub fn zero() -> Self {
        TPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::term(0, c)
    }

    /// The monomial `c * t^deg`.
    pub fn term(deg: usize, c: T) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        TPoly { coeffs }
    }

    /// The variable `t` itself.
    pub fn t() -> Self {
        Self::term(1, T::one())
    }

    pub fn from_coeffs(it: impl IntoIterator<Item = (usize, T)>) -> Self {
        let mut p = Self::zero();
        for (deg, c) in it {
            p.add_term(deg, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, deg: usize) -> T {
        self.coeffs.get(&deg).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// True iff the polynomial is a constant (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.degree().map_or(true, |d| d == 0)
    }

    fn add_term(&mut self, deg: usize, c: T) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&deg) {
            None => {
                self.coeffs.insert(deg, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.coeffs.insert(deg, sum);
                }
            }
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.iter().map(|(d, a)| (d, a.clone() * c.clone())))
    }

    /// Substitutes `q` for `t`, by Horner evaluation.
    pub fn compose(&self, q: &TPoly<T>) -> Self {
        let mut acc = Self::zero();
        let Some(top) = self.degree() else {
            return acc;
        };
        for deg in (0..=top).rev() {
            acc = &acc * q;
            acc.add_term(0, self.coeff(deg));
        }
        acc
    }

    pub fn eval(&self, at: &T) -> T {
        let mut acc = T::zero();
        let Some(top) = self.degree() else {
            return acc;
        };
        for deg in (0..=top).rev() {
            acc = acc * at.clone() + self.coeff(deg);
        }
        acc
    }

    /// Exact quotient `self / t`; fails if the constant term is nonzero.
    pub fn div_t(&self) -> Result<Self, Error> {
        if !self.coeff(0).is_zero() {
            return Err(Error::NonzeroConstant);
        }
        Ok(Self::from_coeffs(self.iter().map(|(d, c)| (d - 1, c.clone()))))
    }
}

impl<T: Scalar> Add for &TPoly<T> {
    type Output = TPoly<T>;
    fn add(self, rhs: &TPoly<T>) -> TPoly<T> {
        let mut out = self.clone();
        for (deg, c) in rhs.iter() {
            out.add_term(deg, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &TPoly<T> {
    type Output = TPoly<T>;
    fn sub(self, rhs: &TPoly<T>) -> TPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &TPoly<T> {
    type Output = TPoly<T>;
    fn neg(self) -> TPoly<T> {
        TPoly::from_coeffs(self.iter().map(|(d, c)| (d, -c.clone())))
    }
}

impl<T: Scalar> Mul for &TPoly<T> {
    type Output = TPoly<T>;
    fn mul(self, rhs: &TPoly<T>) -> TPoly<T> {
        let mut out = TPoly::zero();
        for (da, a) in self.iter() {
            for (db, b) in rhs.iter() {
                out.add_term(da + db, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Display for TPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{deg}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let p = TPoly::from_coeffs([(0, r(1)), (2, r(3)), (5, r(0))]);
        let q = TPoly::from_coeffs([(2, r(-3))]);
        let s = &p + &q;
        assert_eq!(s, TPoly::constant(r(1)));
        assert_eq!(s.degree(), Some(0));
        assert!(TPoly::<Rat>::zero().degree().is_none());
    }

    #[test]
    fn div_t_rejects_constants() {
        let p: TPoly = TPoly::from_coeffs([(1, r(2)), (3, r(1))]);
        assert_eq!(p.div_t().unwrap(), TPoly::from_coeffs([(0, r(2)), (2, r(1))]));
        assert_eq!(TPoly::<Rat>::one().div_t(), Err(Error::NonzeroConstant));
    }

    #[test]
    fn compose_substitutes() {
        // (t^2 - 1) o (t + 1) = t^2 + 2t
        let p: TPoly = TPoly::from_coeffs([(2, r(1)), (0, r(-1))]);
        let q = TPoly::from_coeffs([(1, r(1)), (0, r(1))]);
        assert_eq!(p.compose(&q), TPoly::from_coeffs([(2, r(1)), (1, r(2))]));
    }
}
