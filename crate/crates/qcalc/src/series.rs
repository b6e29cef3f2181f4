//! Truncated formal power series over a coefficient field.
//!
//! Used for the generating-function routes: the reciprocal product defining
//! the second-kind q-Stirling numbers, and the exponential generating
//! function of the q-Bernstein polynomials. Binary operations truncate to
//! the smaller of the two orders.

use crate::error::{QError, Result};
use crate::bivar::Bivariate;
use crate::ratfun::RatFunQ;

/// Coefficient field interface for series arithmetic.
pub trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn is_zero(&self) -> bool;
}

impl Coeff for RatFunQ {
    fn zero() -> Self {
        RatFunQ::zero()
    }
    fn one() -> Self {
        RatFunQ::one()
    }
    fn add(&self, other: &Self) -> Self {
        RatFunQ::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFunQ::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunQ::mul(self, other)
    }
    fn inv(&self) -> Result<Self> {
        RatFunQ::inv(self)
    }
    fn is_zero(&self) -> bool {
        RatFunQ::is_zero(self)
    }
}

impl Coeff for Bivariate {
    fn zero() -> Self {
        Bivariate::zero()
    }
    fn one() -> Self {
        Bivariate::one()
    }
    fn add(&self, other: &Self) -> Self {
        Bivariate::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Bivariate::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Bivariate::mul(self, other)
    }
    fn inv(&self) -> Result<Self> {
        Bivariate::inv(self)
    }
    fn is_zero(&self) -> bool {
        Bivariate::is_zero(self)
    }
}

/// Power series cut at an explicit order M; coefficients has length M+1.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    /// Series from coefficients c_0..c_M.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has order >= 0");
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = C::one();
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Product truncated at min(order_a, order_b).
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for i in 0..=order {
            for j in 0..=(order - i) {
                let t = self.coeff(i).mul(&other.coeff(j));
                coeffs[i + j] = coeffs[i + j].add(&t);
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse through the series order. The constant term
    /// must be a unit in the coefficient field.
    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(QError::NonInvertibleSeries);
        }
        let c0_inv = self.coeffs[0].inv().map_err(|_| QError::NonInvertibleSeries)?;
        let order = self.order();
        let mut out = vec![C::zero(); order + 1];
        out[0] = c0_inv.clone();
        // b_n = -c0^{-1} * sum_{k=1..n} a_k b_{n-k}
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc.add(&self.coeff(k).mul(&out[n - k]));
            }
            out[n] = C::zero().sub(&c0_inv.mul(&acc));
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(cs: &[i64]) -> TruncatedSeries<RatFunQ> {
        TruncatedSeries::from_coeffs(cs.iter().map(|&c| RatFunQ::from_int(c)).collect())
    }

    #[test]
    fn geometric_inverse() {
        // 1/(1+z) through order 3
        assert_eq!(s(&[1, 1, 0, 0]).invert().unwrap(), s(&[1, -1, 1, -1]));
    }

    #[test]
    fn truncated_product() {
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])), s(&[1, 0, -1]));
        // orders are clipped to the minimum
        assert_eq!(s(&[1, 1, 1, 1]).mul(&s(&[1, 0])).order(), 1);
    }

    #[test]
    fn non_unit_constant_term() {
        assert_eq!(s(&[0, 1]).invert().unwrap_err(), QError::NonInvertibleSeries);
    }

    #[test]
    fn invert_then_multiply_is_identity() {
        let a = s(&[1, 3, -2, 5, 7]);
        let id = a.mul(&a.invert().unwrap());
        assert_eq!(id, TruncatedSeries::one(4));
    }
}
