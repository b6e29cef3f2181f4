//! q-numbers, q-factorials, Gaussian binomials, the symbolic [x]_q
//! machinery over Q(q, t), and the q-difference operator.
//!
//! The symbolic x is encoded through t = q^x: every x-dependent object is a
//! [`Bivariate`]. Shifted arguments like [x-1]_q are t-substitutions
//! (t -> t/q), never a second variable.

use crate::bivar::{Bivariate, TPoly};
use crate::error::{QError, Result};
use crate::poly::PolyQ;
use crate::rational::rat_one;
use crate::ratfun::RatFunQ;

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
pub fn q_int(n: u32) -> PolyQ {
    PolyQ::from_coeffs(vec![rat_one(); n as usize])
}

/// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.
pub fn q_factorial(n: u32) -> PolyQ {
    let mut acc = PolyQ::one();
    for k in 1..=n {
        acc = acc.mul(&q_int(k));
    }
    acc
}

/// Gaussian binomial coefficient as an explicit polynomial in q.
/// Out-of-range k (negative or above n) gives 0.
pub fn gauss_binom(n: u32, k: i64) -> PolyQ {
    if k < 0 || k as u32 > n {
        return PolyQ::zero();
    }
    let k = k as u32;
    // [n]! / ([k]! [n-k]!) by exact division
    let numer = q_factorial(n);
    numer
        .divexact(&q_factorial(k))
        .expect("q-factorial divides")
        .divexact(&q_factorial(n - k))
        .expect("q-factorial divides")
}

/// binom(k, 2) = k(k-1)/2 as an i64 exponent.
pub fn choose2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// q^{binom(k,2)} as an element of Q(q); negative exponents (from k < 0,
/// not used by the identities) would still be exact.
pub fn q_pow_choose2(k: i64) -> RatFunQ {
    RatFunQ::q_pow(choose2(k))
}

/// [x]_q = (1 - t)/(1 - q).
pub fn x_q() -> Bivariate {
    let inv = RatFunQ::new(PolyQ::one(), one_minus_q()).expect("1-q is nonzero");
    Bivariate::from_tpoly(TPoly::from_coeffs(vec![inv.clone(), inv.neg()]))
}

/// [1-x]_q = (1 - q t^{-1})/(1 - q) = (t - q)/(t (1 - q)).
pub fn one_minus_x_q() -> Bivariate {
    let numer = TPoly::from_coeffs(vec![RatFunQ::q().neg(), RatFunQ::one()]);
    let denom = TPoly::monomial(RatFunQ::from_poly(one_minus_q()), 1);
    Bivariate::new(numer, denom).expect("nonzero denominator")
}

/// q^{mx} = t^m for any integer m.
pub fn q_pow_x(m: i64) -> Bivariate {
    Bivariate::t_pow(m)
}

fn one_minus_q() -> PolyQ {
    PolyQ::from_coeffs(vec![rat_one(), -rat_one()])
}

/// q-falling factorial [x]_{k,q} = prod_{j=0}^{k-1} (1 - t q^{-j})/(1 - q).
pub fn q_falling(k: u32) -> Bivariate {
    let inv_1mq = RatFunQ::new(PolyQ::one(), one_minus_q()).expect("1-q is nonzero");
    let mut acc = Bivariate::one();
    for j in 0..k {
        let factor = Bivariate::from_tpoly(TPoly::from_coeffs(vec![
            inv_1mq.clone(),
            inv_1mq.mul(&RatFunQ::q_pow(-(j as i64))).neg(),
        ]));
        acc = acc.mul(&factor);
    }
    acc
}

/// binom(x, k)_q = [x]_{k,q} / [k]_q!.
pub fn q_binom_x(k: u32) -> Bivariate {
    let kfact = RatFunQ::from_poly(q_factorial(k));
    q_falling(k)
        .div(&Bivariate::from_ratfun(kfact))
        .expect("q-factorial is nonzero")
}

/// Values that the q-difference operator and Newton reconstruction act on:
/// anything with addition and Q(q)-scalar multiplication.
pub trait QModule: Clone {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, c: &RatFunQ) -> Self;
}

impl QModule for RatFunQ {
    fn zero() -> Self {
        RatFunQ::zero()
    }
    fn add(&self, other: &Self) -> Self {
        RatFunQ::add(self, other)
    }
    fn scale(&self, c: &RatFunQ) -> Self {
        RatFunQ::mul(self, c)
    }
}

impl QModule for Bivariate {
    fn zero() -> Self {
        Bivariate::zero()
    }
    fn add(&self, other: &Self) -> Self {
        Bivariate::add(self, other)
    }
    fn scale(&self, c: &RatFunQ) -> Self {
        Bivariate::scale(self, c)
    }
}

/// Delta_q^n f(0) = sum_{k=0}^{n} binom(n,k)_q (-1)^k q^{binom(k,2)} f(n-k),
/// from the sampled values f(0), ..., f(n).
pub fn q_difference<V: QModule>(values: &[V], n: u32) -> Result<V> {
    let need = n as usize + 1;
    if values.len() < need {
        return Err(QError::ArityError {
            need,
            got: values.len(),
        });
    }
    let mut acc = V::zero();
    for k in 0..=n {
        let mut c = RatFunQ::from_poly(gauss_binom(n, k as i64));
        c = c.mul(&q_pow_choose2(k as i64));
        if k % 2 == 1 {
            c = c.neg();
        }
        acc = acc.add(&values[(n - k) as usize].scale(&c));
    }
    Ok(acc)
}

/// Newton reconstruction: f(x0) = sum_{m<=n} binom(x0, m)_q Delta_q^m f(0),
/// for sequences whose Newton expansion terminates by the sample length.
pub fn newton_reconstruct(values: &[RatFunQ], x0: u32) -> Result<RatFunQ> {
    let mut acc = RatFunQ::zero();
    for m in 0..values.len() as u32 {
        let delta = q_difference(values, m)?;
        let coeff = RatFunQ::from_poly(gauss_binom(x0, m as i64));
        acc = acc.add(&delta.mul(&coeff));
    }
    Ok(acc)
}

/// [x]_q specialized at integer x (a RatFunQ), for building sample vectors.
pub fn q_int_ratfun(x: u32) -> RatFunQ {
    RatFunQ::from_poly(q_int(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_int, rat_frac};

    fn p(cs: &[i64]) -> PolyQ {
        PolyQ::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn q_int_values() {
        assert_eq!(q_int(0), PolyQ::zero());
        assert_eq!(q_int(1), PolyQ::one());
        assert_eq!(q_int(3), p(&[1, 1, 1]));
    }

    #[test]
    fn q_factorial_values() {
        assert_eq!(q_factorial(0), PolyQ::one());
        assert_eq!(q_factorial(2), p(&[1, 1]));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn gauss_binom_values() {
        assert_eq!(gauss_binom(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(gauss_binom(5, 0), PolyQ::one());
        assert_eq!(gauss_binom(3, 5), PolyQ::zero());
        assert_eq!(gauss_binom(3, -1), PolyQ::zero());
    }

    #[test]
    fn gauss_binom_pascal_and_q1_limit() {
        for n in 1..=12u32 {
            for k in 0..=n as i64 {
                let lhs = gauss_binom(n, k);
                let rhs = gauss_binom(n - 1, k - 1)
                    .add(&gauss_binom(n - 1, k).mul(&PolyQ::monomial(rat_one(), k as usize)));
                assert_eq!(lhs, rhs, "Pascal fails at ({n},{k})");
                let classical = num::BigRational::from_integer(crate::rational::binom_int(n as i64, k));
                assert_eq!(lhs.eval(&rat_int(1)), classical);
            }
        }
    }

    #[test]
    fn symbolic_builders() {
        // [x]_q at x = 3 is [3]_q
        assert_eq!(x_q().subst_t_qx(3).unwrap(), q_int_ratfun(3));
        // [1-x]_q at x = 0 is 1, at x = 1 is 0
        assert_eq!(one_minus_x_q().subst_t_qx(0).unwrap(), RatFunQ::one());
        assert!(one_minus_x_q().subst_t_qx(1).unwrap().is_zero());
        assert!(q_pow_x(0).equal(&Bivariate::one()));
        // q_falling(1) = [x]_q, q_falling(0) = 1
        assert!(q_falling(0).equal(&Bivariate::one()));
        assert!(q_falling(1).equal(&x_q()));
        // q_binom_x(2) = [x]_{2,q} / [2]_q!
        let expect = q_falling(2)
            .div(&Bivariate::from_ratfun(RatFunQ::from_poly(p(&[1, 1]))))
            .unwrap();
        assert!(q_binom_x(2).equal(&expect));
    }

    #[test]
    fn q_falling_specializes_to_gauss_binom() {
        // binom(x,k)_q at integer x = x0 equals gauss_binom(x0, k)
        for x0 in 0..=6u32 {
            for k in 0..=4u32 {
                assert_eq!(
                    q_binom_x(k).subst_t_qx(x0).unwrap(),
                    RatFunQ::from_poly(gauss_binom(x0, k as i64)),
                    "({x0},{k})"
                );
            }
        }
    }

    #[test]
    fn q_difference_small_cases() {
        let a = RatFunQ::from_rat(rat_frac(2, 3));
        let b = RatFunQ::from_int(5);
        // n=0 is the identity, n=1 the plain forward difference
        assert_eq!(q_difference(&[a.clone()], 0).unwrap(), a);
        assert_eq!(q_difference(&[a.clone(), b.clone()], 1).unwrap(), b.sub(&a));
        assert!(matches!(
            q_difference(&[a], 1),
            Err(QError::ArityError { need: 2, got: 1 })
        ));
    }

    #[test]
    fn q_difference_of_x_squared() {
        // f(x) = [x]_q^2 sampled at 0,1,2: Delta_q^2 f(0) = [2]^2 - [2]
        let samples: Vec<RatFunQ> = (0..=2)
            .map(|x| q_int_ratfun(x).mul(&q_int_ratfun(x)))
            .collect();
        let two = q_int_ratfun(2);
        let expect = two.mul(&two).sub(&two);
        assert_eq!(q_difference(&samples, 2).unwrap(), expect);
    }

    #[test]
    fn newton_reconstruction_examples() {
        // f(x) = [x]_q at x0 = 3
        let samples: Vec<RatFunQ> = (0..=1).map(q_int_ratfun).collect();
        assert_eq!(newton_reconstruct(&samples, 3).unwrap(), q_int_ratfun(3));
        // constant f
        let c = RatFunQ::from_int(7);
        assert_eq!(newton_reconstruct(&[c.clone()], 5).unwrap(), c);
        // f(x) = [x]_q^2 at x0 = 4
        let sq: Vec<RatFunQ> = (0..=2)
            .map(|x| q_int_ratfun(x).mul(&q_int_ratfun(x)))
            .collect();
        let four = q_int_ratfun(4);
        assert_eq!(newton_reconstruct(&sq, 4).unwrap(), four.mul(&four));
    }
}
