//! q-Stirling numbers of both kinds, by every route the source identities
//! give, plus the conversion identities among powers of [x]_q, q-falling
//! factorials, and q^{nx}.
//!
//! The routes are deliberately kept separate:
//! - `s1_gen`: first kind from the product prod_{k=1}^{n} (1 + [k]_q z);
//! - `s1_signed`: signed first kind from the monic expansion of
//!   prod_{k=0}^{n-1} ([x]_q - [k]_q) in powers of [x]_q;
//! - `s2_gen`: second kind as Taylor coefficients of the reciprocal product;
//! - `s2_explicit`: the alternating-sum closed form (the Delta_q route);
//! - `s2_alt`: the Gaussian-binomial alternating sum.
//!
//! Agreement among routes is audited, never assumed.

use std::collections::BTreeMap;

use num::BigRational;

use crate::bivar::Bivariate;
use crate::error::Result;
use crate::poly::PolyQ;
use crate::qcore::{
    gauss_binom, q_binom_x, q_difference, q_factorial, q_int, q_int_ratfun, q_pow_choose2, x_q,
};
use crate::rational::binom_int;
use crate::ratfun::RatFunQ;
use crate::series::TruncatedSeries;

/// S_1(n, k : q) for k = 0..n: coefficients of prod_{k=1}^{n} (1 + [k]_q z).
pub fn s1_gen(n: u32) -> Vec<PolyQ> {
    let mut coeffs = vec![PolyQ::one()];
    for k in 1..=n {
        let qk = q_int(k);
        let mut next = Vec::with_capacity(coeffs.len() + 1);
        next.push(coeffs[0].clone());
        for i in 1..=coeffs.len() {
            let carry = coeffs[i - 1].mul(&qk);
            if i < coeffs.len() {
                next.push(coeffs[i].add(&carry));
            } else {
                next.push(carry);
            }
        }
        coeffs = next;
    }
    coeffs
}

/// Second-kind coefficients from the reciprocal product, through order
/// max_k. The Taylor expansion of the left side is an infinite series;
/// the finite display is treated as a truncation.
pub fn s2_gen(n: u32, max_k: usize) -> Vec<RatFunQ> {
    let poly = s1_gen(n);
    let mut coeffs: Vec<RatFunQ> = poly.into_iter().map(RatFunQ::from_poly).collect();
    coeffs.resize(max_k + 1, RatFunQ::zero());
    coeffs.truncate(max_k + 1);
    let series = TruncatedSeries::from_coeffs(coeffs);
    series
        .invert()
        .expect("constant term 1 is a unit")
        .coeffs()
        .to_vec()
}

/// S_2(n, k : q) from the explicit alternating sum
/// q^{-binom(k,2)}/[k]_q! * sum_j (-1)^j q^{binom(j,2)} binom(k,j)_q [k-j]_q^n.
pub fn s2_explicit(n: u32, k: u32) -> RatFunQ {
    let mut acc = RatFunQ::zero();
    for j in 0..=k {
        let mut term = RatFunQ::from_poly(gauss_binom(k, j as i64));
        term = term.mul(&q_pow_choose2(j as i64));
        term = term.mul(&q_int_ratfun(k - j).pow(n as i64).expect("nonneg power"));
        if j % 2 == 1 {
            term = term.neg();
        }
        acc = acc.add(&term);
    }
    let front = RatFunQ::q_pow(-crate::qcore::choose2(k as i64))
        .div(&RatFunQ::from_poly(q_factorial(k)))
        .expect("q-factorial nonzero");
    acc.mul(&front)
}

/// Delta_q^k 0^n computed through the q-difference operator on samples of
/// f(x) = [x]_q^n; the independent route cross-checking `s2_explicit`.
pub fn delta_q_zero_pow(n: u32, k: u32) -> RatFunQ {
    let samples: Vec<RatFunQ> = (0..=k)
        .map(|x| q_int_ratfun(x).pow(n as i64).expect("nonneg power"))
        .collect();
    q_difference(&samples, k).expect("exact arity")
}

/// S_2(n, k : q) from the Gaussian-binomial alternating sum
/// (1-q)^{-k} sum_j (-1)^{k-j} C(k+n, k-j) binom(j+n, j)_q.
pub fn s2_alt(n: u32, k: u32) -> RatFunQ {
    let mut acc = RatFunQ::zero();
    for j in 0..=k {
        let c = binom_int((k + n) as i64, (k - j) as i64);
        let mut term = RatFunQ::from_poly(gauss_binom(j + n, j as i64));
        term = term.mul(&RatFunQ::from_rat(BigRational::from_integer(c)));
        if (k - j) % 2 == 1 {
            term = term.neg();
        }
        acc = acc.add(&term);
    }
    let one_minus_q = RatFunQ::from_poly(PolyQ::from_coeffs(vec![
        crate::rational::rat_one(),
        -crate::rational::rat_one(),
    ]));
    acc.div(&one_minus_q.pow(k as i64).expect("nonneg power"))
        .expect("nonzero")
}

/// Signed first kind: coefficients of prod_{k=0}^{n-1} ([x]_q - [k]_q) as a
/// polynomial in the formal variable [x]_q, index k = 0..n.
pub fn s1_signed(n: u32) -> Vec<PolyQ> {
    // coefficients in X = [x]_q, ascending
    let mut coeffs = vec![PolyQ::one()];
    for k in 0..n {
        let root = q_int(k);
        let mut next = vec![PolyQ::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            // (X - [k]) * c X^i
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&c.mul(&root));
        }
        coeffs = next;
    }
    coeffs
}

/// Both sides of the power-to-falling conversion: LHS = [x]_q^n,
/// RHS = sum_k q^{binom(k,2)} binom(x,k)_q [k]_q! S_2(n, k : q) with the
/// explicit-route S_2.
pub fn power_to_falling(n: u32) -> Result<(Bivariate, Bivariate)> {
    let lhs = x_q().pow(n as i64)?;
    let mut rhs = Bivariate::zero();
    for k in 0..=n {
        let scalar = q_pow_choose2(k as i64)
            .mul(&RatFunQ::from_poly(q_factorial(k)))
            .mul(&s2_explicit(n, k));
        rhs = rhs.add(&q_binom_x(k).scale(&scalar));
    }
    Ok((lhs, rhs))
}

/// The three forms of the q^{nx} expansion:
/// (t^n,
///  sum_k (q-1)^k q^{binom(k,2)} binom(n,k)_q [x]_{k,q},
///  sum_m { sum_{k=m}^{n} (q-1)^k binom(n,k)_q S_1(k, m : q) } [x]_q^m)
/// with S_1 from the generating product.
pub fn qpow_expansion(n: u32) -> Result<(Bivariate, Bivariate, Bivariate)> {
    let first = Bivariate::t_pow(n as i64);

    let q_minus_1 = RatFunQ::from_poly(PolyQ::from_coeffs(vec![
        -crate::rational::rat_one(),
        crate::rational::rat_one(),
    ]));

    let mut middle = Bivariate::zero();
    for k in 0..=n {
        let scalar = q_minus_1
            .pow(k as i64)?
            .mul(&q_pow_choose2(k as i64))
            .mul(&RatFunQ::from_poly(gauss_binom(n, k as i64)));
        middle = middle.add(&crate::qcore::q_falling(k).scale(&scalar));
    }

    let mut right = Bivariate::zero();
    let xq = x_q();
    for m in 0..=n {
        let mut inner = RatFunQ::zero();
        for k in m..=n {
            let s1 = s1_gen(k);
            let coeff = q_minus_1
                .pow(k as i64)?
                .mul(&RatFunQ::from_poly(gauss_binom(n, k as i64)))
                .mul(&RatFunQ::from_poly(s1[m as usize].clone()));
            inner = inner.add(&coeff);
        }
        right = right.add(&xq.pow(m as i64)?.scale(&inner));
    }

    Ok((first, middle, right))
}

/// Table kinds the CLI can emit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StirlingKind {
    FirstGen,
    SecondGen,
    SecondExplicit,
    SecondAlt,
    FirstSigned,
}

/// Precomputed (n, k) -> value table for one route.
pub struct StirlingTable {
    pub kind: StirlingKind,
    pub max_n: u32,
    pub entries: BTreeMap<(u32, u32), RatFunQ>,
}

impl StirlingTable {
    pub fn build(kind: StirlingKind, max_n: u32) -> Self {
        let mut entries = BTreeMap::new();
        for n in 0..=max_n {
            match kind {
                StirlingKind::FirstGen => {
                    for (k, p) in s1_gen(n).into_iter().enumerate() {
                        entries.insert((n, k as u32), RatFunQ::from_poly(p));
                    }
                }
                StirlingKind::FirstSigned => {
                    for (k, p) in s1_signed(n).into_iter().enumerate() {
                        entries.insert((n, k as u32), RatFunQ::from_poly(p));
                    }
                }
                StirlingKind::SecondGen => {
                    for (k, v) in s2_gen(n, max_n as usize).into_iter().enumerate() {
                        entries.insert((n, k as u32), v);
                    }
                }
                StirlingKind::SecondExplicit => {
                    for k in 0..=n {
                        entries.insert((n, k), s2_explicit(n, k));
                    }
                }
                StirlingKind::SecondAlt => {
                    for k in 0..=n {
                        entries.insert((n, k), s2_alt(n, k));
                    }
                }
            }
        }
        StirlingTable {
            kind,
            max_n,
            entries,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn p(cs: &[i64]) -> PolyQ {
        PolyQ::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn s1_gen_small() {
        assert_eq!(s1_gen(0), vec![PolyQ::one()]);
        assert_eq!(s1_gen(1), vec![PolyQ::one(), PolyQ::one()]);
        assert_eq!(s1_gen(2), vec![PolyQ::one(), p(&[2, 1]), p(&[1, 1])]);
        // S_1(n, n) = [n]_q!
        for n in 0..=6u32 {
            assert_eq!(s1_gen(n)[n as usize], q_factorial(n));
            assert_eq!(s1_gen(n)[0], PolyQ::one());
        }
    }

    /// Elementary symmetric polynomial oracle: e_k([1]_q, ..., [n]_q) by
    /// direct enumeration of k-subsets.
    fn elem_sym_oracle(n: u32, k: usize) -> PolyQ {
        fn go(vals: &[PolyQ], k: usize, start: usize) -> PolyQ {
            if k == 0 {
                return PolyQ::one();
            }
            let mut acc = PolyQ::zero();
            for i in start..vals.len() {
                if vals.len() - i < k {
                    break;
                }
                acc = acc.add(&vals[i].mul(&go(vals, k - 1, i + 1)));
            }
            acc
        }
        let vals: Vec<PolyQ> = (1..=n).map(q_int).collect();
        go(&vals, k, 0)
    }

    #[test]
    fn s1_gen_matches_elementary_symmetric_oracle() {
        for n in 0..=8u32 {
            let row = s1_gen(n);
            for k in 0..=n as usize {
                assert_eq!(row[k], elem_sym_oracle(n, k), "({n},{k})");
            }
        }
    }

    #[test]
    fn s2_gen_small() {
        assert_eq!(
            s2_gen(1, 2),
            vec![RatFunQ::one(), RatFunQ::from_int(-1), RatFunQ::one()]
        );
        let row = s2_gen(0, 3);
        assert_eq!(row[0], RatFunQ::one());
        assert!(row[1..].iter().all(|c| c.is_zero()));
        // n=2, z-coefficient is -(2+q)
        let row2 = s2_gen(2, 1);
        assert_eq!(row2[1], RatFunQ::from_poly(p(&[-2, -1])));
    }

    #[test]
    fn s2_gen_convolution_with_s1_gen() {
        // prod * reciprocal = 1 through the truncation order
        for n in 0..=8u32 {
            let max_k = 8usize;
            let mut s1: Vec<RatFunQ> = s1_gen(n).into_iter().map(RatFunQ::from_poly).collect();
            s1.resize(max_k + 1, RatFunQ::zero());
            let a = TruncatedSeries::from_coeffs(s1);
            let b = TruncatedSeries::from_coeffs(s2_gen(n, max_k));
            assert_eq!(a.mul(&b), TruncatedSeries::one(max_k));
        }
    }

    #[test]
    fn s2_explicit_small() {
        assert_eq!(s2_explicit(0, 0), RatFunQ::one());
        assert_eq!(s2_explicit(1, 1), RatFunQ::one());
        assert_eq!(s2_explicit(2, 2), RatFunQ::one());
    }

    #[test]
    fn s2_explicit_matches_delta_route() {
        for n in 0..=10u32 {
            for k in 0..=10u32 {
                let lhs = s2_explicit(n, k)
                    .mul(&RatFunQ::from_poly(q_factorial(k)))
                    .mul(&q_pow_choose2(k as i64));
                assert_eq!(lhs, delta_q_zero_pow(n, k), "({n},{k})");
            }
        }
    }

    #[test]
    fn s2_alt_small() {
        assert_eq!(s2_alt(0, 0), RatFunQ::one());
        // the alternating-sum route gives -1 at (1,1); the explicit route
        // gives +1 there, and the audit records the discrepancy
        assert_eq!(s2_alt(1, 1), RatFunQ::from_int(-1));
    }

    #[test]
    fn s1_signed_small() {
        assert_eq!(s1_signed(0), vec![PolyQ::one()]);
        assert_eq!(s1_signed(1), vec![PolyQ::zero(), PolyQ::one()]);
        assert_eq!(s1_signed(2), vec![PolyQ::zero(), p(&[-1]), PolyQ::one()]);
    }

    #[test]
    fn power_to_falling_holds() {
        for n in 0..=6u32 {
            let (lhs, rhs) = power_to_falling(n).unwrap();
            assert!(lhs.equal(&rhs), "n={n}");
        }
    }

    #[test]
    fn qpow_expansion_first_equality() {
        for n in 0..=6u32 {
            let (first, middle, _) = qpow_expansion(n).unwrap();
            assert!(first.equal(&middle), "n={n}");
        }
    }
}
