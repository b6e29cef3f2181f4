//! Carlitz q-Bernoulli numbers by recurrence and by exact moments, plus the
//! higher-order and inverse-order q-Bernoulli numbers.
//!
//! Two independent routes to beta_n are kept side by side: the triangular
//! recurrence solved in ascending n, and the exact q-integral of [x]_q^n
//! through the moment law I_q(q^{mx}) = (m+1)/[m+1]_q. Their agreement is an
//! audited claim, not a definition.

use std::collections::HashMap;
use std::sync::Mutex;

use num::BigRational;

use crate::bivar::Bivariate;
use crate::error::{QError, Result};
use crate::poly::PolyQ;
use crate::qcore::{q_int, x_q};
use crate::rational::{binom_int, factorial, rat_one};
use crate::ratfun::RatFunQ;

/// [m]_q for any integer m, as an element of Q(q). For m < 0 the defining
/// fraction (1 - q^m)/(1 - q) is cleared of negative q-powers.
pub fn q_int_any(m: i64) -> RatFunQ {
    if m >= 0 {
        return RatFunQ::from_poly(q_int(m as u32));
    }
    // (1 - q^m)/(1-q) = -q^m (1 - q^{-m})/(1-q) = -q^m [|m|]_q
    RatFunQ::q_pow(m)
        .mul(&RatFunQ::from_poly(q_int((-m) as u32)))
        .neg()
}

/// Memoized store for the Carlitz numbers and their (inverse-)order
/// variants. Append-only; results are deterministic regardless of fill
/// order, so the caches may be shared across threads.
pub struct BernoulliCache {
    betas: Mutex<Vec<RatFunQ>>,
    order_cache: Mutex<HashMap<(u32, u32), RatFunQ>>,
    inverse_cache: Mutex<HashMap<(u32, u32), RatFunQ>>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            betas: Mutex::new(vec![RatFunQ::one()]),
            order_cache: Mutex::new(HashMap::new()),
            inverse_cache: Mutex::new(HashMap::new()),
        }
    }

    /// Carlitz beta_n from the recurrence
    /// beta_n = ([n = 1] - q * sum_{j<n} C(n,j) q^j beta_j) / (q^{n+1} - 1),
    /// with beta_0 = 1.
    pub fn beta(&self, n: u32) -> RatFunQ {
        let mut betas = self.betas.lock().unwrap();
        while betas.len() <= n as usize {
            let k = betas.len() as u32; // next index to fill
            let mut acc = RatFunQ::zero();
            for j in 0..k {
                let c = BigRational::from_integer(binom_int(k as i64, j as i64));
                acc = acc.add(
                    &betas[j as usize]
                        .mul(&RatFunQ::q_pow(j as i64))
                        .scale(&c),
                );
            }
            // q * acc, moved to the right-hand side
            let mut rhs = acc.mul(&RatFunQ::q()).neg();
            if k == 1 {
                rhs = rhs.add(&RatFunQ::one());
            }
            let denom = RatFunQ::q_pow((k + 1) as i64).sub(&RatFunQ::one());
            betas.push(rhs.div(&denom).expect("q^{n+1} - 1 is nonzero"));
        }
        betas[n as usize].clone()
    }

    /// Higher-order number beta^{(k)}_{n,q} (x = 0), from
    /// (1-q)^{-n} sum_i (-1)^i C(n,i) prod_{l=1}^{k} moment(k-l+i).
    pub fn beta_order(&self, n: u32, k: u32) -> RatFunQ {
        if let Some(v) = self.order_cache.lock().unwrap().get(&(n, k)) {
            return v.clone();
        }
        let v = beta_order_symbolic(n, k)
            .subst_t_qx(0)
            .expect("no pole at t = 1");
        self.order_cache.lock().unwrap().insert((n, k), v.clone());
        v
    }

    /// Inverse-order number beta^{(-n)}_{k,q} from the self-contained
    /// alternating sum (1-q)^{-k} sum_j (-1)^j C(k,j)
    /// ([j+n]_q ... [j+1]_q) / ((j+n) ... (j+1)).
    pub fn beta_inverse_order(&self, k: u32, n: u32) -> RatFunQ {
        if let Some(v) = self.inverse_cache.lock().unwrap().get(&(k, n)) {
            return v.clone();
        }
        let mut acc = RatFunQ::zero();
        for j in 0..=k {
            let mut qprod = RatFunQ::one();
            let mut iprod = BigRational::from_integer(1.into());
            for l in 1..=n {
                qprod = qprod.mul(&q_int_any((j + l) as i64));
                iprod *= BigRational::from_integer(((j + l) as i64).into());
            }
            let mut term = qprod.scale(&(BigRational::from_integer(binom_int(k as i64, j as i64)) / iprod));
            if j % 2 == 1 {
                term = term.neg();
            }
            acc = acc.add(&term);
        }
        let v = acc
            .div(&one_minus_q_rf().pow(k as i64).expect("nonneg"))
            .expect("nonzero");
        self.inverse_cache.lock().unwrap().insert((k, n), v.clone());
        v
    }
}

fn one_minus_q_rf() -> RatFunQ {
    RatFunQ::from_poly(PolyQ::from_coeffs(vec![rat_one(), -rat_one()]))
}

/// Exact q-integral moment: I_q(q^{mx}) = (m+1)/[m+1]_q. The m = -1 case is
/// outside the Laurent calculus (a p-adic logarithm) and is a hard error.
pub fn moment(m: i64) -> Result<RatFunQ> {
    if m == -1 {
        return Err(QError::LogarithmicMoment);
    }
    let num = RatFunQ::from_rat(BigRational::from_integer((m + 1).into()));
    num.div(&q_int_any(m + 1))
}

/// Linear extension of the moment law over Laurent polynomials in t = q^x.
/// The integrand must expand as a finite sum sum_m c_m t^m with no t^{-1}
/// term.
pub fn integrate_exact(f: &Bivariate) -> Result<RatFunQ> {
    let terms = f.laurent_coeffs().ok_or(QError::NotIntegrable)?;
    let mut acc = RatFunQ::zero();
    for (m, c) in terms {
        acc = acc.add(&c.mul(&moment(m)?));
    }
    Ok(acc)
}

/// beta_n as the exact q-integral of [x]_q^n; the moments route.
pub fn beta_via_moments(n: u32) -> Result<RatFunQ> {
    integrate_exact(&x_q().pow(n as i64)?)
}

/// Symbolic (in x) higher-order polynomial beta^{(k)}_{n,q}(x):
/// (1-q)^{-n} sum_i (-1)^i C(n,i) t^i prod_{l=1}^{k} moment(k-l+i).
pub fn beta_order_symbolic(n: u32, k: u32) -> Bivariate {
    let mut acc = Bivariate::zero();
    for i in 0..=n {
        let mut prod = RatFunQ::one();
        for l in 1..=k {
            let m = (k - l) as i64 + i as i64;
            prod = prod.mul(&moment(m).expect("moment index >= 0"));
        }
        let c = BigRational::from_integer(binom_int(n as i64, i as i64));
        let mut term = Bivariate::t_pow(i as i64).scale(&prod.scale(&c));
        if i % 2 == 1 {
            term = term.neg();
        }
        acc = acc.add(&term);
    }
    let scale = one_minus_q_rf()
        .pow(n as i64)
        .expect("nonneg")
        .inv()
        .expect("nonzero");
    acc.scale(&scale)
}

/// The Eq.-as-written inverse-order object with the constant (-1)^n sign,
/// kept distinct from the operational (-1)^j reading so the sign discrepancy
/// can be audited: (1-q)^{-n} sum_i (-1)^n C(n,i) / prod_l moment(k-l+i).
pub fn beta_inverse_order_as_written(n: u32, k: u32) -> RatFunQ {
    let mut acc = RatFunQ::zero();
    for i in 0..=n {
        let mut prod = RatFunQ::one();
        for l in 1..=k {
            let m = (k - l) as i64 + i as i64;
            prod = prod.mul(&moment(m).expect("moment index >= 0"));
        }
        let c = BigRational::from_integer(binom_int(n as i64, i as i64));
        let term = prod.inv().expect("nonzero moment product").scale(&c);
        acc = acc.add(&term);
    }
    if n % 2 == 1 {
        acc = acc.neg();
    }
    acc.div(&one_minus_q_rf().pow(n as i64).expect("nonneg"))
        .expect("nonzero")
}

/// S_2(n, k : q) reconstructed from the inverse-order numbers:
/// C(k+n, n) ([n]_q!/n!) beta^{(-n)}_{k,q}.
pub fn s2_from_inverse(cache: &BernoulliCache, n: u32, k: u32) -> RatFunQ {
    let c = BigRational::from_integer(binom_int((k + n) as i64, n as i64))
        / BigRational::from_integer(factorial(n as u64));
    RatFunQ::from_poly(crate::qcore::q_factorial(n))
        .scale(&c)
        .mul(&cache.beta_inverse_order(k, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{classical_bernoulli, rat_frac, rat_int};
    use crate::stirling::{s2_alt, s2_explicit};

    fn p(cs: &[i64]) -> PolyQ {
        PolyQ::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn beta_small_values() {
        let cache = BernoulliCache::new();
        assert_eq!(cache.beta(0), RatFunQ::one());
        assert_eq!(cache.beta(1), RatFunQ::new(p(&[-1]), p(&[1, 1])).unwrap());
        // beta_2 = q / ([2]_q [3]_q)
        let expect = RatFunQ::new(p(&[0, 1]), p(&[1, 1]).mul(&p(&[1, 1, 1]))).unwrap();
        assert_eq!(cache.beta(2), expect);
    }

    #[test]
    fn beta_limits_to_classical_bernoulli() {
        let cache = BernoulliCache::new();
        let classical = classical_bernoulli(10);
        for n in 0..=10u32 {
            let v = cache.beta(n).eval(&rat_int(1)).unwrap();
            // beta_{1,q} -> -1/2 = B_1 under the recurrence's convention
            assert_eq!(v, classical[n as usize], "n={n}");
        }
    }

    #[test]
    fn moments() {
        assert_eq!(moment(0).unwrap(), RatFunQ::one());
        assert_eq!(moment(1).unwrap(), RatFunQ::new(p(&[2]), p(&[1, 1])).unwrap());
        assert_eq!(moment(-1).unwrap_err(), QError::LogarithmicMoment);
        // negative index: [-1]_q = -1/q, so moment(-2) = -1/[-1]_q = q
        assert_eq!(moment(-2).unwrap(), RatFunQ::q());
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(integrate_exact(&Bivariate::one()).unwrap(), RatFunQ::one());
        assert_eq!(
            integrate_exact(&Bivariate::t_pow(2)).unwrap(),
            RatFunQ::new(p(&[3]), p(&[1, 1, 1])).unwrap()
        );
        let cache = BernoulliCache::new();
        assert_eq!(integrate_exact(&x_q()).unwrap(), cache.beta(1));
        // a genuine t^{-1} term is rejected
        assert_eq!(
            integrate_exact(&Bivariate::t_pow(-1)).unwrap_err(),
            QError::LogarithmicMoment
        );
        // a non-monomial denominator is not Laurent
        let not_laurent = Bivariate::one()
            .div(&Bivariate::t_pow(1).add(&Bivariate::one()))
            .unwrap();
        assert_eq!(integrate_exact(&not_laurent).unwrap_err(), QError::NotIntegrable);
    }

    #[test]
    fn beta_dual_route() {
        let cache = BernoulliCache::new();
        for n in 0..=10u32 {
            assert_eq!(cache.beta(n), beta_via_moments(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn beta_order_one_matches_carlitz() {
        // not claimed by the source text; a consistency probe
        let cache = BernoulliCache::new();
        for n in 0..=6u32 {
            assert_eq!(cache.beta_order(n, 1), cache.beta(n), "n={n}");
        }
    }

    #[test]
    fn beta_order_zero_is_moment_product() {
        let cache = BernoulliCache::new();
        // n = 0: bare k-fold product at i = 0
        for k in 1..=4u32 {
            let mut prod = RatFunQ::one();
            for l in 1..=k {
                prod = prod.mul(&moment((k - l) as i64).unwrap());
            }
            assert_eq!(cache.beta_order(0, k), prod);
        }
    }

    #[test]
    fn inverse_order_small() {
        let cache = BernoulliCache::new();
        // (k=0, n=1): single j=0 term [1]_q/1 = 1
        assert_eq!(cache.beta_inverse_order(0, 1), RatFunQ::one());
        // (k=0, n=2): [2]_q [1]_q / 2
        let expect = RatFunQ::from_poly(p(&[1, 1])).scale(&rat_frac(1, 2));
        assert_eq!(cache.beta_inverse_order(0, 2), expect);
        // (k=1, n=1): (1-q)^{-1} (1 - [2]_q/2)
        let inner = RatFunQ::one().sub(&RatFunQ::from_poly(p(&[1, 1])).scale(&rat_frac(1, 2)));
        let expect = inner.div(&one_minus_q_rf()).unwrap();
        assert_eq!(cache.beta_inverse_order(1, 1), expect);
    }

    #[test]
    fn s2_from_inverse_matches_gaussian_binomial_form() {
        // independent oracle: C(k+n,n) ([n]!/n!) beta^{(-n)}_k collapses to
        // ([n]!/n!)^2 (1-q)^{-k} sum_j (-1)^j C(k+n, k-j) binom(j+n, n)_q
        let cache = BernoulliCache::new();
        for n in 0..=6u32 {
            for k in 0..=6u32 {
                let mut acc = RatFunQ::zero();
                for j in 0..=k {
                    let c = BigRational::from_integer(binom_int(
                        (k + n) as i64,
                        (k - j) as i64,
                    ));
                    let mut term =
                        RatFunQ::from_poly(crate::qcore::gauss_binom(j + n, n as i64)).scale(&c);
                    if j % 2 == 1 {
                        term = term.neg();
                    }
                    acc = acc.add(&term);
                }
                let pref = RatFunQ::from_poly(crate::qcore::q_factorial(n))
                    .scale(&(rat_int(1) / BigRational::from_integer(factorial(n as u64))));
                let oracle = acc
                    .div(&one_minus_q_rf().pow(k as i64).expect("nonneg"))
                    .expect("nonzero")
                    .mul(&pref)
                    .mul(&pref);
                assert_eq!(s2_from_inverse(&cache, n, k), oracle, "({n},{k})");
            }
        }
        // the reconstruction is not the alternating-sum variant: signs
        // differ already at (1,1)
        assert_eq!(s2_from_inverse(&cache, 1, 1), s2_explicit(1, 1));
        assert_ne!(s2_from_inverse(&cache, 1, 1), s2_alt(1, 1));
    }

    #[test]
    fn moment_identity_route() {
        // (n+1)/[n+1]_q = sum_m C(n,m) (q-1)^m beta_m exactly
        let cache = BernoulliCache::new();
        let q_minus_1 = one_minus_q_rf().neg();
        for n in 0..=10i64 {
            let mut acc = RatFunQ::zero();
            for m in 0..=n {
                let c = BigRational::from_integer(binom_int(n, m));
                acc = acc.add(
                    &cache
                        .beta(m as u32)
                        .mul(&q_minus_1.pow(m).unwrap())
                        .scale(&c),
                );
            }
            assert_eq!(acc, moment(n).unwrap(), "n={n}");
        }
    }
}
