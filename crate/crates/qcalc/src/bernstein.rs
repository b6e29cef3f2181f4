//! q-Bernstein polynomials over Q(q, t), the Bernstein-type operator, the
//! exponential generating function route, and the partition-style quotient.

use num::BigRational;

use crate::bivar::Bivariate;
use crate::error::{QError, Result};
use crate::qcore::{one_minus_x_q, x_q};
use crate::rational::{binom_int, factorial, Rat};
use crate::ratfun::RatFunQ;
use crate::series::TruncatedSeries;

/// B_{k,n}(x, q) = C(n,k) [x]_q^k [1-x]_q^{n-k}.
pub fn bernstein(k: u32, n: u32) -> Result<Bivariate> {
    if k > n {
        return Err(QError::IndexError(format!("k={k} exceeds n={n}")));
    }
    let c = BigRational::from_integer(binom_int(n as i64, k as i64));
    Ok(x_q()
        .pow(k as i64)?
        .mul(&one_minus_x_q().pow((n - k) as i64)?)
        .scale(&RatFunQ::from_rat(c)))
}

/// The degree-n basis B_{0,n} .. B_{n,n}.
pub struct BernsteinBasis {
    pub n: u32,
    pub elements: Vec<Bivariate>,
}

impl BernsteinBasis {
    pub fn build(n: u32) -> Self {
        let elements = (0..=n)
            .map(|k| bernstein(k, n).expect("k <= n"))
            .collect();
        BernsteinBasis { n, elements }
    }
}

/// The Bernstein-type operator: sum_k f(k/n) B_{k,n}(x, q) from the sample
/// vector (f(0/n), ..., f(n/n)).
pub fn bernstein_operator(samples: &[Rat], n: u32) -> Result<Bivariate> {
    let need = n as usize + 1;
    if samples.len() != need {
        return Err(QError::ArityError {
            need,
            got: samples.len(),
        });
    }
    let mut acc = Bivariate::zero();
    for (k, f) in samples.iter().enumerate() {
        acc = acc.add(&bernstein(k as u32, n)?.scale(&RatFunQ::from_rat(f.clone())));
    }
    Ok(acc)
}

/// Coefficient of t_series^n / n! in the generating function
/// F_q^{(k)}(t_series, x) = t_series^k e^{[1-x]_q t_series} [x]_q^k / k!,
/// extracted by truncated-series arithmetic.
pub fn generating_coefficient(k: u32, n: u32) -> Result<Bivariate> {
    if n < k {
        return Ok(Bivariate::zero());
    }
    // exponential series sum_j [1-x]^j z^j / j!, truncated at order n - k
    let order = (n - k) as usize;
    let omx = one_minus_x_q();
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut pow = Bivariate::one();
    for j in 0..=order {
        let inv_fact = BigRational::from_integer(1.into())
            / BigRational::from_integer(factorial(j as u64));
        coeffs.push(pow.scale(&RatFunQ::from_rat(inv_fact)));
        pow = pow.mul(&omx);
    }
    let exp_series = TruncatedSeries::from_coeffs(coeffs);
    // t_series^k shifts the coefficient index: coeff of z^n in the product
    // is the z^{n-k} coefficient of the exponential
    let base = exp_series.coeff(order);
    let scale = BigRational::from_integer(factorial(n as u64))
        / BigRational::from_integer(factorial(k as u64));
    Ok(base
        .mul(&x_q().pow(k as i64)?)
        .scale(&RatFunQ::from_rat(scale)))
}

/// The quotient (sum_{k=i-1}^{n} (C(k,i)/C(n,i)) B_{k,n}) / ([x]+[1-x])^{n-i}.
pub fn partition_lhs(i: u32, n: u32) -> Result<Bivariate> {
    if i < 1 || i > n {
        return Err(QError::IndexError(format!("i={i} outside 1..={n}")));
    }
    let cni = binom_int(n as i64, i as i64);
    let mut acc = Bivariate::zero();
    for k in (i - 1)..=n {
        let c = BigRational::from_integer(binom_int(k as i64, i as i64))
            / BigRational::from_integer(cni.clone());
        acc = acc.add(&bernstein(k, n)?.scale(&RatFunQ::from_rat(c)));
    }
    let denom = x_q().add(&one_minus_x_q()).pow((n - i) as i64)?;
    acc.div(&denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_frac, rat_int, rat_zero, rat_one};

    #[test]
    fn degree_one_basis() {
        assert!(bernstein(1, 1).unwrap().equal(&x_q()));
        assert!(bernstein(0, 1).unwrap().equal(&one_minus_x_q()));
        assert!(matches!(bernstein(2, 1), Err(QError::IndexError(_))));
    }

    #[test]
    fn middle_element() {
        // B_{1,2} = 2 [x]_q [1-x]_q
        let expect = x_q()
            .mul(&one_minus_x_q())
            .scale(&RatFunQ::from_int(2));
        assert!(bernstein(1, 2).unwrap().equal(&expect));
    }

    #[test]
    fn operator_small_cases() {
        // samples (0,1) at n=1 give [x]_q; (1,0) give [1-x]_q
        assert!(bernstein_operator(&[rat_zero(), rat_one()], 1)
            .unwrap()
            .equal(&x_q()));
        assert!(bernstein_operator(&[rat_one(), rat_zero()], 1)
            .unwrap()
            .equal(&one_minus_x_q()));
        // constant samples reproduce c ([x]+[1-x])^n
        let c = rat_frac(3, 2);
        let n = 3u32;
        let lhs = bernstein_operator(&vec![c.clone(); 4], n).unwrap();
        let rhs = x_q()
            .add(&one_minus_x_q())
            .pow(n as i64)
            .unwrap()
            .scale(&RatFunQ::from_rat(c));
        assert!(lhs.equal(&rhs));
        assert!(matches!(
            bernstein_operator(&[rat_zero()], 1),
            Err(QError::ArityError { need: 2, got: 1 })
        ));
    }

    #[test]
    fn generating_route_matches_basis() {
        assert!(generating_coefficient(0, 0).unwrap().equal(&Bivariate::one()));
        assert!(generating_coefficient(2, 1).unwrap().is_zero());
        for n in 0..=5u32 {
            for k in 0..=n {
                assert!(
                    generating_coefficient(k, n)
                        .unwrap()
                        .equal(&bernstein(k, n).unwrap()),
                    "({k},{n})"
                );
            }
        }
    }

    #[test]
    fn symmetry_under_reflection() {
        // swapping [x] <-> [1-x] sends B_{k,n} to B_{n-k,n}
        for n in 0..=4u32 {
            for k in 0..=n {
                let c = BigRational::from_integer(binom_int(n as i64, k as i64));
                let swapped = one_minus_x_q()
                    .pow(k as i64)
                    .unwrap()
                    .mul(&x_q().pow((n - k) as i64).unwrap())
                    .scale(&RatFunQ::from_rat(c));
                assert!(swapped.equal(&bernstein(n - k, n).unwrap()));
            }
        }
    }

    #[test]
    fn partition_quotient_examples() {
        assert!(partition_lhs(1, 1).unwrap().equal(&x_q()));
        // i = n: only k = n survives with coefficient 1
        for n in 1..=4u32 {
            assert!(partition_lhs(n, n)
                .unwrap()
                .equal(&x_q().pow(n as i64).unwrap()));
        }
        // i=1, n=2: the three-term sum reduces to [x]_q
        assert!(partition_lhs(1, 2).unwrap().equal(&x_q()));
        assert!(matches!(partition_lhs(0, 3), Err(QError::IndexError(_))));
        assert!(matches!(partition_lhs(4, 3), Err(QError::IndexError(_))));
    }

    #[test]
    fn eval_point_examples() {
        assert_eq!(
            bernstein(1, 1).unwrap().eval_point(1, &rat_frac(1, 2)).unwrap(),
            rat_one()
        );
        assert_eq!(
            bernstein(0, 1).unwrap().eval_point(0, &rat_frac(7, 3)).unwrap(),
            rat_one()
        );
        assert_eq!(
            bernstein(1, 2).unwrap().eval_point(1, &rat_int(2)).unwrap(),
            rat_zero()
        );
    }
}
