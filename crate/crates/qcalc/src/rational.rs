//! Exact rational scalars and small integer combinatorics.
//!
//! The coefficient field everywhere in this crate is `Q`, represented by
//! [`num::BigRational`]. This module adds the parsing/formatting conventions
//! used by the serialization formats ("p/q" strings, integers without the
//! "/1") and the handful of integer-combinatorial helpers the identities
//! need.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{QError, Result};

/// Exact rational number, always stored reduced with positive denominator.
pub type Rat = BigRational;

pub fn rat_zero() -> Rat {
    BigRational::zero()
}

pub fn rat_one() -> Rat {
    BigRational::one()
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Render as "p/q", or just "p" when the denominator is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse "p/q" or "p". Rejects zero denominators.
pub fn rat_from_string(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| QError::InvalidArgument(format!("bad rational: {s}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| QError::InvalidArgument(format!("bad rational: {s}")))?;
    if d.is_zero() {
        return Err(QError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// Ordinary binomial coefficient C(n, k) for integer n (possibly negative).
///
/// The only negative-n case the identities produce is C(-1, 0) = 1, which
/// falls out of the k = 0 branch; other negative tops use the generalized
/// falling-factorial definition.
pub fn binom_int(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    // falling factorial n(n-1)...(n-k+1) / k!
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Classical Bernoulli numbers B_n from the defining recurrence
/// sum_{j<=n} C(n+1, j) B_j = [n = 0] (so B_1 = -1/2).
///
/// This is the independent oracle used to check the q -> 1 limit of the
/// Carlitz numbers; it shares no code with the q-side recurrence.
pub fn classical_bernoulli(max_n: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        if n == 0 {
            b.push(rat_one());
            continue;
        }
        let mut acc = rat_zero();
        for (j, bj) in b.iter().enumerate() {
            let c = binom_int((n + 1) as i64, j as i64);
            acc += BigRational::from_integer(c) * bj;
        }
        let lead = BigRational::from_integer(binom_int((n + 1) as i64, n as i64));
        b.push(-acc / lead);
    }
    b
}

/// p-adic valuation of a rational (numerator minus denominator valuation).
/// Returns None for zero.
pub fn rat_valuation(r: &Rat, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let vp = |mut x: BigInt| -> i64 {
        let mut v = 0;
        x = x.abs();
        while (&x % &p).is_zero() {
            x /= &p;
            v += 1;
        }
        v
    };
    Some(vp(r.numer().clone()) - vp(r.denom().clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["3/4", "-1/2", "7", "0"] {
            let r = rat_from_string(s).unwrap();
            assert_eq!(rat_to_string(&r), s);
        }
        assert!(rat_from_string("1/0").is_err());
        assert_eq!(rat_from_string(" 6/4").unwrap(), rat_frac(3, 2));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom_int(5, 2), BigInt::from(10));
        assert_eq!(binom_int(3, 5), BigInt::zero());
        assert_eq!(binom_int(-1, 0), BigInt::one());
        assert_eq!(binom_int(4, 0), BigInt::one());
        assert_eq!(binom_int(7, -1), BigInt::zero());
    }

    #[test]
    fn classical_bernoulli_values() {
        let b = classical_bernoulli(4);
        assert_eq!(b[1], rat_frac(-1, 2));
        assert_eq!(b[2], rat_frac(1, 6));
        assert_eq!(b[3], rat_zero());
        assert_eq!(b[4], rat_frac(-1, 30));
    }

    #[test]
    fn valuations() {
        assert_eq!(rat_valuation(&rat_frac(4, 105), 3), Some(-1));
        assert_eq!(rat_valuation(&rat_int(18), 3), Some(2));
        assert_eq!(rat_valuation(&rat_zero(), 3), None);
    }
}
