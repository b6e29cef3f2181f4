//! Dense univariate polynomials in `q` over the exact rationals.
//!
//! The representation is a coefficient vector in ascending degree with the
//! invariant that the top coefficient is nonzero (the zero polynomial is the
//! empty vector). Degrees stay modest at desk scale, so dense arithmetic and
//! a primitive-PRS gcd are enough.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde::ser::SerializeSeq;

use crate::error::{QError, Result};
use crate::rational::{rat_one, rat_to_string, rat_zero, Rat};

/// Polynomial in q with rational coefficients, ascending degree.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(rat_one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = PolyQ { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_int(n: i64) -> Self {
        PolyQ::constant(crate::rational::rat_int(n))
    }

    /// q^d with coefficient c.
    pub fn monomial(c: Rat, d: usize) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![rat_zero(); d + 1];
        coeffs[d] = c;
        PolyQ { coeffs }
    }

    /// The variable q itself.
    pub fn q() -> Self {
        PolyQ::monomial(rat_one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = PolyQ { coeffs };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(rat_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(rat_zero)
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        PolyQ::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        PolyQ::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        if self.is_zero() || other.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![rat_zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> PolyQ {
        let mut acc = PolyQ::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Long division; returns (quotient, remainder).
    pub fn div_rem(&self, divisor: &PolyQ) -> Result<(PolyQ, PolyQ)> {
        if divisor.is_zero() {
            return Err(QError::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lead_inv = rat_one() / divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rat_zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let t = &factor * b;
                    rem[k + j] -= t;
                }
                quot[k] = factor;
            }
            rem.pop();
        }
        Ok((PolyQ::from_coeffs(quot), PolyQ::from_coeffs(rem)))
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn divexact(&self, divisor: &PolyQ) -> Result<PolyQ> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(QError::InexactDivision)
        }
    }

    /// Monic gcd over Q, computed by a primitive PRS over Z to keep
    /// coefficient growth in check.
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = to_primitive_int(self);
        let mut b = to_primitive_int(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive_part(r);
        }
        let g = PolyQ::from_coeffs(a.into_iter().map(BigRational::from_integer).collect());
        g.monic()
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> PolyQ {
        if self.is_zero() {
            return PolyQ::zero();
        }
        let inv = rat_one() / self.leading_coeff();
        self.scale(&inv)
    }

    pub fn eval(&self, q0: &Rat) -> Rat {
        let mut acc = rat_zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        acc
    }

    /// "1+q+2q^2" style rendering: ascending powers, explicit ^, no
    /// implicit coefficients other than 1.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if out.is_empty() {
                if sign {
                    out.push('-');
                }
            } else {
                out.push_str(if sign { "-" } else { "+" });
            }
            let mag_s = rat_to_string(&mag);
            match d {
                0 => out.push_str(&mag_s),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag_s);
                    }
                    out.push('q');
                    if d > 1 {
                        out.push_str(&format!("^{d}"));
                    }
                }
            }
        }
        out
    }
}

/// Clear denominators and divide out integer content; returns ascending
/// integer coefficients (the sign of the leading coefficient is kept).
fn to_primitive_int(p: &PolyQ) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    primitive_part(ints)
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while matches!(v.last(), Some(c) if c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if content.is_zero() || content.is_one() {
        return v;
    }
    for c in &mut v {
        *c /= &content;
    }
    v
}

/// Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b assumed
/// handled by caller ordering; returns a if deg a < deg b).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut r: Vec<BigInt> = a.to_vec();
    let lb = b.last().unwrap().clone();
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let k = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &lr * bc;
        }
        while matches!(r.last(), Some(c) if c.is_zero()) {
            r.pop();
        }
        if r.len() <= db {
            break;
        }
    }
    r
}

impl serde::Serialize for PolyQ {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&rat_to_string(c))?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for PolyQ {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            coeffs.push(crate::rational::rat_from_string(s).map_err(serde::de::Error::custom)?);
        }
        Ok(PolyQ::from_coeffs(coeffs))
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
    fn difference_of_squares() {
        // (1+q)(1-q) = 1 - q^2
        assert_eq!(p(&[1, 1]).mul(&p(&[1, -1])), p(&[1, 0, -1]));
    }

    #[test]
    fn geometric_factorization() {
        // (1-q^3) / (1-q) = 1 + q + q^2
        assert_eq!(p(&[1, 0, 0, -1]).divexact(&p(&[1, -1])).unwrap(), p(&[1, 1, 1]));
    }

    #[test]
    fn inexact_division_rejected() {
        assert_eq!(p(&[1, 1]).divexact(&p(&[1, -1])), Err(QError::InexactDivision));
    }

    #[test]
    fn gcd_is_monic() {
        // gcd(1-q^2, 1-q^3) = q - 1 made monic
        let g = p(&[1, 0, -1]).gcd(&p(&[1, 0, 0, -1]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn render_style() {
        assert_eq!(p(&[1, 1, 2, 1, 1]).render(), "1+q+2q^2+q^3+q^4");
        assert_eq!(p(&[0, -1]).render(), "-q");
        assert_eq!(PolyQ::zero().render(), "0");
    }

    #[test]
    fn serde_round_trip() {
        let x = p(&[1, 0, -3]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"["1","0","-3"]"#);
        let back: PolyQ = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
