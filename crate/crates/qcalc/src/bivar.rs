//! The bivariate field Q(q, t) with t standing for q^x.
//!
//! Every x-dependent q-object in scope ([x]_q, [1-x]_q, q-falling factorials,
//! q-binomials of x, Bernstein basis elements) lives here as a reduced
//! fraction of polynomials in t over the field Q(q). Identities in a symbolic
//! x become decidable: two elements are equal iff their normal forms match.
//! Negative powers of t (from [1-x]_q) are carried by the denominator, so an
//! element may have Laurent content in t.

use serde::{Deserialize, Serialize};

use crate::error::{QError, Result};
use crate::rational::Rat;
use crate::ratfun::RatFunQ;

/// Dense polynomial in t with coefficients in Q(q), ascending t-degree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TPoly {
    coeffs: Vec<RatFunQ>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(RatFunQ::one())
    }

    pub fn constant(c: RatFunQ) -> Self {
        let mut p = TPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// c * t^d
    pub fn monomial(c: RatFunQ, d: usize) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![RatFunQ::zero(); d + 1];
        coeffs[d] = c;
        TPoly { coeffs }
    }

    pub fn t() -> Self {
        TPoly::monomial(RatFunQ::one(), 1)
    }

    pub fn from_coeffs(coeffs: Vec<RatFunQ>) -> Self {
        let mut p = TPoly { coeffs };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[RatFunQ] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> RatFunQ {
        self.coeffs.get(d).cloned().unwrap_or_else(RatFunQ::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> RatFunQ {
        self.coeffs.last().cloned().unwrap_or_else(RatFunQ::zero)
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&other.coeff(i)));
        }
        TPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).sub(&other.coeff(i)));
        }
        TPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![RatFunQ::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &RatFunQ) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Long division in Q(q)[t].
    pub fn div_rem(&self, divisor: &TPoly) -> Result<(TPoly, TPoly)> {
        if divisor.is_zero() {
            return Err(QError::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RatFunQ::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap().mul(&lead_inv);
            if !factor.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub(&factor.mul(b));
                }
                quot[k] = factor;
            }
            rem.pop();
        }
        Ok((TPoly::from_coeffs(quot), TPoly::from_coeffs(rem)))
    }

    /// Monic gcd in Q(q)[t] by the Euclidean algorithm, remainders made
    /// monic each step to keep the Q(q) coefficients reduced.
    pub fn gcd(&self, other: &TPoly) -> TPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn monic(&self) -> TPoly {
        if self.is_zero() {
            return TPoly::zero();
        }
        let inv = self.leading().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Substitute t -> value in Q(q).
    pub fn eval_t(&self, value: &RatFunQ) -> RatFunQ {
        let mut acc = RatFunQ::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(value).add(c);
        }
        acc
    }

    /// Substitute t -> c * t (used for shifted arguments like [x-1]_q,
    /// which is the [x]_q form with t replaced by t/q).
    pub fn subst_scaled_t(&self, c: &RatFunQ) -> TPoly {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut factor = RatFunQ::one();
        for a in &self.coeffs {
            out.push(a.mul(&factor));
            factor = factor.mul(c);
        }
        TPoly::from_coeffs(out)
    }
}

/// Element of the field Q(q, t) in normal form: numerator and denominator
/// coprime in Q(q)[t], denominator monic in t.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Bivariate {
    numer: TPoly,
    denom: TPoly,
}

impl Bivariate {
    pub fn new(numer: TPoly, denom: TPoly) -> Result<Self> {
        if denom.is_zero() {
            return Err(QError::DivisionByZero);
        }
        if numer.is_zero() {
            return Ok(Bivariate {
                numer: TPoly::zero(),
                denom: TPoly::one(),
            });
        }
        let g = numer.gcd(&denom);
        let n = numer.div_rem(&g).expect("gcd nonzero").0;
        let d = denom.div_rem(&g).expect("gcd nonzero").0;
        let lead = d.leading();
        let n = n.scale(&lead.inv()?);
        let d = d.monic();
        Ok(Bivariate { numer: n, denom: d })
    }

    pub fn from_tpoly(p: TPoly) -> Self {
        Bivariate {
            numer: p,
            denom: TPoly::one(),
        }
    }

    pub fn from_ratfun(c: RatFunQ) -> Self {
        Bivariate::from_tpoly(TPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Bivariate::from_ratfun(RatFunQ::from_int(n))
    }

    pub fn zero() -> Self {
        Bivariate::from_tpoly(TPoly::zero())
    }

    pub fn one() -> Self {
        Bivariate::from_tpoly(TPoly::one())
    }

    /// t^m for any integer m; negative powers go to the denominator.
    pub fn t_pow(m: i64) -> Self {
        if m >= 0 {
            Bivariate::from_tpoly(TPoly::monomial(RatFunQ::one(), m as usize))
        } else {
            Bivariate {
                numer: TPoly::one(),
                denom: TPoly::monomial(RatFunQ::one(), (-m) as usize),
            }
        }
    }

    pub fn numer(&self) -> &TPoly {
        &self.numer
    }

    pub fn denom(&self) -> &TPoly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn add(&self, other: &Bivariate) -> Bivariate {
        let g = self.denom.gcd(&other.denom);
        let da = self.denom.div_rem(&g).expect("gcd nonzero").0;
        let db = other.denom.div_rem(&g).expect("gcd nonzero").0;
        let numer = self.numer.mul(&db).add(&other.numer.mul(&da));
        let denom = self.denom.mul(&db);
        Bivariate::new(numer, denom).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &Bivariate) -> Bivariate {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Bivariate {
        Bivariate {
            numer: self.numer.neg(),
            denom: self.denom.clone(),
        }
    }

    pub fn mul(&self, other: &Bivariate) -> Bivariate {
        if self.is_zero() || other.is_zero() {
            return Bivariate::zero();
        }
        let numer = self.numer.mul(&other.numer);
        let denom = self.denom.mul(&other.denom);
        Bivariate::new(numer, denom).expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<Bivariate> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Bivariate::new(self.denom.clone(), self.numer.clone())
    }

    pub fn div(&self, other: &Bivariate) -> Result<Bivariate> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &RatFunQ) -> Bivariate {
        if c.is_zero() {
            return Bivariate::zero();
        }
        Bivariate::new(self.numer.scale(c), self.denom.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, e: i64) -> Result<Bivariate> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Bivariate::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// a == b iff a - b normalizes to zero; with normal forms this is
    /// structural equality, kept as a named operation because it is the
    /// decision procedure behind every symbolic audit.
    pub fn equal(&self, other: &Bivariate) -> bool {
        self == other
    }

    /// Substitute t -> q^{x0}, landing in Q(q).
    pub fn subst_t_qx(&self, x0: u32) -> Result<RatFunQ> {
        let t_val = RatFunQ::q_pow(x0 as i64);
        let d = self.denom.eval_t(&t_val);
        if d.is_zero() {
            return Err(QError::PoleAtPoint);
        }
        self.numer.eval_t(&t_val).div(&d)
    }

    /// Numeric specialization at integer x0 and rational q0 (t -> q0^{x0}).
    pub fn eval_point(&self, x0: u32, q0: &Rat) -> Result<Rat> {
        let f = self.subst_t_qx(x0)?;
        f.eval(q0)
    }

    /// Laurent expansion in t: Some(map degree -> coefficient) when the
    /// denominator is a monomial c * t^k in t, None otherwise.
    pub fn laurent_coeffs(&self) -> Option<Vec<(i64, RatFunQ)>> {
        let dd = self.denom.degree()?;
        // denominator must have a single nonzero coefficient (its leading one)
        for (i, c) in self.denom.coeffs().iter().enumerate() {
            if i != dd && !c.is_zero() {
                return None;
            }
        }
        let lead_inv = self.denom.leading().inv().ok()?;
        let mut out = Vec::new();
        for (i, c) in self.numer.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.push((i as i64 - dd as i64, c.mul(&lead_inv)));
            }
        }
        Some(out)
    }

    /// Render numerator/denominator with t-coefficients in Q(q).
    pub fn render(&self) -> String {
        let render_tpoly = |p: &TPoly| -> String {
            if p.is_zero() {
                return "0".to_string();
            }
            let mut parts = Vec::new();
            for (d, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let cs = c.render();
                let term = match d {
                    0 => cs,
                    1 if c.is_one() => "t".to_string(),
                    1 => format!("({cs})t"),
                    _ if c.is_one() => format!("t^{d}"),
                    _ => format!("({cs})t^{d}"),
                };
                parts.push(term);
            }
            parts.join(" + ")
        };
        if self.denom == TPoly::one() {
            render_tpoly(&self.numer)
        } else {
            format!("[{}] / [{}]", render_tpoly(&self.numer), render_tpoly(&self.denom))
        }
    }
}
