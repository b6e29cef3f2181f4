//! The field Q(q): reduced fractions of [`PolyQ`] with monic denominators.
//!
//! Normalization (gcd reduction + monic denominator) is performed on
//! construction, so equality of values is structural equality.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{QError, Result};
use crate::poly::PolyQ;
use crate::rational::{rat_one, Rat};

/// Element of Q(q) in normal form.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
pub struct RatFunQ {
    numer: PolyQ,
    denom: PolyQ,
}

impl RatFunQ {
    /// Build and normalize numer/denom. The denominator must be nonzero.
    pub fn new(numer: PolyQ, denom: PolyQ) -> Result<Self> {
        if denom.is_zero() {
            return Err(QError::DivisionByZero);
        }
        if numer.is_zero() {
            return Ok(RatFunQ {
                numer: PolyQ::zero(),
                denom: PolyQ::one(),
            });
        }
        let g = numer.gcd(&denom);
        let mut n = numer.divexact(&g).expect("gcd divides");
        let mut d = denom.divexact(&g).expect("gcd divides");
        // make the denominator monic, folding the leading coefficient into
        // the numerator
        let lead = d.leading_coeff();
        if !lead.is_one() {
            let inv = rat_one() / lead;
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Ok(RatFunQ { numer: n, denom: d })
    }

    pub fn from_poly(p: PolyQ) -> Self {
        RatFunQ {
            numer: p,
            denom: PolyQ::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        RatFunQ::from_poly(PolyQ::from_int(n))
    }

    pub fn from_rat(r: Rat) -> Self {
        RatFunQ::from_poly(PolyQ::constant(r))
    }

    pub fn zero() -> Self {
        RatFunQ::from_poly(PolyQ::zero())
    }

    pub fn one() -> Self {
        RatFunQ::from_poly(PolyQ::one())
    }

    /// q as an element of Q(q).
    pub fn q() -> Self {
        RatFunQ::from_poly(PolyQ::q())
    }

    /// q^e for any integer e, negative exponents via the denominator.
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            RatFunQ::from_poly(PolyQ::monomial(rat_one(), e as usize))
        } else {
            RatFunQ {
                numer: PolyQ::one(),
                denom: PolyQ::monomial(rat_one(), (-e) as usize),
            }
        }
    }

    pub fn numer(&self) -> &PolyQ {
        &self.numer
    }

    pub fn denom(&self) -> &PolyQ {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    pub fn add(&self, other: &RatFunQ) -> RatFunQ {
        // cross-cancel through the denominator gcd to limit growth
        let g = self.denom.gcd(&other.denom);
        let da = self.denom.divexact(&g).expect("gcd divides");
        let db = other.denom.divexact(&g).expect("gcd divides");
        let numer = self.numer.mul(&db).add(&other.numer.mul(&da));
        let denom = self.denom.mul(&db);
        RatFunQ::new(numer, denom).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &RatFunQ) -> RatFunQ {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunQ {
        RatFunQ {
            numer: self.numer.neg(),
            denom: self.denom.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunQ) -> RatFunQ {
        if self.is_zero() || other.is_zero() {
            return RatFunQ::zero();
        }
        let g1 = self.numer.gcd(&other.denom);
        let g2 = other.numer.gcd(&self.denom);
        let numer = self
            .numer
            .divexact(&g1)
            .expect("gcd divides")
            .mul(&other.numer.divexact(&g2).expect("gcd divides"));
        let denom = self
            .denom
            .divexact(&g2)
            .expect("gcd divides")
            .mul(&other.denom.divexact(&g1).expect("gcd divides"));
        RatFunQ::new(numer, denom).expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<RatFunQ> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        RatFunQ::new(self.denom.clone(), self.numer.clone())
    }

    pub fn div(&self, other: &RatFunQ) -> Result<RatFunQ> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &Rat) -> RatFunQ {
        if c.is_zero() {
            return RatFunQ::zero();
        }
        RatFunQ {
            numer: self.numer.scale(c),
            denom: self.denom.clone(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<RatFunQ> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunQ::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Evaluate at an exact rational point; errors on a genuine pole.
    pub fn eval(&self, q0: &Rat) -> Result<Rat> {
        let d = self.denom.eval(q0);
        if d.is_zero() {
            return Err(QError::PoleAtPoint);
        }
        Ok(self.numer.eval(q0) / d)
    }

    /// "numer/(denom)" with the denominator omitted when it is 1.
    pub fn render(&self) -> String {
        if self.denom.is_one() {
            self.numer.render()
        } else {
            let n = self.numer.render();
            let n = if self.numer.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({n})")
            } else {
                n
            };
            format!("{}/({})", n, self.denom.render())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat_frac, rat_int};

    fn p(cs: &[i64]) -> PolyQ {
        PolyQ::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn normalization_examples() {
        // (1-q)/(1-q^2) -> 1/(1+q)
        let f = RatFunQ::new(p(&[1, -1]), p(&[1, 0, -1])).unwrap();
        assert_eq!(f.numer(), &PolyQ::one());
        assert_eq!(f.denom(), &p(&[1, 1]));
        // (2+2q)/2 -> (1+q)/1
        let g = RatFunQ::new(p(&[2, 2]), p(&[2])).unwrap();
        assert_eq!(g, RatFunQ::from_poly(p(&[1, 1])));
        // 0/(1+q) -> 0/1
        let z = RatFunQ::new(PolyQ::zero(), p(&[1, 1])).unwrap();
        assert_eq!(z, RatFunQ::zero());
        assert!(RatFunQ::new(p(&[1]), PolyQ::zero()).is_err());
    }

    #[test]
    fn normalization_is_idempotent() {
        let f = RatFunQ::new(p(&[1, -1]), p(&[1, 0, -1])).unwrap();
        let again = RatFunQ::new(f.numer().clone(), f.denom().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn eval_examples() {
        let f = RatFunQ::new(p(&[1]), p(&[1, 1])).unwrap();
        assert_eq!(f.eval(&rat_int(1)).unwrap(), rat_frac(1, 2));
        let g = RatFunQ::new(p(&[1, 0, 0, -1]), p(&[1, -1])).unwrap();
        assert_eq!(g.eval(&rat_int(1)).unwrap(), rat_int(3));
        let pole = RatFunQ::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(pole.eval(&rat_int(1)), Err(QError::PoleAtPoint));
    }

    #[test]
    fn render_beta_one_shape() {
        let f = RatFunQ::new(p(&[-1]), p(&[1, 1])).unwrap();
        assert_eq!(f.render(), "-1/(1+q)");
    }
}
