//! p-adic integers at capped precision, admissible-q contexts, the
//! Riemann-sum q-integral, and truncated evaluation of p-adically
//! convergent series.
//!
//! Values are stored as `p^val * unit` with the unit residue kept modulo
//! p^(abs_prec - val); precision accounting is pessimistic (minimum rule),
//! so a value never claims more digits than provable. Working moduli are
//! required to fit in a u64 so products stay exact in u128.

use num::bigint::BigInt;
use num::Zero;

use crate::error::{QError, Result};
use crate::rational::{binom_int, Rat};

/// Exact or lower-bounded valuation of a capped-precision value.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valuation {
    Exact(i64),
    /// residue is 0 at the stated absolute precision
    AtLeast(i64),
}

impl Valuation {
    pub fn lower_bound(&self) -> i64 {
        match *self {
            Valuation::Exact(v) => v,
            Valuation::AtLeast(v) => v,
        }
    }

    pub fn render(&self) -> String {
        match *self {
            Valuation::Exact(v) => v.to_string(),
            Valuation::AtLeast(v) => format!(">={v}"),
        }
    }
}

/// p-adic number at finite precision: p^val * unit known modulo
/// p^abs_prec. A zero residue means "0 modulo p^abs_prec".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PadicValue {
    p: u64,
    /// value is known modulo p^abs_prec
    abs_prec: i64,
    /// valuation of the unit decomposition; 0 when the residue is zero
    val: i64,
    /// unit part in [0, p^{abs_prec - val}), coprime to p; 0 encodes the
    /// zero residue
    unit: u128,
}

fn pow_u128(p: u64, e: i64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..e.max(0) {
        acc = acc.checked_mul(p as u128).expect("modulus fits u128");
    }
    acc
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    // moduli are kept below 2^64, so the product fits in u128
    (a * b) % m
}

fn pow_mod(mut base: u128, mut e: u64, m: u128) -> u128 {
    let mut acc: u128 = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u128, m: u128) -> Option<u128> {
    // extended Euclid over i128
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m as i128) as u128)
}

fn valuation_of_residue(mut r: u128, p: u64) -> Option<i64> {
    if r == 0 {
        return None;
    }
    let mut v = 0;
    while r % p as u128 == 0 {
        r /= p as u128;
        v += 1;
    }
    Some(v)
}

impl PadicValue {
    /// Zero known modulo p^abs_prec.
    pub fn zero(p: u64, abs_prec: i64) -> Self {
        PadicValue {
            p,
            abs_prec,
            val: 0,
            unit: 0,
        }
    }

    /// Build from an integer residue known modulo p^abs_prec.
    pub fn from_residue(p: u64, residue: u128, abs_prec: i64) -> Self {
        let m = pow_u128(p, abs_prec);
        let r = if m == 1 { 0 } else { residue % m };
        match valuation_of_residue(r, p) {
            None => PadicValue::zero(p, abs_prec),
            Some(v) if v >= abs_prec => PadicValue::zero(p, abs_prec),
            Some(v) => {
                let unit = r / pow_u128(p, v);
                PadicValue {
                    p,
                    abs_prec,
                    val: v,
                    unit,
                }
            }
        }
    }

    /// Embed an exact rational; the denominator must be prime to p.
    pub fn from_rat(r: &Rat, p: u64, abs_prec: i64) -> Result<Self> {
        if r.is_zero() {
            return Ok(PadicValue::zero(p, abs_prec));
        }
        let pb = BigInt::from(p);
        let mut num = r.numer().clone();
        let mut val = 0i64;
        while (&num % &pb).is_zero() {
            num /= &pb;
            val += 1;
        }
        let mut den = r.denom().clone();
        while (&den % &pb).is_zero() {
            den /= &pb;
            val -= 1;
        }
        let rel = abs_prec - val;
        if rel <= 0 {
            return Ok(PadicValue::zero(p, abs_prec));
        }
        let m = pow_u128(p, rel);
        let mb = BigInt::from(m);
        let num_r = ((num % &mb) + &mb) % &mb;
        let den_r = ((den % &mb) + &mb) % &mb;
        let num_u: u128 = num_r.try_into().expect("reduced residue fits");
        let den_u: u128 = den_r.try_into().expect("reduced residue fits");
        let den_inv = inv_mod(den_u, m).ok_or(QError::NonUnit)?;
        Ok(PadicValue {
            p,
            abs_prec,
            val,
            unit: mul_mod(num_u, den_inv, m),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_zero_residue(&self) -> bool {
        self.unit == 0
    }

    /// Known absolute precision (digits below this power of p are exact).
    pub fn known_precision(&self) -> i64 {
        self.abs_prec
    }

    pub fn valuation(&self) -> Valuation {
        if self.unit == 0 {
            Valuation::AtLeast(self.abs_prec)
        } else {
            Valuation::Exact(self.val)
        }
    }

    /// Canonical residue string: the integer residue mod p^abs_prec when the
    /// valuation is nonnegative, otherwise "u/p^k" for the Laurent part.
    pub fn render(&self) -> String {
        if self.unit == 0 {
            return format!("0 (mod {}^{})", self.p, self.abs_prec);
        }
        if self.val >= 0 {
            let m = pow_u128(self.p, self.abs_prec);
            let r = mul_mod(self.unit, pow_u128(self.p, self.val) % m, m);
            format!("{r} (mod {}^{})", self.p, self.abs_prec)
        } else {
            format!("{}/{}^{} (mod {}^{})", self.unit, self.p, -self.val, self.p, self.abs_prec)
        }
    }

    fn residue_mod(&self, abs: i64) -> u128 {
        // only valid when val >= 0
        debug_assert!(self.val >= 0);
        let m = pow_u128(self.p, abs);
        if m == 1 || self.unit == 0 {
            return 0;
        }
        mul_mod(self.unit % m, pow_u128(self.p, self.val) % m, m)
    }

    pub fn add(&self, other: &PadicValue) -> PadicValue {
        assert_eq!(self.p, other.p);
        let abs = self.abs_prec.min(other.abs_prec);
        let shift = self.val.min(other.val).min(0);
        // work on (value * p^{-shift}) residues so negative valuations stay
        // integral
        let work = abs - shift;
        let m = pow_u128(self.p, work);
        let lift = |v: &PadicValue| -> u128 {
            if v.unit == 0 {
                return 0;
            }
            let e = v.val - shift;
            if e >= work {
                return 0;
            }
            mul_mod(v.unit % m, pow_u128(v.p, e) % m, m)
        };
        let sum = (lift(self) + lift(other)) % m;
        let shifted = PadicValue::from_residue(self.p, sum, work);
        PadicValue {
            p: self.p,
            abs_prec: abs,
            val: shifted.val + shift,
            unit: shifted.unit,
        }
    }

    pub fn neg(&self) -> PadicValue {
        if self.unit == 0 {
            return self.clone();
        }
        let m = pow_u128(self.p, self.abs_prec - self.val);
        PadicValue {
            p: self.p,
            abs_prec: self.abs_prec,
            val: self.val,
            unit: m - self.unit,
        }
    }

    pub fn sub(&self, other: &PadicValue) -> PadicValue {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PadicValue) -> PadicValue {
        assert_eq!(self.p, other.p);
        if self.unit == 0 || other.unit == 0 {
            // valuation lower bounds push the zero's precision
            let (z, nz) = if self.unit == 0 {
                (self, other)
            } else {
                (other, self)
            };
            let bound = z.abs_prec + if nz.unit == 0 { nz.abs_prec.min(0) } else { nz.val };
            return PadicValue::zero(self.p, bound.min(self.abs_prec + other.abs_prec));
        }
        let rel = (self.abs_prec - self.val).min(other.abs_prec - other.val);
        let val = self.val + other.val;
        let m = pow_u128(self.p, rel);
        PadicValue {
            p: self.p,
            abs_prec: val + rel,
            val,
            unit: mul_mod(self.unit % m, other.unit % m, m),
        }
    }

    /// Multiplicative inverse; requires a unit (valuation 0).
    pub fn inv(&self) -> Result<PadicValue> {
        if self.unit == 0 || self.val != 0 {
            return Err(QError::NonUnit);
        }
        self.inv_any()
    }

    /// Inverse of any value with known nonzero residue; the valuation flips
    /// sign and the relative precision is preserved.
    pub fn inv_any(&self) -> Result<PadicValue> {
        if self.unit == 0 {
            return Err(QError::NonUnit);
        }
        let rel = self.abs_prec - self.val;
        let m = pow_u128(self.p, rel);
        let unit = inv_mod(self.unit, m).ok_or(QError::NonUnit)?;
        Ok(PadicValue {
            p: self.p,
            abs_prec: -self.val + rel,
            val: -self.val,
            unit,
        })
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, e: i64) -> Result<PadicValue> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = PadicValue::from_residue(self.p, 1, base.abs_prec.max(1));
        acc.abs_prec = base.abs_prec.max(1);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

/// The p-adic working environment: an odd prime, a working precision N, and
/// an admissible rational q (a unit with v_p(1 - q) >= 1).
#[derive(Clone, Debug)]
pub struct PadicContext {
    pub p: u64,
    pub precision_n: u32,
    pub q: Rat,
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PadicContext {
    pub fn new(p: u64, q: Rat, precision_n: u32) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(QError::Inadmissible(format!("{p} is not an odd prime")));
        }
        if precision_n == 0 {
            return Err(QError::Inadmissible("precision must be positive".into()));
        }
        let pb = BigInt::from(p);
        if (q.denom() % &pb).is_zero() {
            return Err(QError::Inadmissible(format!(
                "denominator of q is divisible by {p}"
            )));
        }
        if q.is_zero() || (q.numer() % &pb).is_zero() {
            return Err(QError::Inadmissible(format!("q is not a {p}-adic unit")));
        }
        // v_p(1 - q) >= 1
        let one_minus_q = Rat::from_integer(BigInt::from(1)) - &q;
        let ok = if one_minus_q.is_zero() {
            false // q = 1 degenerates the measure
        } else {
            crate::rational::rat_valuation(&one_minus_q, p).unwrap_or(0) >= 1
        };
        if !ok {
            return Err(QError::Inadmissible(format!(
                "|1 - q|_{p} must be < 1 (got q = {q})"
            )));
        }
        Ok(PadicContext { p, precision_n, q })
    }

    /// Embed a rational at the context precision.
    pub fn embed(&self, r: &Rat) -> Result<PadicValue> {
        PadicValue::from_rat(r, self.p, self.precision_n as i64)
    }
}

/// Integrand selector for the Riemann q-integral.
#[derive(Clone, Debug, PartialEq)]
pub enum IntegrandSpec {
    /// [x]_q^n
    PowerXq(u32),
    /// q^{m x}
    QPow(i64),
    /// binom(x, n)_q
    QBinomX(u32),
    /// B_{k,n}(x, q)
    Bernstein { k: u32, n: u32 },
    /// pointwise values f(0), f(1), ... (must cover the summation range)
    CustomSamples(Vec<Rat>),
}

/// Riemann sum (1/[p^level]_q) sum_{x=0}^{p^level - 1} f(x) q^x, computed
/// modulo p^{N + level} so the final division by [p^level]_q is exact to N
/// digits.
pub fn riemann_integral(
    ctx: &PadicContext,
    f: &IntegrandSpec,
    level: u32,
) -> Result<PadicValue> {
    if level == 0 {
        return Err(QError::InvalidArgument("level must be positive".into()));
    }
    let p = ctx.p;
    let work = ctx.precision_n as i64 + level as i64;
    let m = pow_u128_checked(p, work)?;
    let terms = (p as u128).checked_pow(level).ok_or(QError::PrecisionExhausted)?;

    // q as a residue mod p^work; the context guarantees it is a unit
    let q_res = rat_residue(&ctx.q, p, m)?;

    // per-x state, updated incrementally
    let mut qx: u128 = 1; // q^x
    let mut sx: u128 = 0; // [x]_q
    let mut geo: u128 = 0; // running sum of q^x = [x+1]_q at loop end
    let mut sum: u128 = 0;

    // q-Pascal row for the q-binomial integrand
    let (mut binom_row, q_pows): (Vec<u128>, Vec<u128>) = match f {
        IntegrandSpec::QBinomX(n) => {
            let mut row = vec![0u128; *n as usize + 1];
            row[0] = 1;
            let pows = (0..=*n as u64).map(|k| pow_mod(q_res, k, m)).collect();
            (row, pows)
        }
        _ => (Vec::new(), Vec::new()),
    };

    let samples = match f {
        IntegrandSpec::CustomSamples(v) => {
            if (v.len() as u128) < terms {
                return Err(QError::ArityError {
                    need: terms as usize,
                    got: v.len(),
                });
            }
            Some(v)
        }
        _ => None,
    };

    let mut x: u128 = 0;
    while x < terms {
        let fx: u128 = match f {
            IntegrandSpec::PowerXq(n) => pow_mod(sx, *n as u64, m),
            IntegrandSpec::QPow(mm) => {
                if *mm >= 0 {
                    pow_mod(qx, *mm as u64, m)
                } else {
                    pow_mod(inv_mod(qx, m).ok_or(QError::NonUnit)?, (-mm) as u64, m)
                }
            }
            IntegrandSpec::QBinomX(n) => binom_row[*n as usize],
            IntegrandSpec::Bernstein { k, n } => {
                // C(n,k) [x]^k ((1 - [x]_q) / q^x)^{n-k}
                let c = binom_residue(*n, *k, m);
                let one_minus_u = (m + 1 - sx % m) % m;
                let omx = mul_mod(one_minus_u, inv_mod(qx, m).ok_or(QError::NonUnit)?, m);
                let a = pow_mod(sx, *k as u64, m);
                let b = pow_mod(omx, (*n - *k) as u64, m);
                mul_mod(mul_mod(a, b, m), c, m)
            }
            IntegrandSpec::CustomSamples(_) => {
                let v = &samples.unwrap()[x as usize];
                let pv = PadicValue::from_rat(v, p, work)?;
                if matches!(pv.valuation(), Valuation::Exact(e) if e < 0) {
                    return Err(QError::NotIntegrable);
                }
                pv.residue_mod(work)
            }
        };
        sum = (sum + mul_mod(fx, qx, m)) % m;
        geo = (geo + qx) % m;

        // advance incremental state to x+1
        sx = (sx + qx) % m;
        qx = mul_mod(qx, q_res, m);
        if let IntegrandSpec::QBinomX(n) = f {
            // binom(x+1, k) = binom(x, k-1) + q^k binom(x, k)
            let mut next = binom_row.clone();
            for k in (1..=*n as usize).rev() {
                next[k] = (binom_row[k - 1] + mul_mod(q_pows[k], binom_row[k], m)) % m;
            }
            binom_row = next;
        }
        x += 1;
    }

    // divide by [p^level]_q = geo; its valuation must be exactly `level`
    let divisor = PadicValue::from_residue(p, geo, work);
    match divisor.valuation() {
        Valuation::Exact(v) if v == level as i64 => {}
        other => {
            return Err(QError::Inadmissible(format!(
                "v_p([p^{level}]_q) = {} expected {level}",
                other.render()
            )))
        }
    }
    let value = PadicValue::from_residue(p, sum, work).mul(&divisor.inv_any()?);
    if value.known_precision() <= 0 {
        return Err(QError::PrecisionExhausted);
    }
    Ok(value)
}

fn pow_u128_checked(p: u64, e: i64) -> Result<u128> {
    let mut acc: u128 = 1;
    for _ in 0..e.max(0) {
        acc = acc.checked_mul(p as u128).ok_or(QError::PrecisionExhausted)?;
        if acc > u64::MAX as u128 {
            return Err(QError::PrecisionExhausted);
        }
    }
    Ok(acc)
}

fn rat_residue(r: &Rat, p: u64, m: u128) -> Result<u128> {
    let mb = BigInt::from(m);
    let num = ((r.numer() % &mb) + &mb) % &mb;
    let den = ((r.denom() % &mb) + &mb) % &mb;
    let num_u: u128 = num.try_into().expect("reduced");
    let den_u: u128 = den.try_into().expect("reduced");
    let _ = p;
    let den_inv = inv_mod(den_u, m).ok_or(QError::NonUnit)?;
    Ok(mul_mod(num_u, den_inv, m))
}

fn binom_residue(n: u32, k: u32, m: u128) -> u128 {
    let b = binom_int(n as i64, k as i64);
    let mb = BigInt::from(m);
    let r = ((b % &mb) + &mb) % &mb;
    r.try_into().expect("reduced")
}

/// One row of a convergence profile.
#[derive(Clone, Debug)]
pub struct ProfileRow {
    pub level: u32,
    pub value: PadicValue,
    /// v_p(value - target), when a target is supplied
    pub agreement: Option<Valuation>,
}

/// Per-level agreement valuations of the Riemann sums against an exact
/// target value in Q embedded p-adically.
pub fn convergence_profile(
    ctx: &PadicContext,
    f: &IntegrandSpec,
    levels: std::ops::RangeInclusive<u32>,
    target: Option<&Rat>,
) -> Result<Vec<ProfileRow>> {
    let target_val = match target {
        Some(t) => Some(ctx.embed(t)?),
        None => None,
    };
    let mut rows = Vec::new();
    for level in levels {
        let value = riemann_integral(ctx, f, level)?;
        let agreement = target_val.as_ref().map(|t| value.sub(t).valuation());
        rows.push(ProfileRow {
            level,
            value,
            agreement,
        });
    }
    Ok(rows)
}

/// Partial sum of a p-adically convergent series: terms are summed until
/// the per-index valuation bound guarantees the tail is below the working
/// precision. The term rule may itself be a finite inner sum.
pub fn truncated_tail_sum<F>(
    ctx: &PadicContext,
    mut term: F,
    tail_valuation_rate: u32,
) -> Result<PadicValue>
where
    F: FnMut(u32) -> Result<PadicValue>,
{
    if tail_valuation_rate < 1 {
        return Err(QError::DivergentTail);
    }
    let n = ctx.precision_n as i64;
    let rate = tail_valuation_rate as i64;
    let cutoff = ((n + rate - 1) / rate) as u32;
    let mut acc = PadicValue::zero(ctx.p, n);
    for m in 0..=cutoff {
        acc = acc.add(&term(m)?);
    }
    Ok(acc)
}
