//! Certified real inputs.
//!
//! A [`CertifiedReal`] is an exact rational midpoint with an exact rational
//! error radius. Anything computed from it must hold for every real in
//! `[mid - rad, mid + rad]`, or fail with [`Error::InsufficientPrecision`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{ln_bigint, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedReal {
    pub mid: Rational,
    pub rad: Rational,
}

impl CertifiedReal {
    pub fn new(mid: Rational, rad: Rational) -> Result<Self> {
        if rad.is_negative() {
            return Err(Error::domain("negative error radius"));
        }
        Ok(CertifiedReal { mid, rad })
    }

    pub fn exact(value: Rational) -> Self {
        CertifiedReal { mid: value, rad: Rational::zero() }
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn lo(&self) -> Rational {
        &self.mid - &self.rad
    }

    pub fn hi(&self) -> Rational {
        &self.mid + &self.rad
    }

    pub fn contains(&self, r: &Rational) -> bool {
        (&self.mid - r).abs() <= self.rad
    }

    pub fn shift(&self, by: &Rational) -> Self {
        CertifiedReal { mid: &self.mid + by, rad: self.rad.clone() }
    }

    /// Representative of `x mod 1` in `[0, 1)`. Fails when the interval
    /// straddles an integer, since different members then reduce to opposite
    /// ends of the unit interval.
    pub fn reduce_mod_one(&self) -> Result<Self> {
        let ((lo_n, lo_d), (hi_n, hi_d)) = self.endpoints_raw();
        let n = lo_n.div_floor(&lo_d);
        if n != hi_n.div_floor(&hi_d) {
            return Err(Error::precision(format!(
                "interval [{}, {}] straddles an integer",
                self.lo(),
                self.hi()
            )));
        }
        if n.is_zero() {
            return Ok(self.clone());
        }
        // gcd(p - n q, q) = gcd(p, q), so no reduction is needed
        let (p, q) = (self.mid.numer(), self.mid.denom());
        let mid = Rational::new_raw(p - &n * q, q.clone());
        Ok(CertifiedReal { mid, rad: self.rad.clone() })
    }

    /// Endpoints as unreduced `(numerator, denominator)` pairs with positive
    /// denominators.
    pub(crate) fn endpoints_raw(&self) -> ((BigInt, BigInt), (BigInt, BigInt)) {
        let (m, md) = (self.mid.numer(), self.mid.denom());
        let (rn, rd) = (self.rad.numer(), self.rad.denom());
        let a = m * rd;
        let b = rn * md;
        let d = md * rd;
        ((&a - &b, d.clone()), (a + b, d))
    }

    pub(crate) fn offset(&self, r: &Rational) -> Offset {
        let (m, md) = (self.mid.numer(), self.mid.denom());
        Offset {
            num: m * r.denom() - r.numer() * md,
            den: md * r.denom(),
            rad_num: self.rad.numer().clone(),
            rad_den: self.rad.denom().clone(),
        }
    }

    /// Bounds on `|x - r|` valid for every `x` in the interval. The lower
    /// bound is clamped at zero.
    pub fn distance_bounds(&self, r: &Rational) -> (Rational, Rational) {
        let d = (&self.mid - r).abs();
        let lo = &d - &self.rad;
        let lo = if lo.is_negative() { Rational::zero() } else { lo };
        (lo, &d + &self.rad)
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    /// Decimal digits of accuracy, `-log10(rad)`; infinite for exact values.
    pub fn accuracy_digits(&self) -> f64 {
        if self.is_exact() {
            f64::INFINITY
        } else {
            -self.rad.ln() / std::f64::consts::LN_10
        }
    }
}

/// `mid - r` and the radius as unreduced fractions. Comparisons and logs on
/// these avoid the gcd work that canonical rationals pay on every operation,
/// which dominates once denominators run to many thousands of digits.
pub(crate) struct Offset {
    num: BigInt,
    den: BigInt,
    rad_num: BigInt,
    rad_den: BigInt,
}

impl Offset {
    pub fn mid_is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `|mid - r| >= k·rad`.
    pub fn separated_by(&self, k: u32) -> bool {
        self.num.abs() * &self.rad_den >= &self.rad_num * &self.den * k
    }

    pub fn ln_mid(&self) -> f64 {
        ln_bigint(&self.num.abs()) - ln_bigint(&self.den)
    }

    /// `(lo, hi)` bounds on `|x - r|` as unreduced fractions sharing the
    /// denominator; `lo` is clamped at zero.
    pub fn distance_bounds_raw(&self) -> (BigInt, BigInt, BigInt) {
        let a = self.num.abs() * &self.rad_den;
        let b = &self.rad_num * &self.den;
        let lo = if a > b { &a - &b } else { BigInt::zero() };
        (lo, a + b, &self.den * &self.rad_den)
    }

    /// Natural logs of the distance bounds, `-inf` for a zero lower bound.
    pub fn ln_distance_bounds(&self) -> (f64, f64) {
        let (lo, hi, den) = self.distance_bounds_raw();
        let ln_den = ln_bigint(&den);
        let ln_lo = if lo.is_zero() { f64::NEG_INFINITY } else { ln_bigint(&lo) - ln_den };
        (ln_lo, ln_bigint(&hi) - ln_den)
    }
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.17} ± {:.3e}", self.mid.to_f64(), self.rad.to_f64())
    }
}

/// Test subjects in `(0, 1)` with known irrationality exponent 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constant {
    /// √2 − 1, continued fraction `[2, 2, 2, ...]`.
    Sqrt2m1,
    /// (√5 − 1)/2, continued fraction `[1, 1, 1, ...]`.
    GoldenConj,
    /// e − 2.
    EFrac,
    /// π − 3.
    PiFrac,
}

impl Constant {
    pub const ALL: [Constant; 4] =
        [Constant::Sqrt2m1, Constant::GoldenConj, Constant::EFrac, Constant::PiFrac];

    pub fn name(self) -> &'static str {
        match self {
            Constant::Sqrt2m1 => "sqrt2m1",
            Constant::GoldenConj => "golden_conj",
            Constant::EFrac => "e_frac",
            Constant::PiFrac => "pi_frac",
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Constant::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownConstant(s.to_string()))
    }
}

/// `name` to within `10^-digits`.
pub fn make_constant(name: Constant, digits: u32) -> Result<CertifiedReal> {
    if digits < 2 {
        return Err(Error::domain("at least 2 digits are required"));
    }
    // Guard digits absorb the per-term truncation errors of the series below.
    let k = digits + 6 + digits.to_string().len() as u32;
    let scale = BigInt::from(10u32).pow(k);
    let (mid_num, rad_num, den) = match name {
        Constant::Sqrt2m1 => {
            // s <= √2·S < s + 1
            let s = (BigInt::from(2u32) * &scale * &scale).sqrt();
            let den = BigInt::from(2u32) * &scale;
            (BigInt::from(2u32) * &s + 1 - &den, BigInt::one(), den)
        }
        Constant::GoldenConj => {
            let s = (BigInt::from(5u32) * &scale * &scale).sqrt();
            let den = BigInt::from(4u32) * &scale;
            (BigInt::from(2u32) * &s + 1 - BigInt::from(2u32) * &scale, BigInt::one(), den)
        }
        Constant::EFrac => {
            let (sum, err) = e_minus_two_scaled(&scale);
            let den = BigInt::from(2u32) * &scale;
            (BigInt::from(2u32) * sum + &err, err, den)
        }
        Constant::PiFrac => {
            let (a5, e5) = arctan_inv_scaled(5, &scale);
            let (a239, e239) = arctan_inv_scaled(239, &scale);
            let pi = BigInt::from(16u32) * a5 - BigInt::from(4u32) * a239;
            let err = BigInt::from(16u32) * e5 + BigInt::from(4u32) * e239;
            let den = scale.clone();
            (pi - BigInt::from(3u32) * &scale, err, den)
        }
    };
    Ok(CertifiedReal {
        mid: Rational::new(mid_num, den.clone())?,
        rad: Rational::new(rad_num, den)?,
    })
}

/// `T` and `E` with `S·(e − 2) ∈ [T, T + E]`.
fn e_minus_two_scaled(scale: &BigInt) -> (BigInt, BigInt) {
    // floor(floor(S/(k-1)!)/k) = floor(S/k!), so every term is exact up to its
    // own truncation below one unit.
    let mut term = scale.clone();
    let mut sum = BigInt::zero();
    let mut count = 0u32;
    let mut k = 1u32;
    while !term.is_zero() {
        k += 1;
        term = if k == 2 { scale / 2u32 } else { term / k };
        sum += &term;
        count += 1;
    }
    // Truncations contribute < count; the omitted tail is < 2.
    (sum, BigInt::from(count + 2))
}

/// `A` and `E` with `|S·arctan(1/m) − A| <= E`.
fn arctan_inv_scaled(m: u32, scale: &BigInt) -> (BigInt, BigInt) {
    let m2 = BigInt::from(m) * m;
    let mut power = scale / m; // floor(S / m^(2j+1))
    let mut sum = BigInt::zero();
    let mut j = 0u32;
    while !power.is_zero() {
        let term = &power / (2 * j + 1);
        if j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &m2;
        j += 1;
    }
    (sum, BigInt::from(j + 1))
}

/// An irrational built digit by digit so that its irrationality exponent is a
/// prescribed `t >= 2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SynthesizedIrrational {
    pub target_tau: f64,
    #[serde(with = "crate::serde_str::vec")]
    pub digits: Vec<BigInt>,
    pub value: CertifiedReal,
}

/// Partial quotients `a_1 = 1`, `a_{j+1} = max(1, ceil(q_j^(t-2)))`.
///
/// Convergent errors satisfy `|x - p_j/q_j| ≍ 1/(a_{j+1} q_j²)`, so the rule
/// makes `τ_j → t`. The returned value is the interval spanned by the last
/// two convergents, which always contains the infinite continuation.
pub fn synthesize_prescribed_tau(t: f64, n_terms: usize) -> Result<SynthesizedIrrational> {
    if !t.is_finite() || t < 2.0 {
        return Err(Error::domain(format!("irrationality exponent must be >= 2, got {t}")));
    }
    if n_terms < 2 {
        return Err(Error::domain("at least 2 terms are required"));
    }
    let exponent = t - 2.0;
    let mut digits = Vec::with_capacity(n_terms);
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p, mut q) = (BigInt::zero(), BigInt::one());
    let mut a = BigInt::one();
    for j in 0..=n_terms {
        if j > 0 {
            a = ceil_power(&q, exponent).max(BigInt::one());
        }
        let np = &a * &p + &p_prev;
        let nq = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, np);
        q_prev = std::mem::replace(&mut q, nq);
        if j < n_terms {
            digits.push(a.clone());
        }
    }
    // (p_prev, q_prev) is convergent n, (p, q) convergent n + 1; their
    // difference is ±1/(q_n q_{n+1}). Keeping the interval strictly between
    // them leaves every tail after digit n inside (0, 1).
    // The numerator is ≡ p_n q_{n+1} - p_{n+1} q_n = ±1 mod 2, q_n and
    // q_{n+1}, so both fractions are already reduced.
    let qq = &q_prev * &q;
    let mid = Rational::new_raw(&p_prev * &q + &p * &q_prev, BigInt::from(2u32) * &qq);
    let rad = Rational::new_raw(BigInt::one(), BigInt::from(4u32) * qq);
    Ok(SynthesizedIrrational { target_tau: t, digits, value: CertifiedReal { mid, rad } })
}

/// `ceil(q^e)` for `e >= 0`. Exact for integral `e`; otherwise correct to
/// f64 relative accuracy, rounded up.
fn ceil_power(q: &BigInt, e: f64) -> BigInt {
    if e == 0.0 || q.is_one() {
        return BigInt::one();
    }
    if e.fract() == 0.0 && e < u32::MAX as f64 {
        return q.pow(e as u32);
    }
    let log2 = e * ln_bigint(q) / std::f64::consts::LN_2;
    if log2 < 52.0 {
        // snap rounding noise so perfect powers do not round up
        let v = 2f64.powf(log2);
        let near = v.round();
        let v = if (v - near).abs() <= 1e-9 * near.max(1.0) { near } else { v.ceil() };
        return BigInt::from(v as u64);
    }
    let whole = log2.floor();
    let mantissa = (2f64.powf(log2 - whole) * (1u64 << 52) as f64).ceil();
    let mantissa = BigInt::from(mantissa.to_u64().expect("mantissa below 2^53"));
    mantissa << (whole as u64 - 52)
}
