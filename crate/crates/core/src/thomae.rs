//! The Thomae function `f_θ(p/q) = q^(-θ)`, `f_θ(irrational) = 0`.
//!
//! θ is held as an exact positive rational `a/b`, so every comparison of a
//! spike height `q^(-a/b)` against a rational reduces to comparing integer
//! powers and is decided exactly.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::bigreal::CertifiedReal;
use crate::error::{Error, Result};
use crate::farey::min_denominator_in_interval;
use crate::rational::{ln_bigint, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThomaeParams {
    pub theta: Rational,
}

impl ThomaeParams {
    pub fn new(theta: Rational) -> Result<Self> {
        if !theta.is_positive() {
            return Err(Error::domain(format!(
                "theta must be positive (got {theta}); f is not locally bounded for theta < 0"
            )));
        }
        Ok(ThomaeParams { theta })
    }

    pub fn theta_f64(&self) -> f64 {
        self.theta.to_f64()
    }

    /// θ as a machine integer, when it is one.
    pub fn integer_theta(&self) -> Option<u32> {
        if self.theta.is_integer() {
            self.theta.numer().to_u32()
        } else {
            None
        }
    }
}

impl Default for ThomaeParams {
    fn default() -> Self {
        ThomaeParams { theta: Rational::one() }
    }
}

/// Exact comparison of `q^s` (q ≥ 1, any rational s) with a rational `r`.
pub fn cmp_power(q: &BigInt, s: &Rational, r: &Rational) -> Ordering {
    if !r.is_positive() {
        return Ordering::Greater;
    }
    let b = s.denom().to_u32().expect("exponent denominator fits in u32");
    let a = s.numer().abs().to_u32().expect("exponent numerator fits in u32");
    let (n, d) = (r.numer().pow(b), r.denom().pow(b));
    let qa = q.pow(a);
    if s.is_negative() {
        // q^(-a/b) vs n/d  <=>  d^b vs n^b q^a
        d.cmp(&(n * qa))
    } else {
        (qa * d).cmp(&n)
    }
}

/// A spike height `q^(-θ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpikeValue {
    #[serde(with = "crate::serde_str")]
    pub q: BigInt,
    pub theta: Rational,
}

impl SpikeValue {
    pub fn ln(&self) -> f64 {
        -self.theta.to_f64() * ln_bigint(&self.q)
    }

    pub fn to_f64(&self) -> f64 {
        // below the smallest subnormal; also keeps `exact` from building huge powers
        if self.ln() < -746.0 {
            return 0.0;
        }
        if let Some(r) = self.exact() {
            return r.to_f64();
        }
        match self.q.to_u64() {
            Some(q) if q < 1 << 53 => (q as f64).powf(-self.theta.to_f64()),
            _ => self.ln().exp(),
        }
    }

    /// The value as a fraction when it is rational, i.e. when `q` is a perfect
    /// `b`-th power for `θ = a/b`.
    pub fn exact(&self) -> Option<Rational> {
        let a = self.theta.numer().to_u32()?;
        let b = self.theta.denom().to_u32()?;
        let root = self.q.nth_root(b);
        if root.pow(b) != self.q {
            return None;
        }
        Some(Rational::new_raw(BigInt::one(), root.pow(a)))
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        cmp_power(&self.q, &-&self.theta, r)
    }
}

impl fmt::Display for SpikeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{}", self.to_f64()),
        }
    }
}

/// `f_θ(x)` for rational `x`; integers give 1.
pub fn eval(x: &Rational, params: &ThomaeParams) -> SpikeValue {
    SpikeValue { q: x.denom().clone(), theta: params.theta.clone() }
}

/// Supremum of `f_θ` on `[lo, hi]`: attained at the rational of least
/// denominator, since `q^(-θ)` decreases in `q`.
pub fn sup_on_interval(
    lo: &Rational,
    hi: &Rational,
    params: &ThomaeParams,
) -> Result<(Rational, SpikeValue)> {
    let argmax = min_denominator_in_interval(lo, hi)?;
    let value = eval(&argmax, params);
    Ok((argmax, value))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DarbouxSum {
    pub n: u64,
    /// Present when θ is a positive integer.
    pub exact: Option<Rational>,
    pub value: f64,
}

/// Upper Darboux sum of `f_θ` over the uniform partition of `[0, 1]` into
/// `n` closed cells.
pub fn upper_darboux(n: u64, params: &ThomaeParams) -> Result<DarbouxSum> {
    if n == 0 {
        return Err(Error::domain("the partition needs at least one cell"));
    }
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for k in 0..n {
        let lo = Rational::new(k, n)?;
        let hi = Rational::new(k + 1, n)?;
        let q = min_denominator_in_interval(&lo, &hi)?;
        let q = q.denom().to_u64().expect("cell denominators are at most n");
        *counts.entry(q).or_default() += 1;
    }

    let theta = params.theta_f64();
    let value = counts
        .iter()
        .rev()
        .map(|(&q, &c)| c as f64 * (-theta * (q as f64).ln()).exp())
        .sum::<f64>()
        / n as f64;

    let exact = params.integer_theta().map(|m| {
        // Σ c_q / q^m over the common multiple of all q^m
        let mut lcm = BigInt::one();
        for &q in counts.keys() {
            lcm = lcm.lcm(&BigInt::from(q).pow(m));
        }
        let mut numer = BigInt::zero();
        for (&q, &c) in &counts {
            numer += (&lcm / BigInt::from(q).pow(m)) * c;
        }
        Rational::new(numer, lcm * n).expect("positive denominator")
    });
    Ok(DarbouxSum { n, exact, value })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContinuityWitness {
    pub x: CertifiedReal,
    pub epsilon: Rational,
    /// Smallest `n` with `n^(-θ) < ε`.
    pub n: u64,
    /// No rational with denominator `<= n` lies within `delta` of any real in
    /// `x`'s interval.
    pub delta: Rational,
    /// The rational with denominator `<= n` closest to `x.mid`.
    pub nearest: Rational,
}

/// Smallest `n >= 1` with `n^(-θ) < ε`.
pub fn denominator_cutoff(epsilon: &Rational, params: &ThomaeParams) -> Result<u64> {
    if !epsilon.is_positive() {
        return Err(Error::domain("epsilon must be positive"));
    }
    let below = |n: u64| {
        eval(&Rational::new_raw(BigInt::one(), BigInt::from(n)), params).cmp_rational(epsilon)
            == Ordering::Less
    };
    let guess = epsilon.to_f64().powf(-1.0 / params.theta_f64());
    if !guess.is_finite() || guess > 1e15 {
        return Err(Error::domain("epsilon too small for a machine-sized cutoff"));
    }
    let mut n = (guess.floor() as u64).max(1);
    while n > 1 && below(n - 1) {
        n -= 1;
    }
    while !below(n) {
        n += 1;
    }
    Ok(n)
}

/// A `δ` for the ε-continuity of `f_θ` at an irrational `x`: with `n` the
/// denominator cutoff, `δ` is the least distance from `x` to `m_j/j` or
/// `(m_j + 1)/j` for `j <= n`, `m_j = floor(j x)`, shrunk by `x.rad`.
pub fn continuity_delta(
    x: &CertifiedReal,
    epsilon: &Rational,
    params: &ThomaeParams,
) -> Result<ContinuityWitness> {
    let n = denominator_cutoff(epsilon, params)?;
    let mut best: Option<(Rational, Rational)> = None;
    for j in 1..=n {
        let jr = Rational::from_integer(j);
        let m = (&x.mid * &jr).floor();
        for cand in [m.clone(), m + 1] {
            let c = Rational::new(cand, j)?;
            let d = (&x.mid - &c).abs();
            if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                best = Some((d, c));
            }
        }
    }
    let (d, nearest) = best.expect("n >= 1");
    let delta = &d - &x.rad;
    if !delta.is_positive() {
        return Err(Error::precision(format!(
            "{nearest} (denominator <= {n}) is not separated from the input interval"
        )));
    }
    Ok(ContinuityWitness { x: x.clone(), epsilon: epsilon.clone(), n, delta, nearest })
}

/// `|f_θ(x) - f_θ(y)| / |x - y|` for irrational `x` and rational `y`, with the
/// distance bracketed over `x`'s interval.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DifferenceQuotient {
    pub y: Rational,
    pub spike: SpikeValue,
    pub dist_lo: Rational,
    pub dist_hi: Rational,
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
}

impl DifferenceQuotient {
    /// Holds for every real in the input interval: quotient `> c`.
    pub fn exceeds(&self, c: &Rational) -> bool {
        self.spike.cmp_rational(&(c * &self.dist_hi)) == Ordering::Greater
    }

    /// Holds for every real in the input interval: quotient `> q^power`.
    pub fn exceeds_denominator_power(&self, power: &Rational) -> bool {
        // q^(-θ)/d > q^s  <=>  q^(-θ-s) > d
        let s = -(&self.spike.theta + power);
        cmp_power(&self.spike.q, &s, &self.dist_hi) == Ordering::Greater
    }
}

pub fn difference_quotient(
    x: &CertifiedReal,
    y: &Rational,
    params: &ThomaeParams,
) -> Result<DifferenceQuotient> {
    let (dist_lo, dist_hi) = x.distance_bounds(y);
    if dist_lo.is_zero() {
        return Err(Error::precision(format!("{y} is not separated from the input interval")));
    }
    let spike = eval(y, params);
    let ln_f = spike.ln();
    let d_mid = (&x.mid - y).abs();
    let value = (ln_f - d_mid.ln()).exp();
    Ok(DifferenceQuotient {
        y: y.clone(),
        value,
        lo: (ln_f - dist_hi.ln()).exp().min(value),
        hi: (ln_f - dist_lo.ln()).exp().max(value),
        spike,
        dist_lo,
        dist_hi,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Differentiability {
    NotDifferentiable,
    Differentiable,
    /// τ(x) = θ: not decided by the Hölder exponent alone.
    Boundary,
}

/// Differentiability of `f_θ` at an irrational with exponent `tau`.
pub fn classify_differentiability(theta: f64, tau: f64) -> Result<Differentiability> {
    if theta.is_nan() || theta <= 0.0 {
        return Err(Error::domain("theta must be positive"));
    }
    if tau.is_nan() || tau < 2.0 {
        return Err(Error::domain(format!("irrationality exponents are >= 2, got {tau}")));
    }
    Ok(if theta <= 2.0 {
        Differentiability::NotDifferentiable
    } else if tau < theta {
        Differentiability::Differentiable
    } else if tau > theta {
        Differentiability::NotDifferentiable
    } else {
        Differentiability::Boundary
    })
}
