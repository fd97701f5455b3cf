//! Continued fractions of certified reals in `(0, 1)`.
//!
//! Digits follow the convention `[a_1, a_2, ...] = 1/(a_1 + 1/(a_2 + ...))`.
//! A digit is emitted only when the floor of the reciprocal remainder is the
//! same for every real in the input interval.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bigreal::CertifiedReal;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuedFraction {
    #[serde(with = "crate::serde_str::vec")]
    pub digits: Vec<BigInt>,
    /// The input was an exact rational and its expansion terminated.
    pub exhausted: bool,
    pub certified_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Convergent {
    #[serde(with = "crate::serde_str")]
    pub p: BigInt,
    #[serde(with = "crate::serde_str")]
    pub q: BigInt,
    /// 1-based position in the expansion.
    pub index: usize,
}

impl Convergent {
    pub fn value(&self) -> Rational {
        Rational::new_raw(self.p.clone(), self.q.clone())
    }
}

/// One certified term of `|x - p_j/q_j| = q_j^(-τ_j)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TauTerm {
    pub index: usize,
    #[serde(with = "crate::serde_str")]
    pub q: BigInt,
    pub tau: f64,
    /// τ_j is bracketed by these for every real in the input interval.
    pub tau_lo: f64,
    pub tau_hi: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrrationalityEstimate {
    pub tau_seq: Vec<TauTerm>,
    pub tau_hat: f64,
    /// Convergent index at which the tail maximum starts.
    pub tail_start: usize,
    /// Convergent indices left out: `q_j = 1`, or too close to `x` to resolve.
    pub skipped: Vec<usize>,
}

/// Expand `x mod 1` into at most `max_terms` certified partial quotients.
pub fn expand(x: &CertifiedReal, max_terms: usize) -> Result<ContinuedFraction> {
    if max_terms == 0 {
        return Err(Error::domain("max_terms must be at least 1"));
    }
    let x = x.reduce_mod_one()?;
    if x.is_exact() {
        return Ok(expand_rational(&x.mid, max_terms));
    }

    // Endpoints as (numerator, denominator) pairs in [0, 1); Euclid does not
    // need them reduced.
    let ((mut lo_n, mut lo_d), (mut hi_n, mut hi_d)) = x.endpoints_raw();
    let mut digits = Vec::new();
    while digits.len() < max_terms && lo_n.is_positive() {
        // 1/x ranges over [hi_d/hi_n, lo_d/lo_n]; both must share one floor
        // and neither end may sit on an integer.
        let (a, rem) = hi_d.div_rem(&hi_n);
        if rem.is_zero() || lo_d >= (&a + 1u32) * &lo_n {
            break;
        }
        let next_lo = (rem, std::mem::take(&mut hi_n));
        let next_hi = (&lo_d - &a * &lo_n, std::mem::take(&mut lo_n));
        (lo_n, lo_d) = next_lo;
        (hi_n, hi_d) = next_hi;
        digits.push(a);
    }
    if digits.is_empty() {
        return Err(Error::precision(format!(
            "no partial quotient is common to every real in [{}, {}]",
            x.lo(),
            x.hi()
        )));
    }
    let certified_count = digits.len();
    Ok(ContinuedFraction { digits, exhausted: false, certified_count })
}

/// Euclid on `p/q ∈ [0, 1)`. The last digit is at least 2 whenever there is
/// more than one, which makes the expansion unique.
fn expand_rational(x: &Rational, max_terms: usize) -> ContinuedFraction {
    let (mut p, mut q) = (x.numer().clone(), x.denom().clone());
    let mut digits = Vec::new();
    while !p.is_zero() && digits.len() < max_terms {
        let (a, r) = q.div_rem(&p);
        q = std::mem::replace(&mut p, r);
        digits.push(a);
    }
    let certified_count = digits.len();
    ContinuedFraction { digits, exhausted: p.is_zero(), certified_count }
}

/// Convergents of the certified prefix via
/// `p_j = a_j p_{j-1} + p_{j-2}`, `q_j = a_j q_{j-1} + q_{j-2}`
/// seeded with `p_{-1}/q_{-1} = 1/0`, `p_0/q_0 = 0/1`.
pub fn convergents(cf: &ContinuedFraction) -> Vec<Convergent> {
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p, mut q) = (BigInt::zero(), BigInt::one());
    let mut out = Vec::with_capacity(cf.certified_count);
    for (i, a) in cf.digits[..cf.certified_count].iter().enumerate() {
        let np = a * &p + &p_prev;
        let nq = a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, np);
        q_prev = std::mem::replace(&mut q, nq);
        debug_assert!(p.gcd(&q).is_one());
        out.push(Convergent { p: p.clone(), q: q.clone(), index: i + 1 });
    }
    out
}

/// τ_j for every resolvable convergent, with `tau_hat` the maximum over the
/// last half of them.
pub fn tau_sequence(x: &CertifiedReal, convs: &[Convergent]) -> Result<IrrationalityEstimate> {
    tau_sequence_with_tail(x, convs, 0.5)
}

/// As [`tau_sequence`], taking the maximum over the final `tail_fraction`
/// of certified terms.
pub fn tau_sequence_with_tail(
    x: &CertifiedReal,
    convs: &[Convergent],
    tail_fraction: f64,
) -> Result<IrrationalityEstimate> {
    if !(tail_fraction > 0.0 && tail_fraction <= 1.0) {
        return Err(Error::domain("tail fraction must lie in (0, 1]"));
    }
    let x = x.reduce_mod_one()?;
    let mut tau_seq = Vec::new();
    let mut skipped = Vec::new();
    for c in convs {
        if c.q <= BigInt::one() {
            skipped.push(c.index);
            continue;
        }
        let off = x.offset(&c.value());
        if off.mid_is_zero() || !off.separated_by(10) {
            skipped.push(c.index);
            continue;
        }
        let ln_q = crate::rational::ln_bigint(&c.q);
        let tau = -off.ln_mid() / ln_q;
        let (tau_lo, tau_hi) = if x.is_exact() {
            (tau, tau)
        } else {
            let (ln_lo, ln_hi) = off.ln_distance_bounds();
            // f64 logs can round across the exact value
            ((-ln_hi / ln_q).min(tau), (-ln_lo / ln_q).max(tau))
        };
        tau_seq.push(TauTerm { index: c.index, q: c.q.clone(), tau, tau_lo, tau_hi });
    }
    if tau_seq.is_empty() {
        return Err(Error::precision("no convergent is resolvable against the input radius"));
    }
    let keep = ((tau_seq.len() as f64 * tail_fraction).ceil() as usize).clamp(1, tau_seq.len());
    let tail = &tau_seq[tau_seq.len() - keep..];
    let tau_hat = tail.iter().map(|t| t.tau).fold(f64::NEG_INFINITY, f64::max);
    let tail_start = tail[0].index;
    Ok(IrrationalityEstimate { tau_seq, tau_hat, tail_start, skipped })
}

/// `|x - p/q| < 1/(√5 q²)`, decided exactly as `5 q⁴ |x - p/q|² < 1`.
pub fn hurwitz_check(x: &CertifiedReal, c: &Convergent) -> Result<bool> {
    let (d_lo, d_hi, den) = x.offset(&c.value()).distance_bounds_raw();
    // 5 q⁴ (d/den)² < 1  <=>  5 q⁴ d² < den²
    let q4 = c.q.pow(4u32) * 5u32;
    let den2 = &den * &den;
    if &q4 * &d_hi * &d_hi < den2 {
        Ok(true)
    } else if &q4 * &d_lo * &d_lo >= den2 {
        Ok(false)
    } else {
        Err(Error::precision(format!(
            "Hurwitz bound at {}/{} undecidable at this radius",
            c.p, c.q
        )))
    }
}
