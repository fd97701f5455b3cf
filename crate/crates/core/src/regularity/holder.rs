//! Pointwise Hölder exponents of `f_θ`.
//!
//! Two estimators that share nothing beyond `f_θ` itself:
//!
//! * the convergent route reads `θ / τ̂` off the continued fraction of `x`;
//! * the oscillation route measures `ω(r) = sup |f_θ(x + h)|` over `|h| <= r`
//!   directly (an exact minimal-denominator search per scale) and fits the
//!   slope of `log ω` against `log r`.
//!
//! Both take the approximating polynomial in the Hölder condition to be zero,
//! which is forced for `f_θ` at irrationals.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bigreal::CertifiedReal;
use crate::contfrac::{convergents, expand, tau_sequence, Convergent, IrrationalityEstimate};
use crate::error::{Error, Result};
use crate::farey::min_denominator_in_interval;
use crate::rational::{ln_bigint, Rational};
use crate::thomae::ThomaeParams;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PointKind {
    Rational,
    Irrational { tau: f64 },
}

/// `0` at rationals, `θ/τ` at irrationals.
pub fn holder_theoretical(params: &ThomaeParams, kind: PointKind) -> Result<f64> {
    match kind {
        PointKind::Rational => Ok(0.0),
        PointKind::Irrational { tau } if tau >= 2.0 => Ok(params.theta_f64() / tau),
        PointKind::Irrational { tau } => {
            Err(Error::domain(format!("irrationality exponents are >= 2, got {tau}")))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    pub rms_residual: f64,
    /// Scales entering the fit.
    pub n_scales: usize,
}

/// Ordinary least squares `y ≈ slope·x + intercept`.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> Result<SlopeFit> {
    let n = xs.len();
    if n < 2 || ys.len() != n {
        return Err(Error::domain("a slope fit needs at least two paired points"));
    }
    let mx = xs.iter().sum::<f64>() / n as f64;
    let my = ys.iter().sum::<f64>() / n as f64;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(Error::domain("all scales coincide"));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = xs.iter().zip(ys).map(|(x, y)| (y - slope * x - intercept).powi(2)).sum();
    Ok(SlopeFit { slope, intercept, rms_residual: (sse / n as f64).sqrt(), n_scales: n })
}

/// Interior scales where `ln ω / ln r` has a local minimum. `ω` is a
/// staircase in `r`, and these are the corners where it sits closest to the
/// `liminf`. Empty when there are fewer than two such corners.
fn ratio_minima(samples: &[OscillationSample]) -> Vec<usize> {
    let ratio: Vec<f64> = samples.iter().map(|s| s.ln_omega / s.ln_radius).collect();
    let idx: Vec<usize> = (1..ratio.len().saturating_sub(1))
        .filter(|&i| ratio[i] < ratio[i - 1] && ratio[i] <= ratio[i + 1])
        .collect();
    if idx.len() < 2 {
        Vec::new()
    } else {
        idx
    }
}

/// `q^(-θ) / |x - p/q|^α` for one convergent, in natural-log form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpikeRatio {
    pub index: usize,
    #[serde(with = "crate::serde_str")]
    pub q: BigInt,
    pub ln_ratio: f64,
}

/// Ratios `f_θ(p_j/q_j) / |x - p_j/q_j|^α` for every convergent resolvable at
/// the input radius (distance at least ten radii).
pub fn spike_ratios(
    x: &CertifiedReal,
    convs: &[Convergent],
    params: &ThomaeParams,
    alpha: f64,
) -> Result<Vec<SpikeRatio>> {
    let x = x.reduce_mod_one()?;
    let theta = params.theta_f64();
    Ok(convs
        .iter()
        .filter_map(|c| {
            let off = x.offset(&c.value());
            if off.mid_is_zero() || !off.separated_by(10) {
                return None;
            }
            let ln_ratio = -theta * ln_bigint(&c.q) - alpha * off.ln_mid();
            Some(SpikeRatio { index: c.index, q: c.q.clone(), ln_ratio })
        })
        .collect())
}

/// `ω(r)` at one scale.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OscillationSample {
    pub radius: Rational,
    /// Rational of least denominator within `r` of `x`.
    pub argmax: Rational,
    pub ln_radius: f64,
    pub ln_omega: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HolderReport {
    pub theta: Rational,
    /// `θ/τ` when `τ` is known for the input.
    pub theoretical: Option<f64>,
    pub est_convergent: Option<f64>,
    pub est_oscillation: Option<f64>,
    /// Fit over the local minima of `ln ω / ln r`.
    pub fit: Option<SlopeFit>,
    /// Plain fit over every scale, for comparison.
    pub fit_all_scales: Option<SlopeFit>,
    /// Largest observed `f_θ(p_j/q_j) / |x - p_j/q_j|^est_convergent`.
    #[serde(rename = "constant_C")]
    pub constant_c: Option<f64>,
    pub tau: Option<IrrationalityEstimate>,
    pub oscillation: Vec<OscillationSample>,
}

impl HolderReport {
    pub fn empty(theta: Rational) -> Self {
        HolderReport {
            theta,
            theoretical: None,
            est_convergent: None,
            est_oscillation: None,
            fit: None,
            fit_all_scales: None,
            constant_c: None,
            tau: None,
            oscillation: Vec::new(),
        }
    }

    pub fn with_theoretical(mut self, tau: f64) -> Result<Self> {
        let params = ThomaeParams::new(self.theta.clone())?;
        self.theoretical = Some(holder_theoretical(&params, PointKind::Irrational { tau })?);
        Ok(self)
    }

    /// Fold another report's estimates into this one.
    pub fn merge(mut self, other: HolderReport) -> Self {
        self.theoretical = self.theoretical.or(other.theoretical);
        self.est_convergent = self.est_convergent.or(other.est_convergent);
        self.est_oscillation = self.est_oscillation.or(other.est_oscillation);
        self.fit = self.fit.or(other.fit);
        self.fit_all_scales = self.fit_all_scales.or(other.fit_all_scales);
        self.constant_c = self.constant_c.or(other.constant_c);
        self.tau = self.tau.or(other.tau);
        if self.oscillation.is_empty() {
            self.oscillation = other.oscillation;
        }
        self
    }

    /// Smallest `C` with `ω(r) <= C r^α` on the stored oscillation table.
    pub fn oscillation_constant(&self, alpha: f64) -> Option<f64> {
        self.oscillation.iter().map(|s| (s.ln_omega - alpha * s.ln_radius).exp()).reduce(f64::max)
    }
}

/// `θ/τ̂` from the certified convergents of `x`.
pub fn holder_estimate_convergents(
    x: &CertifiedReal,
    params: &ThomaeParams,
    max_terms: usize,
) -> Result<HolderReport> {
    let cf = expand(x, max_terms)?;
    let convs = convergents(&cf);
    let tau = tau_sequence(x, &convs)?;
    let est = params.theta_f64() / tau.tau_hat;
    let constant_c = spike_ratios(x, &convs, params, est)?
        .iter()
        .map(|r| r.ln_ratio)
        .reduce(f64::max)
        .map(f64::exp);
    Ok(HolderReport {
        theta: params.theta.clone(),
        est_convergent: Some(est),
        constant_c,
        tau: Some(tau),
        ..HolderReport::empty(params.theta.clone())
    })
}

/// `2^-from, ..., 2^-to`.
pub fn dyadic_scales(from: u32, to: u32) -> Vec<Rational> {
    (from..=to).map(|k| Rational::new_raw(BigInt::one(), BigInt::one() << k)).collect()
}

/// Least-squares slope of `log ω(r)` against `log r`, taken over the scales
/// where `log ω / log r` is locally minimal (all scales if there are fewer
/// than two).
pub fn holder_estimate_oscillation(
    x: &CertifiedReal,
    params: &ThomaeParams,
    scales: &[Rational],
) -> Result<HolderReport> {
    if scales.len() < 2 {
        return Err(Error::domain("at least two scales are required"));
    }
    if !scales.windows(2).all(|w| w[0] > w[1]) || !scales.last().unwrap().is_positive() {
        return Err(Error::domain("scales must be positive and strictly decreasing"));
    }
    let theta = params.theta_f64();
    let (lo, hi) = (x.lo(), x.hi());
    let mut samples = Vec::with_capacity(scales.len());
    for r in scales {
        if *r <= x.rad {
            return Err(Error::precision(format!("scale {r} is below the input radius")));
        }
        // The minimal denominator must agree on the widest and narrowest
        // windows any member of x's interval could see.
        let outer = min_denominator_in_interval(&(&lo - r), &(&hi + r))?;
        let inner = min_denominator_in_interval(&(&hi - r), &(&lo + r))?;
        if outer.denom() != inner.denom() {
            return Err(Error::precision(format!(
                "oscillation at scale {r} differs across the input interval"
            )));
        }
        samples.push(OscillationSample {
            ln_radius: r.ln(),
            ln_omega: -theta * ln_bigint(inner.denom()),
            radius: r.clone(),
            argmax: inner,
        });
    }
    let xs: Vec<f64> = samples.iter().map(|s| s.ln_radius).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.ln_omega).collect();
    let all = fit_slope(&xs, &ys)?;
    let corners = ratio_minima(&samples);
    let fit = if corners.is_empty() {
        all.clone()
    } else {
        let cx: Vec<f64> = corners.iter().map(|&i| xs[i]).collect();
        let cy: Vec<f64> = corners.iter().map(|&i| ys[i]).collect();
        fit_slope(&cx, &cy)?
    };
    Ok(HolderReport {
        theta: params.theta.clone(),
        est_oscillation: Some(fit.slope),
        fit: Some(fit),
        fit_all_scales: Some(all),
        oscillation: samples,
        ..HolderReport::empty(params.theta.clone())
    })
}
