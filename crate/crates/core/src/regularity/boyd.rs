//! Boyd functions `φ(x) = x^θ (|ln x| + 1)^γ` and their indices.
//!
//! Everything is evaluated in log space, so scaling ratios stay finite far
//! below the f64 underflow threshold.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{ln_bigint, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoydFunction {
    pub theta: f64,
    pub gamma: f64,
}

impl BoydFunction {
    pub fn new(theta: f64, gamma: f64) -> Result<Self> {
        if !(theta > 0.0 && theta.is_finite()) {
            return Err(Error::domain("the power of a Boyd function must be positive"));
        }
        if !(gamma >= 0.0 && gamma.is_finite()) {
            return Err(Error::domain("the log power of a Boyd function must be >= 0"));
        }
        Ok(BoydFunction { theta, gamma })
    }

    pub fn pure_power(theta: f64) -> Result<Self> {
        Self::new(theta, 0.0)
    }

    /// `ln φ(y)` given `ln y <= 0`.
    pub fn ln_at_log(&self, ln_y: f64) -> f64 {
        self.theta * ln_y + self.gamma * (ln_y.abs() + 1.0).ln()
    }

    pub fn eval(&self, y: f64) -> f64 {
        self.ln_at_log(y.ln()).exp()
    }
}

/// `f_φ(p/q) = φ(1/q)`; integers give `φ(1) = 1`.
pub fn eval_generalized(x: &Rational, phi: &BoydFunction) -> f64 {
    phi.ln_at_log(-ln_bigint(x.denom())).exp()
}

/// Sampled `inf` and `sup` of `φ(xs)/φ(s)` over `s ∈ (0, 1]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoydBounds {
    pub x: f64,
    pub lower: f64,
    pub upper: f64,
    pub ln_lower: f64,
    pub ln_upper: f64,
    /// Grid points per decade of `s`.
    pub grid: usize,
    pub decades: usize,
    /// Extrema are taken over a finite grid: inner estimates, not bounds.
    pub sampled: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoydGrid {
    pub points_per_decade: usize,
    pub decades: usize,
}

impl Default for BoydGrid {
    fn default() -> Self {
        BoydGrid { points_per_decade: 200, decades: 300 }
    }
}

/// `ln φ(xs) - ln φ(s) = θ ln x + γ·corr(s)`; returns the extrema of `corr`.
fn correction_extrema(ln_x: f64, grid: BoydGrid) -> (f64, f64) {
    let step = std::f64::consts::LN_10 / grid.points_per_decade as f64;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for k in 0..=grid.points_per_decade * grid.decades {
        let ln_s = -(k as f64) * step;
        let corr = (-(ln_x + ln_s) + 1.0).ln() - (-ln_s + 1.0).ln();
        lo = lo.min(corr);
        hi = hi.max(corr);
    }
    (lo, hi)
}

pub fn boyd_bounds(phi: &BoydFunction, x: f64, grid: BoydGrid) -> Result<BoydBounds> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(format!("x must lie in (0, 1), got {x}")));
    }
    if grid.points_per_decade < 10 || grid.decades == 0 {
        return Err(Error::domain("the grid needs at least 10 points per decade"));
    }
    let ln_x = x.ln();
    let (c_lo, c_hi) = correction_extrema(ln_x, grid);
    let ln_lower = phi.theta * ln_x + phi.gamma * c_lo;
    let ln_upper = phi.theta * ln_x + phi.gamma * c_hi;
    Ok(BoydBounds {
        x,
        lower: ln_lower.exp(),
        upper: ln_upper.exp(),
        ln_lower,
        ln_upper,
        grid: grid.points_per_decade,
        decades: grid.decades,
        sampled: true,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexSample {
    pub x: f64,
    pub s_lower: f64,
    pub s_upper: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoydIndices {
    pub s_lower: f64,
    pub s_upper: f64,
    /// Index estimates at every requested `x`, for judging convergence.
    pub trend: Vec<IndexSample>,
}

/// `log φ̲(x)/log x` and `log φ̄(x)/log x` at the smallest `x`, ordered so
/// that `s_lower <= s_upper`.
pub fn boyd_indices(phi: &BoydFunction, x_small: &[f64], grid: BoydGrid) -> Result<BoydIndices> {
    if x_small.is_empty() {
        return Err(Error::domain("at least one x is required"));
    }
    if !x_small.windows(2).all(|w| w[0] > w[1]) {
        return Err(Error::domain("x values must be strictly decreasing"));
    }
    if grid.points_per_decade < 10 || grid.decades == 0 {
        return Err(Error::domain("the grid needs at least 10 points per decade"));
    }
    let mut trend = Vec::with_capacity(x_small.len());
    for &x in x_small {
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::domain(format!("x must lie in (0, 1), got {x}")));
        }
        let ln_x = x.ln();
        let (c_lo, c_hi) = correction_extrema(ln_x, grid);
        // θ + γ·corr/ln x keeps pure powers exact
        let a = phi.theta + phi.gamma * c_lo / ln_x;
        let b = phi.theta + phi.gamma * c_hi / ln_x;
        trend.push(IndexSample { x, s_lower: a.min(b), s_upper: a.max(b) });
    }
    let last = trend.last().unwrap();
    Ok(BoydIndices { s_lower: last.s_lower, s_upper: last.s_upper, trend })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> BoydGrid {
        BoydGrid::default()
    }

    #[test]
    fn generalized_evaluation() {
        let half = Rational::new(1, 2).unwrap();
        let plain = BoydFunction::new(1.0, 0.0).unwrap();
        assert!((eval_generalized(&half, &plain) - 0.5).abs() < 1e-15);
        let logged = BoydFunction::new(1.0, 1.0).unwrap();
        let expected = 0.5 * (2f64.ln() + 1.0);
        assert!((eval_generalized(&half, &logged) - expected).abs() < 1e-15);
        assert!((eval_generalized(&half, &logged) - 0.8466).abs() < 1e-4);
        assert_eq!(eval_generalized(&Rational::from_integer(4), &logged), 1.0);
        assert!((logged.eval(0.25) - 0.25 * (4f64.ln() + 1.0)).abs() < 1e-15);
    }

    #[test]
    fn pure_power_bounds_are_exact() {
        let phi = BoydFunction::pure_power(1.5).unwrap();
        for g in [10, 50, 200] {
            let b = boyd_bounds(&phi, 0.3, BoydGrid { points_per_decade: g, decades: 20 }).unwrap();
            assert_eq!(b.ln_lower, b.ln_upper);
            assert!((b.lower - 0.3f64.powf(1.5)).abs() < 1e-15);
        }
    }

    #[test]
    fn log_corrected_bounds_at_one_half() {
        let phi = BoydFunction::new(1.0, 1.0).unwrap();
        let b = boyd_bounds(&phi, 0.5, grid()).unwrap();
        // sup at s = 1 is φ(1/2); inf approaches 1/2 as s → 0
        assert!((b.upper - 0.5 * (2f64.ln() + 1.0)).abs() < 1e-12);
        assert!(b.lower >= 0.5 && b.lower < 0.501, "{}", b.lower);
        assert!((0.3..=0.9).contains(&b.lower) && (0.3..=0.9).contains(&b.upper));
        assert!(b.sampled);
    }

    #[test]
    fn bounds_tend_to_one_near_one() {
        let phi = BoydFunction::new(2.0, 3.0).unwrap();
        let b = boyd_bounds(&phi, 1.0 - 1e-9, grid()).unwrap();
        assert!((b.lower - 1.0).abs() < 1e-6 && (b.upper - 1.0).abs() < 1e-6);
    }

    #[test]
    fn indices_of_pure_powers_are_exact() {
        let phi = BoydFunction::pure_power(1.5).unwrap();
        let ix = boyd_indices(&phi, &[1e-2, 1e-4, 1e-8], grid()).unwrap();
        assert_eq!((ix.s_lower, ix.s_upper), (1.5, 1.5));
    }

    #[test]
    fn indices_are_ordered_and_bracket_theta() {
        let phi = BoydFunction::new(1.0, 2.0).unwrap();
        let ix = boyd_indices(&phi, &[1e-2, 1e-4, 1e-8], grid()).unwrap();
        for s in &ix.trend {
            assert!(s.s_lower <= s.s_upper);
            assert!(s.s_lower < 1.0 && s.s_upper <= 1.0);
            assert!(s.s_upper > 0.99, "{}", s.s_upper);
        }
        // the sup side converges like γ ln(1 + |ln x|)/|ln x|
        let gaps: Vec<f64> = ix.trend.iter().map(|s| 1.0 - s.s_lower).collect();
        assert!(gaps.windows(2).all(|w| w[1] < w[0]));
        let far = boyd_indices(&phi, &[1e-300], grid()).unwrap();
        assert!(1.0 - far.s_lower < 1.0 - ix.s_lower);
    }

    #[test]
    fn argument_validation() {
        assert!(BoydFunction::new(0.0, 1.0).is_err());
        assert!(BoydFunction::new(1.0, -1.0).is_err());
        let phi = BoydFunction::new(1.0, 1.0).unwrap();
        assert!(boyd_bounds(&phi, 1.5, grid()).is_err());
        assert!(boyd_bounds(&phi, 0.5, BoydGrid { points_per_decade: 5, decades: 10 }).is_err());
        assert!(boyd_indices(&phi, &[1e-4, 1e-2], grid()).is_err());
    }
}
