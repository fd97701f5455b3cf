//! Exact evaluation and pointwise regularity of the Thomae function family
//! `f_θ(p/q) = q^(-θ)`, `f_θ(x) = 0` at irrationals.

pub mod bigreal;
pub mod cli;
pub mod contfrac;
pub mod error;
pub mod farey;
pub mod rational;
pub mod regularity;
mod serde_str;
pub mod thomae;

pub use bigreal::{
    make_constant, synthesize_prescribed_tau, CertifiedReal, Constant, SynthesizedIrrational,
};
pub use contfrac::{
    convergents, expand, hurwitz_check, tau_sequence, ContinuedFraction, Convergent,
    IrrationalityEstimate, TauTerm,
};
pub use error::{Error, Result};
pub use farey::{farey_in_interval, min_denominator_in_interval};
pub use rational::{reduce, Rational};
pub use thomae::{
    classify_differentiability, continuity_delta, difference_quotient, eval, sup_on_interval,
    upper_darboux, ContinuityWitness, DarbouxSum, DifferenceQuotient, Differentiability,
    SpikeValue, ThomaeParams,
};
