pub mod boyd;
pub mod holder;
pub mod spectrum;

pub use boyd::{
    boyd_bounds, boyd_indices, eval_generalized, BoydBounds, BoydFunction, BoydGrid, BoydIndices,
    IndexSample,
};
pub use holder::{
    dyadic_scales, fit_slope, holder_estimate_convergents, holder_estimate_oscillation,
    holder_theoretical, spike_ratios, HolderReport, OscillationSample, PointKind, SlopeFit,
    SpikeRatio,
};
pub use spectrum::{spectrum, Dimension, SpectrumPoint};
