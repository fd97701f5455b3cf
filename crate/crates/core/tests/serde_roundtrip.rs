use serde::de::DeserializeOwned;
use serde::Serialize;

use thomae::regularity::{
    boyd_bounds, boyd_indices, dyadic_scales, holder_estimate_convergents,
    holder_estimate_oscillation, spectrum, BoydFunction, BoydGrid, HolderReport,
};
use thomae::{
    continuity_delta, convergents, expand, make_constant, synthesize_prescribed_tau, tau_sequence,
    upper_darboux, Constant, Rational, ThomaeParams,
};

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(v: &T) {
    let s = serde_json::to_string(v).unwrap();
    let back: T = serde_json::from_str(&s).unwrap();
    assert_eq!(&back, v);
    assert_eq!(serde_json::to_string(&back).unwrap(), s);
}

#[test]
fn report_types_round_trip() {
    let params = ThomaeParams::new(Rational::new(3, 2).unwrap()).unwrap();
    let x = make_constant(Constant::GoldenConj, 120).unwrap();
    round_trip(&x);
    round_trip(&params);

    let cf = expand(&x, 80).unwrap();
    round_trip(&cf);
    let convs = convergents(&cf);
    round_trip(&convs);
    round_trip(&tau_sequence(&x, &convs).unwrap());

    let conv = holder_estimate_convergents(&x, &params, 80).unwrap();
    let osc = holder_estimate_oscillation(&x, &params, &dyadic_scales(5, 30)).unwrap();
    let merged: HolderReport = conv.merge(osc).with_theoretical(2.0).unwrap();
    round_trip(&merged);

    round_trip(&spectrum(0.2, &params).unwrap());
    round_trip(&spectrum(0.9, &params).unwrap());
    round_trip(&upper_darboux(12, &ThomaeParams::default()).unwrap());
    round_trip(&continuity_delta(&x, &Rational::new(1, 10).unwrap(), &params).unwrap());
    round_trip(&synthesize_prescribed_tau(3.0, 7).unwrap());

    let phi = BoydFunction::new(1.0, 1.0).unwrap();
    round_trip(&boyd_bounds(&phi, 0.5, BoydGrid::default()).unwrap());
    round_trip(&boyd_indices(&phi, &[1e-2, 1e-3], BoydGrid::default()).unwrap());
}

#[test]
fn big_integers_serialize_as_strings() {
    let s = synthesize_prescribed_tau(3.0, 9).unwrap();
    let v = serde_json::to_value(&s).unwrap();
    let digits = v["digits"].as_array().unwrap();
    assert_eq!(digits[4], "27");
    assert!(digits.iter().all(|d| d.is_string()));
    assert!(v["value"]["mid"].is_string());
}

#[test]
fn holder_constant_field_name() {
    let x = make_constant(Constant::Sqrt2m1, 100).unwrap();
    let rep = holder_estimate_convergents(&x, &ThomaeParams::default(), 60).unwrap();
    let v = serde_json::to_value(&rep).unwrap();
    assert!(v.get("constant_C").is_some_and(|c| c.is_f64()));
}
