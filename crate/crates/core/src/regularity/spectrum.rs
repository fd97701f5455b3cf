//! Hölder spectrum `h ↦ dim {x : H(x) = h}` of `f_θ`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::thomae::ThomaeParams;

/// Hausdorff dimension, with `-∞` for the empty set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Dimension {
    Finite(f64),
    NegInfinity,
}

impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dimension::Finite(d) => s.serialize_f64(*d),
            Dimension::NegInfinity => s.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Dimension {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(x) => Ok(Dimension::Finite(x)),
            Raw::Str(s) if s == "-inf" => Ok(Dimension::NegInfinity),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad dimension `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumPoint {
    pub h: f64,
    pub dim: Dimension,
}

/// `2h/θ` on `[0, θ/2]`, `-∞` elsewhere. Follows from `dim {τ = t} = 2/t`
/// and `H = θ/τ`.
pub fn spectrum(h: f64, params: &ThomaeParams) -> Result<SpectrumPoint> {
    if h.is_nan() || h < 0.0 || h.is_infinite() {
        return Err(Error::domain(format!("Hölder exponents are >= 0, got {h}")));
    }
    let theta = params.theta_f64();
    let dim = if h <= theta / 2.0 {
        Dimension::Finite((2.0 * h / theta).min(1.0))
    } else {
        Dimension::NegInfinity
    };
    Ok(SpectrumPoint { h, dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn theta(p: i64, q: i64) -> ThomaeParams {
        ThomaeParams::new(Rational::new(p, q).unwrap()).unwrap()
    }

    #[test]
    fn endpoints() {
        for t in [theta(1, 2), theta(1, 1), theta(2, 1), theta(1, 3)] {
            let half = t.theta_f64() / 2.0;
            assert_eq!(spectrum(0.0, &t).unwrap().dim, Dimension::Finite(0.0));
            assert_eq!(spectrum(half, &t).unwrap().dim, Dimension::Finite(1.0));
            assert_eq!(spectrum(half + 0.01, &t).unwrap().dim, Dimension::NegInfinity);
        }
        assert_eq!(spectrum(0.6, &theta(1, 1)).unwrap().dim, Dimension::NegInfinity);
        assert_eq!(spectrum(0.25, &theta(1, 1)).unwrap().dim, Dimension::Finite(0.5));
        assert!(spectrum(-0.1, &theta(1, 1)).is_err());
    }

    #[test]
    fn json_form() {
        let p = spectrum(0.6, &theta(1, 1)).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"h":0.6,"dim":"-inf"}"#);
        assert_eq!(serde_json::from_str::<SpectrumPoint>(&s).unwrap(), p);
    }
}
