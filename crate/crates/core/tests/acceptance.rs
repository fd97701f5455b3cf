//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use thomae::regularity::{
    boyd_indices, dyadic_scales, holder_estimate_convergents, holder_estimate_oscillation,
    spectrum, spike_ratios, BoydFunction, BoydGrid, Dimension,
};
use thomae::{
    continuity_delta, convergents, difference_quotient, eval, expand, farey_in_interval,
    hurwitz_check, make_constant, min_denominator_in_interval, synthesize_prescribed_tau,
    tau_sequence, upper_darboux, CertifiedReal, Constant, Rational, ThomaeParams,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

fn theta(p: i64, q: i64) -> ThomaeParams {
    ThomaeParams::new(r(p, q)).unwrap()
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

fn farey_oracle() -> Outcome {
    for q in 1..=30u64 {
        let got = farey_in_interval(&r(0, 1), &r(1, 1), q).unwrap().len() as u64;
        let want = 1 + (1..=q).map(totient).sum::<u64>();
        if got != want {
            return Err(format!("|F_{q}| = {got}, expected {want}"));
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_f4e7);
    let mut checked = 0;
    while checked < 1000 {
        let den = rng.random_range(2..=20_000i64);
        let a = rng.random_range(1..den);
        let width = rng.random_range(1..=den / 50 + 1);
        let b = (a + width).min(den - 1);
        if b <= a {
            continue;
        }
        let (lo, hi) = (r(a, den), r(b, den));
        // brute force: the first q with an integer multiple of 1/q in [lo, hi]
        let brute = (1..=200i64).find_map(|q| {
            let p = (lo.as_big() * BigInt::from(q)).ceil().to_integer();
            let c = Rational::new(p, q).unwrap();
            (c <= hi).then_some(c)
        });
        let Some(expected) = brute else { continue };
        let got = min_denominator_in_interval(&lo, &hi).unwrap();
        if got != expected {
            return Err(format!("[{lo}, {hi}]: got {got}, brute force {expected}"));
        }
        checked += 1;
    }
    Ok("Q <= 30 cardinalities; 1000 random intervals".into())
}

fn best_approximation() -> Outcome {
    let mut count = 0;
    for c in [Constant::GoldenConj, Constant::Sqrt2m1, Constant::EFrac] {
        let x = make_constant(c, 200).unwrap();
        let convs = convergents(&expand(&x, 60).unwrap());
        for cv in convs.iter().filter(|cv| cv.q <= BigInt::from(500)) {
            let (_, d_conv) = x.distance_bounds(&cv.value());
            let q = cv.q.to_i64().unwrap();
            for b in 1..=q {
                // only the two numerators bracketing x·b can be closest
                let base = (x.mid.as_big() * BigInt::from(b)).floor().to_integer();
                for k in -1..=2 {
                    let rival = Rational::new(&base + k, b).unwrap();
                    if rival == cv.value() {
                        continue;
                    }
                    let (d_rival, _) = x.distance_bounds(&rival);
                    if d_conv >= d_rival {
                        return Err(format!("{c}: {}/{} does not beat {rival}", cv.p, cv.q));
                    }
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} convergents with q <= 500 beat every rival"))
}

fn tau_estimates() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for c in [Constant::GoldenConj, Constant::Sqrt2m1] {
        let x = make_constant(c, 200).unwrap();
        let convs = convergents(&expand(&x, 200).unwrap());
        let est = tau_sequence(&x, &convs).unwrap();
        ok &= convs.len() >= 30 && (1.95..=2.05).contains(&est.tau_hat);
        parts.push(format!("{c} tau_hat={:.4} ({} convergents)", est.tau_hat, convs.len()));
    }
    for t in [3.0, 4.0] {
        let s = synthesize_prescribed_tau(t, 12).unwrap();
        let convs = convergents(&expand(&s.value, 12).unwrap());
        let est = tau_sequence(&s.value, &convs).unwrap();
        ok &= convs.len() >= 12 && (est.tau_hat - t).abs() <= 0.1 * t;
        parts.push(format!("t={t} tau_hat={:.4}", est.tau_hat));
    }
    check(ok, parts.join(", "))
}

fn hurwitz_density() -> Outcome {
    let x = make_constant(Constant::GoldenConj, 200).unwrap();
    let convs = convergents(&expand(&x, 30).unwrap());
    if convs.len() < 30 {
        return Err(format!("only {} certified convergents", convs.len()));
    }
    let pass: Vec<bool> = convs.iter().map(|c| hurwitz_check(&x, c).unwrap()).collect();
    let n = pass.iter().filter(|&&p| p).count();
    let windows = pass.windows(3).all(|w| w.iter().any(|&p| p));
    check(n >= 10 && windows, format!("{n}/30 pass, every window of 3 covered: {windows}"))
}

fn continuity_witness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xc0_47_1e);
    let scale = BigInt::from(10u32).pow(100);
    let rad = Rational::new(BigInt::one(), scale.clone()).unwrap();
    let params = theta(1, 1);
    let mut witnesses = 0;
    for _ in 0..20 {
        let digits: String =
            (0..100).map(|_| char::from(b'0' + rng.random_range(0..10u8))).collect();
        let mid = Rational::new(digits.parse::<BigInt>().unwrap(), scale.clone()).unwrap();
        let x = CertifiedReal::new(mid, rad.clone()).unwrap();
        for eps in [r(3, 10), r(1, 10), r(1, 100)] {
            let w = continuity_delta(&x, &eps, &params).map_err(|e| format!("{x}: {e}"))?;
            let lo = &x.lo() - &w.delta;
            let hi = &x.hi() + &w.delta;
            let inside =
                farey_in_interval(&lo, &hi, w.n).unwrap().into_iter().find(|f| *f > lo && *f < hi);
            if let Some(f) = inside {
                return Err(format!("{f} (q <= {}) inside the δ-window of {x} at ε={eps}", w.n));
            }
            witnesses += 1;
        }
    }
    Ok(format!("{witnesses} witnesses confirmed"))
}

fn non_differentiability() -> Outcome {
    let x = make_constant(Constant::GoldenConj, 200).unwrap();
    let convs = convergents(&expand(&x, 200).unwrap());
    let mut parts = Vec::new();
    let mut ok = true;
    for (t, power) in [(theta(1, 2), r(3, 2)), (theta(1, 1), r(1, 1)), (theta(2, 1), r(0, 1))] {
        let mut max = 0f64;
        let mut above_power = true;
        let mut above_1000 = false;
        let mut used = 0;
        for c in &convs {
            let Ok(dq) = difference_quotient(&x, &c.value(), &t) else { continue };
            used += 1;
            max = max.max(dq.value);
            above_power &= dq.exceeds_denominator_power(&power);
            above_1000 |= dq.exceeds(&r(1000, 1));
        }
        let pass = if t.theta < r(2, 1) { above_1000 && above_power } else { above_power };
        ok &= pass && used >= 30;
        parts.push(format!(
            "θ={}: max {max:.3e} over {used}, all > q^{power}: {above_power}",
            t.theta
        ));
    }
    check(ok, parts.join("; "))
}

fn holder_exponents() -> Outcome {
    let x = make_constant(Constant::GoldenConj, 200).unwrap();
    let scales = dyadic_scales(5, 40);
    let mut parts = Vec::new();
    let mut ok = true;
    for t in [theta(1, 2), theta(1, 1), theta(2, 1)] {
        let half = t.theta_f64() / 2.0;
        let conv = holder_estimate_convergents(&x, &t, 200).unwrap();
        let osc = holder_estimate_oscillation(&x, &t, &scales).unwrap();
        let (ec, eo) = (conv.est_convergent.unwrap(), osc.est_oscillation.unwrap());
        let c = conv.constant_c.unwrap();
        ok &= (ec - half).abs() <= 0.05 && (eo - half).abs() <= 0.1 && c <= 10.0;
        parts.push(format!("θ={} conv={ec:.4} osc={eo:.4} C={c:.3}", t.theta));

        let convs = convergents(&expand(&x, 200).unwrap());
        let inflated = spike_ratios(&x, &convs, &t, ec + 0.1).unwrap();
        let peak = inflated.iter().map(|s| s.ln_ratio).fold(f64::NEG_INFINITY, f64::max);
        ok &= peak > 1000f64.ln();
        parts.push(format!("inflated peak {:.3e}", peak.exp()));
    }
    let sqrt2 = make_constant(Constant::Sqrt2m1, 200).unwrap();
    let c = holder_estimate_convergents(&sqrt2, &theta(1, 1), 200).unwrap().constant_c.unwrap();
    ok &= c <= 10.0;
    parts.push(format!("sqrt2m1 C={c:.3}"));
    for tt in [3.0, 4.0] {
        let s = synthesize_prescribed_tau(tt, 12).unwrap();
        let est = holder_estimate_convergents(&s.value, &theta(1, 1), 12)
            .unwrap()
            .est_convergent
            .unwrap();
        ok &= (est - 1.0 / tt).abs() <= 0.05;
        parts.push(format!("t={tt} conv={est:.4}"));
    }
    check(ok, parts.join("; "))
}

fn spectrum_formula() -> Outcome {
    for t in [theta(1, 2), theta(1, 1), theta(2, 1)] {
        let half = t.theta_f64() / 2.0;
        let a = spectrum(0.0, &t).unwrap().dim;
        let b = spectrum(half, &t).unwrap().dim;
        let c = spectrum(half + 0.01, &t).unwrap().dim;
        if (a, b, c) != (Dimension::Finite(0.0), Dimension::Finite(1.0), Dimension::NegInfinity) {
            return Err(format!("θ={}: {a:?}, {b:?}, {c:?}", t.theta));
        }
    }
    Ok("endpoints exact for θ ∈ {1/2, 1, 2}".into())
}

fn darboux_decay() -> Outcome {
    let params = theta(1, 1);
    let sums: Vec<Rational> =
        (0..=16).map(|k| upper_darboux(1 << k, &params).unwrap().exact.unwrap()).collect();
    let monotone = sums.windows(2).all(|w| w[1] <= w[0]);
    let first = sums.iter().position(|s| *s < r(1, 20));
    check(
        monotone && first.is_some(),
        format!(
            "non-increasing: {monotone}; first below 0.05 at {}; U(2^16) = {:.5}",
            first.map_or("none".to_string(), |k| format!("2^{k}")),
            sums[16].to_f64()
        ),
    )
}

fn boyd_index_convergence() -> Outcome {
    let grid = BoydGrid { points_per_decade: 200, ..BoydGrid::default() };
    let mut parts = Vec::new();
    let mut ok = true;
    for (t, g) in [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0)] {
        let ix =
            boyd_indices(&BoydFunction::new(t, g).unwrap(), &[1e-2, 1e-4, 1e-8], grid).unwrap();
        ok &= (ix.s_lower - t).abs() <= 0.05 && (ix.s_upper - t).abs() <= 0.05;
        parts.push(format!("(θ={t}, γ={g}) s_lower={:.4} s_upper={:.4}", ix.s_lower, ix.s_upper));
    }
    let pure = boyd_indices(&BoydFunction::pure_power(1.5).unwrap(), &[1e-8], grid).unwrap();
    ok &= pure.s_lower == 1.5 && pure.s_upper == 1.5;
    parts.push(format!("pure power ({}, {})", pure.s_lower, pure.s_upper));
    check(ok, parts.join("; "))
}

fn periodicity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x9e71_0d1c);
    let params = [theta(1, 2), theta(1, 1), theta(2, 1), theta(3, 7)];
    for i in 0..1000 {
        let q = rng.random_range(1..=1_000_000i64);
        let p = rng.random_range(-3 * q..=3 * q);
        let x = r(p, q);
        let t = &params[i % params.len()];
        let shifted = &x + &r(1, 1);
        if eval(&x, t) != eval(&shifted, t) {
            return Err(format!("f({x}) != f({shifted}) at θ={}", t.theta));
        }
    }
    Ok("1000 random fractions".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("farey oracle agreement", farey_oracle),
        ("best-approximation law", best_approximation),
        ("tau estimates", tau_estimates),
        ("hurwitz density", hurwitz_density),
        ("continuity witness", continuity_witness),
        ("non-differentiability", non_differentiability),
        ("holder exponents", holder_exponents),
        ("spectrum formula", spectrum_formula),
        ("darboux decay", darboux_decay),
        ("boyd indices", boyd_index_convergence),
        ("periodicity", periodicity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name} [{secs:.1}s]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name} [{secs:.1}s]: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
