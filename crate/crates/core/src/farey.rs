//! Enumeration of rationals by denominator.
//!
//! [`farey_in_interval`] walks the Farey sequence `F_n` restricted to a closed
//! interval with the classical next-term recurrence. [`min_denominator_in_interval`]
//! finds the rational of least denominator in a closed interval by descending
//! the Stern–Brocot tree one run of equal turns at a time, which is the same as
//! expanding both endpoints as continued fractions until they disagree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// All reduced `p/q` with `lo <= p/q <= hi` and `q <= qmax`, increasing.
pub fn farey_in_interval(lo: &Rational, hi: &Rational, qmax: u64) -> Result<Vec<Rational>> {
    if lo > hi {
        return Err(Error::domain(format!("empty interval [{lo}, {hi}]")));
    }
    if qmax == 0 {
        return Err(Error::domain("qmax must be at least 1"));
    }
    let n = BigInt::from(qmax);

    // Smallest member of F_n that is >= lo.
    let mut first: Option<(BigInt, BigInt)> = None;
    for q in 1..=qmax {
        let q = BigInt::from(q);
        let p = (lo.numer() * &q).div_ceil(lo.denom());
        let better = match &first {
            None => true,
            Some((a, b)) => &p * b < a * &q,
        };
        if better {
            first = Some((p, q));
        }
    }
    let (p, q) = first.expect("qmax >= 1");
    let g = p.gcd(&q);
    let (mut a, mut b) = (p / &g, q / &g);

    let mut out = Vec::new();
    if !within(&a, &b, hi) {
        return Ok(out);
    }
    let (mut c, mut d) = farey_successor(&a, &b, &n);
    out.push(Rational::new_raw(a.clone(), b.clone()));
    while within(&c, &d, hi) {
        out.push(Rational::new_raw(c.clone(), d.clone()));
        let k = (&n + &b) / &d;
        let e = &k * &c - &a;
        let f = &k * &d - &b;
        a = std::mem::replace(&mut c, e);
        b = std::mem::replace(&mut d, f);
    }
    Ok(out)
}

fn within(p: &BigInt, q: &BigInt, hi: &Rational) -> bool {
    p * hi.denom() <= hi.numer() * q
}

/// Right neighbour of `a/b` in `F_n`: the `c/d` with `cb - ad = 1` and the
/// largest `d <= n`.
fn farey_successor(a: &BigInt, b: &BigInt, n: &BigInt) -> (BigInt, BigInt) {
    if b.is_one() {
        return (a * n + 1, n.clone());
    }
    // d ≡ -a⁻¹ (mod b)
    let inv = mod_inverse(&a.mod_floor(b), b);
    let r = (-inv).mod_floor(b);
    let d = &r + b * ((n - &r).div_floor(b));
    let c = (a * &d + 1) / b;
    (c, d)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// The rational of least denominator in the closed interval `[lo, hi]`.
///
/// Among positive rationals the returned value also has the least numerator,
/// which is what makes the reciprocal step below valid.
pub fn min_denominator_in_interval(lo: &Rational, hi: &Rational) -> Result<Rational> {
    if lo > hi {
        return Err(Error::domain(format!("empty interval [{lo}, {hi}]")));
    }
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let mut terms: Vec<BigInt> = Vec::new();
    let tip = loop {
        let c = lo.ceil();
        if Rational::from_integer(c.clone()) <= hi {
            break c;
        }
        let f = Rational::from_integer(lo.floor());
        let next_lo = (&hi - &f).recip()?;
        let next_hi = (&lo - &f).recip()?;
        terms.push(f.numer().clone());
        lo = next_lo;
        hi = next_hi;
    };

    // Fold the continued fraction [t0; t1, ..., tip] back up.
    let (mut p, mut q) = (tip, BigInt::one());
    for t in terms.into_iter().rev() {
        let np = &t * &p + &q;
        q = p;
        p = np;
    }
    if q.is_negative() {
        p = -p;
        q = -q;
    }
    debug_assert!(!q.is_zero());
    Ok(Rational::new_raw(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    /// Double loop over every p/q, reduce, sort, dedup.
    fn brute_force(lo: &Rational, hi: &Rational, qmax: i64) -> Vec<Rational> {
        let mut v = Vec::new();
        for q in 1..=qmax {
            let pmin = (lo.numer() * q).div_ceil(lo.denom());
            let pmax = (hi.numer() * q).div_floor(hi.denom());
            let mut p = pmin;
            while p <= pmax {
                v.push(Rational::new(p.clone(), q).unwrap());
                p += 1;
            }
        }
        v.sort();
        v.dedup();
        v
    }

    fn euler_phi(n: u64) -> u64 {
        (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
    }

    #[test]
    fn farey_examples() {
        assert_eq!(farey_in_interval(&r(0, 1), &r(1, 1), 1).unwrap(), vec![r(0, 1), r(1, 1)]);
        assert_eq!(
            farey_in_interval(&r(0, 1), &r(1, 1), 3).unwrap(),
            vec![r(0, 1), r(1, 3), r(1, 2), r(2, 3), r(1, 1)]
        );
        assert_eq!(farey_in_interval(&r(0, 1), &r(1, 1), 5).unwrap().len(), 11);
    }

    #[test]
    fn farey_cardinality_matches_totient_sum() {
        for qmax in 1..=30u64 {
            let got = farey_in_interval(&r(0, 1), &r(1, 1), qmax).unwrap();
            let expected = 1 + (1..=qmax).map(euler_phi).sum::<u64>();
            assert_eq!(got.len() as u64, expected, "F_{qmax}");
            assert_eq!(got, brute_force(&r(0, 1), &r(1, 1), qmax as i64));
        }
    }

    #[test]
    fn farey_on_negative_and_degenerate_intervals() {
        let lo = r(-7, 4);
        let hi = r(-3, 5);
        assert_eq!(farey_in_interval(&lo, &hi, 6).unwrap(), brute_force(&lo, &hi, 6));
        // no member of F_2 inside (1/3, 2/5)
        assert!(farey_in_interval(&(&r(1, 3) + &r(1, 100)), &r(2, 5), 2).unwrap().is_empty());
        assert!(farey_in_interval(&r(1, 2), &r(1, 3), 5).is_err());
    }

    #[test]
    fn min_denominator_examples() {
        assert_eq!(min_denominator_in_interval(&r(2, 5), &r(3, 5)).unwrap(), r(1, 2));
        assert_eq!(min_denominator_in_interval(&r(3, 5), &r(7, 10)).unwrap(), r(2, 3));
        assert_eq!(min_denominator_in_interval(&r(9, 10), &r(11, 10)).unwrap(), r(1, 1));
    }

    #[test]
    fn min_denominator_closed_endpoints_and_negatives() {
        assert_eq!(min_denominator_in_interval(&r(1, 3), &r(1, 3)).unwrap(), r(1, 3));
        assert_eq!(min_denominator_in_interval(&r(1, 3), &r(2, 5)).unwrap(), r(1, 3));
        assert_eq!(
            min_denominator_in_interval(&r(-3, 5), &r(-7, 12)).unwrap().denom(),
            &BigInt::from(5)
        );
        assert!(min_denominator_in_interval(&r(1, 2), &r(1, 3)).is_err());
    }

    proptest! {
        #[test]
        fn min_denominator_agrees_with_brute_force(
            a in -300i64..300, b in 1i64..60, w in 0i64..50, c in 1i64..80,
        ) {
            let lo = r(a, b);
            let hi = &lo + &r(w, c);
            let got = min_denominator_in_interval(&lo, &hi).unwrap();
            prop_assert!(lo <= got && got <= hi);
            let qmax = got.denom().clone().try_into().unwrap();
            let rivals = brute_force(&lo, &hi, qmax);
            prop_assert!(rivals.iter().all(|x| x.denom() >= got.denom()));
        }

        #[test]
        fn farey_matches_brute_force(a in -50i64..50, b in 1i64..20, w in 0i64..30, c in 1i64..20, qmax in 1i64..25) {
            let lo = r(a, b);
            let hi = &lo + &r(w, c);
            prop_assert_eq!(farey_in_interval(&lo, &hi, qmax as u64).unwrap(), brute_force(&lo, &hi, qmax));
        }
    }
}
