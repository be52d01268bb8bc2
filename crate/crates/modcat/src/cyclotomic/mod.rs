//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! [`RootOfUnity`] keeps a root of unity as a rational exponent mod 1;
//! [`CycNumber`] is a general field element in the power basis of
//! `Q[x]/Phi_N(x)`, reduced to its minimal conductor so that equal field
//! elements have identical representations. All operations are exact;
//! numeric evaluation exists for display and for oracle checks only.

mod number;
mod poly;
mod root;

pub use number::CycNumber;
pub use poly::{cyclotomic_polynomial, euler_phi, factorize, prime_divisors};
pub use root::RootOfUnity;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse root-of-unity exponent {0:?} (expected \"a/b\")")]
    BadExponent(String),
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
    #[error("conductor {0} is invalid (must be 1 or an integer >= 3, not 2 mod 4)")]
    BadConductor(u64),
    #[error("coefficient list has length {got}, conductor {conductor} needs {want}")]
    BadCoefficientCount { conductor: u64, got: usize, want: usize },
}

/// Embeds a root of unity as a cyclotomic field element.
pub fn embed(r: RootOfUnity) -> CycNumber {
    CycNumber::from_root(r)
}

/// Recognizes a field element that is a root of unity and returns its
/// exponent. The roots of unity of `Q(zeta_N)` are exactly `±zeta_N^k`.
pub fn is_root_of_unity(a: &CycNumber) -> Option<RootOfUnity> {
    a.as_root_of_unity()
}

/// The square root of a positive integer, positive under the canonical
/// embedding `zeta_N = e^{2 pi i / N}`.
///
/// Built multiplicatively from quadratic Gauss sums: `sqrt(2)` is
/// `zeta_8 + zeta_8^{-1}`, and for an odd prime `p` the quadratic-residue
/// sum in `Q(zeta_p)` gives `sqrt(p)` directly when `p = 1 mod 4` and
/// `i*sqrt(p)` when `p = 3 mod 4`. Square-full parts are extracted as
/// integers.
pub fn sqrt_int(n: u64) -> CycNumber {
    assert!(n >= 1, "sqrt_int needs a positive integer");
    let mut result = CycNumber::from_u64(1);
    for (p, e) in factorize(n) {
        let half = p.pow(e / 2);
        result = result.mul(&CycNumber::from_u64(half));
        if e % 2 == 1 {
            result = result.mul(&sqrt_prime(p));
        }
    }
    result
}

fn sqrt_prime(p: u64) -> CycNumber {
    if p == 2 {
        let z8 = embed(RootOfUnity::new(1, 8));
        return z8.add(&z8.inv().unwrap());
    }
    // Quadratic Gauss sum over Z/p.
    let mut acc = CycNumber::zero();
    for t in 1..p {
        let term = embed(RootOfUnity::new(t as i64, p as i64));
        if legendre(t, p) == 1 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    if p % 4 == 1 {
        acc
    } else {
        // The residue sum equals i*sqrt(p); divide out i.
        acc.mul(&embed(RootOfUnity::MINUS_I))
    }
}

fn legendre(mut t: u64, p: u64) -> i32 {
    t %= p;
    let mut r = 1u64;
    let mut base = t;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else if r == p - 1 {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_special_values() {
        assert!(embed(RootOfUnity::ONE).is_one());
        assert_eq!(embed(RootOfUnity::MINUS_ONE), CycNumber::from_i64(-1));
        let z8 = embed(RootOfUnity::new(1, 8));
        assert_eq!(z8.pow(4), CycNumber::from_i64(-1));
        assert_eq!(z8.conductor(), 8);
    }

    #[test]
    fn embed_halves_even_denominators() {
        // exponent 1/6: conductor must land on 3, not 6
        let z6 = embed(RootOfUnity::new(1, 6));
        assert_eq!(z6.conductor(), 3);
        assert_eq!(z6.pow(6), CycNumber::from_u64(1));
        assert_eq!(z6.pow(3), CycNumber::from_i64(-1));
        let (re, im) = z6.eval_f64();
        assert!((re - 0.5).abs() < 1e-12 && (im - 0.75f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn root_detection() {
        assert_eq!(
            is_root_of_unity(&CycNumber::from_i64(-1)),
            Some(RootOfUnity::MINUS_ONE)
        );
        assert_eq!(is_root_of_unity(&CycNumber::from_u64(2)), None);
        assert_eq!(is_root_of_unity(&CycNumber::zero()), None);
        // (1+i)/sqrt(2) = zeta_8
        let v = CycNumber::from_u64(1)
            .add(&embed(RootOfUnity::I))
            .div(&sqrt_int(2))
            .unwrap();
        assert_eq!(is_root_of_unity(&v), Some(RootOfUnity::new(1, 8)));
    }

    #[test]
    fn root_detection_matches_power_test() {
        // roots of unity in Q(zeta_N) satisfy a^(2N) = 1; cross-check on a
        // mixed bag of elements
        let mut samples = vec![
            CycNumber::from_u64(2),
            CycNumber::zero(),
            sqrt_int(2),
            sqrt_int(3),
        ];
        for d in 1..=12i64 {
            for a in 0..d {
                samples.push(embed(RootOfUnity::new(a, d)));
            }
        }
        let minus = CycNumber::from_i64(-1);
        samples.push(sqrt_int(2).div(&CycNumber::from_u64(2)).unwrap() * /* (1+i)/2-ish */ minus);
        for s in &samples {
            let n = s.conductor();
            let brute = !s.is_zero() && s.pow(2 * n as u32).is_one();
            assert_eq!(
                is_root_of_unity(s).is_some(),
                brute,
                "mismatch for {s:?} (conductor {n})"
            );
        }
    }

    #[test]
    fn sqrt_squares_exactly() {
        for n in 1..=100u64 {
            let s = sqrt_int(n);
            assert_eq!(s.mul(&s), CycNumber::from_u64(n), "sqrt({n})^2");
        }
    }

    #[test]
    fn sqrt_is_positive_numerically() {
        for n in 1..=100u64 {
            let (re, im) = sqrt_int(n).eval_f64();
            let expect = (n as f64).sqrt();
            assert!(
                (re - expect).abs() < 1e-9 && im.abs() < 1e-9,
                "sqrt({n}) evaluated to ({re}, {im})"
            );
        }
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_int(4), CycNumber::from_u64(2));
        let z8 = embed(RootOfUnity::new(1, 8));
        assert_eq!(sqrt_int(2), z8.add(&z8.inv().unwrap()));
        assert_eq!(
            sqrt_int(18),
            CycNumber::from_u64(3).mul(&z8.add(&z8.inv().unwrap()))
        );
    }
}
