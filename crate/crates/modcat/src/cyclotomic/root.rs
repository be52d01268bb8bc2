//! Roots of unity as rational exponents.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::CycError;

/// A root of unity `e^{2 pi i r}` stored as the exponent `r`, a rational
/// number reduced to lowest terms in `[0, 1)`.
///
/// Twist tables and quadratic-form tables are tables of these; they embed
/// into [`super::CycNumber`] only when sums are needed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    /// The trivial root `1` (exponent `0/1`).
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };
    /// `-1` (exponent `1/2`).
    pub const MINUS_ONE: RootOfUnity = RootOfUnity { num: 1, den: 2 };
    /// `i` (exponent `1/4`).
    pub const I: RootOfUnity = RootOfUnity { num: 1, den: 4 };
    /// `-i` (exponent `3/4`).
    pub const MINUS_I: RootOfUnity = RootOfUnity { num: 3, den: 4 };

    /// Builds `e^{2 pi i num/den}`, reducing the exponent mod 1 to lowest
    /// terms. `den` must be nonzero.
    pub fn new(num: i64, den: i64) -> RootOfUnity {
        assert!(den != 0, "root of unity with zero denominator");
        let (mut num, mut den) = (num as i128, den as i128);
        if den < 0 {
            num = -num;
            den = -den;
        }
        num = num.rem_euclid(den);
        let g = (num as u64).gcd(&(den as u64)).max(1);
        RootOfUnity {
            num: num as u64 / g,
            den: den as u64 / g,
        }
    }

    /// Exponent numerator (reduced, `0 <= num < den`).
    pub fn numer(&self) -> u64 {
        self.num
    }

    /// Exponent denominator; equals the multiplicative order.
    pub fn denom(&self) -> u64 {
        self.den
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let den = (self.den as i128 * other.den as i128) as i64;
        let num = self.num as i128 * other.den as i128 + other.num as i128 * self.den as i128;
        RootOfUnity::new(num as i64, den)
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(-(self.num as i64), self.den as i64)
    }

    /// `self^k` for any integer `k` (negative exponents invert).
    pub fn pow(&self, k: i64) -> RootOfUnity {
        let num = (self.num as i128 * k as i128).rem_euclid(self.den as i128);
        RootOfUnity::new(num as i64, self.den as i64)
    }

    /// Numeric value under the canonical embedding, as `(re, im)`.
    /// Display/oracle use only; never consulted for equality.
    pub fn eval_f64(&self) -> (f64, f64) {
        let t = 2.0 * std::f64::consts::PI * (self.num as f64) / (self.den as f64);
        (t.cos(), t.sin())
    }

    /// Parses the serialized form `"a/b"` (also accepts a bare integer
    /// `"a"`, meaning exponent `a/1`, i.e. the value 1).
    pub fn parse(s: &str) -> Result<RootOfUnity, CycError> {
        s.parse()
    }
}

impl FromStr for RootOfUnity {
    type Err = CycError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: i64 = n
            .parse()
            .map_err(|_| CycError::BadExponent(s.to_string()))?;
        let den: i64 = d
            .parse()
            .map_err(|_| CycError::BadExponent(s.to_string()))?;
        if den == 0 {
            return Err(CycError::BadExponent(s.to_string()));
        }
        Ok(RootOfUnity::new(num, den))
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e(2pi i * {}/{})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(RootOfUnity::new(2, 4), RootOfUnity::new(1, 2));
        assert_eq!(RootOfUnity::new(-1, 4), RootOfUnity::new(3, 4));
        assert_eq!(RootOfUnity::new(5, 5), RootOfUnity::ONE);
        assert_eq!(RootOfUnity::new(3, -6), RootOfUnity::new(1, 2));
    }

    #[test]
    fn group_law() {
        let z8 = RootOfUnity::new(1, 8);
        assert_eq!(z8.pow(4), RootOfUnity::MINUS_ONE);
        assert_eq!(z8.mul(&z8.inv()), RootOfUnity::ONE);
        assert_eq!(z8.pow(8), RootOfUnity::ONE);
        assert_eq!(RootOfUnity::I.mul(&RootOfUnity::I), RootOfUnity::MINUS_ONE);
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0/1", "1/2", "3/4", "5/8"] {
            let r = RootOfUnity::parse(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!(RootOfUnity::parse("2/8").unwrap().to_string(), "1/4");
        assert!(RootOfUnity::parse("x/2").is_err());
        assert!(RootOfUnity::parse("1/0").is_err());
    }
}
