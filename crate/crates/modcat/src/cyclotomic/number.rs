//! Field elements of `Q(zeta_N)` with canonical representation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{self, euler_phi, prime_divisors};
use super::{CycError, RootOfUnity};

/// An element of a cyclotomic field, stored as `conductor` plus the
/// coefficient vector over the power basis `1, x, ..., x^{phi(N)-1}` of
/// `Q[x]/Phi_N(x)`.
///
/// Representations are canonical: coefficients are reduced mod `Phi_N` and
/// the conductor is minimal (1, or `>= 3` and never `2 mod 4`), so
/// structural equality is field equality. Mixed-conductor arithmetic lifts
/// to the lcm and re-minimizes; nothing is ever truncated.
#[derive(Clone, PartialEq, Eq)]
pub struct CycNumber {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl CycNumber {
    pub fn zero() -> CycNumber {
        CycNumber {
            conductor: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn from_rational(q: BigRational) -> CycNumber {
        CycNumber {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_i64(v: i64) -> CycNumber {
        Self::from_rational(BigRational::from(BigInt::from(v)))
    }

    pub fn from_u64(v: u64) -> CycNumber {
        Self::from_rational(BigRational::from(BigInt::from(v)))
    }

    /// Builds an element from raw data, reducing to canonical form.
    /// `coeffs` are coefficients of powers `x^0..x^{len-1}` of `zeta_n`
    /// (any length up to `n` is accepted).
    pub fn from_power_coeffs(n: u64, coeffs: &[BigRational]) -> Result<CycNumber, CycError> {
        if n == 0 || (n != 1 && (n == 2 || n % 4 == 2)) {
            return Err(CycError::BadConductor(n));
        }
        Ok(Self::reduce_raw(n, coeffs))
    }

    /// Parses serialized form: conductor plus coefficients over the
    /// canonical basis (must have exactly `phi(n)` entries).
    pub fn from_basis_coeffs(n: u64, coeffs: Vec<BigRational>) -> Result<CycNumber, CycError> {
        if n == 0 || (n != 1 && (n == 2 || n % 4 == 2)) {
            return Err(CycError::BadConductor(n));
        }
        let want = euler_phi(n) as usize;
        if coeffs.len() != want {
            return Err(CycError::BadCoefficientCount {
                conductor: n,
                got: coeffs.len(),
                want,
            });
        }
        let mut v = CycNumber {
            conductor: n,
            coeffs,
        };
        v.minimize();
        Ok(v)
    }

    pub(super) fn from_root(r: RootOfUnity) -> CycNumber {
        let (a, b) = (r.numer(), r.denom());
        if b == 1 {
            return CycNumber::from_u64(1);
        }
        if b == 2 {
            return CycNumber::from_i64(-1);
        }
        if b % 4 == 2 {
            // e^{2 pi i a/(2m)} = -zeta_m^{(a+m)/2} for odd m
            let m = b / 2;
            let j = ((a + m) / 2) % m;
            let mut v = Self::monomial(m, j);
            v.negate();
            return v;
        }
        Self::monomial(b, a)
    }

    fn monomial(n: u64, j: u64) -> CycNumber {
        let t = poly::table(n);
        let coeffs = t.rows[(j % n) as usize]
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        // a primitive n-th root already has minimal conductor
        CycNumber {
            conductor: n,
            coeffs,
        }
    }

    fn reduce_raw(n: u64, raw: &[BigRational]) -> CycNumber {
        let t = poly::table(n);
        let mut coeffs = vec![BigRational::zero(); t.phi];
        for (j, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.rows[j % n as usize];
            for i in 0..t.phi {
                if !row[i].is_zero() {
                    coeffs[i] += c * &row[i];
                }
            }
        }
        let mut v = CycNumber {
            conductor: n,
            coeffs,
        };
        v.minimize();
        v
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coefficients over the canonical basis of `Q(zeta_conductor)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    /// The rational value when the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn negate(&mut self) {
        for c in self.coeffs.iter_mut() {
            *c = -c.clone();
        }
    }

    /// Coefficients lifted into the conductor-`m` power space (length
    /// `phi(m)`), for `m` a multiple of the conductor.
    fn lift_coeffs(&self, m: u64) -> Vec<BigRational> {
        debug_assert!(m % self.conductor == 0);
        if m == self.conductor {
            return self.coeffs.clone();
        }
        let t = poly::table(m);
        let step = (m / self.conductor) as usize;
        let mut out = vec![BigRational::zero(); t.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.rows[(j * step) % m as usize];
            for i in 0..t.phi {
                if !row[i].is_zero() {
                    out[i] += c * &row[i];
                }
            }
        }
        out
    }

    fn common_conductor(a: u64, b: u64) -> u64 {
        a.lcm(&b)
    }

    pub fn add(&self, other: &CycNumber) -> CycNumber {
        let n = Self::common_conductor(self.conductor, other.conductor);
        let mut coeffs = self.lift_coeffs(n);
        for (i, c) in other.lift_coeffs(n).into_iter().enumerate() {
            coeffs[i] += c;
        }
        let mut v = CycNumber {
            conductor: n,
            coeffs,
        };
        v.minimize();
        v
    }

    pub fn sub(&self, other: &CycNumber) -> CycNumber {
        let mut o = other.clone();
        o.negate();
        self.add(&o)
    }

    pub fn mul(&self, other: &CycNumber) -> CycNumber {
        if self.is_zero() || other.is_zero() {
            return CycNumber::zero();
        }
        let n = Self::common_conductor(self.conductor, other.conductor);
        let a = self.lift_coeffs(n);
        let b = other.lift_coeffs(n);
        // convolution over powers; x^n = 1 in the quotient ring
        let mut raw = vec![BigRational::zero(); n as usize];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                raw[(i + j) % n as usize] += ca * cb;
            }
        }
        Self::reduce_raw(n, &raw)
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<CycNumber, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(CycNumber::from_rational(self.coeffs[0].recip()));
        }
        // extended Euclid in Q[x] against Phi_n
        let phi: Vec<BigRational> = poly::cyclotomic_polynomial(self.conductor)
            .into_iter()
            .map(BigRational::from)
            .collect();
        let inv = poly_mod_inverse(&self.coeffs, &phi).expect("nonzero element is invertible");
        Ok(Self::reduce_raw(self.conductor, &inv))
    }

    pub fn div(&self, other: &CycNumber) -> Result<CycNumber, CycError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Complex conjugation `zeta_N -> zeta_N^{-1}`.
    pub fn conjugate(&self) -> CycNumber {
        self.galois(self.conductor.saturating_sub(1).max(1))
    }

    /// The Galois automorphism `zeta_N -> zeta_N^k` (k coprime to N).
    pub fn galois(&self, k: u64) -> CycNumber {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor;
        let t = poly::table(n);
        let mut out = vec![BigRational::zero(); t.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.rows[((j as u64 * k) % n) as usize];
            for i in 0..t.phi {
                if !row[i].is_zero() {
                    out[i] += c * &row[i];
                }
            }
        }
        let mut v = CycNumber {
            conductor: n,
            coeffs: out,
        };
        v.minimize();
        v
    }

    pub fn pow(&self, mut e: u32) -> CycNumber {
        let mut base = self.clone();
        let mut acc = CycNumber::from_u64(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Recognizes `±zeta_N^k` and returns the exponent.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        if self.is_zero() {
            return None;
        }
        let n = self.conductor;
        if n == 1 {
            let c = &self.coeffs[0];
            if c.is_one() {
                return Some(RootOfUnity::ONE);
            }
            if (-c.clone()).is_one() {
                return Some(RootOfUnity::MINUS_ONE);
            }
            return None;
        }
        let t = poly::table(n);
        for k in 0..n {
            let row = &t.rows[k as usize];
            if coeffs_eq_int_row(&self.coeffs, row, 1) {
                return Some(RootOfUnity::new(k as i64, n as i64));
            }
            if coeffs_eq_int_row(&self.coeffs, row, -1) {
                return Some(
                    RootOfUnity::new(k as i64, n as i64).mul(&RootOfUnity::MINUS_ONE),
                );
            }
        }
        None
    }

    /// Numeric value under the canonical embedding `zeta_N = e^{2 pi i/N}`,
    /// as `(re, im)`. Display/oracle use only.
    pub fn eval_f64(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * (j as f64) / n;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }

    /// Reduces the conductor until minimal.
    fn minimize(&mut self) {
        loop {
            let n = self.conductor;
            if n == 1 {
                return;
            }
            let mut descended = false;
            for p in prime_divisors(n) {
                let mut m = n / p;
                if m != 1 && m % 4 == 2 {
                    m /= 2;
                }
                if m == n {
                    continue;
                }
                if self.try_descend(m) {
                    descended = true;
                    break;
                }
            }
            if !descended {
                return;
            }
        }
    }

    fn try_descend(&mut self, m: u64) -> bool {
        let n = self.conductor;
        if m == 1 {
            // rational iff fixed by the whole Galois group; equivalently all
            // conjugates equal, cheapest checked via the solver path below
        }
        // fixed-field test: sigma_k for every k = 1 mod m, gcd(k, n) = 1
        let mut k = 1 + m;
        while k < n {
            if k.gcd(&n) == 1 && !self.fixed_by(k) {
                return false;
            }
            k += m;
        }
        let solver = poly::descent_solver(n, m);
        match solver.solve(&self.coeffs) {
            Some(coeffs) => {
                self.conductor = m;
                self.coeffs = coeffs;
                true
            }
            None => false,
        }
    }

    fn fixed_by(&self, k: u64) -> bool {
        let n = self.conductor;
        let t = poly::table(n);
        let mut out = vec![BigRational::zero(); t.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.rows[((j as u64 * k) % n) as usize];
            for i in 0..t.phi {
                if !row[i].is_zero() {
                    out[i] += c * &row[i];
                }
            }
        }
        out == self.coeffs
    }

    /// Sums many values, canonicalizing once at the end.
    pub fn sum<I: IntoIterator<Item = CycNumber>>(items: I) -> CycNumber {
        let mut acc: Option<(u64, Vec<BigRational>)> = None;
        for item in items {
            acc = Some(match acc {
                None => (item.conductor, item.coeffs),
                Some((n, coeffs)) => {
                    let m = Self::common_conductor(n, item.conductor);
                    let mut lifted = CycNumber {
                        conductor: n,
                        coeffs,
                    }
                    .lift_coeffs(m);
                    for (i, c) in item.lift_coeffs(m).into_iter().enumerate() {
                        lifted[i] += c;
                    }
                    (m, lifted)
                }
            });
        }
        match acc {
            None => CycNumber::zero(),
            Some((n, coeffs)) => {
                let mut v = CycNumber {
                    conductor: n,
                    coeffs,
                };
                v.minimize();
                v
            }
        }
    }
}

fn coeffs_eq_int_row(coeffs: &[BigRational], row: &[BigInt], sign: i32) -> bool {
    coeffs.iter().zip(row).all(|(c, r)| {
        if !c.denom().is_one() {
            return false;
        }
        if sign > 0 {
            c.numer() == r
        } else {
            -c.numer() == *r
        }
    })
}

/// Inverse of `a` modulo the monic polynomial `m` over Q, via the extended
/// Euclidean algorithm. `None` when `gcd(a, m)` is not constant.
fn poly_mod_inverse(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    type Poly = Vec<BigRational>;
    fn deg(p: &Poly) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn rem_quot(mut num: Poly, den: &Poly) -> (Poly, Poly) {
        let dd = deg(den).expect("division by zero polynomial");
        let lead = den[dd].clone();
        let mut quot = vec![BigRational::zero(); num.len()];
        while let Some(nd) = deg(&num) {
            if nd < dd {
                break;
            }
            let c = &num[nd] / &lead;
            for i in 0..=dd {
                let t = &c * &den[i];
                num[nd - dd + i] -= t;
            }
            quot[nd - dd] = c;
        }
        (quot, num)
    }
    fn mul(a: &Poly, b: &Poly) -> Poly {
        let (da, db) = match (deg(a), deg(b)) {
            (Some(da), Some(db)) => (da, db),
            _ => return vec![BigRational::zero()],
        };
        let mut out = vec![BigRational::zero(); da + db + 1];
        for i in 0..=da {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..=db {
                if !b[j].is_zero() {
                    out[i + j] += &a[i] * &b[j];
                }
            }
        }
        out
    }
    fn sub(a: &Poly, b: &Poly) -> Poly {
        let mut out = a.clone();
        out.resize(out.len().max(b.len()), BigRational::zero());
        for (i, c) in b.iter().enumerate() {
            out[i] -= c;
        }
        out
    }

    let mut r0: Poly = m.to_vec();
    let mut r1: Poly = a.to_vec();
    let mut t0: Poly = vec![BigRational::zero()];
    let mut t1: Poly = vec![BigRational::one()];
    while let Some(d) = deg(&r1) {
        if d == 0 {
            let c = r1[0].recip();
            return Some(t1.into_iter().map(|x| x * &c).collect());
        }
        let (q, r) = rem_quot(r0.clone(), &r1);
        let t = sub(&t0, &mul(&q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    None
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc[{}]{:?}", self.conductor, self.coeffs_display())
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = !mag.is_one() || j == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if j > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if j == 1 {
                    write!(f, "z{}", self.conductor)?;
                } else {
                    write!(f, "z{}^{}", self.conductor, j)?;
                }
            }
        }
        Ok(())
    }
}

impl CycNumber {
    fn coeffs_display(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $call:ident) => {
        impl $trait for CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: CycNumber) -> CycNumber {
                CycNumber::$call(&self, &rhs)
            }
        }
        impl $trait for &CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: &CycNumber) -> CycNumber {
                CycNumber::$call(self, rhs)
            }
        }
    };
}
forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(mut self) -> CycNumber {
        self.negate();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::super::{embed, sqrt_int};
    use super::*;

    fn z(n: i64, d: i64) -> CycNumber {
        embed(RootOfUnity::new(n, d))
    }

    #[test]
    fn minimal_conductor_after_multiplication() {
        // zeta_8^2 = i, conductor drops from 8 to 4
        let v = z(1, 8).mul(&z(1, 8));
        assert_eq!(v.conductor(), 4);
        assert_eq!(v, z(1, 4));
        // zeta_8 * zeta_8^7 = 1
        assert!(z(1, 8).mul(&z(7, 8)).is_one());
    }

    #[test]
    fn spec_product_example() {
        // (1 + zeta_8)(1 + zeta_8^-1) = 2 + zeta_8 + zeta_8^-1 = 2 + sqrt(2)
        let one = CycNumber::from_u64(1);
        let lhs = one.add(&z(1, 8)).mul(&one.add(&z(7, 8)));
        let rhs = CycNumber::from_u64(2).add(&sqrt_int(2));
        assert_eq!(lhs, rhs);
        let (re, im) = lhs.eval_f64();
        assert!((re - (2.0 + 2f64.sqrt())).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(1, 4).conjugate(), z(3, 4));
        assert_eq!(CycNumber::from_u64(2).conjugate(), CycNumber::from_u64(2));
        let v = CycNumber::from_u64(1).add(&z(1, 8));
        assert_eq!(v.conjugate(), CycNumber::from_u64(1).add(&z(7, 8)));
        // conjugation fixes sqrt(n)
        for n in [2u64, 3, 5, 6, 7, 10] {
            assert_eq!(sqrt_int(n).conjugate(), sqrt_int(n));
        }
    }

    #[test]
    fn division() {
        let a = CycNumber::from_u64(1).add(&z(1, 4));
        assert!(a.div(&a).unwrap().is_one());
        assert_eq!(
            CycNumber::zero().div(&a).unwrap(),
            CycNumber::zero()
        );
        assert!(matches!(
            a.div(&CycNumber::zero()),
            Err(CycError::DivisionByZero)
        ));
        // 1/(1+i) = (1-i)/2
        let inv = a.inv().unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let expect = CycNumber::from_rational(half.clone())
            .sub(&CycNumber::from_rational(half).mul(&z(1, 4)));
        assert_eq!(inv, expect);
    }

    #[test]
    fn subtraction_cancels() {
        let x = z(3, 16).add(&sqrt_int(5));
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn mixed_conductor_sum_descends() {
        // zeta_3 + zeta_3^2 = -1 (conductor drops to 1)
        let s = z(1, 3).add(&z(2, 3));
        assert_eq!(s, CycNumber::from_i64(-1));
        // sum() agrees with folded add()
        let items = vec![z(1, 5), z(2, 5), z(3, 5), z(4, 5)];
        assert_eq!(CycNumber::sum(items), CycNumber::from_i64(-1));
    }

    #[test]
    fn primitive_root_powers() {
        // embed(r)^d = 1, embed(r)^k != 1 for 0 < k < d, r primitive
        for d in 1..=16u32 {
            let v = z(1, d as i64);
            for k in 1..d {
                assert!(!v.pow(k).is_one(), "zeta_{d}^{k} must not be 1");
            }
            assert!(v.pow(d).is_one());
        }
    }
}
