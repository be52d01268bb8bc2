//! Cyclotomic polynomials and per-conductor reduction tables.
//!
//! Elements of `Q(zeta_N)` are stored in the power basis
//! `1, x, ..., x^{phi(N)-1}` of `Q[x]/Phi_N(x)`. This module computes
//! `Phi_N`, the reduction of every monomial `x^j` (`j < N`) to that basis,
//! and the change-of-basis solvers used to push an element down into a
//! subfield `Q(zeta_M)` for `M | N`. Tables are cached per conductor and
//! shared behind a lock, so all arithmetic stays pure and thread-safe.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

/// Distinct prime divisors, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Prime factorization as `(p, multiplicity)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Coefficients of `Phi_n`, low degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.as_ref().clone();
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
    let mut f = vec![BigInt::zero(); n as usize + 1];
    f[0] = -BigInt::one();
    f[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            f = poly_div_exact(&f, &phi_d);
        }
    }
    cache.lock().unwrap().insert(n, Arc::new(f.clone()));
    f
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for i in 0..=dd {
                rem[k + i] -= &c * &den[i];
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    quot
}

/// Reduction table for one conductor.
pub struct ConductorTable {
    pub n: u64,
    pub phi: usize,
    /// `rows[j]` = coefficients of `x^j mod Phi_n` in the power basis.
    pub rows: Vec<Vec<BigInt>>,
}

impl ConductorTable {
    fn build(n: u64) -> ConductorTable {
        let phi = euler_phi(n) as usize;
        let cyc = cyclotomic_polynomial(n);
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize);
        for j in 0..n as usize {
            if j < phi {
                let mut row = vec![BigInt::zero(); phi];
                row[j] = BigInt::one();
                rows.push(row);
            } else {
                // x^j = x * x^{j-1}; shift and fold the overflow back in
                // using x^phi = -(lower part of Phi_n).
                let prev = &rows[j - 1];
                let mut row = vec![BigInt::zero(); phi];
                for i in 1..phi {
                    row[i] = prev[i - 1].clone();
                }
                let carry = prev[phi - 1].clone();
                if !carry.is_zero() {
                    for i in 0..phi {
                        row[i] -= &carry * &cyc[i];
                    }
                }
                rows.push(row);
            }
        }
        ConductorTable { n, phi, rows }
    }
}

static TABLES: OnceLock<Mutex<HashMap<u64, Arc<ConductorTable>>>> = OnceLock::new();

/// The cached reduction table for conductor `n`.
pub fn table(n: u64) -> Arc<ConductorTable> {
    let cache = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let t = Arc::new(ConductorTable::build(n));
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&t))
        .clone()
}

/// Solver that rewrites elements of `Q(zeta_n)` known to lie in
/// `Q(zeta_m)` (`m | n`) in the conductor-`m` basis.
pub struct DescentSolver {
    pub n: u64,
    pub m: u64,
    phi_n: usize,
    phi_m: usize,
    /// Row-reduction transform: applying it to a coordinate vector in the
    /// conductor-`n` basis yields, on the pivot rows, the conductor-`m`
    /// coordinates; all other rows must come out zero.
    transform: Vec<Vec<BigRational>>,
    pivot_rows: Vec<usize>,
}

impl DescentSolver {
    fn build(n: u64, m: u64) -> DescentSolver {
        let tn = table(n);
        let phi_n = tn.phi;
        let phi_m = euler_phi(m) as usize;
        let step = (n / m) as usize;
        // Column j = representation of zeta_m^j over the conductor-n basis.
        let mut a: Vec<Vec<BigRational>> = (0..phi_n)
            .map(|i| {
                (0..phi_m)
                    .map(|j| BigRational::from(tn.rows[(j * step) % n as usize][i].clone()))
                    .collect()
            })
            .collect();
        let mut transform: Vec<Vec<BigRational>> = (0..phi_n)
            .map(|i| {
                let mut row = vec![BigRational::zero(); phi_n];
                row[i] = BigRational::one();
                row
            })
            .collect();
        let mut pivot_rows = Vec::with_capacity(phi_m);
        let mut r = 0usize;
        for c in 0..phi_m {
            let piv = (r..phi_n)
                .find(|&i| !a[i][c].is_zero())
                .expect("subfield basis must have full column rank");
            a.swap(r, piv);
            transform.swap(r, piv);
            let inv = a[r][c].recip();
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            for x in transform[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..phi_n {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..phi_m {
                        let t = &f * &a[r][j];
                        a[i][j] -= t;
                    }
                    for j in 0..phi_n {
                        let t = &f * &transform[r][j];
                        transform[i][j] -= t;
                    }
                }
            }
            pivot_rows.push(r);
            r += 1;
        }
        DescentSolver {
            n,
            m,
            phi_n,
            phi_m,
            transform,
            pivot_rows,
        }
    }

    /// Rewrites `coeffs` (conductor-`n` basis) in the conductor-`m` basis.
    /// Returns `None` when the element does not lie in `Q(zeta_m)`.
    pub fn solve(&self, coeffs: &[BigRational]) -> Option<Vec<BigRational>> {
        let apply = |row: &[BigRational]| -> BigRational {
            let mut acc = BigRational::zero();
            for (t, c) in row.iter().zip(coeffs) {
                if !c.is_zero() && !t.is_zero() {
                    acc += t * c;
                }
            }
            acc
        };
        let mut out = vec![BigRational::zero(); self.phi_m];
        for (j, &r) in self.pivot_rows.iter().enumerate() {
            out[j] = apply(&self.transform[r]);
        }
        for r in 0..self.phi_n {
            if !self.pivot_rows.contains(&r) && !apply(&self.transform[r]).is_zero() {
                return None;
            }
        }
        Some(out)
    }
}

static SOLVERS: OnceLock<Mutex<HashMap<(u64, u64), Arc<DescentSolver>>>> = OnceLock::new();

pub fn descent_solver(n: u64, m: u64) -> Arc<DescentSolver> {
    let cache = SOLVERS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().unwrap().get(&(n, m)) {
        return Arc::clone(s);
    }
    let s = Arc::new(DescentSolver::build(n, m));
    cache
        .lock()
        .unwrap()
        .entry((n, m))
        .or_insert_with(|| Arc::clone(&s))
        .clone()
}

/// Signed magnitude bound helper for tests.
#[cfg(test)]
pub fn max_abs_coeff(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_i64(p: Vec<BigInt>) -> Vec<i64> {
        p.into_iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
        // first conductor with a coefficient of magnitude 2
        assert!(max_abs_coeff(&cyclotomic_polynomial(105)) == BigInt::from(2));
    }

    #[test]
    fn phi_agrees_with_degree() {
        for n in 1..=60 {
            assert_eq!(
                cyclotomic_polynomial(n).len() as u64 - 1,
                euler_phi(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn reduction_rows_close() {
        // x^phi row must equal the negated tail of Phi_n.
        for n in [4u64, 8, 9, 12, 16] {
            let t = table(n);
            let cyc = cyclotomic_polynomial(n);
            for i in 0..t.phi {
                assert_eq!(t.rows[t.phi][i], -cyc[i].clone(), "n={n} i={i}");
            }
        }
    }
}
