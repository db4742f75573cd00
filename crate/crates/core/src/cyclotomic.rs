//! Arithmetic in `ℤ[ζ_m]`, the ring of integers of the `m`-th cyclotomic
//! field, in the power basis `1, ζ, …, ζ^{φ(m)-1}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactalg::IntMatrix;
use crate::lattice::GramLattice;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("elements live in different rings: conductors {0} and {1}")]
    ConductorMismatch(u64, u64),
    #[error("coefficient vector has length {got}, expected φ({m}) = {expected}")]
    BadLength { m: u64, expected: usize, got: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("complex conjugation is not a separate involution for conductor {0}; use m >= 3")]
    ConjugationUndefined(u64),
}

/// `(p, a)` pairs with `n = ∏ p^a`, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Euler's totient.
pub fn phi(m: u64) -> u64 {
    factorize(m).iter().fold(m, |acc, &(p, _)| acc / p * (p - 1))
}

/// Möbius function.
pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, a)| a > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Multiplicative order of `a` modulo `n` (1 when `n = 1`). Requires
/// `gcd(a, n) = 1`.
pub fn multiplicative_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    debug_assert_eq!(a.gcd(&n), 1);
    let a = a % n;
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = x * a % n;
        k += 1;
    }
    k
}

/// Integer polynomial, coefficients in ascending degree.
pub type Poly = Vec<BigInt>;

fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Exact division by a monic polynomial; panics if the remainder is nonzero.
fn div_exact_monic(num: &Poly, den: &Poly) -> Poly {
    let mut r = num.clone();
    let dn = den.len() - 1;
    if r.len() <= dn {
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        return vec![BigInt::zero()];
    }
    let mut q = vec![BigInt::zero(); r.len() - dn];
    for k in (0..q.len()).rev() {
        let c = r[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            r[k + i] -= &c * d;
        }
        q[k] = c;
    }
    assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(&mut q);
    q
}

/// The `m`-th cyclotomic polynomial `Φ_m`, by dividing `t^m − 1` by `Φ_d`
/// for every proper divisor `d` of `m`.
pub fn cyclotomic_poly(m: u64) -> Poly {
    assert!(m >= 1, "conductor must be positive");
    let mut p: Poly = vec![BigInt::zero(); m as usize + 1];
    p[0] = -BigInt::one();
    p[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m % d == 0) {
        p = div_exact_monic(&p, &cyclotomic_poly(d));
    }
    p
}

/// Closed form `Trace(ζ_m^k) = μ(d)·φ(m)/φ(d)` with `d = m / gcd(m, k)`.
pub fn trace_zeta_power_mobius(m: u64, k: u64) -> i64 {
    let d = m / m.gcd(&(k % m));
    mobius(d) * (phi(m) / phi(d)) as i64
}

/// `|μ_K|` for `K = ℚ(ζ_m)`.
pub fn roots_of_unity_order(m: u64) -> u64 {
    if m % 2 == 0 {
        m
    } else {
        2 * m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Involution {
    #[serde(rename = "id")]
    Identity,
    #[serde(rename = "conj")]
    Conjugation,
}

impl Involution {
    pub fn tag(self) -> &'static str {
        match self {
            Involution::Identity => "id",
            Involution::Conjugation => "conj",
        }
    }
}

impl std::str::FromStr for Involution {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "id" => Ok(Involution::Identity),
            "conj" => Ok(Involution::Conjugation),
            other => Err(format!("unknown involution {other:?}, expected id or conj")),
        }
    }
}

/// Element of `ℤ[ζ_m]`, fully reduced modulo `Φ_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloElement {
    m: u64,
    coeffs: Vec<BigInt>,
}

impl CycloElement {
    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// The ring `ℤ[ζ_m]`: holds `Φ_m` and the reduced powers `ζ^k`, `0 ≤ k < m`.
#[derive(Clone, Debug)]
pub struct CyclotomicRing {
    m: u64,
    modulus: Poly,
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicRing {
    pub fn new(m: u64) -> Result<Self, CycloError> {
        if m == 0 {
            return Err(CycloError::ZeroConductor);
        }
        let modulus = cyclotomic_poly(m);
        let n = modulus.len() - 1;
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![BigInt::zero(); n];
        cur[0] = BigInt::one();
        for _ in 0..m {
            powers.push(cur.clone());
            cur = times_zeta(&cur, &modulus);
        }
        Ok(CyclotomicRing { m, modulus, powers })
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    /// `φ(m)`, the rank of `ℤ[ζ_m]` over `ℤ`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn element(&self, coeffs: Vec<BigInt>) -> Result<CycloElement, CycloError> {
        if coeffs.len() != self.degree() {
            return Err(CycloError::BadLength { m: self.m, expected: self.degree(), got: coeffs.len() });
        }
        Ok(CycloElement { m: self.m, coeffs })
    }

    pub fn from_i64(&self, coeffs: &[i64]) -> Result<CycloElement, CycloError> {
        self.element(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(&self) -> CycloElement {
        self.zeta_pow(0)
    }

    pub fn zero(&self) -> CycloElement {
        CycloElement { m: self.m, coeffs: vec![BigInt::zero(); self.degree()] }
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> CycloElement {
        let idx = k.rem_euclid(self.m as i64) as usize;
        CycloElement { m: self.m, coeffs: self.powers[idx].clone() }
    }

    fn check(&self, x: &CycloElement) -> Result<(), CycloError> {
        if x.m != self.m {
            return Err(CycloError::ConductorMismatch(self.m, x.m));
        }
        Ok(())
    }

    pub fn add(&self, x: &CycloElement, y: &CycloElement) -> Result<CycloElement, CycloError> {
        self.check(x)?;
        self.check(y)?;
        let coeffs = x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycloElement { m: self.m, coeffs })
    }

    pub fn neg(&self, x: &CycloElement) -> CycloElement {
        CycloElement { m: x.m, coeffs: x.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn mul(&self, x: &CycloElement, y: &CycloElement) -> Result<CycloElement, CycloError> {
        self.check(x)?;
        self.check(y)?;
        let n = self.degree();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(CycloElement { m: self.m, coeffs: reduce_mod(prod, &self.modulus) })
    }

    pub fn pow(&self, x: &CycloElement, mut e: u64) -> Result<CycloElement, CycloError> {
        self.check(x)?;
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// `θ(x)`; conjugation sends each `ζ^k` to `ζ^{m−k}`.
    pub fn apply(&self, theta: Involution, x: &CycloElement) -> Result<CycloElement, CycloError> {
        self.check(x)?;
        match theta {
            Involution::Identity => Ok(x.clone()),
            Involution::Conjugation => {
                let mut out = vec![BigInt::zero(); self.degree()];
                for (k, c) in x.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let img = &self.powers[(self.m as usize - k) % self.m as usize];
                    for (o, v) in out.iter_mut().zip(img) {
                        *o += c * v;
                    }
                }
                Ok(CycloElement { m: self.m, coeffs: out })
            }
        }
    }

    /// `Trace_{K/ℚ}(x)` as the trace of multiplication by `x` on the power basis.
    pub fn trace(&self, x: &CycloElement) -> Result<BigInt, CycloError> {
        self.check(x)?;
        let mut col = x.coeffs.clone();
        let mut sum = BigInt::zero();
        for i in 0..self.degree() {
            sum += &col[i];
            col = times_zeta(&col, &self.modulus);
        }
        Ok(sum)
    }

    /// `Trace(ζ^k)` for `0 ≤ k < m` via multiplication matrices, each entry
    /// checked against the Möbius closed form.
    pub fn zeta_power_traces(&self) -> Vec<BigInt> {
        (0..self.m)
            .map(|k| {
                let t = self.trace(&self.zeta_pow(k as i64)).expect("same ring");
                let oracle = trace_zeta_power_mobius(self.m, k);
                assert_eq!(t, BigInt::from(oracle), "trace of zeta^{k} disagrees with Möbius form for m = {}", self.m);
                t
            })
            .collect()
    }

    /// Gram matrix of `(x, y) ↦ Trace(x·θ(y))` on the power basis.
    pub fn gram_matrix(&self, theta: Involution) -> Result<IntMatrix, CycloError> {
        if theta == Involution::Conjugation && self.m < 3 {
            return Err(CycloError::ConjugationUndefined(self.m));
        }
        let traces = self.zeta_power_traces();
        let n = self.degree();
        let m = self.m as i64;
        Ok(IntMatrix::from_fn(n, n, |i, j| {
            let (i, j) = (i as i64, j as i64);
            let k = match theta {
                Involution::Identity => i + j,
                Involution::Conjugation => i - j,
            };
            traces[k.rem_euclid(m) as usize].clone()
        }))
    }
}

fn times_zeta(x: &[BigInt], modulus: &Poly) -> Vec<BigInt> {
    let n = x.len();
    let top = x[n - 1].clone();
    let mut out = Vec::with_capacity(n);
    out.push(BigInt::zero());
    out.extend_from_slice(&x[..n - 1]);
    if !top.is_zero() {
        for (o, c) in out.iter_mut().zip(modulus) {
            *o -= &top * c;
        }
    }
    out
}

fn reduce_mod(mut p: Vec<BigInt>, modulus: &Poly) -> Vec<BigInt> {
    let n = modulus.len() - 1;
    for k in (n..p.len()).rev() {
        let c = std::mem::take(&mut p[k]);
        if c.is_zero() {
            continue;
        }
        for (i, d) in modulus.iter().enumerate().take(n) {
            p[k - n + i] -= &c * d;
        }
    }
    p.truncate(n);
    p.resize(n, BigInt::zero());
    p
}

/// The trace-form lattice `(ℤ[ζ_m], tr_{K,θ})` in the power basis.
pub fn gram_trace_form(m: u64, theta: Involution) -> Result<GramLattice, CycloError> {
    let g = CyclotomicRing::new(m)?.gram_matrix(theta)?;
    Ok(GramLattice::new(g).expect("trace forms are nondegenerate"))
}

/// Generator `m̃ > 0` of the trace ideal `Trace(ℤ[ζ_m]) = m̃ℤ`.
pub fn trace_ideal_generator(m: u64, theta: Involution) -> Result<BigInt, CycloError> {
    Ok(CyclotomicRing::new(m)?.gram_matrix(theta)?.content())
}

/// Splitting data of a rational prime in `ℚ(ζ_m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RamificationData {
    pub p: u64,
    /// exponent with `p^a ∥ m`
    pub a: u32,
    pub e: u64,
    pub f: u64,
    pub g: u64,
}

impl RamificationData {
    pub fn is_ramified(&self) -> bool {
        self.e > 1
    }
}

/// `e = φ(p^a)`, `f = ord(p mod m/p^a)`, `g = φ(m)/(ef)`.
pub fn ramification(m: u64, p: u64) -> Result<RamificationData, CycloError> {
    if m == 0 {
        return Err(CycloError::ZeroConductor);
    }
    if !is_prime(p) {
        return Err(CycloError::NotPrime(p));
    }
    let mut a = 0;
    let mut rest = m;
    while rest % p == 0 {
        rest /= p;
        a += 1;
    }
    let e = phi(p.pow(a));
    let f = multiplicative_order(p, rest);
    let g = phi(m) / (e * f);
    Ok(RamificationData { p, a, e, f, g })
}

/// Field discriminant `|disc ℚ(ζ_m)| = m^φ(m) / ∏_{p|m} p^{φ(m)/(p−1)}`.
pub fn cyclotomic_discriminant_abs(m: u64) -> BigInt {
    let n = phi(m);
    let mut num = BigInt::from(m).pow(n as u32);
    for (p, _) in factorize(m) {
        num /= BigInt::from(p).pow((n / (p - 1)) as u32);
    }
    num
}

/// `m` with a factor 2 removed when `m ≡ 2 mod 4`; `ℚ(ζ_m)` depends only on
/// this value.
pub fn canonical_conductor(m: u64) -> u64 {
    if m % 4 == 2 {
        m / 2
    } else {
        m
    }
}
