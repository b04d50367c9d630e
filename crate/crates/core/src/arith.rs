//! Arithmetic functions with values in `Z/n`, restricted to the divisors of
//! `n`, under Dirichlet convolution.
//!
//! Every congruence of interest evaluates convolutions only at divisors of the
//! modulus, and divisors of divisors are divisors, so the restriction is closed
//! under all ring operations.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("modulus must be positive")]
    InvalidModulus,
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("leading value {value} is not a unit mod {modulus}")]
    NonUnit { value: u64, modulus: u64 },
    #[error("unknown arithmetic function {0:?}")]
    UnknownName(String),
}

/// Sorted divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut ps = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            ps.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        ps.push(n);
    }
    ps
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

pub fn totient(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, p| acc / p * (p - 1))
}

/// The classical Möbius function.
pub fn moebius(n: u64) -> i64 {
    let ps = prime_factors(n);
    if ps.iter().any(|p| n % (p * p) == 0) {
        0
    } else if ps.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `C(dm - 1, d - 1)` as an exact integer.
pub fn binomial_kernel(m: u64, d: u64) -> BigUint {
    assert!(m >= 1 && d >= 1, "binomial kernel needs positive arguments");
    num_integer::binomial(BigUint::from(d * m - 1), BigUint::from(d - 1))
}

/// Named standard functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardArith {
    /// The convolution unit: 1 at 1, 0 elsewhere.
    Epsilon,
    /// The constant function 1.
    One,
    Moebius,
    EulerPhi,
    /// `a -> a`.
    Identity,
    /// Sum of `k`-th powers of divisors.
    Sigma(u32),
    /// `a -> u^a`.
    Power(u64),
    /// `d -> C(dm - 1, d - 1)`.
    Binomial(u64),
}

impl FromStr for StandardArith {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let with_arg = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.parse::<u64>().ok());
        Ok(match s {
            "epsilon" => StandardArith::Epsilon,
            "E" | "one" => StandardArith::One,
            "moebius" | "mu" => StandardArith::Moebius,
            "phi" | "euler_phi" => StandardArith::EulerPhi,
            "I" | "identity" => StandardArith::Identity,
            "sigma" => StandardArith::Sigma(1),
            _ => {
                if let Some(k) = with_arg("sigma") {
                    StandardArith::Sigma(k as u32)
                } else if let Some(u) = with_arg("power") {
                    StandardArith::Power(u)
                } else if let Some(m) = with_arg("binomial").filter(|&m| m >= 1) {
                    StandardArith::Binomial(m)
                } else {
                    return Err(ArithError::UnknownName(s.to_string()));
                }
            }
        })
    }
}

impl fmt::Display for StandardArith {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardArith::Epsilon => f.write_str("epsilon"),
            StandardArith::One => f.write_str("E"),
            StandardArith::Moebius => f.write_str("moebius"),
            StandardArith::EulerPhi => f.write_str("phi"),
            StandardArith::Identity => f.write_str("I"),
            StandardArith::Sigma(k) => write!(f, "sigma{k}"),
            StandardArith::Power(u) => write!(f, "power{u}"),
            StandardArith::Binomial(m) => write!(f, "binomial{m}"),
        }
    }
}

/// An arithmetic function mod `n`, stored on the divisors of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArithmeticFunction {
    modulus: u64,
    divisors: Arc<Vec<u64>>,
    values: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` mod `n`, if `gcd(a, n) = 1`.
pub fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(n));
    (e.gcd == BigInt::from(1)).then(|| e.x.mod_floor(&BigInt::from(n)).to_u64().unwrap())
}

impl ArithmeticFunction {
    /// Builds a function from integer values, reduced mod `n`.
    pub fn from_fn(modulus: u64, mut f: impl FnMut(u64) -> i128) -> Result<Self, ArithError> {
        if modulus == 0 {
            return Err(ArithError::InvalidModulus);
        }
        let divisors = Arc::new(divisors(modulus));
        let values = divisors
            .iter()
            .map(|&d| f(d).rem_euclid(modulus as i128) as u64)
            .collect();
        Ok(ArithmeticFunction {
            modulus,
            divisors,
            values,
        })
    }

    fn with_values(&self, values: Vec<u64>) -> Self {
        ArithmeticFunction {
            modulus: self.modulus,
            divisors: Arc::clone(&self.divisors),
            values,
        }
    }

    pub fn standard(kind: StandardArith, modulus: u64) -> Result<Self, ArithError> {
        let n = modulus;
        if n == 0 {
            return Err(ArithError::InvalidModulus);
        }
        let r = |v: u64| (v % n) as i128;
        match kind {
            StandardArith::Epsilon => Self::from_fn(n, |a| (a == 1) as i128),
            StandardArith::One => Self::from_fn(n, |_| 1),
            StandardArith::Moebius => Self::from_fn(n, |a| moebius(a) as i128),
            StandardArith::EulerPhi => Self::from_fn(n, |a| r(totient(a))),
            StandardArith::Identity => Self::from_fn(n, |a| r(a)),
            StandardArith::Sigma(k) => Self::from_fn(n, |a| {
                let s = divisors(a)
                    .iter()
                    .fold(0u64, |acc, &e| (acc + pow_mod(e, k as u64, n)) % n);
                s as i128
            }),
            StandardArith::Power(u) => Self::from_fn(n, |a| pow_mod(u, a, n) as i128),
            StandardArith::Binomial(m) => Self::from_fn(n, |d| {
                (binomial_kernel(m, d) % BigUint::from(n)).to_u64().unwrap() as i128
            }),
        }
    }

    /// Uniformly random residues on every divisor.
    pub fn random<R: Rng>(modulus: u64, rng: &mut R) -> Self {
        Self::from_fn(modulus, |_| rng.gen_range(0..modulus) as i128).expect("positive modulus")
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Value at a divisor `a` of the modulus.
    pub fn value(&self, a: u64) -> Option<u64> {
        self.divisors.binary_search(&a).ok().map(|i| self.values[i])
    }

    /// Value at a divisor `a` of the modulus; panics otherwise.
    pub fn at(&self, a: u64) -> u64 {
        self.value(a)
            .unwrap_or_else(|| panic!("{a} does not divide {}", self.modulus))
    }

    fn check(&self, other: &Self) -> Result<(), ArithError> {
        if self.modulus != other.modulus {
            return Err(ArithError::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let n = self.modulus;
        Ok(self.with_values(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| ((*a as u128 + *b as u128) % n as u128) as u64)
                .collect(),
        ))
    }

    pub fn neg(&self) -> Self {
        let n = self.modulus;
        self.with_values(self.values.iter().map(|&a| (n - a) % n).collect())
    }

    pub fn scale(&self, c: u64) -> Self {
        let n = self.modulus;
        self.with_values(self.values.iter().map(|&a| mul_mod(a, c % n, n)).collect())
    }

    /// Dirichlet convolution `a -> sum over d | a of f(d) h(a/d)`.
    pub fn convolve(&self, other: &Self) -> Result<Self, ArithError> {
        self.check(other)?;
        let n = self.modulus;
        let values = self
            .divisors
            .iter()
            .map(|&a| {
                self.divisors
                    .iter()
                    .take_while(|&&d| d <= a)
                    .filter(|&&d| a % d == 0)
                    .fold(0u64, |acc, &d| {
                        (acc + mul_mod(self.at(d), other.at(a / d), n)) % n
                    })
            })
            .collect();
        Ok(self.with_values(values))
    }

    pub fn is_unit(&self) -> bool {
        inverse_mod(self.at(1), self.modulus).is_some()
    }

    /// Convolution inverse, solved divisor by divisor.
    pub fn invert(&self) -> Result<Self, ArithError> {
        let n = self.modulus;
        let lead = inverse_mod(self.at(1), n).ok_or(ArithError::NonUnit {
            value: self.at(1),
            modulus: n,
        })?;
        let mut g = vec![0u64; self.divisors.len()];
        for (i, &a) in self.divisors.iter().enumerate() {
            if a == 1 {
                g[i] = lead % n;
                continue;
            }
            let mut s = 0u64;
            for (j, &d) in self.divisors[..i].iter().enumerate() {
                if a % d == 0 {
                    s = (s + mul_mod(self.at(a / d), g[j], n)) % n;
                }
            }
            g[i] = mul_mod((n - s) % n, lead, n);
        }
        Ok(self.with_values(g))
    }

    /// `f(t) = 0 mod t` for every divisor `t` of the modulus.
    pub fn is_special(&self) -> bool {
        self.divisors
            .iter()
            .zip(&self.values)
            .all(|(&t, &v)| v % t == 0)
    }

    /// `f(t) = 0 mod t` for every divisor `t` of `k` (itself a divisor of the modulus).
    pub fn is_special_up_to(&self, k: u64) -> bool {
        self.divisors
            .iter()
            .zip(&self.values)
            .filter(|(&t, _)| k % t == 0)
            .all(|(&t, &v)| v % t == 0)
    }

    /// Whether `b` is a unit with `b * phi` special: the functions for which the
    /// summatory criterion `h*E special <=> h*b special` holds for every `h`.
    pub fn in_frobenius_coset(&self) -> bool {
        let phi = Self::standard(StandardArith::EulerPhi, self.modulus).expect("modulus");
        self.is_unit() && self.convolve(&phi).expect("same modulus").is_special()
    }
}

/// Free-function forms of the main operations.
pub fn standard_arith(kind: StandardArith, modulus: u64) -> Result<ArithmeticFunction, ArithError> {
    ArithmeticFunction::standard(kind, modulus)
}

pub fn ar_convolve(f: &ArithmeticFunction, h: &ArithmeticFunction) -> Result<ArithmeticFunction, ArithError> {
    f.convolve(h)
}

pub fn ar_invert(f: &ArithmeticFunction) -> Result<ArithmeticFunction, ArithError> {
    f.invert()
}

pub fn is_special(f: &ArithmeticFunction) -> bool {
    f.is_special()
}

pub fn in_frobenius_coset(b: &ArithmeticFunction) -> bool {
    b.in_frobenius_coset()
}
