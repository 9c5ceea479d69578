//! Residue arithmetic modulo `p` and `p²`.
//!
//! Residues are plain `u32` values kept in canonical form, the smallest
//! nonnegative representative. Every operation here normalizes its result.

use std::fmt;

use crate::{Error, Result};

/// An odd prime `3 ≤ p ≤ 97`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    pub const MAX: u32 = 97;

    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !(3..=Self::MAX).contains(&p) {
            return Err(Error::PrimeOutOfRange(p));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// `p²`, the modulus of the Y coordinates.
    #[inline]
    pub fn square(self) -> u32 {
        self.0 * self.0
    }

    #[inline]
    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn reduce_sq(self, a: i64) -> u32 {
        a.rem_euclid(self.square() as i64) as u32
    }

    /// Splits `θ ∈ Z_{p²}` as `θ = θ''·p + θ'` and returns `(θ', θ'')`.
    #[inline]
    pub fn digits(self, theta: u32) -> (u32, u32) {
        let theta = theta % self.square();
        (theta % self.0, theta / self.0)
    }

    /// Inverse of `a` modulo `p`.
    pub fn inv_mod_p(self, a: u32) -> Result<u32> {
        inverse(a % self.0, self.0)
    }

    /// Inverse of a unit `a` modulo `p²`.
    pub fn inv_mod_p2(self, a: u32) -> Result<u32> {
        inverse(a % self.square(), self.square())
    }

    /// True when `θ ∈ Z_{p²}` is a unit, i.e. not a multiple of `p`.
    #[inline]
    pub fn is_unit_sq(self, theta: u32) -> bool {
        !theta.is_multiple_of(self.0)
    }

    /// `p^e` as `u128`, or `None` on overflow.
    pub fn pow(self, e: usize) -> Option<u128> {
        let mut acc: u128 = 1;
        for _ in 0..e {
            acc = acc.checked_mul(self.0 as u128)?;
        }
        Some(acc)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn inverse(a: u32, m: u32) -> Result<u32> {
    let (mut old_r, mut r) = (a as i64, m as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NoInverse(a));
    }
    Ok(old_s.rem_euclid(m as i64) as u32)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
