//! Prime fields GF(p) for small p.
//!
//! Elements are plain `u32` residues in `[0, p)`. With `p <= 251` every product
//! fits comfortably in a `u32`, and dot products are accumulated in `u64`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported characteristic.
pub const MAX_PRIME: u32 = 251;

/// The prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FieldPrime {
    p: u32,
}

fn is_prime(n: u32) -> bool {
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

impl FieldPrime {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by Fermat exponentiation; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        let a = a % self.p;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, u64::from(self.p - 2)))
        }
    }

    /// Reduce an arbitrary integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(i64::from(self.p)) as u32
    }

    /// Centered lift of a residue, used when printing signed data.
    pub fn lift(self, a: u32) -> i64 {
        let a = i64::from(a);
        let p = i64::from(self.p);
        if 2 * a > p {
            a - p
        } else {
            a
        }
    }

    /// All elements of the field, `0..p`.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.p
    }
}

impl std::fmt::Display for FieldPrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.p)
    }
}
