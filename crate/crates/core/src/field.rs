//! Prime field arithmetic.
//!
//! Elements are plain `u32` residues in `0..p`; a [`Field`] value carries the modulus and
//! performs the arithmetic. Keeping the modulus out of the elements keeps dense matrices
//! compact and lets row operations run on raw slices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    p: u32,
}

impl Default for Field {
    fn default() -> Self {
        Field { p: Field::DEFAULT_PRIME }
    }
}

impl Field {
    pub const DEFAULT_PRIME: u32 = 32003;

    /// GF(p) for an odd prime `p < 2^31`.
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(Field { p: p as u32 })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        t.rem_euclid(self.p as i64) as u32
    }

    pub fn from_i64(&self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    /// Representative in `(-p/2, p/2]`, used for printing.
    pub fn to_signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
