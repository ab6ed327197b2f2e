use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A prime field `GF(p)` with `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    /// Default large prime, standing in for characteristic zero.
    pub const LARGE_PRIME: u32 = 32003;

    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { characteristic: p })
    }

    pub fn gf2() -> Self {
        Self::gf2_const()
    }

    pub fn large() -> Self {
        Self::large_const()
    }

    pub const fn gf2_const() -> Self {
        FieldSpec { characteristic: 2 }
    }

    pub const fn large_const() -> Self {
        FieldSpec {
            characteristic: Self::LARGE_PRIME,
        }
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }

    /// The other field of the two-characteristic cross-run.
    pub fn cross_partner(self) -> FieldSpec {
        if self.characteristic == 2 {
            Self::large()
        } else {
            Self::gf2()
        }
    }

    pub(crate) fn arith(self) -> Fp {
        Fp {
            p: self.characteristic,
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::large()
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        FieldSpec::new(p)
    }
}

impl From<FieldSpec> for u32 {
    fn from(f: FieldSpec) -> u32 {
        f.characteristic
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Word-sized arithmetic modulo `p`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Fp {
    pub p: u32,
}

impl Fp {
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
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p));
        let mut base = a as u64 % self.p as u64;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            exp >>= 1;
        }
        acc as u32
    }

    /// `(-1)^k` as a field element.
    #[inline]
    pub fn sign(self, k: usize) -> u32 {
        if k.is_multiple_of(2) {
            1
        } else {
            self.p - 1
        }
    }
}
