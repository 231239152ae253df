//! `GF(p^2) = GF(p)(w)` with `w^2 = nu` for the least quadratic nonresidue `nu`.

use core::fmt;

use super::OracleError;
use crate::model::is_odd_prime;

/// Largest prime the field arithmetic accepts; products of two residues must
/// fit in a `u64`.
pub const MAX_FIELD_PRIME: u64 = (1 << 31) - 1;

/// `a + b*w`, with `0 <= a, b < p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp2 {
    pub a: u32,
    pub b: u32,
}

impl Fp2 {
    pub const ZERO: Fp2 = Fp2 { a: 0, b: 0 };
    pub const ONE: Fp2 = Fp2 { a: 1, b: 0 };

    pub fn is_zero(self) -> bool {
        self == Fp2::ZERO
    }
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}w"),
            (a, b) => write!(f, "{a}+{b}w"),
        }
    }
}

/// The field of `p^2` elements together with its conjugation `x -> x^p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FqSquared {
    p: u32,
    nonresidue: u32,
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

impl FqSquared {
    pub fn new(p: u64) -> Result<Self, OracleError> {
        if !is_odd_prime(p) || p > MAX_FIELD_PRIME {
            return Err(OracleError::NotAnOddPrime { p });
        }
        // Euler's criterion: nu^((p-1)/2) = -1.
        let nonresidue = (2..p)
            .find(|&n| pow_mod(n, (p - 1) / 2, p) == p - 1)
            .expect("an odd prime has a quadratic nonresidue");
        Ok(FqSquared {
            p: p as u32,
            nonresidue: nonresidue as u32,
        })
    }

    pub fn p(&self) -> u64 {
        u64::from(self.p)
    }

    /// Field size `q = p^2`.
    pub fn order(&self) -> u64 {
        self.p() * self.p()
    }

    pub fn nonresidue(&self) -> u64 {
        u64::from(self.nonresidue)
    }

    pub fn element(&self, a: u64, b: u64) -> Fp2 {
        Fp2 {
            a: (a % self.p()) as u32,
            b: (b % self.p()) as u32,
        }
    }

    /// The prime-field element `a`.
    pub fn scalar(&self, a: u64) -> Fp2 {
        self.element(a, 0)
    }

    /// Bijection `0..q -> GF(p^2)`, `i -> (i mod p) + (i div p) w`.
    pub fn from_index(&self, index: u64) -> Fp2 {
        debug_assert!(index < self.order());
        self.element(index % self.p(), index / self.p())
    }

    pub fn index(&self, x: Fp2) -> u64 {
        u64::from(x.a) + u64::from(x.b) * self.p()
    }

    pub fn elements(&self) -> impl Iterator<Item = Fp2> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }

    fn reduce(&self, x: u64) -> u32 {
        (x % self.p()) as u32
    }

    pub fn add(&self, x: Fp2, y: Fp2) -> Fp2 {
        Fp2 {
            a: self.reduce(u64::from(x.a) + u64::from(y.a)),
            b: self.reduce(u64::from(x.b) + u64::from(y.b)),
        }
    }

    pub fn neg(&self, x: Fp2) -> Fp2 {
        Fp2 {
            a: self.reduce(self.p() - u64::from(x.a)),
            b: self.reduce(self.p() - u64::from(x.b)),
        }
    }

    pub fn sub(&self, x: Fp2, y: Fp2) -> Fp2 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Fp2, y: Fp2) -> Fp2 {
        let p = self.p();
        let (xa, xb, ya, yb) = (
            u64::from(x.a),
            u64::from(x.b),
            u64::from(y.a),
            u64::from(y.b),
        );
        let bd = xb * yb % p;
        Fp2 {
            a: self.reduce(xa * ya % p + self.nonresidue() * bd % p),
            b: self.reduce(xa * yb % p + xb * ya % p),
        }
    }

    /// `a - b w`.
    pub fn conjugate(&self, x: Fp2) -> Fp2 {
        Fp2 {
            a: x.a,
            b: self.reduce(self.p() - u64::from(x.b)),
        }
    }

    /// `x * conj(x) = a^2 - nu b^2`, an element of `GF(p)`.
    pub fn norm(&self, x: Fp2) -> u64 {
        let p = self.p();
        let a2 = u64::from(x.a) * u64::from(x.a) % p;
        let b2 = u64::from(x.b) * u64::from(x.b) % p;
        (a2 + p - self.nonresidue() * b2 % p) % p
    }

    pub fn inverse(&self, x: Fp2) -> Option<Fp2> {
        if x.is_zero() {
            return None;
        }
        let norm_inv = pow_mod(self.norm(x), self.p() - 2, self.p());
        Some(self.mul(self.conjugate(x), self.scalar(norm_inv)))
    }

    pub fn pow(&self, x: Fp2, mut exp: u64) -> Fp2 {
        let mut acc = Fp2::ONE;
        let mut base = x;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Frobenius `x -> x^p` computed by exponentiation.
    pub fn frobenius(&self, x: Fp2) -> Fp2 {
        self.pow(x, self.p())
    }

    pub fn is_in_prime_field(&self, x: Fp2) -> bool {
        x.b == 0
    }
}
