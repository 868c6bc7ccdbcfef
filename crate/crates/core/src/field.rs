//! Prime field arithmetic.
//!
//! Internally every routine in the crate works on raw `u32` residues with a
//! [`PrimeField`] context; [`FpElement`] is the self-describing value type
//! exposed for callers that want mismatched moduli caught at runtime.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported modulus (exclusive). Products of two residues fit in `u64`
/// with plenty of room.
pub const MAX_MODULUS: u32 = 1 << 16;

/// The prime field `F_p`, `p < 2^16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..MAX_MODULUS).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Canonical residue of any signed integer.
    #[inline]
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
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

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce(t0))
    }

    pub fn elem(&self, v: i64) -> FpElement {
        FpElement {
            value: self.reduce(v),
            p: self.p,
        }
    }

    pub fn zero(&self) -> FpElement {
        self.elem(0)
    }

    pub fn one(&self) -> FpElement {
        self.elem(1)
    }

    /// All field elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.p
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A residue modulo `p` that carries its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpElement {
    value: u32,
    p: u32,
}

/// Binary operation selector for [`FpElement::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
}

impl FpElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Self) -> Result<PrimeField> {
        if self.p != other.p {
            return Err(Error::FieldMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(self.field())
    }

    pub fn apply(&self, other: &Self, op: FieldOp) -> Result<Self> {
        let f = self.same_field(other)?;
        let value = match op {
            FieldOp::Add => f.add(self.value, other.value),
            FieldOp::Sub => f.sub(self.value, other.value),
            FieldOp::Mul => f.mul(self.value, other.value),
        };
        Ok(Self { value, p: self.p })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.apply(other, FieldOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.apply(other, FieldOp::Sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.apply(other, FieldOp::Mul)
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self {
            value: self.field().inv(self.value)?,
            p: self.p,
        })
    }

    pub fn pow(&self, exp: u64) -> Self {
        Self {
            value: self.field().pow(self.value, exp),
            p: self.p,
        }
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
