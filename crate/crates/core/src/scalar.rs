//! Exact coefficient arithmetic: arbitrary-precision rationals for all
//! symbolic computation, and a word-sized prime field for randomized
//! nonzero tests (Schwartz–Zippel evaluations).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The exact scalar used throughout: always stored in lowest terms with a
/// positive denominator (guaranteed by `num_rational`).
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d.
pub fn rat2(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Default prime for probabilistic checks: 2^61 - 1 (Mersenne).
pub const DEFAULT_PRIME: u64 = 2_305_843_009_213_693_951;

/// Element of F_p for a runtime prime p < 2^62, kept as the canonical
/// representative in [0, p).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Fp {
        let r = v.rem_euclid(p as i64) as u64;
        Fp { v: r, p }
    }

    pub fn from_u64(v: u64, p: u64) -> Fp {
        Fp { v: v % p, p }
    }

    pub fn zero(p: u64) -> Fp {
        Fp { v: 0, p }
    }

    pub fn one(p: u64) -> Fp {
        Fp { v: 1 % p, p }
    }

    pub fn is_zero(&self) -> bool {
        self.v == 0
    }

    pub fn add(&self, rhs: &Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        let s = self.v + rhs.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }

    pub fn sub(&self, rhs: &Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        let s = if self.v >= rhs.v { self.v - rhs.v } else { self.v + self.p - rhs.v };
        Fp { v: s, p: self.p }
    }

    pub fn neg(&self) -> Fp {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }

    pub fn mul(&self, rhs: &Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        let prod = (self.v as u128 * rhs.v as u128) % self.p as u128;
        Fp { v: prod as u64, p: self.p }
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let mut base = *self;
        let mut acc = Fp::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse (p must be prime). None for zero.
    pub fn inv(&self) -> Option<Fp> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
}

/// Reduce a rational mod p. None when the denominator is divisible by p.
pub fn rat_mod(r: &Rat, p: u64) -> Option<Fp> {
    let num = bigint_mod(r.numer(), p);
    let den = bigint_mod(r.denom(), p);
    let den = Fp::from_u64(den, p);
    let inv = den.inv()?;
    Some(Fp::from_u64(num, p).mul(&inv))
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let m = n.mod_floor_u64(p);
    m
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let pi = BigInt::from(p);
        let r = self.mod_floor(&pi);
        // r in [0, p)
        let (_, digits) = r.to_u64_digits();
        match digits.len() {
            0 => 0,
            1 => digits[0],
            _ => unreachable!("residue below 2^62 fits one digit"),
        }
    }
}

/// True when the rational is an integer with |n| <= bound (test helper).
pub fn rat_is_small_int(r: &Rat, bound: i64) -> bool {
    r.denom().is_one() && r.numer().abs() <= BigInt::from(bound)
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}
