//! p-adic valuations of integers and lifting-the-exponent computations.

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent of a prime in an integer. `Infinite` is reserved for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

// Finite values serialize as numbers, the infinite one as the string "inf".
impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_u64(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(Valuation::Finite(v)),
            Repr::Str(s) if s == "inf" => Ok(Valuation::Infinite),
            Repr::Str(s) => Err(serde::de::Error::custom(format!("bad valuation {s:?}"))),
        }
    }
}

/// Trial division; the primes in play are single digit.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q * q <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// The exponent of the prime `p` in `n`; `Infinite` for `n = 0`.
pub fn v_p(p: u64, n: &BigInt) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(factor_out(p, n))
}

fn factor_out(p: u64, n: &BigInt) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    let mut rest = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        rest = q;
        v += 1;
    }
}

/// Largest bit length of `aⁿ` for which [`lte_pow_sub_one`] also factors
/// `aⁿ − 1` directly.
pub const LTE_DIRECT_CHECK_MAX_BITS: u64 = 1 << 18;

/// Result of a lifting-the-exponent evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lte {
    /// `v_p(a − 1) + v_p(n)`.
    pub valuation: Valuation,
    /// Whether `v_p(aⁿ − 1)` was also computed by factoring it out.
    pub checked_directly: bool,
}

/// `v_p(aⁿ − 1)` for an odd prime `p` with `p | a − 1`, computed as
/// `v_p(a − 1) + v_p(n)`.
///
/// When `aⁿ` is at most [`LTE_DIRECT_CHECK_MAX_BITS`] bits the value is also
/// obtained by direct factor-out and the two must agree.
pub fn lte_pow_sub_one(p: u64, a: &BigInt, n: u64) -> Result<Lte> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    let a_minus_one = a - BigInt::one();
    if !(&a_minus_one % p).is_zero() {
        return Err(Error::LtePrecondition {
            p,
            a: a.to_string(),
        });
    }
    let formula = factor_out(p, &a_minus_one) + factor_out(p, &BigInt::from(n));

    let bits = a.bits().saturating_mul(n);
    let checked_directly = bits <= LTE_DIRECT_CHECK_MAX_BITS;
    if checked_directly {
        let exp = u32::try_from(n).map_err(|_| Error::Internal("exponent overflow".into()))?;
        let direct = factor_out(p, &(num_traits::pow::pow(a.clone(), exp as usize) - 1));
        if direct != formula {
            return Err(Error::LteMismatch {
                formula: formula.to_string(),
                direct: direct.to_string(),
            });
        }
    }
    Ok(Lte {
        valuation: formula,
        checked_directly,
    })
}

/// `base^exp mod modulus` in `[0, modulus)`.
///
/// # Panics
///
/// If `modulus` is zero.
pub fn pow_mod(base: &BigInt, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1, "modulus must be positive");
    let m = u128::from(modulus);
    let mut b = u128::from(
        base.mod_floor(&BigInt::from(modulus))
            .to_u64()
            .expect("residue below modulus"),
    );
    let mut acc = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}
