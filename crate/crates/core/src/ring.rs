//! Exact arithmetic in the rank-2 order `Z[ω]`, `ω² = d + eω`.
//!
//! Elements carry their presentation; mixing presentations is an error
//! rather than an implicit conversion. Coordinates are arbitrary precision.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Presentation `(d, e)` of `Z[ω]` with `ω² = d + eω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingParams {
    d: i64,
    e: i64,
}

impl RingParams {
    /// `ω² = ω − 2`, so `ω = (1 + √−7)/2` and `Z[ω]` is the full ring of
    /// integers of `Q(√−7)`.
    pub const RAMANUJAN_NAGELL: RingParams = RingParams { d: -2, e: 1 };

    /// Rejects presentations whose form discriminant `e² + 4d` is a perfect
    /// square (those give split algebras with zero divisors).
    pub fn new(d: i64, e: i64) -> Result<Self> {
        let disc = i128::from(e) * i128::from(e) + 4 * i128::from(d);
        if disc >= 0 {
            let r = (disc as u128).sqrt();
            if r * r == disc as u128 {
                return Err(Error::DegeneratePresentation { d, e, disc });
            }
        }
        Ok(RingParams { d, e })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    /// `e² + 4d`.
    pub fn form_discriminant(&self) -> i128 {
        i128::from(self.e) * i128::from(self.e) + 4 * i128::from(self.d)
    }
}

impl fmt::Display for RingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω² = {} + {}ω", self.d, self.e)
    }
}

/// An element `a + bω` of `Z[ω]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    a: BigInt,
    b: BigInt,
    params: RingParams,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, params: RingParams) -> Self {
        QuadInt {
            a: a.into(),
            b: b.into(),
            params,
        }
    }

    pub fn zero(params: RingParams) -> Self {
        Self::new(0, 0, params)
    }

    pub fn one(params: RingParams) -> Self {
        Self::new(1, 0, params)
    }

    pub fn omega(params: RingParams) -> Self {
        Self::new(0, 1, params)
    }

    pub fn from_integer(n: impl Into<BigInt>, params: RingParams) -> Self {
        Self::new(n, 0, params)
    }

    /// Coefficient of 1.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of ω.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check_params(&self, other: &QuadInt) -> Result<()> {
        if self.params == other.params {
            Ok(())
        } else {
            Err(Error::ParamsMismatch {
                left: self.params.to_string(),
                right: other.params.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &QuadInt) -> Result<QuadInt> {
        self.check_params(other)?;
        Ok(QuadInt {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            params: self.params,
        })
    }

    pub fn try_sub(&self, other: &QuadInt) -> Result<QuadInt> {
        self.check_params(other)?;
        Ok(QuadInt {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            params: self.params,
        })
    }

    pub fn try_mul(&self, other: &QuadInt) -> Result<QuadInt> {
        self.check_params(other)?;
        Ok(self.mul_same(other))
    }

    // (a1 + b1ω)(a2 + b2ω) = (a1a2 + d·b1b2) + (a1b2 + a2b1 + e·b1b2)ω
    fn mul_same(&self, other: &QuadInt) -> QuadInt {
        let bb = &self.b * &other.b;
        let a = &self.a * &other.a + &bb * self.params.d;
        let b = &self.a * &other.b + &other.a * &self.b + bb * self.params.e;
        QuadInt {
            a,
            b,
            params: self.params,
        }
    }

    /// Multiplies every coordinate by an integer.
    pub fn scale(&self, k: &BigInt) -> QuadInt {
        QuadInt {
            a: &self.a * k,
            b: &self.b * k,
            params: self.params,
        }
    }

    /// The Galois conjugate: sends ω to the other root `e − ω` of `t² − et − d`.
    pub fn conj(&self) -> QuadInt {
        QuadInt {
            a: &self.a + &self.b * self.params.e,
            b: -&self.b,
            params: self.params,
        }
    }

    /// `a² + e·ab − d·b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b * self.params.e - &self.b * &self.b * self.params.d
    }

    /// `2a + e·b`.
    pub fn trace(&self) -> BigInt {
        &self.a * 2 + &self.b * self.params.e
    }

    /// Binary exponentiation; `x⁰ = 1`.
    pub fn pow(&self, mut m: u64) -> QuadInt {
        let mut result = QuadInt::one(self.params);
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                result = result.mul_same(&base);
            }
            m >>= 1;
            if m > 0 {
                base = base.mul_same(&base);
            }
        }
        result
    }

    /// Returns `Some(q)` with `self = q · divisor` when such `q` exists in
    /// `Z[ω]`, `None` otherwise.
    ///
    /// Uses `q = self · conj(divisor) / norm(divisor)`; the norm is nonzero for
    /// nonzero divisors because the presentation is non-degenerate.
    pub fn exact_div(&self, divisor: &QuadInt) -> Result<Option<QuadInt>> {
        self.check_params(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = divisor.norm();
        let num = self.mul_same(&divisor.conj());
        let (qa, ra) = num.a.div_rem(&n);
        if !ra.is_zero() {
            return Ok(None);
        }
        let (qb, rb) = num.b.div_rem(&n);
        if !rb.is_zero() {
            return Ok(None);
        }
        Ok(Some(QuadInt {
            a: qa,
            b: qb,
            params: self.params,
        }))
    }

    pub fn divides(&self, x: &QuadInt) -> Result<bool> {
        Ok(x.exact_div(self)?.is_some())
    }
}

impl std::ops::Neg for &QuadInt {
    type Output = QuadInt;

    fn neg(self) -> QuadInt {
        QuadInt {
            a: -&self.a,
            b: -&self.b,
            params: self.params,
        }
    }
}

impl std::ops::Neg for QuadInt {
    type Output = QuadInt;

    fn neg(self) -> QuadInt {
        -&self
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

// Distinguished elements of the (−2, 1) presentation.

/// `θ = ω = (1 + √−7)/2`.
pub fn theta() -> QuadInt {
    QuadInt::omega(RingParams::RAMANUJAN_NAGELL)
}

/// `θ′ = 1 − θ = (1 − √−7)/2`.
pub fn theta_prime() -> QuadInt {
    QuadInt::new(1, -1, RingParams::RAMANUJAN_NAGELL)
}

/// `√−7 = 2ω − 1 = θ − θ′`.
pub fn sqrt_neg7() -> QuadInt {
    QuadInt::new(-1, 2, RingParams::RAMANUJAN_NAGELL)
}

/// `true` when `|n|` is a power of two (including 1).
pub(crate) fn is_power_of_two(n: &BigInt) -> bool {
    let m = n.abs();
    !m.is_zero() && (&m & (&m - BigInt::one())).is_zero()
}
