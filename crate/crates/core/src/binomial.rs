//! The sums `A_d`, `B_d` with `(1 + √−7)^d = A_d + B_d·√−7`, the shift
//! identity relating powers of θ, and the 7-adic lemmas on `B_d` and
//! `A′_d = (1 − A_d)/7`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::{v_p, Valuation};
use crate::ring::{sqrt_neg7, theta, theta_prime, QuadInt};

/// `A_d = Σ_j C(d, 2j)(−7)^j` and `B_d = Σ_j C(d, 2j+1)(−7)^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialPair {
    pub d: u64,
    pub a_part: BigInt,
    pub b_part: BigInt,
}

impl BinomialPair {
    /// `(1 + √−7)^d` in the (−2, 1) presentation: `A_d + B_d·(2ω − 1)`.
    pub fn as_quad_int(&self) -> QuadInt {
        let root = sqrt_neg7();
        QuadInt::from_integer(self.a_part.clone(), root.params())
            .try_add(&root.scale(&self.b_part))
            .expect("same presentation")
    }
}

/// Direct summation with exact binomial coefficients, updated as
/// `C(d, k+1) = C(d, k)·(d − k)/(k + 1)`.
pub fn binom_sums(d: u64) -> Result<BinomialPair> {
    if d == 0 {
        return Err(Error::ZeroExponent);
    }
    let mut a_part = BigInt::zero();
    let mut b_part = BigInt::zero();
    let mut coeff = BigInt::one();
    let mut neg7_pow = BigInt::one();
    for k in 0..=d {
        if k % 2 == 0 {
            a_part += &coeff * &neg7_pow;
        } else {
            b_part += &coeff * &neg7_pow;
            neg7_pow *= -7;
        }
        coeff = coeff * (d - k) / (k + 1);
    }
    Ok(BinomialPair { d, a_part, b_part })
}

/// `A′_d = (1 − A_d)/7`, always integral since every even term past `j = 0`
/// carries a factor of 7.
pub fn a_prime(d: u64) -> Result<BigInt> {
    a_prime_of(&binom_sums(d)?)
}

pub(crate) fn a_prime_of(pair: &BinomialPair) -> Result<BigInt> {
    let (q, r) = (BigInt::one() - &pair.a_part).div_rem(&BigInt::from(7));
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "7 does not divide 1 - A_{} = {}",
            pair.d,
            BigInt::one() - &pair.a_part
        )));
    }
    Ok(q)
}

/// Both sides of `θ^m − θ′^m = s·√−7`, one from the binomial sum and one
/// from ring arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaDifference {
    pub m: u64,
    /// `θ^m − θ′^m` as computed in `Z[ω]`.
    pub difference: QuadInt,
    /// `B_m`.
    pub b_sum: BigInt,
    /// `s` with `θ^m − θ′^m = s·√−7`.
    pub s: BigInt,
}

impl ThetaDifference {
    /// `B_m = s·2^{m−1}`; holds for every `m`.
    pub fn expansion_identity_holds(&self) -> bool {
        self.b_sum == &self.s << (self.m - 1)
    }

    /// `θ^m − θ′^m = −√−7`, equivalently `B_m = −2^{m−1}`.
    pub fn theta_equation_holds(&self) -> bool {
        self.s == BigInt::from(-1)
    }
}

/// Computes `B_m` and the `s` with `θ^m − θ′^m = s·√−7` for odd `m`.
pub fn theta_difference_via_b(m: u64) -> Result<ThetaDifference> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenExponent(m));
    }
    let difference = theta_difference(m);
    let s = sqrt_neg7_coefficient(&difference)?;
    let b_sum = binom_sums(m)?.b_part;
    Ok(ThetaDifference {
        m,
        difference,
        b_sum,
        s,
    })
}

pub(crate) fn theta_difference(m: u64) -> QuadInt {
    theta()
        .pow(m)
        .try_sub(&theta_prime().pow(m))
        .expect("same presentation")
}

// x = s(2ω − 1) = (−s, 2s) exactly when x has trace zero.
fn sqrt_neg7_coefficient(x: &QuadInt) -> Result<BigInt> {
    let (s, r) = x.b().div_rem(&BigInt::from(2));
    if !r.is_zero() || *x.a() != -&s {
        return Err(Error::Internal(format!(
            "{x} is not an integer multiple of √−7"
        )));
    }
    Ok(s)
}

/// Checks, exactly in `Z[ω]`,
/// `2^d(θ^{m1+d} − θ′^{m1+d}) = A_d(θ^{m1} − θ′^{m1}) + Tr(θ^{m1})·B_d·√−7`.
pub fn shift_identity_check(m1: u64, d: u64) -> Result<bool> {
    Ok(shift_identity_with(m1, &binom_sums(d)?))
}

pub(crate) fn shift_identity_with(m1: u64, pair: &BinomialPair) -> bool {
    let d = pair.d;
    let lhs = theta_difference(m1 + d).scale(&(BigInt::one() << d));
    let base = theta_difference(m1);
    let trace = theta().pow(m1).trace();
    let rhs = base
        .scale(&pair.a_part)
        .try_add(&sqrt_neg7().scale(&(trace * &pair.b_part)))
        .expect("same presentation");
    lhs == rhs
}

/// `(v₇(B_d), v₇(d))`.
pub fn valuation_lemma_b(d: u64) -> Result<(Valuation, Valuation)> {
    let pair = binom_sums(d)?;
    Ok((v_p(7, &pair.b_part)?, v_p(7, &BigInt::from(d))?))
}

/// Whether `7^{v₇(d)}` divides `A′_d`.
pub fn valuation_lemma_a_prime(d: u64) -> Result<bool> {
    a_prime_lemma_with(&binom_sums(d)?)
}

pub(crate) fn a_prime_lemma_with(pair: &BinomialPair) -> Result<bool> {
    let l = v_p(7, &BigInt::from(pair.d))?;
    let ap = a_prime_of(pair)?;
    Ok(v_p(7, &ap)? >= l)
}
