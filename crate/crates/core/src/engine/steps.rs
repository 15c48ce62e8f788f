//! The odd-case proof steps: residue classes, theta equation, sign
//! exclusion, trace recurrence and the per-class 7-adic contradiction.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::binomial::{
    a_prime_lemma_with, a_prime_of, binom_sums, shift_identity_with, theta_difference, BinomialPair,
};
use crate::decimal;
use crate::error::{Error, Result};
use crate::padic::{lte_pow_sub_one, pow_mod, v_p, Valuation};
use crate::ring::{theta, theta_prime, QuadInt, RingParams};

pub const RESIDUE_MODULUS: u64 = 42;

/// Odd residues `r mod 42` with `−2^{r−1} ≡ r (mod 7)`.
///
/// `2^{r−1} mod 7` depends on `r mod 6` and the right side on `r mod 7`, so
/// one window of 42 consecutive integers covers every class.
pub fn residue_classes_mod_42() -> Vec<u64> {
    let two = BigInt::from(2);
    (1..RESIDUE_MODULUS)
        .step_by(2)
        .filter(|&r| (7 - pow_mod(&two, r - 1, 7)) % 7 == r % 7)
        .collect()
}

/// Outcome of comparing `θ^m − θ′^m` against `−√−7 = 1 − 2ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaCheck {
    pub m: u64,
    pub holds: bool,
    /// `a_m = Tr(θ^m)`; `|a_m|` is the candidate `x` for `n = m + 2`.
    pub trace: BigInt,
}

impl ThetaCheck {
    pub fn x_candidate(&self) -> BigInt {
        self.trace.abs()
    }
}

/// Checks `θ^m − θ′^m = 1 − 2ω` exactly for odd `m`.
pub fn verify_theta_equation(m: u64) -> Result<ThetaCheck> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenExponent(m));
    }
    let target = QuadInt::new(1, -2, RingParams::RAMANUJAN_NAGELL);
    let power = theta().pow(m);
    let difference = power.try_sub(&theta_prime().pow(m))?;
    Ok(ThetaCheck {
        m,
        holds: difference == target,
        trace: power.trace(),
    })
}

/// The two divisibility facts that exclude `θ^m − θ′^m = +√−7`:
/// `θ′² | θ^m − θ` and `θ′² ∤ θ′`.
pub fn sign_exclusion(m: u64) -> Result<bool> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenExponent(m));
    }
    if m < 3 {
        return Err(Error::ExponentTooSmall(m));
    }
    let tp2 = theta_prime().pow(2);
    let congruent = theta().pow(m).try_sub(&theta())?.exact_div(&tp2)?.is_some();
    Ok(congruent && !theta_prime_sq_divides_theta_prime())
}

pub(crate) fn theta_prime_sq_divides_theta_prime() -> bool {
    theta_prime()
        .exact_div(&theta_prime().pow(2))
        .expect("nonzero divisor")
        .is_some()
}

/// `a_0..=a_{m_max}` with `a_0 = 2`, `a_1 = 1`, `a_m = a_{m−1} − 2a_{m−2}`.
pub fn trace_sequence(m_max: u64) -> Result<Vec<BigInt>> {
    if m_max < 2 {
        return Err(Error::InvalidBound {
            name: "m_max",
            value: m_max,
        });
    }
    let mut seq = Vec::with_capacity(m_max as usize + 1);
    seq.push(BigInt::from(2));
    seq.push(BigInt::one());
    for m in 2..=m_max as usize {
        let next = &seq[m - 1] - (&seq[m - 2] << 1);
        seq.push(next);
    }
    Ok(seq)
}

/// Values of `a_m mod 7` for `m ≡ 0, 1, 2 (mod 3)`.
pub const TRACE_PERIOD_MOD_7: [u64; 3] = [2, 1, 4];

/// 7-adic bookkeeping for a hypothetical second solution `m1 + 42k` in the
/// class of the witness `m1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniquenessReport {
    pub m1: u64,
    pub k: u64,
    pub d: u64,
    /// `v₇(d)`.
    pub l: Valuation,
    /// `P = Tr(θ^{m1})`.
    #[serde(with = "decimal")]
    pub p_trace: BigInt,
    pub v_p_trace: Valuation,
    /// `v₇(B_d)`.
    pub v_b: Valuation,
    /// `7^l | A′_d`.
    pub a_prime_divisible: bool,
    /// `v₇(2^d − 1)` by lifting the exponent on `64^{d/6}`.
    pub v_two_pow_d_minus_one: Valuation,
    pub lte_checked_directly: bool,
    /// `v₇(P·B_d)`.
    pub v_lhs: Valuation,
    /// Certified lower bound on `v₇(A_d − 2^d) = v₇(1 − 7A′_d − 2^d)`.
    pub v_rhs_bound: Valuation,
    /// `v₇(A_d − 2^d)` computed directly.
    pub v_rhs_actual: Valuation,
    /// The unconditional shift identity at `(m1, d)`.
    pub shift_identity: bool,
    /// Whether `P·B_d = A_d − 2^d` holds (it must not).
    pub conditional_identity: bool,
    pub contradiction: bool,
}

impl UniquenessReport {
    /// Everything the contradiction depends on checks out.
    pub fn consistent(&self) -> bool {
        self.contradiction
            && self.shift_identity
            && !self.conditional_identity
            && self.v_rhs_actual >= self.v_rhs_bound
    }
}

/// Derives the 7-adic contradiction for `m1` and `m2 = m1 + 42k`.
pub fn uniqueness_contradiction(m1: u64, k: u64) -> Result<UniquenessReport> {
    if k == 0 {
        return Err(Error::InvalidBound {
            name: "k",
            value: 0,
        });
    }
    let d = RESIDUE_MODULUS * k;
    uniqueness_with(m1, k, &binom_sums(d)?)
}

pub(crate) fn uniqueness_with(m1: u64, k: u64, pair: &BinomialPair) -> Result<UniquenessReport> {
    if m1.is_multiple_of(2) || !verify_theta_equation(m1)?.holds {
        return Err(Error::NotAWitness(m1));
    }
    let d = pair.d;
    debug_assert_eq!(d, RESIDUE_MODULUS * k);
    let seven = 7;
    let l = v_p(seven, &BigInt::from(d))?;

    let p_trace = theta().pow(m1).trace();
    let v_p_trace = v_p(seven, &p_trace)?;
    let v_b = v_p(seven, &pair.b_part)?;
    let a_prime_divisible = a_prime_lemma_with(pair)?;

    // 2^d = 64^{d/6}, and 7 | 64 − 1
    let lte = lte_pow_sub_one(seven, &BigInt::from(64), d / 6)?;
    let v_two_pow_d_minus_one = lte.valuation;

    let v_lhs = v_p(seven, &(&p_trace * &pair.b_part))?;

    // A_d − 2^d = −(2^d − 1) − 7A′_d
    let a_prime_term = if a_prime_divisible {
        l + Valuation::Finite(1)
    } else {
        Valuation::Finite(1) + v_p(seven, &a_prime_of(pair)?)?
    };
    let v_rhs_bound = v_two_pow_d_minus_one.min(a_prime_term);

    let two_pow_d = BigInt::one() << d;
    let rhs = &pair.a_part - &two_pow_d;
    let v_rhs_actual = v_p(seven, &rhs)?;
    let conditional_identity = &p_trace * &pair.b_part == rhs;
    let shift_identity = shift_identity_with(m1, pair);

    let contradiction =
        v_p_trace == Valuation::Finite(0) && v_b == l && v_lhs == l && v_lhs < v_rhs_bound;

    Ok(UniquenessReport {
        m1,
        k,
        d,
        l,
        p_trace,
        v_p_trace,
        v_b,
        a_prime_divisible,
        v_two_pow_d_minus_one,
        lte_checked_directly: lte.checked_directly,
        v_lhs,
        v_rhs_bound,
        v_rhs_actual,
        shift_identity,
        conditional_identity,
        contradiction,
    })
}

/// `θ^m − θ′^m` for the CLI and diagnostics.
pub fn theta_power_difference(m: u64) -> QuadInt {
    theta_difference(m)
}
