//! Exhaustive search of `x² + 7 = 2ⁿ` and the even-exponent case.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::decimal;
use crate::ring::is_power_of_two;

/// A non-negative solution `x` of `x² + 7 = 2ⁿ`; `−x` is a solution too.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SolutionPair {
    #[serde(with = "decimal")]
    pub x: BigInt,
    pub n: u64,
}

impl SolutionPair {
    pub fn holds(&self) -> bool {
        &self.x * &self.x + 7 == BigInt::one() << self.n
    }
}

/// `⌊√n⌋` by Newton iteration, checked `r² ≤ n < (r + 1)²` on exit.
pub fn isqrt(n: &BigUint) -> BigUint {
    if n < &BigUint::from(2u32) {
        return n.clone();
    }
    // 2^ceil(bits/2) > √n, so the iteration decreases monotonically
    let mut x = BigUint::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    assert!(
        &x * &x <= *n && (&x + 1u32) * (&x + 1u32) > *n,
        "integer square root post-check failed"
    );
    x
}

/// `Some(r)` when `n = r²` for a non-negative integer `r`.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let n = n.magnitude();
    let r = isqrt(n);
    (&r * &r == *n).then(|| BigInt::from(r))
}

/// Every `(x, n)` with `x ≥ 0`, `1 ≤ n ≤ n_max` and `x² + 7 = 2ⁿ`, sorted by `n`.
pub fn brute_force_search(n_max: u64) -> Vec<SolutionPair> {
    let seven = BigInt::from(7);
    let mut out = Vec::new();
    let mut power = BigInt::one();
    for n in 1..=n_max {
        power <<= 1;
        if let Some(x) = exact_sqrt(&(&power - &seven)) {
            out.push(SolutionPair { x, n });
        }
    }
    out
}

/// Step-by-step record of the even case `(2^{n/2} + x)(2^{n/2} − x) = 7`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvenCaseDerivation {
    /// Positive factorizations `small × big` of 7 with `small ≤ big`.
    pub factor_pairs: Vec<[u64; 2]>,
    /// `small + big = 2^{1 + n/2}`.
    #[serde(with = "decimal")]
    pub two_pow_one_plus_half_n: BigInt,
    /// `2^{n/2}`.
    #[serde(with = "decimal")]
    pub half_power: BigInt,
    pub half_power_is_power_of_two: bool,
    pub n: u64,
    #[serde(with = "decimal")]
    pub x: BigInt,
    pub equation_holds: bool,
    pub ok: bool,
}

impl EvenCaseDerivation {
    pub fn solution(&self) -> SolutionPair {
        SolutionPair {
            x: self.x.clone(),
            n: self.n,
        }
    }
}

/// Solves the even case: `2^{n/2} + x` and `2^{n/2} − x` are complementary
/// positive divisors of 7 (the larger one first since `x ≥ 0`).
pub fn even_case() -> EvenCaseDerivation {
    const RHS: u64 = 7;
    let factor_pairs: Vec<[u64; 2]> = (1..=RHS)
        .filter(|s| RHS.is_multiple_of(*s) && s * s <= RHS)
        .map(|s| [s, RHS / s])
        .collect();

    let mut found = None;
    for &[small, big] in &factor_pairs {
        let sum = small + big;
        let diff = big - small;
        if sum % 2 != 0 || diff % 2 != 0 {
            continue;
        }
        let half_power = BigInt::from(sum / 2);
        if !is_power_of_two(&half_power) {
            continue;
        }
        let half_n = half_power.bits() - 1;
        found = Some((
            BigInt::from(sum),
            half_power,
            2 * half_n,
            BigInt::from(diff / 2),
        ));
        break;
    }

    match found {
        Some((sum, half_power, n, x)) => {
            let equation_holds = &x * &x + 7 == BigInt::one() << n;
            let half_power_is_power_of_two = is_power_of_two(&half_power);
            EvenCaseDerivation {
                ok: factor_pairs.len() == 1 && equation_holds && half_power_is_power_of_two,
                factor_pairs,
                two_pow_one_plus_half_n: sum,
                half_power,
                half_power_is_power_of_two,
                n,
                x,
                equation_holds,
            }
        }
        None => EvenCaseDerivation {
            factor_pairs,
            two_pow_one_plus_half_n: BigInt::zero(),
            half_power: BigInt::zero(),
            half_power_is_power_of_two: false,
            n: 0,
            x: BigInt::zero(),
            equation_holds: false,
            ok: false,
        },
    }
}
