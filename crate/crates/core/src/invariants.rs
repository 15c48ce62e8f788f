//! Algebraic invariants of an imaginary quadratic order: discriminant, unit
//! group, prime-norm irreducibility, association, and the Minkowski-bound
//! class number criterion.

use num_integer::Roots;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::padic::is_prime;
use crate::ring::{QuadInt, RingParams};

/// Certified rational lower bound `π > 333/106`.
pub const PI_LOWER_NUM: u64 = 333;
pub const PI_LOWER_DEN: u64 = 106;

/// The finite unit group of an imaginary quadratic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitSet {
    elements: Vec<QuadInt>,
}

impl UnitSet {
    pub fn elements(&self) -> &[QuadInt] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &QuadInt) -> bool {
        self.elements.contains(x)
    }
}

/// Discriminant of the basis `{1, ω}`: `e² + 4d`.
pub fn discriminant(params: RingParams) -> i128 {
    params.form_discriminant()
}

fn require_imaginary(params: RingParams) -> Result<i128> {
    let disc = discriminant(params);
    if disc >= 0 {
        Err(Error::NonImaginary(disc))
    } else {
        Ok(disc)
    }
}

/// All elements of norm 1, by complete enumeration of the norm ellipse.
///
/// Completing the square, `4·N(a + bω) = (2a + eb)² + |D|·b²`, so a unit has
/// `|D|·b² ≤ 4` and `2a + eb = ±sqrt(4 − |D|·b²)`.
pub fn enumerate_units(params: RingParams) -> Result<UnitSet> {
    let abs_disc = (-require_imaginary(params)?) as u128;
    let e = i128::from(params.e());
    let mut elements = Vec::new();
    let mut b_abs: i128 = 0;
    while abs_disc * (b_abs * b_abs) as u128 <= 4 {
        let rest = 4 - abs_disc * (b_abs * b_abs) as u128;
        let t = rest.sqrt();
        if t * t == rest {
            let t = t as i128;
            for b in signed_pair(b_abs) {
                for t in signed_pair(t) {
                    let twice_a = t - e * b;
                    if twice_a % 2 == 0 {
                        elements.push(QuadInt::new(twice_a / 2, b, params));
                    }
                }
            }
        }
        b_abs += 1;
    }
    elements.sort_by(|x, y| (x.a(), x.b()).cmp(&(y.a(), y.b())));
    Ok(UnitSet { elements })
}

fn signed_pair(v: i128) -> Vec<i128> {
    if v == 0 {
        vec![0]
    } else {
        vec![v, -v]
    }
}

/// `true` when `|N(x)|` is a rational prime, which certifies `x` irreducible.
///
/// One-sided: `false` means "not certified", not "reducible". Norms beyond
/// 64 bits are never certified.
pub fn irreducible_by_norm(x: &QuadInt) -> bool {
    match x.norm().abs().to_u64() {
        Some(n) => is_prime_u64(n),
        None => false,
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 1 << 32 {
        return is_prime(n);
    }
    miller_rabin(n)
}

// Deterministic for all u64 with these witnesses.
fn miller_rabin(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        if a % n == 0 {
            continue;
        }
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `true` iff `x = u·y` for a unit `u`.
///
/// Imaginary orders use the enumerated unit group; otherwise falls back to
/// mutual divisibility.
pub fn associated(x: &QuadInt, y: &QuadInt) -> Result<bool> {
    if x.params() != y.params() {
        // reuse the ring's mismatch error
        return x.try_sub(y).map(|_| false);
    }
    if discriminant(x.params()) < 0 {
        for u in enumerate_units(x.params())?.elements() {
            if &u.try_mul(y)? == x {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    match (x.is_zero(), y.is_zero()) {
        (true, true) => Ok(true),
        (true, false) | (false, true) => Ok(false),
        _ => Ok(x.exact_div(y)?.is_some() && y.exact_div(x)?.is_some()),
    }
}

/// Whether `|disc| < π²`, decided exactly as `|disc|·106² < 333²`.
///
/// `true` puts the Minkowski bound `(2/π)·sqrt(|disc|)` below 2, which forces
/// class number 1. `false` is inconclusive.
pub fn minkowski_pid_check(params: RingParams) -> Result<bool> {
    let abs_disc = (-require_imaginary(params)?) as u128;
    let den = u128::from(PI_LOWER_DEN);
    let num = u128::from(PI_LOWER_NUM);
    Ok(abs_disc * den * den < num * num)
}
