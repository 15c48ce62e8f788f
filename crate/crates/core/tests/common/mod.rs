//! Property suites shared by `tests/properties.rs` and the acceptance runner.
//!
//! Each suite drives a proptest [`TestRunner`] and counts the cases it
//! actually executed.
#![allow(dead_code)]

use std::cell::Cell;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use nagell::binomial::{
    binom_sums, shift_identity_check, theta_difference_via_b, valuation_lemma_a_prime,
    valuation_lemma_b,
};
use nagell::invariants::{associated, discriminant, enumerate_units};
use nagell::padic::{lte_pow_sub_one, pow_mod, v_p, Valuation};
use nagell::ring::{sqrt_neg7, theta, theta_prime};
use nagell::{Error, QuadInt, RingParams};

pub const CASES: u32 = 1000;

pub type SuiteFn = fn(&mut TestRunner, &Cell<u32>) -> Result<(), String>;

pub const SUITES: &[(&str, SuiteFn)] = &[
    ("ring_axioms", ring_axioms),
    ("conj_homomorphism_and_involution", conj_homomorphism),
    ("norm_multiplicative", norm_multiplicative),
    ("x_times_conj_is_norm", x_times_conj),
    ("pow_matches_naive", pow_matches_naive),
    ("norm_positive_in_rn_ring", norm_positive_rn),
    ("exact_div_round_trip", exact_div_round_trip),
    ("params_mismatch_rejected", params_mismatch),
    (
        "theta_prime_sq_divides_theta_pow_minus_theta",
        theta_prime_sq_divides,
    ),
    ("units_form_group", units_form_group),
    ("valuation_additive", valuation_additive),
    ("valuation_ultrametric", valuation_ultrametric),
    ("lte_seven_adic_power_of_two", lte_seven_power_of_two),
    ("lte_general_matches_direct", lte_general),
    ("pow_mod_matches_naive", pow_mod_naive),
    ("binom_sums_match_ring_power", binom_sums_vs_ring),
    ("b_sum_congruent_mod_7", b_congruent_mod_7),
    ("theta_expansion_identity", theta_expansion),
    ("b_sum_valuation", b_sum_valuation),
    ("a_prime_valuation", a_prime_valuation),
    ("shift_identity", shift_identity),
];

pub fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

/// Runs one suite on a fresh runner; `Ok(cases)` on success.
pub fn run_suite(suite: SuiteFn) -> Result<u32, String> {
    let count = Cell::new(0);
    suite(&mut runner(), &count)?;
    Ok(count.get())
}

fn report<T: std::fmt::Debug>(
    r: Result<(), proptest::test_runner::TestError<T>>,
) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

// ---- strategies ----

/// Integers of up to `bits` bits, biased toward tiny values and zero.
pub fn big(bits: usize) -> impl Strategy<Value = BigInt> {
    let digits = (bits / 32).max(1);
    prop_oneof![
        1 => (-3i64..=3).prop_map(BigInt::from),
        2 => any::<i64>().prop_map(BigInt::from),
        4 => (any::<bool>(), prop::collection::vec(any::<u32>(), 1..=digits)).prop_map(
            |(neg, ds)| BigInt::from_slice(if neg { Sign::Minus } else { Sign::Plus }, &ds)
        ),
    ]
}

pub fn params() -> impl Strategy<Value = RingParams> {
    prop_oneof![
        1 => Just(RingParams::RAMANUJAN_NAGELL),
        3 => (-60i64..60, -12i64..12)
            .prop_filter_map("square discriminant", |(d, e)| RingParams::new(d, e).ok()),
    ]
}

fn imaginary_params() -> impl Strategy<Value = RingParams> {
    (-60i64..0, -12i64..12).prop_filter_map("not imaginary", |(d, e)| {
        RingParams::new(d, e).ok().filter(|p| discriminant(*p) < 0)
    })
}

fn elem(p: RingParams, a: &BigInt, b: &BigInt) -> QuadInt {
    QuadInt::new(a.clone(), b.clone(), p)
}

fn add(x: &QuadInt, y: &QuadInt) -> QuadInt {
    x.try_add(y).unwrap()
}

fn mul(x: &QuadInt, y: &QuadInt) -> QuadInt {
    x.try_mul(y).unwrap()
}

/// `v_p(n)` by repeated division; `None` for zero.
pub fn v_by_division(p: u64, n: &BigInt) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

fn as_option(v: Valuation) -> Option<u64> {
    v.finite()
}

// ---- ring ----

pub fn ring_axioms(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = (
        params(),
        big(256),
        big(256),
        big(256),
        big(256),
        big(256),
        big(256),
    );
    report(r.run(&s, |(p, a1, b1, a2, b2, a3, b3)| {
        n.set(n.get() + 1);
        let (x, y, z) = (elem(p, &a1, &b1), elem(p, &a2, &b2), elem(p, &a3, &b3));
        let zero = QuadInt::zero(p);
        let one = QuadInt::one(p);
        prop_assert_eq!(add(&add(&x, &y), &z), add(&x, &add(&y, &z)));
        prop_assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
        prop_assert_eq!(add(&x, &y), add(&y, &x));
        prop_assert_eq!(mul(&x, &y), mul(&y, &x));
        prop_assert_eq!(mul(&x, &add(&y, &z)), add(&mul(&x, &y), &mul(&x, &z)));
        prop_assert_eq!(add(&x, &zero), x.clone());
        prop_assert_eq!(mul(&x, &one), x.clone());
        prop_assert!(add(&x, &-&x).is_zero());
        prop_assert_eq!(x.try_sub(&y).unwrap(), add(&x, &-&y));
        Ok(())
    }))
}

pub fn conj_homomorphism(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = (params(), big(256), big(256), big(256), big(256));
    report(r.run(&s, |(p, a1, b1, a2, b2)| {
        n.set(n.get() + 1);
        let (x, y) = (elem(p, &a1, &b1), elem(p, &a2, &b2));
        prop_assert_eq!(add(&x, &y).conj(), add(&x.conj(), &y.conj()));
        prop_assert_eq!(mul(&x, &y).conj(), mul(&x.conj(), &y.conj()));
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(x.conj().norm(), x.norm());
        Ok(())
    }))
}

pub fn norm_multiplicative(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = (params(), big(256), big(256), big(256), big(256));
    report(r.run(&s, |(p, a1, b1, a2, b2)| {
        n.set(n.get() + 1);
        let (x, y) = (elem(p, &a1, &b1), elem(p, &a2, &b2));
        prop_assert_eq!(mul(&x, &y).norm(), x.norm() * y.norm());
        Ok(())
    }))
}

pub fn x_times_conj(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = (params(), big(256), big(256));
    report(r.run(&s, |(p, a, b)| {
        n.set(n.get() + 1);
        let x = elem(p, &a, &b);
        prop_assert_eq!(mul(&x, &x.conj()), QuadInt::from_integer(x.norm(), p));
        prop_assert_eq!(add(&x, &x.conj()), QuadInt::from_integer(x.trace(), p));
        // norm as the determinant of multiplication by x on the basis (1, ω)
        let (d, e) = (BigInt::from(p.d()), BigInt::from(p.e()));
        let det = &a * (&a + &e * &b) - &d * &b * &b;
        prop_assert_eq!(x.norm(), det);
        Ok(())
    }))
}

pub fn pow_matches_naive(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = (params(), big(256), big(256), 0u64..=64);
    report(r.run(&s, |(p, a, b, m)| {
        n.set(n.get() + 1);
        let x = elem(p, &a, &b);
        let mut naive = QuadInt::one(p);
        for _ in 0..m {
            naive = mul(&naive, &x);
        }
        prop_assert_eq!(x.pow(m), naive);
        Ok(())
    }))
}

pub fn norm_positive_rn(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let p = RingParams::RAMANUJAN_NAGELL;
    report(r.run(&(big(256), big(256)), |(a, b)| {
        n.set(n.get() + 1);
        let x = elem(p, &a, &b);
        if x.is_zero() {
            prop_assert!(x.norm().is_zero());
        } else {
            prop_assert!(x.norm().is_positive());
        }
        Ok(())
    }))
}

pub fn exact_div_round_trip(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = (params(), big(256), big(256), big(128), big(128));
    report(r.run(&s, |(p, a1, b1, a2, b2)| {
        n.set(n.get() + 1);
        let (x, y) = (elem(p, &a1, &b1), elem(p, &a2, &b2));
        if y.is_zero() {
            prop_assert_eq!(x.exact_div(&y), Err(Error::DivisionByZero));
            return Ok(());
        }
        prop_assert_eq!(mul(&x, &y).exact_div(&y).unwrap(), Some(x.clone()));
        if let Some(q) = x.exact_div(&y).unwrap() {
            prop_assert_eq!(mul(&q, &y), x.clone());
        }
        Ok(())
    }))
}

pub fn params_mismatch(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = (params(), params(), big(64), big(64));
    report(r.run(&s, |(p, q, a, b)| {
        n.set(n.get() + 1);
        let (x, y) = (elem(p, &a, &b), elem(q, &b, &a));
        let mismatch = p != q;
        prop_assert_eq!(x.try_add(&y).is_err(), mismatch);
        prop_assert_eq!(x.try_sub(&y).is_err(), mismatch);
        prop_assert_eq!(x.try_mul(&y).is_err(), mismatch);
        if mismatch {
            let named = matches!(x.try_mul(&y), Err(Error::ParamsMismatch { .. }));
            prop_assert!(named);
            prop_assert!(x.exact_div(&y).is_err());
        }
        Ok(())
    }))
}

pub fn theta_prime_sq_divides(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let tp2 = theta_prime().pow(2);
    report(r.run(&(0u64..100), |i| {
        n.set(n.get() + 1);
        let m = 2 * i + 1;
        let diff = theta().pow(m).try_sub(&theta()).unwrap();
        let q = diff.exact_div(&tp2).unwrap();
        prop_assert!(q.is_some(), "θ′² ∤ θ^{} − θ", m);
        prop_assert_eq!(mul(&q.unwrap(), &tp2), diff);
        Ok(())
    }))
}

pub fn units_form_group(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = (imaginary_params(), big(64), big(64));
    report(r.run(&s, |(p, a, b)| {
        n.set(n.get() + 1);
        let units = enumerate_units(p).unwrap();
        let expected = match discriminant(p) {
            -3 => 6,
            -4 => 4,
            _ => 2,
        };
        prop_assert_eq!(units.len(), expected);
        let x = elem(p, &a, &b);
        for u in units.elements() {
            prop_assert!(u.norm().is_one());
            for v in units.elements() {
                prop_assert!(units.contains(&mul(u, v)));
            }
            prop_assert!(associated(&mul(u, &x), &x).unwrap());
        }
        Ok(())
    }))
}

// ---- p-adic ----

fn primes() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 101, 65_537])
}

fn with_power(p: u64) -> impl Strategy<Value = BigInt> {
    (big(128), 0u32..12).prop_map(move |(a, j)| a * BigInt::from(p).pow(j))
}

pub fn valuation_additive(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = primes().prop_flat_map(|p| (Just(p), with_power(p), with_power(p)));
    report(r.run(&s, |(p, a, b)| {
        n.set(n.get() + 1);
        let (va, vb) = (v_p(p, &a).unwrap(), v_p(p, &b).unwrap());
        let vab = v_p(p, &(&a * &b)).unwrap();
        prop_assert_eq!(vab, va + vb);
        prop_assert_eq!(as_option(va), v_by_division(p, &a));
        prop_assert_eq!(va == Valuation::Infinite, a.is_zero());
        Ok(())
    }))
}

pub fn valuation_ultrametric(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = primes().prop_flat_map(|p| (Just(p), with_power(p), with_power(p)));
    report(r.run(&s, |(p, a, b)| {
        n.set(n.get() + 1);
        let (va, vb) = (v_p(p, &a).unwrap(), v_p(p, &b).unwrap());
        let vs = v_p(p, &(&a + &b)).unwrap();
        prop_assert!(vs >= va.min(vb));
        if va != vb {
            prop_assert_eq!(vs, va.min(vb));
        }
        Ok(())
    }))
}

pub fn lte_seven_power_of_two(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let sixty_four = BigInt::from(64);
    report(r.run(&(1u64..=100), |k| {
        n.set(n.get() + 1);
        let lte = lte_pow_sub_one(7, &sixty_four, k).unwrap();
        let direct = v_by_division(7, &((BigInt::one() << (6 * k)) - 1u32));
        let expected = 1 + v_by_division(7, &BigInt::from(k)).unwrap();
        prop_assert!(lte.checked_directly);
        prop_assert_eq!(lte.valuation, Valuation::Finite(expected));
        prop_assert_eq!(direct, Some(expected));
        Ok(())
    }))
}

pub fn lte_general(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let odd = prop::sample::select(vec![3u64, 5, 7, 11, 13, 101]);
    let s = (
        odd,
        (-10_000i64..10_000).prop_filter("t ≠ 0", |t| *t != 0),
        1u64..=300,
    );
    report(r.run(&s, |(p, t, k)| {
        n.set(n.get() + 1);
        let a = BigInt::one() + BigInt::from(p) * t;
        let lte = lte_pow_sub_one(p, &a, k).unwrap();
        let direct = v_by_division(p, &(a.pow(k as u32) - 1u32));
        prop_assert_eq!(as_option(lte.valuation), direct);
        Ok(())
    }))
}

pub fn pow_mod_naive(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = (big(128), 0u64..300, 1u64..1_000_000_000);
    report(r.run(&s, |(base, e, m)| {
        n.set(n.get() + 1);
        let modulus = BigInt::from(m);
        let b = base.mod_floor(&modulus);
        let mut acc = BigInt::one().mod_floor(&modulus);
        for _ in 0..e {
            acc = (acc * &b).mod_floor(&modulus);
        }
        prop_assert_eq!(BigInt::from(pow_mod(&base, e, m)), acc);
        Ok(())
    }))
}

// ---- binomial ----

pub fn binom_sums_vs_ring(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let two_theta = QuadInt::new(0, 2, RingParams::RAMANUJAN_NAGELL);
    report(r.run(&(1u64..=300), |d| {
        n.set(n.get() + 1);
        let pair = binom_sums(d).unwrap();
        let rhs = QuadInt::from_integer(pair.a_part.clone(), RingParams::RAMANUJAN_NAGELL)
            .try_add(&sqrt_neg7().scale(&pair.b_part))
            .unwrap();
        prop_assert_eq!(two_theta.pow(d), rhs);
        Ok(())
    }))
}

pub fn b_congruent_mod_7(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let seven = BigInt::from(7);
    report(r.run(&(1u64..=500), |m| {
        n.set(n.get() + 1);
        let b = binom_sums(m).unwrap().b_part;
        prop_assert_eq!(b.mod_floor(&seven), BigInt::from(m % 7));
        Ok(())
    }))
}

pub fn theta_expansion(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    report(r.run(&(0u64..100), |i| {
        n.set(n.get() + 1);
        let m = 2 * i + 1;
        let t = theta_difference_via_b(m).unwrap();
        prop_assert_eq!(&t.b_sum, &(&t.s << (m - 1)));
        prop_assert_eq!(&t.difference, &sqrt_neg7().scale(&t.s));
        let ring_side = theta().pow(m).try_sub(&theta_prime().pow(m)).unwrap();
        prop_assert_eq!(t.difference, ring_side);
        Ok(())
    }))
}

pub fn b_sum_valuation(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    report(r.run(&(1u64..=500), |d| {
        n.set(n.get() + 1);
        let (vb, vd) = valuation_lemma_b(d).unwrap();
        prop_assert_eq!(vb, vd);
        let b = binom_sums(d).unwrap().b_part;
        prop_assert_eq!(v_by_division(7, &b), v_by_division(7, &BigInt::from(d)));
        Ok(())
    }))
}

pub fn a_prime_valuation(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    report(r.run(&(1u64..=500), |d| {
        n.set(n.get() + 1);
        prop_assert!(valuation_lemma_a_prime(d).unwrap());
        // 7^l | (1 − A)/7 ⇔ 7^{l+1} | 1 − A
        let l = v_by_division(7, &BigInt::from(d)).unwrap() as u32;
        let one_minus_a = BigInt::one() - binom_sums(d).unwrap().a_part;
        prop_assert!((one_minus_a % BigInt::from(7).pow(l + 1)).is_zero());
        Ok(())
    }))
}

pub fn shift_identity(r: &mut TestRunner, n: &Cell<u32>) -> Result<(), String> {
    let s = ((1u64..=10).prop_map(|i| 2 * i + 1), 1u64..=100);
    report(r.run(&s, |(m1, d)| {
        n.set(n.get() + 1);
        prop_assert!(
            shift_identity_check(m1, d).unwrap(),
            "m1 = {}, d = {}",
            m1,
            d
        );
        Ok(())
    }))
}
