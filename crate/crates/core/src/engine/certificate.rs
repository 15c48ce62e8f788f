//! Certificate assembly, serialization and replay.
//!
//! A certificate records every checked step together with the bounds it was
//! produced under. Replaying recomputes the whole pipeline from those bounds
//! and compares field by field, so any edited value is caught.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::search::{brute_force_search, even_case, EvenCaseDerivation, SolutionPair};
use super::steps::{
    residue_classes_mod_42, sign_exclusion, theta_prime_sq_divides_theta_prime, trace_sequence,
    uniqueness_with, verify_theta_equation, UniquenessReport, RESIDUE_MODULUS, TRACE_PERIOD_MOD_7,
};
use crate::binomial::{a_prime_lemma_with, binom_sums, theta_difference_via_b, BinomialPair};
use crate::decimal;
use crate::error::{Error, Result};
use crate::invariants::{
    associated, discriminant, enumerate_units, irreducible_by_norm, minkowski_pid_check,
    PI_LOWER_DEN, PI_LOWER_NUM,
};
use crate::padic::{lte_pow_sub_one, v_p, Valuation};
use crate::ring::{theta, theta_prime, RingParams};

pub const ENGINE_NAME: &str = "nagell";
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest odd `m` for the sign-exclusion sweep (further capped by `n_max`).
pub const SIGN_EXCLUSION_M_MAX: u64 = 199;
/// Theta-equation records cover every odd `m` up to this bound.
pub const THETA_RECORD_M_MAX: u64 = 41;
pub const TRACE_PERIOD_M_MAX: u64 = 10_000;
pub const TRACE_CROSS_CHECK_M_MAX: u64 = 2_000;
pub const LTE_SWEEP_K_MAX: u64 = 100;

/// Bounds for [`full_verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VerifyConfig {
    pub n_max: u64,
    pub k_max: u64,
    pub d_sweep: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 1000,
            k_max: 50,
            d_sweep: 500,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("n_max", self.n_max),
            ("k_max", self.k_max),
            ("d_sweep", self.d_sweep),
        ] {
            if value == 0 {
                return Err(Error::InvalidBound { name, value });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub meta: Meta,
    pub solutions: Solutions,
    pub even_case: EvenCaseDerivation,
    pub residue_classes: ResidueClasses,
    pub theta_witnesses: ThetaWitnesses,
    pub sign_exclusion: SignExclusion,
    pub trace_sequence_check: TraceSequenceCheck,
    pub uniqueness: Uniqueness,
    pub sweeps: Sweeps,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    pub engine: String,
    pub version: String,
    pub ring: RingRecord,
}

/// The presentation and the algebraic facts the odd case relies on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingRecord {
    pub d: i64,
    pub e: i64,
    #[serde(with = "decimal")]
    pub discriminant: BigInt,
    /// `(a, b)` coordinates of every unit.
    pub units: Vec<UnitRecord>,
    #[serde(with = "decimal")]
    pub theta_norm: BigInt,
    #[serde(with = "decimal")]
    pub theta_theta_prime: BigInt,
    pub theta_irreducible: bool,
    pub theta_prime_irreducible: bool,
    pub theta_theta_prime_associated: bool,
    pub pi_lower_bound: [u64; 2],
    pub minkowski_below_two: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitRecord {
    #[serde(with = "decimal")]
    pub a: BigInt,
    #[serde(with = "decimal")]
    pub b: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionRecord {
    pub n: u64,
    #[serde(with = "decimal")]
    pub x: BigInt,
    /// `−x` solves the equation as well.
    pub both_signs: bool,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Solutions {
    pub n_max: u64,
    /// Found by exhaustive search.
    pub pairs: Vec<SolutionRecord>,
    /// Predicted by the even case, the `m = 1` base case and the theta witnesses.
    pub predicted: Vec<SolutionRecord>,
    pub matches_prediction: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidueClasses {
    pub modulus: u64,
    pub classes: Vec<u64>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaRecord {
    pub m: u64,
    #[serde(with = "decimal")]
    pub b_sum: BigInt,
    /// `s` in `θ^m − θ′^m = s·√−7`.
    #[serde(with = "decimal")]
    pub s: BigInt,
    /// `"+"`, `"-"` or `"none"` depending on `s = ±1`.
    pub sign: String,
    #[serde(with = "decimal")]
    pub trace: BigInt,
    pub theta_equation: bool,
    pub expansion_identity: bool,
    pub residue: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaWitnesses {
    pub m_max: u64,
    pub records: Vec<ThetaRecord>,
    pub witnesses: Vec<u64>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignExclusion {
    pub m_min: u64,
    pub m_max: u64,
    pub checked: u64,
    pub all_hold: bool,
    pub theta_prime_sq_divides_theta_prime: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceSequenceCheck {
    pub m_max: u64,
    pub cross_check_m_max: u64,
    pub period_mod_7: [u64; 3],
    pub terms_checked: u64,
    pub pattern_violations: u64,
    pub zero_mod_7: u64,
    pub cross_check_agree: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Uniqueness {
    pub k_max: u64,
    pub classes: Vec<u64>,
    pub reports: Vec<UniquenessReport>,
    pub all_contradict: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweeps {
    pub n_max: u64,
    pub k_max: u64,
    pub d_sweep: u64,
    pub n_values_tested: u64,
    /// `v₇(B_d) = v₇(d)` over `1..=d_sweep`; only multiples of 42 are relied on.
    pub b_valuation_equal: u64,
    pub b_valuation_mismatches: Vec<u64>,
    pub b_valuation_relied_on_multiple_of: u64,
    /// `7^{v₇(d)} | A′_d` over `1..=d_sweep`.
    pub a_prime_divisible: u64,
    /// `B_d ≡ d (mod 7)` over `1..=d_sweep`.
    pub b_congruent_d_mod_7: u64,
    /// `v₇(2^{6k} − 1) = 1 + v₇(k)`, LTE and factor-out agreeing.
    pub lte_k_max: u64,
    pub lte_agree: u64,
    pub ok: bool,
}

impl Certificate {
    /// Names of the sections whose checks failed.
    pub fn failed_checks(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let checks = [
            ("meta.ring", self.meta.ring.ok),
            ("solutions", self.solutions.matches_prediction),
            ("even_case", self.even_case.ok),
            ("residue_classes", self.residue_classes.ok),
            ("theta_witnesses", self.theta_witnesses.ok),
            ("sign_exclusion", self.sign_exclusion.ok),
            ("trace_sequence_check", self.trace_sequence_check.ok),
            ("uniqueness", self.uniqueness.ok),
            ("sweeps", self.sweeps.ok),
        ];
        for (name, ok) in checks {
            if !ok {
                out.push(name);
            }
        }
        out
    }

    pub fn config(&self) -> VerifyConfig {
        VerifyConfig {
            n_max: self.sweeps.n_max,
            k_max: self.sweeps.k_max,
            d_sweep: self.sweeps.d_sweep,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::MalformedCertificate(e.to_string()))
    }
}

fn ring_record() -> Result<RingRecord> {
    let params = RingParams::RAMANUJAN_NAGELL;
    let units = enumerate_units(params)?;
    let disc = discriminant(params);
    let theta_theta_prime = theta().try_mul(&theta_prime())?;
    let theta_irreducible = irreducible_by_norm(&theta());
    let theta_prime_irreducible = irreducible_by_norm(&theta_prime());
    let theta_theta_prime_associated = associated(&theta(), &theta_prime())?;
    let minkowski_below_two = minkowski_pid_check(params)?;
    let unit_values: BTreeSet<(BigInt, BigInt)> = units
        .elements()
        .iter()
        .map(|u| (u.a().clone(), u.b().clone()))
        .collect();
    let pm_one: BTreeSet<(BigInt, BigInt)> = [
        (BigInt::from(-1), BigInt::from(0)),
        (BigInt::from(1), BigInt::from(0)),
    ]
    .into();
    let ok = disc == -7
        && unit_values == pm_one
        && theta_theta_prime.b().is_zero()
        && *theta_theta_prime.a() == BigInt::from(2)
        && theta_irreducible
        && theta_prime_irreducible
        && !theta_theta_prime_associated
        && minkowski_below_two;
    Ok(RingRecord {
        d: params.d(),
        e: params.e(),
        discriminant: BigInt::from(disc),
        units: units
            .elements()
            .iter()
            .map(|u| UnitRecord {
                a: u.a().clone(),
                b: u.b().clone(),
            })
            .collect(),
        theta_norm: theta().norm(),
        theta_theta_prime: theta_theta_prime.a().clone(),
        theta_irreducible,
        theta_prime_irreducible,
        theta_theta_prime_associated,
        pi_lower_bound: [PI_LOWER_NUM, PI_LOWER_DEN],
        minkowski_below_two,
        ok,
    })
}

fn theta_record(m: u64) -> Result<ThetaRecord> {
    let diff = theta_difference_via_b(m)?;
    let check = verify_theta_equation(m)?;
    let sign = if diff.s == BigInt::one() {
        "+"
    } else if diff.s == -BigInt::one() {
        "-"
    } else {
        "none"
    };
    if check.holds != diff.theta_equation_holds() {
        return Err(Error::Internal(format!(
            "theta equation at m = {m}: coordinate and √−7-coefficient routes disagree"
        )));
    }
    Ok(ThetaRecord {
        m,
        expansion_identity: diff.expansion_identity_holds(),
        b_sum: diff.b_sum,
        s: diff.s,
        sign: sign.to_string(),
        trace: check.trace,
        theta_equation: check.holds,
        residue: m % RESIDUE_MODULUS,
    })
}

fn theta_witnesses(classes: &[u64]) -> Result<ThetaWitnesses> {
    let records = (1..=THETA_RECORD_M_MAX)
        .step_by(2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(theta_record)
        .collect::<Result<Vec<_>>>()?;
    let witnesses: Vec<u64> = records
        .iter()
        .filter(|r| r.theta_equation)
        .map(|r| r.m)
        .collect();
    let base_case_positive = records
        .iter()
        .find(|r| r.m == 1)
        .is_some_and(|r| r.sign == "+" && r.trace.abs() == BigInt::one());
    let one_per_class = classes.iter().all(|c| {
        witnesses
            .iter()
            .filter(|&&w| w % RESIDUE_MODULUS == *c)
            .count()
            == 1
    });
    let in_classes = witnesses
        .iter()
        .all(|w| classes.contains(&(w % RESIDUE_MODULUS)));
    let ok = records.iter().all(|r| r.expansion_identity)
        && base_case_positive
        && one_per_class
        && in_classes;
    Ok(ThetaWitnesses {
        m_max: THETA_RECORD_M_MAX,
        records,
        witnesses,
        ok,
    })
}

fn sign_exclusion_section(n_max: u64) -> Result<SignExclusion> {
    let m_max = SIGN_EXCLUSION_M_MAX.min(n_max);
    let ms: Vec<u64> = (3..=m_max).step_by(2).collect();
    let results = ms
        .par_iter()
        .map(|&m| sign_exclusion(m))
        .collect::<Result<Vec<bool>>>()?;
    let divides = theta_prime_sq_divides_theta_prime();
    let all_hold = results.iter().all(|&b| b);
    Ok(SignExclusion {
        m_min: 3,
        m_max,
        checked: ms.len() as u64,
        all_hold,
        theta_prime_sq_divides_theta_prime: divides,
        ok: all_hold && !divides,
    })
}

fn trace_section() -> Result<TraceSequenceCheck> {
    let seq = trace_sequence(TRACE_PERIOD_M_MAX)?;
    let seven = BigInt::from(7);
    let mut pattern_violations = 0;
    let mut zero_mod_7 = 0;
    for (m, a) in seq.iter().enumerate() {
        let r = ((a % &seven) + &seven) % &seven;
        if r != BigInt::from(TRACE_PERIOD_MOD_7[m % 3]) {
            pattern_violations += 1;
        }
        if r.is_zero() {
            zero_mod_7 += 1;
        }
    }
    let cross_check_agree = (0..=TRACE_CROSS_CHECK_M_MAX)
        .into_par_iter()
        .all(|m| theta().pow(m).trace() == seq[m as usize]);
    Ok(TraceSequenceCheck {
        m_max: TRACE_PERIOD_M_MAX,
        cross_check_m_max: TRACE_CROSS_CHECK_M_MAX,
        period_mod_7: TRACE_PERIOD_MOD_7,
        terms_checked: seq.len() as u64,
        pattern_violations,
        zero_mod_7,
        cross_check_agree,
        ok: pattern_violations == 0 && zero_mod_7 == 0 && cross_check_agree,
    })
}

fn uniqueness_section(witnesses: &[u64], k_max: u64) -> Result<Uniqueness> {
    let pairs: Vec<BinomialPair> = (1..=k_max)
        .into_par_iter()
        .map(|k| binom_sums(RESIDUE_MODULUS * k))
        .collect::<Result<_>>()?;
    let grid: Vec<(u64, u64)> = witnesses
        .iter()
        .flat_map(|&m1| (1..=k_max).map(move |k| (m1, k)))
        .collect();
    let reports = grid
        .par_iter()
        .map(|&(m1, k)| uniqueness_with(m1, k, &pairs[(k - 1) as usize]))
        .collect::<Result<Vec<_>>>()?;
    let all_contradict = reports.iter().all(|r| r.contradiction);
    let ok = !reports.is_empty() && reports.iter().all(UniquenessReport::consistent);
    Ok(Uniqueness {
        k_max,
        classes: witnesses.to_vec(),
        reports,
        all_contradict,
        ok,
    })
}

struct DSweepRow {
    b_valuation_equal: bool,
    a_prime_divisible: bool,
    b_congruent: bool,
}

fn sweeps_section(config: &VerifyConfig) -> Result<Sweeps> {
    let rows = (1..=config.d_sweep)
        .into_par_iter()
        .map(|d| -> Result<DSweepRow> {
            let pair = binom_sums(d)?;
            let d_big = BigInt::from(d);
            Ok(DSweepRow {
                b_valuation_equal: v_p(7, &pair.b_part)? == v_p(7, &d_big)?,
                a_prime_divisible: a_prime_lemma_with(&pair)?,
                b_congruent: ((&pair.b_part - &d_big) % 7u32) == BigInt::from(0),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let b_valuation_mismatches: Vec<u64> = rows
        .iter()
        .zip(1u64..)
        .filter(|(r, _)| !r.b_valuation_equal)
        .map(|(_, d)| d)
        .collect();
    let a_prime_divisible = rows.iter().filter(|r| r.a_prime_divisible).count() as u64;
    let b_congruent_d_mod_7 = rows.iter().filter(|r| r.b_congruent).count() as u64;

    let lte_agree = (1..=LTE_SWEEP_K_MAX)
        .into_par_iter()
        .map(|k| -> Result<bool> {
            let lte = lte_pow_sub_one(7, &BigInt::from(64), k)?;
            let direct = v_p(7, &((BigInt::one() << (6 * k)) - 1))?;
            let predicted = Valuation::Finite(1) + v_p(7, &BigInt::from(k))?;
            Ok(lte.checked_directly && lte.valuation == direct && direct == predicted)
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&b| b)
        .count() as u64;

    let relied_ok = b_valuation_mismatches
        .iter()
        .all(|d| d % RESIDUE_MODULUS != 0);
    Ok(Sweeps {
        n_max: config.n_max,
        k_max: config.k_max,
        d_sweep: config.d_sweep,
        n_values_tested: config.n_max,
        b_valuation_equal: config.d_sweep - b_valuation_mismatches.len() as u64,
        b_valuation_mismatches,
        b_valuation_relied_on_multiple_of: RESIDUE_MODULUS,
        ok: relied_ok
            && a_prime_divisible == config.d_sweep
            && b_congruent_d_mod_7 == config.d_sweep
            && lte_agree == LTE_SWEEP_K_MAX,
        a_prime_divisible,
        b_congruent_d_mod_7,
        lte_k_max: LTE_SWEEP_K_MAX,
        lte_agree,
    })
}

fn solution_record(p: &SolutionPair, source: &str) -> SolutionRecord {
    SolutionRecord {
        n: p.n,
        x: p.x.clone(),
        both_signs: p.holds(),
        source: source.to_string(),
    }
}

fn solutions_section(n_max: u64, even: &EvenCaseDerivation, theta: &ThetaWitnesses) -> Solutions {
    let found = brute_force_search(n_max);
    let pairs: Vec<SolutionRecord> = found.iter().map(|p| solution_record(p, "search")).collect();

    let mut predicted = vec![(even.solution(), "even_case")];
    for r in &theta.records {
        if r.m == 1 && r.sign == "+" {
            predicted.push((
                SolutionPair {
                    x: r.trace.abs(),
                    n: 3,
                },
                "base_case_m1",
            ));
        } else if r.theta_equation {
            predicted.push((
                SolutionPair {
                    x: r.trace.abs(),
                    n: r.m + 2,
                },
                "theta_witness",
            ));
        }
    }
    predicted.retain(|(p, _)| p.n <= n_max);
    predicted.sort_by_key(|a| a.0.n);
    let predicted_pairs: Vec<SolutionPair> = predicted.iter().map(|(p, _)| p.clone()).collect();
    let matches_prediction = found == predicted_pairs && found.iter().all(SolutionPair::holds);
    Solutions {
        n_max,
        pairs,
        predicted: predicted
            .iter()
            .map(|(p, s)| solution_record(p, s))
            .collect(),
        matches_prediction,
    }
}

/// Runs every step of the verification and assembles the certificate.
///
/// Component failures produce a `FAIL` certificate; only invalid bounds and
/// internal inconsistencies are errors.
pub fn full_verify(config: &VerifyConfig) -> Result<Certificate> {
    config.validate()?;
    let ring = ring_record()?;
    let even = even_case();
    let classes = residue_classes_mod_42();
    let residue_ok = classes == [3, 5, 13];
    let theta = theta_witnesses(&classes)?;
    let witnesses_in_classes: Vec<u64> = theta
        .witnesses
        .iter()
        .copied()
        .filter(|w| classes.contains(&(w % RESIDUE_MODULUS)))
        .collect();

    let (solutions, (sign, (trace, (uniqueness, sweeps)))) = rayon::join(
        || solutions_section(config.n_max, &even, &theta),
        || {
            rayon::join(
                || sign_exclusion_section(config.n_max),
                || {
                    rayon::join(trace_section, || {
                        rayon::join(
                            || uniqueness_section(&witnesses_in_classes, config.k_max),
                            || sweeps_section(config),
                        )
                    })
                },
            )
        },
    );

    let mut cert = Certificate {
        meta: Meta {
            engine: ENGINE_NAME.to_string(),
            version: ENGINE_VERSION.to_string(),
            ring,
        },
        solutions,
        even_case: even,
        residue_classes: ResidueClasses {
            modulus: RESIDUE_MODULUS,
            classes,
            ok: residue_ok,
        },
        theta_witnesses: theta,
        sign_exclusion: sign?,
        trace_sequence_check: trace?,
        uniqueness: uniqueness?,
        sweeps: sweeps?,
        status: Status::Fail,
    };
    if cert.failed_checks().is_empty() {
        cert.status = Status::Pass;
    }
    Ok(cert)
}

/// Result of replaying a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayReport {
    pub status: Status,
    /// JSON paths whose recorded value differs from the recomputation, or a
    /// description of why the document could not be replayed.
    pub problems: Vec<String>,
}

/// Replays certificates, caching recomputations by their bounds.
#[derive(Default)]
pub struct Replayer {
    cache: HashMap<VerifyConfig, (Value, Status)>,
}

impl Replayer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check_str(&mut self, text: &str) -> ReplayReport {
        match serde_json::from_str::<Value>(text) {
            Ok(v) => self.check_value(&v),
            Err(e) => fail(format!("unparseable: {e}")),
        }
    }

    /// `PASS` iff the document parses as a certificate, claims `PASS`, and
    /// equals field for field a fresh run under its own recorded bounds.
    pub fn check_value(&mut self, recorded: &Value) -> ReplayReport {
        let cert: Certificate = match serde_json::from_value(recorded.clone()) {
            Ok(c) => c,
            Err(e) => return fail(format!("malformed certificate: {e}")),
        };
        let config = cert.config();
        if let std::collections::hash_map::Entry::Vacant(e) = self.cache.entry(config) {
            let fresh = match full_verify(&config) {
                Ok(c) => c,
                Err(e) => return fail(format!("cannot recompute: {e}")),
            };
            let value = serde_json::to_value(&fresh).expect("certificate serializes");
            e.insert((value, fresh.status));
        }
        let (expected, fresh_status) = &self.cache[&config];
        let mut problems = Vec::new();
        diff_values("", expected, recorded, &mut problems);
        if cert.status != Status::Pass {
            problems.push("status: recorded FAIL".to_string());
        }
        if *fresh_status != Status::Pass {
            problems.push("status: recomputation FAIL".to_string());
        }
        ReplayReport {
            status: if problems.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            },
            problems,
        }
    }
}

fn fail(msg: String) -> ReplayReport {
    ReplayReport {
        status: Status::Fail,
        problems: vec![msg],
    }
}

fn diff_values(path: &str, expected: &Value, recorded: &Value, out: &mut Vec<String>) {
    match (expected, recorded) {
        (Value::Object(e), Value::Object(r)) => {
            for (k, ev) in e {
                let p = format!("{path}/{k}");
                match r.get(k) {
                    Some(rv) => diff_values(&p, ev, rv, out),
                    None => out.push(format!("{p}: missing")),
                }
            }
            for k in r.keys().filter(|k| !e.contains_key(*k)) {
                out.push(format!("{path}/{k}: unexpected"));
            }
        }
        (Value::Array(e), Value::Array(r)) => {
            if e.len() != r.len() {
                out.push(format!(
                    "{path}: length {} recorded, {} recomputed",
                    r.len(),
                    e.len()
                ));
            }
            for (i, (ev, rv)) in e.iter().zip(r).enumerate() {
                diff_values(&format!("{path}/{i}"), ev, rv, out);
            }
        }
        _ if expected == recorded => {}
        _ => out.push(format!(
            "{path}: recorded {recorded}, recomputed {expected}"
        )),
    }
}
