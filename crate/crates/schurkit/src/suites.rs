//! Named verification sweeps, each reporting its counterexamples as JSON.
//!
//! Sweeps fan out over rayon's current pool; results are collected in
//! enumeration order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use schurkit_core::identity::{
    verify_hook_beta_identity, verify_mu_identity, verify_trace_identity, verify_x_symmetry,
};
use schurkit_core::kernel::{x_kernel, y_kernel, z_kernel};
use schurkit_core::partition::{multipartitions, partitions};
use schurkit_core::semisimple::{cross_check_criterion, Cause};
use schurkit_core::{
    schur_element, Alphabet, BetaSet, Error, Field, Multipartition, Partition, Permutation,
    SchurFormula, Specialization,
};

use crate::json::{factored_to_json, multipartition_to_json, partition_to_json, report_to_json};
use crate::theta::random_specialization;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Product, symbol (L = ℓ, ℓ+1, ℓ+2) and cancellation-free formulas agree.
    ThreeFormulas,
    /// Beta shifts preserve partitions, and X = Y^L = Z for |λ|, |μ| ≤ n.
    BetaShift,
    /// X_{λμ}(x) = X_{μλ}(−x) for |λ|, |μ| ≤ n.
    XSymmetry,
    /// The y-identity for 1 ≤ |μ| ≤ n and 1 ≤ ℓ ≤ μ_1.
    MuIdentity,
    /// Hook product times beta differences equals Π β_i! for |λ| ≤ n.
    HookBeta,
    /// s_{σΛ}(Q) = σ(s_Λ(Q)) for every σ ∈ S_m.
    SmAction,
    /// Schur elements expand to integer polynomials of degree ≤ n(m−1).
    Integrality,
    /// Σ f^Λ / s_Λ(Q) is 1 for m = 1 and 0 otherwise.
    TraceIdentity,
    /// θ(P_H(Q)) ≠ 0 exactly when no Schur element vanishes under θ.
    Criterion,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::ThreeFormulas => "three-formulas",
            Suite::BetaShift => "beta-shift",
            Suite::XSymmetry => "x-symmetry",
            Suite::MuIdentity => "mu-identity",
            Suite::HookBeta => "hook-beta",
            Suite::SmAction => "sm-action",
            Suite::Integrality => "integrality",
            Suite::TraceIdentity => "trace-identity",
            Suite::Criterion => "criterion",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    /// Random specializations per field for the criterion suite.
    pub samples: usize,
    /// Restricts the criterion suite's finite field to `F_p`.
    pub modulus: Option<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub checked: usize,
    pub unit: &'static str,
    pub counterexamples: Vec<Value>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "checked {} {}, {} mismatches",
            self.checked,
            self.unit,
            self.counterexamples.len()
        )
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteOutcome {
    let (unit, results): (&'static str, Vec<Option<Value>>) = match suite {
        Suite::ThreeFormulas => (
            "multipartitions",
            sweep_multipartitions(config, three_formulas),
        ),
        Suite::SmAction => ("multipartitions", sweep_multipartitions(config, sm_action)),
        Suite::Integrality => (
            "multipartitions",
            sweep_multipartitions(config, integrality),
        ),
        Suite::BetaShift => ("partition pairs", sweep_pairs(config.n, beta_shift)),
        Suite::XSymmetry => ("partition pairs", sweep_pairs(config.n, x_symmetry)),
        Suite::MuIdentity => ("cases", mu_identity(config.n)),
        Suite::HookBeta => ("cases", hook_beta(config.n)),
        Suite::TraceIdentity => ("identities", vec![trace_identity(config.m, config.n)]),
        Suite::Criterion => ("specializations", criterion(config)),
    };
    SuiteOutcome {
        suite,
        checked: results.len(),
        unit,
        counterexamples: results.into_iter().flatten().collect(),
    }
}

fn error_value(e: &Error) -> Value {
    Value::String(e.to_string())
}

fn sweep_multipartitions(
    config: &SuiteConfig,
    check: fn(&Multipartition) -> Option<Value>,
) -> Vec<Option<Value>> {
    let all: Vec<Multipartition> = multipartitions(config.m, config.n).collect();
    all.par_iter().map(check).collect()
}

fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions).collect()
}

fn sweep_pairs(n: usize, check: fn(&Partition, &Partition) -> Option<Value>) -> Vec<Option<Value>> {
    let pool = partitions_up_to(n);
    let pairs: Vec<(&Partition, &Partition)> = pool
        .iter()
        .flat_map(|a| pool.iter().map(move |b| (a, b)))
        .collect();
    pairs.par_iter().map(|(a, b)| check(a, b)).collect()
}

fn three_formulas(lam: &Multipartition) -> Option<Value> {
    let base = match schur_element(lam, SchurFormula::CancellationFree) {
        Ok(v) => v,
        Err(e) => {
            return Some(
                json!({"multipartition": multipartition_to_json(lam), "error": error_value(&e)}),
            )
        }
    };
    let ell = lam.len();
    let routes = [
        ("product", SchurFormula::Product),
        ("symbol", SchurFormula::Symbol(ell)),
        ("symbol", SchurFormula::Symbol(ell + 1)),
        ("symbol", SchurFormula::Symbol(ell + 2)),
    ];
    for (name, formula) in routes {
        let found = schur_element(lam, formula);
        if found.as_ref() != Ok(&base) {
            let length = match formula {
                SchurFormula::Symbol(l) => json!(l),
                _ => Value::Null,
            };
            return Some(json!({
                "multipartition": multipartition_to_json(lam),
                "formula": name,
                "L": length,
                "expected": factored_to_json(&base),
                "found": found.map_or_else(|e| error_value(&e), |v| factored_to_json(&v)),
            }));
        }
    }
    None
}

fn sm_action(lam: &Multipartition) -> Option<Value> {
    let s = match schur_element(lam, SchurFormula::CancellationFree) {
        Ok(v) => v,
        Err(e) => {
            return Some(
                json!({"multipartition": multipartition_to_json(lam), "error": error_value(&e)}),
            )
        }
    };
    for sigma in Permutation::all(lam.level()) {
        let moved = lam
            .permute(&sigma)
            .and_then(|mu| schur_element(&mu, SchurFormula::CancellationFree));
        let expected = s.permute(&sigma);
        if moved.as_ref() != Ok(&expected) {
            return Some(json!({
                "multipartition": multipartition_to_json(lam),
                "sigma": sigma.images(),
                "expected": factored_to_json(&expected),
                "found": moved.map_or_else(|e| error_value(&e), |v| factored_to_json(&v)),
            }));
        }
    }
    None
}

fn integrality(lam: &Multipartition) -> Option<Value> {
    let m = lam.level();
    let bound = lam.size() * (m - 1);
    let outcome = schur_element(lam, SchurFormula::CancellationFree)
        .and_then(|s| s.expand_in(Alphabet::params(m)));
    match outcome {
        Ok(poly) if poly.degree().unwrap_or(0) as usize <= bound => None,
        Ok(poly) => Some(json!({
            "multipartition": multipartition_to_json(lam),
            "degree": poly.degree(),
            "bound": bound,
        })),
        Err(e) => Some(json!({
            "multipartition": multipartition_to_json(lam),
            "error": error_value(&e),
        })),
    }
}

fn beta_shift(lam: &Partition, mu: &Partition) -> Option<Value> {
    let x = x_kernel(lam, mu);
    let top = lam.len().max(mu.len());
    let report = |what: &str, detail: Value| {
        Some(json!({
            "lambda": partition_to_json(lam),
            "mu": partition_to_json(mu),
            "check": what,
            "detail": detail,
        }))
    };
    if z_kernel(lam, mu) != x {
        return report("X = Z", factored_to_json(&z_kernel(lam, mu)));
    }
    for length in top..=top + 2 {
        for p in [lam, mu] {
            let round_trip = BetaSet::new(p, length).map(|b| b.shift().partition());
            if round_trip.as_ref() != Ok(p) {
                return report("shift preserves the partition", json!(length));
            }
        }
        match y_kernel(lam, mu, length) {
            Ok(y) if y == x => {}
            Ok(y) => return report("X = Y", json!({"L": length, "Y": factored_to_json(&y)})),
            Err(e) => return report("X = Y", error_value(&e)),
        }
    }
    None
}

fn x_symmetry(lam: &Partition, mu: &Partition) -> Option<Value> {
    match verify_x_symmetry(lam, mu) {
        Ok(true) => None,
        outcome => Some(json!({
            "lambda": partition_to_json(lam),
            "mu": partition_to_json(mu),
            "error": outcome.err().map(|e| error_value(&e)),
        })),
    }
}

fn mu_identity(n: usize) -> Vec<Option<Value>> {
    let cases: Vec<(Partition, usize)> = (1..=n)
        .flat_map(partitions)
        .flat_map(|mu| (1..=mu.first()).map(move |ell| (mu.clone(), ell)))
        .collect();
    cases
        .par_iter()
        .map(|(mu, ell)| match verify_mu_identity(mu, *ell) {
            Ok(true) => None,
            outcome => Some(json!({
                "mu": partition_to_json(mu),
                "ell": ell,
                "error": outcome.err().map(|e| error_value(&e)),
            })),
        })
        .collect()
}

fn hook_beta(n: usize) -> Vec<Option<Value>> {
    let cases: Vec<(Partition, usize)> = partitions_up_to(n)
        .into_iter()
        .flat_map(|p| {
            let ell = p.len();
            (ell..=ell + 3).map(move |length| (p.clone(), length))
        })
        .collect();
    cases
        .par_iter()
        .map(|(p, length)| match verify_hook_beta_identity(p, *length) {
            Ok(true) => None,
            outcome => Some(json!({
                "lambda": partition_to_json(p),
                "L": length,
                "error": outcome.err().map(|e| error_value(&e)),
            })),
        })
        .collect()
}

fn trace_identity(m: usize, n: usize) -> Option<Value> {
    match verify_trace_identity(m, n) {
        Ok(true) => None,
        outcome => Some(json!({
            "m": m,
            "n": n,
            "error": outcome.err().map(|e| error_value(&e)),
        })),
    }
}

/// A specialization and the multipartition its verdict must list as
/// vanishing, if any.
#[derive(Clone, Debug)]
pub struct CriterionCase {
    pub theta: Specialization,
    pub witness: Option<Multipartition>,
}

/// The largest prime not exceeding `n`.
fn prime_at_most(n: usize) -> Option<u64> {
    (2..=n as u64)
        .rev()
        .find(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
}

/// Specializations that force each kind of vanishing factor of the
/// parameter invariant: `n! = 0` over `F_p` with `p ≤ n`, and
/// `k + q_s − q_t = 0` for every `s < t` and `−n < k < n`.
pub fn targeted_cases(m: usize, n: usize) -> Vec<CriterionCase> {
    let mut out = Vec::new();
    if let Some(p) = prime_at_most(n) {
        let field = Field::prime(p).expect("prime");
        let values: Vec<i64> = (0..m as i64).map(|s| s * n as i64).collect();
        out.push(CriterionCase {
            theta: Specialization::from_integers(field, &values),
            witness: Some(Cause::FactorialVanishes.witness(m, n)),
        });
    }
    let n_i = n as i64;
    for s in 1..=m {
        for t in s + 1..=m {
            for k in (1 - n_i)..n_i {
                // other parameters sit far apart so only this factor matters
                let mut values: Vec<i64> = (1..=m as i64).map(|r| 4 * n_i * r).collect();
                values[t - 1] = 0;
                values[s - 1] = -k;
                out.push(CriterionCase {
                    theta: Specialization::from_integers(Field::Rationals, &values),
                    witness: Some(Cause::Collision { s, t, k }.witness(m, n)),
                });
            }
        }
    }
    out
}

/// Seeded random specializations: `samples` over `Q`, then `samples` over
/// each finite field `F_p` with `p > n` (from `{7, 101}`, or the given
/// modulus).
pub fn random_cases(config: &SuiteConfig) -> Vec<CriterionCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut fields = vec![Field::Rationals];
    match config.modulus {
        Some(p) => fields.extend(Field::prime(p).ok()),
        None => fields.extend(
            [7u64, 101]
                .into_iter()
                .filter(|&p| p as usize > config.n)
                .map(|p| Field::prime(p).expect("prime")),
        ),
    }
    let mut out = Vec::new();
    for field in fields {
        for _ in 0..config.samples {
            out.push(CriterionCase {
                theta: random_specialization(&mut rng, config.m, config.n, field),
                witness: None,
            });
        }
    }
    out
}

pub fn theta_to_json(theta: &Specialization) -> Value {
    json!({
        "field": theta.field().to_string(),
        "q": theta.params().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

pub fn check_case(m: usize, n: usize, case: &CriterionCase) -> Option<Value> {
    let fail = |detail: Value| Some(json!({"theta": theta_to_json(&case.theta), "detail": detail}));
    let report = match cross_check_criterion(m, n, &case.theta) {
        Ok(r) => r,
        Err(e) => return fail(error_value(&e)),
    };
    if !report.agreement {
        return fail(report_to_json(&report));
    }
    if let Some(witness) = &case.witness {
        let listed = report
            .vanishing
            .as_ref()
            .is_some_and(|v| v.contains(witness));
        if report.semisimple || !listed {
            return fail(json!({
                "report": report_to_json(&report),
                "witness": multipartition_to_json(witness),
            }));
        }
    }
    None
}

fn criterion(config: &SuiteConfig) -> Vec<Option<Value>> {
    let mut cases = random_cases(config);
    cases.extend(targeted_cases(config.m, config.n));
    cases
        .par_iter()
        .map(|case| check_case(config.m, config.n, case))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(m: usize, n: usize) -> SuiteConfig {
        SuiteConfig {
            m,
            n,
            seed: 7,
            samples: 20,
            modulus: None,
        }
    }

    #[test]
    fn every_suite_passes_on_small_bounds() {
        for suite in [
            Suite::ThreeFormulas,
            Suite::BetaShift,
            Suite::XSymmetry,
            Suite::MuIdentity,
            Suite::HookBeta,
            Suite::SmAction,
            Suite::Integrality,
            Suite::TraceIdentity,
            Suite::Criterion,
        ] {
            let outcome = run_suite(suite, &config(2, 3));
            assert!(
                outcome.passed(),
                "{}: {:?}",
                suite.name(),
                outcome.counterexamples
            );
            assert!(outcome.checked > 0, "{}", suite.name());
        }
    }

    #[test]
    fn three_formula_summary() {
        let outcome = run_suite(Suite::ThreeFormulas, &config(2, 3));
        assert_eq!(
            outcome.summary(),
            "checked 10 multipartitions, 0 mismatches"
        );
    }

    #[test]
    fn targeted_case_counts() {
        // one factorial case and 2n − 1 collisions per pair
        assert_eq!(targeted_cases(3, 4).len(), 1 + 3 * 7);
        assert_eq!(targeted_cases(2, 1).len(), 1);
        assert_eq!(prime_at_most(4), Some(3));
        assert_eq!(prime_at_most(1), None);
    }

    #[test]
    fn random_cases_respect_modulus() {
        let mut c = config(2, 3);
        assert_eq!(random_cases(&c).len(), 60);
        c.modulus = Some(5);
        let cases = random_cases(&c);
        assert_eq!(cases.len(), 40);
        assert_eq!(cases[39].theta.field(), Field::Prime(5));
    }

    #[test]
    fn detects_a_wrong_witness() {
        let theta = Specialization::from_integers(Field::Rationals, &[5, 0]);
        let case = CriterionCase {
            theta,
            witness: Some(Cause::FactorialVanishes.witness(2, 2)),
        };
        assert!(check_case(2, 2, &case).is_some());
    }
}
