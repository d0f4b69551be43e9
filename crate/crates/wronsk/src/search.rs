//! Randomized search for counterexamples to the n >= 3 impossibility
//! conjecture: families of rational functions with at least two distinct
//! poles whose Wronskian would be a nonzero constant.
//!
//! Every trial derives its randomness from `(seed, trial index)` alone, so
//! reports are bit-identical across runs and across worker counts. Any
//! nonzero-constant classification is re-verified through the structurally
//! independent common-denominator determinant before it is reported.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::ratfun::{
    are_linearly_independent, family_pole_profile, wronskian_rational, wronskian_rational_via_lift,
    RationalFunction,
};
use crate::rational::{rat, rat_int, Rational};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub trials: u64,
    /// Bound on polynomial-part degrees and principal-part depths.
    pub degree_bound: u32,
    /// Maximum number of distinct poles per family (at least 2).
    pub pole_bound: u32,
    /// Integer coefficients are drawn from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            trials: 1000,
            degree_bound: 3,
            pole_bound: 3,
            coeff_bound: 5,
        }
    }
}

/// Deterministic summary of one search run; `class_counts` sums to
/// `trials` and `counterexamples` holds the offending families verbatim
/// (expected empty).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub seed: u64,
    pub trials: u64,
    pub class_counts: BTreeMap<String, u64>,
    pub counterexamples: Vec<Vec<String>>,
}

/// Runs the conjecture search with the worker count taken from
/// `WRONSK_THREADS` (falling back to the available parallelism).
pub fn conjecture_search(
    n: usize,
    config: &SearchConfig,
    seed: u64,
) -> Result<SearchReport, Error> {
    conjecture_search_with_workers(n, config, seed, default_workers())
}

pub fn default_workers() -> usize {
    if let Ok(v) = std::env::var("WRONSK_THREADS") {
        if let Ok(k) = v.trim().parse::<usize>() {
            return k.max(1);
        }
    }
    std::thread::available_parallelism().map_or(1, |k| k.get())
}

/// Same search with an explicit worker count; the report does not depend
/// on it.
pub fn conjecture_search_with_workers(
    n: usize,
    config: &SearchConfig,
    seed: u64,
    workers: usize,
) -> Result<SearchReport, Error> {
    if n < 3 {
        return Err(Error::InvalidConfig(
            "the conjecture search needs n >= 3; use `rational check2` for pairs".into(),
        ));
    }
    if n > 8 {
        return Err(Error::InvalidConfig("n is capped at 8".into()));
    }
    if config.trials == 0 {
        return Err(Error::InvalidConfig("trials must be at least 1".into()));
    }
    if config.pole_bound < 2 {
        return Err(Error::InvalidConfig(
            "the pole bound must allow at least 2 distinct poles".into(),
        ));
    }
    if config.coeff_bound < 1 {
        return Err(Error::InvalidConfig("the coefficient bound must be >= 1".into()));
    }
    let workers = workers.clamp(1, config.trials as usize);

    let mut partials: Vec<(BTreeMap<String, u64>, Vec<(u64, Vec<String>)>)> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let config = config.clone();
                scope.spawn(move || {
                    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
                    let mut hits: Vec<(u64, Vec<String>)> = Vec::new();
                    let mut trial = w as u64;
                    while trial < config.trials {
                        let (tag, counterexample) = run_trial(n, &config, seed, trial);
                        *counts.entry(tag.to_string()).or_insert(0) += 1;
                        if let Some(family) = counterexample {
                            hits.push((trial, family));
                        }
                        trial += workers as u64;
                    }
                    (counts, hits)
                })
            })
            .collect();
        for h in handles {
            partials.push(h.join().expect("search worker panicked"));
        }
    });

    let mut class_counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut hits: Vec<(u64, Vec<String>)> = Vec::new();
    for (counts, partial_hits) in partials {
        for (tag, k) in counts {
            *class_counts.entry(tag).or_insert(0) += k;
        }
        hits.extend(partial_hits);
    }
    hits.sort_by_key(|(trial, _)| *trial);

    Ok(SearchReport {
        seed,
        trials: config.trials,
        class_counts,
        counterexamples: hits.into_iter().map(|(_, fam)| fam).collect(),
    })
}

fn run_trial(
    n: usize,
    config: &SearchConfig,
    seed: u64,
    trial: u64,
) -> (&'static str, Option<Vec<String>>) {
    let mut rng = trial_rng(seed, trial);
    let family = generate_family(n, config, &mut rng);
    let w = wronskian_rational_via_lift(&family);
    if w.is_zero() {
        return ("identically_zero", None);
    }
    if w.is_constant() {
        // A conjecture-breaking candidate: re-derive the Wronskian through
        // the structurally independent route (cofactor expansion with
        // direct rational-function arithmetic) before believing it.
        let double_check = wronskian_rational(&family);
        assert_eq!(
            double_check, w,
            "determinant routes disagree on a counterexample candidate"
        );
        let rendered = family.iter().map(|rf| rf.to_string()).collect();
        return ("nonzero_constant", Some(rendered));
    }
    ("non_constant", None)
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(
        seed ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15),
    ))
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn pole_pool() -> Vec<Rational> {
    vec![
        rat_int(0),
        rat_int(1),
        rat_int(-1),
        rat_int(2),
        rat_int(-2),
        rat(1, 2),
        rat_int(3),
        rat(-1, 2),
    ]
}

/// One random family of `n` linearly independent rational functions whose
/// joint pole profile has at least two distinct poles. Rejection sampling
/// keeps drawing from the trial's own stream until the family is
/// independent, so the result is a deterministic function of the stream.
fn generate_family(n: usize, config: &SearchConfig, rng: &mut ChaCha8Rng) -> Vec<RationalFunction> {
    let pool = pole_pool();
    for _attempt in 0..10_000 {
        let pole_count = rng.gen_range(2..=(config.pole_bound as usize).min(pool.len()));
        let mut poles = pool.clone();
        for i in (1..poles.len()).rev() {
            let j = rng.gen_range(0..=i);
            poles.swap(i, j);
        }
        poles.truncate(pole_count);

        let family: Vec<RationalFunction> = (0..n)
            .map(|i| {
                let mut rf = RationalFunction::from_laurent(&random_polynomial(config, rng));
                for (j, beta) in poles.iter().enumerate() {
                    // Pole j is pinned to member j % n so every chosen pole
                    // appears in the joint profile; other members pick it up
                    // with probability 1/2.
                    let pinned = j % n == i;
                    if pinned || rng.gen_bool(0.5) {
                        rf = rf.add(&random_principal_part(beta, config, rng));
                    }
                }
                if rf.is_zero() {
                    rf = RationalFunction::one();
                }
                rf
            })
            .collect();

        if family_pole_profile(&family).poles.len() < 2 {
            continue;
        }
        if are_linearly_independent(&family) {
            return family;
        }
    }
    unreachable!("rejection sampling failed to produce an independent family");
}

fn random_polynomial(config: &SearchConfig, rng: &mut ChaCha8Rng) -> LaurentPoly {
    let degree = rng.gen_range(0..=config.degree_bound as i64);
    LaurentPoly::from_terms((0..=degree).map(|e| {
        (
            e,
            rat_int(rng.gen_range(-config.coeff_bound..=config.coeff_bound)),
        )
    }))
}

fn random_principal_part(
    beta: &Rational,
    config: &SearchConfig,
    rng: &mut ChaCha8Rng,
) -> RationalFunction {
    let depth = rng.gen_range(1..=config.degree_bound.max(1).min(3));
    let mut acc = RationalFunction::zero();
    for k in 1..=depth {
        let coeff = if k == depth {
            nonzero_coeff(config, rng)
        } else {
            rat_int(rng.gen_range(-config.coeff_bound..=config.coeff_bound))
        };
        if coeff.is_zero() {
            continue;
        }
        acc = acc.add(&RationalFunction::new(
            coeff,
            LaurentPoly::one(),
            vec![(beta.clone(), k)],
        ));
    }
    acc
}

fn nonzero_coeff(config: &SearchConfig, rng: &mut ChaCha8Rng) -> Rational {
    let magnitude = rng.gen_range(1..=config.coeff_bound);
    if rng.gen_bool(0.5) {
        rat_int(magnitude)
    } else {
        rat_int(-magnitude)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config(trials: u64) -> SearchConfig {
        SearchConfig {
            trials,
            degree_bound: 2,
            pole_bound: 3,
            coeff_bound: 3,
        }
    }

    #[test]
    fn rejects_bad_configs() {
        let c = small_config(10);
        assert!(matches!(
            conjecture_search(2, &c, 1),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            conjecture_search(3, &small_config(0), 1),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn deterministic_across_worker_counts() {
        let c = small_config(40);
        let a = conjecture_search_with_workers(3, &c, 42, 1).unwrap();
        let b = conjecture_search_with_workers(3, &c, 42, 4).unwrap();
        let c2 = conjecture_search_with_workers(3, &c, 42, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c2);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        let total: u64 = a.class_counts.values().sum();
        assert_eq!(total, 40);
    }

    #[test]
    fn different_seeds_differ() {
        let c = small_config(25);
        let a = conjecture_search_with_workers(3, &c, 1, 2).unwrap();
        let b = conjecture_search_with_workers(3, &c, 2, 2).unwrap();
        assert_ne!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn no_counterexamples_in_smoke_run() {
        let report = conjecture_search_with_workers(3, &small_config(150), 7, 4).unwrap();
        assert!(report.counterexamples.is_empty());
        assert_eq!(report.class_counts.get("nonzero_constant"), None);
        assert!(report.class_counts["non_constant"] > 0);
    }

    #[test]
    fn generated_families_meet_the_preconditions() {
        let config = small_config(1);
        for trial in 0..30 {
            let mut rng = trial_rng(11, trial);
            let family = generate_family(3, &config, &mut rng);
            assert!(are_linearly_independent(&family));
            assert!(family_pole_profile(&family).poles.len() >= 2);
        }
    }
}
