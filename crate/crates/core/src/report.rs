//! Sweep orchestration: per-variant verification reports and the
//! all-in-one run report.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::Value;

use crate::catalog::{make_algebra, FamilyId, FamilyTag};
use crate::derivations::{
    solve_derivation_space, vectorize, verify_theorem, DerivationProblem, DerivationSpace,
    TheoremReport,
};
use crate::error::Result;
use crate::io::to_pretty;
use crate::lie::LieAlgebra;
use crate::linalg::Rational;
use crate::tpa::{
    check_associative, check_poisson_leibniz, check_transposed_leibniz, instantiate,
    multiplication_operator, sample_parameters, sweep_seed, variants, TPVariant,
};
use crate::witness::{CheckReport, Violation};

/// Failing sample with its smallest witness tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleWitness {
    pub sample: usize,
    pub indices: Vec<usize>,
    #[serde(serialize_with = "crate::io::serialize_rational_vec")]
    pub residual: Vec<Rational>,
}

/// Outcome of one check across all samples. Serializes as `"pass"` or as
/// `{"failed_samples", "witness"}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepOutcome {
    pub failed_samples: usize,
    pub witness: Option<SampleWitness>,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.failed_samples == 0
    }

    fn record(&mut self, sample: usize, violation: Option<&Violation>) {
        if let Some(v) = violation {
            self.failed_samples += 1;
            if self.witness.is_none() {
                self.witness = Some(SampleWitness {
                    sample,
                    indices: v.indices.clone(),
                    residual: v.residual.clone(),
                });
            }
        }
    }

    fn record_report(&mut self, sample: usize, report: &CheckReport) {
        self.record(sample, report.witness());
    }
}

impl Serialize for SweepOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.passed() {
            return s.serialize_str("pass");
        }
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("failed_samples", &self.failed_samples)?;
        map.serialize_entry("witness", &self.witness)?;
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariantReport {
    pub variant: String,
    pub family: String,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub bound: u32,
    /// Holds by storage of pairs `i ≤ j`.
    pub commutative: &'static str,
    pub associative: SweepOutcome,
    pub transposed_leibniz: SweepOutcome,
    pub operators_in_halfderiv_space: SweepOutcome,
    /// Ordinary Poisson compatibility, informational only.
    pub poisson_leibniz: SweepOutcome,
    /// Samples that could not be drawn or instantiated.
    pub sampling_errors: Vec<String>,
    /// A required check failed on every sample.
    pub suspected_erratum: bool,
}

impl VariantReport {
    pub fn passed(&self) -> bool {
        self.associative.passed()
            && self.transposed_leibniz.passed()
            && self.operators_in_halfderiv_space.passed()
            && self.sampling_errors.is_empty()
    }
}

/// Runs every required check on `samples` seeded instantiations.
pub fn verify_variant(
    v: &TPVariant,
    alg: &LieAlgebra,
    half: &DerivationSpace,
    samples: usize,
    seed: u64,
    bound: u32,
) -> VariantReport {
    let mut report = VariantReport {
        variant: v.id(),
        family: v.family.tag().key().to_string(),
        n: v.family.n(),
        samples,
        seed,
        bound,
        commutative: "pass",
        associative: SweepOutcome::default(),
        transposed_leibniz: SweepOutcome::default(),
        operators_in_halfderiv_space: SweepOutcome::default(),
        poisson_leibniz: SweepOutcome::default(),
        sampling_errors: Vec::new(),
        suspected_erratum: false,
    };
    for s in 0..samples {
        let prod = match sample_parameters(v, sweep_seed(seed, s), bound)
            .and_then(|a| instantiate(v, &a))
        {
            Ok(p) => p,
            Err(e) => {
                report.sampling_errors.push(format!("sample {s}: {e}"));
                continue;
            }
        };
        report
            .associative
            .record_report(s, &check_associative(&prod));
        let tl = check_transposed_leibniz(alg, &prod).expect("variant matches its algebra");
        report.transposed_leibniz.record_report(s, &tl);
        let pl = check_poisson_leibniz(alg, &prod).expect("variant matches its algebra");
        report.poisson_leibniz.record_report(s, &pl);

        let mut op_failure = None;
        for i in 0..alg.dim() {
            let op = multiplication_operator(&prod, i).expect("index in range");
            let residual = half
                .subspace()
                .residual(&vectorize(&op))
                .expect("n² ambient");
            if residual.iter().any(|x| x != &Rational::default()) {
                op_failure = Some(Violation {
                    indices: vec![i + 1],
                    residual,
                });
                break;
            }
        }
        report
            .operators_in_halfderiv_space
            .record(s, op_failure.as_ref());
    }
    let drawn = samples - report.sampling_errors.len();
    let persistent = |o: &SweepOutcome| drawn > 0 && o.failed_samples == drawn;
    report.suspected_erratum = persistent(&report.associative)
        || persistent(&report.transposed_leibniz)
        || persistent(&report.operators_in_halfderiv_space)
        || (samples > 0 && drawn == 0);
    report
}

/// Verifies every variant stated for `id`.
pub fn verify_family_variants(
    id: FamilyId,
    samples: usize,
    seed: u64,
    bound: u32,
) -> Vec<VariantReport> {
    let alg = make_algebra(id);
    let half = solve_derivation_space(&DerivationProblem::half(&alg));
    variants(id)
        .iter()
        .map(|v| verify_variant(v, &alg, &half, samples, seed, bound))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieAxiomReport {
    pub family: String,
    pub n: usize,
    pub jacobi_triples: usize,
    pub jacobi_violation: Option<Violation>,
    pub nilindex: Option<usize>,
    pub expected_nilindex: usize,
}

impl LieAxiomReport {
    pub fn passed(&self) -> bool {
        self.jacobi_violation.is_none() && self.nilindex == Some(self.expected_nilindex)
    }
}

pub fn check_lie_axioms(id: FamilyId) -> LieAxiomReport {
    let alg = make_algebra(id);
    let jacobi = alg.jacobi_check();
    LieAxiomReport {
        family: id.tag().key().to_string(),
        n: id.n(),
        jacobi_triples: jacobi.tuples_checked,
        jacobi_violation: jacobi.witness().cloned(),
        nilindex: alg.nilindex(),
        expected_nilindex: id.n() - 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunParams {
    pub n_grid: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    pub bound: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub params: RunParams,
    /// Grid entries rejected by a family's dimension constraint.
    pub skipped: Vec<String>,
    pub lie_axioms: Vec<LieAxiomReport>,
    pub theorems: Vec<TheoremReport>,
    pub transposed_poisson: Vec<VariantReport>,
    pub failures: usize,
    /// Wall-clock milliseconds per section. Not covered by determinism.
    pub timings_ms: BTreeMap<String, u128>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> String {
        to_pretty(&serde_json::to_value(self).expect("report serializes"))
    }

    /// Report JSON with timing fields removed.
    pub fn deterministic_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(map) = &mut v {
            map.remove("timings_ms");
        }
        to_pretty(&v)
    }
}

/// Valid ids on the grid plus the fixed-dimension algebras, and a notice
/// for every rejected `(family, n)` pair.
pub fn grid_ids(n_grid: &[usize]) -> (Vec<FamilyId>, Vec<String>) {
    let mut grid: Vec<usize> = n_grid.to_vec();
    grid.sort_unstable();
    grid.dedup();
    let mut ids = Vec::new();
    let mut skipped = Vec::new();
    for tag in [FamilyTag::G1N1, FamilyTag::G2N1, FamilyTag::G3N1] {
        for &n in &grid {
            match FamilyId::new(tag, Some(n)) {
                Ok(id) => ids.push(id),
                Err(e) => skipped.push(format!("{} n={n}: {e}", tag.key())),
            }
        }
    }
    ids.extend([FamilyId::g1_7(), FamilyId::g2_9(), FamilyId::g3_11()]);
    (ids, skipped)
}

/// Order-preserving parallel map.
pub fn rayon_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.par_iter().map(f).collect()
}

/// Runs `f` on a pool capped by `TPA_THREADS` when set.
pub fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let cap = std::env::var("TPA_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t > 0);
    match cap.and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

/// Lie axioms, closed-form theorem checks and the full product-table sweep
/// over `n_grid`.
pub fn cmd_verify_all(n_grid: &[usize], samples: usize, seed: u64, bound: u32) -> RunReport {
    let (ids, skipped) = grid_ids(n_grid);
    let mut timings = BTreeMap::new();
    with_thread_cap(|| {
        let start = Instant::now();
        let lie_axioms: Vec<LieAxiomReport> =
            ids.par_iter().map(|&id| check_lie_axioms(id)).collect();
        timings.insert("lie_axioms".to_string(), start.elapsed().as_millis());

        let start = Instant::now();
        let theorems: Vec<TheoremReport> = ids.par_iter().map(|&id| verify_theorem(id)).collect();
        timings.insert("theorems".to_string(), start.elapsed().as_millis());

        let start = Instant::now();
        let tasks: Vec<(FamilyId, TPVariant)> = ids
            .iter()
            .flat_map(|&id| variants(id).into_iter().map(move |v| (id, v)))
            .collect();
        let spaces: BTreeMap<FamilyId, (LieAlgebra, DerivationSpace)> = ids
            .par_iter()
            .map(|&id| {
                let alg = make_algebra(id);
                let half = solve_derivation_space(&DerivationProblem::half(&alg));
                (id, (alg, half))
            })
            .collect();
        let transposed_poisson: Vec<VariantReport> = tasks
            .par_iter()
            .map(|(id, v)| {
                let (alg, half) = &spaces[id];
                verify_variant(v, alg, half, samples, seed, bound)
            })
            .collect();
        timings.insert(
            "transposed_poisson".to_string(),
            start.elapsed().as_millis(),
        );

        let failures = lie_axioms.iter().filter(|r| !r.passed()).count()
            + theorems.iter().filter(|r| !r.equal).count()
            + transposed_poisson.iter().filter(|r| !r.passed()).count();
        RunReport {
            tool: "qfla",
            version: env!("CARGO_PKG_VERSION"),
            params: RunParams {
                n_grid: n_grid.to_vec(),
                samples,
                seed,
                bound,
            },
            skipped,
            lie_axioms,
            theorems,
            transposed_poisson,
            failures,
            timings_ms: timings,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_keeps_fixed_dimension_algebras() {
        let r = cmd_verify_all(&[], 2, 1, 5);
        let fams: Vec<&str> = r.lie_axioms.iter().map(|a| a.family.as_str()).collect();
        assert_eq!(fams, vec!["g1_7", "g2_9", "g3_11"]);
        assert!(r.skipped.is_empty());
        assert!(r.passed(), "{}", r.to_json());
    }

    #[test]
    fn invalid_grid_entries_are_skipped_with_notice() {
        let (ids, skipped) = grid_ids(&[6]);
        assert_eq!(ids.len(), 4);
        assert_eq!(skipped.len(), 2);
        assert!(skipped[0].starts_with("g1n1 n=6"));
    }

    #[test]
    fn outcome_serialization() {
        let pass = SweepOutcome::default();
        assert_eq!(
            serde_json::to_value(&pass).unwrap(),
            serde_json::json!("pass")
        );
        let mut fail = SweepOutcome::default();
        fail.record(
            3,
            Some(&Violation {
                indices: vec![1, 2, 2],
                residual: vec![crate::linalg::rat(1, 2)],
            }),
        );
        assert_eq!(
            serde_json::to_value(&fail).unwrap(),
            serde_json::json!({"failed_samples": 1,
                "witness": {"sample": 3, "indices": [1, 2, 2], "residual": ["1/2"]}})
        );
    }
}
