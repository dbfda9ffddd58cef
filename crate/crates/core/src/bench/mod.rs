//! Monte-Carlo comparison of the adversarial solvers.
//!
//! Each trial draws `(k, N, alpha)` uniformly from
//! `{k_min <= k <= min(k_max, N), N <= n_max, 2 < alpha < N}`, draws task
//! values from a [`DistributionSpec`], and scores the exact, even-split and
//! both baseline assignments against the optimal attacker.
//!
//! Trial `i` draws from its own ChaCha8 stream (`seed`, stream `i`), so the
//! output does not depend on scheduling.

mod dist;
mod report;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use dist::{sample_tasks, DistributionSpec};
pub use report::{format_significant, write_records_csv, write_summary_csv, RECORD_HEADER, SUMMARY_HEADER};

use crate::adversarial::{self, worst_case_profit, Method};
use crate::error::{Error, Result};
use crate::profit::PROFIT_TOL;
use crate::types::ProblemInstance;

/// Approximation ratios below this would refute the two-thirds conjecture.
pub const CONJECTURED_RATIO: f64 = 2.0 / 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialConfig {
    pub k_min: usize,
    pub k_max: usize,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self {
            k_min: 2,
            k_max: 12,
            n_max: 12,
            trials: 1_000,
            seed: 0,
        }
    }
}

/// One `(k, N, alpha)` point of the sampling space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    pub k: usize,
    pub agents: usize,
    pub alpha: usize,
}

impl TrialConfig {
    /// Full-size setting: up to 30 agents, 10,000 trials.
    pub fn full_scale() -> Self {
        Self {
            k_max: 30,
            n_max: 30,
            trials: 10_000,
            ..Self::default()
        }
    }

    /// Every admissible `(k, N, alpha)`.
    pub fn shapes(&self) -> Result<Vec<Shape>> {
        if self.k_min < 1 {
            return Err(Error::UnsatisfiableConfig("k_min must be at least 1".into()));
        }
        let mut shapes = Vec::new();
        for agents in 4..=self.n_max {
            for k in self.k_min..=self.k_max.min(agents) {
                for alpha in 3..agents {
                    shapes.push(Shape { k, agents, alpha });
                }
            }
        }
        if shapes.is_empty() {
            return Err(Error::UnsatisfiableConfig(format!(
                "no (k, N, alpha) with {} <= k <= {}, k <= N <= {} and 2 < alpha < N",
                self.k_min, self.k_max, self.n_max
            )));
        }
        Ok(shapes)
    }

    /// Generator for trial `index`.
    pub fn trial_rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }
}

fn draw_instance<R: Rng + ?Sized>(shapes: &[Shape], dist: DistributionSpec, rng: &mut R) -> Result<ProblemInstance> {
    let shape = shapes[rng.random_range(0..shapes.len())];
    let tasks = sample_tasks(dist, shape.k, rng)?;
    ProblemInstance::adversarial(tasks, shape.agents, shape.alpha)
}

/// Draws one adversarial instance from the configured space.
pub fn sample_instance<R: Rng + ?Sized>(cfg: &TrialConfig, dist: DistributionSpec, rng: &mut R) -> Result<ProblemInstance> {
    draw_instance(&cfg.shapes()?, dist, rng)
}

/// Worst-case profits of the four methods on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub trial: usize,
    pub dist: DistributionSpec,
    pub k: usize,
    pub agents: usize,
    pub alpha: usize,
    pub exact: f64,
    pub approx: f64,
    pub greedy: f64,
    pub expectation: f64,
}

impl BenchRecord {
    pub fn profit(&self, method: Method) -> f64 {
        match method {
            Method::Exact => self.exact,
            Method::Approx => self.approx,
            Method::GreedyBaseline => self.greedy,
            Method::ExpectationBaseline => self.expectation,
        }
    }

    /// `profit / exact`, or 1 when the exact worst case is zero.
    pub fn ratio(&self, method: Method) -> f64 {
        if self.exact <= PROFIT_TOL {
            1.0
        } else {
            self.profit(method) / self.exact
        }
    }
}

/// Solves one instance with every method, scoring each assignment with the
/// knapsack oracle.
pub fn evaluate_instance(
    trial: usize,
    dist: DistributionSpec,
    instance: &ProblemInstance,
    greedy_seed: u64,
) -> Result<BenchRecord> {
    let alpha = instance.require_adversarial()?;
    let score = |method: Method| -> Result<f64> {
        let solution = adversarial::solve(instance, method, greedy_seed)?;
        worst_case_profit(instance.tasks(), &solution.assignment, alpha)
    };
    Ok(BenchRecord {
        trial,
        dist,
        k: instance.tasks().len(),
        agents: instance.agents(),
        alpha,
        exact: score(Method::Exact)?,
        approx: score(Method::Approx)?,
        greedy: score(Method::GreedyBaseline)?,
        expectation: score(Method::ExpectationBaseline)?,
    })
}

fn run_trial(cfg: &TrialConfig, shapes: &[Shape], dist: DistributionSpec, trial: usize) -> Result<BenchRecord> {
    let mut rng = cfg.trial_rng(trial);
    let instance = draw_instance(shapes, dist, &mut rng)?;
    let greedy_seed = rng.random::<u64>();
    evaluate_instance(trial, dist, &instance, greedy_seed)
}

/// Runs `cfg.trials` trials, in parallel, returned in trial order.
///
/// A trial whose solver fails is logged and left out.
pub fn run_suite(cfg: &TrialConfig, dist: DistributionSpec) -> Result<Vec<BenchRecord>> {
    let shapes = cfg.shapes()?;
    let records: Vec<BenchRecord> = (0..cfg.trials)
        .into_par_iter()
        .filter_map(|trial| match run_trial(cfg, &shapes, dist, trial) {
            Ok(record) => Some(record),
            Err(err) => {
                log::error!("trial {trial} ({dist}) aborted: {err}");
                None
            }
        })
        .collect();
    for r in &records {
        let ratio = r.ratio(Method::Approx);
        if ratio < CONJECTURED_RATIO {
            log::warn!(
                "two-thirds conjecture counterexample: trial {} ({}) k={} N={} alpha={} ratio {}",
                r.trial,
                r.dist,
                r.k,
                r.agents,
                r.alpha,
                ratio
            );
        }
    }
    log::info!("{dist}: {} of {} trials completed", records.len(), cfg.trials);
    Ok(records)
}

/// Mean and minimum ratio of one method on one distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodSummary {
    pub dist: DistributionSpec,
    pub method: Method,
    pub mean_ratio: f64,
    pub min_ratio: f64,
    pub trials: usize,
}

/// Methods reported in summaries; the exact solver's ratio is always 1.
pub const SUMMARY_METHODS: [Method; 3] = [
    Method::Approx,
    Method::GreedyBaseline,
    Method::ExpectationBaseline,
];

/// Per-distribution, per-method ratio statistics, distributions in order of
/// first appearance.
pub fn summarize(records: &[BenchRecord]) -> Result<Vec<MethodSummary>> {
    if records.is_empty() {
        return Err(Error::EmptyRecords);
    }
    let mut dists: Vec<DistributionSpec> = Vec::new();
    for r in records {
        if !dists.contains(&r.dist) {
            dists.push(r.dist);
        }
    }
    let mut out = Vec::new();
    for dist in dists {
        let group: Vec<&BenchRecord> = records.iter().filter(|r| r.dist == dist).collect();
        for method in SUMMARY_METHODS {
            let ratios = group.iter().map(|r| r.ratio(method));
            let min_ratio = ratios.clone().fold(f64::INFINITY, f64::min);
            let mean_ratio = ratios.sum::<f64>() / group.len() as f64;
            out.push(MethodSummary {
                dist,
                method,
                mean_ratio,
                min_ratio,
                trials: group.len(),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::TaskProfile;

    fn record(dist: DistributionSpec, exact: f64, approx: f64) -> BenchRecord {
        BenchRecord {
            trial: 0,
            dist,
            k: 2,
            agents: 4,
            alpha: 3,
            exact,
            approx,
            greedy: approx,
            expectation: approx,
        }
    }

    #[test]
    fn shapes_respect_constraints() {
        let cfg = TrialConfig {
            k_max: 30,
            n_max: 30,
            ..TrialConfig::default()
        };
        let shapes = cfg.shapes().unwrap();
        assert!(shapes
            .iter()
            .all(|s| 2 <= s.k && s.k <= s.agents && s.agents <= 30 && 2 < s.alpha && s.alpha < s.agents));
        let mut rng = cfg.trial_rng(3);
        for _ in 0..200 {
            let inst = sample_instance(&cfg, DistributionSpec::Uniform01, &mut rng).unwrap();
            let alpha = inst.require_adversarial().unwrap();
            let (k, n) = (inst.tasks().len(), inst.agents());
            assert!(2 <= k && k <= n && n <= 30 && 2 < alpha && alpha < n);
        }
    }

    #[test]
    fn smallest_space() {
        let cfg = TrialConfig {
            n_max: 4,
            ..TrialConfig::default()
        };
        let shapes = cfg.shapes().unwrap();
        assert_eq!(
            shapes,
            (2..=4)
                .map(|k| Shape {
                    k,
                    agents: 4,
                    alpha: 3
                })
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn unsatisfiable_configs() {
        let cfg = TrialConfig {
            n_max: 3,
            ..TrialConfig::default()
        };
        assert!(matches!(cfg.shapes(), Err(Error::UnsatisfiableConfig(_))));
        let cfg = TrialConfig {
            k_min: 8,
            k_max: 5,
            ..TrialConfig::default()
        };
        assert!(cfg.shapes().is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let cfg = TrialConfig::default();
        let a = sample_instance(&cfg, DistributionSpec::beta(), &mut cfg.trial_rng(9)).unwrap();
        let b = sample_instance(&cfg, DistributionSpec::beta(), &mut cfg.trial_rng(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn worked_example_record() {
        let tasks = TaskProfile::new(vec![90.0, 65.0, 55.0, 30.0, 15.0]).unwrap();
        let inst = ProblemInstance::adversarial(tasks, 9, 3).unwrap();
        let r = evaluate_instance(0, DistributionSpec::Uniform01, &inst, 1).unwrap();
        assert_eq!(r.exact, 160.0);
        assert_eq!(r.approx, 155.0);
        assert_eq!(r.ratio(Method::Approx), 0.96875);
        assert_eq!(r.ratio(Method::Exact), 1.0);
    }

    #[test]
    fn zero_exact_scores_one() {
        let r = record(DistributionSpec::Uniform01, 0.0, 0.0);
        assert_eq!(r.ratio(Method::Approx), 1.0);
        assert_eq!(r.ratio(Method::GreedyBaseline), 1.0);
    }

    #[test]
    fn summary_arithmetic() {
        let one = [record(DistributionSpec::Uniform01, 2.0, 1.5)];
        let s = summarize(&one).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s[0].mean_ratio, 0.75);
        assert_eq!(s[0].min_ratio, 0.75);
        assert_eq!(s[0].trials, 1);

        let two = [
            record(DistributionSpec::Uniform01, 1.0, 1.0),
            record(DistributionSpec::Uniform01, 1.0, 0.8),
        ];
        let s = summarize(&two).unwrap();
        assert!((s[0].mean_ratio - 0.9).abs() < 1e-15);
        assert_eq!(s[0].min_ratio, 0.8);

        assert_eq!(summarize(&[]), Err(Error::EmptyRecords));
    }

    #[test]
    fn summary_groups_by_distribution() {
        let recs = [
            record(DistributionSpec::beta(), 1.0, 1.0),
            record(DistributionSpec::Uniform01, 1.0, 0.5),
            record(DistributionSpec::beta(), 1.0, 0.9),
        ];
        let s = summarize(&recs).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(s[0].dist, DistributionSpec::beta());
        assert_eq!(s[0].trials, 2);
        assert_eq!(s[3].dist, DistributionSpec::Uniform01);
        assert_eq!(s[3].min_ratio, 0.5);
    }

    #[test]
    fn suite_invariants() {
        let cfg = TrialConfig {
            trials: 60,
            k_max: 7,
            n_max: 9,
            seed: 5,
            ..TrialConfig::default()
        };
        for dist in DistributionSpec::all() {
            let records = run_suite(&cfg, dist).unwrap();
            assert_eq!(records.len(), 60);
            for (i, r) in records.iter().enumerate() {
                assert_eq!(r.trial, i);
                for m in Method::ALL {
                    assert!(r.profit(m) <= r.exact + 1e-9);
                    let ratio = r.ratio(m);
                    assert!((0.0..=1.0 + 1e-9).contains(&ratio));
                }
                assert_eq!(r.ratio(Method::Exact), 1.0);
            }
            assert_eq!(records, run_suite(&cfg, dist).unwrap());
        }
    }
}
