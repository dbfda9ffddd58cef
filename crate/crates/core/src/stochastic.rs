//! Exact solvers for independent agent failures with probability `p`.
//!
//! [`solve_greedy`] hands out agents one at a time by largest marginal gain.
//! [`solve_relaxed`] solves the continuous relaxation in closed form, floors
//! it, and places the few leftover agents greedily, so its cost does not
//! depend on the number of agents.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::profit::{expected_profit, pow_count};
use crate::types::{check_probability, Assignment, ProblemInstance, TaskProfile};

/// Continuous entries below this are treated as negative and pruned.
const PRUNE_TOL: f64 = 1e-12;

/// Fractional optimum over the surviving (most valuable) tasks.
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuousAssignment {
    /// Fractional agent counts for the first `fractions.len()` sorted tasks.
    pub fractions: Vec<f64>,
    /// Number of trailing tasks fixed at zero.
    pub pruned: usize,
}

impl ContinuousAssignment {
    pub fn surviving(&self) -> usize {
        self.fractions.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StochasticSolution {
    /// Counts in sorted task order.
    pub assignment: Assignment,
    /// Expected profit of `assignment`.
    pub value: f64,
}

/// Heap entry ordered by marginal gain, then by lowest task index.
#[derive(Debug, Clone, Copy)]
struct Candidate {
    gain: f64,
    task: usize,
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Candidate {}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gain
            .total_cmp(&other.gain)
            .then_with(|| other.task.cmp(&self.task))
    }
}

/// A key ordered the same way as the marginal gain `t p^n (1 - p)`.
///
/// Inside (0, 1) the log form is used so gains never underflow to a tie.
fn gain_key(t: f64, n: usize, p: f64, ln_p: f64) -> f64 {
    if p > 0.0 && p < 1.0 {
        t.ln() + n as f64 * ln_p
    } else {
        t * pow_count(p, n) * (1.0 - p)
    }
}

/// Adds `extra` agents to `counts` one at a time by largest marginal gain.
fn greedy_fill(values: &[f64], counts: &mut [usize], p: f64, extra: usize) {
    if extra == 0 || values.is_empty() {
        return;
    }
    let ln_p = p.ln();
    let mut heap: BinaryHeap<Candidate> = values
        .iter()
        .zip(counts.iter())
        .enumerate()
        .map(|(task, (&t, &n))| Candidate {
            gain: gain_key(t, n, p, ln_p),
            task,
        })
        .collect();
    for _ in 0..extra {
        let Some(best) = heap.pop() else { break };
        counts[best.task] += 1;
        heap.push(Candidate {
            gain: gain_key(values[best.task], counts[best.task], p, ln_p),
            task: best.task,
        });
    }
}

/// Greedy marginal-gain allocation. Runs in `O(k + N log k)`.
pub fn solve_greedy(instance: &ProblemInstance) -> Result<StochasticSolution> {
    let p = instance.require_stochastic()?;
    let tasks = instance.tasks();
    let mut counts = vec![0; tasks.len()];
    greedy_fill(tasks.values(), &mut counts, p, instance.agents());
    finish(tasks, counts, p)
}

/// Closed-form optimum of the continuous relaxation with negative entries
/// pruned until every surviving entry is non-negative.
pub fn solve_continuous(tasks: &TaskProfile, agents: usize, p: f64) -> Result<ContinuousAssignment> {
    check_probability(p)?;
    if p <= 0.0 || p >= 1.0 {
        return Err(Error::ProbabilityNotInterior(p));
    }
    let ln_p = p.ln();
    // log_p(t_i), non-decreasing along the sorted order
    let logs: Vec<f64> = tasks.values().iter().map(|t| t.ln() / ln_p).collect();
    let n = agents as f64;
    let mut k = logs.len();
    loop {
        let level = (logs[..k].iter().sum::<f64>() + n) / k as f64;
        let keep = logs[..k].partition_point(|&l| level - l >= -PRUNE_TOL);
        if keep == k {
            return Ok(ContinuousAssignment {
                fractions: logs[..k].iter().map(|&l| level - l).collect(),
                pruned: logs.len() - k,
            });
        }
        // the largest fraction is at least N/k >= 0, so `keep` never hits zero
        debug_assert!(keep > 0);
        k = keep;
    }
}

/// Relaxation-and-rounding solver. Cost is `O(k^2)` regardless of `N`.
pub fn solve_relaxed(instance: &ProblemInstance) -> Result<StochasticSolution> {
    let p = instance.require_stochastic()?;
    let tasks = instance.tasks();
    let agents = instance.agents();
    let k = tasks.len();
    let mut counts = vec![0; k];

    if p == 0.0 {
        counts.iter_mut().take(agents).for_each(|c| *c = 1);
        return finish(tasks, counts, p);
    }
    if p == 1.0 || agents == 0 {
        return finish(tasks, counts, p);
    }

    let relaxed = solve_continuous(tasks, agents, p)?;
    // shift down slightly so rounding noise can never overshoot the budget
    for (c, &f) in counts.iter_mut().zip(&relaxed.fractions) {
        *c = (f - 1e-9).floor().max(0.0) as usize;
    }
    let used: usize = counts.iter().sum();
    let leftover = agents.saturating_sub(used);
    debug_assert!(leftover <= k + 1, "leftover {leftover} exceeds k = {k}");
    let surviving = relaxed.surviving();
    greedy_fill(&tasks.values()[..surviving], &mut counts[..surviving], p, leftover);
    finish(tasks, counts, p)
}

fn finish(tasks: &TaskProfile, counts: Vec<usize>, p: f64) -> Result<StochasticSolution> {
    let assignment = Assignment::new(counts);
    let value = expected_profit(tasks, &assignment, p)?;
    Ok(StochasticSolution { assignment, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn instance(values: &[f64], agents: usize, p: f64) -> ProblemInstance {
        ProblemInstance::stochastic(TaskProfile::new(values.to_vec()).unwrap(), agents, p).unwrap()
    }

    /// Exhaustive search over every composition of at most `n` agents.
    fn brute_force(tasks: &TaskProfile, n: usize, p: f64) -> f64 {
        fn rec(tasks: &TaskProfile, p: f64, left: usize, cur: &mut Vec<usize>, best: &mut f64) {
            if cur.len() == tasks.len() {
                let ev: f64 = tasks
                    .values()
                    .iter()
                    .zip(cur.iter())
                    .map(|(t, &x)| t * (1.0 - p.powi(x as i32)))
                    .sum();
                *best = best.max(ev);
                return;
            }
            for x in 0..=left {
                cur.push(x);
                rec(tasks, p, left - x, cur, best);
                cur.pop();
            }
        }
        let mut best = f64::NEG_INFINITY;
        rec(tasks, p, n, &mut Vec::new(), &mut best);
        best
    }

    #[test]
    fn greedy_examples() {
        let s = solve_greedy(&instance(&[70.0, 30.0, 10.0], 3, 0.3)).unwrap();
        assert_eq!(s.assignment.counts(), &[2, 1, 0]);
        assert!((s.value - 84.7).abs() < 1e-9);

        let s = solve_greedy(&instance(&[50.0, 40.0], 2, 0.0)).unwrap();
        assert_eq!(s.assignment.counts(), &[1, 1]);
        assert_eq!(s.value, 90.0);

        let s = solve_greedy(&instance(&[100.0, 10.0], 4, 0.5)).unwrap();
        assert_eq!(s.assignment.counts(), &[4, 0]);
        assert!((s.value - 93.75).abs() < 1e-12);
    }

    #[test]
    fn greedy_rejects_adversarial() {
        let inst =
            ProblemInstance::adversarial(TaskProfile::new(vec![1.0]).unwrap(), 2, 1).unwrap();
        assert_eq!(
            solve_greedy(&inst),
            Err(Error::WrongModel {
                expected: "stochastic"
            })
        );
        assert!(solve_relaxed(&inst).is_err());
    }

    #[test]
    fn greedy_ties_go_to_lowest_index() {
        let s = solve_greedy(&instance(&[5.0, 5.0, 5.0], 2, 0.5)).unwrap();
        assert_eq!(s.assignment.counts(), &[1, 1, 0]);
    }

    #[test]
    fn continuous_examples() {
        let tasks = TaskProfile::new(vec![70.0, 30.0, 10.0]).unwrap();
        let c = solve_continuous(&tasks, 3, 0.3).unwrap();
        assert_eq!(c.pruned, 0);
        // frozen from an independent SLSQP solve of the Lagrange system
        let expected = [1.773_330_870_2, 1.069_579_209_6, 0.157_089_920_2];
        for (got, want) in c.fractions.iter().zip(expected) {
            assert!((got - want).abs() < 1e-6, "{got} vs {want}");
        }

        let tasks = TaskProfile::new(vec![100.0, 1.0]).unwrap();
        let c = solve_continuous(&tasks, 1, 0.5).unwrap();
        assert_eq!(c.pruned, 1);
        assert_eq!(c.fractions.len(), 1);
        assert!((c.fractions[0] - 1.0).abs() < 1e-12);

        let tasks = TaskProfile::new(vec![3.5]).unwrap();
        let c = solve_continuous(&tasks, 7, 0.8).unwrap();
        assert_eq!(c.pruned, 0);
        assert!((c.fractions[0] - 7.0).abs() < 1e-12);
    }

    #[test]
    fn continuous_first_pass_goes_negative() {
        // the unpruned formula puts the small task at about -2.8219
        let ln_p = 0.5f64.ln();
        let (l1, l2) = (100f64.ln() / ln_p, 1f64.ln() / ln_p);
        let level = (l1 + l2 + 1.0) / 2.0;
        assert!((level - l2 + 2.821_928_094_9).abs() < 1e-9);
    }

    #[test]
    fn continuous_rejects_endpoints() {
        let tasks = TaskProfile::new(vec![1.0]).unwrap();
        assert_eq!(
            solve_continuous(&tasks, 1, 0.0),
            Err(Error::ProbabilityNotInterior(0.0))
        );
        assert!(solve_continuous(&tasks, 1, 1.0).is_err());
        assert!(matches!(
            solve_continuous(&tasks, 1, 2.0),
            Err(Error::InvalidProbability(_))
        ));
    }

    #[test]
    fn relaxed_examples() {
        let s = solve_relaxed(&instance(&[70.0, 30.0, 10.0], 3, 0.3)).unwrap();
        assert_eq!(s.assignment.counts(), &[2, 1, 0]);
        assert!((s.value - 84.7).abs() < 1e-9);

        let s = solve_relaxed(&instance(&[100.0, 1.0], 1, 0.5)).unwrap();
        assert_eq!(s.assignment.counts(), &[1, 0]);
        assert!((s.value - 50.0).abs() < 1e-12);

        let s = solve_relaxed(&instance(&[5.0, 5.0, 5.0], 0, 0.4)).unwrap();
        assert_eq!(s.assignment.counts(), &[0, 0, 0]);
        assert_eq!(s.value, 0.0);
    }

    #[test]
    fn relaxed_endpoint_policies() {
        let s = solve_relaxed(&instance(&[4.0, 3.0, 2.0], 2, 0.0)).unwrap();
        assert_eq!(s.assignment.counts(), &[1, 1, 0]);
        assert_eq!(s.value, 7.0);
        let s = solve_relaxed(&instance(&[4.0, 3.0], 9, 0.0)).unwrap();
        assert_eq!(s.assignment.counts(), &[1, 1]);
        let s = solve_relaxed(&instance(&[4.0, 3.0], 9, 1.0)).unwrap();
        assert_eq!(s.assignment.counts(), &[0, 0]);
        assert_eq!(s.value, 0.0);
    }

    #[test]
    fn relaxed_with_many_agents() {
        let values: Vec<f64> = (1..=20).map(|i| i as f64).collect();
        let inst = instance(&values, 1_000_000, 0.9);
        let s = solve_relaxed(&inst).unwrap();
        assert_eq!(s.assignment.total(), 1_000_000);
        let g = solve_greedy(&inst).unwrap();
        assert!((s.value - g.value).abs() <= 1e-9);
    }

    fn small_instance() -> impl Strategy<Value = (Vec<f64>, usize, f64)> {
        (
            prop::collection::vec(0.01f64..1.0, 1..=4),
            0usize..=8,
            prop::sample::select(vec![0.0, 0.1, 0.3, 0.5, 0.9, 1.0]),
        )
    }

    proptest! {
        #[test]
        fn solvers_match_brute_force((values, n, p) in small_instance()) {
            let inst = instance(&values, n, p);
            let oracle = brute_force(inst.tasks(), n, p);
            let g = solve_greedy(&inst).unwrap();
            let r = solve_relaxed(&inst).unwrap();
            prop_assert!((g.value - oracle).abs() <= 1e-9);
            prop_assert!((r.value - oracle).abs() <= 1e-9);
        }

        #[test]
        fn greedy_and_relaxed_agree(values in prop::collection::vec(0.001f64..1000.0, 1..12), n in 0usize..200, p in 0.01f64..0.99) {
            let inst = instance(&values, n, p);
            let g = solve_greedy(&inst).unwrap();
            let r = solve_relaxed(&inst).unwrap();
            prop_assert!((g.value - r.value).abs() <= 1e-9, "{} vs {}", g.value, r.value);
            prop_assert_eq!(g.assignment.total(), n);
            prop_assert_eq!(r.assignment.total(), n);
        }

        #[test]
        fn continuous_marginals_balance(values in prop::collection::vec(0.01f64..100.0, 1..10), n in 0usize..100, p in 0.05f64..0.95) {
            let tasks = TaskProfile::new(values).unwrap();
            let c = solve_continuous(&tasks, n, p).unwrap();
            prop_assert_eq!(c.pruned + c.fractions.len(), tasks.len());
            prop_assert!((c.fractions.iter().sum::<f64>() - n as f64).abs() < 1e-6);
            let levels: Vec<f64> = c.fractions.iter().zip(tasks.values()).map(|(&x, &t)| t * p.powf(x)).collect();
            for w in levels.windows(2) {
                prop_assert!((w[0] - w[1]).abs() <= 1e-6 * w[0].abs().max(w[1].abs()));
            }
            for &x in &c.fractions {
                prop_assert!(x >= -1e-9);
            }
        }

        #[test]
        fn greedy_is_locally_optimal(values in prop::collection::vec(0.01f64..10.0, 2..6), n in 1usize..30, p in 0.05f64..0.95) {
            let inst = instance(&values, n, p);
            let s = solve_greedy(&inst).unwrap();
            let counts = s.assignment.counts();
            for from in 0..counts.len() {
                if counts[from] == 0 { continue; }
                for to in 0..counts.len() {
                    if to == from { continue; }
                    let mut moved = counts.to_vec();
                    moved[from] -= 1;
                    moved[to] += 1;
                    let v = expected_profit(inst.tasks(), &Assignment::new(moved), p).unwrap();
                    prop_assert!(v <= s.value + 1e-9);
                }
            }
        }

        #[test]
        fn greedy_assignment_is_scale_invariant(values in prop::collection::vec(1.0f64..10.0, 1..6), n in 0usize..20, p in 0.05f64..0.95) {
            let a = solve_greedy(&instance(&values, n, p)).unwrap();
            let scaled: Vec<f64> = values.iter().map(|v| v * 8.0).collect();
            let b = solve_greedy(&instance(&scaled, n, p)).unwrap();
            prop_assert_eq!(a.assignment, b.assignment);
            prop_assert!((a.value * 8.0 - b.value).abs() < 1e-9);
        }
    }
}
