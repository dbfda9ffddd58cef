//! Reference strategies the even-split solver is compared against.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{worst_case_profit, AdversarialSolution, Method};
use crate::error::{Error, Result};
use crate::stochastic::solve_relaxed;
use crate::types::{Assignment, ProblemInstance};

/// Largest failure probability handed to the stochastic solver.
const MAX_EXPECTATION_P: f64 = 1.0 - 1e-9;

/// Blocks of `alpha + 1` agents on the most valuable tasks, then the rest
/// placed one at a time on uniformly random tasks.
pub fn baseline_greedy(instance: &ProblemInstance, seed: u64) -> Result<AdversarialSolution> {
    let alpha = instance.require_adversarial()?;
    let tasks = instance.tasks();
    let k = tasks.len();
    let block = alpha + 1;
    let mut counts = vec![0; k];
    let mut left = instance.agents();
    for slot in counts.iter_mut() {
        if left < block {
            break;
        }
        *slot = block;
        left -= block;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..left {
        counts[rng.random_range(0..k)] += 1;
    }
    scored(instance, Assignment::new(counts), alpha, Method::GreedyBaseline)
}

/// Treats failures as independent with `p = alpha / N` and solves that
/// problem exactly, then scores the result against the real attacker.
pub fn baseline_expectation(instance: &ProblemInstance) -> Result<AdversarialSolution> {
    let alpha = instance.require_adversarial()?;
    let agents = instance.agents();
    if agents == 0 {
        return Err(Error::NoAgents);
    }
    let p = (alpha as f64 / agents as f64).min(MAX_EXPECTATION_P);
    let proxy = ProblemInstance::stochastic(instance.tasks().clone(), agents, p)?;
    let solution = solve_relaxed(&proxy)?;
    scored(instance, solution.assignment, alpha, Method::ExpectationBaseline)
}

fn scored(
    instance: &ProblemInstance,
    assignment: Assignment,
    alpha: usize,
    method: Method,
) -> Result<AdversarialSolution> {
    let worst_case = worst_case_profit(instance.tasks(), &assignment, alpha)?;
    Ok(AdversarialSolution {
        assignment,
        worst_case,
        method,
    })
}
