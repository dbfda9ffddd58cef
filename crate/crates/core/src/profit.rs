//! Profit evaluation and validity checks.

use crate::error::{Error, Result};
use crate::types::{check_probability, Assignment, Attack, TaskProfile};

/// Absolute tolerance used for all profit comparisons.
pub const PROFIT_TOL: f64 = 1e-9;

/// Shifted heaviside `min(1, n)`: whether a task with `n` working agents completes.
pub fn heaviside(n: usize) -> usize {
    n.min(1)
}

/// `p^n` with `0^0 = 1`.
pub(crate) fn pow_count(p: f64, n: usize) -> f64 {
    match i32::try_from(n) {
        Ok(e) => p.powi(e),
        Err(_) => p.powf(n as f64),
    }
}

/// Expected completed profit `sum t_i (1 - p^x_i)` when every agent fails
/// independently with probability `p`.
pub fn expected_profit(tasks: &TaskProfile, x: &Assignment, p: f64) -> Result<f64> {
    tasks.check_len(x.len())?;
    check_probability(p)?;
    Ok(tasks
        .values()
        .iter()
        .zip(x.counts())
        .map(|(&t, &n)| t * (1.0 - pow_count(p, n)))
        .sum())
}

/// Profit of the tasks that still have an agent, with no failures.
pub fn completed_profit(tasks: &TaskProfile, x: &Assignment) -> Result<f64> {
    tasks.check_len(x.len())?;
    Ok(tasks
        .values()
        .iter()
        .zip(x.counts())
        .filter(|(_, &n)| n > 0)
        .map(|(&t, _)| t)
        .sum())
}

/// Profit left after the attack `d` is applied to `x`.
pub fn post_attack_profit(tasks: &TaskProfile, x: &Assignment, d: &Attack) -> Result<f64> {
    tasks.check_len(x.len())?;
    tasks.check_len(d.len())?;
    let mut total = 0.0;
    for (task, ((&t, &assigned), &removed)) in tasks
        .values()
        .iter()
        .zip(x.counts())
        .zip(d.removals())
        .enumerate()
    {
        if removed > assigned {
            return Err(Error::OverRemoval {
                task,
                removed,
                assigned,
            });
        }
        if heaviside(assigned - removed) == 1 {
            total += t;
        }
    }
    Ok(total)
}

/// Whether `d` is in the attacker's feasible set for `x` under limit `alpha`.
pub fn is_valid_attack(x: &Assignment, d: &Attack, alpha: usize) -> bool {
    x.len() == d.len()
        && d.total() <= alpha
        && d.removals()
            .iter()
            .zip(x.counts())
            .all(|(&removed, &assigned)| removed <= assigned)
}
