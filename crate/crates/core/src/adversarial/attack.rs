//! The attacker's best response.
//!
//! Disabling only some of a task's agents gains the attacker nothing, so the
//! best response picks whole tasks: a 0-1 knapsack with capacity `alpha`,
//! weight `x_i` and value `t_i` per task.

use crate::error::Result;
use crate::profit::PROFIT_TOL;
use crate::types::{Assignment, Attack, TaskProfile};

#[derive(Debug, Clone, PartialEq)]
pub struct AttackResult {
    /// Removes all or none of each task's agents.
    pub attack: Attack,
    /// Total value of the tasks the attacker kills.
    pub stolen_value: f64,
    /// Defender's profit after the attack.
    pub surviving_profit: f64,
}

/// Solves the attacker's knapsack by dynamic programming in `O(alpha k)`.
///
/// Among (near-)equal optima the subset whose sorted index list is
/// lexicographically smallest is returned.
pub fn optimal_attack(tasks: &TaskProfile, x: &Assignment, alpha: usize) -> Result<AttackResult> {
    tasks.check_len(x.len())?;
    let values = tasks.values();
    let counts = x.counts();
    let k = values.len();
    let width = alpha + 1;

    // best[i * width + w]: most value stealable from tasks i.. with capacity w.
    // take[i * width + w]: whether task i is in that optimum.
    let mut best = vec![0.0f64; (k + 1) * width];
    let mut take = vec![false; k * width];
    for i in (0..k).rev() {
        let weight = counts[i];
        let (head, tail) = best.split_at_mut((i + 1) * width);
        let row = &mut head[i * width..];
        let next = &tail[..width];
        for w in 0..width {
            let skip = next[w];
            if weight == 0 || weight > w {
                row[w] = skip;
                continue;
            }
            let with = values[i] + next[w - weight];
            if with >= skip - PROFIT_TOL {
                row[w] = with;
                take[i * width + w] = true;
            } else {
                row[w] = skip;
            }
        }
    }

    let mut removals = vec![0; k];
    let mut capacity = alpha;
    let mut stolen_value = 0.0;
    let mut surviving_profit = 0.0;
    for i in 0..k {
        if take[i * width + capacity] {
            removals[i] = counts[i];
            capacity -= counts[i];
            stolen_value += values[i];
        } else if counts[i] > 0 {
            surviving_profit += values[i];
        }
    }

    Ok(AttackResult {
        attack: Attack::new(removals),
        stolen_value,
        surviving_profit,
    })
}

/// Profit of `x` against a best-responding attacker with budget `alpha`.
pub fn worst_case_profit(tasks: &TaskProfile, x: &Assignment, alpha: usize) -> Result<f64> {
    Ok(optimal_attack(tasks, x, alpha)?.surviving_profit)
}

/// Whether `x` keeps at least `threshold` profit whenever at most `alpha`
/// agents fail.
pub fn is_alpha_tolerant(
    tasks: &TaskProfile,
    x: &Assignment,
    alpha: usize,
    threshold: f64,
) -> Result<bool> {
    Ok(worst_case_profit(tasks, x, alpha)? >= threshold - PROFIT_TOL)
}
