//! Solvers for worst-case failures: a defender commits to an assignment and
//! an attacker who sees it disables at most `alpha` agents.

mod approx;
mod attack;
mod baselines;
mod partitions;

use std::fmt;
use std::str::FromStr;

pub use approx::{evaluate_even_attack, solve_approx, EvenSplit};
pub use attack::{is_alpha_tolerant, optimal_attack, worst_case_profit, AttackResult};
pub use baselines::{baseline_expectation, baseline_greedy};
pub use partitions::{enumerate_decreasing_assignments, DecreasingAssignments};

use crate::error::{Error, Result};
use crate::profit::PROFIT_TOL;
use crate::types::{Assignment, ProblemInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    Approx,
    GreedyBaseline,
    ExpectationBaseline,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Exact,
        Method::Approx,
        Method::GreedyBaseline,
        Method::ExpectationBaseline,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Approx => "approx",
            Method::GreedyBaseline => "greedy_baseline",
            Method::ExpectationBaseline => "expectation_baseline",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "exact" => Ok(Method::Exact),
            "approx" => Ok(Method::Approx),
            "greedy_baseline" => Ok(Method::GreedyBaseline),
            "expectation_baseline" => Ok(Method::ExpectationBaseline),
            _ => Err(Error::Schema {
                field: "method".into(),
                message: format!("unknown adversarial method `{s}`"),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdversarialSolution {
    /// Counts in sorted task order.
    pub assignment: Assignment,
    /// Profit left after the attacker's best response.
    pub worst_case: f64,
    pub method: Method,
}

/// Exhaustive search over non-increasing assignments of all `N` agents.
///
/// Some optimal assignment is non-increasing and spending every agent never
/// lowers the worst case, so this search is exact. Ties keep the first
/// assignment in reverse-lexicographic order. Only practical for small
/// `N` and `k`.
pub fn solve_exact(instance: &ProblemInstance) -> Result<AdversarialSolution> {
    let alpha = instance.require_adversarial()?;
    let tasks = instance.tasks();
    let mut best: Option<(Assignment, f64)> = None;
    for candidate in enumerate_decreasing_assignments(instance.agents(), tasks.len()) {
        let worst = worst_case_profit(tasks, &candidate, alpha)?;
        if best
            .as_ref()
            .is_none_or(|(_, top)| worst > top + PROFIT_TOL)
        {
            best = Some((candidate, worst));
        }
    }
    let (assignment, worst_case) = best.expect("at least one partition always exists");
    Ok(AdversarialSolution {
        assignment,
        worst_case,
        method: Method::Exact,
    })
}

/// Runs the named solver. `seed` only affects [`Method::GreedyBaseline`].
pub fn solve(instance: &ProblemInstance, method: Method, seed: u64) -> Result<AdversarialSolution> {
    match method {
        Method::Exact => solve_exact(instance),
        Method::Approx => solve_approx(instance),
        Method::GreedyBaseline => baseline_greedy(instance, seed),
        Method::ExpectationBaseline => baseline_expectation(instance),
    }
}
