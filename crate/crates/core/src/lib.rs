//! Robust assignment of agents to profit-weighted tasks when agents may fail.
//!
//! Two failure models are supported:
//!
//! - **stochastic**: every agent fails independently with probability `p`;
//!   [`stochastic::solve_greedy`] and [`stochastic::solve_relaxed`] maximize
//!   expected profit exactly.
//! - **adversarial**: an attacker who sees the assignment disables at most
//!   `alpha` agents; [`adversarial::solve_exact`] maximizes the worst case by
//!   exhaustive search and [`adversarial::solve_approx`] approximates it in
//!   `O(k^2)`.
//!
//! Tasks are handled in non-increasing value order internally. Use
//! [`TaskProfile::to_input_order`] to map per-task results back to the
//! caller's ordering.
//!
//! ```
//! use rmaap::{stochastic, ProblemInstance, TaskProfile};
//!
//! let tasks = TaskProfile::new(vec![70.0, 30.0, 10.0])?;
//! let instance = ProblemInstance::stochastic(tasks, 3, 0.3)?;
//! let best = stochastic::solve_relaxed(&instance)?;
//! assert_eq!(best.assignment.counts(), &[2, 1, 0]);
//! assert!((best.value - 84.7).abs() < 1e-9);
//! # Ok::<(), rmaap::Error>(())
//! ```

pub mod adversarial;
pub mod bench;
pub mod document;
mod error;
pub mod profit;
pub mod stochastic;
mod types;

pub use error::{Error, Result};
pub use profit::{expected_profit, heaviside, is_valid_attack, post_attack_profit, PROFIT_TOL};
pub use types::{Assignment, Attack, FailureModel, ProblemInstance, TaskProfile};
