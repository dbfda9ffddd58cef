//! Fixed instances for the solver benchmarks.

use rmaap::{ProblemInstance, TaskProfile};

/// `k` distinct task values in (0, 1], spread unevenly so no two tie.
pub fn task_profile(k: usize) -> TaskProfile {
    let values: Vec<f64> = (0..k)
        .map(|i| {
            let x = (i as f64 + 1.0) * 0.618_033_988_75;
            0.05 + 0.95 * (x - x.floor())
        })
        .collect();
    TaskProfile::new(values).expect("fixture values are positive")
}

pub fn stochastic(k: usize, agents: usize, p: f64) -> ProblemInstance {
    ProblemInstance::stochastic(task_profile(k), agents, p).expect("valid fixture")
}

/// Attacker strength fixed at a third of the agents.
pub fn adversarial(k: usize, agents: usize) -> ProblemInstance {
    ProblemInstance::adversarial(task_profile(k), agents, agents / 3).expect("valid fixture")
}
