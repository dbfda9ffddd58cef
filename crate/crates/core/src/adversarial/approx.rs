//! Even-split sampling: for each `m`, spread all `N` agents as evenly as
//! possible over the `m` most valuable tasks and keep the best sample.
//!
//! Each sample gives `c + 1` agents to the first `d` tasks and `c` to the
//! next `m - d`, so the attacker only ever kills a prefix of each group and
//! its best response is found by scanning the group boundary.

use super::{AdversarialSolution, Method};
use crate::error::{Error, Result};
use crate::types::{Assignment, ProblemInstance};

/// The sample with `d` tasks at `c + 1` agents and `m - d` tasks at `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvenSplit {
    m: usize,
    c: usize,
    d: usize,
}

impl EvenSplit {
    /// Spreads `agents` over the first `m` tasks, extra agents to the front.
    ///
    /// Returns `None` unless `1 <= m <= agents`.
    pub fn of(agents: usize, m: usize) -> Option<Self> {
        if m == 0 || m > agents {
            return None;
        }
        let c = agents / m;
        Some(Self {
            m,
            c,
            d: agents - c * m,
        })
    }

    pub fn from_parts(m: usize, c: usize, d: usize) -> Result<Self> {
        if c < 1 {
            return Err(Error::EmptyEvenSplit(c));
        }
        if d > m {
            return Err(Error::LengthMismatch {
                expected: m,
                found: d,
            });
        }
        Ok(Self { m, c, d })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn agents(&self) -> usize {
        self.c * self.m + self.d
    }

    pub fn to_assignment(&self, k: usize) -> Assignment {
        let mut counts = vec![0; k];
        for (i, slot) in counts.iter_mut().take(self.m).enumerate() {
            *slot = if i < self.d { self.c + 1 } else { self.c };
        }
        Assignment::new(counts)
    }
}

/// Worst-case profit of an even split given the task prefix sums
/// (`prefix[0] = 0`, `prefix[i] = t_1 + .. + t_i`).
pub fn evaluate_even_attack(prefix: &[f64], split: EvenSplit, alpha: usize) -> Result<f64> {
    let EvenSplit { m, c, d } = split;
    if c < 1 {
        return Err(Error::EmptyEvenSplit(c));
    }
    if prefix.len() <= m {
        return Err(Error::LengthMismatch {
            expected: m + 1,
            found: prefix.len(),
        });
    }
    let max_heavy = d.min(alpha / (c + 1));
    let mut worst = f64::INFINITY;
    for r in 0..=max_heavy {
        let s = (m - d).min((alpha - r * (c + 1)) / c);
        let left = (prefix[d] - prefix[r]) + (prefix[m] - prefix[d + s]);
        worst = worst.min(left);
    }
    Ok(worst)
}

/// Best even split over `m = 1..=min(k, N)`, in `O(k^2)`.
pub fn solve_approx(instance: &ProblemInstance) -> Result<AdversarialSolution> {
    let alpha = instance.require_adversarial()?;
    let tasks = instance.tasks();
    let k = tasks.len();
    let agents = instance.agents();
    let prefix = tasks.prefix_sums();

    let mut best: Option<(EvenSplit, f64)> = None;
    for m in 1..=k.min(agents) {
        let split = EvenSplit::of(agents, m).expect("1 <= m <= agents");
        let worst = evaluate_even_attack(&prefix, split, alpha)?;
        if best.is_none_or(|(_, top)| worst > top) {
            best = Some((split, worst));
        }
    }

    let (assignment, worst_case) = match best {
        Some((split, worst)) => (split.to_assignment(k), worst),
        None => (Assignment::zeros(k), 0.0),
    };
    Ok(AdversarialSolution {
        assignment,
        worst_case,
        method: Method::Approx,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversarial::optimal_attack;
    use crate::types::TaskProfile;
    use proptest::prelude::*;

    fn paper() -> TaskProfile {
        TaskProfile::new(vec![90.0, 65.0, 55.0, 30.0, 15.0]).unwrap()
    }

    #[test]
    fn split_shapes() {
        let s = EvenSplit::of(9, 4).unwrap();
        assert_eq!((s.m(), s.c(), s.d()), (4, 2, 1));
        assert_eq!(s.to_assignment(5).counts(), &[3, 2, 2, 2, 0]);
        assert_eq!(EvenSplit::of(9, 2).unwrap().to_assignment(3).counts(), &[5, 4, 0]);
        assert!(EvenSplit::of(3, 4).is_none());
        assert!(EvenSplit::of(3, 0).is_none());
    }

    #[test]
    fn even_attack_examples() {
        let prefix = paper().prefix_sums();
        let split = EvenSplit::from_parts(4, 2, 1).unwrap();
        assert_eq!(evaluate_even_attack(&prefix, split, 3).unwrap(), 150.0);
        assert_eq!(evaluate_even_attack(&prefix, split, 0).unwrap(), prefix[4]);

        let three = TaskProfile::new(vec![90.0, 65.0, 55.0]).unwrap();
        let split = EvenSplit::from_parts(3, 3, 0).unwrap();
        assert_eq!(evaluate_even_attack(&three.prefix_sums(), split, 3).unwrap(), 120.0);
        let oracle = optimal_attack(&three, &split.to_assignment(3), 3).unwrap();
        assert_eq!(oracle.surviving_profit, 120.0);
    }

    #[test]
    fn even_attack_rejects_empty_groups() {
        assert_eq!(
            EvenSplit::from_parts(3, 0, 1),
            Err(Error::EmptyEvenSplit(0))
        );
    }

    #[test]
    fn worked_example() {
        let inst = ProblemInstance::adversarial(paper(), 9, 3).unwrap();
        let s = solve_approx(&inst).unwrap();
        assert_eq!(s.assignment.counts(), &[5, 4, 0, 0, 0]);
        assert_eq!(s.worst_case, 155.0);
        let samples: Vec<f64> = (1..=5)
            .map(|m| {
                let split = EvenSplit::of(9, m).unwrap();
                evaluate_even_attack(&paper().prefix_sums(), split, 3).unwrap()
            })
            .collect();
        assert_eq!(samples, vec![90.0, 155.0, 120.0, 150.0, 150.0]);
    }

    #[test]
    fn degenerate_instances() {
        let one = TaskProfile::new(vec![7.5]).unwrap();
        let s = solve_approx(&ProblemInstance::adversarial(one, 6, 5).unwrap()).unwrap();
        assert_eq!(s.assignment.counts(), &[6]);
        assert_eq!(s.worst_case, 7.5);

        let s = solve_approx(&ProblemInstance::adversarial(paper(), 5, 0).unwrap()).unwrap();
        assert_eq!(s.assignment.counts(), &[1, 1, 1, 1, 1]);
        assert_eq!(s.worst_case, 255.0);

        let s = solve_approx(&ProblemInstance::adversarial(paper(), 0, 0).unwrap()).unwrap();
        assert_eq!(s.assignment, Assignment::zeros(5));
        assert_eq!(s.worst_case, 0.0);
    }

    proptest! {
        #[test]
        fn boundary_scan_matches_knapsack(values in prop::collection::vec(0.01f64..100.0, 1..=8), n in 1usize..=40, alpha_frac in 0.0f64..=1.0) {
            let tasks = TaskProfile::new(values).unwrap();
            let alpha = (alpha_frac * n as f64).floor() as usize;
            let prefix = tasks.prefix_sums();
            for m in 1..=tasks.len().min(n) {
                let split = EvenSplit::of(n, m).unwrap();
                let fast = evaluate_even_attack(&prefix, split, alpha).unwrap();
                let slow = optimal_attack(&tasks, &split.to_assignment(tasks.len()), alpha).unwrap();
                prop_assert!((fast - slow.surviving_profit).abs() <= 1e-9, "m={} {} vs {}", m, fast, slow.surviving_profit);
            }
        }
    }
}
