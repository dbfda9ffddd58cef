//! Domain types shared by every solver.
//!
//! All types are immutable once constructed. Solvers work on tasks sorted by
//! non-increasing value; [`TaskProfile`] keeps the permutation back to the
//! caller's ordering.

use crate::error::{Error, Result};

/// Task values sorted non-increasing, plus the map back to input order.
#[derive(Debug, Clone, PartialEq)]
pub struct TaskProfile {
    values: Vec<f64>,
    /// `perm[i]` is the input index of the task at sorted position `i`.
    perm: Vec<usize>,
}

impl TaskProfile {
    /// Builds a profile from task values in any order.
    ///
    /// Values must be finite and strictly positive. Equal values keep their
    /// relative input order.
    pub fn new(values: impl Into<Vec<f64>>) -> Result<Self> {
        let input: Vec<f64> = values.into();
        if input.is_empty() {
            return Err(Error::EmptyTasks);
        }
        for (index, &value) in input.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::NonPositiveTask { index, value });
            }
        }
        let mut perm: Vec<usize> = (0..input.len()).collect();
        perm.sort_by(|&a, &b| input[b].total_cmp(&input[a]));
        let values = perm.iter().map(|&i| input[i]).collect();
        Ok(Self { values, perm })
    }

    /// Sorted task values.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Number of tasks, `k`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sum of all task values.
    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Prefix sums `U` with `U[0] = 0` and `U[i] = U[i-1] + t_i`.
    pub fn prefix_sums(&self) -> Vec<f64> {
        let mut sums = Vec::with_capacity(self.values.len() + 1);
        sums.push(0.0);
        let mut acc = 0.0;
        for &t in &self.values {
            acc += t;
            sums.push(acc);
        }
        sums
    }

    /// Reorders a per-task vector from sorted order to input order.
    pub fn to_input_order<T: Copy + Default>(&self, sorted: &[T]) -> Result<Vec<T>> {
        self.check_len(sorted.len())?;
        let mut out = vec![T::default(); sorted.len()];
        for (pos, &orig) in self.perm.iter().enumerate() {
            out[orig] = sorted[pos];
        }
        Ok(out)
    }

    /// Reorders a per-task vector from input order to sorted order.
    pub fn to_sorted_order<T: Copy>(&self, input: &[T]) -> Result<Vec<T>> {
        self.check_len(input.len())?;
        Ok(self.perm.iter().map(|&orig| input[orig]).collect())
    }

    pub(crate) fn check_len(&self, found: usize) -> Result<()> {
        if found != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found,
            });
        }
        Ok(())
    }
}

/// Number of agents assigned to each task, in sorted task order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(Vec<usize>);

impl Assignment {
    pub fn new(counts: impl Into<Vec<usize>>) -> Self {
        Self(counts.into())
    }

    pub fn zeros(k: usize) -> Self {
        Self(vec![0; k])
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of agents used.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Valid for a budget of `agents` iff the counts sum to at most `agents`.
    pub fn is_valid_for(&self, agents: usize) -> bool {
        self.total() <= agents
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for Assignment {
    fn from(counts: Vec<usize>) -> Self {
        Self(counts)
    }
}

/// Number of agents the attacker disables on each task.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Attack(Vec<usize>);

impl Attack {
    pub fn new(removals: impl Into<Vec<usize>>) -> Self {
        Self(removals.into())
    }

    pub fn none(k: usize) -> Self {
        Self(vec![0; k])
    }

    pub fn removals(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Indices of tasks with at least one agent removed.
    pub fn targeted(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, _)| i)
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for Attack {
    fn from(removals: Vec<usize>) -> Self {
        Self(removals)
    }
}

/// How agents fail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FailureModel {
    /// Each agent fails independently with probability `p`.
    Stochastic { p: f64 },
    /// An adversary disables at most `alpha` agents after seeing the assignment.
    Adversarial { alpha: usize },
}

impl FailureModel {
    pub fn name(&self) -> &'static str {
        match self {
            FailureModel::Stochastic { .. } => "stochastic",
            FailureModel::Adversarial { .. } => "adversarial",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance {
    tasks: TaskProfile,
    agents: usize,
    model: FailureModel,
}

impl ProblemInstance {
    pub fn stochastic(tasks: TaskProfile, agents: usize, p: f64) -> Result<Self> {
        check_probability(p)?;
        Ok(Self {
            tasks,
            agents,
            model: FailureModel::Stochastic { p },
        })
    }

    pub fn adversarial(tasks: TaskProfile, agents: usize, alpha: usize) -> Result<Self> {
        if alpha > agents {
            return Err(Error::AlphaExceedsAgents { alpha, agents });
        }
        Ok(Self {
            tasks,
            agents,
            model: FailureModel::Adversarial { alpha },
        })
    }

    pub fn tasks(&self) -> &TaskProfile {
        &self.tasks
    }

    /// Number of agents, `N`.
    pub fn agents(&self) -> usize {
        self.agents
    }

    pub fn model(&self) -> FailureModel {
        self.model
    }

    pub(crate) fn require_stochastic(&self) -> Result<f64> {
        match self.model {
            FailureModel::Stochastic { p } => Ok(p),
            FailureModel::Adversarial { .. } => Err(Error::WrongModel {
                expected: "stochastic",
            }),
        }
    }

    pub(crate) fn require_adversarial(&self) -> Result<usize> {
        match self.model {
            FailureModel::Adversarial { alpha } => Ok(alpha),
            FailureModel::Stochastic { .. } => Err(Error::WrongModel {
                expected: "adversarial",
            }),
        }
    }
}

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    Ok(())
}
