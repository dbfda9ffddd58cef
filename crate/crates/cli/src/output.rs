//! Result documents. Per-task vectors are reported in the input task order.

use std::io::{self, Write};

use serde::Serialize;

use rmaap::adversarial::{AttackResult, Method};
use rmaap::bench::{format_significant, MethodSummary};
use rmaap::stochastic::StochasticSolution;
use rmaap::{Assignment, ProblemInstance, Result};

pub trait Render: Serialize {
    fn render_table(&self, out: &mut dyn Write) -> io::Result<()>;
}

#[derive(Debug, Serialize)]
pub struct AttackPart {
    pub removals: Vec<usize>,
    pub stolen_value: f64,
    pub surviving_profit: f64,
}

impl AttackPart {
    fn new(instance: &ProblemInstance, attack: &AttackResult) -> Result<Self> {
        Ok(Self {
            removals: instance.tasks().to_input_order(attack.attack.removals())?,
            stolen_value: attack.stolen_value,
            surviving_profit: attack.surviving_profit,
        })
    }

    /// 1-based input indices of the killed tasks.
    fn killed(&self) -> Vec<usize> {
        self.removals
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

fn input_tasks(instance: &ProblemInstance) -> Result<Vec<f64>> {
    instance.tasks().to_input_order(instance.tasks().values())
}

#[derive(Debug, Serialize)]
pub struct StochasticDoc {
    pub method: &'static str,
    pub tasks: Vec<f64>,
    pub agents: usize,
    pub p: f64,
    pub assignment: Vec<usize>,
    pub value: f64,
}

impl StochasticDoc {
    pub fn new(
        instance: &ProblemInstance,
        method: &'static str,
        p: f64,
        solution: &StochasticSolution,
    ) -> Result<Self> {
        Ok(Self {
            method,
            tasks: input_tasks(instance)?,
            agents: instance.agents(),
            p,
            assignment: instance.tasks().to_input_order(solution.assignment.counts())?,
            value: solution.value,
        })
    }
}

#[derive(Debug, Serialize)]
pub struct AdversarialDoc {
    pub method: &'static str,
    pub tasks: Vec<f64>,
    pub agents: usize,
    pub alpha: usize,
    pub assignment: Vec<usize>,
    /// Worst-case profit, as scored by the attacker oracle.
    pub value: f64,
    pub attack: AttackPart,
}

impl AdversarialDoc {
    pub fn new(
        instance: &ProblemInstance,
        alpha: usize,
        method: Method,
        assignment: &Assignment,
        attack: &AttackResult,
    ) -> Result<Self> {
        Ok(Self {
            method: method.as_str(),
            tasks: input_tasks(instance)?,
            agents: instance.agents(),
            alpha,
            assignment: instance.tasks().to_input_order(assignment.counts())?,
            value: attack.surviving_profit,
            attack: AttackPart::new(instance, attack)?,
        })
    }
}

#[derive(Debug, Serialize)]
pub struct AttackDoc {
    pub tasks: Vec<f64>,
    pub alpha: usize,
    pub assignment: Vec<usize>,
    pub value: f64,
    pub attack: AttackPart,
}

impl AttackDoc {
    pub fn new(
        instance: &ProblemInstance,
        alpha: usize,
        assignment: &Assignment,
        attack: &AttackResult,
    ) -> Result<Self> {
        Ok(Self {
            tasks: input_tasks(instance)?,
            alpha,
            assignment: instance.tasks().to_input_order(assignment.counts())?,
            value: attack.surviving_profit,
            attack: AttackPart::new(instance, attack)?,
        })
    }
}

#[derive(Debug, Serialize)]
pub struct ToleranceDoc {
    pub alpha: usize,
    pub assignment: Vec<usize>,
    pub threshold: f64,
    pub value: f64,
    pub tolerant: bool,
}

impl ToleranceDoc {
    pub fn new(
        instance: &ProblemInstance,
        alpha: usize,
        assignment: &Assignment,
        threshold: f64,
        value: f64,
        tolerant: bool,
    ) -> Result<Self> {
        Ok(Self {
            alpha,
            assignment: instance.tasks().to_input_order(assignment.counts())?,
            threshold,
            value,
            tolerant,
        })
    }
}

fn task_table(out: &mut dyn Write, tasks: &[f64], columns: &[(&str, &[usize])]) -> io::Result<()> {
    write!(out, "{:>6} {:>14}", "task", "value")?;
    for (name, _) in columns {
        write!(out, " {name:>9}")?;
    }
    writeln!(out)?;
    for (i, t) in tasks.iter().enumerate() {
        write!(out, "{:>6} {:>14}", i + 1, format_significant(*t, 9))?;
        for (_, col) in columns {
            write!(out, " {:>9}", col[i])?;
        }
        writeln!(out)?;
    }
    Ok(())
}

impl Render for StochasticDoc {
    fn render_table(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "method: {}  agents: {}  p: {}", self.method, self.agents, self.p)?;
        task_table(out, &self.tasks, &[("agents", &self.assignment)])?;
        writeln!(out, "expected profit: {}", format_significant(self.value, 9))
    }
}

fn render_attack(out: &mut dyn Write, attack: &AttackPart, value: f64) -> io::Result<()> {
    let killed: Vec<String> = attack.killed().iter().map(|i| i.to_string()).collect();
    writeln!(
        out,
        "attacker kills tasks [{}] stealing {}",
        killed.join(", "),
        format_significant(attack.stolen_value, 9)
    )?;
    writeln!(out, "worst-case profit: {}", format_significant(value, 9))
}

impl Render for AdversarialDoc {
    fn render_table(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "method: {}  agents: {}  alpha: {}", self.method, self.agents, self.alpha)?;
        task_table(
            out,
            &self.tasks,
            &[("agents", &self.assignment), ("removed", &self.attack.removals)],
        )?;
        render_attack(out, &self.attack, self.value)
    }
}

impl Render for AttackDoc {
    fn render_table(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "alpha: {}", self.alpha)?;
        task_table(
            out,
            &self.tasks,
            &[("agents", &self.assignment), ("removed", &self.attack.removals)],
        )?;
        render_attack(out, &self.attack, self.value)
    }
}

impl Render for ToleranceDoc {
    fn render_table(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "worst-case profit {} vs threshold {} with alpha {}: {}",
            format_significant(self.value, 9),
            format_significant(self.threshold, 9),
            self.alpha,
            if self.tolerant { "tolerant" } else { "NOT tolerant" }
        )
    }
}

pub fn render_summary(summary: &[MethodSummary], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{:<8} {:<22} {:>10} {:>10} {:>7}", "dist", "method", "mean", "min", "trials")?;
    for s in summary {
        writeln!(
            out,
            "{:<8} {:<22} {:>10.4} {:>10.4} {:>7}",
            s.dist.tag(),
            s.method.as_str(),
            s.mean_ratio,
            s.min_ratio,
            s.trials
        )?;
    }
    Ok(())
}
