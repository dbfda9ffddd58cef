use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::{Beta, Distribution};

use crate::error::{Error, Result};
use crate::types::TaskProfile;

/// Distribution of task values in generated instances.
///
/// Exponential draws use the inverse CDF `-ln(1 - u) / rate` on one uniform
/// draw. Beta draws use `rand_distr::Beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistributionSpec {
    Uniform01,
    Exponential { rate: f64 },
    Beta { a: f64, b: f64 },
}

impl DistributionSpec {
    pub const DEFAULT_RATE: f64 = 2.0;
    pub const DEFAULT_BETA: (f64, f64) = (6.0, 2.0);

    pub fn exponential() -> Self {
        DistributionSpec::Exponential {
            rate: Self::DEFAULT_RATE,
        }
    }

    pub fn beta() -> Self {
        let (a, b) = Self::DEFAULT_BETA;
        DistributionSpec::Beta { a, b }
    }

    /// The three default distributions, in reporting order.
    pub fn all() -> [DistributionSpec; 3] {
        [DistributionSpec::Uniform01, Self::exponential(), Self::beta()]
    }

    /// Short tag used in CSV output and on the command line.
    pub fn tag(&self) -> &'static str {
        match self {
            DistributionSpec::Uniform01 => "uniform",
            DistributionSpec::Exponential { .. } => "exp",
            DistributionSpec::Beta { .. } => "beta",
        }
    }

    /// One strictly positive draw.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        loop {
            let v = match *self {
                DistributionSpec::Uniform01 => rng.random::<f64>(),
                DistributionSpec::Exponential { rate } => -(1.0 - rng.random::<f64>()).ln() / rate,
                DistributionSpec::Beta { a, b } => Beta::new(a, b)
                    .expect("beta parameters are validated at construction")
                    .sample(rng),
            };
            if v > 0.0 && v.is_finite() {
                return v;
            }
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            DistributionSpec::Uniform01 => true,
            DistributionSpec::Exponential { rate } => rate > 0.0 && rate.is_finite(),
            DistributionSpec::Beta { a, b } => Beta::new(a, b).is_ok(),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Schema {
                field: "dist".into(),
                message: format!("invalid distribution parameters {self:?}"),
            })
        }
    }

    pub fn exponential_with(rate: f64) -> Result<Self> {
        DistributionSpec::Exponential { rate }.validate()
    }

    pub fn beta_with(a: f64, b: f64) -> Result<Self> {
        DistributionSpec::Beta { a, b }.validate()
    }
}

impl fmt::Display for DistributionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for DistributionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" | "uniform01" => Ok(DistributionSpec::Uniform01),
            "exp" | "exponential" => Ok(Self::exponential()),
            "beta" => Ok(Self::beta()),
            _ => Err(Error::Schema {
                field: "dist".into(),
                message: format!("unknown distribution `{s}` (expected uniform, exp or beta)"),
            }),
        }
    }
}

/// Draws `k` task values and sorts them non-increasing.
pub fn sample_tasks<R: Rng + ?Sized>(dist: DistributionSpec, k: usize, rng: &mut R) -> Result<TaskProfile> {
    let values: Vec<f64> = (0..k).map(|_| dist.sample(rng)).collect();
    TaskProfile::new(values)
}
