//! Check records and the line-oriented report format.

use serde::{Deserialize, Serialize};
use std::fmt;

/// One named numeric check. `residual` is the worst absolute defect the
/// check observed; a failed check still reports what it measured.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub params: String,
    pub pass: bool,
    pub residual: f64,
}

impl Check {
    pub fn new(name: &str, params: impl Into<String>, pass: bool, residual: f64) -> Check {
        Check {
            name: name.to_string(),
            params: params.into(),
            pass,
            residual,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} {} {} residual={:e}",
            self.name,
            self.params,
            if self.pass { "PASS" } else { "FAIL" },
            self.residual
        )
    }
}

/// Aggregate of checks, serializable as the machine-readable schema.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(checks: Vec<Check>) -> Report {
        Report { checks }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn merge(mut self, other: Report) -> Report {
        self.checks.extend(other.checks);
        self
    }

    pub fn worst_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Map `items` through `f`, in parallel when the feature is on. Output
/// order follows input order either way.
pub fn batch<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}
