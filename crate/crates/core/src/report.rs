//! Identity-check reports with witnesses.

use std::fmt;

use serde::Serialize;

use crate::field::Scalar;

/// One failed instance of an identity: the law's name, the basis indices it
/// was evaluated on, and the nonzero residual (left side minus right side).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: String,
    pub indices: Vec<usize>,
    #[serde(serialize_with = "crate::json::ser_scalars")]
    pub residual: Vec<Scalar>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        let res: Vec<String> = self.residual.iter().map(|s| s.to_string()).collect();
        write!(f, "{} at ({}) residual [{}]", self.law, idx.join(","), res.join(", "))
    }
}

/// Outcome of checking one or more identities on all basis tuples.
///
/// Violations are kept sorted by `(law, indices)` so that reports are
/// independent of how the check was partitioned.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn from_violations(mut violations: Vec<Violation>) -> Self {
        violations.sort_by(|a, b| (&a.law, &a.indices).cmp(&(&b.law, &b.indices)));
        Report { violations }
    }

    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(mut self, other: Report) -> Self {
        self.violations.extend(other.violations);
        Report::from_violations(self.violations)
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn for_law<'a>(&'a self, law: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.law == law)
    }
}

/// Records `residual` under `law` when it is nonzero.
pub(crate) fn record(out: &mut Vec<Violation>, law: &str, indices: &[usize], residual: Vec<Scalar>) {
    if residual.iter().any(|s| !s.is_zero()) {
        out.push(Violation {
            law: law.to_string(),
            indices: indices.to_vec(),
            residual,
        });
    }
}
