use serde::Serialize;

use crate::graph::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Violated,
    /// The hypotheses of the statement are not met.
    NotApplicable,
    /// The input is beyond what the checker decides exactly.
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Clique `K_tau` with `leaves` pendant vertices on every clique vertex;
    /// `predicted_leaves` is α − σ_v + 1.
    CliqueOfStars {
        tau: usize,
        leaves: usize,
        predicted_leaves: usize,
    },
    StableSet {
        vertices: VertexSet,
    },
    Vertices {
        vertices: VertexSet,
    },
    /// Every vertex lies in a stable set of size p + 1 and a clique of
    /// size q + 1.
    StableCliqueSizes {
        p: usize,
        q: usize,
    },
    Uniformity {
        rank: usize,
    },
}

/// Outcome of one check on one input.
///
/// For `lhs ≤ rhs` statements `slack = rhs − lhs`; for `lhs ≥ rhs`
/// statements `slack = lhs − rhs`. Either way `slack < 0` exactly when the
/// statement fails. Predicate checks put the number of failed conditions in
/// `lhs` against `rhs = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: &'static str,
    pub status: Status,
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
    pub equality: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    fn from_slack(check: &'static str, lhs: i64, rhs: i64, slack: i64) -> Self {
        let status = if slack >= 0 {
            Status::Holds
        } else {
            Status::Violated
        };
        Verdict {
            check,
            status,
            lhs,
            rhs,
            slack,
            equality: slack == 0,
            witness: None,
            note: None,
        }
    }

    /// `lhs ≤ rhs`.
    pub fn at_most(check: &'static str, lhs: i64, rhs: i64) -> Self {
        Self::from_slack(check, lhs, rhs, rhs - lhs)
    }

    /// `lhs ≥ rhs`.
    pub fn at_least(check: &'static str, lhs: i64, rhs: i64) -> Self {
        Self::from_slack(check, lhs, rhs, lhs - rhs)
    }

    /// Holds when `failures` is zero.
    pub fn predicate(check: &'static str, failures: usize) -> Self {
        Self::at_most(check, failures as i64, 0)
    }

    pub fn not_applicable(check: &'static str, note: impl Into<String>) -> Self {
        Verdict {
            check,
            status: Status::NotApplicable,
            lhs: 0,
            rhs: 0,
            slack: 0,
            equality: false,
            witness: None,
            note: Some(note.into()),
        }
    }

    pub fn unchecked(check: &'static str, note: impl Into<String>) -> Self {
        Verdict {
            status: Status::Unchecked,
            ..Self::not_applicable(check, note)
        }
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn violated(&self) -> bool {
        self.status == Status::Violated
    }

    pub fn applicable(&self) -> bool {
        matches!(self.status, Status::Holds | Status::Violated)
    }
}
