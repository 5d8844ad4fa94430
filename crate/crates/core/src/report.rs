//! Pass/fail reports shared by the generator and table verifiers.

use std::fmt;

use serde::Serialize;

/// One axiom or shape check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Antisymmetry,
    SingleGenerator,
    GramConsistency,
    CliffordRelations,
    Skewness,
    SignedPermutation,
    FormSignature,
    Jacobi,
}

impl CheckKind {
    pub fn label(self) -> &'static str {
        match self {
            CheckKind::Antisymmetry => "antisymmetry",
            CheckKind::SingleGenerator => "single generator per cell",
            CheckKind::GramConsistency => "gram consistency",
            CheckKind::CliffordRelations => "clifford relations",
            CheckKind::Skewness => "skewness",
            CheckKind::SignedPermutation => "signed permutation",
            CheckKind::FormSignature => "form signature",
            CheckKind::Jacobi => "jacobi",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Where a failure sits. Indices are 1-based, as printed in tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "at", rename_all = "snake_case")]
pub enum Location {
    /// Table cell `[v_row, v_col]`.
    Cell {
        row: usize,
        col: usize,
    },
    /// Row `v_row` of the table has no entry in `z_k`, or more than one.
    TableRow {
        row: usize,
        k: usize,
    },
    /// Column `v_col` of the table has no entry in `z_k`, or more than one.
    TableColumn {
        col: usize,
        k: usize,
    },
    /// Entry `(row, col)` of an operator built from generators `i` and `j`.
    Operator {
        i: usize,
        j: usize,
        row: usize,
        col: usize,
    },
    /// Basis vector `v_a`.
    Basis {
        a: usize,
    },
    Whole,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Cell { row, col } => write!(f, "cell [v{row}, v{col}]"),
            Location::TableRow { row, k } => write!(f, "row v{row}, z{k}"),
            Location::TableColumn { col, k } => write!(f, "column v{col}, z{k}"),
            Location::Operator { i, j, row, col } if i == j => {
                write!(f, "J{i} entry ({row},{col})")
            }
            Location::Operator { i, j, row, col } => {
                write!(f, "J{i}J{j}+J{j}J{i} entry ({row},{col})")
            }
            Location::Basis { a } => write!(f, "v{a}"),
            Location::Whole => f.write_str("whole"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub check: CheckKind,
    pub location: Location,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.check, self.location, self.message)
    }
}

/// Outcome of a fixed list of checks plus the findings behind each failure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<(CheckKind, bool)>,
    pub findings: Vec<Finding>,
    /// Checks that hold for structural reasons and are not computed.
    pub notes: Vec<String>,
}

impl Report {
    pub(crate) fn record(&mut self, check: CheckKind, findings: Vec<Finding>) {
        self.checks.push((check, findings.is_empty()));
        self.findings.extend(findings);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn passed(&self, check: CheckKind) -> Option<bool> {
        self.checks
            .iter()
            .find(|(c, _)| *c == check)
            .map(|&(_, ok)| ok)
    }

    pub fn failed_checks(&self) -> Vec<CheckKind> {
        self.checks
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|&(c, _)| c)
            .collect()
    }

    pub fn findings_for(&self, check: CheckKind) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(move |f| f.check == check)
    }
}

pub(crate) fn finding(check: CheckKind, location: Location, message: impl Into<String>) -> Finding {
    Finding {
        check,
        location,
        message: message.into(),
    }
}
