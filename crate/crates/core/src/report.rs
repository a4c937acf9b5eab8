//! Structured pass/fail records for identity checks.

use std::fmt;

use crate::linalg::Vector;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Checks stop scanning after this many counterexamples.
pub const MAX_WITNESSES: usize = 10;

#[derive(Clone, Debug)]
pub enum Residual<S> {
    Vector(Vector<S>),
    Polynomials(Vec<Polynomial<S>>),
    Message(String),
}

impl<S: Scalar> PartialEq for Residual<S> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Residual::Vector(a), Residual::Vector(b)) => a == b,
            (Residual::Polynomials(a), Residual::Polynomials(b)) => a == b,
            (Residual::Message(a), Residual::Message(b)) => a == b,
            _ => false,
        }
    }
}

impl<S: Scalar> Residual<S> {
    /// Coordinates rendered as exact strings (`p/q` for scalars).
    pub fn rendered(&self) -> Vec<String> {
        match self {
            Residual::Vector(v) => v.entries().iter().map(|e| e.to_fraction_string()).collect(),
            Residual::Polynomials(ps) => ps.iter().map(|p| p.to_string()).collect(),
            Residual::Message(m) => vec![m.clone()],
        }
    }
}

/// A counterexample: the basis indices (or other coordinates, such as
/// `(n, i)` for power checks) and the nonzero residual found there.
#[derive(Clone, Debug)]
pub struct Witness<S> {
    pub location: Vec<usize>,
    /// The sub-identity this witness came from, for aggregate reports.
    pub context: Option<String>,
    pub residual: Residual<S>,
}

impl<S: Scalar> PartialEq for Witness<S> {
    fn eq(&self, other: &Self) -> bool {
        self.location == other.location
            && self.context == other.context
            && self.residual == other.residual
    }
}

impl<S> Witness<S> {
    pub fn at(location: Vec<usize>, residual: Residual<S>) -> Self {
        Self {
            location,
            context: None,
            residual,
        }
    }
}

/// Outcome of one identity check. `passed` holds exactly when `witnesses`
/// is empty.
#[derive(Clone, Debug)]
pub struct CheckReport<S> {
    pub identity: String,
    pub passed: bool,
    pub witnesses: Vec<Witness<S>>,
    /// Sub-results of an aggregate check.
    pub parts: Vec<CheckReport<S>>,
    /// Free-form exact values attached by witness scripts.
    pub details: Vec<(String, String)>,
}

impl<S: Scalar> PartialEq for CheckReport<S> {
    fn eq(&self, other: &Self) -> bool {
        self.identity == other.identity
            && self.passed == other.passed
            && self.witnesses == other.witnesses
            && self.parts == other.parts
            && self.details == other.details
    }
}

impl<S: Scalar> CheckReport<S> {
    pub fn from_witnesses(identity: impl Into<String>, witnesses: Vec<Witness<S>>) -> Self {
        Self {
            identity: identity.into(),
            passed: witnesses.is_empty(),
            witnesses,
            parts: Vec::new(),
            details: Vec::new(),
        }
    }

    pub fn pass(identity: impl Into<String>) -> Self {
        Self::from_witnesses(identity, Vec::new())
    }

    pub fn fail(identity: impl Into<String>, message: impl Into<String>) -> Self {
        Self::from_witnesses(
            identity,
            vec![Witness::at(Vec::new(), Residual::Message(message.into()))],
        )
    }

    /// Conjunction of `parts`; failing parts contribute their witnesses,
    /// tagged with the part's identity.
    pub fn aggregate(identity: impl Into<String>, parts: Vec<CheckReport<S>>) -> Self {
        let witnesses: Vec<Witness<S>> = parts
            .iter()
            .flat_map(|p| {
                p.witnesses.iter().map(|w| Witness {
                    context: Some(w.context.clone().unwrap_or_else(|| p.identity.clone())),
                    ..w.clone()
                })
            })
            .take(MAX_WITNESSES)
            .collect();
        Self {
            identity: identity.into(),
            passed: witnesses.is_empty(),
            witnesses,
            parts,
            details: Vec::new(),
        }
    }

    pub fn with_detail(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.details.push((key.into(), value.into()));
        self
    }

    /// The sub-report with the given identity, searching recursively.
    pub fn part(&self, identity: &str) -> Option<&CheckReport<S>> {
        self.parts.iter().find_map(|p| {
            if p.identity == identity {
                Some(p)
            } else {
                p.part(identity)
            }
        })
    }

    /// Identities of the failing leaf checks.
    pub fn failing_leaves(&self) -> Vec<&str> {
        if self.parts.is_empty() {
            if self.passed {
                Vec::new()
            } else {
                vec![self.identity.as_str()]
            }
        } else {
            self.parts.iter().flat_map(|p| p.failing_leaves()).collect()
        }
    }
}

impl<S: Scalar> CheckReport<S> {
    /// `{identity, passed, witnesses[{location, context, residual[]}],
    /// details{}, parts[]}` with exact `p/q` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let witnesses: Vec<serde_json::Value> = self
            .witnesses
            .iter()
            .map(|w| {
                serde_json::json!({
                    "location": w.location,
                    "context": w.context,
                    "residual": w.residual.rendered(),
                })
            })
            .collect();
        let details: serde_json::Map<String, serde_json::Value> = self
            .details
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        serde_json::json!({
            "identity": self.identity,
            "passed": self.passed,
            "witnesses": witnesses,
            "details": details,
            "parts": self.parts.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        })
    }
}

impl<S: Scalar> fmt::Display for CheckReport<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {}", self.identity)?;
        for (k, v) in &self.details {
            writeln!(f, "    {k} = {v}")?;
        }
        for part in &self.parts {
            for line in part.to_string().lines() {
                writeln!(f, "  {line}")?;
            }
        }
        if self.parts.is_empty() {
            for w in &self.witnesses {
                let at: Vec<String> = w.location.iter().map(|i| i.to_string()).collect();
                writeln!(
                    f,
                    "    witness ({}): [{}]",
                    at.join(", "),
                    w.residual.rendered().join(", ")
                )?;
            }
        }
        Ok(())
    }
}

/// Scans all `dim³` basis triples in lexicographic order, recording the
/// nonzero residuals, up to [`MAX_WITNESSES`].
pub(crate) fn scan_triples<S: Scalar>(
    identity: &str,
    dim: usize,
    mut residual: impl FnMut(usize, usize, usize) -> Vector<S>,
) -> CheckReport<S> {
    let mut witnesses = Vec::new();
    'outer: for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let r = residual(i, j, k);
                if !r.is_zero() {
                    witnesses.push(Witness::at(vec![i, j, k], Residual::Vector(r)));
                    if witnesses.len() == MAX_WITNESSES {
                        break 'outer;
                    }
                }
            }
        }
    }
    CheckReport::from_witnesses(identity, witnesses)
}

/// Pairs counterpart of [`scan_triples`].
pub(crate) fn scan_pairs<S: Scalar>(
    identity: &str,
    dim: usize,
    mut residual: impl FnMut(usize, usize) -> Vector<S>,
) -> CheckReport<S> {
    let mut witnesses = Vec::new();
    'outer: for i in 0..dim {
        for j in 0..dim {
            let r = residual(i, j);
            if !r.is_zero() {
                witnesses.push(Witness::at(vec![i, j], Residual::Vector(r)));
                if witnesses.len() == MAX_WITNESSES {
                    break 'outer;
                }
            }
        }
    }
    CheckReport::from_witnesses(identity, witnesses)
}

/// Single-index counterpart of [`scan_triples`].
pub(crate) fn scan_indices<S: Scalar>(
    identity: &str,
    dim: usize,
    mut residual: impl FnMut(usize) -> Vector<S>,
) -> CheckReport<S> {
    let witnesses = (0..dim)
        .filter_map(|j| {
            let r = residual(j);
            (!r.is_zero()).then(|| Witness::at(vec![j], Residual::Vector(r)))
        })
        .take(MAX_WITNESSES)
        .collect();
    CheckReport::from_witnesses(identity, witnesses)
}
