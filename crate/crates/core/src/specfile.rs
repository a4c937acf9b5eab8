//! JSON files describing algebras and linear maps.
//!
//! An algebra file looks like
//!
//! ```json
//! {
//!   "format": 1,
//!   "kind": "hom-poisson",
//!   "dim": 3,
//!   "basis": ["X", "Y", "Z"],
//!   "commutative": true,
//!   "mu": [[0, 1, 2, "1/2"], [1, 0, 2, "1/2"]],
//!   "bracket": [[0, 1, 2, "1"], [1, 0, 2, "-1"]],
//!   "alpha": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
//! }
//! ```
//!
//! Entries `[i, j, k, c]` mean `e_i · e_j` has coefficient `c` on `e_k`
//! (0-based). Omitted entries are zero; `bracket` defaults to zero, `alpha`
//! to the identity, `basis` to `e1..en`, `kind` to `hom-poisson` and
//! `commutative` to `false`. Coefficients are `p/q` strings or JSON
//! integers. A map file holds `format`, `dim` and a row-major `matrix`.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use crate::algebra::{default_basis, HomAlgebra, HomPoissonAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Trilinear};
use crate::scalar::{parse_scalar, Scalar};

pub const FORMAT_VERSION: u32 = 1;

/// The contents of an algebra file.
#[derive(Clone, Debug)]
pub enum SpecObject<S> {
    HomPoisson(HomPoissonAlgebra<S>),
    HomAlgebra(HomAlgebra<S>),
}

impl<S: Scalar> PartialEq for SpecObject<S> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (SpecObject::HomPoisson(a), SpecObject::HomPoisson(b)) => a == b,
            (SpecObject::HomAlgebra(a), SpecObject::HomAlgebra(b)) => a == b,
            _ => false,
        }
    }
}

impl<S: Scalar> SpecObject<S> {
    pub fn dim(&self) -> usize {
        match self {
            SpecObject::HomPoisson(p) => p.dim(),
            SpecObject::HomAlgebra(a) => a.dim(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    format: u32,
    kind: Option<String>,
    dim: usize,
    basis: Option<Vec<String>>,
    commutative: Option<bool>,
    mu: Vec<(usize, usize, usize, Value)>,
    bracket: Option<Vec<(usize, usize, usize, Value)>>,
    alpha: Option<Vec<Vec<Value>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    format: u32,
    dim: usize,
    matrix: Vec<Vec<Value>>,
}

fn spec_error(location: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::SpecFile {
        location: location.into(),
        reason: reason.into(),
    }
}

fn syntax_error(e: serde_json::Error) -> Error {
    spec_error(
        format!("line {}, column {}", e.line(), e.column()),
        e.to_string(),
    )
}

fn scalar<S: Scalar>(value: &Value, location: &str) -> Result<S> {
    let parsed = match value {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) => n.as_i64().map(S::from_int),
        _ => None,
    };
    parsed.ok_or_else(|| {
        spec_error(
            location,
            format!("`{value}` is not an exact rational (use \"p/q\")"),
        )
    })
}

fn check_format(format: u32) -> Result<()> {
    if format == FORMAT_VERSION {
        Ok(())
    } else {
        Err(spec_error(
            "format",
            format!("unsupported version {format}"),
        ))
    }
}

fn tensor<S: Scalar>(
    dim: usize,
    raw: &[(usize, usize, usize, Value)],
    field: &str,
) -> Result<Trilinear<S>> {
    let mut t = Trilinear::zero(dim);
    for (n, (i, j, k, c)) in raw.iter().enumerate() {
        if let Some(bad) = [i, j, k].into_iter().find(|&&x| x >= dim) {
            return Err(spec_error(
                format!("{field}[{n}]"),
                format!("index {bad} out of range for dimension {dim}"),
            ));
        }
        t.add_to(*i, *j, *k, scalar(c, &format!("{field}[{n}][3]"))?);
    }
    Ok(t)
}

fn matrix<S: Scalar>(dim: usize, rows: &[Vec<Value>], field: &str) -> Result<LinearMap<S>> {
    if rows.len() != dim {
        return Err(spec_error(
            field,
            format!("expected {dim} rows, found {}", rows.len()),
        ));
    }
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            if row.len() != dim {
                return Err(spec_error(
                    format!("{field}[{r}]"),
                    format!("expected {dim} entries, found {}", row.len()),
                ));
            }
            row.iter()
                .enumerate()
                .map(|(c, v)| scalar(v, &format!("{field}[{r}][{c}]")))
                .collect()
        })
        .collect::<Result<Vec<Vec<S>>>>()?;
    LinearMap::from_rows(parsed)
}

pub fn parse_spec_str<S: Scalar>(text: &str) -> Result<SpecObject<S>> {
    let raw: RawSpec = serde_json::from_str(text).map_err(syntax_error)?;
    check_format(raw.format)?;
    if raw.dim == 0 {
        return Err(spec_error("dim", "dimension must be positive"));
    }
    let basis = raw.basis.unwrap_or_else(|| default_basis(raw.dim));
    if basis.len() != raw.dim {
        return Err(spec_error(
            "basis",
            format!("expected {} names, found {}", raw.dim, basis.len()),
        ));
    }
    let mu = tensor(raw.dim, &raw.mu, "mu")?;
    let alpha = match &raw.alpha {
        Some(rows) => matrix(raw.dim, rows, "alpha")?,
        None => LinearMap::identity(raw.dim),
    };
    let in_basis = |e: Error| match e {
        Error::InvalidBasis(reason) => spec_error("basis", reason),
        other => other,
    };
    match raw.kind.as_deref().unwrap_or("hom-poisson") {
        "hom-poisson" => {
            let bracket = match &raw.bracket {
                Some(entries) => tensor(raw.dim, entries, "bracket")?,
                None => Trilinear::zero(raw.dim),
            };
            let commutative = raw.commutative.unwrap_or(false);
            HomPoissonAlgebra::new(basis, bracket, mu, alpha, commutative)
                .map(SpecObject::HomPoisson)
                .map_err(in_basis)
        }
        "hom-algebra" => {
            if raw.bracket.is_some() || raw.commutative.is_some() {
                return Err(spec_error(
                    "kind",
                    "hom-algebra files have no bracket or commutative flag",
                ));
            }
            HomAlgebra::new(basis, mu, alpha)
                .map(SpecObject::HomAlgebra)
                .map_err(in_basis)
        }
        other => Err(spec_error("kind", format!("unknown kind `{other}`"))),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })
}

pub fn parse_spec<S: Scalar>(path: &Path) -> Result<SpecObject<S>> {
    parse_spec_str(&read(path)?)
}

fn quoted(s: &str) -> String {
    Value::String(s.to_string()).to_string()
}

fn write_entries<S: Scalar>(out: &mut String, field: &str, t: &Trilinear<S>) {
    let _ = write!(out, "  \"{field}\": [");
    let entries = t.entries();
    for (n, (i, j, k, c)) in entries.iter().enumerate() {
        let sep = if n + 1 == entries.len() { "\n  " } else { "," };
        let _ = write!(
            out,
            "\n    [{i}, {j}, {k}, {}]{sep}",
            quoted(&c.to_fraction_string())
        );
    }
    out.push_str("],\n");
}

fn write_matrix<S: Scalar>(out: &mut String, field: &str, m: &LinearMap<S>) {
    let _ = write!(out, "  \"{field}\": [");
    let dim = m.dim();
    for (r, row) in m.rows().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .map(|c| quoted(&c.to_fraction_string()))
            .collect();
        let sep = if r + 1 == dim { "\n  " } else { "," };
        let _ = write!(out, "\n    [{}]{sep}", cells.join(", "));
    }
    out.push_str("]\n");
}

fn header(out: &mut String, kind: &str, basis: &[String]) {
    let names: Vec<String> = basis.iter().map(|b| quoted(b)).collect();
    let _ = write!(
        out,
        "{{\n  \"format\": {FORMAT_VERSION},\n  \"kind\": \"{kind}\",\n  \"dim\": {},\n  \"basis\": [{}],\n",
        basis.len(),
        names.join(", ")
    );
}

pub fn emit_spec_string<S: Scalar>(object: &SpecObject<S>) -> String {
    let mut out = String::new();
    match object {
        SpecObject::HomPoisson(p) => {
            header(&mut out, "hom-poisson", p.basis());
            let _ = writeln!(out, "  \"commutative\": {},", p.is_commutative_claimed());
            write_entries(&mut out, "mu", p.mu());
            write_entries(&mut out, "bracket", p.bracket());
            write_matrix(&mut out, "alpha", p.alpha());
        }
        SpecObject::HomAlgebra(a) => {
            header(&mut out, "hom-algebra", a.basis());
            write_entries(&mut out, "mu", a.mu());
            write_matrix(&mut out, "alpha", a.alpha());
        }
    }
    out.push_str("}\n");
    out
}

pub fn emit_spec<S: Scalar>(object: &SpecObject<S>, path: &Path) -> Result<()> {
    write(path, &emit_spec_string(object))
}

pub fn parse_map_str<S: Scalar>(text: &str) -> Result<LinearMap<S>> {
    let raw: RawMap = serde_json::from_str(text).map_err(syntax_error)?;
    check_format(raw.format)?;
    matrix(raw.dim, &raw.matrix, "matrix")
}

pub fn parse_map<S: Scalar>(path: &Path) -> Result<LinearMap<S>> {
    parse_map_str(&read(path)?)
}

pub fn emit_map_string<S: Scalar>(m: &LinearMap<S>) -> String {
    let mut out = format!(
        "{{\n  \"format\": {FORMAT_VERSION},\n  \"dim\": {},\n",
        m.dim()
    );
    write_matrix(&mut out, "matrix", m);
    out.push_str("}\n");
    out
}

pub fn emit_map<S: Scalar>(m: &LinearMap<S>, path: &Path) -> Result<()> {
    write(path, &emit_map_string(m))
}
