//! JSON and CSV wire formats.
//!
//! Scalars are written as plain numbers when real and as `[re, im]` pairs
//! when complex; both forms are accepted on input. Exponents are written as
//! strings (`"3/2"`, `"inf"`) and accepted as strings or numbers.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::basis::{OrthonormalBasis, UNITARY_TOL};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::graph::Graph;
use crate::matrix::DenseMatrix;
use crate::operators::{ScalarSignal, TranslationAnalysis};
use crate::scalar::{Real, C};
use crate::transform::Signal;
use crate::valuespace::{ScalarField, SpaceKind, ValueSpace, DEFAULT_GRID};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExponentRepr {
    Int(i64),
    Float(f64),
    Text(String),
}

impl ExponentRepr {
    pub fn parse(&self) -> Result<Exponent> {
        match self {
            ExponentRepr::Int(i) => Exponent::integer(*i),
            ExponentRepr::Float(x) if x.is_infinite() && *x > 0.0 => Ok(Exponent::INF),
            ExponentRepr::Float(x) => x.to_string().parse(),
            ExponentRepr::Text(s) => s.parse(),
        }
    }
}

fn default_components() -> usize {
    1
}

fn default_grid() -> usize {
    DEFAULT_GRID
}

fn default_field() -> String {
    "real".into()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceDescriptor {
    FiniteDim {
        dim: usize,
        p: ExponentRepr,
        #[serde(default = "default_field")]
        field: String,
    },
    SampledFunction {
        #[serde(default = "default_grid")]
        grid: usize,
        #[serde(default = "default_components")]
        components: usize,
        start: f64,
        end: f64,
        #[serde(default = "default_field")]
        field: String,
    },
}

pub fn parse_field(s: &str) -> Result<ScalarField> {
    match s.to_ascii_lowercase().as_str() {
        "real" | "r" => Ok(ScalarField::Real),
        "complex" | "c" => Ok(ScalarField::Complex),
        other => Err(Error::Parse(format!("unknown scalar field '{other}'"))),
    }
}

impl SpaceDescriptor {
    pub fn to_space<T: Real>(&self) -> Result<ValueSpace<T>> {
        match self {
            SpaceDescriptor::FiniteDim { dim, p, field } => ValueSpace::finite_dim(*dim, p.parse()?, parse_field(field)?),
            SpaceDescriptor::SampledFunction { grid, components, start, end, field } => {
                ValueSpace::sampled_functions(*grid, *components, T::lit(*start), T::lit(*end), parse_field(field)?)
            }
        }
    }

    pub fn from_space<T: Real>(space: &ValueSpace<T>) -> Self {
        let field = space.field().as_str().to_string();
        match space.kind() {
            SpaceKind::FiniteDim { dim, p } => SpaceDescriptor::FiniteDim { dim, p: ExponentRepr::Text(p.to_string()), field },
            SpaceKind::SampledFunction { grid, components, start, end } => SpaceDescriptor::SampledFunction {
                grid,
                components,
                start: to_f64(start),
                end: to_f64(end),
                field,
            },
        }
    }
}

pub fn parse_space<T: Real>(text: &str) -> Result<ValueSpace<T>> {
    serde_json::from_str::<SpaceDescriptor>(text)?.to_space()
}

fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().expect("finite float converts to f64")
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Real(f64),
    Complex([f64; 2]),
}

impl ScalarRepr {
    pub fn to_complex<T: Real>(self) -> C<T> {
        match self {
            ScalarRepr::Real(x) => C::new(T::lit(x), T::zero()),
            ScalarRepr::Complex([a, b]) => C::new(T::lit(a), T::lit(b)),
        }
    }

    pub fn from_complex<T: Real>(z: C<T>, field: ScalarField) -> Self {
        match field {
            ScalarField::Real => ScalarRepr::Real(to_f64(z.re)),
            ScalarField::Complex => ScalarRepr::Complex([to_f64(z.re), to_f64(z.im)]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignalRepr {
    pub n: usize,
    pub space: SpaceDescriptor,
    pub values: Vec<Vec<ScalarRepr>>,
}

impl SignalRepr {
    pub fn from_signal<T: Real>(f: &Signal<T>) -> Self {
        let field = f.space().field();
        Self {
            n: f.len(),
            space: SpaceDescriptor::from_space(f.space()),
            values: (0..f.len()).map(|n| f.value(n).iter().map(|&z| ScalarRepr::from_complex(z, field)).collect()).collect(),
        }
    }

    pub fn to_signal<T: Real>(&self) -> Result<Signal<T>> {
        if self.values.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: self.values.len() });
        }
        let space = self.space.to_space()?;
        Signal::from_rows(space, self.values.iter().map(|row| row.iter().map(|s| s.to_complex()).collect()).collect())
    }
}

pub fn signal_to_json<T: Real>(f: &Signal<T>) -> Value {
    serde_json::to_value(SignalRepr::from_signal(f)).expect("signal serializes")
}

pub fn parse_signal<T: Real>(text: &str) -> Result<Signal<T>> {
    serde_json::from_str::<SignalRepr>(text)?.to_signal()
}

/// A scalar signal is either a bare JSON array of scalars or a signal over a
/// one-dimensional space.
pub fn parse_scalar_signal<T: Real>(text: &str) -> Result<ScalarSignal<T>> {
    let v: Value = serde_json::from_str(text)?;
    if v.is_array() {
        let xs: Vec<ScalarRepr> = serde_json::from_value(v)?;
        return Ok(ScalarSignal::new(xs.into_iter().map(ScalarRepr::to_complex).collect()));
    }
    let f: Signal<T> = serde_json::from_value::<SignalRepr>(v)?.to_signal()?;
    if f.space().coord_len() != 1 {
        return Err(Error::Parse("scalar signal must take one-dimensional values".into()));
    }
    Ok(ScalarSignal::from_signal(&f))
}

pub fn scalar_signal_to_json<T: Real>(a: &ScalarSignal<T>) -> Value {
    let field = a.field();
    serde_json::to_value(a.values().iter().map(|&z| ScalarRepr::from_complex(z, field)).collect::<Vec<_>>()).expect("scalars serialize")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisRepr {
    pub n: usize,
    #[serde(default = "default_field")]
    pub field: String,
    /// `columns[k][n] = u_k(n)`.
    pub columns: Vec<Vec<ScalarRepr>>,
}

impl BasisRepr {
    pub fn from_basis<T: Real>(b: &OrthonormalBasis<T>) -> Self {
        let field = b.field();
        Self {
            n: b.n(),
            field: field.as_str().into(),
            columns: (0..b.n()).map(|k| b.column(k).into_iter().map(|z| ScalarRepr::from_complex(z, field)).collect()).collect(),
        }
    }

    pub fn to_basis<T: Real>(&self) -> Result<OrthonormalBasis<T>> {
        if self.columns.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: self.columns.len() });
        }
        let cols: Vec<Vec<C<T>>> = self.columns.iter().map(|c| c.iter().map(|s| s.to_complex()).collect()).collect();
        let u = DenseMatrix::from_rows(cols)?.transpose();
        OrthonormalBasis::from_matrix(u, T::tol(UNITARY_TOL))
    }
}

pub fn parse_basis<T: Real>(text: &str) -> Result<OrthonormalBasis<T>> {
    serde_json::from_str::<BasisRepr>(text)?.to_basis()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphRepr {
    pub n: usize,
    #[serde(default)]
    pub directed: bool,
    pub edges: Vec<(usize, usize)>,
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let g: GraphRepr = serde_json::from_str(text)?;
    Graph::new(g.n, g.edges, g.directed)
}

pub fn graph_to_json(g: &Graph) -> Value {
    let edges: Vec<(usize, usize)> = if g.is_directed() { g.edges().collect() } else { g.edges().filter(|(i, j)| i < j).collect() };
    json!({ "n": g.vertex_count(), "directed": g.is_directed(), "edges": edges })
}

fn format_scalar<T: Real>(z: C<T>, complex: bool) -> String {
    if !complex {
        return format!("{}", to_f64(z.re));
    }
    let (a, b) = (to_f64(z.re), to_f64(z.im));
    if b.is_sign_negative() {
        format!("{a}-{}j", -b)
    } else {
        format!("{a}+{b}j")
    }
}

/// Comma-separated rows; complex matrices use `re+imj` entries.
pub fn matrix_to_csv<T: Real>(m: &DenseMatrix<T>) -> String {
    let complex = !m.is_real();
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|&z| format_scalar(z, complex)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn parse_csv_scalar(s: &str) -> Result<(f64, f64)> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad matrix entry '{s}'"));
    let Some(body) = s.strip_suffix('j').or_else(|| s.strip_suffix('i')) else {
        return Ok((s.parse().map_err(|_| bad())?, 0.0));
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    match split {
        Some(i) => {
            let im = if &body[i..] == "+" || &body[i..] == "-" { format!("{}1", &body[i..]) } else { body[i..].to_string() };
            Ok((body[..i].parse().map_err(|_| bad())?, im.parse().map_err(|_| bad())?))
        }
        None => Ok((0.0, body.parse().map_err(|_| bad())?)),
    }
}

/// Inverse of [`matrix_to_csv`]; blank lines and `#` comments are skipped.
pub fn parse_matrix_csv<T: Real>(text: &str) -> Result<DenseMatrix<T>> {
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split(',').map(|e| parse_csv_scalar(e).map(|(a, b)| C::new(T::lit(a), T::lit(b)))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    DenseMatrix::from_rows(rows)
}

/// Reads a basis from JSON (`{"n", "columns"}`) or from a CSV matrix `U`.
pub fn parse_basis_any<T: Real>(text: &str) -> Result<OrthonormalBasis<T>> {
    if text.trim_start().starts_with('{') {
        parse_basis(text)
    } else {
        OrthonormalBasis::from_matrix(parse_matrix_csv(text)?, T::tol(UNITARY_TOL))
    }
}

pub fn analysis_to_json<T: Real>(a: &TranslationAnalysis<T>) -> Value {
    let num = |x: Option<T>| x.map(|v| if v.is_finite() { json!(to_f64(v)) } else { json!("inf") });
    json!({
        "m": a.m,
        "K0": a.k0,
        "invertible": a.invertible,
        "induced_norm": num(a.induced_norm),
        "induced_inverse_norm": num(a.induced_inverse_norm),
        "isometry_condition": a.isometry_condition,
    })
}

/// Column layout of the coherence table.
pub const COHERENCE_EXPONENTS: [&str; 7] = ["1", "1.5", "2", "3", "4", "20", "inf"];

/// `basis,p=…` header followed by one row per `(name, values)` rounded to
/// four decimals.
pub fn coherence_table_csv<T: Real>(exponents: &[Exponent], rows: &[(String, Vec<T>)]) -> String {
    let mut out = String::from("basis");
    for p in exponents {
        out.push_str(&format!(",p={p}"));
    }
    out.push('\n');
    for (name, vals) in rows {
        out.push_str(name);
        for v in vals {
            out.push_str(&format!(",{:.4}", to_f64(*v)));
        }
        out.push('\n');
    }
    out
}
