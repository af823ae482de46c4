//! File formats and deterministic JSON output.
//!
//! Inputs are parsed with serde from the documented JSON shapes (complex
//! numbers as [re, im], matrices row-major). Outputs go through a small
//! canonical JSON value: object keys are emitted in sorted order and floats
//! are always printed with 17 significant digits, so identical data renders
//! byte-identically.

use crate::bracket::{BracketValue, CyclicityReport};
use crate::error::{Error, Result};
use crate::fourier::{FourierCoefficients, GroupFunction, PositiveTypeReport};
use crate::frame::{FrameReport, GramianBlocks, IsotypicalCheck, TwoTransitiveReport};
use crate::group::FiniteGroup;
use crate::linalg::{c, C64, CMat, CVec};
use crate::multigen::{GeneralComponent, MultiGenSpec, RieszReport};
use crate::repr::{IrrepTable, RepReport, TableReport, UnitaryRep};
use crate::synth::{FrameMatrix, KFrameVerdict};
use crate::zak::{IrreducibleComponent, MembershipReport, RangeFunction, ZakCoefficients};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

// ---- canonical JSON output ----

/// JSON value with deterministic rendering.
#[derive(Clone, Debug)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(String, Json)>),
}

impl Json {
    pub fn obj(pairs: Vec<(&str, Json)>) -> Json {
        Json::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }

    pub fn string(s: impl Into<String>) -> Json {
        Json::Str(s.into())
    }

    pub fn int(n: usize) -> Json {
        Json::Int(n as i64)
    }

    pub fn complex(z: C64) -> Json {
        Json::Array(vec![Json::Float(z.re), Json::Float(z.im)])
    }

    pub fn floats(v: &[f64]) -> Json {
        Json::Array(v.iter().map(|&x| Json::Float(x)).collect())
    }

    pub fn cvec(v: &CVec) -> Json {
        Json::Array(v.iter().map(|&z| Json::complex(z)).collect())
    }

    /// Row-major matrix of [re, im] pairs.
    pub fn cmat(m: &CMat) -> Json {
        Json::Array(
            (0..m.nrows())
                .map(|i| Json::Array((0..m.ncols()).map(|j| Json::complex(m[(i, j)])).collect()))
                .collect(),
        )
    }

    pub fn bounds(b: Option<(f64, f64)>) -> Json {
        match b {
            Some((lo, hi)) => Json::Array(vec![Json::Float(lo), Json::Float(hi)]),
            None => Json::Null,
        }
    }

    pub fn opt_bool(b: Option<bool>) -> Json {
        b.map_or(Json::Null, Json::Bool)
    }

    pub fn opt_string(s: &Option<String>) -> Json {
        s.as_ref().map_or(Json::Null, |s| Json::string(s.clone()))
    }

    fn write_escaped(out: &mut String, s: &str) {
        out.push('"');
        for ch in s.chars() {
            match ch {
                '"' => out.push_str("\\\""),
                '\\' => out.push_str("\\\\"),
                '\n' => out.push_str("\\n"),
                '\r' => out.push_str("\\r"),
                '\t' => out.push_str("\\t"),
                ch if (ch as u32) < 0x20 => {
                    let _ = write!(out, "\\u{:04x}", ch as u32);
                }
                ch => out.push(ch),
            }
        }
        out.push('"');
    }

    fn write_float(out: &mut String, x: f64) {
        if !x.is_finite() {
            out.push_str("null");
            return;
        }
        let x = if x == 0.0 { 0.0 } else { x }; // collapse -0.0
        let _ = write!(out, "{x:.16e}");
    }

    fn write_compact(&self, out: &mut String) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(n) => {
                let _ = write!(out, "{n}");
            }
            Json::Float(x) => Self::write_float(out, *x),
            Json::Str(s) => Self::write_escaped(out, s),
            Json::Array(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write_compact(out);
                }
                out.push(']');
            }
            Json::Object(pairs) => {
                let mut sorted: Vec<&(String, Json)> = pairs.iter().collect();
                sorted.sort_by(|a, b| a.0.cmp(&b.0));
                out.push('{');
                for (i, (k, v)) in sorted.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    Self::write_escaped(out, k);
                    out.push(':');
                    v.write_compact(out);
                }
                out.push('}');
            }
        }
    }

    fn write_pretty(&self, out: &mut String, depth: usize) {
        let pad = |out: &mut String, d: usize| out.push_str(&"  ".repeat(d));
        match self {
            Json::Array(items) if !items.is_empty() => {
                out.push_str("[\n");
                for (i, item) in items.iter().enumerate() {
                    pad(out, depth + 1);
                    item.write_pretty(out, depth + 1);
                    if i + 1 < items.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                pad(out, depth);
                out.push(']');
            }
            Json::Object(pairs) if !pairs.is_empty() => {
                let mut sorted: Vec<&(String, Json)> = pairs.iter().collect();
                sorted.sort_by(|a, b| a.0.cmp(&b.0));
                out.push_str("{\n");
                for (i, (k, v)) in sorted.iter().enumerate() {
                    pad(out, depth + 1);
                    Self::write_escaped(out, k);
                    out.push_str(": ");
                    v.write_pretty(out, depth + 1);
                    if i + 1 < sorted.len() {
                        out.push(',');
                    }
                    out.push('\n');
                }
                pad(out, depth);
                out.push('}');
            }
            other => other.write_compact(out),
        }
    }

    pub fn to_compact(&self) -> String {
        let mut out = String::new();
        self.write_compact(&mut out);
        out
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        self.write_pretty(&mut out, 0);
        out.push('\n');
        out
    }
}

fn named<'a>(
    table: &'a IrrepTable,
    values: impl Iterator<Item = Json> + 'a,
) -> Json {
    Json::Object(
        table
            .names()
            .iter()
            .zip(values)
            .map(|(n, v)| (n.clone(), v))
            .collect(),
    )
}

// ---- input files ----

#[derive(Debug, Deserialize)]
pub struct GroupFile {
    pub order: usize,
    pub mult_table: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
pub struct SubgroupFile {
    pub member_indices: Vec<usize>,
}

#[derive(Debug, Deserialize)]
pub struct RepFile {
    pub dim: usize,
    pub matrices: Vec<Vec<Vec<[f64; 2]>>>,
}

#[derive(Debug, Deserialize)]
pub struct IrrepEntryFile {
    pub name: String,
    pub dim: usize,
    pub matrices: Vec<Vec<Vec<[f64; 2]>>>,
}

#[derive(Debug, Deserialize)]
pub struct IrrepTableFile {
    pub irreps: Vec<IrrepEntryFile>,
}

#[derive(Debug, Deserialize)]
pub struct VectorFile {
    pub values: Vec<[f64; 2]>,
}

#[derive(Debug, Deserialize)]
pub struct MultiGenFile {
    /// Optional builtin group spec ("dihedral:3", …) naming the table the
    /// multiplicities refer to, so the file stands alone.
    #[serde(default)]
    pub group: Option<String>,
    pub multiplicities: BTreeMap<String, usize>,
    pub generators: Vec<BTreeMap<String, Vec<Vec<[f64; 2]>>>>,
}

pub fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))
}

pub fn group_from_file(file: &GroupFile) -> Result<Arc<FiniteGroup>> {
    group_from_file_seeded(file, 0)
}

/// `seed` drives the sampled associativity check on tables too large for the
/// exhaustive one.
pub fn group_from_file_seeded(file: &GroupFile, seed: u64) -> Result<Arc<FiniteGroup>> {
    if file.mult_table.len() != file.order {
        return Err(Error::InvalidInput(format!(
            "declared order {} but the table has {} rows",
            file.order,
            file.mult_table.len()
        )));
    }
    let mut group = FiniteGroup::from_mult_table_seeded(file.mult_table.clone(), seed)?;
    if let Some(labels) = &file.labels {
        group = group.with_labels(labels.clone())?;
    }
    Ok(Arc::new(group))
}

fn cmat_from_rows(dim_rows: usize, dim_cols: usize, rows: &[Vec<[f64; 2]>]) -> Result<CMat> {
    if rows.len() != dim_rows || rows.iter().any(|r| r.len() != dim_cols) {
        return Err(Error::ShapeMismatch(format!(
            "expected a {dim_rows}×{dim_cols} matrix"
        )));
    }
    Ok(CMat::from_fn(dim_rows, dim_cols, |i, j| {
        c(rows[i][j][0], rows[i][j][1])
    }))
}

/// Decode the matrices of a rep file without validating them as a
/// representation (report-producing validators want the raw data).
pub fn rep_matrices_from_file(file: &RepFile) -> Result<Vec<CMat>> {
    file.matrices
        .iter()
        .map(|rows| cmat_from_rows(file.dim, file.dim, rows))
        .collect()
}

pub fn rep_from_file(file: &RepFile, group: Arc<FiniteGroup>) -> Result<UnitaryRep> {
    if file.matrices.len() != group.order() {
        return Err(Error::SizeMismatch(format!(
            "{} matrices for a group of order {}",
            file.matrices.len(),
            group.order()
        )));
    }
    let mats = rep_matrices_from_file(file)?;
    UnitaryRep::new(group, mats)
}

pub fn table_from_file(file: &IrrepTableFile, group: Arc<FiniteGroup>) -> Result<Arc<IrrepTable>> {
    let mut irreps = Vec::with_capacity(file.irreps.len());
    let mut names = Vec::with_capacity(file.irreps.len());
    for entry in &file.irreps {
        let rep = rep_from_file(
            &RepFile {
                dim: entry.dim,
                matrices: entry.matrices.clone(),
            },
            group.clone(),
        )?;
        irreps.push(rep);
        names.push(entry.name.clone());
    }
    Ok(Arc::new(IrrepTable::new(group, irreps, names, "custom")?))
}

pub fn values_from_file(file: &VectorFile) -> Vec<C64> {
    file.values.iter().map(|p| c(p[0], p[1])).collect()
}

pub fn multigen_from_file(file: &MultiGenFile, table: &Arc<IrrepTable>) -> Result<MultiGenSpec> {
    let index_of = |name: &str| -> Result<usize> {
        table
            .names()
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown irrep name `{name}`")))
    };
    let mut mults = vec![0usize; table.n_irreps()];
    for (name, &m) in &file.multiplicities {
        mults[index_of(name)?] = m;
    }
    let mut generators = Vec::with_capacity(file.generators.len());
    for (j, gen) in file.generators.iter().enumerate() {
        let mut components = Vec::with_capacity(table.n_irreps());
        for pi in 0..table.n_irreps() {
            let d = table.dim(pi);
            let m = mults[pi];
            let name = &table.names()[pi];
            match gen.get(name) {
                Some(vecs) => {
                    if vecs.len() != m {
                        return Err(Error::ShapeMismatch(format!(
                            "generator {j} supplies {} vectors at irrep {name} (want {m})",
                            vecs.len()
                        )));
                    }
                    let mut comp = CMat::zeros(d, m);
                    for (i, v) in vecs.iter().enumerate() {
                        if v.len() != d {
                            return Err(Error::ShapeMismatch(format!(
                                "generator {j} vector {i} at irrep {name} has length {} (want {d})",
                                v.len()
                            )));
                        }
                        for (t, p) in v.iter().enumerate() {
                            comp[(t, i)] = c(p[0], p[1]);
                        }
                    }
                    components.push(comp);
                }
                None if m == 0 => components.push(CMat::zeros(d, 0)),
                None => {
                    return Err(Error::InvalidInput(format!(
                        "generator {j} is missing its component at irrep {name}"
                    )));
                }
            }
        }
        generators.push(components);
    }
    MultiGenSpec::new(table.clone(), mults, generators)
}

// ---- report builders ----

pub fn group_function_json(f: &GroupFunction) -> Json {
    Json::obj(vec![(
        "values",
        Json::Array(f.values().iter().map(|&z| Json::complex(z)).collect()),
    )])
}

pub fn group_summary_json(group: &FiniteGroup) -> Json {
    let abelian = group
        .elements()
        .all(|a| group.elements().all(|b| group.mul(a, b) == group.mul(b, a)));
    Json::obj(vec![
        ("order", Json::int(group.order())),
        ("identity", Json::int(group.identity())),
        ("abelian", Json::Bool(abelian)),
        (
            "labels",
            Json::Array(group.labels().into_iter().map(Json::Str).collect()),
        ),
    ])
}

pub fn rep_report_json(r: &RepReport) -> Json {
    Json::obj(vec![
        ("dim", Json::int(r.dim)),
        ("group_order", Json::int(r.group_order)),
        ("identity_deviation", Json::Float(r.identity_deviation)),
        (
            "max_unitarity_deviation",
            Json::Float(r.max_unitarity_deviation),
        ),
        (
            "max_homomorphism_deviation",
            Json::Float(r.max_homomorphism_deviation),
        ),
        (
            "homomorphism_pairs_checked",
            Json::int(r.homomorphism_pairs_checked),
        ),
        ("exhaustive", Json::Bool(r.exhaustive)),
        ("is_valid", Json::Bool(r.is_valid())),
        (
            "violations",
            Json::Array(r.violations.iter().map(|v| Json::string(v.clone())).collect()),
        ),
    ])
}

pub fn table_report_json(r: &TableReport) -> Json {
    Json::obj(vec![
        ("n_irreps", Json::int(r.n_irreps)),
        (
            "dims",
            Json::Array(r.dims.iter().map(|&d| Json::int(d)).collect()),
        ),
        ("sum_dim_sq", Json::int(r.sum_dim_sq)),
        ("group_order", Json::int(r.group_order)),
        (
            "max_orthogonality_deviation",
            Json::Float(r.max_orthogonality_deviation),
        ),
        ("is_valid", Json::Bool(r.is_valid())),
        (
            "violations",
            Json::Array(r.violations.iter().map(|v| Json::string(v.clone())).collect()),
        ),
    ])
}

pub fn fourier_json(coeffs: &FourierCoefficients) -> Json {
    let table = coeffs.table();
    Json::obj(vec![(
        "blocks",
        named(table, (0..table.n_irreps()).map(|pi| Json::cmat(coeffs.block(pi)))),
    )])
}

pub fn bracket_json(b: &BracketValue) -> Json {
    let table = b.table();
    Json::obj(vec![(
        "blocks",
        named(table, (0..table.n_irreps()).map(|pi| Json::cmat(b.block(pi)))),
    )])
}

pub fn positive_type_json(r: &PositiveTypeReport) -> Json {
    Json::obj(vec![
        ("is_positive_type", Json::Bool(r.is_positive_type)),
        ("involution_deviation", Json::Float(r.involution_deviation)),
        ("min_eigenvalue", Json::Float(r.min_eigenvalue)),
        ("violating_irrep", Json::opt_string(&r.violating_irrep)),
    ])
}

pub fn frame_report_json(r: &FrameReport, table: &IrrepTable) -> Json {
    Json::obj(vec![
        ("span_dim", Json::int(r.span_dim)),
        ("is_frame", Json::Bool(r.is_frame)),
        ("is_tight", Json::Bool(r.is_tight)),
        ("is_parseval_continuous", Json::Bool(r.is_parseval_continuous)),
        ("continuous_bounds", Json::bounds(r.continuous_bounds)),
        ("discrete_bounds", Json::bounds(r.discrete_bounds)),
        (
            "per_pi_eigenvalues",
            named(table, r.per_pi_eigenvalues.iter().map(|s| Json::floats(s))),
        ),
        ("tolerance", Json::Float(r.tolerance)),
        (
            "is_frame_for_whole_space",
            Json::opt_bool(r.is_frame_for_whole_space),
        ),
    ])
}

pub fn cyclicity_json(r: &CyclicityReport, table: &IrrepTable) -> Json {
    Json::obj(vec![
        ("is_cyclic", Json::Bool(r.is_cyclic)),
        (
            "bracket_ranks",
            named(table, r.bracket_ranks.iter().map(|&k| Json::int(k))),
        ),
        (
            "contragredient_multiplicities",
            named(
                table,
                r.contragredient_multiplicities.iter().map(|&k| Json::int(k)),
            ),
        ),
        ("span_dim", Json::int(r.span_dim)),
        ("rep_dim", Json::int(r.rep_dim)),
    ])
}

pub fn gramian_json(g: &GramianBlocks) -> Result<Json> {
    let table = g.table();
    Ok(Json::obj(vec![
        (
            "blocks",
            named(table, (0..table.n_irreps()).map(|pi| Json::cmat(g.block(pi)))),
        ),
        ("pooled_eigenvalues", Json::floats(&g.pooled_eigenvalues()?)),
    ]))
}

pub fn isotypical_json(r: &IsotypicalCheck, table: &IrrepTable) -> Json {
    Json::obj(vec![
        (
            "per_pi",
            named(table, r.per_pi.iter().map(|rep| frame_report_json(rep, table))),
        ),
        ("global", frame_report_json(&r.global, table)),
        ("consistent", Json::Bool(r.consistent)),
    ])
}

pub fn two_transitive_json(r: &TwoTransitiveReport) -> Json {
    Json::obj(vec![
        ("sum_abs_sq", Json::Float(r.sum_abs_sq)),
        ("norm_sq", Json::Float(r.norm_sq)),
        ("criterion_tight", Json::Bool(r.criterion_tight)),
        ("span_dim", Json::int(r.span_dim)),
        ("continuous_bounds", Json::bounds(r.continuous_bounds)),
        ("discrete_bounds", Json::bounds(r.discrete_bounds)),
        ("spectrum_tight", Json::Bool(r.spectrum_tight)),
        ("consistent", Json::Bool(r.consistent)),
    ])
}

pub fn zak_json(z: &ZakCoefficients) -> Json {
    let table = z.table();
    Json::obj(vec![
        (
            "blocks",
            named(table, (0..table.n_irreps()).map(|pi| Json::cmat(z.block(pi)))),
        ),
        ("n_cosets", Json::int(z.decomposition().n_cosets())),
        ("energy", Json::Float(z.energy())),
    ])
}

pub fn range_function_json(j: &RangeFunction) -> Json {
    let table = j.table();
    Json::obj(vec![(
        "fibers",
        named(table, (0..table.n_irreps()).map(|pi| Json::cmat(j.fiber(pi)))),
    )])
}

pub fn membership_json(r: &MembershipReport, table: &IrrepTable) -> Json {
    Json::obj(vec![
        ("is_member", Json::Bool(r.is_member)),
        ("max_residual", Json::Float(r.max_residual)),
        (
            "violating_irrep",
            r.violating_irrep
                .map_or(Json::Null, |pi| Json::string(table.name(pi))),
        ),
    ])
}

pub fn components_json(comps: &[IrreducibleComponent], table: &IrrepTable) -> Json {
    Json::Array(
        comps
            .iter()
            .map(|c| {
                Json::obj(vec![
                    ("irrep", Json::string(table.name(c.irrep_index))),
                    ("fiber_column", Json::int(c.fiber_column)),
                    ("dim", Json::int(c.dim)),
                    ("carries", Json::string(table.name(c.carries))),
                    (
                        "basis",
                        Json::Array(c.basis.iter().map(group_function_json).collect()),
                    ),
                ])
            })
            .collect(),
    )
}

pub fn general_components_json(comps: &[GeneralComponent], table: &IrrepTable) -> Json {
    Json::Array(
        comps
            .iter()
            .map(|c| {
                Json::obj(vec![
                    ("irrep", Json::string(table.name(c.irrep_index))),
                    ("fiber_column", Json::int(c.fiber_column)),
                    ("dim", Json::int(c.dim)),
                    ("carries", Json::string(table.name(c.carries))),
                    (
                        "basis",
                        Json::Array(c.basis.iter().map(Json::cvec).collect()),
                    ),
                ])
            })
            .collect(),
    )
}

pub fn frame_matrix_json(m: &FrameMatrix) -> Json {
    let table = m.table();
    Json::obj(vec![
        (
            "vectors",
            Json::Array(m.vectors().iter().map(Json::cvec).collect()),
        ),
        (
            "rows_kept",
            named(table, m.rows_kept().iter().map(|&r| Json::int(r))),
        ),
        ("basis", Json::string(m.basis())),
    ])
}

pub fn k_frame_json(v: &KFrameVerdict) -> Json {
    Json::obj(vec![
        ("admits", Json::Bool(v.admits)),
        (
            "per_irrep",
            Json::Object(
                v.per_irrep
                    .iter()
                    .map(|im| {
                        (
                            im.name.clone(),
                            Json::obj(vec![
                                ("multiplicity", Json::int(im.multiplicity)),
                                ("dim", Json::int(im.dim)),
                            ]),
                        )
                    })
                    .collect(),
            ),
        ),
        (
            "generator",
            v.generator
                .as_ref()
                .map_or(Json::Null, group_function_json),
        ),
    ])
}

pub fn riesz_report_json(r: &RieszReport, table: &IrrepTable) -> Json {
    Json::obj(vec![
        (
            "per_pi",
            named(
                table,
                r.per_pi.iter().map(|row| match row {
                    Some(row) => Json::obj(vec![
                        ("gram_eigenvalues", Json::floats(&row.gram_eigenvalues)),
                        ("lower", Json::Float(row.lower)),
                        ("upper", Json::Float(row.upper)),
                        ("independent", Json::Bool(row.independent)),
                    ]),
                    None => Json::Null,
                }),
            ),
        ),
        ("overall", frame_report_json(&r.overall, table)),
        ("rows_square_summable", Json::Bool(r.rows_square_summable)),
    ])
}

pub fn error_json(e: &Error) -> Json {
    let kind = if e.is_numeric() { "numeric" } else { "validation" };
    Json::obj(vec![(
        "error",
        Json::obj(vec![
            ("kind", Json::string(kind)),
            ("message", Json::string(e.to_string())),
        ]),
    )])
}
