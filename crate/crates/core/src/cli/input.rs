//! JSON problem files.
//!
//! Rationals are written as strings (`"1/3"`, `"-2"`) or JSON integers.
//! Arrays are 0-based: `Pf[i][j][k]`, `Pm[i][j][l]`, map matrices by rows
//! (target coordinate, source coordinate).

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::algebra::{eabp_from_tensor, GeneralAlgebra, InheritanceTensor, Mode, State};
use crate::error::{Error, Result};
use crate::exact::{scalar, Matrix, Scalar, Subspace};
use crate::forms::{canonical_xy, BqPair, LinearForm};
use crate::homs::AlgebraMap;

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRational {
    Int(i64),
    Text(String),
}

type Vector = Vec<RawRational>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    n: Option<usize>,
    nu: Option<usize>,
    #[serde(rename = "Pf")]
    pf: Option<Vec<Vec<Vector>>>,
    #[serde(rename = "Pm")]
    pm: Option<Vec<Vec<Vector>>>,
    mode: Option<String>,
    general_algebra: Option<Vec<Vec<Vector>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    n: Option<usize>,
    nu: Option<usize>,
    #[serde(rename = "Pf")]
    pf: Option<Vec<Vec<Vector>>>,
    #[serde(rename = "Pm")]
    pm: Option<Vec<Vec<Vector>>>,
    mode: Option<String>,
    general_algebra: Option<Vec<Vec<Vector>>>,
    #[serde(default)]
    states: BTreeMap<String, RawState>,
    #[serde(default)]
    forms: BTreeMap<String, Vector>,
    #[serde(default)]
    pairs: BTreeMap<String, RawPair>,
    #[serde(default)]
    maps: BTreeMap<String, RawMap>,
    #[serde(default)]
    ideals: BTreeMap<String, RawIdeal>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawState {
    Split { x: Vector, y: Vector },
    Flat(Vector),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FormRef {
    Name(String),
    Coeffs(Vector),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    f: FormRef,
    g: FormRef,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawTarget {
    Named(String),
    Inline(Box<RawAlgebra>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    matrix: Vec<Vector>,
    #[serde(default)]
    target: Option<RawTarget>,
    source_pair: Option<String>,
    target_pair: Option<RawPair>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdeal {
    basis: Option<Vec<Vector>>,
    kernel: Option<String>,
}

/// A map from the problem's algebra to a target algebra.
#[derive(Clone, Debug)]
pub struct MapSpec {
    pub map: AlgebraMap,
    pub target: GeneralAlgebra,
    pub target_is_self: bool,
    pub source_pair: Option<BqPair>,
    pub target_pair: Option<BqPair>,
}

/// A validated problem file.
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    pub algebra: GeneralAlgebra,
    pub mode: Mode,
    pub states: BTreeMap<String, Vec<Scalar>>,
    pub forms: BTreeMap<String, LinearForm>,
    pub pairs: BTreeMap<String, BqPair>,
    pub maps: BTreeMap<String, MapSpec>,
    pub ideals: BTreeMap<String, Subspace>,
}

/// Reads and validates a problem file. `mode` overrides the file's mode.
pub fn parse_input(path: &Path, mode: Option<Mode>) -> Result<ProblemSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_str(&text, mode).map_err(|e| match e {
        Error::Input(msg) => Error::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse_str(text: &str, mode: Option<Mode>) -> Result<ProblemSpec> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
    let algebra_raw = RawAlgebra {
        n: raw.n,
        nu: raw.nu,
        pf: raw.pf,
        pm: raw.pm,
        mode: raw.mode,
        general_algebra: raw.general_algebra,
    };
    let (algebra, mode) = build_algebra(algebra_raw, mode, "")?;
    let dim = algebra.dim();

    let mut states = BTreeMap::new();
    for (name, s) in raw.states {
        let field = format!("states.{name}");
        let coords = match s {
            RawState::Split { x, y } => {
                let mut v = vector(&x, &format!("{field}.x"))?;
                v.extend(vector(&y, &format!("{field}.y"))?);
                v
            }
            RawState::Flat(v) => vector(&v, &field)?,
        };
        if coords.len() != dim {
            return Err(Error::Input(format!("{field}: expected {dim} coordinates, found {}", coords.len())));
        }
        if algebra.is_eabp() && mode == Mode::Strict {
            State::new(&algebra, coords.clone()).map_err(|e| Error::Input(format!("{field}: {e}")))?;
        }
        states.insert(name, coords);
    }

    let mut forms = BTreeMap::new();
    for (name, v) in &raw.forms {
        let field = format!("forms.{name}");
        let coeffs = vector(v, &field)?;
        if coeffs.len() != dim {
            return Err(Error::Input(format!("{field}: expected {dim} coefficients, found {}", coeffs.len())));
        }
        forms.insert(name.clone(), LinearForm::new(coeffs));
    }

    let mut pairs = BTreeMap::new();
    for (name, p) in &raw.pairs {
        pairs.insert(name.clone(), resolve_pair(p, &algebra, &forms, &format!("pairs.{name}"))?);
    }

    let mut maps = BTreeMap::new();
    for (name, m) in raw.maps {
        let field = format!("maps.{name}");
        let (target, target_is_self) = match m.target {
            None => (algebra.clone(), true),
            Some(RawTarget::Named(s)) if s == "self" => (algebra.clone(), true),
            Some(RawTarget::Named(s)) => {
                return Err(Error::Input(format!(
                    "{field}.target: unknown target {s:?}, expected \"self\" or an inline algebra"
                )))
            }
            Some(RawTarget::Inline(raw)) => (build_algebra(*raw, Some(mode), &format!("{field}.target."))?.0, false),
        };
        let rows = m
            .matrix
            .iter()
            .enumerate()
            .map(|(r, row)| vector(row, &format!("{field}.matrix[{r}]")))
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != target.dim() || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Input(format!(
                "{field}.matrix: expected {} rows of {dim} entries (target x source)",
                target.dim()
            )));
        }
        let map = AlgebraMap::new(Matrix::from_rows(rows, dim)?);
        let source_pair = match &m.source_pair {
            None => None,
            Some(p) => Some(
                pairs
                    .get(p)
                    .cloned()
                    .or_else(|| (p == "XY").then(|| canonical_xy(&algebra).ok()).flatten())
                    .ok_or_else(|| Error::Input(format!("{field}.source_pair: unknown pair {p:?}")))?,
            ),
        };
        let empty = BTreeMap::new();
        let target_forms = if target_is_self { &forms } else { &empty };
        let target_pair = match &m.target_pair {
            None => None,
            Some(p) => Some(resolve_pair(p, &target, target_forms, &format!("{field}.target_pair"))?),
        };
        maps.insert(name, MapSpec { map, target, target_is_self, source_pair, target_pair });
    }

    let mut ideals = BTreeMap::new();
    for (name, i) in raw.ideals {
        let field = format!("ideals.{name}");
        let subspace = match (i.basis, i.kernel) {
            (Some(basis), None) => {
                let vs = basis
                    .iter()
                    .enumerate()
                    .map(|(r, v)| vector(v, &format!("{field}.basis[{r}]")))
                    .collect::<Result<Vec<_>>>()?;
                Subspace::span(dim, vs).map_err(|e| Error::Input(format!("{field}: {e}")))?
            }
            (None, Some(pair)) => {
                let p = pairs
                    .get(&pair)
                    .cloned()
                    .or_else(|| (pair == "XY").then(|| canonical_xy(&algebra).ok()).flatten())
                    .ok_or_else(|| Error::Input(format!("{field}.kernel: unknown pair {pair:?}")))?;
                Subspace::kernel(&Matrix::from_rows(vec![p.f.coeffs().to_vec(), p.g.coeffs().to_vec()], dim)?)
            }
            _ => return Err(Error::Input(format!("{field}: give exactly one of \"basis\" or \"kernel\""))),
        };
        ideals.insert(name, subspace);
    }

    Ok(ProblemSpec { algebra, mode, states, forms, pairs, maps, ideals })
}

fn build_algebra(raw: RawAlgebra, mode: Option<Mode>, prefix: &str) -> Result<(GeneralAlgebra, Mode)> {
    let file_mode = match raw.mode.as_deref() {
        None | Some("strict") => Mode::Strict,
        Some("permissive") => Mode::Permissive,
        Some(other) => {
            return Err(Error::Input(format!("{prefix}mode: expected \"strict\" or \"permissive\", found {other:?}")))
        }
    };
    let mode = mode.unwrap_or(file_mode);
    let tensor_fields = raw.n.is_some() || raw.nu.is_some() || raw.pf.is_some() || raw.pm.is_some();
    match (tensor_fields, raw.general_algebra) {
        (true, Some(_)) => Err(Error::Input(format!(
            "{prefix}: give either an inheritance tensor (n, nu, Pf, Pm) or general_algebra, not both"
        ))),
        (false, None) => Err(Error::Input(format!("{prefix}: missing algebra; give n, nu, Pf, Pm or general_algebra"))),
        (false, Some(c)) => {
            let c = c
                .iter()
                .enumerate()
                .map(|(a, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(b, v)| vector(v, &format!("{prefix}general_algebra[{a}][{b}]")))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let alg = GeneralAlgebra::new(c).map_err(|e| Error::Input(format!("{prefix}general_algebra: {e}")))?;
            Ok((alg, mode))
        }
        (true, None) => {
            let missing = |what: &str| Error::Input(format!("{prefix}{what}: missing"));
            let n = raw.n.ok_or_else(|| missing("n"))?;
            let nu = raw.nu.ok_or_else(|| missing("nu"))?;
            let pf = cube(&raw.pf.ok_or_else(|| missing("Pf"))?, &format!("{prefix}Pf"))?;
            let pm = cube(&raw.pm.ok_or_else(|| missing("Pm"))?, &format!("{prefix}Pm"))?;
            let t = InheritanceTensor::new(n, nu, pf, pm, mode).map_err(|e| located(e, prefix))?;
            Ok((eabp_from_tensor(&t), mode))
        }
    }
}

/// Adds the file location of a tensor validation error.
fn located(e: Error, prefix: &str) -> Error {
    match e {
        Error::Stochasticity { sex, i, j, ref sum } => {
            let field = if sex == "female" { "Pf" } else { "Pm" };
            Error::Input(format!("{prefix}{field}[{i}][{j}]: row sums to {sum}, expected 1"))
        }
        Error::NegativeEntry { sex, i, j, k, ref value } => {
            let field = if sex == "female" { "Pf" } else { "Pm" };
            Error::Input(format!("{prefix}{field}[{i}][{j}][{k}]: negative entry {value} in strict mode"))
        }
        Error::TensorShape(msg) => Error::Input(format!("{prefix}tensor shape: {msg}")),
        other => other,
    }
}

fn rational(r: &RawRational, field: &str) -> Result<Scalar> {
    match r {
        RawRational::Int(v) => Ok(scalar::int(*v)),
        RawRational::Text(t) => scalar::parse(t).map_err(|e| Error::Input(format!("{field}: {e}"))),
    }
}

fn vector(v: &[RawRational], field: &str) -> Result<Vec<Scalar>> {
    v.iter().enumerate().map(|(k, r)| rational(r, &format!("{field}[{k}]"))).collect()
}

fn cube(c: &[Vec<Vector>], field: &str) -> Result<Vec<Vec<Vec<Scalar>>>> {
    c.iter()
        .enumerate()
        .map(|(i, plane)| plane.iter().enumerate().map(|(j, row)| vector(row, &format!("{field}[{i}][{j}]"))).collect())
        .collect()
}

fn resolve_form(
    r: &FormRef,
    alg: &GeneralAlgebra,
    forms: &BTreeMap<String, LinearForm>,
    field: &str,
) -> Result<LinearForm> {
    match r {
        FormRef::Coeffs(v) => {
            let coeffs = vector(v, field)?;
            if coeffs.len() != alg.dim() {
                return Err(Error::Input(format!(
                    "{field}: expected {} coefficients, found {}",
                    alg.dim(),
                    coeffs.len()
                )));
            }
            Ok(LinearForm::new(coeffs))
        }
        FormRef::Name(name) => {
            if let Some(f) = forms.get(name) {
                return Ok(f.clone());
            }
            match name.as_str() {
                "X" | "Y" => {
                    let xy = canonical_xy(alg)
                        .map_err(|_| Error::Input(format!("{field}: {name} needs an inheritance tensor")))?;
                    Ok(if name == "X" { xy.f } else { xy.g })
                }
                _ => Err(Error::Input(format!("{field}: unknown form {name:?}"))),
            }
        }
    }
}

fn resolve_pair(
    p: &RawPair,
    alg: &GeneralAlgebra,
    forms: &BTreeMap<String, LinearForm>,
    field: &str,
) -> Result<BqPair> {
    Ok(BqPair::new(
        resolve_form(&p.f, alg, forms, &format!("{field}.f"))?,
        resolve_form(&p.g, alg, forms, &format!("{field}.g"))?,
    ))
}
