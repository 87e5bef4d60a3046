//! Reports produced by the commands. Every check records the operation and
//! inputs it ran on; vectors are lists of exact rationals and basis indices
//! are 1-based.

use serde_json::{json, Map, Value};

use super::input::ProblemSpec;
use crate::algebra::{check_identity, trajectory, GeneralAlgebra, Identity, IdentityVerdict, State};
use crate::dibaric::{dibaric_hom_from_bq, is_dibaric_via_tt1, pair_witness, square_character, QuotientClassification};
use crate::error::{Error, ErrorKind, Result};
use crate::exact::{scalar, Matrix, Scalar, Subspace};
use crate::forms::{
    annihilator, annihilator_via_tensor, canonical_xy, classify_bq, disappearing_forms, induced_bernstein_check,
    induced_operator, invariant_forms, is_bernstein, is_conservative, male_invariant_solutions,
    simplex_invariant_forms, verify_bq, BqPair, LinearForm,
};
use crate::homs::{check_t3_conclusions, pullback_invariants, verify_algebra_hom, verify_dibaric_hom};

/// A report and the number of internal invariant breaches it records.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub body: Value,
    pub breaches: usize,
}

fn render_vec(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(scalar::render(s))).collect())
}

fn render_basis(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| render_vec(v)).collect())
}

fn render_matrix(m: &Matrix) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| render_vec(r)).collect())
}

fn subspace(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": render_basis(s) })
}

pub(crate) fn basis_labels(alg: &GeneralAlgebra) -> Vec<String> {
    match alg.tensor() {
        Some(t) => {
            (0..t.n()).map(|i| format!("e{}(f)", i + 1)).chain((0..t.nu()).map(|j| format!("e{}(m)", j + 1))).collect()
        }
        None => (0..alg.dim()).map(|a| format!("e{}", a + 1)).collect(),
    }
}

fn verdict(v: &IdentityVerdict) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Runs one check, turning errors into structured markers.
struct Checks {
    breaches: usize,
}

impl Checks {
    fn run(&mut self, operation: &str, inputs: &str, f: impl FnOnce() -> Result<Value>) -> Value {
        let mut out = Map::new();
        out.insert("operation".into(), json!(operation));
        out.insert("inputs".into(), json!(inputs));
        match f() {
            Ok(Value::Object(fields)) => {
                out.insert("status".into(), json!("ok"));
                out.extend(fields);
            }
            Ok(other) => {
                out.insert("status".into(), json!("ok"));
                out.insert("result".into(), other);
            }
            Err(e) if e.kind() == ErrorKind::Invariant => {
                self.breaches += 1;
                out.insert("status".into(), json!("invariant-breach"));
                out.insert("reason".into(), json!(e.to_string()));
            }
            Err(e) => {
                out.insert("status".into(), json!("inapplicable"));
                out.insert("reason".into(), json!(e.to_string()));
            }
        }
        Value::Object(out)
    }
}

fn classification(c: &QuotientClassification) -> Value {
    json!({
        "case": c.case,
        "alpha2": c.alpha2.as_ref().map(scalar::render),
        "basis_change": c.basis_change,
        "sex_differentiation": c.is_sex_diff(),
    })
}

fn pair_value(p: &BqPair) -> Value {
    json!({ "f": render_vec(&p.f), "g": render_vec(&p.g) })
}

/// Full analysis of the problem's algebra.
pub fn run_analyze(spec: &ProblemSpec) -> Report {
    let alg = &spec.algebra;
    let mut c = Checks { breaches: 0 };
    let mut body = Map::new();

    let mut input = Map::new();
    input.insert("dim".into(), json!(alg.dim()));
    input.insert("basis".into(), json!(basis_labels(alg)));
    match alg.tensor() {
        Some(t) => {
            input.insert("kind".into(), json!("inheritance-tensor"));
            input.insert("n".into(), json!(t.n()));
            input.insert("nu".into(), json!(t.nu()));
            input.insert("mode".into(), json!(if t.is_strict() { "strict" } else { "permissive" }));
        }
        None => {
            input.insert("kind".into(), json!("general-algebra"));
        }
    }
    body.insert("input".into(), Value::Object(input));
    body.insert(
        "tensor_validation".into(),
        c.run("parse_input", "inheritance tensor", || {
            let t = alg.tensor().ok_or(Error::NotEabp)?;
            Ok(json!({ "rows_sum_to_one": true, "nonnegative_checked": t.is_strict() }))
        }),
    );

    let mut identities = Map::new();
    for id in [Identity::Commutativity, Identity::Flexibility, Identity::PowerAssociativity] {
        let name = id.name();
        identities.insert(name.into(), c.run("check_identity", name, || Ok(verdict(&check_identity(alg, &id)?))));
    }
    body.insert("identities".into(), Value::Object(identities));

    let xy = canonical_xy(alg).ok();
    let need = || xy.clone().ok_or(Error::NotEabp);
    let mut dibaric = Map::new();
    dibaric.insert(
        "via_bq_pair".into(),
        c.run("dibaric_hom_from_bq", "(X, Y)", || {
            let pair = need()?;
            let hom = dibaric_hom_from_bq(alg, &pair)?;
            let ker = hom.kernel();
            Ok(json!({
                "dibaric": true,
                "multiplicative": hom.multiplicativity.holds,
                "matrix": render_matrix(&hom.matrix),
                "kernel": subspace(&ker),
                "kernel_codim": ker.codim(),
                "square_in_kernel": alg.square_span().is_subspace_of(&ker),
                "square_character": square_character(alg, &hom)?,
            }))
        }),
    );
    dibaric.insert(
        "via_quotient".into(),
        c.run("is_dibaric_via_tt1", "kernel of x -> X(x) w + Y(x) m", || {
            let pair = need()?;
            let ker = dibaric_hom_from_bq(alg, &pair)?.kernel();
            let v = is_dibaric_via_tt1(alg, &ker)?;
            let mut out = classification(&v.classification);
            out["dibaric"] = json!(v.is_dibaric());
            out["onto"] = v.onto.as_ref().map(render_matrix).unwrap_or(Value::Null);
            Ok(out)
        }),
    );
    body.insert("dibaric".into(), Value::Object(dibaric));

    let mut inv = Map::new();
    inv.insert(
        "J_X".into(),
        c.run("invariant_forms", "f = X", || {
            let j = invariant_forms(alg, &need()?.f)?;
            let male = male_invariant_solutions(alg)?;
            let mut out = subspace(&j);
            out["agrees_with_male_transitions"] = json!(male == j);
            Ok(out)
        }),
    );
    inv.insert("J_Y".into(), c.run("invariant_forms", "f = Y", || Ok(subspace(&invariant_forms(alg, &need()?.g)?))));
    body.insert("invariant_forms".into(), Value::Object(inv));

    body.insert(
        "simplex_invariants".into(),
        c.run("simplex_invariant_forms", "evolution operator on the states", || {
            let s = simplex_invariant_forms(alg)?;
            Ok(json!({
                "linear": subspace(&s.linear),
                "vanishing_on_states": subspace(&s.vanishing),
                "effective_dim": s.effective_dim(),
            }))
        }),
    );
    body.insert(
        "annihilator".into(),
        c.run("annihilator", "structure constants", || {
            let ann = annihilator(alg);
            let mut out = subspace(&ann);
            out["agrees_with_tensor"] = match annihilator_via_tensor(alg) {
                Ok(t) => json!(t == ann),
                Err(_) => Value::Null,
            };
            Ok(out)
        }),
    );
    body.insert(
        "disappearing_forms".into(),
        c.run("disappearing_forms", "square of the algebra", || Ok(subspace(&disappearing_forms(alg)))),
    );
    body.insert(
        "conservative".into(),
        c.run("is_conservative", "(X, Y)", || {
            let v = is_conservative(alg, &need()?)?;
            let labels = basis_labels(alg);
            Ok(json!({
                "holds": v.holds(),
                "failing_triple": v.failing_triple.map(|(a, b, d)| vec![labels[a].clone(), labels[b].clone(), labels[d].clone()]),
                "perp_equals_annihilator": v.perp_equals_annihilator,
            }))
        }),
    );
    body.insert("bernstein".into(), c.run("is_bernstein", "(X, Y)", || Ok(verdict(&is_bernstein(alg, &need()?)?))));
    body.insert(
        "induced_operator".into(),
        c.run("induced_operator", "f = X", || {
            let x = need()?.f;
            match induced_operator(alg)? {
                None => Ok(json!({ "present": false })),
                Some(op) => {
                    let check = induced_bernstein_check(alg, &op.operator, &x)?;
                    let direct = is_bernstein(alg, &need()?)?;
                    Ok(json!({
                        "present": true,
                        "matrix": render_matrix(op.operator.matrix()),
                        "disappearing_equals_image_perp": op.disappearing_equals_image_perp,
                        "bernstein_via_operator": check.holds,
                        "agrees_with_bernstein": check.holds == direct.holds,
                    }))
                }
            }
        }),
    );

    let mut bq = Map::new();
    bq.insert("(X, Y)".into(), c.run("classify_bq", "(X, Y)", || bq_entry(alg, &need()?)));
    for (name, pair) in &spec.pairs {
        bq.insert(name.clone(), c.run("classify_bq", name, || bq_entry(alg, pair)));
    }
    body.insert("bq_pairs".into(), Value::Object(bq));

    Report { body: Value::Object(body), breaches: c.breaches }
}

fn bq_entry(alg: &GeneralAlgebra, pair: &BqPair) -> Result<Value> {
    let v = verify_bq(alg, pair)?;
    let mut out = json!({
        "pair": pair_value(pair),
        "holds": v.holds,
        "nonzero": v.nonzero,
        "witness": v.identity.witness,
    });
    if alg.is_eabp() {
        out["family"] = json!(classify_bq(alg, pair)?);
    }
    if v.holds && v.nonzero {
        out["role"] = json!(pair_witness(alg, pair)?);
    }
    Ok(out)
}

/// Trajectory table of a named state.
pub fn run_simulate(spec: &ProblemSpec, state: &str, steps: usize, decimal: bool) -> Result<Report> {
    let alg = &spec.algebra;
    let coords = spec.states.get(state).ok_or_else(|| Error::Input(format!("no state named {state:?}")))?;
    let start = State::new(alg, coords.clone())?;
    let rows = trajectory(alg, &start, steps)?;
    let invariants = simplex_invariant_forms(alg)?;
    let forms: Vec<LinearForm> = invariants.linear.basis().iter().cloned().map(LinearForm::new).collect();
    let initial: Vec<Scalar> = forms.iter().map(|f| f.eval(start.coords())).collect();
    let mut table = Vec::with_capacity(rows.len());
    for (t, s) in rows.iter().enumerate() {
        if forms.iter().zip(&initial).any(|(f, v0)| f.eval(s.coords()) != *v0) {
            return Err(Error::InvariantBreach(format!("simplex-invariant form changed at step {t}")));
        }
        let mut row = json!({ "t": t, "x": render_vec(s.female()), "y": render_vec(s.male()) });
        if decimal {
            let approx = |v: &[Scalar]| v.iter().map(scalar::approx).collect::<Vec<_>>();
            row["approx"] = json!({ "x": approx(s.female()), "y": approx(s.male()) });
        }
        table.push(row);
    }
    Ok(Report {
        body: json!({
            "operation": "trajectory",
            "inputs": { "state": state, "steps": steps },
            "invariant_forms_checked": render_basis(&invariants.linear),
            "rows": table,
        }),
        breaches: 0,
    })
}

/// Invariant forms for `X`, `Y` and every named form.
pub fn run_forms(spec: &ProblemSpec) -> Report {
    let alg = &spec.algebra;
    let mut c = Checks { breaches: 0 };
    let mut body = Map::new();
    let mut named: Vec<(String, LinearForm)> = Vec::new();
    if let Ok(xy) = canonical_xy(alg) {
        named.push(("X".into(), xy.f));
        named.push(("Y".into(), xy.g));
    }
    named.extend(spec.forms.iter().map(|(k, v)| (k.clone(), v.clone())));
    let mut inv = Map::new();
    for (name, f) in &named {
        inv.insert(
            name.clone(),
            c.run("invariant_forms", &format!("f = {name}"), || {
                let j = invariant_forms(alg, f)?;
                Ok(json!({ "form": render_vec(f), "J": subspace(&j), "J_perp": subspace(&j.perp()) }))
            }),
        );
    }
    body.insert("invariant_forms".into(), Value::Object(inv));
    body.insert("annihilator".into(), c.run("annihilator", "structure constants", || Ok(subspace(&annihilator(alg)))));
    body.insert(
        "disappearing_forms".into(),
        c.run("disappearing_forms", "square of the algebra", || Ok(subspace(&disappearing_forms(alg)))),
    );
    body.insert(
        "simplex_invariants".into(),
        c.run("simplex_invariant_forms", "evolution operator on the states", || {
            let s = simplex_invariant_forms(alg)?;
            Ok(json!({ "linear": subspace(&s.linear), "effective_dim": s.effective_dim() }))
        }),
    );
    Report { body: Value::Object(body), breaches: c.breaches }
}

/// bq classification of the canonical pair and the named pairs, or of one pair.
pub fn run_bq_classify(spec: &ProblemSpec, only: Option<&str>) -> Result<Report> {
    let alg = &spec.algebra;
    let mut c = Checks { breaches: 0 };
    let mut out = Map::new();
    let mut pairs: Vec<(String, BqPair)> = Vec::new();
    if let Ok(xy) = canonical_xy(alg) {
        pairs.push(("(X, Y)".into(), xy));
    }
    pairs.extend(spec.pairs.iter().map(|(k, v)| (k.clone(), v.clone())));
    if let Some(name) = only {
        pairs.retain(|(k, _)| k == name);
        if pairs.is_empty() {
            return Err(Error::Input(format!("no pair named {name:?}")));
        }
    }
    for (name, pair) in &pairs {
        out.insert(name.clone(), c.run("classify_bq", name, || bq_entry(alg, pair)));
    }
    Ok(Report { body: Value::Object(out), breaches: c.breaches })
}

/// Homomorphism checks for a named map.
pub fn run_check_hom(spec: &ProblemSpec, name: &str) -> Result<Report> {
    let m = spec.maps.get(name).ok_or_else(|| Error::Input(format!("no map named {name:?}")))?;
    let (src, dst, h) = (&spec.algebra, &m.target, &m.map);
    let mut c = Checks { breaches: 0 };
    let report = verify_algebra_hom(src, dst, h)?;
    let mut body = Map::new();
    body.insert("operation".into(), json!("verify_algebra_hom"));
    body.insert("inputs".into(), json!({ "map": name, "target": if m.target_is_self { "self" } else { "inline" } }));
    body.insert("matrix".into(), render_matrix(h.matrix()));
    body.insert("report".into(), serde_json::to_value(&report).expect("serializable"));
    if report.is_eabp_hom {
        body.insert(
            "weight_conclusions".into(),
            c.run("check_t3_conclusions", name, || Ok(json!({ "holds": check_t3_conclusions(src, dst, h)? }))),
        );
    }
    if report.is_linear_hom {
        if let Ok(x) = canonical_xy(dst) {
            body.insert(
                "pullback_of_J_X".into(),
                c.run("pullback_invariants", "f2 = X on the target", || {
                    let p = pullback_invariants(src, dst, h, &x.f)?;
                    Ok(json!({
                        "pulled_back_f": render_vec(&p.f_source),
                        "J_source": subspace(&p.j_source),
                        "J_target": subspace(&p.j_target),
                        "image": subspace(&p.image),
                        "image_contains_target_square": p.image_contains_square,
                        "injective_on_J_target": p.injective_on_target,
                        "onto_J_source": p.onto_source,
                    }))
                }),
            );
        }
    }
    let pairs = match (&m.source_pair, &m.target_pair) {
        (Some(a), Some(b)) => Some((a.clone(), b.clone())),
        (None, None) => match (canonical_xy(src), canonical_xy(dst)) {
            (Ok(a), Ok(b)) => Some((a, b)),
            _ => None,
        },
        _ => return Err(Error::Input(format!("map {name:?}: give both source_pair and target_pair or neither"))),
    };
    if let Some((a, b)) = pairs {
        body.insert(
            "dibaric_hom".into(),
            c.run("verify_dibaric_hom", "source and target pairs", || {
                let v = verify_dibaric_hom(src, &a, dst, &b, h)?;
                let mut out = serde_json::to_value(&v).expect("serializable");
                out["holds"] = json!(v.holds());
                Ok(out)
            }),
        );
    }
    Ok(Report { body: Value::Object(body), breaches: c.breaches })
}

/// Quotient classification for a named ideal of codimension 2.
pub fn run_classify_quotient(spec: &ProblemSpec, name: &str) -> Result<Report> {
    let s = spec.ideals.get(name).ok_or_else(|| Error::Input(format!("no ideal named {name:?}")))?;
    let v = is_dibaric_via_tt1(&spec.algebra, s)?;
    let mut out = classification(&v.classification);
    out["operation"] = json!("is_dibaric_via_tt1");
    out["inputs"] = json!({ "ideal": name, "basis": render_basis(s) });
    out["dibaric"] = json!(v.is_dibaric());
    out["onto"] = v.onto.as_ref().map(render_matrix).unwrap_or(Value::Null);
    if let Some(iso) = v.classification.isomorphism_approx() {
        out["isomorphism_approx"] =
            json!(iso.iter().map(|r| r.iter().map(|x| scalar::approx_f64(*x)).collect::<Vec<_>>()).collect::<Vec<_>>());
    }
    Ok(Report { body: out, breaches: 0 })
}

/// Human-readable rendering of a report value.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_object() && !i.is_array()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => format!("({})", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(fields) => {
            for (k, val) in fields {
                if is_flat(val) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(val)));
                } else if val.as_array().is_some_and(|a| a.is_empty()) {
                    out.push_str(&format!("{pad}{k}: (none)\n"));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    write_value(out, val, depth + 1);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{pad}- {}\n", inline(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    write_value(out, item, depth + 1);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}
