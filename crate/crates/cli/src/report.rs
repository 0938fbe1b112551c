//! Structured report sections. Every section is a `serde_json::Value` whose
//! objects are key-sorted, so the JSON form is canonical and the text form
//! is a deterministic rendering of the same tree.

use std::fmt::Write as _;

use kenmotsu_core::curvature::{
    einstein_classify, kenmotsu_identities, q_tensor, solve_q_flat_psi, star_ricci_kenmotsu,
    structural_identities, w2_tensor, EinsteinClass,
};
use kenmotsu_core::fields::{analyze_field, FieldAnalysis};
use kenmotsu_core::manifold::{validate_kenmotsu, Check, ValidationReport};
use kenmotsu_core::soliton::{
    soliton_solve_trace, SolitonKind, SolitonParams, SolitonProblem, SolitonReport,
};
use kenmotsu_core::theorems::{theorem_suite, TheoremResult};
use kenmotsu_core::{
    levi_civita, ConnectionCoeffs, CurvatureBundle, Error, FrameTensor, Rational, RingElement,
    VectorField,
};
use serde_json::{json, Map, Value};

use crate::catalog::{fixture, rat, PublishedCurvature};
use crate::document::LoadedManifold;

/// A loaded manifold with its connection and curvature computed once.
pub struct Session {
    pub manifold: LoadedManifold,
    pub conn: ConnectionCoeffs,
    pub bundle: CurvatureBundle,
}

impl Session {
    pub fn new(manifold: LoadedManifold) -> Self {
        let conn = levi_civita(&manifold.spec);
        let bundle = CurvatureBundle::compute(&manifold.spec, &conn);
        Session {
            manifold,
            conn,
            bundle,
        }
    }

    pub fn validation(&self) -> ValidationReport {
        validate_kenmotsu(&self.manifold.spec, &self.conn).expect("connection computed from this spec")
    }

    pub fn is_kenmotsu(&self) -> bool {
        self.validation().is_kenmotsu
    }

    pub fn theorems(&self, omega: &Rational) -> Vec<TheoremResult> {
        theorem_suite(
            &self.manifold.spec,
            &self.conn,
            &self.bundle,
            &self.manifold.fields,
            omega,
        )
    }
}

pub fn s<T: ToString>(v: &T) -> Value {
    Value::String(v.to_string())
}

pub fn matrix(t: &FrameTensor<Rational>) -> Value {
    let n = t.dim();
    Value::Array((0..n).map(|i| Value::Array((0..n).map(|j| s(&t[[i, j]])).collect())).collect())
}

pub fn ring_matrix(t: &FrameTensor<RingElement>) -> Value {
    let n = t.dim();
    Value::Array((0..n).map(|i| Value::Array((0..n).map(|j| s(&t[[i, j]])).collect())).collect())
}

/// Nonzero entries of a rank-4 tensor, 1-based.
pub fn sparse4(t: &FrameTensor<Rational>) -> Value {
    Value::Array(
        t.entries()
            .filter(|(_, v)| !v.is_zero())
            .map(|(idx, v)| json!({"indices": idx.iter().map(|i| i + 1).collect::<Vec<_>>(), "value": s(v)}))
            .collect(),
    )
}

/// `Σ f_i e_i` as text, e.g. `2 * e1 - y1 * exp(y5) * e5`.
pub fn vector_text(comps: &[RingElement]) -> String {
    let mut out = String::new();
    for (i, c) in comps.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let basis = format!("e{}", i + 1);
        let body = c.to_string();
        let (neg, mag) = match c.constant_value() {
            Some(v) if v.is_one() => (false, basis),
            Some(v) if (-&v).is_one() => (true, basis),
            _ if c.len() == 1 => match body.strip_prefix('-') {
                Some(rest) => (true, format!("{rest} * {basis}")),
                None => (false, format!("{body} * {basis}")),
            },
            _ => (false, format!("({body}) * {basis}")),
        };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&mag),
            (true, true) => {
                out.push('-');
                out.push_str(&mag);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&mag);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&mag);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn constant_vector(v: &[Rational]) -> String {
    let n = v.len();
    let comps: Vec<RingElement> = v.iter().map(|c| RingElement::constant(n, c.clone())).collect();
    vector_text(&comps)
}

pub fn check(c: &Check) -> Value {
    json!({
        "id": c.id,
        "statement": c.statement,
        "passed": c.passed,
        "witness": c.witness,
    })
}

pub fn validation(v: &ValidationReport) -> Value {
    json!({
        "is_almost_contact": v.is_almost_contact,
        "is_kenmotsu": v.is_kenmotsu,
        "checks": v.checks.iter().map(check).collect::<Vec<_>>(),
    })
}

pub fn einstein(c: &EinsteinClass) -> Value {
    match c {
        EinsteinClass::Einstein { lambda } => json!({"class": "einstein", "lambda": s(lambda)}),
        EinsteinClass::EtaEinstein { lambda, c } => {
            json!({"class": "eta-einstein", "lambda": s(lambda), "c": s(c)})
        }
        EinsteinClass::Neither => json!({"class": "neither"}),
    }
}

pub fn ricci_section(sess: &Session) -> Value {
    let spec = &sess.manifold.spec;
    json!({
        "ricci": matrix(&sess.bundle.ricci),
        "r": s(&sess.bundle.scalar),
        "einstein": einstein(&einstein_classify(spec, &sess.bundle.ricci)),
    })
}

pub fn star_ricci_section(sess: &Session) -> Value {
    let spec = &sess.manifold.spec;
    let b = &sess.bundle;
    let closed = star_ricci_kenmotsu(spec, &sess.conn, &b.ricci).ok();
    json!({
        "star_ricci": matrix(&b.star_ricci),
        "star_ricci_closed_form": closed.as_ref().map(matrix),
        "routes_agree": closed.as_ref().map(|c| *c == b.star_ricci),
        "r": s(&b.scalar),
        "r_star": s(&b.star_scalar),
        "einstein": einstein(&einstein_classify(spec, &b.star_ricci)),
    })
}

pub fn riemann_section(sess: &Session) -> Value {
    let mut out = Map::new();
    let entries: Vec<Value> = sess
        .bundle
        .riemann
        .entries()
        .filter(|(_, v)| !v.is_zero())
        .map(|(idx, v)| {
            json!({"x": idx[0] + 1, "y": idx[1] + 1, "z": idx[2] + 1, "component": idx[3] + 1, "value": s(v)})
        })
        .collect();
    out.insert("riemann".into(), Value::Array(entries));
    if let Some(table) = published_comparison(sess) {
        out.insert("published_comparison".into(), table);
    }
    Value::Object(out)
}

pub fn w2_section(sess: &Session) -> Value {
    let w = w2_tensor(&sess.manifold.spec, &sess.bundle);
    json!({
        "w2_nonzero": sparse4(&w.tensor),
        "flat": w.is_flat,
        "einstein_consequence": w.einstein_consequence,
    })
}

/// `psi = None` solves for the unique flat `ψ`; `Err` when there is none.
pub fn q_section(sess: &Session, psi: Option<&Rational>) -> Result<Value, Error> {
    let (psi, solved) = match psi {
        Some(p) => (p.clone(), false),
        None => (
            solve_q_flat_psi(&sess.manifold.spec, &sess.bundle).ok_or_else(|| {
                Error::NonConstantSolution("no constant ψ makes Q vanish; pass --psi".into())
            })?,
            true,
        ),
    };
    let qt = q_tensor(&sess.manifold.spec, &sess.bundle, &psi);
    Ok(json!({
        "psi": s(&psi),
        "psi_solved": solved,
        "q_nonzero": sparse4(&qt.tensor),
        "flat": qt.is_flat,
        "einstein_consequence": qt.einstein_consequence,
    }))
}

pub fn curvature_section(sess: &Session) -> Value {
    let spec = &sess.manifold.spec;
    let b = &sess.bundle;
    let w = w2_tensor(spec, b);
    let psi = solve_q_flat_psi(spec, b);
    let kenmotsu = sess.is_kenmotsu();
    let closed = star_ricci_kenmotsu(spec, &sess.conn, &b.ricci).ok();
    let mut out = json!({
        "r": s(&b.scalar),
        "r_star": s(&b.star_scalar),
        "ricci": matrix(&b.ricci),
        "star_ricci": matrix(&b.star_ricci),
        "star_ricci_routes_agree": closed.map(|c| c == b.star_ricci),
        "einstein": {
            "ricci": einstein(&einstein_classify(spec, &b.ricci)),
            "star_ricci": einstein(&einstein_classify(spec, &b.star_ricci)),
        },
        "w2": {"flat": w.is_flat, "einstein_consequence": w.einstein_consequence},
        "q": {
            "flat_psi": psi.as_ref().map(s),
            "flat": psi.is_some(),
        },
        "identities": {
            "structural": structural_identities(spec, &sess.conn, b).iter().map(check).collect::<Vec<_>>(),
            "kenmotsu": kenmotsu.then(|| kenmotsu_identities(spec, &sess.conn, b).iter().map(check).collect::<Vec<_>>()),
        },
    });
    if let Some(table) = published_comparison(sess) {
        out["published_comparison"] = table;
    }
    out
}

fn published_entry_text(p: &PublishedCurvature) -> String {
    format!("R(e{}, e{})e{}", p.x, p.y, p.z)
}

/// Compares a reference curvature table attached to this manifold's name,
/// entry by entry, against the computed tensor.
pub fn published_comparison(sess: &Session) -> Option<Value> {
    let fx = fixture(sess.manifold.spec.name())?;
    let n = sess.manifold.spec.dim();
    let rows: Vec<Value> = fx
        .published_curvature
        .iter()
        .filter(|p| [p.x, p.y, p.z, p.component].iter().all(|&i| (1..=n).contains(&i)))
        .map(|p| {
            let mut printed = vec![Rational::zero(); n];
            printed[p.component - 1] = rat(&p.value);
            let computed: Vec<Rational> = (0..n)
                .map(|l| sess.bundle.riemann[[p.x - 1, p.y - 1, p.z - 1, l]].clone())
                .collect();
            json!({
                "entry": published_entry_text(p),
                "published": constant_vector(&printed),
                "computed": constant_vector(&computed),
                "agrees": printed == computed,
            })
        })
        .collect();
    Some(Value::Array(rows))
}

/// One line per disagreeing reference entry.
pub fn published_discrepancies(sess: &Session) -> Vec<String> {
    let Some(Value::Array(rows)) = published_comparison(sess) else {
        return Vec::new();
    };
    rows.iter()
        .filter(|r| r["agrees"] == Value::Bool(false))
        .map(|r| {
            format!(
                "curvature table: {} is printed as {} but equals {}",
                r["entry"].as_str().unwrap_or_default(),
                r["published"].as_str().unwrap_or_default(),
                r["computed"].as_str().unwrap_or_default()
            )
        })
        .collect()
}

pub fn field_section(sess: &Session, a: &FieldAnalysis, z: &VectorField) -> Value {
    let comps = z.components();
    let nabla: Map<String, Value> = a
        .nabla
        .iter()
        .enumerate()
        .map(|(i, row)| (format!("e{}", i + 1), Value::String(vector_text(row))))
        .collect();
    let tf = a.torse_forming.as_ref().map(|t| {
        json!({
            "is_torse_forming": t.is_torse_forming,
            "psi": t.psi.as_ref().map(s),
            "gamma": t.gamma.as_ref().map(|g| g.iter().map(s).collect::<Vec<_>>()),
            "gamma_of_rho": t.gamma_of_rho.as_ref().map(s),
            "subclass": t.subclass.label(),
        })
    });
    let mut out = json!({
        "components": comps.iter().map(s).collect::<Vec<_>>(),
        "vector": vector_text(comps),
        "nabla": nabla,
        "divergence": s(&a.divergence),
        "lie_metric": ring_matrix(&a.lie_metric),
        "lie_metric_trace": s(&sess.manifold.spec.trace(&a.lie_metric)),
        "conformal": {
            "class": a.conformal.label(),
            "sigma": a.conformal.sigma(sess.manifold.spec.dim()).as_ref().map(s),
        },
        "torse_forming": tf,
        "declared_gradient": a.declared_gradient,
    });
    if a.declared_gradient {
        out["laplacian_f"] = s(&a.divergence);
    }
    out
}

pub fn fields_section(sess: &Session) -> Value {
    let mut out = Map::new();
    for z in &sess.manifold.fields {
        let v = match analyze_field(&sess.manifold.spec, &sess.conn, z) {
            Ok(a) => field_section(sess, &a, z),
            Err(e) => json!({"error": e.to_string()}),
        };
        out.insert(z.name().to_string(), v);
    }
    Value::Object(out)
}

pub fn soliton(r: &SolitonReport) -> Value {
    let mut out = json!({
        "kind": r.kind.label(),
        "field": r.field,
        "omega": s(&r.omega),
        "mode": if r.solved { "solve" } else { "verify" },
        "classification": r.classification.label(),
        "trace_satisfied": r.trace_satisfied,
        "residual_is_zero": r.residual_is_zero,
        "residual_trace": s(&r.residual_trace),
        "residual": ring_matrix(&r.residual),
        "notes": r.notes,
    });
    match &r.params {
        SolitonParams::Omega(o) => out["Omega"] = s(o),
        SolitonParams::Eta { lambda, mu } => {
            out["Lambda"] = s(lambda);
            out["mu"] = s(mu);
        }
    }
    out
}

pub const KINDS: [SolitonKind; 3] = [SolitonKind::Rb, SolitonKind::StarRb, SolitonKind::EtaRb];

pub fn solitons_section(sess: &Session, omega: &Rational) -> Value {
    let mut rows = Vec::new();
    for z in &sess.manifold.fields {
        for kind in KINDS {
            let problem = SolitonProblem {
                kind,
                field: z.clone(),
                omega: omega.clone(),
                params: None,
            };
            rows.push(
                match soliton_solve_trace(&sess.manifold.spec, &sess.conn, &sess.bundle, &problem) {
                    Ok(r) => soliton(&r),
                    Err(e) => json!({
                        "kind": kind.label(),
                        "field": z.name(),
                        "omega": s(omega),
                        "error": e.to_string(),
                    }),
                },
            );
        }
    }
    Value::Array(rows)
}

pub fn theorem(t: &TheoremResult) -> Value {
    json!({
        "id": t.id,
        "statement": t.statement,
        "status": t.status.label(),
        "details": t.details,
        "notes": t.notes,
    })
}

/// Every flagged discrepancy: theorem notes and reference-table mismatches.
pub fn flagged_notes(sess: &Session, theorems: &[TheoremResult]) -> Vec<String> {
    let mut out = published_discrepancies(sess);
    for t in theorems {
        out.extend(t.notes.iter().map(|n| format!("{}: {n}", t.id)));
    }
    out
}

pub fn theorems_section(sess: &Session, theorems: &[TheoremResult], omega: &Rational) -> Value {
    json!({
        "omega": s(omega),
        "results": theorems.iter().map(theorem).collect::<Vec<_>>(),
        "flagged_notes": flagged_notes(sess, theorems),
    })
}

pub fn header(sess: &Session) -> Map<String, Value> {
    let spec = &sess.manifold.spec;
    let mut m = Map::new();
    m.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert(
        "manifold".into(),
        json!({
            "name": spec.name(),
            "dimension": spec.dim(),
            "xi": spec.xi() + 1,
            "fields": sess.manifold.field_names(),
        }),
    );
    m
}

pub fn full_report(sess: &Session, omega: &Rational, theorems: &[TheoremResult]) -> Value {
    let mut m = header(sess);
    m.insert("validation".into(), validation(&sess.validation()));
    m.insert("curvature".into(), curvature_section(sess));
    m.insert("fields".into(), fields_section(sess));
    m.insert("solitons".into(), solitons_section(sess, omega));
    m.insert("theorems".into(), theorems_section(sess, theorems, omega));
    Value::Object(m)
}

pub fn to_json(v: &Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("values serialize");
    out.push('\n');
    out
}

/// Indented `key: value` rendering of a report tree.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Array(a) if a.iter().all(|x| matches!(x, Value::String(_) | Value::Number(_)))
            && a.iter().map(|x| scalar_text(x).unwrap_or_default().len()).sum::<usize>() < 80 =>
        {
            let parts: Vec<String> = a.iter().filter_map(scalar_text).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        Value::Object(o) if o.is_empty() => Some("{}".into()),
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                match scalar_text(x) {
                    Some(t) => {
                        let _ = writeln!(out, "{pad}{k}: {t}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar_text(x) {
                    Some(t) => {
                        let _ = writeln!(out, "{pad}- {t}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other).unwrap_or_default());
        }
    }
}
