//! Report assembly: one internal value rendered either as text or as a
//! stable JSON document (keys `verdict`, `fibers`, `certificate`,
//! `witnesses` are always present).

use crate::bundle::{ClosureReport, FiberReport, FiberStatus, GlobalCertificate, Provenance, Verdict};
use crate::ideal::{Dimension, Ideal};
use crate::poly::Polynomial;
use serde_json::{json, Value};
use std::fmt::Write as _;

/// Reduced basis of a witness ideal, falling back to the raw generators if
/// the basis computation hits a resource ceiling.
fn witness_basis(w: &Ideal) -> Vec<Polynomial> {
    match w.groebner_basis() {
        Ok(gb) => gb.to_vec(),
        Err(_) => w.generators().to_vec(),
    }
}

fn dim_value(d: Dimension) -> Value {
    match d {
        Dimension::Empty => json!("empty"),
        Dimension::Dim(n) => json!(n),
    }
}

fn dim_text(d: Dimension) -> String {
    match d {
        Dimension::Empty => "empty".to_string(),
        Dimension::Dim(n) => n.to_string(),
    }
}

fn ideal_text(gens: &[crate::poly::Polynomial]) -> String {
    if gens.is_empty() {
        return "<0>".to_string();
    }
    let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("<{}>", parts.join(", "))
}

fn fiber_value(f: &FiberReport) -> Value {
    let provenance = match &f.point.provenance {
        Provenance::Declared => json!("declared"),
        Provenance::Parametrized { param, value } => {
            json!({ "param": param, "value": value.to_string() })
        }
    };
    json!({
        "point": f.point.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "provenance": provenance,
        "fiber_gb": f.fiber_gb.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "fiber_dim": dim_value(f.fiber_dim),
        "tangent_dim": f.tangent_dim,
        "cone_ok": f.cone_ok,
        "reduced": f.reduced,
        "status": f.status.to_string(),
        "tangent_basis": f.tangent_basis.iter()
            .map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn certificate_value(c: &GlobalCertificate) -> Value {
    json!({
        "rank_upper_ok": c.rank_upper_ok,
        "rank_lower_ok": c.rank_lower_ok,
        "kernel_match_ok": c.kernel_match_ok,
        "witness": c.witness.as_ref().map(|w| {
            witness_basis(w).iter().map(|g| g.to_string()).collect::<Vec<_>>()
        }),
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    let kind = match v.kind {
        crate::bundle::VerdictKind::Subbundle => "Subbundle",
        crate::bundle::VerdictKind::NotSubbundle => "NotSubbundle",
        crate::bundle::VerdictKind::HypothesisViolated => "HypothesisViolated",
        crate::bundle::VerdictKind::Inconclusive => "Inconclusive",
    };
    let witnesses: Vec<Value> = v
        .fibers
        .iter()
        .filter(|f| f.status != FiberStatus::ReducedLinear)
        .map(|f| {
            json!({
                "point": f.point.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "status": f.status.to_string(),
                "ideal": f.fiber_gb.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "verdict": kind,
        "narrative": v.narrative,
        "fibers": v.fibers.iter().map(fiber_value).collect::<Vec<_>>(),
        "certificate": certificate_value(&v.certificate),
        "witnesses": witnesses,
    })
}

fn fiber_text(out: &mut String, f: &FiberReport) {
    let _ = writeln!(
        out,
        "fibre at {}: ideal {}, dim {}, tangent dim {}, status {}{}",
        f.point,
        ideal_text(&f.fiber_gb),
        dim_text(f.fiber_dim),
        f.tangent_dim,
        f.status,
        if f.reduced { " (reduced)" } else { "" },
    );
}

pub fn verdict_text(v: &Verdict, notices: &[String]) -> String {
    let mut out = String::new();
    for n in notices {
        let _ = writeln!(out, "note: {n}");
    }
    for f in &v.fibers {
        fiber_text(&mut out, f);
    }
    let _ = writeln!(
        out,
        "certificate: rank_upper_ok={} rank_lower_ok={} kernel_match_ok={}",
        v.certificate.rank_upper_ok, v.certificate.rank_lower_ok, v.certificate.kernel_match_ok
    );
    if let Some(w) = &v.certificate.witness {
        let _ = writeln!(out, "rank-drop witness ideal: {}", ideal_text(&witness_basis(w)));
    }
    let _ = writeln!(out, "VERDICT: {} ({})", v.kind, v.narrative);
    out
}

pub fn single_fiber_json(f: &FiberReport) -> Value {
    json!({
        "verdict": Value::Null,
        "fibers": [fiber_value(f)],
        "certificate": Value::Null,
        "witnesses": [],
    })
}

pub fn single_fiber_text(f: &FiberReport) -> String {
    let mut out = String::new();
    fiber_text(&mut out, f);
    out
}

pub fn kernel_check_json(ok: bool) -> Value {
    json!({
        "verdict": Value::Null,
        "fibers": [],
        "certificate": Value::Null,
        "witnesses": [],
        "kernel_check": { "verified": ok },
    })
}

pub fn kernel_check_text(ok: bool) -> String {
    if ok {
        "kernel presentation VERIFIED\n".to_string()
    } else {
        "kernel presentation FAILED\n".to_string()
    }
}

pub fn closure_json(r: &ClosureReport) -> Value {
    json!({
        "verdict": Value::Null,
        "fibers": [],
        "certificate": Value::Null,
        "witnesses": [],
        "closure": {
            "ideal": r.closure.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "fibers_match": r.fibers_match,
            "note": r.note,
        },
    })
}

pub fn closure_text(r: &ClosureReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "closure ideal: {}", ideal_text(r.closure.generators()));
    let _ = writeln!(out, "fibres match: {}", r.fibers_match);
    if let Some(n) = &r.note {
        let _ = writeln!(out, "note: {n}");
    }
    out
}
