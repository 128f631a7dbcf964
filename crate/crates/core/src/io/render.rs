//! JSON and plain-text renderings of verification results.

use serde_json::{json, Value};

use crate::linalg::{render_with, Space, Vector};
use crate::operators::HierarchyReport;
use crate::report::{Counterexample, IdentityResult, Status, VerificationReport};
use crate::scalar::format_scalar;
use crate::structures::DefectTable;

use super::SCHEMA;

fn coords_value(names: &[String], v: &Vector) -> Value {
    Value::Array(v.iter_nonzero().map(|(i, c)| json!([names[i], format_scalar(c)])).collect())
}

fn counterexample_value(c: &Counterexample) -> Value {
    json!({
        "tuple": c.labels,
        "lhs": coords_value(&c.coords, &c.lhs),
        "rhs": coords_value(&c.coords, &c.rhs),
    })
}

fn identity_value(r: &IdentityResult) -> Value {
    let mut v = json!({ "name": r.name, "holds": r.holds(), "tuples": r.tuples });
    if let Some(c) = &r.counterexample {
        v["counterexample"] = counterexample_value(c);
    }
    v
}

fn section_value(r: &VerificationReport) -> Value {
    json!({
        "subject": r.subject,
        "status": r.status().tag(),
        "notes": r.notes,
        "identities": r.results.iter().map(identity_value).collect::<Vec<_>>(),
    })
}

fn overall(reports: &[VerificationReport]) -> Status {
    if reports.iter().all(VerificationReport::holds) {
        Status::Holds
    } else {
        Status::Fails
    }
}

/// A report document with one section per report.
pub fn reports_value(reports: &[VerificationReport]) -> Value {
    json!({
        "schema": SCHEMA,
        "doc": "report",
        "version": env!("CARGO_PKG_VERSION"),
        "status": overall(reports).tag(),
        "sections": reports.iter().map(section_value).collect::<Vec<_>>(),
    })
}

pub fn report_value(r: &VerificationReport) -> Value {
    reports_value(std::slice::from_ref(r))
}

pub fn hierarchy_value(h: &HierarchyReport) -> Value {
    let mut v = reports_value(&h.sections());
    v["powers"] = json!(h.powers);
    v
}

/// Nonzero rows of a defect table, each row naming its basis triple.
pub fn defect_table_value(space: &Space, t: &DefectTable) -> Value {
    let names = space.names();
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|(triple, vals)| {
            let values: serde_json::Map<String, Value> = t
                .maps
                .iter()
                .zip(vals)
                .map(|(m, v)| (m.clone(), coords_value(names, v)))
                .collect();
            json!({ "triple": triple.map(|i| names[i].clone()), "values": values })
        })
        .collect();
    json!({ "schema": SCHEMA, "doc": "table", "maps": t.maps, "rows": rows })
}

/// Human-readable summary: one line per identity, with the failing tuple
/// and both sides for failures.
pub fn to_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("{}: {}\n", r.subject, r.status().tag()));
        for n in &r.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        for id in &r.results {
            match &id.counterexample {
                None => out.push_str(&format!("  ok    {} ({} tuples)\n", id.name, id.tuples)),
                Some(c) => {
                    out.push_str(&format!(
                        "  FAIL  {} at ({}): lhs = {}, rhs = {}\n",
                        id.name,
                        c.labels.join(", "),
                        render_with(&c.coords, &c.lhs),
                        render_with(&c.coords, &c.rhs),
                    ));
                }
            }
        }
    }
    out.push_str(&format!("overall: {}\n", overall(reports).tag()));
    out
}
