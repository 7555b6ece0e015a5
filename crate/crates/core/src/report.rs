//! JSON reports. Every report is one object whose first key is `"kind"`;
//! keys appear in the order they are inserted below. Floating values are
//! plain JSON numbers, exact values are `"num/den"` strings under keys ending
//! in `_exact`.

use serde_json::{json, Map, Value};

use crate::closed_forms::{Mode, ProductCcReport, SrgParams};
use crate::exact::{fraction_string, Exact};
use crate::io::GraphSource;
use crate::triangles::{local_exact_from_counts, CcReport};
use crate::verify::{Measured, VerifyOutcome};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub exact: bool,
    pub per_vertex: bool,
}

fn source_json(s: &GraphSource) -> Value {
    let mut m = Map::new();
    m.insert("origin".into(), json!(s.origin.to_string()));
    m.insert("n".into(), json!(s.graph.n()));
    m.insert("edges".into(), json!(s.graph.edge_count()));
    if let Some(map) = &s.relabel_map {
        m.insert("relabel_map".into(), json!(map));
    }
    Value::Object(m)
}

fn exact_json(x: &Exact) -> Value {
    json!(fraction_string(x))
}

pub fn cc_json(
    source: &GraphSource,
    report: &CcReport,
    global_exact: Option<&Exact>,
    opts: ReportOptions,
) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!("cc"));
    m.insert("graph".into(), source_json(source));
    m.insert("triangle_total".into(), json!(report.triangle_total));
    m.insert("global_cc".into(), json!(report.global_cc));
    if opts.exact {
        if let Some(x) = global_exact {
            m.insert("global_cc_exact".into(), exact_json(x));
        }
    }
    if opts.per_vertex {
        let degrees: Vec<usize> = source.graph.degrees().collect();
        m.insert("degrees".into(), json!(degrees));
        m.insert("triangles".into(), json!(report.triangles));
        m.insert("local_cc".into(), json!(report.local_cc));
        if opts.exact {
            let local: Vec<String> = degrees
                .iter()
                .zip(&report.triangles)
                .map(|(&d, &t)| fraction_string(&local_exact_from_counts(d, t)))
                .collect();
            m.insert("local_cc_exact".into(), json!(local));
        }
    }
    Value::Object(m)
}

fn mode_str(mode: Mode) -> &'static str {
    match mode {
        Mode::Implicit => "implicit",
        Mode::Explicit => "explicit",
        Mode::Both => "both",
    }
}

pub fn product_cc_json(g: &GraphSource, h: &GraphSource, mode: Mode, r: &ProductCcReport) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!("product_cc"));
    m.insert("g".into(), source_json(g));
    m.insert("h".into(), source_json(h));
    m.insert("mode".into(), json!(mode_str(mode)));
    m.insert("implicit_global_cc".into(), json!(r.implicit_global_cc));
    m.insert("explicit_global_cc".into(), json!(r.explicit_global_cc));
    m.insert("abs_diff".into(), json!(r.abs_diff));
    m.insert("upper_bound".into(), json!(r.upper_bound));
    m.insert("upper_applicable".into(), json!(r.upper_applicable));
    m.insert("upper_ok".into(), json!(r.upper_ok));
    m.insert("lower_bound".into(), json!(r.lower_bound));
    m.insert("lower_ok".into(), json!(r.lower_ok));
    if let Some(e) = &r.exact {
        m.insert(
            "implicit_global_cc_exact".into(),
            exact_json(&e.implicit_global_cc),
        );
        m.insert(
            "explicit_global_cc_exact".into(),
            e.explicit_global_cc
                .as_ref()
                .map_or(Value::Null, exact_json),
        );
        m.insert("upper_bound_exact".into(), exact_json(&e.upper_bound));
        m.insert(
            "lower_bound_exact".into(),
            e.lower_bound.as_ref().map_or(Value::Null, exact_json),
        );
    }
    Value::Object(m)
}

pub fn srg_json(
    source: &GraphSource,
    params: Option<&SrgParams>,
    cc: Option<(f64, Exact)>,
    exact: bool,
) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!("srg"));
    m.insert("graph".into(), source_json(source));
    m.insert("is_srg".into(), json!(params.is_some()));
    if let Some(p) = params {
        m.insert("n".into(), json!(p.n));
        m.insert("d".into(), json!(p.d));
        m.insert("mu1".into(), json!(p.mu1));
        m.insert("mu2".into(), json!(p.mu2));
    }
    if let Some((value, x)) = cc {
        m.insert("srg_cc".into(), json!(value));
        if exact {
            m.insert("srg_cc_exact".into(), exact_json(&x));
        }
    }
    Value::Object(m)
}

pub fn verify_json(g: &GraphSource, h: &GraphSource, outcome: &VerifyOutcome) -> Value {
    let checks: Vec<Value> = outcome
        .checks
        .iter()
        .map(|c| {
            let mut values = Map::new();
            for (k, v) in &c.values {
                let v = match v {
                    Measured::Float(x) => json!(x),
                    Measured::Count(x) => json!(x),
                    Measured::Text(s) => json!(s),
                };
                values.insert((*k).into(), v);
            }
            let mut m = Map::new();
            m.insert("name".into(), json!(c.name));
            m.insert("status".into(), json!(c.status.as_str()));
            m.insert("detail".into(), json!(c.detail));
            m.insert("values".into(), Value::Object(values));
            m.insert("tolerance".into(), json!(c.tolerance));
            Value::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("kind".into(), json!("verify"));
    m.insert("g".into(), source_json(g));
    m.insert("h".into(), source_json(h));
    m.insert("passed".into(), json!(outcome.passed()));
    m.insert("checks".into(), Value::Array(checks));
    Value::Object(m)
}

pub fn write_report(report: &Value) -> String {
    serde_json::to_string_pretty(report).expect("reports contain only JSON-safe values")
}
