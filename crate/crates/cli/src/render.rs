//! Text and JSON rendering of engine objects.
//!
//! Ring integers are emitted as decimal strings in JSON; exponents and
//! 1-based basis indices are plain numbers.

use pirgb::division::{TraceAction, TraceStep};
use pirgb::groebner::CriticalKind;
use pirgb::text::render_element;
use pirgb::{BigFreeModule, BigModuleElement, BigPolynomial, Int, ModuleOrder, ResolutionStatus, RingElement, Term};
use serde_json::{json, Value};

pub fn coeff_json<I: Int>(c: &RingElement<I>) -> Value {
    Value::Array(c.components().iter().map(|v| Value::String(v.to_string())).collect())
}

fn term_json<I: Int>(t: &Term<I>) -> Value {
    json!({
        "coeff": coeff_json(&t.coeff),
        "exponents": t.mono.exponents(),
        "basis": t.basis + 1,
    })
}

/// `{"text": ..., "terms": [...]}` with terms in decreasing order.
pub fn element_json(m: &BigFreeModule, f: &BigModuleElement) -> Value {
    json!({
        "text": render_element(m, f),
        "terms": f.terms().iter().map(term_json).collect::<Vec<_>>(),
    })
}

pub fn elements_json(m: &BigFreeModule, fs: &[BigModuleElement]) -> Value {
    Value::Array(fs.iter().map(|f| element_json(m, f)).collect())
}

/// The rank-one module used to print polynomial coefficients.
pub fn scalar_module(m: &BigFreeModule) -> BigFreeModule {
    m.sibling(1, ModuleOrder::pot(m.base_order().clone()), "e")
        .expect("rank one over a valid ring")
}

pub fn poly_text(m: &BigFreeModule, p: &BigPolynomial) -> String {
    let s = scalar_module(m);
    render_element(&s, &s.from_coordinates(std::slice::from_ref(p)))
}

pub fn leading_text(m: &BigFreeModule, f: &BigModuleElement) -> String {
    match f.leading_term() {
        Some(t) => render_element(m, &m.monomial_element(t.coeff.clone(), t.mono.clone(), t.basis)),
        None => "0".to_string(),
    }
}

fn mono_text(m: &BigFreeModule, step: &TraceStep) -> String {
    render_element(m, &m.monomial_element(m.ring().one(), step.mono.clone(), step.basis))
}

pub fn trace_text(m: &BigFreeModule, trace: &[TraceStep]) -> Vec<String> {
    trace
        .iter()
        .map(|s| match &s.action {
            TraceAction::Reduced { indicators } => {
                let used: Vec<String> = indicators
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| **b)
                    .map(|(j, _)| format!("f{}", j + 1))
                    .collect();
                format!("step {}: {} reduced by {}", s.step, mono_text(m, s), used.join(" "))
            }
            TraceAction::ToRemainder => format!("step {}: {} to remainder", s.step, mono_text(m, s)),
        })
        .collect()
}

pub fn trace_json(trace: &[TraceStep]) -> Value {
    Value::Array(
        trace
            .iter()
            .map(|s| match &s.action {
                TraceAction::Reduced { indicators } => json!({
                    "step": s.step,
                    "exponents": s.mono.exponents(),
                    "basis": s.basis + 1,
                    "action": "reduced",
                    "indicators": indicators,
                }),
                TraceAction::ToRemainder => json!({
                    "step": s.step,
                    "exponents": s.mono.exponents(),
                    "basis": s.basis + 1,
                    "action": "to_remainder",
                }),
            })
            .collect(),
    )
}

pub fn kind_label(kind: &CriticalKind) -> String {
    match kind {
        CriticalKind::Pair(a, b) => format!("r{}_{}", a + 1, b + 1),
        CriticalKind::Annihilator(a) => format!("r{}_{}", a + 1, a + 1),
    }
}

pub fn kind_json(kind: &CriticalKind) -> Value {
    match kind {
        CriticalKind::Pair(a, b) => json!({"kind": "pair", "indices": [a + 1, b + 1]}),
        CriticalKind::Annihilator(a) => json!({"kind": "annihilator", "indices": [a + 1, a + 1]}),
    }
}

pub fn status_text(status: &ResolutionStatus) -> String {
    match status {
        ResolutionStatus::Finite { length } => format!("finite (length {length})"),
        ResolutionStatus::Truncated { max_length } => format!("truncated (max length {max_length})"),
        ResolutionStatus::Periodic { start, period } => format!("periodic (start {start}, period {period})"),
    }
}

pub fn status_json(status: &ResolutionStatus) -> Value {
    match status {
        ResolutionStatus::Finite { length } => json!({"kind": "finite", "length": length}),
        ResolutionStatus::Truncated { max_length } => json!({"kind": "truncated", "max_length": max_length}),
        ResolutionStatus::Periodic { start, period } => json!({"kind": "periodic", "start": start, "period": period}),
    }
}

pub fn ring_json(m: &BigFreeModule) -> Value {
    json!({
        "moduli": m.ring().moduli().iter().map(|n| n.to_string()).collect::<Vec<_>>(),
        "vars": m.vars(),
        "rank": m.rank(),
    })
}
