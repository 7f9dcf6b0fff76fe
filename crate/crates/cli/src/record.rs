//! JSON and CSV serialization. Rationals are strings `p/q`, or plain
//! integers when whole; never floats.

use mstfort::approx::DiscreteSolution;
use mstfort::oracle::DecompositionTrace;
use mstfort::raise::{BreakpointCurve, Terminal, Trace};
use mstfort::strength::Tolerance;
use mstfort::{Perturbation, Rational, WeightedGraph};
use num_traits::Zero;
use serde_json::{json, Value};

pub fn rational(q: &Rational) -> Value {
    Value::String(mstfort::rational::format(q))
}

/// Non-zero amounts as `[edge_id, amount]` pairs.
pub fn perturbation_json(x: &Perturbation) -> Value {
    x.amounts()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| json!([i, rational(a)]))
        .collect()
}

pub fn curve_json(c: &BreakpointCurve) -> Value {
    let points: Vec<Value> = c
        .points
        .iter()
        .map(|p| json!({"budget": rational(&p.budget), "mst_weight": rational(&p.mst_weight), "slope": rational(&p.slope)}))
        .collect();
    let terminal = match c.terminal {
        Terminal::Unbounded => "unbounded",
        Terminal::Capped => "capped",
        Terminal::Truncated => "truncated",
    };
    json!({"points": points, "terminal": terminal, "limit": c.limit.as_ref().map_or(Value::Null, rational)})
}

pub fn curve_csv(c: &BreakpointCurve) -> String {
    let mut out = String::from("budget,mst_weight,slope\n");
    for p in &c.points {
        out.push_str(&format!(
            "{},{},{}\n",
            mstfort::rational::format(&p.budget),
            mstfort::rational::format(&p.mst_weight),
            mstfort::rational::format(&p.slope)
        ));
    }
    out
}

pub fn trace_json(t: &Trace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            json!({
                "set": s.certificate.set_s,
                "amount": rational(&s.amount),
                "pivot": rational(&s.certificate.pivot),
                "coverage": s.certificate.coverage(),
                "set_cost": s.certificate.cost,
                "budget_before": rational(&s.budget_before),
                "budget_after": rational(&s.budget_after),
                "tolerance": match s.tolerance {
                    Tolerance::Finite(t) => json!(t),
                    Tolerance::Infinite => json!("inf"),
                },
            })
        })
        .collect();
    json!({"steps": steps})
}

pub fn solution_json(g: &WeightedGraph, s: &DiscreteSolution) -> Value {
    let base = mstfort::mst_weight(g, &Perturbation::zero(g));
    let mut record = json!({
        "initial_mst": rational(&base),
        "increase": s.achieved_increase.to_string(),
        "cost": s.cost.to_string(),
        "perturbation": perturbation_json(&s.perturbation),
    });
    if let Some(b) = &s.continuous_bound {
        record["continuous_bound"] = rational(b);
    }
    if let Some(r) = &s.rounding {
        record["rounding"] = json!({
            "prior_increase": r.prior_increase.to_string(),
            "residual": rational(&r.residual),
            "remaining_increase": rational(&r.remaining_increase),
            "shores_lifted": r.shores_lifted,
            "lifted_union": r.lifted_union,
        });
    }
    record
}

pub fn decomposition_json(d: &DecompositionTrace) -> Value {
    let list = |v: &[Rational]| v.iter().map(rational).collect::<Vec<_>>();
    json!({
        "breakpoints": list(&d.breakpoints),
        "betas": list(&d.betas),
        "deltas": list(&d.deltas),
        "refined": d.refined.iter().map(|r| list(r)).collect::<Vec<_>>(),
        "segments": d.segments.iter().map(|s| json!({
            "interval": s.interval,
            "phase": s.phase.map(|p| format!("{p:?}").to_lowercase()),
            "start": rational(&s.start),
            "end": rational(&s.end),
            "set": s.set,
            "amount": rational(&s.amount),
        })).collect::<Vec<_>>(),
        "cap_events": d.cap_events.iter().map(|(b, e)| json!([rational(b), e])).collect::<Vec<_>>(),
    })
}

/// `verdict` is `None` when the instance exceeded the oracle's size guard.
pub fn check_json(oracle: &str, verdict: &Option<Result<String, String>>) -> Value {
    match verdict {
        None => {
            json!({"oracle": oracle, "status": "skipped", "detail": "instance exceeds the oracle size guard"})
        }
        Some(Ok(d)) => json!({"oracle": oracle, "status": "pass", "detail": d}),
        Some(Err(d)) => json!({"oracle": oracle, "status": "violated", "detail": d}),
    }
}
