//! JSON forms for expansions and check reports.
//!
//! Coefficients are emitted as exact strings (decimal integers or
//! `num/den`), ascending in the degree of `q`. Key order inside objects is
//! alphabetical (serde_json's default map), so identical inputs serialize
//! identically; the `ms` timing field is the only non-reproducible value.

use serde_json::{json, Map, Value};

use crate::configsearch::{Configuration, Conjecture4Report, GuessReport};
use crate::foulkes::{FoulkesReport, ThetaReport};
use crate::hepoly::HePoly;
use crate::qpoly::QPoly;
use crate::symfunc::{SchurExpansion, SymFunc};

pub fn qpoly_json(p: &QPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn schur_json(e: &SchurExpansion) -> Value {
    let degree = match e.degree() {
        Some(d) => json!(d),
        None => Value::Null,
    };
    let terms: Vec<Value> = e
        .terms()
        .map(|(p, c)| {
            json!({
                "partition": p.to_string(),
                "coeff": qpoly_json(c),
            })
        })
        .collect();
    json!({ "degree": degree, "terms": terms })
}

pub fn symfunc_json(f: &SymFunc) -> Value {
    let degree = match f.degree() {
        Some(d) => json!(d),
        None => Value::Null,
    };
    let terms: Vec<Value> = f
        .terms()
        .map(|(p, c)| {
            json!({
                "partition": p.to_string(),
                "coeff": qpoly_json(c),
            })
        })
        .collect();
    json!({ "basis": "p", "degree": degree, "terms": terms })
}

pub fn foulkes_report_json(r: &FoulkesReport, include_expansion: bool) -> Value {
    let mut params = Map::new();
    for (k, v) in &r.params {
        params.insert((*k).to_string(), json!(v));
    }
    let witness = match &r.witness {
        Some((p, c)) => json!({ "partition": p.to_string(), "coeff": qpoly_json(c) }),
        None => Value::Null,
    };
    json!({
        "kind": r.kind,
        "params": Value::Object(params),
        "positive": r.positive,
        "expansion": if include_expansion { schur_json(&r.expansion) } else { Value::Null },
        "witness": witness,
        "ms": r.ms,
    })
}

pub fn configuration_json(c: &Configuration, include_expansions: bool) -> Value {
    json!({
        "bracket": c.bracket(),
        "alpha": c.alpha.to_string(),
        "beta": c.beta.to_string(),
        "gamma": c.gamma.to_string(),
        "delta": c.delta.to_string(),
        "n": c.n,
        "is_foulkes": c.is_foulkes,
        "passed_e_condition": c.passed_e_condition,
        "is_q_foulkes": c.is_q_foulkes,
        "classical_difference": if include_expansions { schur_json(&c.classical_difference) } else { Value::Null },
        "q_difference": match (&c.q_difference, include_expansions) {
            (Some(d), true) => schur_json(d),
            _ => Value::Null,
        },
    })
}

pub fn hepoly_json(p: &HePoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|((i, j, k), c)| {
            json!({
                "h1": i, "h2": j, "e2": k,
                "coeff": c.to_string(),
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn theta_report_json(r: &ThetaReport) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "b": row.b,
                "direct": hepoly_json(&row.direct),
                "recurrence": hepoly_json(&row.recurrence),
                "bridge": row.bridge.as_ref().map(hepoly_json).unwrap_or(Value::Null),
                "recurrence_agrees": row.recurrence_agrees,
                "bridge_agrees": row.bridge_agrees,
            })
        })
        .collect();
    json!({ "kind": "theta", "a": r.a, "rows": rows })
}

pub fn conjecture4_json(r: &Conjecture4Report) -> Value {
    let one_sided: Vec<Value> = r
        .one_sided
        .iter()
        .map(|o| {
            json!({
                "alpha": o.alpha.to_string(),
                "beta": o.beta.to_string(),
                "gamma": o.gamma.to_string(),
                "delta": o.delta.to_string(),
                "classical_strict": o.classical_strict,
                "q_strict": o.q_strict,
            })
        })
        .collect();
    json!({
        "kind": "conjecture4",
        "n": r.n,
        "e_classes": r.e_classes,
        "pairs_checked": r.pairs_checked,
        "holds": r.holds(),
        "one_sided": one_sided,
    })
}

pub fn guess_report_json(r: &GuessReport) -> Value {
    json!({
        "kind": "guess-patterns",
        "params": { "a": r.a, "b": r.b, "c": r.c, "d": r.d, "k": r.k },
        "q_config": r.q_config,
        "outer_swap_positive": r.outer_swap_positive,
        "power_form_positive": r.power_form_positive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ptn;
    use crate::qpoly::rat_frac;
    use crate::symfunc::SchurExpansion;

    #[test]
    fn exact_coefficient_strings() {
        let p = QPoly::from_coeffs(vec![rat_frac(1, 2), rat_frac(3, 1)]);
        assert_eq!(qpoly_json(&p), serde_json::json!(["1/2", "3"]));
    }

    #[test]
    fn schur_json_shape() {
        let e = SchurExpansion::from_terms([(ptn(&[3, 2]), QPoly::from_ints(&[0, 1]))]);
        let v = schur_json(&e);
        assert_eq!(v["degree"], 5);
        assert_eq!(v["terms"][0]["partition"], "[3,2]");
        assert_eq!(v["terms"][0]["coeff"], serde_json::json!(["0", "1"]));
        let mixed = e.add(&SchurExpansion::from_terms([(
            ptn(&[2]),
            QPoly::one(),
        )]));
        assert_eq!(schur_json(&mixed)["degree"], Value::Null);
    }
}
