//! JSON and text renderings. Timings are left out so that output depends
//! only on the input and the seed.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use polardeg_core::infinity::TSingularity;
use polardeg_core::polar::{ConeTestResult, GenericValue};
use polardeg_core::projective::ProjectiveCluster;
use polardeg_core::rational::{primitive_integer_vector, to_fraction_string};
use polardeg_core::transversality::{AdmissibilityReport, SpecialPointReport, Verdict};
use polardeg_core::{LinearForm, Polynomial, Rational};

use crate::pipeline::{CheckStatus, DecompositionReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

fn integer(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(i) => json!(i),
        Err(_) => json!(v.to_string()),
    }
}

/// A projective point as a primitive integer vector.
pub fn point_json(p: &[Rational]) -> Value {
    match primitive_integer_vector(p) {
        Some(v) => Value::Array(v.iter().map(integer).collect()),
        None => Value::Null,
    }
}

pub fn point_text(p: &[Rational]) -> String {
    match primitive_integer_vector(p) {
        Some(v) => format!(
            "[{}]",
            v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(";")
        ),
        None => "[]".into(),
    }
}

fn form_text(form: &LinearForm, f: &Polynomial) -> String {
    form.to_polynomial(f.ring()).map(|p| p.to_string()).unwrap_or_default()
}

fn cluster_json(pc: &ProjectiveCluster) -> Value {
    json!({
        "point": pc.point().map_or(Value::Null, point_json),
        "degree": pc.cluster.degree,
        "multiplicity": pc.cluster.multiplicity,
        "ideal": pc.cluster.ideal.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

fn t_json(s: &TSingularity) -> Value {
    json!({
        "point": s.point.as_deref().map_or(Value::Null, point_json),
        "t": s.t.as_ref().map_or(Value::Null, |t| json!(to_fraction_string(t))),
        "degree": s.degree,
        "lambda": s.lambda,
    })
}

fn verdict_json(a: &AdmissibilityReport) -> Value {
    match &a.verdict {
        Verdict::Admissible => json!({"kind": "admissible", "polar_dimension": a.polar.dimension}),
        Verdict::FailsStar { layer, locus, dimension } => json!({
            "kind": "fails_star",
            "layer": layer,
            "locus_dimension": dimension,
            "locus": locus.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        }),
        Verdict::FailsPolar { dimension } => json!({"kind": "fails_polar", "polar_dimension": dimension}),
    }
}

fn verdict_text(a: &AdmissibilityReport) -> String {
    match &a.verdict {
        Verdict::Admissible => "admissible".into(),
        Verdict::FailsStar { layer, locus, dimension } => format!(
            "not admissible: fails (*) on layer {layer}, non-transversality locus of dimension {dimension}: <{}>",
            locus.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
        ),
        Verdict::FailsPolar { dimension } => {
            format!("not admissible: fails (ii), polar locus of dimension {dimension}")
        }
    }
}

fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Failed => "FAILED",
        CheckStatus::NotApplicable => "n/a",
    }
}

fn special_json(s: &SpecialPointReport) -> Value {
    Value::Array(s.special.iter().map(|p| point_json(p)).collect())
}

pub fn decomposition_json(r: &DecompositionReport) -> Value {
    let checks: serde_json::Map<String, Value> = r
        .checks
        .iter()
        .map(|c| (c.name.to_string(), json!({"status": status_str(c.status), "detail": c.detail})))
        .collect();
    let beta = r.beta.as_ref();
    let mut v = json!({
        "f": r.f.to_string(),
        "hyperplane": form_text(&r.hyperplane, &r.f),
        "pol": r.pol.value,
        "alpha": r.alpha,
        "alpha_points": r.alpha_points.iter().map(|a| {
            let mut c = cluster_json(&a.cluster);
            c["alpha"] = json!(a.alpha);
            c
        }).collect::<Vec<_>>(),
        "beta_aff": beta.map(|b| b.beta_aff),
        "beta_inf": beta.map(|b| b.beta_inf),
        "t_singularities": beta.map_or(Vec::new(), |b| b.t_singularities.iter().map(t_json).collect()),
        "special_points": special_json(&r.special),
        "admissible": r.admissible(),
        "verdict": verdict_json(&r.admissibility),
        "cone": r.cone.is_cone,
        "checks": checks,
        "seeds": {"base": r.seed, "pol": r.pol.seeds},
        "reduced": r.reduced,
        "status": if r.failed() { "FAILED" } else { "ok" },
    });
    if let Some(b) = beta {
        v["t_regular"] = Value::Array(b.t_regular.iter().map(t_json).collect());
        v["zero_fibre"] = Value::Array(
            b.zero_fibre.iter().map(|p| p.as_deref().map_or(Value::Null, point_json)).collect(),
        );
    }
    if !r.audit.is_empty() {
        v["audit"] = Value::Array(
            r.audit
                .iter()
                .map(|(name, basis)| json!({"ideal": name, "groebner_basis": basis.iter().map(|g| g.to_string()).collect::<Vec<_>>()}))
                .collect(),
        );
    }
    v
}

pub fn decomposition_text(r: &DecompositionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "f = {}{}", r.f, if r.reduced { "  (squarefree part of the input)" } else { "" });
    let _ = writeln!(s, "hyperplane: {} = 0", form_text(&r.hyperplane, &r.f));
    let _ = writeln!(s, "verdict: {}", verdict_text(&r.admissibility));
    let _ = writeln!(s, "cone: {}", if r.cone.is_cone { "yes" } else { "no" });
    let _ = writeln!(s, "pol = {}", r.pol.value);
    if let (Some(a), Some(b)) = (r.alpha, &r.beta) {
        let _ = writeln!(s, "alpha = {a}");
        for p in &r.alpha_points {
            let where_ = p.cluster.point().map_or_else(
                || format!("{} points of <{}>", p.cluster.cluster.degree, ideal_text(&p.cluster)),
                point_text,
            );
            let _ = writeln!(s, "  alpha at {where_} = {}", p.alpha);
        }
        let _ = writeln!(s, "beta = {} (affine {}, at infinity {})", b.beta_total(), b.beta_aff, b.beta_inf);
        for t in &b.t_singularities {
            let _ = writeln!(s, "  t-singularity {}", t_text(t));
        }
        for t in &b.t_regular {
            let _ = writeln!(s, "  candidate with lambda 0: {}", t_text(t));
        }
        if !b.zero_fibre.is_empty() {
            let pts: Vec<String> = b
                .zero_fibre
                .iter()
                .map(|p| p.as_deref().map_or("(irrational)".into(), point_text))
                .collect();
            let _ = writeln!(s, "  zero fibre at infinity (not counted): {}", pts.join(", "));
        }
        let _ = writeln!(s, "{} = {} + {}", r.pol.value, a, b.beta_total());
    }
    let _ = writeln!(s, "special points: {}", special_text(&r.special));
    for c in &r.checks {
        let _ = writeln!(s, "check {}: {} ({})", c.name, status_str(c.status), c.detail);
    }
    let _ = writeln!(s, "seed: {}", r.seed);
    if !r.audit.is_empty() {
        let _ = writeln!(s, "FAILED: Groebner bases of the intermediate ideals follow");
        for (name, basis) in &r.audit {
            let _ = writeln!(s, "  {name}:");
            for g in basis {
                let _ = writeln!(s, "    {g}");
            }
        }
    }
    s
}

fn ideal_text(pc: &ProjectiveCluster) -> String {
    pc.cluster.ideal.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

fn t_text(t: &TSingularity) -> String {
    let p = t.point.as_deref().map_or("(irrational)".into(), point_text);
    let tv = t.t.as_ref().map_or("(irrational)".into(), to_fraction_string);
    if t.degree > 1 {
        format!("{p} t = {tv} lambda = {} on {} points", t.lambda, t.degree)
    } else {
        format!("{p} t = {tv} lambda = {}", t.lambda)
    }
}

fn special_text(s: &SpecialPointReport) -> String {
    if s.cone {
        return "none examined (cone)".into();
    }
    if s.special.is_empty() {
        return "none".into();
    }
    s.special.iter().map(|p| point_text(p)).collect::<Vec<_>>().join(", ")
}

pub fn pol_json(pol: &GenericValue, reduced: bool, seed: u64) -> Value {
    json!({"pol": pol.value, "seeds": {"base": seed, "pol": pol.seeds}, "reduced": reduced})
}

pub fn pol_text(pol: &GenericValue, reduced: bool) -> String {
    format!(
        "pol = {}{}\n",
        pol.value,
        if reduced { "  (squarefree part of the input)" } else { "" }
    )
}

pub fn special_points_json(s: &SpecialPointReport) -> Value {
    json!({
        "cone": s.cone,
        "special_points": special_json(s),
        "filtration_complete": s.filtration_complete,
        "candidates": s.candidates.iter().map(|c| {
            let mut v = cluster_json(&c.cluster);
            v["alpha"] = c.alpha.as_ref().map_or(Value::Null, |a| json!(a.value));
            v
        }).collect::<Vec<_>>(),
    })
}

pub fn special_points_text(s: &SpecialPointReport) -> String {
    let mut out = format!("special points: {}\n", special_text(s));
    for c in &s.candidates {
        let where_ = c.cluster.point().map_or_else(
            || format!("{} points of <{}>", c.cluster.cluster.degree, ideal_text(&c.cluster)),
            point_text,
        );
        let a = c.alpha.as_ref().map_or("not evaluated".into(), |a| a.value.to_string());
        let _ = writeln!(out, "  candidate {where_}: alpha_p(V) = {a}");
    }
    if !s.filtration_complete {
        out.push_str("  warning: the singular filtration was cut short\n");
    }
    out
}

pub fn cone_json(c: &ConeTestResult) -> Value {
    json!({
        "cone": c.is_cone,
        "apex_space": c.apex_space.iter().map(|v| point_json(v)).collect::<Vec<_>>(),
    })
}

pub fn cone_text(c: &ConeTestResult) -> String {
    if !c.is_cone {
        return "not a cone\n".into();
    }
    let apex: Vec<String> = c.apex_space.iter().map(|v| point_text(v)).collect();
    format!("cone, apex spanned by {}\n", apex.join(", "))
}

pub fn admissibility_json(a: &AdmissibilityReport, f: &Polynomial) -> Value {
    let nt = &a.non_transversality;
    json!({
        "hyperplane": form_text(&a.non_transversality.hyperplane, f),
        "admissible": a.is_admissible(),
        "verdict": verdict_json(a),
        "non_transversality_dimension": nt.dimension,
        "non_transversality_points": nt.points.as_ref().map(|ps| ps.iter().map(cluster_json).collect::<Vec<_>>()),
        "polar_dimension": a.polar.dimension,
    })
}

pub fn admissibility_text(a: &AdmissibilityReport, f: &Polynomial) -> String {
    let mut s = format!(
        "hyperplane: {} = 0\nverdict: {}\n",
        form_text(&a.non_transversality.hyperplane, f),
        verdict_text(a)
    );
    if let Some(ps) = &a.non_transversality.points {
        let pts: Vec<String> = ps
            .iter()
            .map(|p| p.point().map_or_else(|| format!("{} points of <{}>", p.cluster.degree, ideal_text(p)), point_text))
            .collect();
        let _ = writeln!(s, "non-transversality points: {}", if pts.is_empty() { "none".into() } else { pts.join(", ") });
    }
    let _ = writeln!(s, "polar locus dimension: {}", a.polar.dimension);
    s
}

/// Pretty JSON with a trailing newline.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are plain JSON");
    s.push('\n');
    s
}
