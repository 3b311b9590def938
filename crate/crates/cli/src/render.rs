//! Text tables and JSON documents. JSON always has the top-level keys
//! `type`, `field`, `classes` and `verdicts`; rationals are `"p/q"` strings
//! and field elements are arrays of them (coefficients of `1, γ, γ², …`).

use std::fmt::Write;

use coxinv_core::exactfield::poly::Q;
use coxinv_core::exactfield::{Field, Scalar};
use coxinv_core::fvcharacters::{ClassData, VirtualCharacter};
use coxinv_core::normalizers::ClassVerdict;
use coxinv_core::rootsystem::{format_components, CoxeterType, RootSystem};
use coxinv_core::verify::TypeReport;
use serde_json::{json, Value};

fn rational(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn scalar(s: &Scalar) -> Value {
    Value::Array(s.coeffs().iter().map(|c| Value::String(rational(c))).collect())
}

fn field_json(f: &Field) -> Value {
    json!({
        "descriptor": f.descriptor(),
        "minpoly": f.minpoly().coeffs().iter().map(rational).collect::<Vec<_>>(),
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn header(out: &mut String, rs: &RootSystem) {
    writeln!(out, "type:  {}", rs.ctype()).unwrap();
    writeln!(out, "field: {}", rs.field().descriptor()).unwrap();
}

pub fn roots_text(rs: &RootSystem) -> String {
    let mut out = String::new();
    header(&mut out, rs);
    writeln!(out, "roots: {} ({} positive)", rs.num_roots(), rs.num_positive()).unwrap();
    writeln!(out, "simple roots:").unwrap();
    for i in 0..rs.rank() {
        writeln!(out, "  α{} = {}", i + 1, rs.format_vector(rs.root(i))).unwrap();
    }
    writeln!(out, "bilinear form on simple roots:").unwrap();
    for row in rs.gram() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(out, "  [{}]", cells.join(", ")).unwrap();
    }
    out
}

pub fn roots_json(rs: &RootSystem) -> Value {
    let simple: Vec<Value> = (0..rs.rank())
        .map(|i| {
            json!({
                "label": i + 1,
                "ambient": rs.to_ambient(rs.root(i)).map(|x| x.iter().map(rational).collect::<Vec<_>>()),
            })
        })
        .collect();
    let gram: Vec<Vec<Value>> = rs.gram().iter().map(|r| r.iter().map(scalar).collect()).collect();
    let positive: Vec<Vec<Value>> = rs.roots()[..rs.num_positive()]
        .iter()
        .map(|r| r.iter().map(scalar).collect())
        .collect();
    json!({
        "type": rs.ctype(),
        "field": field_json(rs.field()),
        "classes": [],
        "verdicts": {},
        "roots": {
            "count": rs.num_roots(),
            "positive": rs.num_positive(),
            "simple": simple,
            "gram": gram,
            "positive_roots": positive,
        },
    })
}

fn row_json(r: &ClassVerdict) -> Value {
    json!({
        "j": r.j,
        "components": format_components(&r.components),
        "central": true,
        "special": r.special,
        "bulky": r.bulky,
        "bulky_brute": r.bulky_brute,
        "even": r.even,
        "dim_v_plus": r.dim_plus,
        "dim_v_minus": r.dim_minus,
        "witness": r.witness,
        "agrees": r.agrees(),
    })
}

fn table(out: &mut String, rows: &[ClassVerdict]) {
    writeln!(
        out,
        "{:<18} {:<14} {:<8} {:<8} {:<6} {:<6} {:<6} {:<7} witness",
        "J", "components", "central", "special", "bulky", "brute", "even", "dim±"
    )
    .unwrap();
    for r in rows {
        let brute = r.bulky_brute.map_or("-", yes);
        let witness = r.witness.as_ref().map(ToString::to_string).unwrap_or_default();
        writeln!(
            out,
            "{:<18} {:<14} {:<8} {:<8} {:<6} {:<6} {:<6} {:<7} {witness}",
            r.j.to_string(),
            format_components(&r.components),
            "yes",
            yes(r.special),
            yes(r.bulky),
            brute,
            yes(r.even),
            format!("{}/{}", r.dim_plus, r.dim_minus),
        )
        .unwrap();
    }
}

pub fn involutions_text(rs: &RootSystem, rows: &[ClassVerdict]) -> String {
    let mut out = String::new();
    header(&mut out, rs);
    writeln!(out, "involution classes: {}", rows.len()).unwrap();
    table(&mut out, rows);
    let bad = rows.iter().filter(|r| !r.agrees()).count();
    writeln!(out, "special = bulky on every class: {}", yes(bad == 0)).unwrap();
    out
}

pub fn involutions_json(rs: &RootSystem, rows: &[ClassVerdict]) -> Value {
    let bad = rows.iter().filter(|r| !r.agrees()).count();
    json!({
        "type": rs.ctype(),
        "field": field_json(rs.field()),
        "classes": rows.iter().map(row_json).collect::<Vec<_>>(),
        "verdicts": {
            "special_equals_bulky": bad == 0,
            "counterexamples": bad,
        },
    })
}

fn report_verdicts(r: &TypeReport) -> Value {
    json!({
        "passed": r.passed(),
        "counterexamples": r.counterexamples(),
        "oracle": r.oracle,
        "prop2": r.prop2,
        "remark": r.remark,
        "characters": r.characters,
        "bulky_classes": r.bulky_classes.iter().map(|c| json!({
            "j": c.j,
            "components": format_components(&c.components),
            "central": c.central,
            "bulky": c.bulky,
            "witness": c.witness,
        })).collect::<Vec<_>>(),
        "failures": r.failures,
    })
}

pub fn verify_json(r: &TypeReport) -> Value {
    json!({
        "type": r.ctype,
        "field": field_json(&r.field_spec),
        "classes": r.theorem1.iter().map(row_json).collect::<Vec<_>>(),
        "verdicts": report_verdicts(r),
    })
}

pub fn verify_text(r: &TypeReport) -> String {
    let mut out = String::new();
    writeln!(out, "type:  {}", r.ctype).unwrap();
    writeln!(out, "field: {}", r.field).unwrap();
    writeln!(out, "|W| = {}, oracle: {}", r.order, yes(r.oracle)).unwrap();
    table(&mut out, &r.theorem1);
    if let Some(p) = &r.prop2 {
        let ok = p.iter().filter(|row| row.equal).count();
        writeln!(out, "C_W(w_J) = N_W(W_J): {ok}/{} classes", p.len()).unwrap();
    }
    let nc: Vec<String> = r.remark.noncentral_bulky.iter().map(ToString::to_string).collect();
    writeln!(
        out,
        "remark: w_S central: {}; bulky classes with non-central w_J: {}; {}",
        yes(r.remark.longest_central),
        if nc.is_empty() { "none".to_string() } else { nc.join(" ") },
        if r.remark.holds { "as expected" } else { "UNEXPECTED" }
    )
    .unwrap();
    if let Some(c) = &r.characters {
        writeln!(
            out,
            "character: degree {}, ⟨χ,1⟩ = {} (|X_W| = {}), ⟨χ_twisted,1⟩ = {} (even: {})",
            c.degree, c.multiplicity_trivial, c.special_classes, c.multiplicity_trivial_twisted, c.even_special_classes
        )
        .unwrap();
    }
    for f in &r.failures {
        writeln!(out, "FAIL {f}").unwrap();
    }
    writeln!(out, "result: {}", if r.passed() { "pass" } else { "FAIL" }).unwrap();
    out
}

type Dihedral = (CoxeterType, CoxeterType, bool);

pub fn sweep_text(reports: &[TypeReport], dihedral: &[Dihedral]) -> String {
    let mut out = String::new();
    writeln!(out, "{:<8} {:<8} {:<8} {:<8} {:<8} result", "type", "classes", "special", "oracle", "remark").unwrap();
    for r in reports {
        let special = r.theorem1.iter().filter(|c| c.special).count();
        writeln!(
            out,
            "{:<8} {:<8} {:<8} {:<8} {:<8} {}",
            r.ctype.to_string(),
            r.theorem1.len(),
            special,
            yes(r.oracle),
            if r.remark.holds { "ok" } else { "FAIL" },
            if r.passed() { "pass" } else { "FAIL" }
        )
        .unwrap();
        for f in &r.failures {
            writeln!(out, "  FAIL {f}").unwrap();
        }
    }
    for (i, w, ok) in dihedral {
        writeln!(out, "{i} matches {w}: {}", yes(*ok)).unwrap();
    }
    let counter: usize = reports.iter().map(TypeReport::counterexamples).sum();
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "types: {}, counterexamples: {counter}, failed types: {failed}", reports.len()).unwrap();
    out
}

pub fn sweep_json(reports: &[TypeReport], dihedral: &[Dihedral]) -> Value {
    let counter: usize = reports.iter().map(TypeReport::counterexamples).sum();
    json!({
        "type": "all",
        "field": null,
        "classes": [],
        "verdicts": {
            "passed": reports.iter().all(TypeReport::passed) && dihedral.iter().all(|d| d.2),
            "counterexamples": counter,
            "dihedral": dihedral.iter().map(|(i, w, ok)| json!({"type": i, "compared_with": w, "matches": ok})).collect::<Vec<_>>(),
        },
        "types": reports.iter().map(verify_json).collect::<Vec<_>>(),
    })
}

fn word(rs: &RootSystem, cd: &ClassData, c: usize) -> String {
    let w = cd.rep(c).reduced_word(rs);
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join("")
    }
}

pub fn character_text(rs: &RootSystem, cd: &ClassData, chi: &VirtualCharacter, mult: &Q, twisted: bool) -> String {
    let mut out = String::new();
    header(&mut out, rs);
    writeln!(out, "|W| = {}, classes: {}{}", cd.order(), cd.len(), if twisted { ", twisted" } else { "" }).unwrap();
    writeln!(out, "{:<24} {:>8} {:>10}", "class", "size", "χ").unwrap();
    for c in 0..cd.len() {
        writeln!(out, "{:<24} {:>8} {:>10}", word(rs, cd, c), cd.sizes[c], chi.values[c]).unwrap();
    }
    let values: Vec<String> = chi.values.iter().map(ToString::to_string).collect();
    writeln!(out, "χ = ({})", values.join(", ")).unwrap();
    writeln!(out, "⟨χ, 1⟩ = {mult}").unwrap();
    out
}

pub fn character_json(rs: &RootSystem, cd: &ClassData, chi: &VirtualCharacter, mult: &Q, twisted: bool) -> Value {
    let classes: Vec<Value> = (0..cd.len())
        .map(|c| {
            json!({
                "representative": cd.rep(c).reduced_word(rs).iter().map(|i| i + 1).collect::<Vec<_>>(),
                "size": cd.sizes[c],
                "value": chi.values[c],
            })
        })
        .collect();
    json!({
        "type": rs.ctype(),
        "field": field_json(rs.field()),
        "classes": classes,
        "verdicts": {
            "twisted": twisted,
            "order": cd.order(),
            "degree": chi.degree(),
            "multiplicity_trivial": rational(mult),
        },
    })
}
