//! JSON reports. Keys are emitted in sorted order, so equal inputs give equal bytes.

use critcurve::check::CheckReport;
use critcurve::critical::CriticalReport;
use critcurve::family::ParametrizedFamily;
use critcurve::poly::{Names, Polynomial};
use critcurve::realroots::{AlgebraicNumber, Representative, RootSet};
use serde_json::{json, Value};

fn poly(p: &Polynomial, names: &Names<'_>) -> Value {
    Value::String(p.display_with(names))
}

pub fn number(a: &AlgebraicNumber, param: &str) -> Value {
    a.to_json(param)
}

pub fn set(s: &RootSet, param: &str) -> Value {
    Value::Array(s.iter().map(|a| number(a, param)).collect())
}

pub fn input(fam: &ParametrizedFamily, path: &str) -> Value {
    let names = fam.names();
    json!({
        "file": path,
        "param": fam.param,
        "u": fam.u.display_with(&names),
        "v": fam.v.display_with(&names),
    })
}

pub fn check(input_fam: &ParametrizedFamily, rep: &CheckReport) -> Value {
    let fam = &rep.family;
    let names = input_fam.names();
    let p = input_fam.param.as_str();
    let crit = rep.crit_curve.as_ref().map(|c| {
        json!({
            "x": format!("({})/({})", c.bstar.display_with(&names), c.b.display_with(&names)),
            "y": format!("({})/({})", c.dstar.display_with(&names), c.d.display_with(&names)),
            "z": p,
        })
    });
    json!({
        "hypotheses": {
            "h1": rep.h1_holds,
            "h2": rep.shear_applied.is_none(),
            "shear_applied": rep.shear_applied.as_ref().map(|m| m.to_string()),
        },
        "degrees": { "m": fam.m, "n": fam.n, "r": fam.r, "s": fam.s },
        "leading": {
            "a": poly(&fam.a, &names),
            "b": poly(&fam.b, &names),
            "c": poly(&fam.c, &names),
            "d": poly(&fam.d, &names),
        },
        "gcd_g1_g2": poly(&rep.gpair.g, &names),
        "normality": { "case": rep.case.label(), "delta": rep.delta },
        "spec": {
            "spec0": set(&rep.spec0, p),
            "spec1": set(&rep.spec1, p),
            "spec2": set(&rep.spec2, p),
            "spec3": set(&rep.spec3, p),
            "D": set(&rep.spec1, p),
            "all": set(&rep.spec(), p),
        },
        "crit_curve": crit,
    })
}

fn representative(r: &Representative) -> Value {
    json!({ "value": r.value.to_string(), "offset": r.offset.to_string() })
}

pub fn partition(set: &RootSet, reps: &[Representative], param: &str) -> Value {
    let bound = |i: isize| -> Value {
        if i < 0 || i as usize >= set.len() {
            Value::Null
        } else {
            number(&set.elems[i as usize], param)
        }
    };
    let mut cells = Vec::new();
    for (k, r) in reps.iter().enumerate() {
        // Cells alternate: open interval 0, point 0, open interval 1, ...
        let i = (k / 2) as isize;
        if k % 2 == 0 {
            cells.push(json!({
                "kind": "open",
                "lower": bound(i - 1),
                "upper": bound(i),
                "representative": representative(r),
            }));
        } else {
            cells.push(json!({
                "kind": "point",
                "value": bound(i),
                "representative": representative(r),
            }));
        }
    }
    Value::Array(cells)
}

pub fn critical(rep: &CriticalReport, param: &str, names: &Names<'_>) -> Value {
    let elems: Vec<Value> = rep
        .set
        .iter()
        .zip(&rep.provenance)
        .map(|(a, src)| {
            json!({
                "value": number(a, param),
                "approx": a.approx_decimal(12),
                "provenance": src[0].label(),
                "sources": src.iter().map(|s| s.label()).collect::<Vec<_>>(),
                "defpoly": poly(&a.defpoly(), names),
            })
        })
        .collect();
    json!({
        "size": rep.set.len(),
        "elements": elems,
        "A1": set(&rep.a1, param),
        "A2": set(&rep.a2, param),
        "verdict": if rep.set.is_empty() { "one topology type" } else { "finitely many topology types" },
    })
}
