use std::path::PathBuf;

use serde::Deserialize;
use serde_json::{json, Value};

use hgr_core::flagring::{
    basis_br, ideal_full, ideal_inclusions, ideal_triangular, ideals_equal, module_decompose,
};
use hgr_core::geomaudit::{flag_tower_dimension, hflag_dimension, hgr_dimension, hp_strata_table};
use hgr_core::localization::{sigma_map, tau_map, tau_module_property_check, verify_exactness};
use hgr_core::pontcalc::{
    cartan_sum, from_roots, nilpotency_index, pontryagin_polynomial, poly_divides, total_class, Ambient,
    RingElem, SympClass, TPoly,
};
use hgr_core::stability::{flag_limit_check, p_monomials, restriction_surjective, stable_normal_form};
use hgr_core::{FlagSpec, GrassSpec, SchurVector, SymPoly};

use crate::{read_payload, Failure, Outcome};

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("core types serialize")
}

fn finish(doc: Value, ok: bool) -> Outcome {
    if ok {
        Ok(doc)
    } else {
        Err(Failure::Invariant(doc))
    }
}

pub fn ring(r: usize, n: usize, payload: Option<&PathBuf>) -> Outcome {
    let spec = GrassSpec::new(r, n)?;
    let mut doc = json!({
        "spec": spec,
        "generators": spec.pontryagin_generators(),
        "relations": spec.relations(),
        "basis": spec.basis(),
        "rank": spec.rank(),
    });
    if let Some(path) = payload {
        let p: SymPoly = read_payload(path)?;
        doc["normal_form"] = to_value(&spec.normal_form(&p)?);
    }
    Ok(doc)
}

pub fn mul(r: usize, n: usize, payload: &PathBuf) -> Outcome {
    let spec = GrassSpec::new(r, n)?;
    let factors: Vec<SchurVector> = read_payload(payload)?;
    let mut acc = SchurVector::one();
    for f in &factors {
        acc = spec.multiply(&acc, f)?;
    }
    Ok(json!({ "spec": spec, "factors": factors, "product": acc }))
}

pub fn flag(r: usize, n: usize, check_ideals: bool, basis: bool, payload: Option<&PathBuf>) -> Outcome {
    let spec = FlagSpec::new(r, n)?;
    let mut doc = json!({
        "spec": spec,
        "triangular": ideal_triangular(spec),
        "full": ideal_full(spec),
        "rank": spec.rank(),
    });
    let mut ok = true;
    if basis {
        doc["basis"] = to_value(&basis_br(r));
    }
    if check_ideals {
        let equal = ideals_equal(spec)?;
        let (powers, degrees) = ideal_inclusions(spec)?;
        ok = equal && powers && degrees;
        doc["checks"] = json!({
            "ideals_equal": equal,
            "powers_in_ideal": powers,
            "degree_floor": degrees,
        });
    }
    if let Some(path) = payload {
        let p: SymPoly = read_payload(path)?;
        doc["decomposition"] = to_value(&module_decompose(spec, &p)?);
    }
    finish(doc, ok)
}

pub fn pont_sum(payload: &PathBuf) -> Outcome {
    let classes: Vec<SympClass> = read_payload(payload)?;
    let classes: Vec<SympClass> = classes.into_iter().map(|c| c.validated()).collect::<Result<_, _>>()?;
    let Some(first) = classes.first() else {
        return Err(Failure::Usage("expected at least one class".into()));
    };
    let mut sum = SympClass::trivial(first.ambient(), 0);
    for c in &classes {
        sum = cartan_sum(&sum, c)?;
    }
    Ok(json!({ "sum": sum, "total_class": total_class(&sum) }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RootsPayload {
    ambient: Ambient,
    roots: Vec<RingElem>,
}

pub fn pont_roots(payload: &PathBuf) -> Outcome {
    let p: RootsPayload = read_payload(payload)?;
    let class = from_roots(p.ambient, &p.roots)?;
    Ok(json!({
        "class": class,
        "total_class": total_class(&class),
        "pontryagin_polynomial": pontryagin_polynomial(&class),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DividePayload {
    dividend: TPoly,
    divisor: TPoly,
}

pub fn pont_divide(payload: &PathBuf) -> Outcome {
    let p: DividePayload = read_payload(payload)?;
    let (divides, quotient) = poly_divides(&p.dividend.validated()?, &p.divisor.validated()?)?;
    Ok(json!({ "divides": divides, "quotient": quotient }))
}

pub fn pont_nilpotency(r: usize, n: usize, payload: Option<&PathBuf>) -> Outcome {
    let spec = GrassSpec::new(r, n)?;
    let classes = match payload {
        Some(path) => vec![read_payload::<SchurVector>(path)?],
        None => spec.pontryagin_generators(),
    };
    let bound = spec.top_degree() + 1;
    let mut results = Vec::new();
    let mut ok = true;
    for v in classes {
        let k = nilpotency_index(spec, &v)?;
        ok &= k <= bound;
        results.push(json!({ "class": v, "index": k }));
    }
    finish(json!({ "spec": spec, "bound": bound, "results": results }), ok)
}

pub fn localize(r: usize, n: usize, seed: u64) -> Outcome {
    let tau = tau_map(r, n)?;
    let sigma = sigma_map(r, n)?;
    let report = verify_exactness(r, n)?;
    let module = tau_module_property_check(r, n, None, seed)?;
    let ok = report.passed() && module;
    let doc = json!({
        "tau": tau,
        "sigma": sigma,
        "report": report,
        "tau_module_property": module,
    });
    finish(doc, ok)
}

pub fn stability(r: usize, max_n: usize, cap: u32) -> Outcome {
    if r > max_n {
        return Err(Failure::Usage(format!("r = {r} exceeds max-n = {max_n}")));
    }
    let mut ok = true;
    let mut surjective = Vec::new();
    for n in r..max_n {
        let s = restriction_surjective(r, n)?;
        ok &= s;
        surjective.push(json!({ "n": n, "surjective": s }));
    }
    let mut table = Vec::new();
    for w in 0..=cap {
        for exps in p_monomials(r, w) {
            let s = stable_normal_form(r, &exps, max_n)?;
            let within = s.witness <= w as usize + r;
            ok &= within;
            table.push(json!({
                "monomial": exps,
                "weight": w,
                "value": s.value,
                "witness": s.witness,
            }));
        }
    }
    let flag_limit = if r == 0 {
        true
    } else {
        let levels: Vec<usize> = (r..=max_n).collect();
        flag_limit_check(r, &levels, cap)?
    };
    ok &= flag_limit;
    let doc = json!({
        "r": r,
        "max_n": max_n,
        "cap": cap,
        "restriction": surjective,
        "table": table,
        "flag_limit": flag_limit,
    });
    finish(doc, ok)
}

pub fn geom_strata(n: usize) -> Outcome {
    let table = hp_strata_table(n);
    let ok = table.iter().all(|s| s.is_consistent(n));
    finish(json!({ "n": n, "strata": table }), ok)
}

pub fn geom_dim(r: usize, n: usize) -> Outcome {
    let hgr = hgr_dimension(r, n)?;
    let mut doc = json!({ "r": r, "n": n, "hgr": hgr });
    let mut ok = true;
    if r >= 1 {
        let flag = hflag_dimension(&vec![1; r], n)?;
        let tower = flag_tower_dimension(r, n)?;
        ok = flag == tower;
        doc["hflag"] = json!(flag);
        doc["tower"] = json!(tower);
    }
    finish(doc, ok)
}
