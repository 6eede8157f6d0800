use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use hgr_core::flagring::{
    basis_br, ideal_inclusions, ideals_equal, module_decompose, pullback_q, ModuleElement,
};
use hgr_core::geomaudit::{flag_tower_dimension, hflag_dimension, hp_strata_table};
use hgr_core::localization::{tau_module_property_check, verify_exactness};
use hgr_core::partition::{binomial, enumerate_box};
use hgr_core::pontcalc::nilpotency_index;
use hgr_core::stability::restriction_surjective;
use hgr_core::symfun::schur_monomials;
use hgr_core::{FlagSpec, GrassSpec, Result, SchurVector};

use crate::{Failure, Outcome};

type Checks = BTreeMap<&'static str, bool>;

fn grass_checks(r: usize, n: usize, rng: &mut ChaCha8Rng, out: &mut Checks) -> Result<()> {
    let spec = GrassSpec::new(r, n)?;
    let basis = spec.basis();
    out.insert("grass_rank", basis.len() as u64 == binomial(n as u64, r as u64));

    let mut vanish = true;
    for rel in spec.relations() {
        vanish &= spec.normal_form(&rel)?.is_zero();
    }
    out.insert("grass_relations_vanish", vanish);

    let mut products = true;
    for _ in 0..10 {
        let a = SchurVector::unit(basis.choose(rng).expect("nonempty basis").clone());
        let b = SchurVector::unit(basis.choose(rng).expect("nonempty basis").clone());
        let via_lift = spec.normal_form(&(&spec.lift(&a)? * &spec.lift(&b)?))?;
        products &= spec.multiply(&a, &b)? == via_lift;
    }
    out.insert("grass_products", products);

    let dual = spec.complement();
    let mut duality = true;
    for lambda in &basis {
        let v = SchurVector::unit(lambda.clone());
        let d = spec.dual_complement(&v)?;
        duality &= d.fits_in_box(dual.r(), dual.cols()) && dual.dual_complement(&d)? == v;
    }
    out.insert("duality_involution", duality);

    out.insert("restriction_surjective", restriction_surjective(r, n)?);

    if r >= 1 {
        let bound = spec.top_degree() + 1;
        let mut nilpotent = true;
        for g in spec.pontryagin_generators() {
            nilpotent &= nilpotency_index(spec, &g)? <= bound;
        }
        if r == 1 {
            nilpotent &= nilpotency_index(spec, &spec.pontryagin_class(1))? == n;
        }
        out.insert("nilpotency_bound", nilpotent);
    }
    Ok(())
}

fn flag_checks(r: usize, n: usize, rng: &mut ChaCha8Rng, out: &mut Checks) -> Result<()> {
    let spec = FlagSpec::new(r, n)?;
    out.insert("flag_ideals_equal", ideals_equal(spec)?);
    let (powers, degrees) = ideal_inclusions(spec)?;
    out.insert("flag_inclusions", powers && degrees);

    let mut round_trips = true;
    for b in basis_br(r) {
        for lambda in enumerate_box(r, n - r) {
            let p = &schur_monomials(&lambda, r).with_vars(r) * &b.to_poly(r);
            let expect = ModuleElement::term(b.clone(), SchurVector::unit(lambda));
            round_trips &= module_decompose(spec, &p)? == expect;
        }
    }
    out.insert("flag_module_basis", round_trips);

    let grass = spec.grassmannian();
    let mut pullbacks = true;
    for _ in 0..10 {
        let v: SchurVector = grass
            .basis()
            .into_iter()
            .map(|l| (l, rng.gen_range(-3i64..=3).into()))
            .collect();
        let back = module_decompose(spec, &pullback_q(spec, &v)?)?;
        let expect = ModuleElement::term(basis_br(r)[0].clone(), v);
        pullbacks &= back == expect;
    }
    out.insert("flag_pullback", pullbacks);
    Ok(())
}

fn cell(r: usize, n: usize, seed: u64) -> Result<Checks> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((r as u64) << 32) ^ n as u64);
    let mut out = Checks::new();
    grass_checks(r, n, &mut rng, &mut out)?;
    if r >= 1 {
        flag_checks(r, n, &mut rng, &mut out)?;
    }
    if r >= 1 && r < n {
        out.insert("localization_exact", verify_exactness(r, n)?.passed());
        out.insert("tau_module", tau_module_property_check(r, n, None, seed)?);
    }
    if r >= 1 {
        let ones = vec![1; r];
        out.insert("flag_dimension", hflag_dimension(&ones, n)? == flag_tower_dimension(r, n)?);
    }
    if r == 0 {
        out.insert("strata", hp_strata_table(n).iter().all(|s| s.is_consistent(n)));
    }
    Ok(out)
}

pub fn run(max_r: usize, max_n: usize, seed: u64) -> Outcome {
    let cells: Vec<(usize, usize)> = (0..=max_n)
        .flat_map(|n| (0..=max_r.min(n)).map(move |r| (r, n)))
        .collect();
    let results: Vec<(usize, usize, std::result::Result<Checks, String>)> = cells
        .par_iter()
        .map(|&(r, n)| (r, n, cell(r, n, seed).map_err(|e| e.to_string())))
        .collect();
    let mut all = true;
    let report: Vec<Value> = results
        .into_iter()
        .map(|(r, n, res)| match res {
            Ok(checks) => {
                let passed = checks.values().all(|&b| b);
                all &= passed;
                json!({ "r": r, "n": n, "passed": passed, "checks": checks })
            }
            Err(e) => {
                all = false;
                json!({ "r": r, "n": n, "passed": false, "error": e })
            }
        })
        .collect();
    let doc = json!({ "max_r": max_r, "max_n": max_n, "seed": seed, "passed": all, "cells": report });
    if all {
        Ok(doc)
    } else {
        Err(Failure::Invariant(doc))
    }
}
