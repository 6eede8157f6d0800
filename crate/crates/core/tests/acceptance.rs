//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits nonzero if any fails or runs over its time budget.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hgr_core::flagring::{
    basis_br, ideals_equal, module_decompose, reduced_monomials, ModuleElement,
};
use hgr_core::geomaudit::{
    flag_tower_dimension, ga_quotient_shape, hflag_dimension, hgr_dimension, hp_strata_table,
    normal_rank_identity,
};
use hgr_core::grassring::augmentation;
use hgr_core::localization::{tau_module_property_check, verify_exactness};
use hgr_core::partition::{enumerate_box, partitions_of};
use hgr_core::pontcalc::{
    cartan_sum, formal_roots, from_roots, nilpotency_index, pontryagin_polynomial, poly_divides,
    total_class, Ambient, RingElem, TPoly,
};
use hgr_core::stability::{flag_limit_check, p_monomials, restriction_surjective, stable_normal_form};
use hgr_core::symfun::{expand_monomials, schur_bialternant, schur_jt_e, schur_jt_h};
use hgr_core::{Alphabet, FlagSpec, GrassSpec, Partition, SchurVector, SymPoly};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Bialternants, memoized per test run.
struct Schur(HashMap<(Partition, usize), SymPoly>);

impl Schur {
    fn new() -> Self {
        Schur(HashMap::new())
    }

    fn poly(&mut self, lambda: &Partition, r: usize) -> SymPoly {
        self.0
            .entry((lambda.clone(), r))
            .or_insert_with(|| schur_bialternant(lambda, r).expect("partition fits"))
            .clone()
    }

    /// Schur expansion of a symmetric polynomial in `y_1..y_r` by peeling off
    /// the lex-leading monomial.
    fn expand(&mut self, p: &SymPoly, r: usize) -> SchurVector {
        let mut rest = p.with_vars(r);
        let mut out = SchurVector::zero();
        while let Some((exp, c)) = rest.terms().iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let lambda = Partition::from_padded(&exp).expect("leading exponent of a symmetric polynomial");
            rest = &rest - &self.poly(&lambda, r).scale(&c);
            out.add_term(lambda, c);
        }
        out
    }

    fn vector(&mut self, v: &SchurVector, r: usize) -> SymPoly {
        let mut out = SymPoly::zero(Alphabet::Y, r);
        for (lambda, c) in v.iter() {
            out = &out + &self.poly(lambda, r).scale(c);
        }
        out
    }
}

fn conjugate(lambda: &Partition) -> Partition {
    let parts: Vec<u32> = (0..lambda.first())
        .map(|j| lambda.parts().iter().filter(|&&p| p > j).count() as u32)
        .collect();
    Partition::new(parts).unwrap()
}

/// `h_m(y_1..y_r)` as the sum of all degree-`m` monomials.
fn h_oracle(m: u32, r: usize) -> SymPoly {
    let mut out = SymPoly::zero(Alphabet::Y, r);
    for idx in (0..r).combinations_with_replacement(m as usize) {
        let mut exp = vec![0u32; r];
        for i in idx {
            exp[i] += 1;
        }
        out.add_term(exp, BigInt::from(1));
    }
    out
}

fn unit(parts: &[u32]) -> SchurVector {
    SchurVector::unit(Partition::new(parts.to_vec()).unwrap())
}

fn criterion_1() -> Check {
    for n in 0..=10usize {
        let spec = ok(GrassSpec::new(1, n + 1))?;
        let expected: Vec<Partition> = (0..=n as u32)
            .map(|k| if k == 0 { Partition::empty() } else { Partition::row(k) })
            .collect();
        ensure!(spec.basis() == expected, "basis of HP^{n}");
        let zeta_pow = |k: u32| if k == 0 { SchurVector::one() } else { unit(&[k]) };
        for k in 0..=n as u32 {
            for l in 0..=n as u32 {
                let got = ok(spec.multiply(&zeta_pow(k), &zeta_pow(l)))?;
                let want = if k + l <= n as u32 { zeta_pow(k + l) } else { SchurVector::zero() };
                ensure!(got == want, "ζ^{k}·ζ^{l} in HP^{n}");
            }
        }
        let zeta = spec.pontryagin_class(1);
        ensure!(zeta == if n > 0 { zeta_pow(1) } else { SchurVector::zero() }, "ζ on HP^{n}");
        if n > 0 {
            ensure!(!ok(spec.power(&zeta, n as u32))?.is_zero(), "ζ^n vanishes in HP^{n}");
        }
        ensure!(ok(spec.power(&zeta, n as u32 + 1))?.is_zero(), "ζ^(n+1) survives in HP^{n}");
    }
    Ok(())
}

fn random_vector(rng: &mut ChaCha8Rng, basis: &[Partition]) -> SchurVector {
    let terms = rng.gen_range(1..=3);
    let mut v = SchurVector::zero();
    for _ in 0..terms {
        let lambda = basis[rng.gen_range(0..basis.len())].clone();
        v.add_term(lambda, BigInt::from(rng.gen_range(-3i64..=3)));
    }
    v
}

fn criterion_2() -> Check {
    let mut schur = Schur::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 0..=8usize {
        for r in 0..=n {
            let spec = ok(GrassSpec::new(r, n))?;
            let binom = (0..r).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1));
            ensure!(spec.rank() == binom && spec.basis().len() as u64 == binom, "rank of {spec}");
            let rels = spec.relations();
            ensure!(rels.len() == r, "{spec} has {} relations", rels.len());
            for (rel, m) in rels.iter().zip(n - r + 1..=n) {
                ensure!(ok(expand_monomials(rel, r))? == h_oracle(m as u32, r), "h_{m} in {spec}");
                ensure!(ok(spec.normal_form(rel))?.is_zero(), "h_{m} survives in {spec}");
            }
            if n > 6 {
                continue;
            }
            let basis = spec.basis();
            for _ in 0..100 {
                let a = random_vector(&mut rng, &basis);
                let b = random_vector(&mut rng, &basis);
                let got = ok(spec.multiply(&a, &b))?;
                let want = if r == 0 {
                    SchurVector::one().scale(&(augmentation(&a) * augmentation(&b)))
                } else {
                    let prod = &schur.vector(&a, r) * &schur.vector(&b, r);
                    schur.expand(&prod, r).truncate_to_box(r, n - r)
                };
                ensure!(got == want, "{a:?} · {b:?} in {spec}: {got:?} vs {want:?}");
            }
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    let mut schur = Schur::new();
    for r in 1..=4usize {
        let b = basis_br(r);
        let fact: usize = (1..=r).product();
        ensure!(b.len() == fact, "|𝔹_{r}| = {}", b.len());
        for n in r..=6 {
            let spec = ok(FlagSpec::new(r, n))?;
            ensure!(ok(ideals_equal(spec))?, "ideals differ for {spec}");
            let reduced: usize = reduced_monomials(spec).values().map(Vec::len).sum();
            ensure!(reduced as u64 == spec.rank(), "reduced monomials of {spec}");
            let grass = spec.grassmannian();
            ensure!(spec.rank() == fact as u64 * grass.rank(), "rank of {spec}");
            for mono in &b {
                for lambda in grass.basis() {
                    let p = &mono.to_poly(r) * &schur.poly(&lambda, r);
                    let got = ok(module_decompose(spec, &p))?;
                    let want = ModuleElement::term(mono.clone(), SchurVector::unit(lambda.clone()));
                    ensure!(got == want, "round trip of {mono:?}·s{lambda:?} in {spec}");
                }
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    for r in 1..=4usize {
        let zero = SymPoly::zero(Alphabet::Y, r);
        for w in 0..=8u32 {
            for lambda in partitions_of(w, usize::MAX, w) {
                let via_h = ok(expand_monomials(&ok(schur_jt_h(&lambda, lambda.len()))?, r))?.with_vars(r);
                let via_e = ok(expand_monomials(&ok(schur_jt_e(&lambda, lambda.first() as usize))?, r))?
                    .with_vars(r);
                let direct = if lambda.len() <= r { ok(schur_bialternant(&lambda, r))? } else { zero.clone() };
                ensure!(via_h == direct, "h-determinant of {lambda:?} in {r} variables");
                ensure!(via_e == direct, "e-determinant of {lambda:?} in {r} variables");
            }
        }
    }
    Ok(())
}

/// Coefficients of `Π (1 + u t)` by multiplying one linear factor at a time.
fn total_class_oracle(amb: Ambient, roots: &[RingElem]) -> Vec<RingElem> {
    let mut c = vec![amb.one()];
    for u in roots {
        let mut next = c.clone();
        next.push(amb.zero());
        for (k, ck) in c.iter().enumerate() {
            next[k + 1] = amb.add(&next[k + 1], &amb.mul(ck, u));
        }
        c = next;
    }
    c
}

fn criterion_5() -> Check {
    for len in 0..=6usize {
        let (amb, roots) = formal_roots(len);
        let whole = ok(from_roots(amb, &roots))?;
        let oracle = total_class_oracle(amb, &roots);
        ensure!(
            (0..=len).all(|k| total_class(&whole).coeff(k) == oracle[k]),
            "total class of {len} formal roots"
        );
        for mask in 0..(1u32 << len) {
            let (left, right): (Vec<_>, Vec<_>) =
                roots.iter().enumerate().partition_map(|(i, u)| {
                    if mask >> i & 1 == 1 {
                        itertools::Either::Left(u.clone())
                    } else {
                        itertools::Either::Right(u.clone())
                    }
                });
            let a = ok(from_roots(amb, &left))?;
            let b = ok(from_roots(amb, &right))?;
            let sum = ok(cartan_sum(&a, &b))?;
            ensure!(sum == whole, "Cartan sum over split {mask:b} of {len}");
            ensure!(
                ok(cartan_sum(&b, &a))? == whole,
                "swapped Cartan sum over split {mask:b} of {len}"
            );
            let prod = ok(total_class(&a).mul(&total_class(&b)))?;
            ensure!(prod == total_class(&whole), "total classes multiply over split {mask:b}");
            let pprod = ok(pontryagin_polynomial(&a).mul(&pontryagin_polynomial(&b)))?;
            ensure!(pprod == pontryagin_polynomial(&whole), "Pontryagin polynomials multiply over split {mask:b}");
        }
    }
    Ok(())
}

/// `Π (t - u)` from linear factors.
fn linear_product(amb: Ambient, roots: &[RingElem]) -> std::result::Result<TPoly, String> {
    roots.iter().try_fold(TPoly::one(amb), |acc, u| ok(acc.mul(&ok(TPoly::linear(amb, u))?)))
}

fn check_divisibility(amb: Ambient, multiset: &[RingElem]) -> Check {
    let full = pontryagin_polynomial(&ok(from_roots(amb, multiset))?);
    ensure!(full == linear_product(amb, multiset)?, "P of {} roots", multiset.len());
    let mut seen = BTreeSet::new();
    for mask in 0..(1u32 << multiset.len()) {
        let (sub, rest): (Vec<RingElem>, Vec<RingElem>) = (0..multiset.len())
            .map(|i| (mask >> i & 1 == 1, multiset[i].clone()))
            .partition_map(|(take, u)| {
                if take {
                    itertools::Either::Left(u)
                } else {
                    itertools::Either::Right(u)
                }
            });
        let key = format!("{sub:?}");
        if !seen.insert(key) {
            continue;
        }
        let divisor = pontryagin_polynomial(&ok(from_roots(amb, &sub))?);
        let (divides, quotient) = ok(poly_divides(&full, &divisor))?;
        ensure!(divides, "sub-multiset {mask:b} does not divide");
        ensure!(quotient == Some(linear_product(amb, &rest)?), "quotient for sub-multiset {mask:b}");
    }
    Ok(())
}

fn criterion_6() -> Check {
    for size in 0..=6usize {
        let (amb, roots) = formal_roots(size);
        check_divisibility(amb, &roots)?;
    }
    let (amb, roots) = formal_roots(3);
    for size in 0..=6usize {
        for multiset in roots.iter().cloned().combinations_with_replacement(size) {
            check_divisibility(amb, &multiset)?;
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    for n in 2..=8usize {
        for r in 1..n {
            let report = ok(verify_exactness(r, n))?;
            ensure!(report.passed(), "exactness at ({r},{n}): {report:?}");
            let [a, b, c] = report.ranks;
            ensure!(b == a + c, "Pascal identity at ({r},{n})");
            if n <= 6 {
                ensure!(ok(tau_module_property_check(r, n, None, 7))?, "τ module property at ({r},{n})");
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    for n in 0..=8usize {
        for r in 0..=n {
            let spec = ok(GrassSpec::new(r, n))?;
            let comp = spec.complement();
            let mut images = BTreeSet::new();
            for lambda in spec.basis() {
                let v = SchurVector::unit(lambda.clone());
                let d = ok(spec.dual_complement(&v))?;
                let sign = if lambda.weight() % 2 == 0 { 1 } else { -1 };
                let lc = conjugate(&lambda);
                ensure!(comp.contains(&lc), "{lambda:?}' leaves the box of {comp}");
                ensure!(d == SchurVector::term(lc.clone(), BigInt::from(sign)), "dual of {lambda:?} in {spec}");
                ensure!(ok(comp.dual_complement(&d))? == v, "dual is not an involution on {lambda:?} in {spec}");
                images.insert(lc);
            }
            let target: BTreeSet<Partition> = comp.basis().into_iter().collect();
            ensure!(images == target, "duality is not a bijection for {spec}");
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    let mut schur = Schur::new();
    for n in 0..=7usize {
        for r in 0..=n {
            ensure!(ok(restriction_surjective(r, n))?, "restriction onto HGr({r},{n})");
        }
    }
    for r in 1..=3usize {
        for w in 0..=5u32 {
            let top = w as usize + r + 1;
            for exps in p_monomials(r, w) {
                let s = ok(stable_normal_form(r, &exps, top))?;
                ensure!(s.witness <= w as usize + r, "witness {} for {exps:?} at r = {r}", s.witness);
                let prod = exps.iter().enumerate().fold(SymPoly::one(Alphabet::Y, r), |acc, (i, &a)| {
                    let column = Partition::column(i + 1);
                    let e = if i < r { schur.poly(&column, r) } else { SymPoly::zero(Alphabet::Y, r) };
                    &acc * &e.pow(a)
                });
                ensure!(s.value == schur.expand(&prod, r), "stable value of {exps:?} at r = {r}");
            }
        }
        for cap in 0..=3u32 {
            let levels: Vec<usize> = (r..=r + cap as usize + 1).collect();
            ensure!(ok(flag_limit_check(r, &levels, cap))?, "flag limit at r = {r}, cap {cap}");
        }
    }
    Ok(())
}

fn criterion_10() -> Check {
    for n in 1..=6usize {
        for r in 1..=n.min(3) {
            let spec = ok(GrassSpec::new(r, n))?;
            let bound = r * (n - r) + 1;
            let classes = spec
                .pontryagin_generators()
                .into_iter()
                .chain(enumerate_box(r, n - r).into_iter().skip(1).map(SchurVector::unit))
                .filter(|v| !v.is_zero());
            for v in classes {
                let k = ok(nilpotency_index(spec, &v))?;
                ensure!(k <= bound, "index {k} of {v:?} in {spec} exceeds {bound}");
                ensure!(ok(spec.power(&v, k as u32))?.is_zero(), "{v:?}^{k} survives in {spec}");
                ensure!(k == 0 || !ok(spec.power(&v, k as u32 - 1))?.is_zero(), "{v:?}^{} vanishes in {spec}", k - 1);
            }
        }
    }
    for n in 0..=9usize {
        let hp = ok(GrassSpec::new(1, n + 1))?;
        let k = ok(nilpotency_index(hp, &hp.pontryagin_class(1)))?;
        ensure!(k == n + 1, "ζ has index {k} on HP^{n}");
    }
    Ok(())
}

fn criterion_11() -> Check {
    for n in 0..=10usize {
        let table = hp_strata_table(n);
        ensure!(table.len() == n + 1, "HP^{n} has {} strata", table.len());
        for (i, s) in table.iter().enumerate() {
            let (i64_, n64) = (i as u64, n as u64);
            ensure!(s.index == i && s.codim == 2 * i64_ && s.dim == 4 * n64 - 2 * i64_, "stratum {i} of HP^{n}");
            ensure!(s.closure_bundle_rank == 2 * i64_, "closure rank of stratum {i} of HP^{n}");
            ensure!(s.base == format!("HP^{}", n - i), "closure base of stratum {i} of HP^{n}");
            ensure!(s.affine == (i == n), "affineness of stratum {i} of HP^{n}");
            ensure!(s.is_consistent(n), "self-check of stratum {i} of HP^{n}");
            let q = ok(ga_quotient_shape(n, i))?;
            ensure!(q.quotient_dim == s.dim && q.total_space_dim == q.quotient_dim + q.group_dim, "G_a quotient {i} of HP^{n}");
        }
        ensure!(ok(hgr_dimension(1, n + 1))? == table[0].dim, "dim HP^{n}");
        for r in 0..=n {
            let (r64, n64) = (r as u64, n as u64);
            ensure!(ok(hgr_dimension(r, n))? == 4 * r64 * (n64 - r64), "dim HGr({r},{n})");
            if r == 0 {
                continue;
            }
            ensure!(ok(hflag_dimension(&[r], n))? == ok(hgr_dimension(r, n))?, "HFlag({r};{n})");
            let flag = ok(hflag_dimension(&vec![1; r], n))?;
            ensure!(flag == 4 * n64 * r64 - 2 * r64 * (r64 + 1), "dim HFlag(1^{r};{n})");
            ensure!(flag == ok(flag_tower_dimension(r, n))?, "tower over HGr({r},{n})");
            ensure!(ok(normal_rank_identity(r))?, "normal ranks at r = {r}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("projective bundle ring", criterion_1, Some(Duration::from_secs(1))),
        ("Grassmannian presentation", criterion_2, Some(Duration::from_secs(30))),
        ("flag ideal equality", criterion_3, Some(Duration::from_secs(30))),
        ("Jacobi-Trudi agreement", criterion_4, Some(Duration::from_secs(20))),
        ("Cartan sum and splitting", criterion_5, None),
        ("divisibility", criterion_6, None),
        ("localization exactness", criterion_7, None),
        ("duality", criterion_8, None),
        ("stability", criterion_9, None),
        ("nilpotence", criterion_10, None),
        ("geometry bookkeeping", criterion_11, None),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, budget) {
            if elapsed >= *limit {
                outcome = Err(format!("took {elapsed:?}, budget {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({elapsed:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        println!("all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
