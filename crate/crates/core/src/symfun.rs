//! Symmetric polynomials in finitely many variables.
//!
//! The monomial constructions here (`elementary_symmetric`,
//! `complete_symmetric`, `expand_monomials`, `schur_bialternant`) are the
//! ground truth for everything downstream. The Schur-basis conversions work
//! on *dominant* monomials only: a symmetric polynomial in `r` variables is
//! determined by its coefficients on exponent vectors that are weakly
//! decreasing, and Schur polynomials are unitriangular against those
//! monomials with Kostka numbers as entries.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::poly::{Alphabet, Exponent, SymPoly};
use crate::schur::SchurVector;

/// Coefficients of a symmetric polynomial in `r` variables on its weakly
/// decreasing exponent vectors (each padded to length `r`).
pub type Dominant = BTreeMap<Exponent, BigInt>;

/// `h_m(y_1..y_r)`: the sum of all monomials of degree `m`.
pub fn complete_symmetric(m: u32, r: usize) -> SymPoly {
    let mut p = SymPoly::zero(Alphabet::Y, r);
    for exp in compositions(m, r) {
        p.add_term(exp, BigInt::one());
    }
    p
}

/// `e_m(y_1..y_r)`: the sum of all squarefree monomials of degree `m`.
pub fn elementary_symmetric(m: u32, r: usize) -> SymPoly {
    let mut p = SymPoly::zero(Alphabet::Y, r);
    if m as usize > r {
        return p;
    }
    for subset in (0..r).combinations(m as usize) {
        let mut exp = vec![0; r];
        for i in subset {
            exp[i] = 1;
        }
        p.add_term(exp, BigInt::one());
    }
    p
}

/// All exponent vectors of length `r` with entries summing to `m`.
fn compositions(m: u32, r: usize) -> Vec<Exponent> {
    fn go(rem: u32, slots: usize, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in (0..=rem).rev() {
            cur.push(a);
            go(rem - a, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(m, r, &mut Vec::with_capacity(r), &mut out);
    out
}

/// `h_m` written in `e_1..e_r` through `h_m = Σ_{i=1..min(m,r)} (-1)^(i+1) e_i h_(m-i)`.
pub fn h_from_e(m: u32, r: usize) -> SymPoly {
    let mut table = vec![SymPoly::one(Alphabet::E, r)];
    for k in 1..=m as usize {
        let mut hk = SymPoly::zero(Alphabet::E, r);
        for i in 1..=k.min(r) {
            let term = &SymPoly::generator(Alphabet::E, r, i) * &table[k - i];
            hk = if i % 2 == 1 { &hk + &term } else { &hk - &term };
        }
        table.push(hk);
    }
    table.swap_remove(m as usize)
}

/// Determinant of a square matrix of polynomials over one alphabet.
///
/// Cofactor expansion up to size 6, fraction-free Bareiss elimination with
/// exact polynomial division above that.
pub fn determinant(matrix: &[Vec<SymPoly>], alphabet: Alphabet, vars: usize) -> Result<SymPoly> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument("matrix is not square".into()));
    }
    if n == 0 {
        return Ok(SymPoly::one(alphabet, vars));
    }
    if n <= 6 {
        let cols: Vec<usize> = (0..n).collect();
        Ok(cofactor(matrix, 0, &cols, alphabet, vars))
    } else {
        bareiss(matrix, alphabet, vars)
    }
}

fn cofactor(m: &[Vec<SymPoly>], row: usize, cols: &[usize], alphabet: Alphabet, vars: usize) -> SymPoly {
    if cols.is_empty() {
        return SymPoly::one(alphabet, vars);
    }
    let mut acc = SymPoly::zero(alphabet, vars);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = cofactor(m, row + 1, &rest, alphabet, vars);
        if minor.is_zero() {
            continue;
        }
        let term = entry * &minor;
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn bareiss(matrix: &[Vec<SymPoly>], alphabet: Alphabet, vars: usize) -> Result<SymPoly> {
    let n = matrix.len();
    let mut a: Vec<Vec<SymPoly>> = matrix.to_vec();
    let mut prev = SymPoly::one(alphabet, vars);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(SymPoly::zero(alphabet, vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Generator `index` of `alphabet` with `e_0 = h_0 = 1` and negative
/// indices zero.
fn gen_or_unit(alphabet: Alphabet, vars: usize, index: i64) -> SymPoly {
    match index {
        i if i < 0 => SymPoly::zero(alphabet, vars),
        0 => SymPoly::one(alphabet, vars),
        i => SymPoly::generator(alphabet, vars, i as usize),
    }
}

/// Jacobi–Trudi determinant `det(h_(λ_i - i + j))` of size `l(λ)`.
pub fn schur_jt_h(lambda: &Partition, r: usize) -> Result<SymPoly> {
    if lambda.len() > r {
        return Err(Error::TooLong {
            partition: lambda.clone(),
            max: r,
        });
    }
    let l = lambda.len();
    let vars = if l == 0 { 0 } else { lambda.first() as usize + l - 1 };
    let matrix: Vec<Vec<SymPoly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| gen_or_unit(Alphabet::H, vars, lambda.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    Ok(determinant(&matrix, Alphabet::H, vars)?.trimmed())
}

/// Dual Jacobi–Trudi determinant `det(e_(λ'_i - i + j))` of size `m`.
pub fn schur_jt_e(lambda: &Partition, m: usize) -> Result<SymPoly> {
    let conj = lambda.conjugate();
    if m < conj.len() {
        return Err(Error::DualSizeTooSmall {
            size: m,
            first: lambda.first(),
        });
    }
    let vars = if m == 0 { 0 } else { conj.first() as usize + m - 1 };
    let matrix: Vec<Vec<SymPoly>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| gen_or_unit(Alphabet::E, vars, conj.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    Ok(determinant(&matrix, Alphabet::E, vars)?.trimmed())
}

/// `Σ_w sgn(w) y^(w·exps)` over all permutations of the variables.
fn alternant(exps: &[u32]) -> SymPoly {
    let r = exps.len();
    let mut p = SymPoly::zero(Alphabet::Y, r);
    for perm in (0..r).permutations(r) {
        let mut exp = vec![0; r];
        for (i, &j) in perm.iter().enumerate() {
            exp[i] = exps[j];
        }
        let sign = if inversions(&perm).is_multiple_of(2) { 1 } else { -1 };
        p.add_term(exp, BigInt::from(sign));
    }
    p
}

fn inversions(perm: &[usize]) -> usize {
    perm.iter()
        .enumerate()
        .map(|(i, a)| perm[i + 1..].iter().filter(|b| *b < a).count())
        .sum()
}

/// `s_λ(y_1..y_r) = a_(λ+δ) / a_δ`, computed by exact polynomial division.
pub fn schur_bialternant(lambda: &Partition, r: usize) -> Result<SymPoly> {
    if lambda.len() > r {
        return Err(Error::TooLong {
            partition: lambda.clone(),
            max: r,
        });
    }
    let delta: Vec<u32> = (0..r as u32).rev().collect();
    let shifted: Vec<u32> = lambda
        .padded(r)
        .iter()
        .zip(&delta)
        .map(|(a, b)| a + b)
        .collect();
    alternant(&shifted).div_exact(&alternant(&delta))
}

/// Substitutes `e_i`/`p_i` by `e_i(y_1..y_r)` and `h_i` by `h_i(y_1..y_r)`.
/// Polynomials already in `y` are only padded to `r` variables.
pub fn expand_monomials(p: &SymPoly, r: usize) -> Result<SymPoly> {
    let images: Vec<SymPoly> = match p.alphabet() {
        Alphabet::E | Alphabet::P => (1..=p.vars() as u32)
            .map(|i| elementary_symmetric(i, r))
            .collect(),
        Alphabet::H => (1..=p.vars() as u32)
            .map(|i| complete_symmetric(i, r))
            .collect(),
        Alphabet::Y => {
            if p.max_index() > r {
                return Err(Error::GeneratorOutOfRange {
                    index: p.max_index(),
                    max: r,
                });
            }
            return Ok(p.with_vars(r));
        }
    };
    if images.is_empty() {
        return Ok(SymPoly::constant(Alphabet::Y, r, p.constant_term()));
    }
    Ok(p.substitute(&images))
}

/// Writes a symmetric polynomial in `y_1..y_r` in the Schur basis of `Λ_r`.
pub fn decompose_schur(p: &SymPoly, r: usize) -> Result<SchurVector> {
    if p.alphabet() != Alphabet::Y {
        return Err(Error::AlphabetMismatch {
            expected: "y".into(),
            found: p.alphabet().to_string(),
        });
    }
    if p.max_index() > r {
        return Err(Error::GeneratorOutOfRange {
            index: p.max_index(),
            max: r,
        });
    }
    let p = p.with_vars(r);
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric(r));
    }
    decompose_dominant(dominant_part(&p), r)
}

/// `s_λ ↦ s_λ'` coefficientwise.
pub fn omega_involution(v: &SchurVector) -> SchurVector {
    v.map_basis(|p| (p.conjugate(), false))
}

/// Terms of `p` whose exponent vector is weakly decreasing.
pub fn dominant_part(p: &SymPoly) -> Dominant {
    p.terms()
        .iter()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect()
}

/// Leading-term elimination against Schur polynomials. The lexicographically
/// largest remaining dominant monomial `y^λ` always indexes the next Schur
/// class, with coefficient equal to that of `y^λ`.
pub fn decompose_dominant(mut d: Dominant, r: usize) -> Result<SchurVector> {
    let mut out = SchurVector::zero();
    while let Some((lead, c)) = d.pop_last() {
        let lambda = Partition::from_padded(&lead)
            .map_err(|_| Error::EliminationFailed(format!("leading exponent {lead:?} is not dominant")))?;
        let expansion = schur_dominant(&lambda, r);
        let mut cancelled = false;
        for (mu, k) in expansion.iter() {
            if *mu == lead {
                if !k.is_one() {
                    return Err(Error::EliminationFailed(format!(
                        "diagonal Kostka number for {lambda} is {k}"
                    )));
                }
                cancelled = true;
                continue;
            }
            let slot = d.entry(mu.clone()).or_default();
            *slot -= &c * k;
            if slot.is_zero() {
                d.remove(mu);
            }
        }
        if !cancelled {
            return Err(Error::EliminationFailed(format!(
                "s{lambda} does not contain its own leading monomial"
            )));
        }
        out.add_term(lambda, c);
    }
    Ok(out)
}

type Cache<K, V> = LazyLock<Mutex<HashMap<K, Arc<V>>>>;

static KOSTKA: LazyLock<Mutex<HashMap<(Partition, Partition), BigInt>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.weight() != mu.weight() || lambda.len() > mu.len() || !lambda.dominates(mu) {
        return BigInt::zero();
    }
    if mu.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(k) = KOSTKA.lock().unwrap().get(&key) {
        return k.clone();
    }
    // The cells holding the largest entry form a horizontal strip of size μ_last.
    let strip = *mu.parts().last().unwrap();
    let rest = Partition::new(mu.parts()[..mu.len() - 1].to_vec()).unwrap();
    let mut total = BigInt::zero();
    for inner in horizontal_strips(lambda, strip) {
        total += kostka(&inner, &rest);
    }
    KOSTKA.lock().unwrap().insert(key, total.clone());
    total
}

/// Partitions `κ ⊂ λ` with `λ/κ` a horizontal strip of `size` boxes.
fn horizontal_strips(lambda: &Partition, size: u32) -> Vec<Partition> {
    fn go(lambda: &Partition, i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            if rem == 0 {
                out.push(Partition::from_padded(cur).unwrap());
            }
            return;
        }
        let hi = lambda.part(i);
        let lo = lambda.part(i + 1);
        for k in lo..=hi {
            let removed = hi - k;
            if removed > rem {
                continue;
            }
            cur.push(k);
            go(lambda, i + 1, rem - removed, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, size, &mut Vec::new(), &mut out);
    out
}

type DominantCache = HashMap<(Partition, usize), Arc<Vec<(Exponent, BigInt)>>>;

static SCHUR_DOMINANT: LazyLock<Mutex<DominantCache>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// Dominant monomials of `s_λ(y_1..y_r)` with their Kostka coefficients.
pub fn schur_dominant(lambda: &Partition, r: usize) -> Arc<Vec<(Exponent, BigInt)>> {
    let key = (lambda.clone(), r);
    if let Some(v) = SCHUR_DOMINANT.lock().unwrap().get(&key) {
        return v.clone();
    }
    let mut terms = Vec::new();
    if lambda.len() <= r {
        for mu in partitions_of(lambda.weight(), r, lambda.first()) {
            let k = kostka(lambda, &mu);
            if !k.is_zero() {
                terms.push((mu.padded(r), k));
            }
        }
    }
    let v = Arc::new(terms);
    SCHUR_DOMINANT.lock().unwrap().insert(key, v.clone());
    v
}

static SCHUR_FULL: Cache<(Partition, usize), SymPoly> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Full monomial expansion of `s_λ(y_1..y_r)` from its Kostka numbers.
pub fn schur_monomials(lambda: &Partition, r: usize) -> Arc<SymPoly> {
    let key = (lambda.clone(), r);
    if let Some(p) = SCHUR_FULL.lock().unwrap().get(&key) {
        return p.clone();
    }
    let mut p = SymPoly::zero(Alphabet::Y, r);
    for (mu, k) in schur_dominant(lambda, r).iter() {
        for exp in distinct_permutations(mu) {
            p.add_term(exp, k.clone());
        }
    }
    let p = Arc::new(p);
    SCHUR_FULL.lock().unwrap().insert(key, p.clone());
    p
}

fn distinct_permutations(v: &[u32]) -> Vec<Exponent> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // Lexicographic successor until the sequence is decreasing.
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Dominant part of `a * b` where `a` is given in full and `b` is symmetric
/// and given by its dominant part. Both live in `r` variables.
pub fn mul_full_dominant(a: &SymPoly, b: &Dominant, r: usize) -> Dominant {
    let mut out = Dominant::new();
    if a.is_zero() || b.is_empty() {
        return out;
    }
    let a = a.with_vars(r);
    let max_a = a.terms().keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0);
    let max_b = b.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0);
    let weights_a: BTreeSet<u32> = a.terms().keys().map(|e| e.iter().sum()).collect();
    let weights_b: BTreeSet<u32> = b.keys().map(|e| e.iter().sum()).collect();
    let targets: BTreeSet<u32> = weights_a
        .iter()
        .flat_map(|x| weights_b.iter().map(move |y| x + y))
        .collect();
    let mut diff = vec![0u32; r];
    for w in targets {
        for nu in partitions_of(w, r, max_a + max_b) {
            let nu = nu.padded(r);
            let mut c = BigInt::zero();
            'terms: for (alpha, ca) in a.terms() {
                for i in 0..r {
                    if alpha[i] > nu[i] {
                        continue 'terms;
                    }
                    diff[i] = nu[i] - alpha[i];
                }
                let mut key = diff.clone();
                key.sort_unstable_by(|x, y| y.cmp(x));
                if let Some(cb) = b.get(&key) {
                    c += ca * cb;
                }
            }
            if !c.is_zero() {
                out.insert(nu, c);
            }
        }
    }
    out
}

/// Dominant part of a polynomial in `e`, `p` or `h` generators after
/// substituting symmetric polynomials in `y_1..y_r`. Agrees with
/// `dominant_part(expand_monomials(p, r))` without building full expansions.
pub fn dominant_expansion(p: &SymPoly, r: usize) -> Result<Dominant> {
    let gens: Vec<SymPoly> = match p.alphabet() {
        Alphabet::E | Alphabet::P => (1..=p.vars() as u32).map(|i| elementary_symmetric(i, r)).collect(),
        Alphabet::H => (1..=p.vars() as u32).map(|i| complete_symmetric(i, r)).collect(),
        Alphabet::Y => return Ok(dominant_part(&expand_monomials(p, r)?)),
    };
    let mut total = Dominant::new();
    for (exp, c) in p.terms() {
        let mut d = Dominant::new();
        d.insert(vec![0; r], c.clone());
        for (i, &a) in exp.iter().enumerate() {
            for _ in 0..a {
                d = mul_full_dominant(&gens[i], &d, r);
            }
        }
        for (e, x) in d {
            let slot = total.entry(e.clone()).or_default();
            *slot += x;
            if slot.is_zero() {
                total.remove(&e);
            }
        }
    }
    Ok(total)
}

/// Schur-basis expansion in `Λ_r` of a polynomial in `e`, `p` or `h`
/// generators.
pub fn to_schur_basis(p: &SymPoly, r: usize) -> Result<SchurVector> {
    decompose_dominant(dominant_expansion(p, r)?, r)
}

static LR_CACHE: Cache<(Partition, Partition, usize), SchurVector> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `s_λ · s_μ` in `Λ_r`, expanded in the Schur basis through monomial
/// expansion and leading-term elimination. Memoized on `(λ, μ, r)`.
pub fn schur_product(lambda: &Partition, mu: &Partition, r: usize) -> Arc<SchurVector> {
    let (a, b) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
    let key = (a.clone(), b.clone(), r);
    if let Some(v) = LR_CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let full = schur_monomials(a, r);
    let dom: Dominant = schur_dominant(b, r).iter().cloned().collect();
    let product = mul_full_dominant(&full, &dom, r);
    let v = Arc::new(
        decompose_dominant(product, r).expect("product of Schur polynomials is symmetric"),
    );
    LR_CACHE.lock().unwrap().insert(key, v.clone());
    v
}
