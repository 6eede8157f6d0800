//! The ring `A(HFlag(1^r; n)) = Z[y_1..y_r] / I_(r,n)` and its structure as a
//! free module of rank `r!` over `A(HGr(r,n))`.
//!
//! `I_(r,n)` is generated either by `h_n, h_(n-1), .., h_(n-r+1)` in all `r`
//! variables or by the triangular list `h_(n-i+1)(y_1..y_i)`. The triangular
//! generator `i` is monic of degree `n-i+1` in `y_i`, so the list is a
//! rewriting system for lex order with `y_r > .. > y_1` and reduced
//! monomials are exactly those with `deg_(y_i) <= n-i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Add;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grassring::GrassSpec;
use crate::linalg::{smith_normal_form, IntMatrix, SmithForm};
use crate::partition::{binomial, enumerate_box, Partition};
use crate::poly::{Alphabet, Exponent, SymPoly};
use crate::schur::SchurVector;
use crate::symfun::{complete_symmetric, expand_monomials, schur_monomials};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlagSpec {
    r: usize,
    n: usize,
}

impl FlagSpec {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r == 0 || r > n {
            return Err(Error::InvalidSpec { r, n });
        }
        Ok(FlagSpec { r, n })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grassmannian(&self) -> GrassSpec {
        GrassSpec::new(self.r, self.n).expect("r <= n")
    }

    /// Degree in `y_i` of the `i`-th triangular generator (1-based).
    pub fn degree_bound(&self, i: usize) -> u32 {
        (self.n + 1 - i) as u32
    }

    /// Free Z-rank `r! * C(n, r)`.
    pub fn rank(&self) -> u64 {
        (1..=self.r as u64).product::<u64>() * binomial(self.n as u64, self.r as u64)
    }

    fn check_poly(&self, p: &SymPoly) -> Result<()> {
        if p.alphabet() != Alphabet::Y {
            return Err(Error::AlphabetMismatch {
                expected: Alphabet::Y.to_string(),
                found: p.alphabet().to_string(),
            });
        }
        if p.max_index() > self.r {
            return Err(Error::GeneratorOutOfRange {
                index: p.max_index(),
                max: self.r,
            });
        }
        Ok(())
    }
}

impl fmt::Display for FlagSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HFlag(1^{};{})", self.r, self.n)
    }
}

/// `h_(n-i+1)(y_1..y_i)` for `i = 1..r`, each written in `r` variables.
pub fn ideal_triangular(spec: FlagSpec) -> Vec<SymPoly> {
    (1..=spec.r)
        .map(|i| complete_symmetric(spec.degree_bound(i), i).with_vars(spec.r))
        .collect()
}

/// `h_n, h_(n-1), .., h_(n-r+1)` in all `r` variables.
pub fn ideal_full(spec: FlagSpec) -> Vec<SymPoly> {
    (1..=spec.r)
        .map(|i| complete_symmetric(spec.degree_bound(i), spec.r))
        .collect()
}

/// Which reducible term is rewritten next, and with which generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOrder {
    /// Largest term first, highest applicable generator.
    LeadingFirst,
    /// Smallest term first, lowest applicable generator.
    TrailingFirst,
}

/// Normal form of `p` modulo the triangular ideal.
pub fn reduce(spec: FlagSpec, p: &SymPoly, order: ReductionOrder) -> Result<SymPoly> {
    spec.check_poly(p)?;
    let r = spec.r;
    // Each generator is y_i^d + tail; store -tail.
    let rewrites: Vec<Vec<(Exponent, BigInt)>> = ideal_triangular(spec)
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut lead = vec![0; r];
            lead[i] = spec.degree_bound(i + 1);
            g.terms()
                .iter()
                .filter(|(e, _)| **e != lead)
                .map(|(e, c)| (e.clone(), -c))
                .collect()
        })
        .collect();

    // Keys are reversed exponents so that map order is lex with y_r leading.
    let mut pending: BTreeMap<Exponent, BigInt> = BTreeMap::new();
    for (e, c) in p.with_vars(r).terms() {
        pending.insert(reversed(e), c.clone());
    }
    let mut out = SymPoly::zero(Alphabet::Y, r);
    loop {
        let next = match order {
            ReductionOrder::LeadingFirst => pending.pop_last(),
            ReductionOrder::TrailingFirst => pending.pop_first(),
        };
        let Some((key, c)) = next else { break };
        let exp = reversed(&key);
        let mut applicable = (0..r).filter(|&i| exp[i] >= spec.degree_bound(i + 1));
        let gen = match order {
            ReductionOrder::LeadingFirst => applicable.next_back(),
            ReductionOrder::TrailingFirst => applicable.next(),
        };
        let Some(i) = gen else {
            out.add_term(exp, c);
            continue;
        };
        let mut base = exp;
        base[i] -= spec.degree_bound(i + 1);
        for (t, b) in &rewrites[i] {
            let e: Exponent = base.iter().zip(t).map(|(a, b)| a + b).collect();
            let entry = pending.entry(reversed(&e)).or_insert_with(BigInt::zero);
            *entry += &c * b;
            if entry.is_zero() {
                pending.remove(&reversed(&e));
            }
        }
    }
    Ok(out)
}

fn reversed(e: &[u32]) -> Exponent {
    e.iter().rev().copied().collect()
}

/// Exponent vectors with `deg_(y_i) <= n-i`, grouped by total degree.
pub fn reduced_monomials(spec: FlagSpec) -> BTreeMap<u32, Vec<Exponent>> {
    let mut out: BTreeMap<u32, Vec<Exponent>> = BTreeMap::new();
    let bounds: Vec<u32> = (1..=spec.r).map(|i| spec.degree_bound(i)).collect();
    let mut cur = vec![0u32; spec.r];
    loop {
        out.entry(cur.iter().sum()).or_default().push(cur.clone());
        let Some(i) = (0..spec.r).find(|&i| cur[i] + 1 < bounds[i]) else {
            break;
        };
        cur[i] += 1;
        for x in &mut cur[..i] {
            *x = 0;
        }
    }
    out
}

/// A monomial `y_1^(a_1) .. y_(r-1)^(a_(r-1))` of the module basis, ordered by
/// degree and then lexicographically from the largest exponent vector down.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrMonomial(Vec<u32>);

impl BrMonomial {
    pub fn new(exps: Vec<u32>) -> Self {
        BrMonomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Exponent vector in `r` variables (the last one absent).
    pub fn padded(&self, r: usize) -> Exponent {
        let mut e = self.0.clone();
        e.resize(r, 0);
        e
    }

    pub fn to_poly(&self, r: usize) -> SymPoly {
        SymPoly::monomial(Alphabet::Y, self.padded(r), BigInt::one())
    }
}

impl Ord for BrMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for BrMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BrMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = SymPoly::monomial(Alphabet::Y, self.0.clone(), BigInt::one());
        write!(f, "{p}")
    }
}

impl Serialize for BrMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BrMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(BrMonomial(Vec::deserialize(d)?))
    }
}

/// `0 <= a_i <= r-i`, in module-basis order. There are `r!` of them.
pub fn basis_br(r: usize) -> Vec<BrMonomial> {
    let len = r.saturating_sub(1);
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    loop {
        out.push(BrMonomial(cur.clone()));
        let Some(i) = (0..len).find(|&i| (cur[i] as usize) < r - 1 - i) else {
            break;
        };
        cur[i] += 1;
        for x in &mut cur[..i] {
            *x = 0;
        }
    }
    out.sort();
    out
}

/// `Σ_b c_b · b` with `c_b` in the Grassmannian ring. Zero coefficients are
/// not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleElement(BTreeMap<BrMonomial, SchurVector>);

impl ModuleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(b: BrMonomial, v: SchurVector) -> Self {
        let mut m = Self::zero();
        m.add_term(b, &v);
        m
    }

    pub fn add_term(&mut self, b: BrMonomial, v: &SchurVector) {
        let sum = match self.0.remove(&b) {
            Some(old) => &old + v,
            None => v.clone(),
        };
        if !sum.is_zero() {
            self.0.insert(b, sum);
        }
    }

    pub fn get(&self, b: &BrMonomial) -> SchurVector {
        self.0.get(b).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BrMonomial, &SchurVector)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

impl Add for &ModuleElement {
    type Output = ModuleElement;
    fn add(self, rhs: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        for (b, v) in &rhs.0 {
            out.add_term(b.clone(), v);
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleEntry {
    monomial: BrMonomial,
    coeff: SchurVector,
}

impl Serialize for ModuleElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<ModuleEntry> = self
            .0
            .iter()
            .map(|(b, v)| ModuleEntry {
                monomial: b.clone(),
                coeff: v.clone(),
            })
            .collect();
        entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModuleElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut out = ModuleElement::zero();
        for e in Vec::<ModuleEntry>::deserialize(d)? {
            out.add_term(e.monomial, &e.coeff);
        }
        Ok(out)
    }
}

/// Solver for one degree of the flag ring: the reduced images of
/// `b · s_λ(y)` against the reduced monomials of that degree.
struct DegreeBlock {
    rows: HashMap<Exponent, usize>,
    columns: Vec<(BrMonomial, Partition)>,
    smith: SmithForm,
}

/// Precomputed module structure of one flag ring.
pub struct FlagRing {
    spec: FlagSpec,
    blocks: BTreeMap<u32, DegreeBlock>,
}

static FLAG_RINGS: LazyLock<Mutex<HashMap<FlagSpec, Arc<FlagRing>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

impl FlagRing {
    /// Shared instance for `spec`, built on first use.
    pub fn get(spec: FlagSpec) -> Result<Arc<FlagRing>> {
        if let Some(ring) = FLAG_RINGS.lock().unwrap().get(&spec) {
            return Ok(ring.clone());
        }
        let ring = Arc::new(Self::build(spec)?);
        FLAG_RINGS.lock().unwrap().insert(spec, ring.clone());
        Ok(ring)
    }

    fn build(spec: FlagSpec) -> Result<FlagRing> {
        let r = spec.r;
        let mut columns: BTreeMap<u32, Vec<(BrMonomial, Partition, SymPoly)>> = BTreeMap::new();
        for b in basis_br(r) {
            for lambda in enumerate_box(r, spec.n - r) {
                let s = schur_monomials(&lambda, r).shift(&b.padded(r));
                let red = reduce(spec, &s, ReductionOrder::LeadingFirst)?;
                columns
                    .entry(b.degree() + lambda.weight())
                    .or_default()
                    .push((b.clone(), lambda, red));
            }
        }
        let monomials = reduced_monomials(spec);
        if monomials.keys().ne(columns.keys()) {
            return Err(Error::EliminationFailed(format!(
                "{spec}: spanning set and reduced monomials occupy different degrees"
            )));
        }
        let mut blocks = BTreeMap::new();
        for (deg, cols) in columns {
            let rows = &monomials[&deg];
            if rows.len() != cols.len() {
                return Err(Error::EliminationFailed(format!(
                    "{spec}: degree {deg} has {} monomials but {} spanning elements",
                    rows.len(),
                    cols.len()
                )));
            }
            let index: HashMap<Exponent, usize> =
                rows.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
            let mut matrix = IntMatrix::zeros(rows.len(), cols.len());
            for (j, (_, _, poly)) in cols.iter().enumerate() {
                for (e, c) in poly.terms() {
                    matrix.set(index[e], j, c.clone());
                }
            }
            let smith = smith_normal_form(&matrix);
            if smith.rank() != rows.len() || !smith.is_saturated() {
                return Err(Error::EliminationFailed(format!(
                    "{spec}: degree {deg} spanning set is not a Z-basis"
                )));
            }
            blocks.insert(
                deg,
                DegreeBlock {
                    rows: index,
                    columns: cols.into_iter().map(|(b, l, _)| (b, l)).collect(),
                    smith,
                },
            );
        }
        Ok(FlagRing { spec, blocks })
    }

    pub fn spec(&self) -> FlagSpec {
        self.spec
    }

    /// Writes `p` as `Σ_(b in B_r) c_b · b`.
    pub fn decompose(&self, p: &SymPoly) -> Result<ModuleElement> {
        let red = reduce(self.spec, p, ReductionOrder::LeadingFirst)?;
        self.decompose_reduced(&red)
    }

    fn decompose_reduced(&self, red: &SymPoly) -> Result<ModuleElement> {
        let mut by_degree: BTreeMap<u32, Vec<(&Exponent, &BigInt)>> = BTreeMap::new();
        for (e, c) in red.terms() {
            by_degree.entry(e.iter().sum()).or_default().push((e, c));
        }
        let mut out = ModuleElement::zero();
        for (deg, terms) in by_degree {
            let block = self.blocks.get(&deg).ok_or_else(|| {
                Error::EliminationFailed(format!("degree {deg} is beyond the top of {}", self.spec))
            })?;
            let mut rhs = vec![BigInt::zero(); block.rows.len()];
            for (e, c) in terms {
                let i = block.rows.get(e).ok_or_else(|| {
                    Error::EliminationFailed(format!("{e:?} is not a reduced monomial"))
                })?;
                rhs[*i] = c.clone();
            }
            let x = block
                .smith
                .solve(&rhs)
                .ok_or_else(|| Error::EliminationFailed(format!("degree {deg} has no solution")))?;
            for ((b, lambda), c) in block.columns.iter().zip(x) {
                out.add_term(b.clone(), &SchurVector::term(lambda.clone(), c));
            }
        }
        Ok(out)
    }
}

pub fn module_decompose(spec: FlagSpec, p: &SymPoly) -> Result<ModuleElement> {
    FlagRing::get(spec)?.decompose(p)
}

/// Image of a Grassmannian class under `p_i ↦ e_i(y_1..y_r)`.
pub fn pullback_q(spec: FlagSpec, v: &SchurVector) -> Result<SymPoly> {
    let lifted = spec.grassmannian().lift(v)?;
    Ok(expand_monomials(&lifted, spec.r)?.with_vars(spec.r))
}

/// Cofactors `Q` with `triangular[i] = Σ_k Q[i][k] · full[k]`, built from
/// `h_m(y_1..y_j) = h_m(y_1..y_(j+1)) - y_(j+1) h_(m-1)(y_1..y_(j+1))`.
pub fn triangular_cofactors(spec: FlagSpec) -> Vec<Vec<SymPoly>> {
    fn express(
        spec: FlagSpec,
        m: usize,
        j: usize,
        memo: &mut HashMap<(usize, usize), Vec<SymPoly>>,
    ) -> Vec<SymPoly> {
        if let Some(v) = memo.get(&(m, j)) {
            return v.clone();
        }
        let r = spec.r;
        let out = if j == r {
            let mut v = vec![SymPoly::zero(Alphabet::Y, r); r];
            v[spec.n - m] = SymPoly::one(Alphabet::Y, r);
            v
        } else {
            let y = SymPoly::generator(Alphabet::Y, r, j + 1);
            let a = express(spec, m, j + 1, memo);
            let b = express(spec, m - 1, j + 1, memo);
            a.iter().zip(&b).map(|(a, b)| a - &(&y * b)).collect()
        };
        memo.insert((m, j), out.clone());
        out
    }
    let mut memo = HashMap::new();
    (1..=spec.r)
        .map(|i| express(spec, spec.n + 1 - i, i, &mut memo))
        .collect()
}

/// Both generator lists generate the same ideal: every full generator reduces
/// to zero modulo the triangular one, and every triangular generator is an
/// explicit combination of the full ones.
pub fn ideals_equal(spec: FlagSpec) -> Result<bool> {
    for g in ideal_full(spec) {
        if !reduce(spec, &g, ReductionOrder::LeadingFirst)?.is_zero() {
            return Ok(false);
        }
    }
    let full = ideal_full(spec);
    for (t, q) in ideal_triangular(spec).iter().zip(triangular_cofactors(spec)) {
        let combo = q
            .iter()
            .zip(&full)
            .fold(SymPoly::zero(Alphabet::Y, spec.r), |acc, (a, f)| &acc + &(a * f));
        if combo != *t {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(y_i^n ∈ I for all i, every generator term has degree >= n-r+1)`.
pub fn ideal_inclusions(spec: FlagSpec) -> Result<(bool, bool)> {
    let mut powers = true;
    for i in 1..=spec.r {
        let p = SymPoly::generator(Alphabet::Y, spec.r, i).pow(spec.n as u32);
        powers &= reduce(spec, &p, ReductionOrder::LeadingFirst)?.is_zero();
    }
    let floor = (spec.n - spec.r + 1) as u32;
    let degrees = ideal_triangular(spec)
        .iter()
        .chain(&ideal_full(spec))
        .all(|g| g.min_total_degree().is_some_and(|d| d >= floor));
    Ok((powers, degrees))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;
    use rand::{Rng, SeedableRng};

    fn y(exp: &[u32]) -> SymPoly {
        SymPoly::monomial(Alphabet::Y, exp.to_vec(), BigInt::one())
    }

    fn spec(r: usize, n: usize) -> FlagSpec {
        FlagSpec::new(r, n).unwrap()
    }

    #[test]
    fn triangular_generators() {
        assert_eq!(ideal_triangular(spec(1, 4)), vec![y(&[4])]);
        assert_eq!(ideal_triangular(spec(2, 2)), vec![y(&[2, 0]), &y(&[1, 0]) + &y(&[0, 1])]);
        let h2 = &(&y(&[2, 0]) + &y(&[1, 1])) + &y(&[0, 2]);
        assert_eq!(ideal_triangular(spec(2, 3)), vec![y(&[3, 0]), h2.clone()]);
        assert_eq!(ideal_full(spec(2, 3))[1], h2);
        assert_eq!(ideal_full(spec(1, 5)), ideal_triangular(spec(1, 5)));
    }

    #[test]
    fn basis_listing() {
        assert_eq!(basis_br(1), vec![BrMonomial::new(vec![])]);
        assert_eq!(basis_br(2), vec![BrMonomial::new(vec![0]), BrMonomial::new(vec![1])]);
        let b3: Vec<Vec<u32>> = basis_br(3).into_iter().map(|b| b.0).collect();
        assert_eq!(
            b3,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![2, 1]]
        );
        for r in 1..=5 {
            assert_eq!(basis_br(r).len() as u64, (1..=r as u64).product::<u64>());
        }
    }

    #[test]
    fn reduced_monomial_count_matches_rank() {
        for n in 1..=6 {
            for r in 1..=n {
                let s = spec(r, n);
                let total: usize = reduced_monomials(s).values().map(Vec::len).sum();
                assert_eq!(total as u64, s.rank());
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let s = spec(2, 4);
        let e1 = &y(&[1, 0]) + &y(&[0, 1]);
        let got = module_decompose(s, &e1).unwrap();
        assert_eq!(got, ModuleElement::term(BrMonomial::new(vec![0]), SchurVector::unit(part(&[1]))));

        let one = module_decompose(spec(3, 5), &SymPoly::one(Alphabet::Y, 3)).unwrap();
        assert_eq!(one, ModuleElement::term(BrMonomial::new(vec![0, 0]), SchurVector::one()));

        let got = module_decompose(spec(2, 2), &y(&[1, 0])).unwrap();
        assert_eq!(got, ModuleElement::term(BrMonomial::new(vec![1]), SchurVector::one()));
    }

    #[test]
    fn pullback_examples() {
        let s = spec(2, 4);
        assert_eq!(
            pullback_q(s, &SchurVector::unit(part(&[1]))).unwrap(),
            &y(&[1, 0]) + &y(&[0, 1])
        );
        assert_eq!(pullback_q(s, &SchurVector::unit(part(&[1, 1]))).unwrap(), y(&[1, 1]));
        assert_eq!(pullback_q(s, &SchurVector::one()).unwrap(), SymPoly::one(Alphabet::Y, 2));
    }

    #[test]
    fn ideal_equality_small() {
        for n in 1..=6 {
            for r in 1..=n.min(4) {
                assert!(ideals_equal(spec(r, n)).unwrap(), "r={r} n={n}");
            }
        }
    }

    #[test]
    fn inclusions() {
        assert_eq!(ideal_inclusions(spec(2, 3)).unwrap(), (true, true));
        assert_eq!(ideal_inclusions(spec(1, 4)).unwrap(), (true, true));
        assert_eq!(ideal_inclusions(spec(3, 5)).unwrap(), (true, true));
    }

    #[test]
    fn spanning_set_round_trips() {
        for n in 1..=5 {
            for r in 1..=n.min(3) {
                let s = spec(r, n);
                for b in basis_br(r) {
                    for lambda in enumerate_box(r, n - r) {
                        let p = &schur_monomials(&lambda, r).with_vars(r) * &b.to_poly(r);
                        let expect = ModuleElement::term(b.clone(), SchurVector::unit(lambda.clone()));
                        assert_eq!(module_decompose(s, &p).unwrap(), expect);
                    }
                }
            }
        }
    }

    fn random_poly(rng: &mut impl Rng, r: usize, max_deg: u32, terms: usize) -> SymPoly {
        let mut p = SymPoly::zero(Alphabet::Y, r);
        for _ in 0..terms {
            let exp: Exponent = (0..r).map(|_| rng.gen_range(0..=max_deg)).collect();
            p.add_term(exp, BigInt::from(rng.gen_range(-5..=5)));
        }
        p
    }

    #[test]
    fn reduction_orders_agree() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.gen_range(2..=5);
            let r = rng.gen_range(1..=n.min(3));
            let s = spec(r, n);
            let p = random_poly(&mut rng, r, n as u32 + 2, 6);
            let a = reduce(s, &p, ReductionOrder::LeadingFirst).unwrap();
            let b = reduce(s, &p, ReductionOrder::TrailingFirst).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn decomposition_is_linear() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        let s = spec(3, 5);
        for _ in 0..30 {
            let p = random_poly(&mut rng, 3, 4, 5);
            let q = random_poly(&mut rng, 3, 4, 5);
            let sum = module_decompose(s, &(&p + &q)).unwrap();
            let parts = &module_decompose(s, &p).unwrap() + &module_decompose(s, &q).unwrap();
            assert_eq!(sum, parts);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FlagSpec::new(0, 3).is_err());
        assert!(FlagSpec::new(4, 3).is_err());
        let s = spec(2, 3);
        assert!(reduce(s, &y(&[0, 0, 1]), ReductionOrder::LeadingFirst).is_err());
        let e = SymPoly::generator(Alphabet::E, 2, 1);
        assert!(module_decompose(s, &e).is_err());
    }

    #[test]
    fn module_element_json() {
        let m = ModuleElement::term(BrMonomial::new(vec![1]), SchurVector::unit(part(&[2])));
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[{"monomial":[1],"coeff":[{"partition":[2],"coeff":"1"}]}]"#);
        assert_eq!(serde_json::from_str::<ModuleElement>(&s).unwrap(), m);
    }
}
