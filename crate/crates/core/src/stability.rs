//! Degree-wise stabilization of the Grassmannian and flag rings as `n` grows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flagring::{reduce, FlagSpec, ReductionOrder};
use crate::grassring::GrassSpec;
use crate::partition::partitions_of;
use crate::poly::{Alphabet, Exponent, SymPoly};
use crate::schur::SchurVector;

/// Restriction `A(HGr(r,n+1)) -> A(HGr(r,n))`, `e_i ↦ e_i`, hits every basis
/// element: each `s_λ` of the target lifts to a class whose restriction is
/// `s_λ` again.
pub fn restriction_surjective(r: usize, n: usize) -> Result<bool> {
    let target = GrassSpec::new(r, n)?;
    let source = GrassSpec::new(r, n + 1)?;
    for lambda in target.basis() {
        let v = SchurVector::unit(lambda);
        let lifted = source.normal_form(&target.lift(&v)?)?;
        let back = target.normal_form(&source.lift(&lifted)?)?;
        if back != v {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StableForm {
    pub value: SchurVector,
    /// Smallest level from which the normal form no longer changes, up to
    /// the level computed.
    pub witness: usize,
}

/// Normal form of `p_1^(a_1) .. p_r^(a_r)` in `HGr(r,n)` and its
/// stabilization level.
pub fn stable_normal_form(r: usize, exps: &[u32], n: usize) -> Result<StableForm> {
    if exps.len() != r {
        return Err(Error::InvalidArgument(format!(
            "expected {r} exponents, found {}",
            exps.len()
        )));
    }
    GrassSpec::new(r, n)?;
    let mono = SymPoly::monomial(Alphabet::P, exps.to_vec(), 1.into());
    let forms: Vec<SchurVector> = (r..=n)
        .map(|m| GrassSpec::new(r, m)?.normal_form(&mono))
        .collect::<Result<_>>()?;
    let value = forms.last().expect("level n is computed").clone();
    let stable_from = forms.iter().rposition(|f| *f != value).map_or(0, |i| i + 1);
    Ok(StableForm {
        value,
        witness: r + stable_from,
    })
}

/// Monomials in `p_1..p_r` of weighted degree `w` (`deg p_i = i`).
pub fn p_monomials(r: usize, w: u32) -> Vec<Exponent> {
    partitions_of(w, usize::MAX, r as u32)
        .into_iter()
        .map(|mu| {
            let mut exps = vec![0u32; r];
            for &part in mu.parts() {
                exps[part as usize - 1] += 1;
            }
            exps
        })
        .collect()
}

/// The normal forms of all `y`-monomials of degree `<= cap` agree across
/// consecutive levels of `n_list` wherever `cap <= n - r`, and there they are
/// the monomials themselves.
pub fn flag_limit_check(r: usize, n_list: &[usize], cap: u32) -> Result<bool> {
    let specs: Vec<FlagSpec> = n_list.iter().map(|&n| FlagSpec::new(r, n)).collect::<Result<_>>()?;
    let monomials: Vec<SymPoly> = (0..=cap)
        .flat_map(|d| exponents_of_degree(d, r))
        .map(|e| SymPoly::monomial(Alphabet::Y, e, 1.into()))
        .collect();
    let in_range = |s: &FlagSpec| cap as usize + s.r() <= s.n();
    for pair in specs.windows(2) {
        if !(in_range(&pair[0]) && in_range(&pair[1])) {
            continue;
        }
        for m in &monomials {
            let a = reduce(pair[0], m, ReductionOrder::LeadingFirst)?;
            let b = reduce(pair[1], m, ReductionOrder::LeadingFirst)?;
            if a != b || a != *m {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn exponents_of_degree(d: u32, r: usize) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; r];
    fn go(i: usize, rem: u32, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if i + 1 == cur.len() {
            cur[i] = rem;
            out.push(cur.clone());
            return;
        }
        for a in 0..=rem {
            cur[i] = a;
            go(i + 1, rem - a, cur, out);
        }
    }
    if r == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(0, d, &mut cur, &mut out);
    out
}

/// An element of `Z[[x_1..x_k]]` known up to a weighted degree, where the
/// grading is `deg p_i = i` for the `p` alphabet and `deg y_i = 1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TruncatedSeries {
    degree_cap: u32,
    terms: SymPoly,
}

impl TruncatedSeries {
    pub fn new(p: &SymPoly, degree_cap: u32) -> Self {
        let weights = Self::weights(p.alphabet(), p.vars());
        let kept = p
            .terms()
            .iter()
            .filter(|(e, _)| weighted(e, &weights) <= degree_cap)
            .map(|(e, c)| (e.clone(), c.clone()));
        let terms = SymPoly::from_terms(p.alphabet(), p.vars(), kept).expect("same shape");
        TruncatedSeries { degree_cap, terms }
    }

    fn weights(alphabet: Alphabet, vars: usize) -> Vec<u32> {
        match alphabet {
            Alphabet::P => (1..=vars as u32).collect(),
            _ => vec![1; vars],
        }
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn terms(&self) -> &SymPoly {
        &self.terms
    }

    /// Product known up to the smaller of the two caps.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cap = self.degree_cap.min(other.degree_cap);
        TruncatedSeries::new(&(&self.terms * &other.terms), cap)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cap = self.degree_cap.min(other.degree_cap);
        TruncatedSeries::new(&(&self.terms + &other.terms), cap)
    }

    pub fn is_well_formed(&self) -> bool {
        let weights = Self::weights(self.terms.alphabet(), self.terms.vars());
        self.terms.terms().keys().all(|e| weighted(e, &weights) <= self.degree_cap)
    }
}

fn weighted(e: &[u32], w: &[u32]) -> u32 {
    e.iter().zip(w).map(|(a, b)| a * b).sum()
}
