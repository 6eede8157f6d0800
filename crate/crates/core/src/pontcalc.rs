//! Pontryagin classes of formal symplectic bundles.
//!
//! A [`SympClass`] stores `p_1..p_r` in an [`Ambient`] ring: either a free
//! polynomial ring (for universal identities and formal roots) or a
//! Grassmannian ring in its Schur basis. Polynomials in `t` over the ambient
//! ring are [`TPoly`]s, stored from `t^0` upward.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassring::{augmentation, GrassSpec};
use crate::poly::{Alphabet, SymPoly};
use crate::schur::SchurVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Ambient {
    Free { alphabet: Alphabet, vars: usize },
    Grassmannian { spec: GrassSpec },
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingElem {
    Poly(SymPoly),
    Schur(SchurVector),
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Poly(p) => write!(f, "{p}"),
            RingElem::Schur(v) => write!(f, "{v}"),
        }
    }
}

impl Ambient {
    pub fn free(alphabet: Alphabet, vars: usize) -> Self {
        Ambient::Free { alphabet, vars }
    }

    pub fn zero(&self) -> RingElem {
        match *self {
            Ambient::Free { alphabet, vars } => RingElem::Poly(SymPoly::zero(alphabet, vars)),
            Ambient::Grassmannian { .. } => RingElem::Schur(SchurVector::zero()),
        }
    }

    pub fn one(&self) -> RingElem {
        match *self {
            Ambient::Free { alphabet, vars } => RingElem::Poly(SymPoly::one(alphabet, vars)),
            Ambient::Grassmannian { .. } => RingElem::Schur(SchurVector::one()),
        }
    }

    /// Generator `i` (1-based) of a free ambient ring.
    pub fn generator(&self, i: usize) -> Result<RingElem> {
        match *self {
            Ambient::Free { alphabet, vars } if (1..=vars).contains(&i) => {
                Ok(RingElem::Poly(SymPoly::generator(alphabet, vars, i)))
            }
            Ambient::Free { vars, .. } => Err(Error::GeneratorOutOfRange { index: i, max: vars }),
            Ambient::Grassmannian { .. } => Err(Error::RingMismatch),
        }
    }

    /// Checks that `x` lives in this ring and returns it in canonical shape.
    pub fn check(&self, x: &RingElem) -> Result<RingElem> {
        match (self, x) {
            (Ambient::Free { alphabet, vars }, RingElem::Poly(p)) => {
                if p.alphabet() != *alphabet {
                    return Err(Error::RingMismatch);
                }
                if p.max_index() > *vars {
                    return Err(Error::GeneratorOutOfRange {
                        index: p.max_index(),
                        max: *vars,
                    });
                }
                Ok(RingElem::Poly(p.with_vars(*vars)))
            }
            (Ambient::Grassmannian { spec }, RingElem::Schur(v)) => {
                spec.check_support(v)?;
                Ok(x.clone())
            }
            _ => Err(Error::RingMismatch),
        }
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match (a, b) {
            (RingElem::Poly(a), RingElem::Poly(b)) => RingElem::Poly(a + b),
            (RingElem::Schur(a), RingElem::Schur(b)) => RingElem::Schur(a + b),
            _ => panic!("mixed ring elements"),
        }
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        match a {
            RingElem::Poly(a) => RingElem::Poly(-a),
            RingElem::Schur(a) => RingElem::Schur(-a),
        }
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match (self, a, b) {
            (Ambient::Free { .. }, RingElem::Poly(a), RingElem::Poly(b)) => RingElem::Poly(a * b),
            (Ambient::Grassmannian { spec }, RingElem::Schur(a), RingElem::Schur(b)) => {
                RingElem::Schur(spec.multiply(a, b).expect("elements checked against the ring"))
            }
            _ => panic!("ring element does not match its ambient ring"),
        }
    }

    pub fn scale(&self, a: &RingElem, c: &BigInt) -> RingElem {
        match a {
            RingElem::Poly(a) => RingElem::Poly(a.scale(c)),
            RingElem::Schur(a) => RingElem::Schur(a.scale(c)),
        }
    }

    pub fn is_zero(&self, a: &RingElem) -> bool {
        match a {
            RingElem::Poly(a) => a.is_zero(),
            RingElem::Schur(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self, a: &RingElem) -> bool {
        *a == self.one()
    }
}

/// A polynomial in `t` over an ambient ring, coefficients from `t^0` upward
/// with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TPoly {
    ambient: Ambient,
    coeffs: Vec<RingElem>,
}

impl TPoly {
    pub fn new(ambient: Ambient, coeffs: Vec<RingElem>) -> Result<Self> {
        let coeffs = coeffs.iter().map(|c| ambient.check(c)).collect::<Result<_>>()?;
        Ok(Self::from_checked(ambient, coeffs))
    }

    fn from_checked(ambient: Ambient, mut coeffs: Vec<RingElem>) -> Self {
        while coeffs.last().is_some_and(|c| ambient.is_zero(c)) {
            coeffs.pop();
        }
        TPoly { ambient, coeffs }
    }

    pub fn zero(ambient: Ambient) -> Self {
        TPoly {
            ambient,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ambient: Ambient) -> Self {
        TPoly {
            ambient,
            coeffs: vec![ambient.one()],
        }
    }

    /// `t - a`.
    pub fn linear(ambient: Ambient, a: &RingElem) -> Result<Self> {
        Self::new(ambient, vec![ambient.neg(a), ambient.one()])
    }

    /// Reloads after deserialization, checking each coefficient.
    pub fn validated(self) -> Result<Self> {
        Self::new(self.ambient, self.coeffs)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RingElem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.ambient.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.ambient.is_one(c))
    }

    fn same_ring(&self, other: &TPoly) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &TPoly) -> Result<TPoly> {
        self.same_ring(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.ambient.add(&self.coeff(k), &other.coeff(k)))
            .collect();
        Ok(Self::from_checked(self.ambient, coeffs))
    }

    pub fn sub(&self, other: &TPoly) -> Result<TPoly> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> TPoly {
        let coeffs = self.coeffs.iter().map(|x| self.ambient.scale(x, c)).collect();
        Self::from_checked(self.ambient, coeffs)
    }

    pub fn mul(&self, other: &TPoly) -> Result<TPoly> {
        self.mul_truncated(other, usize::MAX)
    }

    /// Product with all terms of `t`-degree above `cap` dropped.
    pub fn mul_truncated(&self, other: &TPoly, cap: usize) -> Result<TPoly> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(cap.saturating_add(1));
        let mut out = vec![self.ambient.zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                let prod = self.ambient.mul(a, b);
                out[i + j] = self.ambient.add(&out[i + j], &prod);
            }
        }
        Ok(Self::from_checked(self.ambient, out))
    }

    pub fn truncate(&self, cap: usize) -> TPoly {
        let coeffs = self.coeffs.iter().take(cap.saturating_add(1)).cloned().collect();
        Self::from_checked(self.ambient, coeffs)
    }

    /// `f(-t)`.
    pub fn negate_variable(&self) -> TPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { self.ambient.neg(c) } else { c.clone() })
            .collect();
        Self::from_checked(self.ambient, coeffs)
    }

    /// `f(x)` for an element `x` of the ambient ring.
    pub fn evaluate(&self, x: &RingElem) -> Result<RingElem> {
        let x = self.ambient.check(x)?;
        let mut acc = self.ambient.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.ambient.add(&self.ambient.mul(&acc, &x), c);
        }
        Ok(acc)
    }
}

/// Pontryagin classes `p_1..p_r` of a rank `2r` symplectic bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SympClass {
    ambient: Ambient,
    classes: Vec<RingElem>,
}

impl SympClass {
    pub fn new(ambient: Ambient, classes: Vec<RingElem>) -> Result<Self> {
        let classes = classes.iter().map(|c| ambient.check(c)).collect::<Result<_>>()?;
        Ok(SympClass { ambient, classes })
    }

    /// The trivial bundle of rank `2 * half_rank`: all classes vanish.
    pub fn trivial(ambient: Ambient, half_rank: usize) -> Self {
        SympClass {
            ambient,
            classes: vec![ambient.zero(); half_rank],
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn half_rank(&self) -> usize {
        self.classes.len()
    }

    /// `p_i`, with `p_0 = 1` and `p_i = 0` above the half rank.
    pub fn class(&self, i: usize) -> RingElem {
        match i {
            0 => self.ambient.one(),
            _ => self
                .classes
                .get(i - 1)
                .cloned()
                .unwrap_or_else(|| self.ambient.zero()),
        }
    }

    pub fn classes(&self) -> &[RingElem] {
        &self.classes
    }

    /// Reloads after deserialization, checking each class against the ring.
    pub fn validated(self) -> Result<Self> {
        Self::new(self.ambient, self.classes)
    }
}

/// `1 + p_1 t + .. + p_r t^r`.
pub fn total_class(b: &SympClass) -> TPoly {
    let coeffs = (0..=b.half_rank()).map(|i| b.class(i)).collect();
    TPoly::from_checked(b.ambient, coeffs)
}

/// `t^r - p_1 t^(r-1) + .. + (-1)^r p_r`.
pub fn pontryagin_polynomial(b: &SympClass) -> TPoly {
    let r = b.half_rank();
    let coeffs = (0..=r)
        .map(|k| {
            let i = r - k;
            let p = b.class(i);
            if i % 2 == 1 {
                b.ambient.neg(&p)
            } else {
                p
            }
        })
        .collect();
    TPoly::from_checked(b.ambient, coeffs)
}

/// Classes of an orthogonal sum: `p_t(E ⊕ F) = p_t(E) p_t(F)`.
pub fn cartan_sum(b1: &SympClass, b2: &SympClass) -> Result<SympClass> {
    if b1.ambient != b2.ambient {
        return Err(Error::RingMismatch);
    }
    let amb = b1.ambient;
    let rank = b1.half_rank() + b2.half_rank();
    let classes = (1..=rank)
        .map(|i| {
            (0..=i).fold(amb.zero(), |acc, j| {
                amb.add(&acc, &amb.mul(&b1.class(i - j), &b2.class(j)))
            })
        })
        .collect();
    Ok(SympClass { ambient: amb, classes })
}

/// The class with Pontryagin roots `roots`: `p_i = e_i(roots)`, summed over
/// `i`-element subsets.
pub fn from_roots(ambient: Ambient, roots: &[RingElem]) -> Result<SympClass> {
    let roots: Vec<RingElem> = roots.iter().map(|u| ambient.check(u)).collect::<Result<_>>()?;
    let classes = (1..=roots.len())
        .map(|i| {
            roots.iter().combinations(i).fold(ambient.zero(), |acc, subset| {
                let prod = subset.into_iter().fold(ambient.one(), |p, u| ambient.mul(&p, u));
                ambient.add(&acc, &prod)
            })
        })
        .collect();
    Ok(SympClass { ambient, classes })
}

/// Monic long division. Returns the quotient when the remainder vanishes.
pub fn poly_divides(dividend: &TPoly, divisor: &TPoly) -> Result<(bool, Option<TPoly>)> {
    dividend.same_ring(divisor)?;
    if !divisor.is_monic() {
        return Err(Error::NonMonicDivisor);
    }
    let amb = dividend.ambient;
    let d = divisor.coeffs.len() - 1;
    let mut rem = dividend.coeffs.clone();
    if rem.len() <= d {
        let exact = dividend.is_zero();
        return Ok((exact, exact.then(|| TPoly::zero(amb))));
    }
    let mut quot = vec![amb.zero(); rem.len() - d];
    for k in (0..quot.len()).rev() {
        let lead = rem[k + d].clone();
        if amb.is_zero(&lead) {
            continue;
        }
        for (j, c) in divisor.coeffs.iter().enumerate() {
            rem[k + j] = amb.sub(&rem[k + j], &amb.mul(&lead, c));
        }
        quot[k] = lead;
    }
    if rem.iter().all(|c| amb.is_zero(c)) {
        Ok((true, Some(TPoly::from_checked(amb, quot))))
    } else {
        Ok((false, None))
    }
}

/// Smallest `k` with `v^k = 0` in the Grassmannian ring.
pub fn nilpotency_index(spec: GrassSpec, v: &SchurVector) -> Result<usize> {
    spec.check_support(v)?;
    if !augmentation(v).is_zero() {
        return Err(Error::NotAugmentationPositive);
    }
    let cap = spec.top_degree() + 2;
    let mut k = 1;
    let mut acc = v.clone();
    while !acc.is_zero() {
        k += 1;
        if k > cap {
            return Err(Error::NilpotencyBound(cap));
        }
        acc = spec.multiply(&acc, v)?;
    }
    Ok(k)
}

/// `p_t` turns orthogonal sums into products, checked modulo `t^(cap+1)`, and
/// each `p_t` is a unit there.
pub fn gw_multiplicativity_check(bundles: &[SympClass], cap: usize) -> Result<bool> {
    let Some(first) = bundles.first() else {
        return Ok(true);
    };
    let amb = first.ambient;
    let mut sum = SympClass::trivial(amb, 0);
    let mut product = TPoly::one(amb);
    for b in bundles {
        sum = cartan_sum(&sum, b)?;
        product = product.mul_truncated(&total_class(b), cap)?;
        let inv = truncated_inverse(&total_class(b), cap)?;
        if total_class(b).mul_truncated(&inv, cap)? != TPoly::one(amb) {
            return Ok(false);
        }
    }
    Ok(total_class(&sum).truncate(cap) == product)
}

/// Inverse of `1 + x` modulo `t^(cap+1)` where `x` has no constant term:
/// `Σ_(k<=cap) (-x)^k`.
pub fn truncated_inverse(f: &TPoly, cap: usize) -> Result<TPoly> {
    let amb = f.ambient;
    if !amb.is_one(&f.coeff(0)) {
        return Err(Error::InvalidArgument("constant term is not 1".into()));
    }
    let mut neg_x = f.sub(&TPoly::one(amb))?.scale(&BigInt::from(-1));
    neg_x = neg_x.truncate(cap);
    let mut term = TPoly::one(amb);
    let mut acc = TPoly::one(amb);
    for _ in 0..cap {
        term = term.mul_truncated(&neg_x, cap)?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `coeff(t^k, p_(-t) · Σ_j y^j t^j)`.
pub fn coefficient_relation(b: &SympClass, y: &RingElem, k: usize) -> Result<RingElem> {
    let amb = b.ambient;
    let y = amb.check(y)?;
    let p_neg = total_class(b).negate_variable();
    let mut acc = amb.zero();
    let mut y_pow = amb.one();
    for j in 0..=k {
        let c = p_neg.coeff(k - j);
        acc = amb.add(&acc, &amb.mul(&c, &y_pow));
        y_pow = amb.mul(&y_pow, &y);
    }
    Ok(acc)
}

/// If every `t - u_i` divides `h`, then so does their product. Returns
/// whether that implication holds for this `h`.
pub fn nzd_check(h: &TPoly, roots: &[RingElem]) -> Result<bool> {
    let amb = h.ambient;
    let mut all_divide = true;
    let mut product = TPoly::one(amb);
    for u in roots {
        let lin = TPoly::linear(amb, u)?;
        all_divide &= poly_divides(h, &lin)?.0;
        product = product.mul(&lin)?;
    }
    Ok(!all_divide || poly_divides(h, &product)?.0)
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ambient.is_zero(c))
            .map(|(k, c)| match k {
                0 => format!("({c:?})"),
                1 => format!("({c:?})·t"),
                _ => format!("({c:?})·t^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Free ring on `k` formal roots `y_1..y_k`, with the roots themselves.
pub fn formal_roots(k: usize) -> (Ambient, Vec<RingElem>) {
    let amb = Ambient::free(Alphabet::Y, k);
    let roots = (1..=k).map(|i| amb.generator(i).expect("in range")).collect();
    (amb, roots)
}

/// `Σ c_λ s_λ` as an element of a Grassmannian ambient ring.
pub fn grass_elem(v: SchurVector) -> RingElem {
    RingElem::Schur(v)
}

/// `y^exp` as an element of a free ambient ring.
pub fn monomial_elem(alphabet: Alphabet, exp: Vec<u32>) -> RingElem {
    RingElem::Poly(SymPoly::monomial(alphabet, exp, BigInt::one()))
}
