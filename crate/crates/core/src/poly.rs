//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients over a named generator alphabet.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent vector; its length is the number of variables of the polynomial.
pub type Exponent = Vec<u32>;

/// Which generators a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Alphabet {
    /// Elementary symmetric generators `e_1, e_2, ...`.
    #[serde(rename = "e")]
    E,
    /// Complete symmetric generators `h_1, h_2, ...`.
    #[serde(rename = "h")]
    H,
    /// Root variables `y_1, y_2, ...`.
    #[serde(rename = "y")]
    Y,
    /// Pontryagin generators `p_1, p_2, ...`.
    #[serde(rename = "p")]
    P,
}

impl Alphabet {
    pub fn symbol(self) -> &'static str {
        match self {
            Alphabet::E => "e",
            Alphabet::H => "h",
            Alphabet::Y => "y",
            Alphabet::P => "p",
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A polynomial in `vars` generators of one alphabet.
///
/// Zero coefficients are never stored and every exponent vector has length
/// `vars`. Terms are kept in lexicographic order of exponents, which makes
/// the lexicographic leading term the last entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymPoly {
    alphabet: Alphabet,
    vars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl SymPoly {
    pub fn zero(alphabet: Alphabet, vars: usize) -> Self {
        SymPoly {
            alphabet,
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Alphabet, vars: usize) -> Self {
        Self::constant(alphabet, vars, BigInt::one())
    }

    pub fn constant(alphabet: Alphabet, vars: usize, c: BigInt) -> Self {
        Self::monomial(alphabet, vec![0; vars], c)
    }

    pub fn monomial(alphabet: Alphabet, exp: Exponent, c: BigInt) -> Self {
        let mut p = Self::zero(alphabet, exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The generator with 1-based index `i`. Index 0 is the unit, matching
    /// the convention `e_0 = h_0 = p_0 = 1`.
    pub fn generator(alphabet: Alphabet, vars: usize, i: usize) -> Self {
        assert!(i <= vars, "generator {alphabet}{i} outside {vars} variables");
        if i == 0 {
            return Self::one(alphabet, vars);
        }
        let mut exp = vec![0; vars];
        exp[i - 1] = 1;
        Self::monomial(alphabet, exp, BigInt::one())
    }

    pub fn from_terms<I>(alphabet: Alphabet, vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, BigInt)>,
    {
        let mut p = Self::zero(alphabet, vars);
        for (exp, c) in terms {
            if exp.len() != vars {
                return Err(Error::InvalidArgument(format!(
                    "exponent {exp:?} does not have length {vars}"
                )));
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigInt> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Exponent, BigInt> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn coeff(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.vars])
    }

    /// Adds `c * x^exp` in place.
    pub fn add_term(&mut self, exp: Exponent, c: BigInt) {
        debug_assert_eq!(exp.len(), self.vars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same polynomial with `vars` generators. Shrinking requires the
    /// dropped generators to be absent.
    pub fn with_vars(&self, vars: usize) -> Self {
        if vars == self.vars {
            return self.clone();
        }
        let mut p = Self::zero(self.alphabet, vars);
        for (exp, c) in &self.terms {
            assert!(
                exp[vars.min(exp.len())..].iter().all(|&x| x == 0),
                "cannot drop a generator that occurs"
            );
            let mut e = exp.clone();
            e.resize(vars, 0);
            p.terms.insert(e, c.clone());
        }
        p
    }

    /// Drops trailing generators that do not occur.
    pub fn trimmed(&self) -> Self {
        self.with_vars(self.max_index())
    }

    /// Highest 1-based generator index occurring in any term (0 for constants).
    pub fn max_index(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|e| e.iter().rposition(|&x| x != 0))
            .map(|i| i + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn relabel(&self, alphabet: Alphabet) -> Self {
        SymPoly {
            alphabet,
            vars: self.vars,
            terms: self.terms.clone(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree with generator `i` (1-based) weighted by `weights[i-1]`.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().zip(weights).map(|(a, w)| a * w).sum())
            .max()
    }

    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.alphabet, self.vars);
        }
        SymPoly {
            alphabet: self.alphabet,
            vars: self.vars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^exp`.
    pub fn shift(&self, exp: &[u32]) -> Self {
        SymPoly {
            alphabet: self.alphabet,
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.alphabet, self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Terms of total degree at most `cap`.
    pub fn truncate_degree(&self, cap: u32) -> Self {
        SymPoly {
            alphabet: self.alphabet,
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= cap)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes generator `i` by `images[i-1]`; all images must share one
    /// alphabet and variable count. Powers of each image are cached.
    pub fn substitute(&self, images: &[SymPoly]) -> Self {
        assert_eq!(images.len(), self.vars, "one image per generator");
        let (alphabet, vars) = match images.first() {
            Some(p) => (p.alphabet, p.vars),
            None => return self.clone(),
        };
        let mut powers: Vec<Vec<SymPoly>> = images
            .iter()
            .map(|p| vec![SymPoly::one(alphabet, vars), p.clone()])
            .collect();
        let mut out = SymPoly::zero(alphabet, vars);
        for (exp, c) in &self.terms {
            let mut term = SymPoly::constant(alphabet, vars, c.clone());
            for (i, &a) in exp.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                while powers[i].len() <= a as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][a as usize];
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Permutes variables: variable `i` of the result is variable `perm[i]`
    /// of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.vars);
        SymPoly {
            alphabet: self.alphabet,
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut out = vec![0; e.len()];
                    for (i, &src) in perm.iter().enumerate() {
                        out[src] = e[i];
                    }
                    (out, c.clone())
                })
                .collect(),
        }
    }

    /// Invariance under every permutation of the variables, checked on the
    /// generators `(1 2)` and the cycle `(1 2 ... n)` of the symmetric group.
    pub fn is_symmetric(&self) -> bool {
        let n = self.vars;
        if n < 2 {
            return true;
        }
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        self.permute(&swap) == *self && self.permute(&cycle) == *self
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division; fails if the divisor does not divide `self`.
    pub fn div_exact(&self, divisor: &SymPoly) -> Result<SymPoly> {
        self.check_compatible(divisor)?;
        let (lm, lc) = divisor
            .leading_term()
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(Error::InexactDivision)?;
        let mut rem = self.clone();
        let mut quotient = SymPoly::zero(self.alphabet, self.vars);
        while let Some((exp, c)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            if exp.iter().zip(&lm).any(|(a, b)| a < b) {
                return Err(Error::InexactDivision);
            }
            let (q, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let shift: Exponent = exp.iter().zip(&lm).map(|(a, b)| a - b).collect();
            rem = &rem - &divisor.shift(&shift).scale(&q);
            quotient.add_term(shift, q);
        }
        Ok(quotient)
    }

    fn check_compatible(&self, other: &SymPoly) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet.to_string(),
                found: other.alphabet.to_string(),
            });
        }
        Ok(())
    }

    fn combine(&self, other: &SymPoly, sign: i8) -> SymPoly {
        assert_eq!(
            self.alphabet, other.alphabet,
            "cannot combine polynomials over different alphabets"
        );
        let vars = self.vars.max(other.vars);
        let mut out = self.with_vars(vars);
        for (e, c) in &other.with_vars(vars).terms {
            let c = if sign < 0 { -c } else { c.clone() };
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        self.combine(rhs, 1)
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        self.combine(rhs, -1)
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(
            self.alphabet, rhs.alphabet,
            "cannot multiply polynomials over different alphabets"
        );
        let vars = self.vars.max(rhs.vars);
        let (a, b) = (self.with_vars(vars), rhs.with_vars(vars));
        let mut acc: HashMap<Exponent, BigInt> = HashMap::with_capacity(a.len() * b.len());
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        SymPoly {
            alphabet: self.alphabet,
            vars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (exp, c)) in self.terms.iter().rev().enumerate() {
            let is_const = exp.iter().all(|&x| x == 0);
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
            }
            for (i, &a) in exp.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "{}{}", self.alphabet, i + 1)?,
                    _ => write!(f, "{}{}^{}", self.alphabet, i + 1, a)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}] {}", self.alphabet, self.vars, self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SymPolyRepr {
    alphabet: Alphabet,
    vars: usize,
    terms: Vec<TermRepr>,
}

/// Decimal string encoding of a big integer.
pub(crate) fn parse_coeff(s: &str) -> Result<BigInt> {
    BigInt::from_str(s).map_err(|_| Error::InvalidArgument(format!("bad integer {s:?}")))
}

impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SymPolyRepr {
            alphabet: self.alphabet,
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    exp: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SymPolyRepr::deserialize(deserializer)?;
        let terms = repr
            .terms
            .into_iter()
            .map(|t| parse_coeff(&t.coeff).map(|c| (t.exp, c)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        SymPoly::from_terms(repr.alphabet, repr.vars, terms).map_err(serde::de::Error::custom)
    }
}
