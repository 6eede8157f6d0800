//! The ring `A(HGr(r,n)) = Z[e_1..e_r]/(h_(n-r+1), .., h_n)` in its Schur basis.
//!
//! Elements are [`SchurVector`]s supported on partitions in the `r x (n-r)`
//! box. The generator `e_i` is the Pontryagin class `p_i` of the tautological
//! bundle, so polynomials in the `p` alphabet are read as polynomials in `e`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{binomial, enumerate_box, Partition};
use crate::poly::{Alphabet, SymPoly};
use crate::schur::SchurVector;
use crate::symfun::{h_from_e, schur_product, to_schur_basis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GrassSpec {
    r: usize,
    n: usize,
}

impl GrassSpec {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::InvalidSpec { r, n });
        }
        Ok(GrassSpec { r, n })
    }

    /// `HP^n = HGr(1, n+1)`.
    pub fn projective(n: usize) -> Self {
        GrassSpec { r: 1, n: n + 1 }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Width of the partition box, `n - r`.
    pub fn cols(&self) -> usize {
        self.n - self.r
    }

    /// Spec of the orthogonal complement's Grassmannian, `(n-r, n)`.
    pub fn complement(&self) -> GrassSpec {
        GrassSpec {
            r: self.n - self.r,
            n: self.n,
        }
    }

    /// The Schur basis `Π_{r,n-r}` in partition order.
    pub fn basis(&self) -> Vec<Partition> {
        enumerate_box(self.r, self.cols())
    }

    pub fn rank(&self) -> u64 {
        binomial(self.n as u64, self.r as u64)
    }

    /// Top degree of the ring, the weight of the full box.
    pub fn top_degree(&self) -> usize {
        self.r * self.cols()
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.fits_in_box(self.r, self.cols())
    }

    pub fn check_support(&self, v: &SchurVector) -> Result<()> {
        match v.support().find(|p| !self.contains(p)) {
            Some(p) => Err(Error::OutsideBox {
                partition: p.clone(),
                rows: self.r,
                cols: self.cols(),
            }),
            None => Ok(()),
        }
    }

    /// Image of a polynomial in `e_1..e_r` (or `p_1..p_r`) in the quotient
    /// ring: expand in the Schur basis of `Λ_r`, then drop every class
    /// outside the box.
    pub fn normal_form(&self, p: &SymPoly) -> Result<SchurVector> {
        match p.alphabet() {
            Alphabet::E | Alphabet::P => {}
            other => {
                return Err(Error::AlphabetMismatch {
                    expected: "e or p".into(),
                    found: other.to_string(),
                })
            }
        }
        if p.max_index() > self.r {
            return Err(Error::GeneratorOutOfRange {
                index: p.max_index(),
                max: self.r,
            });
        }
        let p = p.with_vars(self.r).relabel(Alphabet::E);
        Ok(to_schur_basis(&p, self.r)?.truncate_to_box(self.r, self.cols()))
    }

    pub fn multiply(&self, a: &SchurVector, b: &SchurVector) -> Result<SchurVector> {
        self.check_support(a)?;
        self.check_support(b)?;
        let mut out = SchurVector::zero();
        for (lambda, ca) in a.iter() {
            for (mu, cb) in b.iter() {
                let c = ca * cb;
                for (nu, k) in schur_product(lambda, mu, self.r).iter() {
                    if self.contains(nu) {
                        out.add_term(nu.clone(), &c * k);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn power(&self, v: &SchurVector, k: u32) -> Result<SchurVector> {
        self.check_support(v)?;
        let mut acc = SchurVector::one();
        for _ in 0..k {
            acc = self.multiply(&acc, v)?;
        }
        Ok(acc)
    }

    /// `s_λ(U) = (-1)^|λ| s_λ'(U^⊥)`: rewrites a class in the Schur basis of
    /// the complementary bundle, an element for `self.complement()`.
    pub fn dual_complement(&self, v: &SchurVector) -> Result<SchurVector> {
        self.check_support(v)?;
        Ok(v.map_basis(|p| (p.conjugate(), p.weight() % 2 == 1)))
    }

    /// `p_i(U) = s_(1^i)` for `i = 1..r`.
    pub fn pontryagin_generators(&self) -> Vec<SchurVector> {
        (1..=self.r).map(|i| self.pontryagin_class(i)).collect()
    }

    /// `p_i(U)`, with `p_0 = 1` and `p_i = 0` above the rank or outside the box.
    pub fn pontryagin_class(&self, i: usize) -> SchurVector {
        if i > self.r {
            return SchurVector::zero();
        }
        SchurVector::unit(Partition::column(i)).truncate_to_box(self.r, self.cols())
    }

    /// The relations `h_(n-r+1), .., h_n` written in `e_1..e_r`.
    pub fn relations(&self) -> Vec<SymPoly> {
        (self.cols() + 1..=self.n)
            .map(|m| h_from_e(m as u32, self.r))
            .collect()
    }

    /// A polynomial in `e_1..e_r` representing `v`, through the dual
    /// Jacobi–Trudi formula.
    pub fn lift(&self, v: &SchurVector) -> Result<SymPoly> {
        self.check_support(v)?;
        let mut out = SymPoly::zero(Alphabet::E, self.r);
        for (lambda, c) in v.iter() {
            let jt = crate::symfun::schur_jt_e(lambda, lambda.first() as usize)?;
            out = &out + &restrict_e(&jt, self.r).scale(c);
        }
        Ok(out)
    }
}

/// Sets `e_i = 0` for `i > r` and returns a polynomial in `r` generators.
pub(crate) fn restrict_e(p: &SymPoly, r: usize) -> SymPoly {
    let terms = p
        .terms()
        .iter()
        .filter(|(e, _)| e.iter().skip(r).all(|&x| x == 0))
        .map(|(e, c)| {
            let mut e = e.clone();
            e.resize(r, 0);
            (e, c.clone())
        });
    SymPoly::from_terms(p.alphabet(), r, terms).expect("exponents resized to r")
}

impl fmt::Display for GrassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HGr({},{})", self.r, self.n)
    }
}

/// Coefficient on the empty partition, i.e. the augmentation.
pub fn augmentation(v: &SchurVector) -> BigInt {
    v.coeff(&Partition::empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;
    use crate::symfun::{decompose_schur, schur_bialternant};

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn spec(r: usize, n: usize) -> GrassSpec {
        GrassSpec::new(r, n).unwrap()
    }

    fn e(vars: usize, i: usize) -> SymPoly {
        SymPoly::generator(Alphabet::E, vars, i)
    }

    #[test]
    fn normal_form_examples() {
        assert!(spec(1, 2).normal_form(&e(1, 1).pow(2)).unwrap().is_zero());
        assert_eq!(
            spec(1, 3).normal_form(&e(1, 1).pow(2)).unwrap(),
            SchurVector::unit(part(&[2]))
        );
        for (r, n) in [(0, 3), (2, 4), (3, 5)] {
            assert_eq!(
                spec(r, n).normal_form(&SymPoly::one(Alphabet::E, r)).unwrap(),
                SchurVector::one()
            );
        }
        assert!(matches!(
            spec(1, 3).normal_form(&e(2, 2)),
            Err(Error::GeneratorOutOfRange { index: 2, max: 1 })
        ));
        let p = SymPoly::generator(Alphabet::P, 2, 2);
        assert_eq!(
            spec(2, 4).normal_form(&p).unwrap(),
            SchurVector::unit(part(&[1, 1]))
        );
    }

    #[test]
    fn multiply_examples() {
        let s = spec(2, 4);
        let prod = s
            .multiply(&SchurVector::unit(part(&[1])), &SchurVector::unit(part(&[2, 1])))
            .unwrap();
        assert_eq!(prod, SchurVector::unit(part(&[2, 2])));

        let v = SchurVector::from_pairs([(part(&[1]), int(2)), (part(&[2, 2]), int(-1))]);
        assert_eq!(s.multiply(&SchurVector::one(), &v).unwrap(), v);

        for n in 1..=6 {
            let s = spec(1, n);
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    let got = s
                        .multiply(&SchurVector::unit(Partition::row(a)), &SchurVector::unit(Partition::row(b)))
                        .unwrap();
                    if a + b < n as u32 {
                        assert_eq!(got, SchurVector::unit(Partition::row(a + b)));
                    } else {
                        assert!(got.is_zero());
                    }
                }
            }
        }
        assert!(s.multiply(&SchurVector::unit(part(&[3])), &SchurVector::one()).is_err());
    }

    #[test]
    fn rank_examples() {
        for n in 0..6 {
            assert_eq!(GrassSpec::projective(n).rank(), n as u64 + 1);
        }
        assert_eq!(spec(3, 3).rank(), 1);
        assert_eq!(spec(2, 4).rank(), 6);
        for n in 0..=8 {
            for r in 0..=n {
                assert_eq!(spec(r, n).basis().len() as u64, spec(r, n).rank());
            }
        }
        assert!(GrassSpec::new(3, 2).is_err());
    }

    #[test]
    fn dual_complement_examples() {
        let s = spec(1, 3);
        assert_eq!(s.dual_complement(&SchurVector::one()).unwrap(), SchurVector::one());
        assert_eq!(
            s.dual_complement(&SchurVector::unit(part(&[1]))).unwrap(),
            SchurVector::term(part(&[1]), int(-1))
        );
        let s = spec(2, 4);
        let hook = s.dual_complement(&SchurVector::unit(part(&[2, 1]))).unwrap();
        assert_eq!(hook, SchurVector::term(part(&[2, 1]), int(-1)));
        assert_eq!(
            s.dual_complement(&SchurVector::unit(part(&[2]))).unwrap(),
            SchurVector::unit(part(&[1, 1]))
        );
    }

    #[test]
    fn dual_complement_is_a_ring_isomorphism() {
        for n in 1..=6 {
            for r in 0..=n {
                let s = spec(r, n);
                let c = s.complement();
                let basis = s.basis();
                for a in &basis {
                    for b in &basis {
                        let (va, vb) = (SchurVector::unit(a.clone()), SchurVector::unit(b.clone()));
                        let lhs = s.dual_complement(&s.multiply(&va, &vb).unwrap()).unwrap();
                        let rhs = c
                            .multiply(&s.dual_complement(&va).unwrap(), &s.dual_complement(&vb).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs, "{s}: s{a} s{b}");
                    }
                }
            }
        }
    }

    #[test]
    fn pontryagin_generator_examples() {
        let g = spec(2, 4).pontryagin_generators();
        assert_eq!(g, vec![SchurVector::unit(part(&[1])), SchurVector::unit(part(&[1, 1]))]);
        let s = spec(1, 2);
        let zeta = &s.pontryagin_generators()[0];
        assert_eq!(*zeta, SchurVector::unit(part(&[1])));
        assert!(s.multiply(zeta, zeta).unwrap().is_zero());
        assert!(spec(0, 3).pontryagin_generators().is_empty());
    }

    #[test]
    fn relations_vanish() {
        for n in 0..=7 {
            for r in 0..=n {
                let s = spec(r, n);
                assert_eq!(s.relations().len(), r);
                for rel in s.relations() {
                    assert!(s.normal_form(&rel).unwrap().is_zero(), "{s}: {rel}");
                }
            }
        }
    }

    #[test]
    fn lift_round_trips() {
        for (r, n) in [(1, 4), (2, 4), (2, 5), (3, 6)] {
            let s = spec(r, n);
            for lambda in s.basis() {
                let v = SchurVector::unit(lambda.clone());
                assert_eq!(s.normal_form(&s.lift(&v).unwrap()).unwrap(), v);
            }
        }
    }

    #[test]
    fn zero_ring_edge_case() {
        let s = spec(0, 4);
        assert_eq!(s.basis(), vec![part(&[])]);
        assert_eq!(s.multiply(&SchurVector::one(), &SchurVector::one()).unwrap(), SchurVector::one());
    }

    #[test]
    fn untruncated_products_expand_back() {
        // Independent check: re-expanding the Schur product as monomials gives
        // the product of bialternants.
        let s = spec(3, 6);
        let basis = s.basis();
        for a in basis.iter().step_by(3) {
            for b in basis.iter().step_by(4) {
                let lhs = &schur_bialternant(a, 3).unwrap() * &schur_bialternant(b, 3).unwrap();
                let prod = schur_product(a, b, 3);
                let mut rhs = SymPoly::zero(Alphabet::Y, 3);
                for (nu, c) in prod.iter() {
                    rhs = &rhs + &schur_bialternant(nu, 3).unwrap().scale(c);
                }
                assert_eq!(lhs, rhs);
                assert_eq!(decompose_schur(&lhs, 3).unwrap(), *prod);
            }
        }
    }
}
