//! The maps of the localization sequence
//! `0 -> A(HGr(r,n-1)) -τ-> A(HGr(r,n)) -σ-> A(HGr(r-1,n-1)) -> 0`
//! as integer matrices on Schur bases, and their exactness over Z.

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassring::GrassSpec;
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::partition::{binomial, Partition};
use crate::poly::parse_coeff;
use crate::schur::SchurVector;

/// A linear map between Grassmannian rings; `matrix[i][j]` is the coefficient
/// of target basis element `i` in the image of source basis element `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMap {
    pub source: GrassSpec,
    pub target: GrassSpec,
    pub matrix: IntMatrix,
}

impl BasisMap {
    fn from_rule<F>(source: GrassSpec, target: GrassSpec, mut rule: F) -> Self
    where
        F: FnMut(&Partition) -> Option<(Partition, BigInt)>,
    {
        let rows: HashMap<Partition, usize> = target
            .basis()
            .into_iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let src = source.basis();
        let mut matrix = IntMatrix::zeros(rows.len(), src.len());
        for (j, lambda) in src.iter().enumerate() {
            if let Some((mu, c)) = rule(lambda) {
                matrix.set(rows[&mu], j, c);
            }
        }
        BasisMap {
            source,
            target,
            matrix,
        }
    }

    pub fn apply(&self, v: &SchurVector) -> Result<SchurVector> {
        self.source.check_support(v)?;
        let x: Vec<BigInt> = self.source.basis().iter().map(|p| v.coeff(p)).collect();
        let y = self.matrix.mul_vec(&x);
        Ok(self.target.basis().into_iter().zip(y).collect())
    }
}

/// `s_λ ↦ (-1)^r s_(λ+(1^r))` from `HGr(r,n-1)` to `HGr(r,n)`.
pub fn tau_map(r: usize, n: usize) -> Result<BasisMap> {
    if r == 0 || r + 1 > n {
        return Err(Error::InvalidSpec { r, n });
    }
    let sign = BigInt::from(if r.is_multiple_of(2) { 1 } else { -1 });
    let source = GrassSpec::new(r, n - 1)?;
    let target = GrassSpec::new(r, n)?;
    Ok(BasisMap::from_rule(source, target, |lambda| {
        let mu = lambda.add_full_column(r).expect("source partitions have at most r rows");
        Some((mu, sign.clone()))
    }))
}

/// `s_λ ↦ s_λ` if `λ` has fewer than `r` rows, else 0, from `HGr(r,n)` to
/// `HGr(r-1,n-1)`.
pub fn sigma_map(r: usize, n: usize) -> Result<BasisMap> {
    if r == 0 || r > n {
        return Err(Error::InvalidSpec { r, n });
    }
    let source = GrassSpec::new(r, n)?;
    let target = GrassSpec::new(r - 1, n - 1)?;
    Ok(BasisMap::from_rule(source, target, |lambda| {
        target
            .contains(lambda)
            .then(|| (lambda.clone(), BigInt::from(1)))
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExactnessReport {
    pub r: usize,
    pub n: usize,
    pub tau_injective: bool,
    pub sigma_surjective: bool,
    pub image_in_kernel: bool,
    pub kernel_in_image: bool,
    pub image_saturated: bool,
    pub rank_identity: bool,
    pub ranks: [u64; 3],
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.tau_injective
            && self.sigma_surjective
            && self.image_in_kernel
            && self.kernel_in_image
            && self.image_saturated
            && self.rank_identity
    }
}

pub fn verify_exactness(r: usize, n: usize) -> Result<ExactnessReport> {
    let tau = tau_map(r, n)?;
    let sigma = sigma_map(r, n)?;
    let t = smith_normal_form(&tau.matrix);
    let s = smith_normal_form(&sigma.matrix);

    let tau_injective = t.rank() == tau.matrix.cols();
    let sigma_surjective = s.rank() == sigma.matrix.rows() && s.is_saturated();
    let image_in_kernel = sigma.matrix.mul(&tau.matrix).is_zero();
    let kernel = s.kernel_basis();
    let kernel_in_image = kernel.len() == t.rank() && kernel.iter().all(|k| t.solve(k).is_some());
    let image_saturated = t.is_saturated();

    let (a, b, c) = (tau.source.rank(), sigma.target.rank(), tau.target.rank());
    let (n64, r64) = (n as u64, r as u64);
    let rank_identity = a == binomial(n64 - 1, r64)
        && b == binomial(n64 - 1, r64 - 1)
        && c == binomial(n64, r64)
        && a + b == c;

    Ok(ExactnessReport {
        r,
        n,
        tau_injective,
        sigma_surjective,
        image_in_kernel,
        kernel_in_image,
        image_saturated,
        rank_identity,
        ranks: [a, c, b],
    })
}

/// `τ(x) = (-1)^r p_r · x` in `HGr(r,n)`, with `x` read in the larger box.
/// Checks every basis element when `samples` is `None`, otherwise that many
/// random combinations drawn from `seed`.
pub fn tau_module_property_check(r: usize, n: usize, samples: Option<usize>, seed: u64) -> Result<bool> {
    let tau = tau_map(r, n)?;
    let target = tau.target;
    let top = target.pontryagin_class(r);
    let sign = BigInt::from(if r.is_multiple_of(2) { 1 } else { -1 });
    let basis = tau.source.basis();
    let inputs: Vec<SchurVector> = match samples {
        None => basis.iter().cloned().map(SchurVector::unit).collect(),
        Some(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..k)
                .map(|_| {
                    basis
                        .iter()
                        .map(|p| (p.clone(), BigInt::from(rng.gen_range(-3i64..=3))))
                        .collect()
                })
                .collect()
        }
    };
    for x in inputs {
        let lhs = tau.apply(&x)?;
        let rhs = target.multiply(&top, &x)?.scale(&sign);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisMapRepr {
    source: GrassSpec,
    target: GrassSpec,
    source_basis: Vec<Partition>,
    target_basis: Vec<Partition>,
    matrix: Vec<Vec<String>>,
}

impl Serialize for BasisMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BasisMapRepr {
            source: self.source,
            target: self.target,
            source_basis: self.source.basis(),
            target_basis: self.target.basis(),
            matrix: self
                .matrix
                .to_rows()
                .iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BasisMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = BasisMapRepr::deserialize(d)?;
        if repr.source_basis != repr.source.basis() || repr.target_basis != repr.target.basis() {
            return Err(D::Error::custom("basis listing does not match the ring"));
        }
        let cols = repr.source_basis.len();
        if repr.matrix.len() != repr.target_basis.len() || repr.matrix.iter().any(|r| r.len() != cols) {
            return Err(D::Error::custom("matrix shape does not match the bases"));
        }
        let rows = repr
            .matrix
            .iter()
            .map(|row| row.iter().map(|x| parse_coeff(x)).collect::<std::result::Result<Vec<_>, _>>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(BasisMap {
            source: repr.source,
            target: repr.target,
            matrix: IntMatrix::from_rows(rows, cols),
        })
    }
}
