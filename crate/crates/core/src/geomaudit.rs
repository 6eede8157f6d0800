//! Integer bookkeeping for the geometry: dimensions of quaternionic
//! Grassmannians and flag varieties, the stratification of `HP^n`, and rank
//! identities for normal bundles.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `dim HGr(r,n) = 4r(n-r)`.
pub fn hgr_dimension(r: usize, n: usize) -> Result<u64> {
    if r > n {
        return Err(Error::InvalidSpec { r, n });
    }
    Ok(4 * r as u64 * (n - r) as u64)
}

/// `dim HFlag(a_1,..,a_s; n) = 4n Σ a_i - 4 Σ_(i<=j) a_i a_j`.
pub fn hflag_dimension(a: &[usize], n: usize) -> Result<u64> {
    let total: usize = a.iter().sum();
    if a.contains(&0) {
        return Err(Error::InvalidArgument("flag type entries must be positive".into()));
    }
    if total > n {
        return Err(Error::InvalidArgument(format!(
            "flag type {a:?} has total {total} > {n}"
        )));
    }
    let pairs: u64 = (0..a.len())
        .flat_map(|i| (i..a.len()).map(move |j| (i, j)))
        .map(|(i, j)| (a[i] * a[j]) as u64)
        .sum();
    Ok(4 * n as u64 * total as u64 - 4 * pairs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratumRecord {
    pub index: usize,
    pub codim: u64,
    pub dim: u64,
    pub closure_bundle_rank: u64,
    /// Base of the bundle whose total space is the closure, `HP^(n-i)`.
    pub base: String,
    pub affine: bool,
}

impl StratumRecord {
    pub fn is_consistent(&self, n: usize) -> bool {
        let i = self.index as u64;
        self.codim == 2 * i
            && self.dim == 4 * n as u64 - 2 * i
            && self.closure_bundle_rank == 2 * i
            && self.codim + self.dim == 4 * n as u64
            && self.base == format!("HP^{}", n - self.index)
            && self.affine == (self.index == n)
    }
}

/// Strata `X_0, X_2, .., X_2n` of `HP^n`; `X_2i` has codimension `2i`, and
/// its closure is a rank `2i` bundle over `HP^(n-i)`. Only `X_2n` is affine.
pub fn hp_strata_table(n: usize) -> Vec<StratumRecord> {
    (0..=n)
        .map(|i| StratumRecord {
            index: i,
            codim: 2 * i as u64,
            dim: (4 * n - 2 * i) as u64,
            closure_bundle_rank: 2 * i as u64,
            base: format!("HP^{}", n - i),
            affine: i == n,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientShape {
    pub total_space_dim: u64,
    pub group_dim: u64,
    pub quotient_dim: u64,
}

/// `X_2i` as the quotient of an open part of `A^(4n-2i+1)` by a free
/// `G_a`-action.
pub fn ga_quotient_shape(n: usize, i: usize) -> Result<QuotientShape> {
    if i > n {
        return Err(Error::InvalidArgument(format!("stratum {i} exceeds n = {n}")));
    }
    let total = (4 * n - 2 * i + 1) as u64;
    Ok(QuotientShape {
        total_space_dim: total,
        group_dim: 1,
        quotient_dim: total - 1,
    })
}

/// `rank N+ + rank N- = rank (U ⊕ U)` with `U` of rank `2r`.
pub fn normal_rank_identity(r: usize) -> Result<bool> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let u = 2 * r;
    let (plus, minus) = (u, u);
    Ok(plus + minus == 2 * u)
}

/// `HFlag(1^r; n)` as a tower of quaternionic projective bundles over
/// `HGr(r,n)`: the fibers `HP^(r-1), .., HP^1` add `Σ_(i<r) 4(r-i)`.
pub fn flag_tower_dimension(r: usize, n: usize) -> Result<u64> {
    let base = hgr_dimension(r, n)?;
    let fibers: u64 = (1..r).map(|i| 4 * (r - i) as u64).sum();
    Ok(base + fibers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_examples() {
        for n in 0..=8 {
            assert_eq!(hgr_dimension(1, n + 1).unwrap(), 4 * n as u64);
            assert_eq!(hgr_dimension(n, n).unwrap(), 0);
            assert_eq!(hflag_dimension(&[], n).unwrap(), 0);
            for r in 0..=n {
                if r > 0 {
                    assert_eq!(hflag_dimension(&[r], n).unwrap(), hgr_dimension(r, n).unwrap());
                }
            }
        }
        assert_eq!(hgr_dimension(2, 4).unwrap(), 16);
        assert_eq!(hflag_dimension(&[1], 5).unwrap(), 16);
        assert!(hflag_dimension(&[2, 2], 3).is_err());
        assert!(hgr_dimension(3, 2).is_err());
    }

    #[test]
    fn strata_examples() {
        let t = hp_strata_table(1);
        assert_eq!(t.len(), 2);
        assert_eq!((t[0].codim, t[0].dim), (0, 4));
        assert_eq!((t[1].codim, t[1].dim), (2, 2));
        assert!(t[1].affine && !t[0].affine);

        let t = hp_strata_table(0);
        assert_eq!((t[0].codim, t[0].dim), (0, 0));

        let r = &hp_strata_table(3)[2];
        assert_eq!((r.codim, r.dim, r.closure_bundle_rank), (4, 8, 4));
        assert_eq!(r.base, "HP^1");
        for n in 0..=10 {
            assert!(hp_strata_table(n).iter().all(|s| s.is_consistent(n)));
        }
    }

    #[test]
    fn quotient_examples() {
        let q = ga_quotient_shape(3, 0).unwrap();
        assert_eq!((q.total_space_dim, q.group_dim, q.quotient_dim), (13, 1, 12));
        let q = ga_quotient_shape(3, 3).unwrap();
        assert_eq!((q.total_space_dim, q.quotient_dim), (7, 6));
        let q = ga_quotient_shape(1, 1).unwrap();
        assert_eq!((q.total_space_dim, q.group_dim, q.quotient_dim), (3, 1, 2));
        assert!(ga_quotient_shape(1, 2).is_err());
    }

    #[test]
    fn normal_ranks() {
        for r in 1..=5 {
            assert!(normal_rank_identity(r).unwrap());
        }
    }

    #[test]
    fn flag_matches_tower() {
        for n in 1..=8 {
            for r in 1..=n.min(5) {
                assert_eq!(hflag_dimension(&vec![1; r], n).unwrap(), flag_tower_dimension(r, n).unwrap());
            }
        }
    }
}
