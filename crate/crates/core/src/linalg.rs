//! Dense integer matrices and the Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.data.clone()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += a * &other.data[k][j];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        self.data
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(|x| x.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in &mut self.data {
            row.swap(a, b);
        }
    }

    /// `row[dst] += q * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        let src_row = self.data[src].clone();
        for (x, s) in self.data[dst].iter_mut().zip(&src_row) {
            *x += q * s;
        }
    }

    /// `col[dst] += q * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for row in &mut self.data {
            let s = row[src].clone();
            row[dst] += q * s;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.data[i] {
            *x = -&*x;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `left * matrix * right = diagonal`, with `left` and `right` unimodular and
/// each invariant factor dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// Nonzero diagonal entries, all positive.
    pub invariants: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// All invariant factors are 1: the column span is a direct summand.
    pub fn is_saturated(&self) -> bool {
        self.invariants.iter().all(|d| d.is_one())
    }

    /// Basis of the integer kernel, as columns of `right` past the rank.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.right.cols())
            .map(|j| self.right.column(j))
            .collect()
    }

    /// An integer solution of `matrix * x = b`, if one exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let ub = self.left.mul_vec(b);
        let mut y = vec![BigInt::zero(); self.right.rows()];
        for (i, c) in ub.iter().enumerate() {
            if i < self.rank() {
                let (q, r) = c.div_rem(&self.invariants[i]);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(self.right.mul_vec(&y))
    }
}

pub fn smith_normal_form(matrix: &IntMatrix) -> SmithForm {
    let (m, n) = (matrix.rows(), matrix.cols());
    let mut a = matrix.clone();
    let mut left = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);
    let mut invariants = Vec::new();

    for t in 0..m.min(n) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let Some((pi, pj)) = min_nonzero(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a.data[i][t].is_zero() {
                    continue;
                }
                let q = -a.data[i][t].div_floor(&a.data[t][t]);
                a.add_row(i, t, &q);
                left.add_row(i, t, &q);
                if !a.data[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if a.data[t][j].is_zero() {
                    continue;
                }
                let q = -a.data[t][j].div_floor(&a.data[t][t]);
                a.add_col(j, t, &q);
                right.add_col(j, t, &q);
                if !a.data[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = min_in_cross(&a, t);
                a.swap_rows(t, pi);
                left.swap_rows(t, pi);
                a.swap_cols(t, pj);
                right.swap_cols(t, pj);
                continue;
            }
            // Pivot must divide the rest of the block.
            let bad = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !a.data[i][j].mod_floor(&a.data[t][t]).is_zero())
            });
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    left.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a.data[t][t].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
        invariants.push(a.data[t][t].clone());
    }

    SmithForm {
        diagonal: a,
        left,
        right,
        invariants,
    }
}

fn min_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a.data[i][j];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a.data[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` of the trailing block.
fn min_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let cells = (t..a.rows())
        .map(|i| (i, t))
        .chain((t + 1..a.cols()).map(|j| (t, j)));
    cells
        .filter(|&(i, j)| !a.data[i][j].is_zero())
        .min_by_key(|&(i, j)| a.data[i][j].abs())
        .expect("pivot cross has a nonzero entry")
}
