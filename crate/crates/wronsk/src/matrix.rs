//! Dense exact matrices over ℚ: determinants, inverses, solving and
//! nullspaces by fraction-preserving Gaussian elimination. Dimensions here
//! are the family size n, so no pivoting strategy beyond nonzero search is
//! needed.

use num_traits::{One, Zero};

use crate::laurent::LaurentPoly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Rational>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// `row_i -= c · row_j`.
    pub fn row_sub_scaled(&mut self, i: usize, j: usize, c: &Rational) {
        assert_ne!(i, j);
        for k in 0..self.cols {
            let v = self.at(j, k) * c;
            *self.at_mut(i, k) -= v;
        }
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    /// Applies a row permutation: output row `i` is input row `perm[i]`.
    pub fn permute_rows(&self, perm: &[usize]) -> QMatrix {
        assert_eq!(perm.len(), self.rows);
        QMatrix::from_fn(self.rows, self.cols, |i, j| self.at(perm[i], j).clone())
    }

    pub fn matmul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows);
        QMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                acc += self.at(i, k) * rhs.at(k, j);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * &v[k];
                }
                acc
            })
            .collect()
    }

    /// Row `i` of the product `self · fs` viewed as functions: `Σ_j a_ij f_j`.
    pub fn apply_to_functions(&self, fs: &[LaurentPoly]) -> Vec<LaurentPoly> {
        assert_eq!(self.cols, fs.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = LaurentPoly::zero();
                for (j, f) in fs.iter().enumerate() {
                    acc = &acc + &f.scale(self.at(i, j));
                }
                acc
            })
            .collect()
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.at(r, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return Rational::zero(),
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = -det;
            }
            let pv = m.at(col, col).clone();
            det *= &pv;
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let f = m.at(r, col) / &pv;
                m.row_sub_scaled(r, col, &f);
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.at(r, col).is_zero())?;
            m.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let pv = m.at(col, col).clone();
            for k in 0..n {
                *m.at_mut(col, k) /= &pv;
                *inv.at_mut(col, k) /= &pv;
            }
            for r in 0..n {
                if r == col || m.at(r, col).is_zero() {
                    continue;
                }
                let f = m.at(r, col).clone();
                m.row_sub_scaled(r, col, &f);
                inv.row_sub_scaled(r, col, &f);
            }
        }
        Some(inv)
    }

    /// Reduced row echelon form together with the rank and pivot columns.
    fn rref(&self) -> (QMatrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let pivot = (r..m.rows).find(|&i| !m.at(i, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            m.swap_rows(pivot, r);
            let pv = m.at(r, col).clone();
            for k in 0..m.cols {
                *m.at_mut(r, k) /= &pv;
            }
            for i in 0..m.rows {
                if i == r || m.at(i, col).is_zero() {
                    continue;
                }
                let f = m.at(i, col).clone();
                m.row_sub_scaled(i, r, &f);
            }
            pivots.push(col);
            r += 1;
        }
        (m, r, pivots)
    }

    /// A basis of `{ x : self · x = 0 }`, one vector per free column, in
    /// ascending free-column order. Each vector has a 1 in its free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (m, _, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self · x = b` exactly; `None` when inconsistent. For
    /// underdetermined systems the free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, b.len());
        let aug = QMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (m, _, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = m.at(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|c| c.to_string()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn determinant() {
        assert_eq!(m(&[&[0, 1, 1], &[0, 0, 2], &[-2, 1, 0]]).det(), rat_int(-4));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), rat_int(0));
        assert_eq!(QMatrix::identity(4).det(), rat_int(1));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), QMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_and_nullspace() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[rat_int(3), rat_int(1)]).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(1)]);

        let b = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = b.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for i in 0..2 {
                let mut acc = rat_int(0);
                for j in 0..3 {
                    acc += b.at(i, j) * &v[j];
                }
                assert_eq!(acc, rat_int(0));
            }
        }
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&[rat_int(1), rat_int(2)]).is_none());
        assert_eq!(a.solve(&[rat_int(1), rat_int(1)]), Some(vec![rat_int(1), rat_int(0)]));
    }

    #[test]
    fn rational_entries() {
        let a = QMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]]);
        assert_eq!(a.det(), rat(1, 10) - rat(1, 12));
    }
}
