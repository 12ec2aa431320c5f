//! Dense exact rational matrices.

use std::fmt;

use malachite_base::num::arithmetic::traits::Lcm;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;

use crate::polyring::{rational_sign, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| *x == Rational::ZERO)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if *a == Rational::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if *b != Rational::ZERO {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Rational::ZERO;
                for (a, b) in self.row(i).iter().zip(v) {
                    if *a != Rational::ZERO && *b != Rational::ZERO {
                        s += a * b;
                    }
                }
                s
            })
            .collect()
    }

    /// Solves `self · x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let mut a = self.to_rows();
        let mut b = b.to_vec();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != Rational::ZERO)?;
            a.swap(col, piv);
            b.swap(col, piv);
            let inv = Rational::ONE / &a[col][col];
            for r in 0..n {
                if r == col || a[r][col] == Rational::ZERO {
                    continue;
                }
                let f = &a[r][col] * &inv;
                for c in col..n {
                    if a[col][c] != Rational::ZERO {
                        let t = &f * &a[col][c];
                        a[r][c] -= t;
                    }
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
        Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
    }

    /// Exact determinant sign by fraction-free (Bareiss) elimination after
    /// clearing each row's denominators with a positive factor.
    pub fn det_sign(&self) -> i32 {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<Vec<Integer>> = (0..n)
            .map(|i| {
                let row = self.row(i);
                let l = row
                    .iter()
                    .fold(Natural::ONE, |acc, x| acc.lcm(x.denominator_ref()));
                row.iter()
                    .map(|x| {
                        let scaled = x * Rational::from(l.clone());
                        Integer::try_from(scaled).expect("denominator cleared")
                    })
                    .collect()
            })
            .collect();
        let mut sign = 1;
        let mut prev = Integer::ONE;
        for k in 0..n {
            let Some(piv) = (k..n).find(|&r| m[r][k] != Integer::ZERO) else {
                return 0;
            };
            if piv != k {
                m.swap(k, piv);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
                m[i][k] = Integer::ZERO;
            }
            prev = m[k][k].clone();
        }
        let last = &m[n - 1][n - 1];
        sign * if *last > Integer::ZERO { 1 } else { -1 }
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Rational::ONE;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r][col] != Rational::ZERO) else {
                return Rational::ZERO;
            };
            if piv != col {
                a.swap(col, piv);
                det = -det;
            }
            det *= &a[col][col];
            let inv = Rational::ONE / &a[col][col];
            for r in col + 1..n {
                if a[r][col] == Rational::ZERO {
                    continue;
                }
                let f = &a[r][col] * &inv;
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
        det
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(crate::polyring::rational_to_f64)
            .collect()
    }

    /// Signs of the entries, handy for assertions.
    pub fn signs(&self) -> Vec<i32> {
        self.data.iter().map(rational_sign).collect()
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
