//! Symmetric bilinear forms on `A` and their exact invariants.

use malachite_base::num::basic::traits::Zero;

use crate::algebra::QuotientAlgebra;
use crate::bezoutian::Functional;
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::polyring::{rational_sign, Polynomial, Rational};

/// Symmetric rational matrix of a form over the basis of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymBilinearForm {
    matrix: RatMatrix,
}

/// Counts of positive, negative and zero diagonal entries after
/// diagonalisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

impl SymBilinearForm {
    pub fn from_matrix(matrix: RatMatrix) -> Result<Self> {
        if !matrix.is_symmetric() {
            return Err(Error::InvalidProblem("form matrix is not symmetric".into()));
        }
        Ok(SymBilinearForm { matrix })
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn inertia(&self) -> Inertia {
        inertia(&self.matrix)
    }

    pub fn signature(&self) -> i64 {
        self.inertia().signature()
    }

    pub fn rank(&self) -> usize {
        self.inertia().rank()
    }

    pub fn det_sign(&self) -> i32 {
        self.matrix.det_sign()
    }
}

/// `M[i][j] = φ(w·e_i·e_j)`, with `w = 1` when absent.
pub fn build_form(
    alg: &QuotientAlgebra,
    phi: &Functional,
    w: Option<&Polynomial>,
) -> Result<SymBilinearForm> {
    let d = alg.dim();
    if phi.weights().len() != d {
        return Err(Error::DimensionMismatch(format!(
            "functional of length {} on an algebra of dimension {d}",
            phi.weights().len()
        )));
    }
    // gram[k][j] = φ(e_k e_j)
    let table = alg.multable();
    let mut gram = RatMatrix::zeros(d, d);
    for k in 0..d {
        for j in k..d {
            let mut s = Rational::ZERO;
            for (c, wt) in table[k][j].iter().zip(phi.weights()) {
                if *c != Rational::ZERO && *wt != Rational::ZERO {
                    s += c * wt;
                }
            }
            gram[(j, k)] = s.clone();
            gram[(k, j)] = s;
        }
    }
    let matrix = match w {
        None => gram,
        Some(w) => {
            let lw = alg.mult_matrix(&alg.project(w)?)?;
            lw.transpose().mul(&gram)
        }
    };
    SymBilinearForm::from_matrix(matrix)
        .map_err(|_| Error::Internal("bilinear form is not symmetric".into()))
}

/// Exact inertia by rational congruence diagonalisation.
pub fn inertia(m: &RatMatrix) -> Inertia {
    let n = m.rows();
    let mut a = m.to_rows();
    let mut live: Vec<usize> = (0..n).collect();
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    while !live.is_empty() {
        let pivot = match live.iter().position(|&i| a[i][i] != Rational::ZERO) {
            Some(p) => p,
            None => {
                let pair = live.iter().enumerate().find_map(|(p, &i)| {
                    live.iter()
                        .find(|&&j| j != i && a[i][j] != Rational::ZERO)
                        .map(|&j| (p, i, j))
                });
                let Some((p, i, j)) = pair else {
                    break;
                };
                // e_i <- e_i + e_j makes the diagonal entry 2 a_ij
                for &k in &live {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for &k in &live {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                p
            }
        };
        let i = live.remove(pivot);
        let piv = a[i][i].clone();
        for &k in &live {
            if a[k][i] == Rational::ZERO {
                continue;
            }
            let f = &a[k][i] / &piv;
            for &l in &live {
                if a[i][l] != Rational::ZERO {
                    let t = &f * &a[i][l];
                    a[k][l] -= t;
                }
            }
        }
        for &k in &live {
            a[k][i] = Rational::ZERO;
            a[i][k] = Rational::ZERO;
        }
        match rational_sign(&piv) {
            1 => out.positive += 1,
            _ => out.negative += 1,
        }
    }
    out.zero = n - out.positive - out.negative;
    out
}

pub fn signature(m: &RatMatrix) -> i64 {
    inertia(m).signature()
}
