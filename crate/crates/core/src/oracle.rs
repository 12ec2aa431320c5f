//! Floating point witness: multi-start Newton for the real zeros of `H` off
//! `V(I)` and the sum of their Jacobian signs. Never feeds exact results.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::degree::DegreeProblem;
use crate::linalg::RatMatrix;
use crate::polyring::Polynomial;

#[derive(Clone, Debug, PartialEq)]
pub struct OracleConfig {
    pub box_half_width: f64,
    pub starts: usize,
    pub newton_tol: f64,
    pub dedupe_radius: f64,
    pub regularity_floor: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            box_half_width: 4.0,
            starts: 2000,
            newton_tol: 1e-12,
            dedupe_radius: 1e-6,
            regularity_floor: 1e-8,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericZero {
    pub point: Vec<f64>,
    pub jacobian_det: f64,
    pub sign: i32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub sum: i64,
    pub zeros: Vec<NumericZero>,
    /// False when some zero has `|det DH|` below the floor.
    pub regular: bool,
}

struct System {
    h: Vec<Polynomial>,
    jac: Vec<Vec<Polynomial>>,
}

impl System {
    fn new(h: &[Polynomial]) -> Self {
        let n = h.len();
        System {
            h: h.to_vec(),
            jac: h
                .iter()
                .map(|p| (0..n).map(|k| p.partial_derivative(k)).collect())
                .collect(),
        }
    }

    fn value(&self, x: &[f64]) -> DVector<f64> {
        DVector::from_iterator(self.h.len(), self.h.iter().map(|p| p.eval_f64(x)))
    }

    fn jacobian(&self, x: &[f64]) -> DMatrix<f64> {
        let n = self.h.len();
        DMatrix::from_fn(n, n, |i, j| self.jac[i][j].eval_f64(x))
    }

    fn newton(&self, start: Vec<f64>, tol: f64) -> Option<Vec<f64>> {
        let mut x = start;
        for _ in 0..100 {
            let step = self.jacobian(&x).lu().solve(&self.value(&x))?;
            let size = step.norm();
            if !size.is_finite() {
                return None;
            }
            for (xi, si) in x.iter_mut().zip(step.iter()) {
                *xi -= si;
            }
            if x.iter().any(|v| v.abs() > 1e8) {
                return None;
            }
            if size <= tol * (1.0 + DVector::from_column_slice(&x).norm()) {
                let scale = 1.0 + x.iter().map(|v| v.abs()).fold(0.0, f64::max);
                return (self.value(&x).norm() <= 1e-8 * scale.powi(4)).then_some(x);
            }
        }
        None
    }
}

/// Multi-start Newton over the box; a zero is dropped as lying on `V(I)`
/// when every excluded generator nearly vanishes there.
pub fn numeric_degree_sum(dp: &DegreeProblem, cfg: &OracleConfig) -> OracleReport {
    let sys = System::new(dp.map());
    let n = dp.ring().len();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut found: Vec<Vec<f64>> = Vec::new();
    for _ in 0..cfg.starts {
        let start: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(-cfg.box_half_width..=cfg.box_half_width))
            .collect();
        let Some(z) = sys.newton(start, cfg.newton_tol) else {
            continue;
        };
        if !found.iter().any(|w| distance(w, &z) <= cfg.dedupe_radius) {
            found.push(z);
        }
    }
    let excluded_tol = cfg.dedupe_radius;
    found.retain(|z| {
        dp.excluded().is_empty()
            || !dp
                .excluded()
                .iter()
                .all(|g| g.eval_f64(z).abs() <= excluded_tol)
    });
    found.sort_by(|a, b| {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut regular = true;
    let zeros: Vec<NumericZero> = found
        .into_iter()
        .map(|point| {
            let det = sys.jacobian(&point).determinant();
            if det.abs() < cfg.regularity_floor {
                regular = false;
            }
            NumericZero {
                sign: if det > 0.0 {
                    1
                } else if det < 0.0 {
                    -1
                } else {
                    0
                },
                jacobian_det: det,
                point,
            }
        })
        .collect();
    OracleReport {
        sum: zeros.iter().map(|z| z.sign as i64).sum(),
        zeros,
        regular,
    }
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Positive minus negative eigenvalues, ignoring those within `tol` of zero.
pub fn eigen_signature(m: &RatMatrix, tol: f64) -> i64 {
    let n = m.rows();
    let data = m.to_f64();
    let eig = SymmetricEigen::new(DMatrix::from_row_slice(n, n, &data));
    eig.eigenvalues
        .iter()
        .map(|&l| {
            if l > tol {
                1
            } else if l < -tol {
                -1
            } else {
                0
            }
        })
        .sum()
}
