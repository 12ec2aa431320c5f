//! The Bezoutian element `T ∈ A ⊗ A` of a square map, its dual basis, and
//! the trace functional `φ_T`.

use std::collections::HashMap;

use malachite_base::num::basic::traits::Zero;

use crate::algebra::{AlgElement, QuotientAlgebra, TensorElement, TensorMultiplier};
use crate::error::{Error, Result};
use crate::polyring::{divided_difference, Polynomial, Rational};

/// A linear functional `A -> Q` given by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    weights: Vec<Rational>,
}

impl Functional {
    pub fn new(weights: Vec<Rational>) -> Self {
        Functional { weights }
    }

    pub fn zero(d: usize) -> Self {
        Functional {
            weights: vec![Rational::ZERO; d],
        }
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn apply(&self, a: &AlgElement) -> Result<Rational> {
        if a.coords().len() != self.weights.len() {
            return Err(Error::DimensionMismatch(format!(
                "functional of length {} applied to an element of length {}",
                self.weights.len(),
                a.coords().len()
            )));
        }
        let mut s = Rational::ZERO;
        for (w, c) in self.weights.iter().zip(a.coords()) {
            if *w != Rational::ZERO && *c != Rational::ZERO {
                s += w * c;
            }
        }
        Ok(s)
    }
}

/// The `n x n` matrix of divided differences of `h`, each entry projected
/// into `A ⊗ A`.
pub fn bezoutian_entries(
    h: &[Polynomial],
    alg: &QuotientAlgebra,
) -> Result<Vec<Vec<TensorElement>>> {
    let n = alg.ring().len();
    if h.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} map components for {n} variables",
            h.len()
        )));
    }
    let mut cache = HashMap::new();
    let mut rows = Vec::with_capacity(n);
    for hi in h {
        hi.ring().check_same(alg.ring())?;
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let dd = divided_difference(hi, j)?;
            row.push(alg.project_tensor_cached(&dd, &mut cache)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `T`, the image of `det[T_ij(x, x')]` in `A ⊗ A`.
pub fn bezoutian_tensor(h: &[Polynomial], alg: &QuotientAlgebra) -> Result<TensorElement> {
    let entries = bezoutian_entries(h, alg)?;
    tensor_determinant(&entries, alg)
}

/// Determinant of a square matrix over the commutative ring `A ⊗ A`, by
/// Laplace expansion along rows with memoisation over column subsets.
pub fn tensor_determinant(
    m: &[Vec<TensorElement>],
    alg: &QuotientAlgebra,
) -> Result<TensorElement> {
    let n = m.len();
    if n == 0 {
        return Ok(alg.tensor_one());
    }
    if n > 30 {
        return Err(Error::DimensionMismatch(format!(
            "determinant of size {n} exceeds the subset table"
        )));
    }
    // layer[S] = minor on rows 0..|S| and columns S
    let mut layer: HashMap<u32, TensorElement> = HashMap::new();
    layer.insert(0, alg.tensor_one());
    for (k, row) in m.iter().enumerate() {
        let mut next: HashMap<u32, TensorElement> = HashMap::new();
        for (j, entry) in row.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let mult = TensorMultiplier::new(alg, entry)?;
            let bit = 1u32 << j;
            let mut keys: Vec<u32> = layer.keys().copied().filter(|s| s & bit == 0).collect();
            keys.sort_unstable();
            for s in keys {
                let minor = &layer[&s];
                let mut prod = mult.apply(minor)?;
                if prod.is_zero() {
                    continue;
                }
                let full = s | bit;
                // columns of `full` after j, counted for the cofactor sign
                if (full >> (j + 1)).count_ones() % 2 == 1 {
                    prod = alg.tensor(negated(prod.coords()))?;
                }
                match next.get_mut(&full) {
                    Some(acc) => *acc = alg.tensor_add(acc, &prod)?,
                    None => {
                        next.insert(full, prod);
                    }
                }
            }
        }
        next.retain(|_, t| !t.is_zero());
        layer = next;
        if layer.is_empty() {
            return Ok(alg.tensor_zero());
        }
        debug_assert!(layer.keys().all(|s| s.count_ones() as usize == k + 1));
    }
    let all = (1u32 << n) - 1;
    Ok(layer.remove(&all).unwrap_or_else(|| alg.tensor_zero()))
}

fn negated(m: &crate::linalg::RatMatrix) -> crate::linalg::RatMatrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if out[(i, j)] != Rational::ZERO {
                out[(i, j)] = -&m[(i, j)];
            }
        }
    }
    out
}

/// `ê_i = Σ_j t[i][j] e_j`.
pub fn dual_basis(t: &TensorElement, alg: &QuotientAlgebra) -> Result<Vec<AlgElement>> {
    (0..alg.dim())
        .map(|i| alg.element(t.coords().row(i).to_vec()))
        .collect()
}

/// `φ_T` with weights `A_1..A_d` solving `1 = Σ A_i ê_i`.
pub fn trace_functional(t: &TensorElement, alg: &QuotientAlgebra) -> Result<Functional> {
    let rhs = alg.one().coords().to_vec();
    let weights = t
        .coords()
        .transpose()
        .solve(&rhs)
        .ok_or(Error::SingularBezoutian)?;
    Ok(Functional::new(weights))
}
