//! The finite-dimensional algebra `A = Q[x]/S` for a zero-dimensional ideal
//! `S`, its elements, and the tensor square `A ⊗ A` in coordinates.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use malachite_base::num::basic::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{standard_monomials_of, GroebnerBasis, Ideal, Staircase};
use crate::linalg::RatMatrix;
use crate::polyring::{Monomial, Polynomial, Rational, VarRing};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// `A = Q[x]/S` with the standard-monomial basis `e_1 = 1, e_2, …, e_d`.
pub struct QuotientAlgebra {
    id: u64,
    ideal: Ideal,
    gb: Arc<GroebnerBasis>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `multable[i][j]` = coordinates of `e_i e_j`.
    multable: Vec<Vec<Vec<Rational>>>,
    /// Left multiplication by `e_k` as sparse `(row, col, value)` triples.
    lmul: Vec<Vec<(usize, usize, Rational)>>,
}

impl fmt::Debug for QuotientAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuotientAlgebra")
            .field("dim", &self.dim())
            .field("basis", &self.basis_strings())
            .finish()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgElement {
    algebra: u64,
    coords: Vec<Rational>,
}

impl AlgElement {
    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == Rational::ZERO)
    }
}

/// `Σ t[i][j] e_i ⊗ e_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    algebra: u64,
    coords: RatMatrix,
}

impl TensorElement {
    pub fn coords(&self) -> &RatMatrix {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

pub fn build_algebra(ideal: &Ideal) -> Result<QuotientAlgebra> {
    QuotientAlgebra::new(ideal)
}

impl QuotientAlgebra {
    pub fn new(ideal: &Ideal) -> Result<Self> {
        let gb = ideal.groebner();
        let basis = match standard_monomials_of(&gb) {
            Staircase::Finite(b) => b,
            Staircase::Infinite => return Err(Error::NotZeroDimensional),
        };
        let index: HashMap<Monomial, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut alg = QuotientAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            ideal: ideal.clone(),
            gb,
            basis,
            index,
            multable: Vec::new(),
            lmul: Vec::new(),
        };
        let d = alg.basis.len();
        let mut table = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in i..d {
                let c = alg.monomial_coords(&alg.basis[i].mul(&alg.basis[j]));
                table[j][i] = c.clone();
                table[i][j] = c;
            }
        }
        let mut lmul = vec![Vec::new(); d];
        for (k, row) in table.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                for (p, v) in c.iter().enumerate() {
                    if *v != Rational::ZERO {
                        lmul[k].push((p, i, v.clone()));
                    }
                }
            }
        }
        alg.multable = table;
        alg.lmul = lmul;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ring(&self) -> &VarRing {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_strings(&self) -> Vec<String> {
        self.basis.iter().map(|m| m.format(self.ring())).collect()
    }

    pub fn multable(&self) -> &[Vec<Vec<Rational>>] {
        &self.multable
    }

    fn monomial_coords(&self, m: &Monomial) -> Vec<Rational> {
        let nf = self
            .gb
            .reducers()
            .reduce(vec![(m.clone(), Rational::ONE)], self.gb.order());
        self.sorted_coords(nf.terms)
    }

    fn sorted_coords(&self, terms: Vec<(Monomial, Rational)>) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; self.dim()];
        for (m, c) in terms {
            let k = self.index[&m];
            out[k] += c;
        }
        out
    }

    fn check(&self, id: u64) -> Result<()> {
        if id == self.id {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<AlgElement> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for an algebra of dimension {}",
                coords.len(),
                self.dim()
            )));
        }
        Ok(AlgElement {
            algebra: self.id,
            coords,
        })
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement {
            algebra: self.id,
            coords: vec![Rational::ZERO; self.dim()],
        }
    }

    pub fn one(&self) -> AlgElement {
        let mut a = self.zero();
        if let Some(c) = a.coords.first_mut() {
            *c = Rational::ONE;
        }
        a
    }

    pub fn basis_element(&self, k: usize) -> AlgElement {
        let mut a = self.zero();
        a.coords[k] = Rational::ONE;
        a
    }

    /// Residue class of `f`.
    pub fn project(&self, f: &Polynomial) -> Result<AlgElement> {
        let nf = self.gb.normal_form(f)?;
        let terms = nf.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        Ok(AlgElement {
            algebra: self.id,
            coords: self.sorted_coords(terms),
        })
    }

    pub fn to_polynomial(&self, a: &AlgElement) -> Result<Polynomial> {
        self.check(a.algebra)?;
        Ok(Polynomial::from_terms(
            self.ring(),
            self.basis.iter().cloned().zip(a.coords.iter().cloned()),
        ))
    }

    pub fn add(&self, a: &AlgElement, b: &AlgElement) -> Result<AlgElement> {
        self.check(a.algebra)?;
        self.check(b.algebra)?;
        Ok(AlgElement {
            algebra: self.id,
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn scale(&self, a: &AlgElement, c: &Rational) -> Result<AlgElement> {
        self.check(a.algebra)?;
        Ok(AlgElement {
            algebra: self.id,
            coords: a.coords.iter().map(|x| x * c).collect(),
        })
    }

    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> Result<AlgElement> {
        self.check(a.algebra)?;
        self.check(b.algebra)?;
        let d = self.dim();
        let mut out = vec![Rational::ZERO; d];
        for (i, ai) in a.coords.iter().enumerate() {
            if *ai == Rational::ZERO {
                continue;
            }
            for (j, bj) in b.coords.iter().enumerate() {
                if *bj == Rational::ZERO {
                    continue;
                }
                let ab = ai * bj;
                for (k, c) in self.multable[i][j].iter().enumerate() {
                    if *c != Rational::ZERO {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        Ok(AlgElement {
            algebra: self.id,
            coords: out,
        })
    }

    /// Matrix of `b ↦ a·b` in the basis (column `i` holds `a·e_i`).
    pub fn mult_matrix(&self, a: &AlgElement) -> Result<RatMatrix> {
        self.check(a.algebra)?;
        let d = self.dim();
        let mut m = RatMatrix::zeros(d, d);
        for (k, ak) in a.coords.iter().enumerate() {
            if *ak == Rational::ZERO {
                continue;
            }
            for (p, i, c) in &self.lmul[k] {
                m[(*p, *i)] += ak * c;
            }
        }
        Ok(m)
    }

    pub fn tensor(&self, coords: RatMatrix) -> Result<TensorElement> {
        let d = self.dim();
        if coords.rows() != d || coords.cols() != d {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} tensor for an algebra of dimension {d}",
                coords.rows(),
                coords.cols()
            )));
        }
        Ok(TensorElement {
            algebra: self.id,
            coords,
        })
    }

    pub fn tensor_zero(&self) -> TensorElement {
        TensorElement {
            algebra: self.id,
            coords: RatMatrix::zeros(self.dim(), self.dim()),
        }
    }

    pub fn tensor_one(&self) -> TensorElement {
        let mut t = self.tensor_zero();
        if self.dim() > 0 {
            t.coords[(0, 0)] = Rational::ONE;
        }
        t
    }

    pub fn tensor_add(&self, s: &TensorElement, t: &TensorElement) -> Result<TensorElement> {
        self.check(s.algebra)?;
        self.check(t.algebra)?;
        let mut out = s.clone();
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                if t.coords[(i, j)] != Rational::ZERO {
                    out.coords[(i, j)] += &t.coords[(i, j)];
                }
            }
        }
        Ok(out)
    }

    /// `a ⊗ b`.
    pub fn tensor_product(&self, a: &AlgElement, b: &AlgElement) -> Result<TensorElement> {
        self.check(a.algebra)?;
        self.check(b.algebra)?;
        let d = self.dim();
        let mut t = RatMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                t[(i, j)] = &a.coords[i] * &b.coords[j];
            }
        }
        Ok(TensorElement {
            algebra: self.id,
            coords: t,
        })
    }

    pub fn tensor_mul(&self, s: &TensorElement, t: &TensorElement) -> Result<TensorElement> {
        self.check(s.algebra)?;
        TensorMultiplier::new(self, t)?.apply(s)
    }

    /// Image of `p` (a polynomial in the doubled ring) in `A ⊗ A`: each term
    /// `x^α x'^β` goes to `x^α ⊗ x^β`.
    pub fn project_tensor(&self, p: &Polynomial) -> Result<TensorElement> {
        let mut cache = HashMap::new();
        self.project_tensor_cached(p, &mut cache)
    }

    pub(crate) fn project_tensor_cached(
        &self,
        p: &Polynomial,
        cache: &mut HashMap<Monomial, Vec<Rational>>,
    ) -> Result<TensorElement> {
        let n = self.ring().len();
        p.ring().check_same(&self.ring().doubled())?;
        let d = self.dim();
        let mut t = RatMatrix::zeros(d, d);
        for (m, c) in p.terms() {
            let left = Monomial::from_exps(&m.exps()[..n]);
            let right = Monomial::from_exps(&m.exps()[n..]);
            let u = self.cached_coords(&left, cache);
            let v = self.cached_coords(&right, cache);
            for (i, ui) in u.iter().enumerate() {
                if *ui == Rational::ZERO {
                    continue;
                }
                let cu = c * ui;
                for (j, vj) in v.iter().enumerate() {
                    if *vj != Rational::ZERO {
                        t[(i, j)] += &cu * vj;
                    }
                }
            }
        }
        Ok(TensorElement {
            algebra: self.id,
            coords: t,
        })
    }

    fn cached_coords(
        &self,
        m: &Monomial,
        cache: &mut HashMap<Monomial, Vec<Rational>>,
    ) -> Vec<Rational> {
        if let Some(c) = cache.get(m) {
            return c.clone();
        }
        let c = match self.index.get(m) {
            Some(&k) => {
                let mut v = vec![Rational::ZERO; self.dim()];
                v[k] = Rational::ONE;
                v
            }
            None => self.monomial_coords(m),
        };
        cache.insert(m.clone(), c.clone());
        c
    }

    /// Human-readable dump: dimension, basis, and the nonzero products.
    pub fn describe(&self) -> String {
        let names = self.basis_strings();
        let mut out = format!("dim A = {}\nbasis: {}\n", self.dim(), names.join(", "));
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let p = Polynomial::from_terms(
                    self.ring(),
                    self.basis
                        .iter()
                        .cloned()
                        .zip(self.multable[i][j].iter().cloned()),
                );
                out.push_str(&format!("{} * {} = {}\n", names[i], names[j], p));
            }
        }
        out
    }
}

/// Multiplication by a fixed tensor `t`, prepared once and applied to many
/// left factors: `s·t = Σ_k L_k S N_kᵀ` with `N_k = Σ_l t[k][l] L_l`.
pub struct TensorMultiplier<'a> {
    algebra: &'a QuotientAlgebra,
    parts: Vec<(usize, RatMatrix)>,
}

impl<'a> TensorMultiplier<'a> {
    pub fn new(algebra: &'a QuotientAlgebra, t: &TensorElement) -> Result<Self> {
        algebra.check(t.algebra)?;
        let d = algebra.dim();
        let mut parts = Vec::new();
        for k in 0..d {
            let row = t.coords.row(k);
            if row.iter().all(|c| *c == Rational::ZERO) {
                continue;
            }
            let mut n = RatMatrix::zeros(d, d);
            for (l, tkl) in row.iter().enumerate() {
                if *tkl == Rational::ZERO {
                    continue;
                }
                for (p, i, c) in &algebra.lmul[l] {
                    n[(*p, *i)] += tkl * c;
                }
            }
            parts.push((k, n));
        }
        Ok(TensorMultiplier { algebra, parts })
    }

    pub fn apply(&self, s: &TensorElement) -> Result<TensorElement> {
        let alg = self.algebra;
        alg.check(s.algebra)?;
        let d = alg.dim();
        let mut out = RatMatrix::zeros(d, d);
        if s.is_zero() {
            return Ok(TensorElement {
                algebra: alg.id,
                coords: out,
            });
        }
        let mut x = RatMatrix::zeros(d, d);
        for (k, n) in &self.parts {
            // x = L_k S
            for p in 0..d {
                for j in 0..d {
                    x[(p, j)] = Rational::ZERO;
                }
            }
            for (p, i, c) in &alg.lmul[*k] {
                for j in 0..d {
                    let sij = &s.coords[(*i, j)];
                    if *sij != Rational::ZERO {
                        x[(*p, j)] += c * sij;
                    }
                }
            }
            // out += x Nᵀ
            for p in 0..d {
                let xr = x.row(p);
                if xr.iter().all(|v| *v == Rational::ZERO) {
                    continue;
                }
                for q in 0..d {
                    let mut acc = Rational::ZERO;
                    for (a, b) in xr.iter().zip(n.row(q)) {
                        if *a != Rational::ZERO && *b != Rational::ZERO {
                            acc += a * b;
                        }
                    }
                    if acc != Rational::ZERO {
                        out[(p, q)] += acc;
                    }
                }
            }
        }
        Ok(TensorElement {
            algebra: alg.id,
            coords: out,
        })
    }
}
