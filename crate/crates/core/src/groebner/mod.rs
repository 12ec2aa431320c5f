//! Ideals of a polynomial ring, their reduced Gröbner bases, normal forms and
//! the ideal calculus (sum, product, intersection, quotient).

mod buchberger;
pub(crate) mod sparse;

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use malachite_base::num::basic::traits::One;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Rational, VarRing};

use sparse::{Reducers, SortedPoly};

/// Name of the auxiliary variable adjoined for intersections. It cannot be
/// produced by the polynomial grammar, so it never collides.
const TAG_VAR: &str = "#t";
const HOM_VAR: &str = "#h";
const LINEAR_VAR: &str = "#z";

/// A reduced Gröbner basis: monic, minimal, tail-reduced, sorted ascending
/// by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: VarRing,
    order: MonomialOrder,
    polys: Vec<SortedPoly>,
}

impl GroebnerBasis {
    pub(crate) fn compute(ring: &VarRing, gens: &[Polynomial], order: MonomialOrder) -> Self {
        let sorted = gens
            .iter()
            .map(|g| SortedPoly::from_poly(g, order))
            .collect();
        GroebnerBasis {
            ring: ring.clone(),
            order,
            polys: buchberger::reduced_basis(sorted, order),
        }
    }

    pub fn ring(&self) -> &VarRing {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.polys.iter().map(|p| p.to_poly(&self.ring)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.lm().clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].lm().is_one()
    }

    pub(crate) fn reducers(&self) -> Reducers<'_> {
        Reducers::new(self.polys.iter().collect())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(f.ring())?;
        Ok(self
            .reducers()
            .reduce(f.terms_sorted(self.order), self.order)
            .to_poly(&self.ring))
    }

    /// Every S-polynomial reduces to zero (Buchberger's criterion).
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let red = self.reducers();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let (f, g) = (&self.polys[i], &self.polys[j]);
                let l = f.lm().lcm(g.lm());
                let ff = f.mul_monomial(&l.div(f.lm()));
                let s = sparse::sub_scaled(
                    &ff.terms,
                    &Rational::ONE,
                    &l.div(g.lm()),
                    &g.terms,
                    self.order,
                );
                if !red.reduce(s, self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks the defining properties of a reduced basis.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.polys.iter().enumerate().all(|(i, p)| {
            p.terms[0].1 == Rational::ONE
                && p.terms.iter().all(|(m, _)| {
                    lms.iter()
                        .enumerate()
                        .all(|(k, lm)| (k == i && m == lm) || !lm.divides(m))
                })
        })
    }
}

/// Result of enumerating the monomials outside the leading-term ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Staircase {
    Finite(Vec<Monomial>),
    Infinite,
}

impl Staircase {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            Staircase::Finite(v) => Some(v.len()),
            Staircase::Infinite => None,
        }
    }
}

/// Finitely generated ideal with a lazily computed, cached Gröbner basis.
#[derive(Clone)]
pub struct Ideal {
    ring: VarRing,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl Ideal {
    /// Zero generators and duplicates are dropped; the rest are sorted by
    /// leading monomial, ties broken on the full term list.
    pub fn new(ring: &VarRing, generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        for g in &generators {
            ring.check_same(g.ring())?;
        }
        let mut keyed: Vec<(Vec<(Monomial, Rational)>, Polynomial)> = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| (g.terms_sorted(order), g))
            .collect();
        keyed.sort_by(|a, b| {
            for (x, y) in a.0.iter().zip(b.0.iter()) {
                let c = order
                    .cmp_exps(x.0.exps(), y.0.exps())
                    .then_with(|| x.1.cmp(&y.1));
                if c != std::cmp::Ordering::Equal {
                    return c;
                }
            }
            a.0.len().cmp(&b.0.len())
        });
        keyed.dedup_by(|a, b| a.1 == b.1);
        Ok(Ideal {
            ring: ring.clone(),
            generators: keyed.into_iter().map(|(_, g)| g).collect(),
            order,
            gb: OnceLock::new(),
        })
    }

    pub fn with_default_order(ring: &VarRing, generators: Vec<Polynomial>) -> Result<Self> {
        Ideal::new(ring, generators, MonomialOrder::DegRevLex)
    }

    pub fn unit(ring: &VarRing, order: MonomialOrder) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)], order).expect("same ring")
    }

    /// Ideal whose generators are already a reduced basis for `order`.
    fn from_reduced_basis(gb: GroebnerBasis) -> Self {
        let ideal = Ideal {
            ring: gb.ring.clone(),
            generators: gb.polynomials(),
            order: gb.order,
            gb: OnceLock::new(),
        };
        let _ = ideal.gb.set(Arc::new(gb));
        ideal
    }

    pub fn ring(&self) -> &VarRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same ideal under another order (cache not shared).
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        if order == self.order {
            return self.clone();
        }
        Ideal::new(&self.ring, self.generators.clone(), order).expect("same ring")
    }

    /// Reduced Gröbner basis; computed once, concurrent callers observe the
    /// single cached value.
    pub fn groebner(&self) -> Arc<GroebnerBasis> {
        self.gb
            .get_or_init(|| {
                Arc::new(GroebnerBasis::compute(
                    &self.ring,
                    &self.generators,
                    self.order,
                ))
            })
            .clone()
    }

    pub fn groebner_basis(&self) -> Vec<Polynomial> {
        self.groebner().polynomials()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.groebner().normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `self ⊆ other`
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.groebner().is_unit()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens, self.order)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f * g);
            }
        }
        Ideal::new(&self.ring, gens, self.order)
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let n = self.ring.len();
        if self.generators.is_empty() || other.generators.is_empty() {
            return Ideal::new(&self.ring, Vec::new(), self.order);
        }
        let tagged = self.ring.with_leading(TAG_VAR)?;
        let shift: Vec<usize> = (1..=n).collect();
        let t = Polynomial::var(&tagged, 0);
        let one_minus_t = &Polynomial::one(&tagged) - &t;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(&t * &f.map_vars(&tagged, &shift));
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.map_vars(&tagged, &shift));
        }
        let elim = GroebnerBasis::compute(&tagged, &gens, MonomialOrder::Block(1));

        let kept: Vec<SortedPoly> = elim
            .polys
            .iter()
            .filter(|p| p.terms.iter().all(|(m, _)| m.exps()[0] == 0))
            .map(|p| SortedPoly {
                terms: p
                    .terms
                    .iter()
                    .map(|(m, c)| (Monomial::from_exps(&m.exps()[1..]), c.clone()))
                    .collect(),
            })
            .collect();
        if self.order == MonomialOrder::DegRevLex {
            // block(1) restricted to t-free monomials is degrevlex, so the
            // survivors are already the reduced basis
            return Ok(Ideal::from_reduced_basis(GroebnerBasis {
                ring: self.ring.clone(),
                order: self.order,
                polys: kept,
            }));
        }
        Ideal::new(
            &self.ring,
            kept.iter().map(|p| p.to_poly(&self.ring)).collect(),
            self.order,
        )
    }

    /// `J : <g>`. Affine-linear `g` goes through [`Ideal::quotient_by_linear`],
    /// everything else through [`Ideal::quotient_by_intersection`].
    pub fn quotient_by_element(&self, g: &Polynomial) -> Result<Ideal> {
        self.ring.check_same(g.ring())?;
        if g.is_zero() || self.contains(g)? {
            return Ok(Ideal::unit(&self.ring, self.order));
        }
        if g.total_degree() == Some(1) {
            self.quotient_by_linear(g)
        } else {
            self.quotient_by_intersection(g)
        }
    }

    /// `J : <g>` computed as `(J ∩ <g>) / g`.
    pub fn quotient_by_intersection(&self, g: &Polynomial) -> Result<Ideal> {
        self.ring.check_same(g.ring())?;
        if g.is_zero() {
            return Ok(Ideal::unit(&self.ring, self.order));
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()], self.order)?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.generators.len());
        for h in meet.generators() {
            gens.push(divide_exact(h, g).map_err(|e| {
                Error::Internal(format!(
                    "ideal quotient: intersection generator not divisible: {e}"
                ))
            })?);
        }
        Ideal::new(&self.ring, gens, self.order)
    }

    /// `J : <g>` for `g` of degree one.
    ///
    /// After the affine change of coordinates that turns `g` into a variable
    /// `z`, the homogenisation `J^h` (from a degree-compatible basis) satisfies
    /// `(J : z)^h = J^h : z`, and a degrevlex basis of a homogeneous ideal with
    /// `z` smallest yields a basis of `J^h : z` by dividing out `z` wherever it
    /// divides. Dehomogenising and undoing the substitution gives `J : <g>`.
    pub fn quotient_by_linear(&self, g: &Polynomial) -> Result<Ideal> {
        self.ring.check_same(g.ring())?;
        if g.total_degree() != Some(1) {
            return Err(Error::InvalidProblem(format!("{g} is not of degree one")));
        }
        let n = self.ring.len();
        let coeff = |k: usize| g.coefficient(&Monomial::var(n, k));
        let pivot = (0..n)
            .rev()
            .find(|&k| coeff(k) != Rational::from(0))
            .expect("degree one");
        let others: Vec<usize> = (0..n).filter(|&k| k != pivot).collect();
        let mut names: Vec<String> = others
            .iter()
            .map(|&k| self.ring.names()[k].clone())
            .collect();
        names.push(HOM_VAR.to_string());
        names.push(LINEAR_VAR.to_string());
        let work = VarRing::new(&names)?;
        let (h, z) = (n - 1, n);

        let cp = coeff(pivot);
        let mut solved =
            &Polynomial::var(&work, z) - &Polynomial::constant(&work, g.constant_term());
        for (idx, &k) in others.iter().enumerate() {
            solved = &solved - &Polynomial::var(&work, idx).scale(&coeff(k));
        }
        let solved = solved.scale(&(Rational::from(1) / cp));
        let forward: Vec<Polynomial> = (0..n)
            .map(|k| match others.iter().position(|&o| o == k) {
                Some(idx) => Polynomial::var(&work, idx),
                None => solved.clone(),
            })
            .collect();

        let graded = if self.order == MonomialOrder::DegRevLex {
            self.groebner()
        } else {
            self.with_order(MonomialOrder::DegRevLex).groebner()
        };
        let homogeneous: Vec<Polynomial> = graded
            .polynomials()
            .iter()
            .map(|p| homogenize(&p.compose(&work, &forward), h))
            .collect();
        let hgb = Ideal::new(&work, homogeneous, MonomialOrder::DegRevLex)?.groebner();

        let mut back: Vec<Polynomial> = others
            .iter()
            .map(|&k| Polynomial::var(&self.ring, k))
            .collect();
        back.push(Polynomial::one(&self.ring));
        back.push(g.clone());
        let gens = hgb
            .polynomials()
            .iter()
            .map(|p| strip_variable(p, z).compose(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, gens, self.order)
    }

    /// `J : I = { f : f·I ⊆ J }`, intersecting `J : <g>` over the generators
    /// `g` of `I`.
    pub fn quotient(&self, divisor: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&divisor.ring)?;
        let mut acc: Option<Ideal> = None;
        for g in divisor.generators() {
            let part = self.quotient_by_element(g)?;
            if part.is_unit_ideal() {
                continue;
            }
            acc = Some(match acc {
                None => part,
                Some(prev) => prev.intersect(&part)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring, self.order)))
    }

    /// Monomials outside the leading-term ideal, ascending in the order
    /// (so `1` comes first), or `Infinite` when some variable has no pure
    /// power among the leading monomials.
    pub fn standard_monomials(&self) -> Staircase {
        let gb = self.groebner();
        standard_monomials_of(&gb)
    }
}

pub(crate) fn standard_monomials_of(gb: &GroebnerBasis) -> Staircase {
    let n = gb.ring.len();
    let lms = gb.leading_monomials();
    if gb.is_unit() {
        return Staircase::Finite(Vec::new());
    }
    for v in 0..n {
        let has_pure = lms.iter().any(|m| {
            m.exps()
                .iter()
                .enumerate()
                .all(|(i, &e)| (i == v) == (e > 0))
        });
        if !has_pure {
            return Staircase::Infinite;
        }
    }
    // the complement of a monomial ideal is closed under division, so a
    // search from 1 that multiplies by variables reaches every element
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut stack = vec![Monomial::one(n)];
    seen.insert(Monomial::one(n));
    while let Some(m) = stack.pop() {
        for v in 0..n {
            let mut next = m.clone();
            next.0[v] += 1;
            if seen.contains(&next) || lms.iter().any(|l| l.divides(&next)) {
                continue;
            }
            seen.insert(next.clone());
            stack.push(next);
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| gb.order.cmp_exps(a.exps(), b.exps()));
    Staircase::Finite(out)
}

/// Homogenises `p` with the variable `h` up to its total degree.
fn homogenize(p: &Polynomial, h: usize) -> Polynomial {
    let d = p.total_degree().unwrap_or(0);
    Polynomial::from_terms(
        p.ring(),
        p.terms().map(|(m, c)| {
            let mut e = m.exps().to_vec();
            e[h] += (d - m.degree()) as u16;
            (Monomial::from_exps(&e), c.clone())
        }),
    )
}

/// `p / v` when the variable `v` divides every term of `p`, else `p`.
fn strip_variable(p: &Polynomial, v: usize) -> Polynomial {
    if !p.terms().all(|(m, _)| m.exps()[v] > 0) {
        return p.clone();
    }
    Polynomial::from_terms(
        p.ring(),
        p.terms().map(|(m, c)| {
            let mut e = m.exps().to_vec();
            e[v] -= 1;
            (Monomial::from_exps(&e), c.clone())
        }),
    )
}

/// Exact multivariate division `p / d`; errors on a nonzero remainder.
pub fn divide_exact(p: &Polynomial, d: &Polynomial) -> Result<Polynomial> {
    p.ring().check_same(d.ring())?;
    if d.is_zero() {
        return Err(Error::InexactDivision("division by zero".into()));
    }
    let order = MonomialOrder::DegRevLex;
    let ds = SortedPoly::from_poly(d, order);
    let (dm, dc) = ds.terms[0].clone();
    let mut work = p.terms_sorted(order);
    let mut quotient = Vec::new();
    while let Some((m, c)) = work.first().cloned() {
        if !dm.divides(&m) {
            return Err(Error::InexactDivision(format!(
                "{p} is not divisible by {d}"
            )));
        }
        let q = m.div(&dm);
        let qc = &c / &dc;
        work = sparse::sub_scaled(&work, &qc, &q, &ds.terms, order);
        quotient.push((q, qc));
    }
    Ok(Polynomial::from_terms(p.ring(), quotient))
}
