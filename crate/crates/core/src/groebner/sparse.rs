//! Order-sorted working representation used by the Gröbner kernels.

use std::cmp::Ordering;

use malachite_base::num::basic::traits::{One, Zero};

use crate::polyring::{Monomial, MonomialOrder, Polynomial, Rational, VarRing};

/// Terms sorted strictly descending in the active order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SortedPoly {
    pub terms: Vec<(Monomial, Rational)>,
}

/// Bit `i % 64` is set when variable `i` occurs.
#[inline]
pub(crate) fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exps().iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}

impl SortedPoly {
    pub fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        SortedPoly {
            terms: p.terms_sorted(order),
        }
    }

    pub fn to_poly(&self, ring: &VarRing) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            if *lc != Rational::ONE {
                let inv = Rational::ONE / lc;
                for (_, c) in self.terms.iter_mut() {
                    *c *= &inv;
                }
            }
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> SortedPoly {
        SortedPoly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }
}

/// `p - c * m * g` where `p` is the descending slice `p`.
pub(crate) fn sub_scaled(
    p: &[(Monomial, Rational)],
    c: &Rational,
    m: &Monomial,
    g: &[(Monomial, Rational)],
    order: MonomialOrder,
) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut gm: Option<Monomial> = g.first().map(|(t, _)| t.mul(m));
    while i < p.len() || gm.is_some() {
        let take = match (&gm, p.get(i)) {
            (None, _) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(a), Some((b, _))) => order.cmp_exps(b.exps(), a.exps()),
        };
        match take {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let coef = -(c * &g[j].1);
                out.push((gm.take().unwrap(), coef));
                j += 1;
                gm = g.get(j).map(|(t, _)| t.mul(m));
            }
            Ordering::Equal => {
                let coef = &p[i].1 - &(c * &g[j].1);
                if coef != Rational::ZERO {
                    out.push((gm.take().unwrap(), coef));
                }
                i += 1;
                j += 1;
                gm = g.get(j).map(|(t, _)| t.mul(m));
            }
        }
    }
    out
}

/// Read-only view of a set of monic reducers.
pub(crate) struct Reducers<'a> {
    pub polys: Vec<&'a SortedPoly>,
    pub masks: Vec<u64>,
    pub sugars: Vec<u32>,
}

#[inline]
pub(crate) fn sugar_degree(m: &Monomial) -> u32 {
    m.exps().iter().map(|&e| e as u32).sum()
}

impl<'a> Reducers<'a> {
    pub fn new(polys: Vec<&'a SortedPoly>) -> Self {
        let sugars = vec![0; polys.len()];
        Reducers::with_sugars(polys, sugars)
    }

    pub fn with_sugars(polys: Vec<&'a SortedPoly>, sugars: Vec<u32>) -> Self {
        let masks = polys.iter().map(|p| divmask(p.lm())).collect();
        Reducers {
            polys,
            masks,
            sugars,
        }
    }

    #[inline]
    pub fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = divmask(m);
        (0..self.polys.len()).find(|&k| self.masks[k] & !mask == 0 && self.polys[k].lm().divides(m))
    }

    /// Full reduction: no term of the result is divisible by a reducer's
    /// leading monomial.
    pub fn reduce(&self, p: Vec<(Monomial, Rational)>, order: MonomialOrder) -> SortedPoly {
        self.reduce_sugar(p, order, 0).0
    }

    /// Full reduction that also tracks the sugar degree.
    pub fn reduce_sugar(
        &self,
        p: Vec<(Monomial, Rational)>,
        order: MonomialOrder,
        mut sugar: u32,
    ) -> (SortedPoly, u32) {
        let mut rem: Vec<(Monomial, Rational)> = Vec::new();
        let mut work = p;
        let mut start = 0;
        while start < work.len() {
            let (m, c) = &work[start];
            match self.find(m) {
                Some(k) => {
                    let g = self.polys[k];
                    let q = m.div(g.lm());
                    sugar = sugar.max(sugar_degree(&q) + self.sugars[k]);
                    let c = c.clone();
                    work = sub_scaled(&work[start + 1..], &c, &q, &g.terms[1..], order);
                    start = 0;
                }
                None => {
                    rem.push(work[start].clone());
                    start += 1;
                }
            }
        }
        (SortedPoly { terms: rem }, sugar)
    }
}
