//! Buchberger's algorithm with the Gebauer–Möller installation of both
//! Buchberger criteria. Pairs are selected by sugar degree, then by the
//! normal strategy (smallest lcm).

use std::cmp::Ordering;

use crate::polyring::{Monomial, MonomialOrder, Rational};

use super::sparse::{sub_scaled, sugar_degree, Reducers, SortedPoly};

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State {
    order: MonomialOrder,
    basis: Vec<SortedPoly>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    /// Sorted so that the next pair to treat is last.
    pairs: Vec<Pair>,
}

impl State {
    fn reducers(&self) -> Reducers<'_> {
        let (polys, sugars) = self
            .basis
            .iter()
            .zip(&self.sugar)
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|((p, &s), _)| (p, s))
            .unzip();
        Reducers::with_sugars(polys, sugars)
    }

    fn pair_cmp(&self, a: &Pair, b: &Pair) -> Ordering {
        // descending, so pop() yields the minimum; ties resolved by index
        b.sugar
            .cmp(&a.sugar)
            .then_with(|| self.order.cmp_exps(b.lcm.exps(), a.lcm.exps()))
            .then_with(|| (b.j, b.i).cmp(&(a.j, a.i)))
    }

    fn pair_sugar(&self, g: usize, h: usize, lcm: &Monomial) -> u32 {
        let d = sugar_degree(lcm);
        (self.sugar[g] + d - sugar_degree(self.basis[g].lm()))
            .max(self.sugar[h] + d - sugar_degree(self.basis[h].lm()))
    }

    /// Gebauer–Möller update for the new element `h`.
    fn update(&mut self, h: usize) {
        let hm = self.basis[h].lm().clone();

        let candidates: Vec<(usize, Monomial)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| (g, hm.lcm(self.basis[g].lm())))
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g, l)) in candidates.iter().enumerate() {
            let coprime = hm.is_coprime(self.basis[*g].lm());
            let dominated = candidates[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        // product criterion
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !hm.is_coprime(self.basis[*g].lm()))
            .map(|(g, lcm)| Pair {
                i: g,
                j: h,
                sugar: self.pair_sugar(g, h, &lcm),
                lcm,
            })
            .collect();

        // chain criterion against old pairs
        let basis = &self.basis;
        self.pairs.retain(|p| {
            !hm.divides(&p.lcm)
                || hm.lcm(basis[p.i].lm()) == p.lcm
                || hm.lcm(basis[p.j].lm()) == p.lcm
        });

        for g in 0..h {
            if self.active[g] && hm.divides(self.basis[g].lm()) {
                self.active[g] = false;
            }
        }

        self.pairs.extend(fresh);
        let mut pairs = std::mem::take(&mut self.pairs);
        pairs.sort_by(|a, b| self.pair_cmp(a, b));
        self.pairs = pairs;
    }

    fn insert(&mut self, mut h: SortedPoly, sugar: u32) {
        h.make_monic();
        self.basis.push(h);
        self.sugar.push(sugar);
        self.active.push(true);
        self.update(self.basis.len() - 1);
    }

    fn spoly(&self, p: &Pair) -> Vec<(Monomial, Rational)> {
        let f = &self.basis[p.i];
        let g = &self.basis[p.j];
        let mf = p.lcm.div(f.lm());
        let mg = p.lcm.div(g.lm());
        let ff = f.mul_monomial(&mf);
        // leading terms are both lcm with coefficient 1 and cancel
        sub_scaled(
            &ff.terms[1..],
            &Rational::from(1),
            &mg,
            &g.terms[1..],
            self.order,
        )
    }
}

fn total_degree(p: &SortedPoly) -> u32 {
    p.terms
        .iter()
        .map(|(m, _)| sugar_degree(m))
        .max()
        .unwrap_or(0)
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic and sorted
/// ascending by leading monomial.
pub(crate) fn reduced_basis(gens: Vec<SortedPoly>, order: MonomialOrder) -> Vec<SortedPoly> {
    let mut st = State {
        order,
        basis: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };

    let mut gens: Vec<SortedPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    gens.sort_by(|a, b| order.cmp_exps(a.lm().exps(), b.lm().exps()));
    for g in gens {
        let sugar = total_degree(&g);
        let (h, sugar) = st.reducers().reduce_sugar(g.terms, order, sugar);
        if !h.is_zero() {
            if h.lm().is_one() {
                return vec![unit(h)];
            }
            st.insert(h, sugar);
        }
    }

    while let Some(pair) = st.pairs.pop() {
        let s = st.spoly(&pair);
        let (h, sugar) = st.reducers().reduce_sugar(s, order, pair.sugar);
        if !h.is_zero() {
            if h.lm().is_one() {
                return vec![unit(h)];
            }
            st.insert(h, sugar);
        }
    }

    interreduce(
        st.basis
            .into_iter()
            .zip(st.active)
            .filter(|(_, a)| *a)
            .map(|(p, _)| p)
            .collect(),
        order,
    )
}

fn unit(mut h: SortedPoly) -> SortedPoly {
    h.make_monic();
    h
}

/// Tail-reduces a minimal basis into the reduced one.
pub(crate) fn interreduce(mut minimal: Vec<SortedPoly>, order: MonomialOrder) -> Vec<SortedPoly> {
    minimal.sort_by(|a, b| order.cmp_exps(a.lm().exps(), b.lm().exps()));
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&SortedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p)
            .collect();
        let red = Reducers::new(others);
        let p = &minimal[k];
        let mut terms = vec![p.terms[0].clone()];
        terms.extend(red.reduce(p.terms[1..].to_vec(), order).terms);
        let mut q = SortedPoly { terms };
        q.make_monic();
        out.push(q);
    }
    out
}
