//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] is a map from [`Monomial`] to nonzero [`Rational`]
//! coefficients inside a fixed [`VarRing`]. Arithmetic is exact; the only
//! floating point entry point is [`Polynomial::eval_f64`], used by the
//! numerical oracle.

mod divided;
mod order;
mod parse;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use malachite_base::num::arithmetic::traits::{Pow, Sign};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_base::num::conversion::traits::RoundingFrom;
use malachite_base::rounding_modes::RoundingMode;
use smallvec::SmallVec;

pub use divided::{divided_difference, exact_divide};
pub use malachite_q::Rational;
pub use order::MonomialOrder;
pub use parse::{parse_polynomial, parse_rational};

use crate::error::{Error, Result};

/// Suffix appended to every variable name by [`VarRing::doubled`].
pub const PRIME_SUFFIX: &str = "#p";

/// Ordered list of distinct variable names.
///
/// Cloning is cheap; two rings are equal when their name lists are equal.
#[derive(Clone)]
pub struct VarRing {
    names: Arc<[String]>,
}

impl VarRing {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::InvalidProblem("empty variable name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidProblem(format!("duplicate variable `{n}`")));
            }
        }
        Ok(VarRing {
            names: names.into(),
        })
    }

    /// The ring `x_1..x_n, x_1#p..x_n#p` of the Bezoutian construction.
    pub fn doubled(&self) -> VarRing {
        let mut names: Vec<String> = self.names.to_vec();
        names.extend(self.names.iter().map(|n| format!("{n}{PRIME_SUFFIX}")));
        VarRing::new(&names).expect("primed names cannot collide")
    }

    /// Ring with `extra` prepended in front of the existing variables.
    pub fn with_leading(&self, extra: &str) -> Result<VarRing> {
        let mut names = vec![extra.to_string()];
        names.extend(self.names.iter().cloned());
        VarRing::new(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn check_same(&self, other: &VarRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self:?} vs {other:?}")))
        }
    }
}

impl PartialEq for VarRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for VarRing {}

impl fmt::Debug for VarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(", "))
    }
}

pub(crate) type Exps = SmallVec<[u16; 24]>;

/// Exponent vector; its length is the size of the owning ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub(crate) Exps);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// `self | other`
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other | self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn format(&self, ring: &VarRing) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ring.names()[i].clone()),
                _ => parts.push(format!("{}^{}", ring.names()[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Exact sparse polynomial. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: VarRing,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &VarRing) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &VarRing, c: Rational) -> Self {
        let mut p = Polynomial::zero(ring);
        if c != Rational::ZERO {
            p.terms.insert(Monomial::one(ring.len()), c);
        }
        p
    }

    pub fn one(ring: &VarRing) -> Self {
        Polynomial::constant(ring, Rational::ONE)
    }

    pub fn var(ring: &VarRing, i: usize) -> Self {
        Polynomial::monomial(ring, Monomial::var(ring.len(), i), Rational::ONE)
    }

    pub fn var_named(ring: &VarRing, name: &str) -> Result<Self> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| Error::InvalidProblem(format!("unknown variable `{name}`")))?;
        Ok(Polynomial::var(ring, i))
    }

    pub fn monomial(ring: &VarRing, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.len(), ring.len(), "monomial does not belong to ring");
        let mut p = Polynomial::zero(ring);
        if c != Rational::ZERO {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms<I>(ring: &VarRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.len(), ring.len(), "monomial does not belong to ring");
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c == Rational::ZERO {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == Rational::ZERO {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &VarRing {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.ring.len()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Terms sorted in descending `order`.
    pub fn terms_sorted(&self, order: MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| order.cmp_exps(&b.0 .0, &a.0 .0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_exps(&a.0 .0, &b.0 .0))
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in other.terms.iter() {
                let m = m1.mul(m2);
                let c = c1 * c2;
                *acc.entry(m).or_insert(Rational::ZERO) += c;
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: acc
                .into_iter()
                .filter(|(_, c)| *c != Rational::ZERO)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if *c == Rational::ZERO {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if *c == Rational::ZERO {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Rewrites `self` into `target`: variables listed in `assignment` are
    /// replaced by the given polynomials, the others are matched by name.
    pub fn substitute(
        &self,
        target: &VarRing,
        assignment: &HashMap<String, Polynomial>,
    ) -> Result<Polynomial> {
        let mut images = Vec::with_capacity(self.ring.len());
        for name in self.ring.names() {
            let img = match assignment.get(name) {
                Some(p) => {
                    target.check_same(&p.ring)?;
                    p.clone()
                }
                None => Polynomial::var_named(target, name).map_err(|_| {
                    Error::RingMismatch(format!(
                        "variable `{name}` is neither assigned nor present in {target:?}"
                    ))
                })?,
            };
            images.push(img);
        }
        Ok(self.compose(target, &images))
    }

    /// Evaluates `self` at polynomials `images[i]` living in `target`.
    pub fn compose(&self, target: &VarRing, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.len());
        let mut powers: HashMap<(usize, u16), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in self.terms.iter() {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e as u32));
                t = &t * pw;
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        out
    }

    /// Re-indexes variables: variable `i` of `self` becomes variable
    /// `mapping[i]` of `target`.
    pub fn map_vars(&self, target: &VarRing, mapping: &[usize]) -> Polynomial {
        assert_eq!(mapping.len(), self.ring.len());
        let n = target.len();
        Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = Monomial::one(n);
                    for (i, &k) in m.0.iter().enumerate() {
                        e.0[mapping[i]] += k;
                    }
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in self.terms.iter() {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            out.add_term(m2, c * Rational::from(e as u32));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.len());
        let mut sum = Rational::ZERO;
        for (m, c) in self.terms.iter() {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= (&point[i]).pow(e as u64);
                }
            }
            sum += t;
        }
        sum
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.ring.len());
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = rational_to_f64(c);
                for (i, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        t *= point[i].powi(e as i32);
                    }
                }
                t
            })
            .sum()
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    f64::rounding_from(r, RoundingMode::Nearest).0
}

pub fn rational_sign(r: &Rational) -> i32 {
    match r.sign() {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $checked:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on ring mismatch; use the `checked_*` methods to get an error.
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$checked(&rhs).expect("ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_sorted(MonomialOrder::DegRevLex) {
            let neg = rational_sign(&c) < 0;
            let abs = if neg { -&c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == Rational::ONE {
                write!(f, "{}", m.format(&self.ring))?;
            } else {
                write!(f, "{abs}*{}", m.format(&self.ring))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
