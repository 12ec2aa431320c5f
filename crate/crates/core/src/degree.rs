//! End-to-end pipelines: sums of local degrees off `V(I)`, the half-space
//! variant, the mod 2 formula, and intersection numbers of immersions.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{build_algebra, QuotientAlgebra};
use crate::bezoutian::{bezoutian_tensor, trace_functional, Functional};
use crate::error::{Error, Result};
use crate::forms::{build_form, SymBilinearForm};
use crate::groebner::{Ideal, Staircase};
use crate::polyring::{Polynomial, Rational, VarRing};

/// A square map `H`, the generators of the excluded ideal `I` and an
/// optional half-space polynomial `u`.
#[derive(Clone, Debug)]
pub struct DegreeProblem {
    ring: VarRing,
    h: Vec<Polynomial>,
    excluded: Vec<Polynomial>,
    u: Option<Polynomial>,
}

impl DegreeProblem {
    pub fn new(
        ring: &VarRing,
        h: Vec<Polynomial>,
        excluded: Vec<Polynomial>,
        u: Option<Polynomial>,
    ) -> Result<Self> {
        if h.len() != ring.len() {
            return Err(Error::InvalidProblem(format!(
                "{} map components for {} variables",
                h.len(),
                ring.len()
            )));
        }
        for p in h.iter().chain(&excluded).chain(&u) {
            ring.check_same(p.ring())?;
        }
        Ok(DegreeProblem {
            ring: ring.clone(),
            h,
            excluded,
            u,
        })
    }

    pub fn ring(&self) -> &VarRing {
        &self.ring
    }

    pub fn map(&self) -> &[Polynomial] {
        &self.h
    }

    pub fn excluded(&self) -> &[Polynomial] {
        &self.excluded
    }

    pub fn u(&self) -> Option<&Polynomial> {
        self.u.as_ref()
    }

    pub fn with_u(&self, u: Option<Polynomial>) -> Result<Self> {
        DegreeProblem::new(&self.ring, self.h.clone(), self.excluded.clone(), u)
    }
}

/// `M = f^{-1}(0)` in `n + m` variables with a map `g` of `2m` components.
#[derive(Clone, Debug)]
pub struct ImmersionProblem {
    ring: VarRing,
    f: Vec<Polynomial>,
    g: Vec<Polynomial>,
}

impl ImmersionProblem {
    pub fn new(ring: &VarRing, f: Vec<Polynomial>, g: Vec<Polynomial>) -> Result<Self> {
        if f.len() >= ring.len() {
            return Err(Error::InvalidProblem(format!(
                "{} constraints leave no dimensions in {} variables",
                f.len(),
                ring.len()
            )));
        }
        let m = ring.len() - f.len();
        if g.len() != 2 * m {
            return Err(Error::InvalidProblem(format!(
                "need 2m = {} map components, got {}",
                2 * m,
                g.len()
            )));
        }
        for p in f.iter().chain(&g) {
            ring.check_same(p.ring())?;
        }
        Ok(ImmersionProblem {
            ring: ring.clone(),
            f,
            g,
        })
    }

    pub fn ring(&self) -> &VarRing {
        &self.ring
    }

    pub fn constraints(&self) -> &[Polynomial] {
        &self.f
    }

    pub fn map(&self) -> &[Polynomial] {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    pub fn m(&self) -> usize {
        self.ring.len() - self.f.len()
    }
}

/// Names of the second copy: a leading `x` becomes `y` when that stays
/// collision free, otherwise `_y` is appended.
fn copy_names(names: &[String]) -> Vec<String> {
    let swapped: Vec<String> = names
        .iter()
        .filter_map(|s| s.strip_prefix('x').map(|rest| format!("y{rest}")))
        .collect();
    if swapped.len() == names.len() && swapped.iter().all(|s| !names.contains(s)) {
        return swapped;
    }
    let mut suffix = String::from("_y");
    loop {
        let out: Vec<String> = names.iter().map(|s| format!("{s}{suffix}")).collect();
        if out.iter().all(|s| !names.contains(s)) {
            return out;
        }
        suffix.insert(0, '_');
    }
}

/// `H(x, y) = (f(x), f(y), g(x) - g(y))` with excluded ideal
/// `<f(x), f(y), x_k - y_k>`.
pub fn build_h(p: &ImmersionProblem) -> DegreeProblem {
    let n = p.ring.len();
    let mut names = p.ring.names().to_vec();
    names.extend(copy_names(p.ring.names()));
    let ring = VarRing::new(&names).expect("copy names are distinct");
    let xs: Vec<usize> = (0..n).collect();
    let ys: Vec<usize> = (n..2 * n).collect();
    let on_x = |q: &Polynomial| q.map_vars(&ring, &xs);
    let on_y = |q: &Polynomial| q.map_vars(&ring, &ys);

    let mut h: Vec<Polynomial> = p.f.iter().map(on_x).collect();
    h.extend(p.f.iter().map(on_y));
    h.extend(p.g.iter().map(|q| &on_x(q) - &on_y(q)));

    let mut excluded: Vec<Polynomial> = p.f.iter().map(on_x).collect();
    excluded.extend(p.f.iter().map(on_y));
    excluded.extend((0..n).map(|k| &Polynomial::var(&ring, k) - &Polynomial::var(&ring, n + k)));

    DegreeProblem::new(&ring, h, excluded, None).expect("square by construction")
}

/// Outcome of the two hypotheses of the degree formula; `None` when the
/// check was not reached.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AssumptionChecks {
    pub finite_dim: Option<bool>,
    pub comaximal: Option<bool>,
}

/// `S = J:I` and `A = Q[x]/S` once both hypotheses hold.
#[derive(Debug)]
pub struct Checked {
    pub quotient: Ideal,
    pub algebra: QuotientAlgebra,
}

/// Failure of [`check_assumptions`] together with the checks reached.
#[derive(Clone, Debug)]
pub struct CheckFailure {
    pub error: Error,
    pub checks: AssumptionChecks,
}

/// Computes `S = J:I`, tests `dim Q[x]/S < ∞` and `S + I = <1>`, and builds
/// `A`. An empty list of excluded generators stands for `I = <1>`.
pub fn check_assumptions(dp: &DegreeProblem) -> std::result::Result<Checked, CheckFailure> {
    let mut checks = AssumptionChecks::default();
    let fail = |error: Error, checks: AssumptionChecks| CheckFailure { error, checks };
    let j = Ideal::with_default_order(&dp.ring, dp.h.clone()).map_err(|e| fail(e, checks))?;
    let i = if dp.excluded.is_empty() {
        Ideal::unit(&dp.ring, j.order())
    } else {
        Ideal::with_default_order(&dp.ring, dp.excluded.clone()).map_err(|e| fail(e, checks))?
    };
    let s = j.quotient(&i).map_err(|e| fail(e, checks))?;
    let finite = matches!(s.standard_monomials(), Staircase::Finite(_));
    checks.finite_dim = Some(finite);
    if !finite {
        return Err(fail(Error::NotZeroDimensional, checks));
    }
    let comaximal = s.sum(&i).map_err(|e| fail(e, checks))?.is_unit_ideal();
    checks.comaximal = Some(comaximal);
    if !comaximal {
        return Err(fail(Error::NotComaximal, checks));
    }
    let algebra = build_algebra(&s).map_err(|e| fail(e, checks))?;
    Ok(Checked {
        quotient: s,
        algebra,
    })
}

/// Everything derived from `H` on `A`: the Bezoutian, `φ_T` and `Φ_T`.
#[derive(Debug)]
pub struct Analysis {
    pub quotient: Ideal,
    pub algebra: QuotientAlgebra,
    pub bezoutian: crate::algebra::TensorElement,
    pub trace: Functional,
    pub phi_t: SymBilinearForm,
}

pub fn analyze(dp: &DegreeProblem) -> Result<Analysis> {
    let checked = check_assumptions(dp).map_err(|f| f.error)?;
    analyze_checked(dp, checked)
}

/// [`analyze`] for a problem whose assumptions were already checked.
pub fn analyze_checked(dp: &DegreeProblem, checked: Checked) -> Result<Analysis> {
    let alg = checked.algebra;
    let t = bezoutian_tensor(&dp.h, &alg)?;
    let trace = trace_functional(&t, &alg)?;
    let phi_t = build_form(&alg, &trace, None)?;
    Ok(Analysis {
        quotient: checked.quotient,
        algebra: alg,
        bezoutian: t,
        trace,
        phi_t,
    })
}

/// Result of one of the degree formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Integer(i64),
    Mod2(u8),
}

/// Exact summary of one pipeline run.
#[derive(Clone, Debug)]
pub struct DegreeReport {
    pub dim_a: usize,
    pub signature_phi_t: i64,
    pub signature_psi_t: Option<i64>,
    pub det_sign_phi: Option<i32>,
    pub det_sign_psi: Option<i32>,
    pub result: Outcome,
    pub u_used: Option<Polynomial>,
    pub phi_used: Option<Functional>,
    pub checks: AssumptionChecks,
}

impl Analysis {
    fn report(&self, result: Outcome) -> DegreeReport {
        DegreeReport {
            dim_a: self.algebra.dim(),
            signature_phi_t: self.phi_t.signature(),
            signature_psi_t: None,
            det_sign_phi: None,
            det_sign_psi: None,
            result,
            u_used: None,
            phi_used: None,
            checks: AssumptionChecks {
                finite_dim: Some(true),
                comaximal: Some(true),
            },
        }
    }

    /// `Ψ_T(a, b) = φ_T(u a b)`.
    pub fn psi_t(&self, u: &Polynomial) -> Result<SymBilinearForm> {
        build_form(&self.algebra, &self.trace, Some(u))
    }

    /// `Σ deg = signature Φ_T`.
    pub fn degree_sum(&self) -> DegreeReport {
        self.report(Outcome::Integer(self.phi_t.signature()))
    }

    /// `Σ deg over {u > 0} = (signature Φ_T + signature Ψ_T) / 2`.
    pub fn degree_sum_halfspace(&self, u: &Polynomial) -> Result<DegreeReport> {
        let psi = self.psi_t(u)?;
        let det = psi.det_sign();
        if det == 0 {
            return Err(Error::DegenerateU);
        }
        let total = self.phi_t.signature() + psi.signature();
        if total % 2 != 0 {
            return Err(Error::NonIntegerResult(total));
        }
        let mut rep = self.report(Outcome::Integer(total / 2));
        rep.signature_psi_t = Some(psi.signature());
        rep.det_sign_psi = Some(det);
        rep.det_sign_phi = Some(self.phi_t.det_sign());
        rep.u_used = Some(u.clone());
        Ok(rep)
    }

    /// `dim A + 1 + (sgn det Φ + sgn det Ψ) / 2 (mod 2)` for `Φ(a,b) = φ(ab)`
    /// and `Ψ(a,b) = φ(uab)`.
    pub fn degree_mod2(&self, u: &Polynomial, phi: &Functional) -> Result<DegreeReport> {
        let form_phi = build_form(&self.algebra, phi, None)?;
        let form_psi = build_form(&self.algebra, phi, Some(u))?;
        let (dp, ds) = (form_phi.det_sign(), form_psi.det_sign());
        if ds == 0 || dp == 0 {
            return Err(Error::DegeneratePhiPsi);
        }
        let bit = (self.algebra.dim() as i64 + 1 + (dp + ds) as i64 / 2).rem_euclid(2) as u8;
        let mut rep = self.report(Outcome::Mod2(bit));
        rep.det_sign_phi = Some(dp);
        rep.det_sign_psi = Some(ds);
        rep.u_used = Some(u.clone());
        rep.phi_used = Some(phi.clone());
        Ok(rep)
    }
}

pub fn degree_sum(dp: &DegreeProblem) -> Result<i64> {
    Ok(analyze(dp)?.phi_t.signature())
}

pub fn degree_sum_halfspace(dp: &DegreeProblem) -> Result<i64> {
    let u =
        dp.u.as_ref()
            .ok_or_else(|| Error::InvalidProblem("half-space degree needs u".into()))?;
    match analyze(dp)?.degree_sum_halfspace(u)?.result {
        Outcome::Integer(k) => Ok(k),
        Outcome::Mod2(_) => unreachable!(),
    }
}

pub fn degree_mod2(dp: &DegreeProblem, phi: &Functional) -> Result<u8> {
    let u =
        dp.u.as_ref()
            .ok_or_else(|| Error::InvalidProblem("mod 2 degree needs u".into()))?;
    match analyze(dp)?.degree_mod2(u, phi)?.result {
        Outcome::Mod2(b) => Ok(b),
        Outcome::Integer(_) => unreachable!(),
    }
}

/// Knobs of the odd-dimensional search.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub seed: u64,
    pub retries: usize,
    pub u: Option<Polynomial>,
    pub phi: Option<Functional>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            seed: 0,
            retries: 64,
            u: None,
            phi: None,
        }
    }
}

/// Report of [`intersection_number`].
#[derive(Clone, Debug)]
pub struct ImmersionReport {
    pub n: usize,
    pub m: usize,
    pub degree: DegreeReport,
    pub attempts: usize,
}

impl ImmersionReport {
    pub fn intersection_number(&self) -> &Outcome {
        &self.degree.result
    }
}

/// A random `u = Σ a_k (x_k - y_k)` with `a_k ∈ {-5..5} \ {0}`.
pub fn random_u(dp: &DegreeProblem, rng: &mut impl Rng) -> Polynomial {
    let r = dp.ring();
    let half = r.len() / 2;
    let mut u = Polynomial::zero(r);
    for k in 0..half {
        let mut a: i64 = rng.gen_range(1..=5);
        if rng.gen_bool(0.5) {
            a = -a;
        }
        let diff = &Polynomial::var(r, k) - &Polynomial::var(r, half + k);
        u = &u + &diff.scale(&Rational::from(a));
    }
    u
}

/// A random functional with integer weights in `-9..=9`.
pub fn random_functional(d: usize, rng: &mut impl Rng) -> Functional {
    Functional::new(
        (0..d)
            .map(|_| Rational::from(rng.gen_range(-9i64..=9)))
            .collect(),
    )
}

/// `I(g)`: `signature Φ_T / 2` for even `m`; for odd `m > 1` the mod 2
/// formula with the first non-degenerate `(u, φ)` found.
pub fn intersection_number(p: &ImmersionProblem, opts: &SearchOptions) -> Result<ImmersionReport> {
    let dp = build_h(p);
    let analysis = analyze(&dp)?;
    intersection_number_from(p, &dp, &analysis, opts)
}

pub fn intersection_number_from(
    p: &ImmersionProblem,
    dp: &DegreeProblem,
    analysis: &Analysis,
    opts: &SearchOptions,
) -> Result<ImmersionReport> {
    let m = p.m();
    if m == 1 {
        return Err(Error::InvalidProblem(
            "m = 1 is not supported: the mod 2 formula needs odd m > 1".into(),
        ));
    }
    if m % 2 == 0 {
        let sig = analysis.phi_t.signature();
        if sig % 2 != 0 {
            return Err(Error::OddSignature(sig));
        }
        let degree = analysis.report(Outcome::Integer(sig / 2));
        return Ok(ImmersionReport {
            n: p.n(),
            m,
            degree,
            attempts: 0,
        });
    }
    let (rep, attempts) = search_mod2(dp, analysis, opts)?;
    Ok(ImmersionReport {
        n: p.n(),
        m,
        degree: rep,
        attempts,
    })
}

/// Draws `(u, φ)` until `det Ψ ≠ 0`; fixed parts of `opts` are kept.
pub fn search_mod2(
    dp: &DegreeProblem,
    analysis: &Analysis,
    opts: &SearchOptions,
) -> Result<(DegreeReport, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let d = analysis.algebra.dim();
    if let (Some(u), Some(phi)) = (&opts.u, &opts.phi) {
        return Ok((analysis.degree_mod2(u, phi)?, 1));
    }
    for attempt in 1..=opts.retries.max(1) {
        let u = opts.u.clone().unwrap_or_else(|| random_u(dp, &mut rng));
        let phi = opts
            .phi
            .clone()
            .unwrap_or_else(|| random_functional(d, &mut rng));
        match analysis.degree_mod2(&u, &phi) {
            Ok(rep) => return Ok((rep, attempt)),
            Err(Error::DegeneratePhiPsi) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityFailure {
        retries: opts.retries.max(1),
    })
}

/// Whether the rank condition for an immersion was certified over `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    CertifiedEverywhereComplex,
    Inconclusive,
}

/// Unit-ideal test for `<f, maximal minors of [Dg; Df]>`.
pub fn immersion_certificate(p: &ImmersionProblem) -> Result<Certificate> {
    let nv = p.ring.len();
    let rows: Vec<Vec<Polynomial>> =
        p.g.iter()
            .chain(&p.f)
            .map(|q| (0..nv).map(|k| q.partial_derivative(k)).collect())
            .collect();
    let mut gens = p.f.clone();
    for choice in subsets(rows.len(), nv) {
        let minor: Vec<Vec<Polynomial>> = choice.iter().map(|&r| rows[r].clone()).collect();
        let det = poly_determinant(&minor);
        if !det.is_zero() {
            gens.push(det);
        }
    }
    let ideal = Ideal::with_default_order(&p.ring, gens)?;
    Ok(if ideal.is_unit_ideal() {
        Certificate::CertifiedEverywhereComplex
    } else {
        Certificate::Inconclusive
    })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant of a square polynomial matrix by Laplace expansion with
/// memoisation over column subsets.
pub fn poly_determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(n > 0 && n <= 30);
    let ring = m[0][0].ring().clone();
    let mut layer: HashMap<u32, Polynomial> = HashMap::new();
    layer.insert(0, Polynomial::one(&ring));
    for row in m {
        let mut next: HashMap<u32, Polynomial> = HashMap::new();
        for (j, entry) in row.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let bit = 1u32 << j;
            for (&s, minor) in &layer {
                if s & bit != 0 {
                    continue;
                }
                let full = s | bit;
                let mut prod = entry * minor;
                if (full >> (j + 1)).count_ones() % 2 == 1 {
                    prod = prod.scale(&Rational::from(-1));
                }
                let acc = next.entry(full).or_insert_with(|| Polynomial::zero(&ring));
                *acc = &*acc + &prod;
            }
        }
        next.retain(|_, p| !p.is_zero());
        layer = next;
    }
    layer
        .remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| Polynomial::zero(&ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    fn polys(r: &VarRing, src: &[&str]) -> Vec<Polynomial> {
        src.iter()
            .map(|s| parse_polynomial(r, s).unwrap())
            .collect()
    }

    fn sphere(g: &[&str]) -> ImmersionProblem {
        let r = VarRing::new(&["x1", "x2", "x3"]).unwrap();
        let f = polys(&r, &["x1^2 + x2^2 + x3^2 - 1"]);
        let g = polys(&r, g);
        ImmersionProblem::new(&r, f, g).unwrap()
    }

    fn degree_problem(vars: &[&str], h: &[&str], i: &[&str], u: Option<&str>) -> DegreeProblem {
        let r = VarRing::new(vars).unwrap();
        let u = u.map(|s| parse_polynomial(&r, s).unwrap());
        DegreeProblem::new(&r, polys(&r, h), polys(&r, i), u).unwrap()
    }

    #[test]
    fn doubled_names() {
        assert_eq!(copy_names(&["x1".into(), "x2".into()]), vec!["y1", "y2"]);
        assert_eq!(copy_names(&["a".into(), "x".into()]), vec!["a_y", "x_y"]);
        assert_eq!(copy_names(&["x".into(), "y".into()]), vec!["x_y", "y_y"]);
        assert_eq!(
            copy_names(&["a".into(), "a_y".into()]),
            vec!["a__y", "a_y__y"]
        );
    }

    #[test]
    fn sphere_map_components() {
        let dp = build_h(&sphere(&["x1", "x2", "x1*x3", "x2*x3"]));
        assert_eq!(dp.ring().names(), &["x1", "x2", "x3", "y1", "y2", "y3"]);
        let expect = polys(
            dp.ring(),
            &[
                "x1^2 + x2^2 + x3^2 - 1",
                "y1^2 + y2^2 + y3^2 - 1",
                "x1 - y1",
                "x2 - y2",
                "x1*x3 - y1*y3",
                "x2*x3 - y2*y3",
            ],
        );
        assert_eq!(dp.map(), &expect[..]);
        assert_eq!(dp.excluded().len(), 5);
    }

    #[test]
    fn constant_map_gives_zero_components() {
        let dp = build_h(&sphere(&["1", "2", "0", "-3"]));
        assert!(dp.map()[2..].iter().all(|p| p.is_zero()));
    }

    #[test]
    fn count_mismatch_rejected() {
        let r = VarRing::new(&["x1", "x2", "x3"]).unwrap();
        let f = polys(&r, &["x1^2 + x2^2 + x3^2 - 1"]);
        let err = ImmersionProblem::new(&r, f, polys(&r, &["x1", "x2", "x3"])).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidProblem("need 2m = 4 map components, got 3".into())
        );
    }

    #[test]
    fn sphere_immersion() {
        let p = sphere(&["x1", "x2", "x1*x3", "x2*x3"]);
        let dp = build_h(&p);
        let checked = check_assumptions(&dp).unwrap();
        assert_eq!(checked.algebra.dim(), 2);
        let rep = intersection_number(&p, &SearchOptions::default()).unwrap();
        assert_eq!(rep.degree.signature_phi_t, -2);
        assert_eq!(rep.intersection_number(), &Outcome::Integer(-1));
        assert_eq!(
            immersion_certificate(&p).unwrap(),
            Certificate::CertifiedEverywhereComplex
        );
    }

    #[test]
    fn non_immersions() {
        let p = sphere(&["x1", "x2", "0", "0"]);
        assert_eq!(
            immersion_certificate(&p).unwrap(),
            Certificate::Inconclusive
        );
        // the projection to the plane doubles every point off the equator
        let failure = check_assumptions(&build_h(&p)).unwrap_err();
        assert_eq!(failure.error, Error::NotZeroDimensional);
        assert_eq!(failure.checks.finite_dim, Some(false));
        // an embedding: J = I, so S = <1> and nothing is left to count
        let p = sphere(&["x1", "x2", "x3", "0"]);
        let a = analyze(&build_h(&p)).unwrap();
        assert_eq!(a.algebra.dim(), 0);
        let rep = intersection_number(&p, &SearchOptions::default()).unwrap();
        assert_eq!(rep.intersection_number(), &Outcome::Integer(0));
    }

    #[test]
    fn identity_map() {
        let dp = degree_problem(&["x1", "x2"], &["x1", "x2"], &[], None);
        let checked = check_assumptions(&dp).unwrap();
        assert_eq!(checked.algebra.dim(), 1);
        assert_eq!(degree_sum(&dp).unwrap(), 1);
        let dp = degree_problem(&["x1", "x2"], &["x1", "x2"], &["1"], Some("x1"));
        assert_eq!(degree_sum_halfspace(&dp).unwrap_err(), Error::DegenerateU);
        let dp = dp
            .with_u(Some(parse_polynomial(dp.ring(), "x1 + 1").unwrap()))
            .unwrap();
        let a = analyze(&dp).unwrap();
        assert_eq!(degree_mod2(&dp, &a.trace).unwrap(), 1);
        assert_eq!(
            degree_mod2(&dp, &Functional::zero(1)).unwrap_err(),
            Error::DegeneratePhiPsi
        );
    }

    #[test]
    fn cubic_in_one_variable() {
        let dp = degree_problem(&["x"], &["x^3 - x"], &[], None);
        assert_eq!(degree_sum(&dp).unwrap(), 1);
        let up = dp
            .with_u(Some(parse_polynomial(dp.ring(), "x - 1/2").unwrap()))
            .unwrap();
        assert_eq!(degree_sum_halfspace(&up).unwrap(), 1);
        let down = dp
            .with_u(Some(parse_polynomial(dp.ring(), "1/2 - x").unwrap()))
            .unwrap();
        assert_eq!(degree_sum_halfspace(&down).unwrap(), 0);
    }

    #[test]
    fn excluded_zero_removed() {
        // zeros -1, 0, 1; excluding x = 0 drops a degree -1 point
        let dp = degree_problem(&["x"], &["x^3 - x"], &["x"], None);
        assert_eq!(check_assumptions(&dp).unwrap().algebra.dim(), 2);
        assert_eq!(degree_sum(&dp).unwrap(), 2);
        let dp = degree_problem(&["x"], &["x^2*(x - 1)"], &["x - 1"], None);
        // S = <x^2> meets V(I) = {1} nowhere, the double root stays
        assert_eq!(degree_sum(&dp).unwrap(), 0);
    }

    #[test]
    fn not_comaximal_reported() {
        // S = <x^2> still meets V(I) at the origin
        let dp = degree_problem(&["x"], &["x^3"], &["x"], None);
        let failure = check_assumptions(&dp).unwrap_err();
        assert_eq!(failure.checks.finite_dim, Some(true));
        assert_eq!(failure.error, Error::NotComaximal);
    }

    #[test]
    fn m_equal_one_rejected() {
        let r = VarRing::new(&["x1", "x2"]).unwrap();
        let p = ImmersionProblem::new(
            &r,
            polys(&r, &["x1^2 + x2^2 - 1"]),
            polys(&r, &["x1", "x2"]),
        )
        .unwrap();
        assert!(matches!(
            intersection_number(&p, &SearchOptions::default()),
            Err(Error::InvalidProblem(_))
        ));
    }

    #[test]
    fn polynomial_determinants() {
        let r = VarRing::new(&["a", "b"]).unwrap();
        let m = vec![polys(&r, &["a", "b"]), polys(&r, &["1", "a"])];
        assert_eq!(
            poly_determinant(&m),
            parse_polynomial(&r, "a^2 - b").unwrap()
        );
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
