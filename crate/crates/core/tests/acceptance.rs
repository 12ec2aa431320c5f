//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use topodeg::algebra::QuotientAlgebra;
use topodeg::bezoutian::{bezoutian_tensor, trace_functional, Functional};
use topodeg::degree::{
    analyze, build_h, intersection_number_from, poly_determinant, random_u, search_mod2, Analysis,
    DegreeProblem, ImmersionProblem, Outcome, SearchOptions,
};
use topodeg::forms::{build_form, signature};
use topodeg::groebner::Ideal;
use topodeg::linalg::RatMatrix;
use topodeg::oracle::{numeric_degree_sum, OracleConfig};
use topodeg::polyring::{
    divided_difference, Monomial, MonomialOrder, Polynomial, Rational, VarRing,
};
use topodeg::Error;

type Verdict = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err(e: Error) -> String {
    format!("error: {e}")
}

struct Run {
    p: ImmersionProblem,
    dp: DegreeProblem,
    a: Analysis,
}

impl Run {
    fn new(p: ImmersionProblem) -> Result<Self, String> {
        let dp = build_h(&p);
        let a = analyze(&dp).map_err(err)?;
        Ok(Run { p, dp, a })
    }

    fn degree(&self, u: Option<&str>) -> Result<Outcome, String> {
        let opts = SearchOptions {
            u: u.map(|s| poly(self.dp.ring(), s)),
            ..SearchOptions::default()
        };
        let rep = intersection_number_from(&self.p, &self.dp, &self.a, &opts).map_err(err)?;
        Ok(rep.degree.result)
    }
}

#[derive(Default)]
struct Cache {
    three_sphere: Option<Run>,
    three_sphere_mixed: Option<Run>,
    /// Reduced bases of every quotient ideal computed by the example runs.
    bases: Vec<(String, Vec<Polynomial>, MonomialOrder)>,
}

impl Cache {
    fn keep_basis(&mut self, name: &str, run: &Run) {
        let q = &run.a.quotient;
        self.bases
            .push((name.to_string(), q.groebner_basis(), q.order()));
    }
}

fn shown(o: &Outcome) -> String {
    match o {
        Outcome::Integer(k) => k.to_string(),
        Outcome::Mod2(b) => format!("{b} (mod 2)"),
    }
}

fn within(start: Instant, budget: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure!(t <= budget, "took {t:.1?}, budget {budget:?}");
    Ok(t)
}

fn criterion1(cache: &mut Cache) -> Verdict {
    let start = Instant::now();
    let run = Run::new(sphere2_unit())?;
    let a = &run.a;
    let r = run.dp.ring();
    ensure!(a.algebra.dim() == 2, "dim A = {}", a.algebra.dim());
    let target = Ideal::with_default_order(
        r,
        polys(r, &["x1", "x2", "y1", "y2", "x3 + y3", "y3^2 - 1"]),
    )
    .map_err(err)?;
    ensure!(
        a.quotient.groebner_basis() == target.groebner_basis(),
        "quotient basis {:?}",
        a.quotient
            .groebner_basis()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
    );
    ensure!(
        a.algebra.basis_strings() == ["1", "y3"],
        "basis {:?}",
        a.algebra.basis_strings()
    );
    let y3 = a.algebra.project(&poly(r, "y3")).map_err(err)?;
    let one = a.algebra.one();
    let sum = a
        .algebra
        .tensor_add(
            &a.algebra.tensor_product(&y3, &y3).map_err(err)?,
            &a.algebra.tensor_product(&one, &one).map_err(err)?,
        )
        .map_err(err)?;
    let mut t_expected = sum.coords().clone();
    for i in 0..2 {
        for j in 0..2 {
            t_expected[(i, j)] = &t_expected[(i, j)] * Rational::from(-8);
        }
    }
    ensure!(
        a.bezoutian.coords() == &t_expected,
        "T = {:?}",
        a.bezoutian.coords()
    );
    ensure!(
        a.trace.weights() == [q(-1, 8), q(0, 1)],
        "phi_T weights {:?}",
        a.trace.weights()
    );
    let diag = RatMatrix::from_rows(vec![vec![q(-1, 8), q(0, 1)], vec![q(0, 1), q(-1, 8)]]);
    ensure!(a.phi_t.matrix() == &diag, "Phi_T = {:?}", a.phi_t.matrix());
    ensure!(
        a.phi_t.signature() == -2,
        "signature {}",
        a.phi_t.signature()
    );
    let i = run.degree(None)?;
    ensure!(i == Outcome::Integer(-1), "I = {}", shown(&i));
    let t = within(start, Duration::from_secs(5))?;
    cache.keep_basis("unit 2-sphere", &run);
    Ok(format!(
        "dim 2, T = -8 y3 y3' - 8, Phi_T = diag(-1/8, -1/8), signature -2, I = -1 ({t:.2?})"
    ))
}

fn criterion2(cache: &mut Cache) -> Verdict {
    let start = Instant::now();
    let run = Run::new(sphere3_unit())?;
    let a = &run.a;
    ensure!(a.algebra.dim() == 2, "dim A = {}", a.algebra.dim());
    ensure!(
        a.algebra.basis_strings() == ["1", "y3"],
        "basis {:?}",
        a.algebra.basis_strings()
    );
    let phi = Functional::new(vec![q(0, 1), q(1, 1)]);
    let u = poly(run.dp.ring(), "x3 - y3");
    let f = build_form(&a.algebra, &phi, None).map_err(err)?;
    let g = build_form(&a.algebra, &phi, Some(&u)).map_err(err)?;
    ensure!(
        f.matrix() == &RatMatrix::from_i64(&[&[0, 1], &[1, 0]]),
        "Phi = {:?}",
        f.matrix()
    );
    ensure!(
        g.matrix() == &RatMatrix::from_i64(&[&[-2, 0], &[0, -2]]),
        "Psi = {:?}",
        g.matrix()
    );
    let bit = a.degree_mod2(&u, &phi).map_err(err)?.result;
    ensure!(bit == Outcome::Mod2(1), "mod 2 result {}", shown(&bit));
    let t = within(start, Duration::from_secs(5))?;
    cache.keep_basis("unit 3-sphere", &run);
    cache.three_sphere = Some(run);
    Ok(format!(
        "dim 2, Phi = [[0,1],[1,0]], Psi = diag(-2,-2), result 1 mod 2 ({t:.2?})"
    ))
}

struct Case {
    name: &'static str,
    problem: fn() -> ImmersionProblem,
    u: Option<&'static str>,
    dim: usize,
    expected: Outcome,
}

fn immersion_cases(cache: &mut Cache, cases: &[Case], budget: Duration) -> Verdict {
    let mut parts = Vec::new();
    for c in cases {
        let start = Instant::now();
        let run = Run::new((c.problem)()).map_err(|e| format!("{}: {e}", c.name))?;
        ensure!(
            run.a.algebra.dim() == c.dim,
            "{}: dim A = {}, want {}",
            c.name,
            run.a.algebra.dim(),
            c.dim
        );
        let i = run.degree(c.u).map_err(|e| format!("{}: {e}", c.name))?;
        ensure!(
            i == c.expected,
            "{}: I = {}, want {}",
            c.name,
            shown(&i),
            shown(&c.expected)
        );
        let t = within(start, budget).map_err(|e| format!("{}: {e}", c.name))?;
        parts.push(format!(
            "{}: dim {}, I = {} ({t:.1?})",
            c.name,
            c.dim,
            shown(&i)
        ));
        cache.keep_basis(c.name, &run);
        if c.u.is_some() {
            cache.three_sphere_mixed = Some(run);
        }
    }
    Ok(parts.join("; "))
}

fn criterion3(cache: &mut Cache) -> Verdict {
    let cases = [Case {
        name: "r = 10 quadratic",
        problem: sphere2_r10_quadratic,
        u: None,
        dim: 16,
        expected: Outcome::Integer(0),
    }];
    immersion_cases(cache, &cases, Duration::from_secs(600))
}

fn criterion4(cache: &mut Cache) -> Verdict {
    let cases = [
        Case {
            name: "r = 1",
            problem: || sphere2_mixed(1),
            u: None,
            dim: 6,
            expected: Outcome::Integer(0),
        },
        Case {
            name: "r = 10",
            problem: || sphere2_mixed(100),
            u: None,
            dim: 6,
            expected: Outcome::Integer(1),
        },
    ];
    immersion_cases(cache, &cases, Duration::from_secs(600))
}

fn criterion5(cache: &mut Cache) -> Verdict {
    let cases = [Case {
        name: "dense r = 1",
        problem: sphere2_dense,
        u: None,
        dim: 20,
        expected: Outcome::Integer(1),
    }];
    immersion_cases(cache, &cases, Duration::from_secs(1800))
}

fn criterion6(cache: &mut Cache) -> Verdict {
    let cases = [
        Case {
            name: "S^4 r = 1",
            problem: || sphere4(1),
            u: None,
            dim: 10,
            expected: Outcome::Integer(0),
        },
        Case {
            name: "S^4 r = 10",
            problem: || sphere4(100),
            u: None,
            dim: 10,
            expected: Outcome::Integer(-1),
        },
    ];
    immersion_cases(cache, &cases, Duration::from_secs(1800))
}

fn criterion7(cache: &mut Cache) -> Verdict {
    let cases = [Case {
        name: "S^3 mixed",
        problem: sphere3_mixed,
        u: Some(SPHERE3_MIXED_U),
        dim: 18,
        expected: Outcome::Mod2(1),
    }];
    immersion_cases(cache, &cases, Duration::from_secs(1800))
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        max_global_rejects: 20_000,
        failure_persistence: None,
        ..Config::default()
    })
}

fn run_property<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Verdict {
    runner(cases)
        .run(&strategy, test)
        .map_err(|e| e.to_string())?;
    Ok(format!("{cases} cases"))
}

fn random_poly(n: usize) -> impl Strategy<Value = Polynomial> {
    let r = ring(&["a", "b", "c", "d"][..n]);
    prop::collection::vec((prop::collection::vec(0u16..5, n), -9i64..10), 0..6).prop_map(
        move |ts| {
            Polynomial::from_terms(
                &r,
                ts.into_iter()
                    .filter(|(e, _)| e.iter().sum::<u16>() <= 4)
                    .map(|(e, c)| (Monomial::from_exps(&e), Rational::from(c))),
            )
        },
    )
}

fn random_ideal(nvars: usize, ngens: std::ops::Range<usize>) -> impl Strategy<Value = Ideal> {
    let r = ring(&["x", "y", "z"][..nvars]);
    prop::collection::vec(
        prop::collection::vec((prop::collection::vec(0u16..3, nvars), -3i64..4), 1..4),
        ngens,
    )
    .prop_map(move |gs| {
        let gens = gs
            .into_iter()
            .map(|ts| {
                Polynomial::from_terms(
                    &r,
                    ts.into_iter()
                        .filter(|(e, _)| e.iter().sum::<u16>() <= 3)
                        .map(|(e, c)| (Monomial::from_exps(&e), Rational::from(c))),
                )
            })
            .collect();
        Ideal::with_default_order(&r, gens).unwrap()
    })
}

type SquareInput = (usize, Vec<u16>, Vec<Vec<(Vec<u16>, i64)>>);

fn random_square_system(max_vars: usize) -> impl Strategy<Value = SquareInput> {
    (1..=max_vars).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(1u16..4, n),
            prop::collection::vec(
                prop::collection::vec((prop::collection::vec(0u16..3, n), -3i64..4), 0..5),
                n,
            ),
        )
    })
}

fn square_problem((n, degrees, terms): &SquareInput) -> DegreeProblem {
    let h = square_system(*n, degrees, terms);
    let r: VarRing = h[0].ring().clone();
    DegreeProblem::new(&r, h, Vec::new(), None).unwrap()
}

fn telescoping() -> Verdict {
    run_property(200, (1usize..=4).prop_flat_map(random_poly), |h| {
        let n = h.ring().len();
        let d = h.ring().doubled();
        let mut lhs = Polynomial::zero(&d);
        for j in 0..n {
            let t = divided_difference(&h, j).unwrap();
            lhs = &lhs + &(&t * &(&Polynomial::var(&d, j) - &Polynomial::var(&d, n + j)));
        }
        let xs: Vec<usize> = (0..n).collect();
        let ys: Vec<usize> = (n..2 * n).collect();
        prop_assert_eq!(lhs, &h.map_vars(&d, &xs) - &h.map_vars(&d, &ys));
        Ok(())
    })
}

fn s_polynomials(cache: &Cache) -> Verdict {
    let random = run_property(200, random_ideal(3, 1..4), |i| {
        let gb = i.groebner();
        prop_assert!(s_polynomials_reduce(&gb.polynomials(), gb.order()));
        for g in i.generators() {
            prop_assert!(naive_remainder(g, &gb.polynomials(), gb.order()).is_zero());
        }
        Ok(())
    })?;
    for (name, basis, order) in &cache.bases {
        ensure!(
            s_polynomials_reduce(basis, *order),
            "quotient basis of {name} fails"
        );
    }
    Ok(format!(
        "{random} + {} example quotient bases",
        cache.bases.len()
    ))
}

fn quotient_laws() -> Verdict {
    let ideals = (
        random_ideal(2, 1..3),
        random_ideal(2, 1..3),
        random_ideal(2, 1..3),
    );
    run_property(200, ideals, |(i, j, k)| {
        let q = j.quotient(&i).unwrap();
        prop_assert!(j.is_subset_of(&q).unwrap());
        prop_assert!(q.product(&i).unwrap().is_subset_of(&j).unwrap());
        let nested = q.quotient(&k).unwrap();
        let joint = j.quotient(&i.product(&k).unwrap()).unwrap();
        prop_assert!(nested.same_ideal(&joint).unwrap());
        prop_assert!(i.sum(&j).unwrap().quotient(&i).unwrap().is_unit_ideal());
        Ok(())
    })
}

fn under_order(dp: &DegreeProblem, a: &Analysis, order: MonomialOrder) -> (usize, i64) {
    let alg = QuotientAlgebra::new(&a.quotient.with_order(order)).unwrap();
    let t = bezoutian_tensor(dp.map(), &alg).unwrap();
    let phi = trace_functional(&t, &alg).unwrap();
    (alg.dim(), build_form(&alg, &phi, None).unwrap().signature())
}

fn order_independence(cache: &Cache) -> Verdict {
    let random = run_property(40, random_square_system(3), |input| {
        let dp = square_problem(&input);
        let a = analyze(&dp);
        prop_assume!(a.is_ok());
        let a = a.unwrap();
        prop_assert_eq!(
            under_order(&dp, &a, MonomialOrder::Lex),
            (a.algebra.dim(), a.phi_t.signature())
        );
        Ok(())
    })?;
    let mut named = 0;
    for run in cache
        .three_sphere
        .iter()
        .chain(std::iter::once(&Run::new(sphere2_unit())?))
    {
        let lex = under_order(&run.dp, &run.a, MonomialOrder::Lex);
        ensure!(
            lex == (run.a.algebra.dim(), run.a.phi_t.signature()),
            "lex gives {lex:?} on an example"
        );
        named += 1;
    }
    Ok(format!("{random} + {named} examples, lex vs degrevlex"))
}

fn invertible(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-3i64..4, n * n)
        .prop_map(move |v| {
            RatMatrix::from_rows(
                v.chunks(n)
                    .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                    .collect(),
            )
        })
        .prop_filter("singular", |p| p.det_sign() != 0)
}

fn basis_change() -> Verdict {
    let strategy =
        (1usize..7).prop_flat_map(|n| (prop::collection::vec(-5i64..6, n * n), invertible(n)));
    run_property(200, strategy, |(v, p)| {
        let n = p.rows();
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                m[(i, j)] = Rational::from(v[i * n + j]);
                m[(j, i)] = Rational::from(v[i * n + j]);
            }
        }
        let moved = p.transpose().mul(&m).mul(&p);
        prop_assert_eq!(signature(&moved), signature(&m));
        Ok(())
    })
}

fn even_parity() -> Verdict {
    let strategy = (
        prop::sample::select(vec![1i64, 4, 9]),
        prop::collection::vec(-3i64..4, 12),
    );
    run_property(200, strategy, |(r2, c)| {
        let p = sphere2_family(r2, &c);
        let dp = build_h(&p);
        let a = analyze(&dp);
        prop_assume!(a.is_ok());
        let a = a.unwrap();
        prop_assert_eq!(
            a.phi_t.signature().rem_euclid(2),
            0,
            "signature {}",
            a.phi_t.signature()
        );
        Ok(())
    })
}

fn u_independence(name: &str, run: &Run) -> Result<String, String> {
    let mut bits = Vec::new();
    let mut seen: Vec<Polynomial> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for draw in 0..40u64 {
        if bits.len() >= 6 {
            break;
        }
        let u = random_u(&run.dp, &mut rng);
        if seen.contains(&u) {
            continue;
        }
        seen.push(u.clone());
        let opts = SearchOptions {
            seed: draw,
            u: Some(u),
            ..SearchOptions::default()
        };
        match search_mod2(&run.dp, &run.a, &opts) {
            Ok((rep, _)) => bits.push(rep.result),
            Err(Error::GenericityFailure { .. }) => continue,
            Err(e) => return Err(format!("{name}: {}", err(e))),
        }
    }
    ensure!(bits.len() >= 5, "{name}: only {} usable u", bits.len());
    ensure!(
        bits.iter().all(|b| *b == Outcome::Mod2(1)),
        "{name}: results {bits:?}"
    );
    Ok(format!("{name}: {} u draws all give 1", bits.len()))
}

fn odd_u_independence(cache: &mut Cache) -> Verdict {
    if cache.three_sphere.is_none() {
        cache.three_sphere = Some(Run::new(sphere3_unit())?);
    }
    if cache.three_sphere_mixed.is_none() {
        cache.three_sphere_mixed = Some(Run::new(sphere3_mixed())?);
    }
    let a = u_independence("unit 3-sphere", cache.three_sphere.as_ref().unwrap())?;
    let b = u_independence("S^3 mixed", cache.three_sphere_mixed.as_ref().unwrap())?;
    Ok(format!("{a}; {b}"))
}

fn criterion8(cache: &mut Cache) -> Verdict {
    let mut lines = Vec::new();
    let mut failed = Vec::new();
    let mut record = |name: &str, v: Verdict| match v {
        Ok(s) => lines.push(format!("{name}: {s}")),
        Err(e) => failed.push(format!("{name}: {e}")),
    };
    record("telescoping", telescoping());
    record("S-polynomials", s_polynomials(cache));
    record("quotient laws", quotient_laws());
    record("order independence", order_independence(cache));
    record("basis change", basis_change());
    record("even-m parity", even_parity());
    record("odd-m u-independence", odd_u_independence(cache));
    for l in &lines {
        println!("    {l}");
    }
    ensure!(failed.is_empty(), "{}", failed.join("; "));
    Ok(format!("{} properties", lines.len()))
}

// det DH is a unit of A exactly when every complex zero is simple
fn all_zeros_simple(dp: &DegreeProblem, a: &Analysis) -> bool {
    let h = dp.map();
    let jac: Vec<Vec<Polynomial>> = h
        .iter()
        .map(|p| (0..h.len()).map(|k| p.partial_derivative(k)).collect())
        .collect();
    let det = a.algebra.project(&poly_determinant(&jac)).unwrap();
    a.algebra.mult_matrix(&det).unwrap().det_sign() != 0
}

fn criterion9() -> Verdict {
    let cfg = OracleConfig::default();
    let strategy = random_square_system(3);
    let random = run_property(60, strategy, |input| {
        let dp = square_problem(&input);
        let a = analyze(&dp);
        prop_assume!(a.is_ok());
        let a = a.unwrap();
        prop_assume!(all_zeros_simple(&dp, &a));
        let rep = numeric_degree_sum(&dp, &cfg);
        prop_assert_eq!(rep.sum, a.phi_t.signature(), "{} zeros", rep.zeros.len());
        Ok(())
    })?;
    let dp = build_h(&sphere2_unit());
    let rep = numeric_degree_sum(&dp, &cfg);
    ensure!(
        rep.zeros.len() == 2,
        "unit 2-sphere: {} zeros",
        rep.zeros.len()
    );
    ensure!(
        rep.sum == -2 && rep.regular,
        "unit 2-sphere: sum {}",
        rep.sum
    );
    Ok(format!(
        "random systems agree ({random}); unit 2-sphere: 2 zeros, sum -2"
    ))
}

fn main() {
    let mut cache = Cache::default();
    let criteria: [(&str, &dyn Fn(&mut Cache) -> Verdict); 9] = [
        ("unit 2-sphere in R^4", &criterion1),
        ("unit 3-sphere in R^6", &criterion2),
        ("2-sphere, r = 10, quadratic map", &criterion3),
        ("2-sphere mixed map at r = 1 and r = 10", &criterion4),
        ("2-sphere dense map", &criterion5),
        ("4-sphere in R^8 at r = 1 and r = 10", &criterion6),
        ("3-sphere mixed map with fixed u", &criterion7),
        ("property suite", &criterion8),
        ("oracle equivalence", &|_| criterion9()),
    ];
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(|| check(&mut cache))).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let t = start.elapsed();
        match verdict {
            Ok(detail) => println!("criterion {}: PASS  {name} ({t:.1?}): {detail}", k + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL  {name} ({t:.1?}): {detail}", k + 1);
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
