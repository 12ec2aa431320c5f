#![allow(dead_code)]

use topodeg::degree::ImmersionProblem;
use topodeg::polyring::{parse_polynomial, Monomial, MonomialOrder, Polynomial, Rational, VarRing};

pub fn ring(names: &[&str]) -> VarRing {
    VarRing::new(names).unwrap()
}

pub fn poly(r: &VarRing, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

pub fn polys(r: &VarRing, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| poly(r, s)).collect()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from(n) / Rational::from(d)
}

fn sphere(vars: &[&str], radius_sq: i64, g: &[&str]) -> ImmersionProblem {
    let r = ring(vars);
    let f = vars
        .iter()
        .map(|v| format!("{v}^2"))
        .collect::<Vec<_>>()
        .join(" + ");
    let f = poly(&r, &format!("{f} - {radius_sq}"));
    ImmersionProblem::new(&r, vec![f], polys(&r, g)).unwrap()
}

const S2: [&str; 3] = ["x1", "x2", "x3"];
const S3: [&str; 4] = ["x1", "x2", "x3", "x4"];
const S4: [&str; 5] = ["x1", "x2", "x3", "x4", "x5"];

/// `(x1, x2, x1 x3, x2 x3)` on the unit 2-sphere.
pub fn sphere2_unit() -> ImmersionProblem {
    sphere(&S2, 1, &["x1", "x2", "x1*x3", "x2*x3"])
}

/// The unit 3-sphere in `R^6`.
pub fn sphere3_unit() -> ImmersionProblem {
    sphere(&S3, 1, &["x1", "x2", "x1*x3", "x2*x3", "x4", "x3*x4"])
}

pub fn sphere2_r10_quadratic() -> ImmersionProblem {
    sphere(
        &S2,
        100,
        &[
            "2*x1*x2 + x2",
            "2*x1*x3 + 4*x3",
            "4*x3^2 + 5*x2",
            "5*x2^2 + 4*x3",
        ],
    )
}

pub fn sphere2_mixed(radius_sq: i64) -> ImmersionProblem {
    sphere(
        &S2,
        radius_sq,
        &[
            "5*x2*x3 + x3^2 + 3*x1",
            "4*x1^2 + 3*x3^2 + x3",
            "2*x2^2 + 3*x2*x3 + 2*x1",
            "x2*x3 + 4*x3^2 + 3*x2",
        ],
    )
}

pub fn sphere2_dense() -> ImmersionProblem {
    sphere(
        &S2,
        1,
        &[
            "3*x1*x2 + 2*x2^2 + 2*x1*x3 + 3*x1 + 5*x3",
            "2*x1*x2 + 5*x2^2 + 3*x2*x3 + x1 + 2*x2",
            "4*x1^2 + 4*x1*x3 + 5*x2*x3 + 3*x1 + 3*x3",
            "4*x2^2 + 3*x1*x3 + 4*x2*x3 + 4*x1 + 4*x3",
        ],
    )
}

pub fn sphere4(radius_sq: i64) -> ImmersionProblem {
    sphere(
        &S4,
        radius_sq,
        &[
            "x1*x2 + x2",
            "3*x3*x5 + 2*x1",
            "x1^2 + x2",
            "x3^2 + 3*x3",
            "3*x1*x5 + x1",
            "4*x2*x5 + x1",
            "2*x4^2 + x4",
            "x3^2 + x5",
        ],
    )
}

pub fn sphere3_mixed() -> ImmersionProblem {
    sphere(
        &S3,
        1,
        &[
            "x2*x4 + x4",
            "2*x1*x4 + x3",
            "3*x2*x4 + 4*x1",
            "3*x3*x4 + x3",
            "x1*x2 + x3",
            "2*x2*x3 + x1",
        ],
    )
}

pub const SPHERE3_MIXED_U: &str = "3*(x1 - y1) + 5*(x2 - y2) - 2*(x4 - y4)";

/// `(x1, x2, x3 l1, x3 l2)` on the sphere of radius `sqrt(radius_sq)`, with
/// `l_i` a linear form in `x1, x2` plus `c_i x3` plus a quadratic in
/// `x1, x2`. Points with equal `x1, x2` are the only candidates for double
/// points, and the map is an immersion away from the equator.
pub fn sphere2_family(radius_sq: i64, c: &[i64]) -> ImmersionProblem {
    let l = |k: usize| {
        format!(
            "({})*x1 + ({})*x2 + ({})*x3 + ({})*x1^2 + ({})*x1*x2 + ({})*x2^2",
            c[k],
            c[k + 1],
            c[k + 2],
            c[k + 3],
            c[k + 4],
            c[k + 5]
        )
    };
    let g3 = format!("x3*({})", l(0));
    let g4 = format!("x3*({})", l(6));
    sphere(&S2, radius_sq, &["x1", "x2", &g3, &g4])
}

/// `x_i^{d_i}` plus lower degree terms in `n` variables.
pub fn square_system(n: usize, degrees: &[u16], terms: &[Vec<(Vec<u16>, i64)>]) -> Vec<Polynomial> {
    let r = ring(&["x", "y", "z"][..n]);
    (0..n)
        .map(|i| {
            let lead = Polynomial::monomial(&r, Monomial::var(n, i), Rational::from(1))
                .pow(degrees[i] as u32);
            let rest = Polynomial::from_terms(
                &r,
                terms[i]
                    .iter()
                    .filter(|(e, _)| e.iter().sum::<u16>() < degrees[i])
                    .map(|(e, c)| (Monomial::from_exps(e), Rational::from(*c))),
            );
            &lead + &rest
        })
        .collect()
}

/// Plain multivariate division, used as an independent reducer.
pub fn naive_remainder(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let r = f.ring().clone();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(&r);
    while let Some((m, c)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = basis.iter().find_map(|g| {
            let (gm, gc) = g.leading_term(order)?;
            gm.divides(&m).then(|| (g, m.div(gm), &c / gc))
        });
        match divisor {
            Some((g, shift, k)) => p = &p - &g.mul_monomial(&shift, &k),
            None => {
                let lt = Polynomial::monomial(&r, m, c);
                rem = &rem + &lt;
                p = &p - &lt;
            }
        }
    }
    rem
}

/// Checks that every S-polynomial of `basis` leaves no remainder.
pub fn s_polynomials_reduce(basis: &[Polynomial], order: MonomialOrder) -> bool {
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            let (fm, fc) = f.leading_term(order).unwrap();
            let (gm, gc) = g.leading_term(order).unwrap();
            let l = fm.lcm(gm);
            let one = Rational::from(1);
            let s = &f.mul_monomial(&l.div(fm), &(&one / fc))
                - &g.mul_monomial(&l.div(gm), &(&one / gc));
            if !naive_remainder(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}
