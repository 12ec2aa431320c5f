use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

/// Divides `p` by `d = var + c` where `c` does not involve `var`.
///
/// Synthetic division in `var` with polynomial coefficients; any nonzero
/// remainder is an error.
pub fn exact_divide(p: &Polynomial, d: &Polynomial, var: usize) -> Result<Polynomial> {
    p.ring().check_same(d.ring())?;
    let ring = p.ring().clone();
    let n = ring.len();
    let lin = Monomial::var(n, var);
    // d = var - root
    let mut root = Polynomial::zero(&ring);
    for (m, c) in d.terms() {
        if m.0[var] == 0 {
            root.add_term(m.clone(), -c);
        } else if *m != lin || *c != super::Rational::from(1) {
            return Err(Error::Internal(format!(
                "divisor {d} is not monic linear in {}",
                ring.names()[var]
            )));
        }
    }
    if root.terms.len() == d.terms.len() {
        return Err(Error::Internal(format!(
            "divisor {d} does not involve {}",
            ring.names()[var]
        )));
    }
    if p.is_zero() {
        return Ok(Polynomial::zero(&ring));
    }

    // split p into coefficients of var^k
    let deg = p.degree_in(var) as usize;
    let mut coeffs = vec![Polynomial::zero(&ring); deg + 1];
    for (m, c) in p.terms() {
        let k = m.0[var] as usize;
        let mut m2 = m.clone();
        m2.0[var] = 0;
        coeffs[k].add_term(m2, c.clone());
    }

    if deg == 0 {
        return Err(Error::InexactDivision(format!(
            "{p} is not divisible by {d}"
        )));
    }
    let mut q = vec![Polynomial::zero(&ring); deg];
    q[deg - 1] = coeffs[deg].clone();
    for k in (1..deg).rev() {
        q[k - 1] = &coeffs[k] + &(&root * &q[k]);
    }
    let rem = &coeffs[0] + &(&root * &q[0]);
    if !rem.is_zero() {
        return Err(Error::InexactDivision(format!(
            "{p} is not divisible by {d}: remainder {rem}"
        )));
    }

    let mut out = Polynomial::zero(&ring);
    for (k, qk) in q.into_iter().enumerate() {
        for (m, c) in qk.terms {
            let mut m2 = m;
            m2.0[var] += k as u16;
            out.add_term(m2, c);
        }
    }
    Ok(out)
}

/// Divided difference of `h` in direction `j` (zero based), a polynomial in
/// the doubled ring:
///
/// `(h(x'_1..x'_{j-1}, x_j, .., x_n) - h(x'_1..x'_j, x_{j+1}, .., x_n)) / (x_j - x'_j)`
pub fn divided_difference(h: &Polynomial, j: usize) -> Result<Polynomial> {
    let ring = h.ring();
    let n = ring.len();
    if j >= n {
        return Err(Error::DimensionMismatch(format!(
            "direction {j} out of range for {n} variables"
        )));
    }
    let doubled = ring.doubled();
    let left: Vec<usize> = (0..n).map(|k| if k < j { n + k } else { k }).collect();
    let right: Vec<usize> = (0..n).map(|k| if k <= j { n + k } else { k }).collect();
    let num = &h.map_vars(&doubled, &left) - &h.map_vars(&doubled, &right);
    let den = &Polynomial::var(&doubled, j) - &Polynomial::var(&doubled, n + j);
    exact_divide(&num, &den, j).map_err(|e| match e {
        Error::InexactDivision(msg) => Error::Internal(format!("divided difference: {msg}")),
        other => other,
    })
}
