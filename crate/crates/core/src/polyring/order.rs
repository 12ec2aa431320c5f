use std::cmp::Ordering;

/// Term order used for leading terms, normal forms and staircases.
///
/// `Block(k)` splits the variables into the first `k` and the rest; blocks are
/// compared lexicographically and each block by degree-reverse-lexicographic
/// order, which makes it an elimination order for the first `k` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    Block(usize),
}

impl MonomialOrder {
    /// Compares two exponent vectors of equal length.
    #[inline]
    pub fn cmp_exps(&self, a: &[u16], b: &[u16]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match *self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                degrevlex(&a[..k], &b[..k]).then_with(|| degrevlex(&a[k..], &b[k..]))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::DegRevLex => "degrevlex".to_string(),
            MonomialOrder::Lex => "lex".to_string(),
            MonomialOrder::Block(k) => format!("block({k})"),
        }
    }
}

#[inline]
fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

#[inline]
fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable wins
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}
