use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;

/// Global monomial orders. All of them are multiplicative well-orders with
/// `1` as the smallest monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, `x_0 > x_1 > ...`.
    #[default]
    GrevLex,
    /// Lexicographic, `x_0 > x_1 > ...`.
    Lex,
    /// Block order eliminating the first `front` variables: grevlex on the
    /// front block, ties broken by grevlex on the rest.
    Elimination { front: usize },
    /// Compare `w`-weights first, ties broken by `tie`.
    Weighted {
        weights: Vec<u32>,
        tie: Box<MonomialOrder>,
    },
}


#[inline]
fn grevlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[inline]
fn grevlex_block(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| grevlex_tail(a, b))
}

impl MonomialOrder {
    pub fn weighted_grevlex(weights: Vec<u32>) -> Self {
        MonomialOrder::Weighted {
            weights,
            tie: Box::new(MonomialOrder::GrevLex),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| grevlex_tail(a.exponents(), b.exponents())),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Elimination { front } => {
                let (af, ar) = a.exponents().split_at(*front);
                let (bf, br) = b.exponents().split_at(*front);
                grevlex_block(af, bf).then_with(|| grevlex_block(ar, br))
            }
            MonomialOrder::Weighted { weights, tie } => a
                .weighted_degree(weights)
                .cmp(&b.weighted_degree(weights))
                .then_with(|| tie.cmp(a, b)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::GrevLex;
        // x^2 > xy > y^2
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // xz < y^2 in grevlex with x>y>z
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn lex_and_elimination() {
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])),
            Ordering::Greater
        );
        let e = MonomialOrder::Elimination { front: 1 };
        assert_eq!(e.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(e.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn weighted_refines() {
        let o = MonomialOrder::weighted_grevlex(vec![0, 0, 1, 3]);
        // y1^2 has weight 2, x^2 y2 weight 3
        assert_eq!(o.cmp(&m(&[0, 0, 2, 0]), &m(&[2, 0, 0, 1])), Ordering::Less);
    }
}
