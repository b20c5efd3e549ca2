use std::cmp::Ordering;

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// A monomial order. All variants are total orders compatible with multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, variables in declaration order.
    #[default]
    GrevLex,
    Lex,
    /// Graded reverse lex on the first block, ties broken by graded reverse
    /// lex on the remaining variables. Eliminates the first block.
    BlockElimination(usize),
    /// Weighted degree first, then graded reverse lex.
    WeightedGrevLex(Vec<u32>),
}

impl MonomialOrder {
    pub fn weighted(weights: Vec<u32>) -> Result<Self> {
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::invalid("monomial order weights must be strictly positive"));
        }
        Ok(MonomialOrder::WeightedGrevLex(weights))
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::BlockElimination(k) => {
                let k = (*k).min(a.nvars());
                let (a1, a2) = a.exponents().split_at(k);
                let (b1, b2) = b.exponents().split_at(k);
                grevlex(a1, b1).then_with(|| grevlex(a2, b2))
            }
            MonomialOrder::WeightedGrevLex(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| grevlex(a.exponents(), b.exponents())),
        }
    }

    /// True when the order refines total degree, so leading terms have maximal degree.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
            || matches!(self, MonomialOrder::WeightedGrevLex(w) if w.iter().all(|&x| x == w[0]))
    }

    pub fn check_arity(&self, nvars: usize) -> Result<()> {
        match self {
            MonomialOrder::BlockElimination(k) if *k == 0 || *k > nvars => Err(Error::invalid(
                format!("block size {k} out of range for {nvars} variables"),
            )),
            MonomialOrder::WeightedGrevLex(w) if w.len() != nvars => Err(Error::invalid(format!(
                "{} weights for {nvars} variables",
                w.len()
            ))),
            _ => Ok(()),
        }
    }
}

#[inline]
fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| Monomial::revlex_cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_vs_lex() {
        // x^2 vs y^3 and x y^2 vs y^3 in two variables
        assert_eq!(MonomialOrder::GrevLex.compare(&m(&[2, 0]), &m(&[0, 3])), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.compare(&m(&[2, 0]), &m(&[0, 3])), Ordering::Greater);
        // grevlex on x^2 z? vs x y^2: deg 3 ties, last variable z decides
        assert_eq!(
            MonomialOrder::GrevLex.compare(&m(&[2, 0, 1]), &m(&[1, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn block_eliminates_first_block() {
        let ord = MonomialOrder::BlockElimination(1);
        // t vs x^5: anything with t beats anything without
        assert_eq!(ord.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert!(ord.check_arity(3).is_ok());
        assert!(MonomialOrder::BlockElimination(4).check_arity(3).is_err());
        assert!(MonomialOrder::weighted(vec![1, 0]).is_err());
    }
}
