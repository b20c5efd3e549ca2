//! Exact sparse multivariate polynomials over ℚ or a prime field.

mod coeff;
mod monomial;
mod order;
mod polynomial;

use std::sync::Arc;

pub use coeff::{is_prime, Coeff, CoefficientField};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{ArithOp, Degree, Polynomial};

pub(crate) use polynomial::same_ring;

use crate::error::{Error, Result};

/// Shared handle to a ring description.
pub type Ring = Arc<RingDescriptor>;

/// `K[x_1, ..., x_d]`, always read as localized at the ideal of all variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    variables: Vec<String>,
    field: CoefficientField,
}

impl RingDescriptor {
    pub fn new<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        field: CoefficientField,
    ) -> Result<Ring> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name '{v}'")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable '{v}'")));
            }
        }
        if let CoefficientField::PrimeField(p) = field {
            if !is_prime(p) {
                return Err(Error::InvalidRing(format!("{p} is not prime")));
            }
        }
        Ok(Arc::new(RingDescriptor { variables, field }))
    }

    /// Convenience constructor for `ℚ[vars]`.
    pub fn rationals(vars: &[&str]) -> Result<Ring> {
        Self::new(vars.iter().copied(), CoefficientField::Rationals)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    /// Krull dimension of the ring localized at the origin.
    pub fn dim(&self) -> usize {
        self.variables.len()
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// A ring with `extra` fresh variables placed before the existing ones.
    /// Fresh names avoid collisions by appending underscores.
    pub(crate) fn with_leading_vars(&self, extra: &[&str]) -> Ring {
        let mut vars: Vec<String> = Vec::with_capacity(self.nvars() + extra.len());
        for base in extra {
            let mut name = base.to_string();
            while self.variables.contains(&name) || vars.contains(&name) {
                name.push('_');
            }
            vars.push(name);
        }
        vars.extend(self.variables.iter().cloned());
        Arc::new(RingDescriptor { variables: vars, field: self.field })
    }

    pub(crate) fn from_parts(variables: Vec<String>, field: CoefficientField) -> Ring {
        Arc::new(RingDescriptor { variables, field })
    }

    /// Header line in session syntax, e.g. `ring q[x,y]`.
    pub fn session_header(&self) -> String {
        let field = match self.field {
            CoefficientField::Rationals => "q".to_string(),
            CoefficientField::PrimeField(p) => format!("f<{p}>"),
        };
        format!("ring {}[{}]", field, self.variables.join(","))
    }
}

fn valid_name(v: &str) -> bool {
    let mut chars = v.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::cmp::Ordering;

    fn ring2() -> Ring {
        RingDescriptor::rationals(&["x", "y"]).unwrap()
    }

    fn poly(ring: &Ring, terms: &[(i64, &[u16])]) -> Polynomial {
        Polynomial::from_terms(
            ring,
            terms
                .iter()
                .map(|(c, e)| (Monomial::from_exponents(e), ring.field().from_i64(*c))),
        )
    }

    #[test]
    fn ring_validation() {
        assert!(RingDescriptor::rationals(&["x", "y1"]).is_ok());
        assert!(RingDescriptor::rationals(&["x", "x"]).is_err());
        assert!(RingDescriptor::rationals(&["1x"]).is_err());
        assert!(RingDescriptor::rationals(&[]).is_err());
        assert!(RingDescriptor::new(["x"], CoefficientField::PrimeField(9)).is_err());
    }

    #[test]
    fn difference_of_squares() {
        let r = ring2();
        let f = poly(&r, &[(1, &[1, 0]), (1, &[0, 1])]);
        let g = poly(&r, &[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(&f * &g, poly(&r, &[(1, &[2, 0]), (-1, &[0, 2])]));
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn square_in_characteristic_two() {
        let r = RingDescriptor::new(["x"], CoefficientField::PrimeField(2)).unwrap();
        let f = poly(&r, &[(1, &[1]), (1, &[0])]);
        assert_eq!(&f * &f, poly(&r, &[(1, &[2]), (1, &[0])]));
    }

    #[test]
    fn leading_terms() {
        let r = ring2();
        let f = poly(&r, &[(1, &[2, 0]), (1, &[1, 1]), (1, &[0, 3])]);
        assert_eq!(
            f.leading_term(&MonomialOrder::GrevLex).unwrap().0,
            Monomial::from_exponents(&[0, 3])
        );
        assert_eq!(
            f.leading_term(&MonomialOrder::Lex).unwrap().0,
            Monomial::from_exponents(&[2, 0])
        );
        let g = poly(&r, &[(5, &[1, 0])]);
        assert_eq!(
            g.leading_term(&MonomialOrder::GrevLex).unwrap(),
            (Monomial::from_exponents(&[1, 0]), r.field().from_i64(5))
        );
        assert_eq!(
            Polynomial::zero(&r).leading_term(&MonomialOrder::Lex),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn total_degrees() {
        let r = ring2();
        assert_eq!(poly(&r, &[(1, &[2, 1]), (1, &[0, 2])]).total_degree(), Degree::Finite(3));
        assert_eq!(Polynomial::zero(&r).total_degree(), Degree::NegInfinity);
        assert_eq!(Polynomial::from_i64(&r, 7).total_degree(), Degree::Finite(0));
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Polynomial::one(&ring2());
        let b = Polynomial::one(&RingDescriptor::rationals(&["x", "z"]).unwrap());
        assert_eq!(a.try_add(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn display_is_readable() {
        let r = ring2();
        let f = poly(&r, &[(3, &[2, 0]), (-1, &[0, 1]), (-2, &[0, 0])]);
        assert_eq!(f.to_string(), "3*x^2 - y - 2");
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(i64, [u16; 3])>> {
        prop::collection::vec((-3i64..=3, [0u16..3, 0u16..3, 0u16..3]), 0..5)
    }

    fn build(terms: &[(i64, [u16; 3])]) -> Polynomial {
        let r = RingDescriptor::rationals(&["x", "y", "z"]).unwrap();
        Polynomial::from_terms(
            &r,
            terms
                .iter()
                .map(|(c, e)| (Monomial::from_exponents(e), r.field().from_i64(*c))),
        )
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::BlockElimination(1),
            MonomialOrder::BlockElimination(2),
            MonomialOrder::WeightedGrevLex(vec![3, 1, 2]),
        ]
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let (f, g, h) = (build(&a), build(&b), build(&c));
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }

        #[test]
        fn leading_term_is_multiplicative(a in arb_poly(), b in arb_poly()) {
            let (f, g) = (build(&a), build(&b));
            prop_assume!(!f.is_zero() && !g.is_zero());
            for ord in orders() {
                let (mf, cf) = f.leading_term(&ord).unwrap();
                let (mg, cg) = g.leading_term(&ord).unwrap();
                let (m, c) = (&f * &g).leading_term(&ord).unwrap();
                prop_assert_eq!(m, mf.mul(&mg));
                prop_assert_eq!(c, &cf * &cg);
            }
        }

        #[test]
        fn order_axioms(a in [0u16..4, 0u16..4, 0u16..4], b in [0u16..4, 0u16..4, 0u16..4], c in [0u16..4, 0u16..4, 0u16..4]) {
            let (m1, m2, m3) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b), Monomial::from_exponents(&c));
            let one = Monomial::one(3);
            for ord in orders() {
                if ord.compare(&m1, &m2) == Ordering::Less {
                    prop_assert_eq!(ord.compare(&m1.mul(&m3), &m2.mul(&m3)), Ordering::Less);
                }
                prop_assert!(ord.compare(&one, &m1) != Ordering::Greater);
                prop_assert_eq!(ord.compare(&m1, &m2), ord.compare(&m2, &m1).reverse());
            }
        }
    }
}
