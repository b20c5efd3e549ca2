//! Gröbner bases and the ideal-operation suite built on them.

mod buchberger;
mod ideal;
mod ops;
pub(crate) mod sparse;

use std::sync::Arc;

pub use ideal::Ideal;
pub use ops::{exact_quotient, ideal_combine, ideal_power, interreduce_generators, CombineOp};

use self::buchberger::{buchberger, Config};
use self::sparse::{divide_with_quotients, reduce, Reducer, SortedPoly};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::{same_ring, Monomial, MonomialOrder, Polynomial, Ring};

/// A reduced Gröbner basis: monic, minimal, tail-reduced and sorted by
/// ascending leading monomial.
///
/// A basis produced by a degree-bounded run on homogeneous input is only
/// guaranteed up to [`GroebnerBasis::degree_bound`]; `is_complete` tells the
/// two apart.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    reducers: Vec<Reducer>,
    complete: bool,
    degree_bound: Option<u64>,
}

impl GroebnerBasis {
    pub(crate) fn compute(
        ring: &Ring,
        gens: &[Polynomial],
        order: &MonomialOrder,
        grading: Option<&[u32]>,
        degree_bound: Option<u64>,
    ) -> Result<GroebnerBasis> {
        order.check_arity(ring.nvars())?;
        let inputs = gens.iter().map(|g| SortedPoly::from_poly(g, order)).collect();
        let cfg = Config { order, grading, degree_bound, limits: Limits::current() };
        let out = buchberger(inputs, &cfg)?;
        Ok(GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            reducers: out.basis.into_iter().map(Reducer::new).collect(),
            complete: out.complete,
            degree_bound: if out.complete { None } else { degree_bound },
        })
    }

    /// Wraps a generating set that is already known to be a Gröbner basis (e.g. the eliminated part of an elimination basis).
    pub(crate) fn from_known_basis(ring: &Ring, polys: &[Polynomial], order: &MonomialOrder) -> Self {
        let sorted = polys.iter().map(|g| SortedPoly::from_poly(g, order)).collect();
        GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            reducers: buchberger::reduce_known_basis(sorted, order).into_iter().map(Reducer::new).collect(),
            complete: true,
            degree_bound: None,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.reducers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reducers.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Degree up to which a truncated basis is valid; `None` when complete.
    pub fn degree_bound(&self) -> Option<u64> {
        self.degree_bound
    }

    pub fn basis(&self) -> Vec<Polynomial> {
        self.reducers.iter().map(|r| r.poly.to_poly(&self.ring)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.reducers.iter().map(|r| r.lm().clone()).collect()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.reducers.iter().any(|r| r.lm().is_one())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let p = SortedPoly::from_poly(f, &self.order);
        Ok(self.reduce_sorted(p, true).to_poly(&self.ring))
    }

    pub(crate) fn reduce_sorted(&self, p: SortedPoly, full: bool) -> SortedPoly {
        reduce(p, || self.reducers.iter(), &self.order, full)
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.reduce_sorted(SortedPoly::from_poly(f, &self.order), false).is_zero())
    }

    /// Multivariate division with quotients: `f = Σ q_i g_i + r`.
    pub fn divide(&self, f: &Polynomial) -> Result<(Vec<Polynomial>, Polynomial)> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let divisors: Vec<SortedPoly> = self.reducers.iter().map(|r| r.poly.clone()).collect();
        let (qs, r) = divide_with_quotients(&SortedPoly::from_poly(f, &self.order), &divisors, &self.order);
        let qs = qs
            .into_iter()
            .map(|terms| Polynomial::from_terms(&self.ring, terms))
            .collect();
        Ok((qs, r.to_poly(&self.ring)))
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.reducers.len() {
            for j in i + 1..self.reducers.len() {
                let s = SortedPoly::s_poly(&self.reducers[i].poly, &self.reducers[j].poly, &self.order);
                if !self.reduce_sorted(s, false).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of `ideal` under `order` (cached on the ideal).
pub fn groebner(ideal: &Ideal, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
    ideal.groebner(order)
}

/// Remainder of full multivariate division of `f` by `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}
