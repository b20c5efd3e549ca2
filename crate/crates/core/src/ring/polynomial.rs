use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::coeff::Coeff;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::{Ring, RingDescriptor};
use crate::error::{Error, Result};

/// Total degree of a polynomial; the zero polynomial sits below every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A sparse polynomial with exact coefficients. Terms are keyed by exponent
/// vector, so the stored form does not depend on any monomial order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Coeff>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_i64(ring, 1)
    }

    pub fn variable(ring: &Ring, index: usize) -> Self {
        Self::monomial(ring, Monomial::variable(ring.nvars(), index, 1), ring.field().one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a polynomial from possibly repeated terms, combining like monomials.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match map.get_mut(&m) {
                Some(existing) => {
                    let s = &*existing + &c;
                    if s.is_zero() {
                        map.remove(&m);
                    } else {
                        *existing = s;
                    }
                }
                None => {
                    if !c.is_zero() {
                        map.insert(m, c);
                    }
                }
            }
        }
        Polynomial { ring: ring.clone(), terms: map }
    }

    pub(crate) fn from_sorted_map(ring: &Ring, terms: BTreeMap<Monomial, Coeff>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
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

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field().zero())
    }

    /// Value at the origin, i.e. the constant term.
    pub fn constant_term(&self) -> Coeff {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.degree())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Smallest total degree of a term (the order at the origin); `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Whether every term has the same weighted degree.
    pub fn is_weighted_homogeneous(&self, weights: &[u32]) -> bool {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, Coeff)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add_scaled(other, false),
            ArithOp::Sub => self.add_scaled(other, true),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Add)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.arith(other, ArithOp::Mul)
    }

    fn add_scaled(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            match terms.get_mut(m) {
                Some(existing) => {
                    let s = &*existing + &c;
                    if s.is_zero() {
                        terms.remove(m);
                    } else {
                        *existing = s;
                    }
                }
                None => {
                    terms.insert(m.clone(), c);
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(existing) => *existing = &*existing + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial { ring: self.ring.clone(), terms: acc }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    /// Exact division by a monomial; `None` unless every term is divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (k, a) in &self.terms {
            terms.insert(m.quotient_of(k)?, a.clone());
        }
        Some(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((_, c)) if !c.is_one() => self.scale(&c.inverse().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `index_map[i]` of the target ring. Fields must agree.
    pub fn embed(&self, target: &Ring, index_map: &[usize]) -> Polynomial {
        debug_assert_eq!(index_map.len(), self.ring.nvars());
        let n = target.nvars();
        Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u16; n];
                    for (i, &x) in m.exponents().iter().enumerate() {
                        e[index_map[i]] += x;
                    }
                    (Monomial::from_exponents(&e), c.clone())
                })
                .collect(),
        }
    }

    /// Inverse of `embed` for polynomials that avoid the dropped variables.
    /// `index_map[j]` is the source variable for target variable `j`.
    pub fn contract(&self, target: &Ring, index_map: &[usize]) -> Option<Polynomial> {
        let kept: std::collections::HashSet<usize> = index_map.iter().copied().collect();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &x)| x > 0 && !kept.contains(&i)) {
                return None;
            }
            let exps: Vec<u16> = index_map.iter().map(|&i| e[i]).collect();
            terms.insert(Monomial::from_exponents(&exps), c.clone());
        }
        Some(Polynomial { ring: target.clone(), terms })
    }

    /// Sets every variable in `vars` to zero.
    pub fn substitute_zero(&self, vars: &[usize]) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.retain(|m, _| vars.iter().all(|&i| m.exponents()[i] == 0));
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Whether any term involves one of `vars`.
    pub fn involves_any(&self, vars: &[usize]) -> bool {
        self.terms.keys().any(|m| vars.iter().any(|&i| m.exponents()[i] > 0))
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.ring
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| MonomialOrder::GrevLex.compare(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative_display();
            let abs = if negative { -c } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(&self.ring, m);
            match (abs.is_one(), mono.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn format_monomial(ring: &RingDescriptor, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.variables()[i].clone()),
            _ => parts.push(format!("{}^{}", ring.variables()[i], e)),
        }
    }
    parts.join("*")
}

macro_rules! poly_op {
    ($trait:ident, $method:ident, $op:expr) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on ring mismatch; use the `try_` methods for a `Result`.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.arith(rhs, $op).expect("ring mismatch")
            }
        }
    };
}

poly_op!(Add, add, ArithOp::Add);
poly_op!(Sub, sub, ArithOp::Sub);
poly_op!(Mul, mul, ArithOp::Mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}
