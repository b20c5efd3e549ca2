//! Ideal arithmetic: sums, products, powers, intersections, colons,
//! saturation, elimination and radical membership.

use std::collections::BTreeMap;

use super::sparse::{divide_with_quotients, SortedPoly, Term};
use super::{GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::ring::{same_ring, Coeff, Monomial, MonomialOrder, Polynomial, RingDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineOp {
    Sum,
    Product,
}

/// Sum or product of two ideals. Products are interreduced.
pub fn ideal_combine(a: &Ideal, b: &Ideal, op: CombineOp) -> Result<Ideal> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let gens = match op {
        CombineOp::Sum => a.generators().iter().chain(b.generators()).cloned().collect(),
        CombineOp::Product => {
            let mut out = Vec::with_capacity(a.generators().len() * b.generators().len());
            for f in a.generators() {
                for g in b.generators() {
                    out.push(f * g);
                }
            }
            interreduce_generators(out)
        }
    };
    Ok(Ideal::from_generators(a.ring(), gens))
}

/// Makes a generating set smaller without changing the ideal: monic
/// generators, minimal monomial generators, non-monomial generators stripped
/// of terms lying in the monomial part and row-reduced against each other.
pub fn interreduce_generators(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let Some(ring) = gens.first().map(|g| g.ring().clone()) else {
        return gens;
    };
    let order = MonomialOrder::GrevLex;
    let mut monos: Vec<Monomial> = Vec::new();
    let mut others: Vec<SortedPoly> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if g.is_constant() {
            return vec![Polynomial::one(&ring)];
        }
        if g.is_monomial() {
            monos.push(g.terms().next().unwrap().0.clone());
        } else {
            others.push(SortedPoly::from_poly(g, &order));
        }
    }
    loop {
        monos = minimal_monomials(monos);
        let mut changed = false;
        let mut stripped = Vec::with_capacity(others.len());
        for mut p in others {
            let before = p.terms.len();
            p.terms.retain(|(m, _)| !monos.iter().any(|u| u.divides(m)));
            changed |= p.terms.len() != before;
            match p.terms.len() {
                0 => {}
                1 => {
                    monos.push(p.terms[0].0.clone());
                    changed = true;
                }
                _ => stripped.push(p),
            }
        }
        let (rows, new_monos) = row_reduce(stripped, &order);
        changed |= !new_monos.is_empty();
        monos.extend(new_monos);
        others = rows;
        if !changed {
            break;
        }
    }
    let one = ring.field().one();
    let mut out: Vec<Polynomial> = monos
        .into_iter()
        .map(|m| Polynomial::monomial(&ring, m, one.clone()))
        .collect();
    out.extend(others.iter().map(|p| p.to_poly(&ring)));
    out.sort_by(|a, b| {
        let la = a.leading_term(&order).unwrap().0;
        let lb = b.leading_term(&order).unwrap().0;
        order.compare(&la, &lb)
    });
    out
}

fn minimal_monomials(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(ms.len());
    for m in ms {
        if !out.iter().any(|u| u.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Reduced row echelon form, columns ordered by the monomial order.
/// Rows that collapse to a single term are returned separately.
fn row_reduce(rows: Vec<SortedPoly>, order: &MonomialOrder) -> (Vec<SortedPoly>, Vec<Monomial>) {
    let mut pivots: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut basis: Vec<SortedPoly> = Vec::new();
    for row in rows {
        let mut p = row;
        let mut k = 0;
        while k < p.terms.len() {
            let (m, c) = p.terms[k].clone();
            if let Some(&idx) = pivots.get(&m) {
                let g = &basis[idx];
                let neg = -&c;
                let other = g.terms.iter().map(|(gm, gc)| (gm.clone(), gc * &neg));
                p.terms = super::sparse::merge_desc(p.terms.into_iter(), other, order);
            } else {
                k += 1;
            }
        }
        if p.is_zero() {
            continue;
        }
        p.make_monic();
        let lm = p.lm().clone();
        for g in basis.iter_mut() {
            let c = coefficient_of(g, &lm);
            if let Some(c) = c {
                let neg = -&c;
                let other = p.terms.iter().map(|(pm, pc)| (pm.clone(), pc * &neg));
                g.terms = super::sparse::merge_desc(std::mem::take(&mut g.terms).into_iter(), other, order);
            }
        }
        pivots.insert(lm, basis.len());
        basis.push(p);
    }
    let mut rows = Vec::new();
    let mut monos = Vec::new();
    for p in basis {
        if p.terms.len() == 1 {
            monos.push(p.terms[0].0.clone());
        } else {
            rows.push(p);
        }
    }
    (rows, monos)
}

fn coefficient_of(p: &SortedPoly, m: &Monomial) -> Option<Coeff> {
    p.terms.iter().find(|(x, _)| x == m).map(|(_, c)| c.clone())
}

/// `f / g` when `g` divides `f` exactly.
pub fn exact_quotient(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if !same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let order = MonomialOrder::GrevLex;
    let (qs, r) = divide_with_quotients(&SortedPoly::from_poly(f, &order), &[SortedPoly::from_poly(g, &order)], &order);
    if !r.is_zero() {
        return Err(Error::invalid(format!("{g} does not divide {f}")));
    }
    let terms: Vec<Term> = qs.into_iter().next().unwrap();
    Ok(Polynomial::from_terms(f.ring(), terms))
}

impl Ideal {
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        ideal_combine(self, other, CombineOp::Sum)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        ideal_combine(self, other, CombineOp::Product)
    }

    /// `self^n`; `n = 0` gives the unit ideal. Cached per exponent.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Ok(Ideal::unit(self.ring()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        if let Some(p) = self.cached_power(n) {
            return Ok(p);
        }
        let mut k = (2..n).rev().find(|&k| self.cached_power(k).is_some()).unwrap_or(1);
        let mut acc = if k == 1 { self.clone() } else { self.cached_power(k).unwrap() };
        while k < n {
            acc = acc.product(self)?;
            k += 1;
            self.store_power(k, &acc);
        }
        Ok(acc)
    }

    /// `self ∩ other` by eliminating `t` from `t·self + (1−t)·other`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(self.ring(), other.ring()) {
            return Err(Error::RingMismatch);
        }
        let ring = self.ring();
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(ring));
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        let n = ring.nvars();
        let big = ring.with_leading_vars(&["t"]);
        let shift: Vec<usize> = (1..=n).collect();
        let t = Polynomial::variable(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::new();
        for a in self.generators() {
            gens.push(&t * &a.embed(&big, &shift));
        }
        for b in other.generators() {
            gens.push(&one_minus_t * &b.embed(&big, &shift));
        }
        let order = MonomialOrder::BlockElimination(1);
        let grading: Option<Vec<u32>> = if self.is_homogeneous() && other.is_homogeneous() {
            Some(std::iter::once(0).chain(std::iter::repeat(1).take(n)).collect())
        } else {
            None
        };
        let gb = GroebnerBasis::compute(&big, &gens, &order, grading.as_deref(), None)?;
        let kept: Vec<Polynomial> = gb
            .basis()
            .into_iter()
            .filter_map(|p| p.contract(ring, &shift))
            .collect();
        Ok(Ideal::with_known_basis(ring, kept, &MonomialOrder::GrevLex))
    }

    /// `self : (g)`, computed as `(self ∩ (g)) / g`.
    pub fn colon_poly(&self, g: &Polynomial) -> Result<Ideal> {
        if !same_ring(self.ring(), g.ring()) {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::invalid("colon by the zero ideal"));
        }
        if self.contains(g)? {
            return Ok(Ideal::unit(self.ring()));
        }
        let principal = Ideal::from_generators(self.ring(), vec![g.clone()]);
        let meet = self.intersection(&principal)?;
        let gens = meet
            .generators()
            .iter()
            .map(|h| exact_quotient(h, g))
            .collect::<Result<Vec<_>>>()?;
        // dividing a grevlex basis of A∩(g) by g gives a grevlex basis of A:(g)
        Ok(Ideal::with_known_basis(self.ring(), gens, &MonomialOrder::GrevLex))
    }

    /// `self : other`, the intersection of `self : (g)` over generators `g`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(self.ring(), other.ring()) {
            return Err(Error::RingMismatch);
        }
        if other.is_zero_ideal() {
            return Err(Error::invalid("colon by the zero ideal"));
        }
        let mut acc: Option<Ideal> = None;
        for g in other.generators() {
            let q = self.colon_poly(g)?;
            if q.generators().iter().any(|p| p.is_constant()) {
                continue;
            }
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(self.ring())))
    }

    /// `self : other^∞` with the number of strictly enlarging colon steps.
    pub fn saturation(&self, other: &Ideal) -> Result<(Ideal, u32)> {
        if other.is_zero_ideal() {
            return Err(Error::invalid("saturation by the zero ideal"));
        }
        let mut cur = self.clone();
        let mut steps = 0;
        loop {
            let next = cur.colon(other)?;
            if next.is_subset_of(&cur)? {
                return Ok((cur, steps));
            }
            cur = next;
            steps += 1;
        }
    }

    /// `self ∩ K[remaining variables]`, as an ideal of the subring on the
    /// variables not in `drop_vars` (in their original order).
    pub fn eliminate(&self, drop_vars: &[usize]) -> Result<Ideal> {
        let ring = self.ring();
        let n = ring.nvars();
        let mut drop: Vec<usize> = drop_vars.to_vec();
        drop.sort_unstable();
        drop.dedup();
        if drop.is_empty() || drop.len() >= n || drop.iter().any(|&i| i >= n) {
            return Err(Error::invalid("variables to eliminate must form a nonempty proper subset"));
        }
        let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        let names: Vec<String> = drop.iter().chain(&keep).map(|&i| ring.variables()[i].clone()).collect();
        let big = RingDescriptor::from_parts(names, ring.field());
        let mut pos = vec![0; n];
        for (k, &i) in drop.iter().chain(&keep).enumerate() {
            pos[i] = k;
        }
        let gens: Vec<Polynomial> = self.generators().iter().map(|g| g.embed(&big, &pos)).collect();
        let order = MonomialOrder::BlockElimination(drop.len());
        let gb = GroebnerBasis::compute(&big, &gens, &order, None, None)?;
        let sub = RingDescriptor::from_parts(keep.iter().map(|&i| ring.variables()[i].clone()).collect(), ring.field());
        let tail: Vec<usize> = (drop.len()..n).collect();
        let kept: Vec<Polynomial> = gb.basis().into_iter().filter_map(|p| p.contract(&sub, &tail)).collect();
        Ok(Ideal::with_known_basis(&sub, kept, &MonomialOrder::GrevLex))
    }

    /// Whether `f` lies in the radical of `self`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(self.ring(), f.ring()) {
            return Err(Error::RingMismatch);
        }
        if self.contains(f)? {
            return Ok(true);
        }
        if self.is_homogeneous() && self.is_m_primary()? {
            return Ok(f.constant_term().is_zero());
        }
        let mut power = f.clone();
        for _ in 2..=3 {
            power = &power * f;
            if self.contains(&power)? {
                return Ok(true);
            }
        }
        self.radical_contains_rabinowitsch(f)
    }

    /// Whether the ideal is primary to the ideal of all variables, i.e. its
    /// zero set is the origin alone. Decided from leading monomials.
    pub fn is_m_primary(&self) -> Result<bool> {
        if self.is_homogeneous() && self.is_unit()? {
            return Ok(false);
        }
        let gb = self.groebner(&MonomialOrder::GrevLex)?;
        if gb.is_unit() {
            return Ok(false);
        }
        let n = self.ring().nvars();
        let mut seen = vec![false; n];
        for m in gb.leading_monomials() {
            if let Some(i) = m.pure_power_variable() {
                seen[i] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Ok(false);
        }
        // finite colength; the zero set is the origin only if every variable is nilpotent
        if self.is_homogeneous() {
            return Ok(true);
        }
        let vars: Vec<Polynomial> = (0..n).map(|i| Polynomial::variable(self.ring(), i)).collect();
        for v in &vars {
            if !self.radical_contains_rabinowitsch(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn radical_contains_rabinowitsch(&self, f: &Polynomial) -> Result<bool> {
        let big = self.ring().with_leading_vars(&["y"]);
        let n = self.ring().nvars();
        let shift: Vec<usize> = (1..=n).collect();
        let y = Polynomial::variable(&big, 0);
        let mut gens: Vec<Polynomial> = self.generators().iter().map(|g| g.embed(&big, &shift)).collect();
        gens.push(&Polynomial::one(&big) - &(&y * &f.embed(&big, &shift)));
        let gb = GroebnerBasis::compute(&big, &gens, &MonomialOrder::GrevLex, None, None)?;
        Ok(gb.is_unit())
    }
}

/// `A^n`, cached on `A`.
pub fn ideal_power(a: &Ideal, n: u32) -> Result<Ideal> {
    a.power(n)
}
