//! Order-sorted polynomial representation used inside the Gröbner engine.

use std::cmp::Ordering;

use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial, Ring};

pub(crate) type Term = (Monomial, Coeff);

/// Terms sorted in strictly descending order under the active monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SortedPoly {
    pub terms: Vec<Term>,
}

impl SortedPoly {
    pub fn from_poly(f: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<Term> = f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        SortedPoly { terms }
    }

    pub fn to_poly(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_sorted_map(ring, self.terms.iter().cloned().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Coeff {
        &self.terms[0].1
    }

    pub fn make_monic(&mut self) {
        if self.terms.is_empty() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().inverse().expect("nonzero leading coefficient");
        for t in &mut self.terms {
            t.1 = &t.1 * &inv;
        }
    }

    /// `self - c * u * g` where every term of `u * g` is compared with the order.
    pub fn sub_scaled(&self, c: &Coeff, u: &Monomial, g: &SortedPoly, order: &MonomialOrder) -> SortedPoly {
        let other = g.terms.iter().map(|(m, a)| (m.mul(u), -&(a * c)));
        SortedPoly { terms: merge_desc(self.terms.iter().cloned(), other, order) }
    }

    /// S-polynomial of two monic polynomials.
    pub fn s_poly(f: &SortedPoly, g: &SortedPoly, order: &MonomialOrder) -> SortedPoly {
        let lcm = f.lm().lcm(g.lm());
        let uf = f.lm().quotient_of(&lcm).unwrap();
        let ug = g.lm().quotient_of(&lcm).unwrap();
        let left = f.terms[1..].iter().map(|(m, a)| (m.mul(&uf), a.clone()));
        let right = g.terms[1..].iter().map(|(m, a)| (m.mul(&ug), -a));
        SortedPoly { terms: merge_desc(left, right, order) }
    }
}

/// Merges two descending term streams, adding coefficients of equal monomials.
pub(crate) fn merge_desc(
    a: impl Iterator<Item = Term>,
    b: impl Iterator<Item = Term>,
    order: &MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::new();
    let mut a = a.peekable();
    let mut b = b.peekable();
    loop {
        let next = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => a.next(),
            (None, Some(_)) => b.next(),
            (Some(x), Some(y)) => match order.compare(&x.0, &y.0) {
                Ordering::Greater => a.next(),
                Ordering::Less => b.next(),
                Ordering::Equal => {
                    let (m, c1) = a.next().unwrap();
                    let (_, c2) = b.next().unwrap();
                    let s = &c1 + &c2;
                    if s.is_zero() {
                        continue;
                    }
                    Some((m, s))
                }
            },
        };
        out.push(next.unwrap());
    }
    out
}

/// A reducer: monic polynomial with its cached leading monomial support mask.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub poly: SortedPoly,
    pub mask: u64,
}

impl Reducer {
    pub fn new(poly: SortedPoly) -> Self {
        let mask = poly.lm().support_mask();
        Reducer { poly, mask }
    }

    #[inline]
    pub fn lm(&self) -> &Monomial {
        self.poly.lm()
    }
}

#[inline]
pub(crate) fn find_divisor<'a>(
    m: &Monomial,
    reducers: impl Iterator<Item = &'a Reducer>,
) -> Option<&'a Reducer> {
    let mask = m.support_mask();
    reducers
        .into_iter()
        .find(|r| r.mask & !mask == 0 && r.lm().divides(m))
}

/// Reduces `f` by monic reducers. With `full`, every term is reduced;
/// otherwise only until the leading term is irreducible.
pub(crate) fn reduce<'a, F, I>(f: SortedPoly, reducers: F, order: &MonomialOrder, full: bool) -> SortedPoly
where
    F: Fn() -> I,
    I: Iterator<Item = &'a Reducer>,
{
    // work is kept ascending so the largest term pops from the back
    let mut work: Vec<Term> = f.terms;
    work.reverse();
    let mut rem: Vec<Term> = Vec::new();
    while let Some((m, c)) = work.pop() {
        match find_divisor(&m, reducers()) {
            Some(r) => {
                if r.poly.terms.len() == 1 {
                    continue;
                }
                let u = r.lm().quotient_of(&m).unwrap();
                let neg = -&c;
                let tail = r.poly.terms[1..].iter().rev().map(|(tm, tc)| (tm.mul(&u), tc * &neg));
                work = merge_asc(std::mem::take(&mut work).into_iter(), tail, order);
            }
            None => {
                rem.push((m, c));
                if !full {
                    rem.extend(work.drain(..).rev());
                    break;
                }
            }
        }
    }
    SortedPoly { terms: rem }
}

fn merge_asc(
    a: impl Iterator<Item = Term>,
    b: impl Iterator<Item = Term>,
    order: &MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::new();
    let mut a = a.peekable();
    let mut b = b.peekable();
    loop {
        let next = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => a.next(),
            (None, Some(_)) => b.next(),
            (Some(x), Some(y)) => match order.compare(&x.0, &y.0) {
                Ordering::Less => a.next(),
                Ordering::Greater => b.next(),
                Ordering::Equal => {
                    let (m, c1) = a.next().unwrap();
                    let (_, c2) = b.next().unwrap();
                    let s = &c1 + &c2;
                    if s.is_zero() {
                        continue;
                    }
                    Some((m, s))
                }
            },
        };
        out.push(next.unwrap());
    }
    out
}

/// Division with quotient tracking: returns (quotients, remainder) with
/// `f = Σ q_i g_i + r`. Divisors need not be monic.
pub(crate) fn divide_with_quotients(
    f: &SortedPoly,
    divisors: &[SortedPoly],
    order: &MonomialOrder,
) -> (Vec<Vec<Term>>, SortedPoly) {
    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
    let mut p = f.clone();
    let mut rem = Vec::new();
    while !p.is_zero() {
        let (m, c) = p.terms[0].clone();
        let hit = divisors
            .iter()
            .enumerate()
            .find(|(_, g)| !g.is_zero() && g.lm().divides(&m));
        match hit {
            Some((i, g)) => {
                let u = g.lm().quotient_of(&m).unwrap();
                let q = &c * &g.lc().inverse().unwrap();
                p = p.sub_scaled(&q, &u, g, order);
                quotients[i].push((u, q));
            }
            None => {
                rem.push((m, c));
                p.terms.remove(0);
            }
        }
    }
    (quotients, SortedPoly { terms: rem })
}
