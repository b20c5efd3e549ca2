//! Lengths of quotients `R/Q` and subquotients `A/B` over the polynomial
//! ring localized at the origin.
//!
//! Every quotient measured here contains a power of the maximal ideal, so
//! global counts of standard monomials equal local lengths.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::hilbert::{staircase_size, HilbertNumerator};
use crate::limits::Limits;
use crate::ring::{same_ring, Monomial, MonomialOrder, Ring};

/// The ideal 𝔪 of all variables.
#[derive(Clone, Debug)]
pub struct MaximalIdeal {
    ideal: Ideal,
}

impl MaximalIdeal {
    pub fn new(ring: &Ring) -> Self {
        MaximalIdeal { ideal: Ideal::maximal(ring) }
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// `𝔪^k`, generated by all monomials of degree `k`.
    pub fn power(&self, k: u32) -> Ideal {
        Ideal::maximal_power(self.ideal.ring(), k)
    }

    /// Whether `𝔪^k ⊆ q`.
    pub fn power_contained_in(&self, k: u32, q: &Ideal) -> Result<bool> {
        let ring = q.ring();
        let one = ring.field().one();
        for m in Monomial::all_of_degree(ring.nvars(), k) {
            if !q.contains(&crate::ring::Polynomial::monomial(ring, m, one.clone()))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One sample `index ↦ value` of an integer-valued function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LengthSample {
    pub index: u32,
    pub value: u64,
}

/// Consecutive samples of an integer-valued function.
pub type FunctionTable = Vec<LengthSample>;

/// Hilbert function `k ↦ dim_K (R/Q)_k` of a homogeneous ideal for
/// `k = 0..=upto`.
pub fn hilbert_function(q: &Ideal, upto: u32) -> Result<Vec<u64>> {
    if !q.is_homogeneous() {
        return Err(Error::invalid("Hilbert function requires a homogeneous ideal"));
    }
    let gb = q.graded_basis(upto)?;
    Ok(numerator_through(&gb, upto).values(upto))
}

fn numerator_through(gb: &GroebnerBasis, upto: u32) -> HilbertNumerator {
    let lms: Vec<Monomial> = gb
        .leading_monomials()
        .into_iter()
        .filter(|m| gb.is_complete() || m.degree() <= upto)
        .collect();
    HilbertNumerator::of_monomial_ideal(&lms, gb.ring().nvars())
}

/// Graded Hilbert data valid through `valid` (all degrees when complete).
struct Graded {
    hn: HilbertNumerator,
    valid: Option<u32>,
}

fn graded(q: &Ideal, degree: u32) -> Result<Graded> {
    let gb = q.graded_basis(degree)?;
    let valid = if gb.is_complete() { None } else { Some(degree) };
    Ok(Graded { hn: numerator_through(&gb, degree), valid })
}

fn degree_schedule(start: u32, cap: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = start.clamp(1, cap.max(1));
    loop {
        out.push(d);
        if d >= cap {
            return out;
        }
        d = (d * 2).min(cap);
    }
}

/// `λ(R/Q)` for an ideal containing a power of 𝔪.
pub fn colength(q: &Ideal) -> Result<u64> {
    let cap = Limits::current().length_cap;
    let ring = q.ring();
    if q.is_unit()? {
        return Ok(0);
    }
    if q.is_homogeneous() {
        let start = q.max_generator_degree().max(2);
        for d in degree_schedule(start, cap) {
            let g = graded(q, d)?;
            let top = g.valid.unwrap_or(cap);
            let hs = g.hn.values(top);
            if let Some(n) = hs.iter().position(|&v| v == 0) {
                return Ok(hs[..n].iter().sum());
            }
            if g.valid.is_none() {
                break;
            }
        }
        return Err(Error::NotMPrimary { cap });
    }
    let gb = q.groebner(&MonomialOrder::GrevLex)?;
    let lms = gb.leading_monomials();
    let count = staircase_size(&lms, ring.nvars()).ok_or(Error::NotMPrimary { cap })?;
    // the standard monomials count every point of V(Q); 𝔪^N ⊆ Q pins them to the origin
    let n = (count as u32).clamp(1, cap);
    if !MaximalIdeal::new(ring).power_contained_in(n, q)? {
        return Err(Error::NotMPrimary { cap });
    }
    Ok(count)
}

/// `λ(A/B)` for `B ⊆ A` with `A/B` of finite length.
pub fn subquotient_length(a: &Ideal, b: &Ideal) -> Result<u64> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    if !b.is_subset_of(a)? {
        return Err(Error::NotContained("the second ideal is not contained in the first".into()));
    }
    if a.is_homogeneous() && b.is_homogeneous() {
        homogeneous_subquotient(a, b)
    } else {
        truncated_subquotient(a, b)
    }
}

/// Graded route: with `B ⊆ A` and `A` generated in degrees `≤ N`,
/// `dim A_N = dim B_N` gives `A_k = B_k` for all `k ≥ N`, so
/// `λ(A/B) = Σ_{k<N} (h_B(k) − h_A(k))`.
fn homogeneous_subquotient(a: &Ideal, b: &Ideal) -> Result<u64> {
    let cap = Limits::current().length_cap;
    let floor = a.max_generator_degree();
    let start = floor.max(b.max_generator_degree()) + 1;
    for d in degree_schedule(start, cap) {
        let ga = graded(a, d)?;
        let gb = graded(b, d)?;
        let top = match (ga.valid, gb.valid) {
            (None, None) => cap,
            _ => d,
        };
        let ha = ga.hn.values(top);
        let hb = gb.hn.values(top);
        for n in floor..top {
            let n = n as usize;
            if ha[n] == hb[n] {
                if ha[n + 1] != hb[n + 1] {
                    return Err(Error::invalid("graded length certificate is inconsistent at N+1"));
                }
                return Ok((0..n).map(|k| hb[k] - ha[k]).sum());
            }
        }
        if top == cap {
            break;
        }
    }
    Err(Error::PossiblyInfiniteLength { cap, context: None })
}

/// General route: find `N` with `A ∩ 𝔪^N ⊆ B`, then
/// `λ(A/B) = λ(R/(B+𝔪^N)) − λ(R/(A+𝔪^N))`, rechecked at `N+1`.
fn truncated_subquotient(a: &Ideal, b: &Ideal) -> Result<u64> {
    let cap = Limits::current().length_cap;
    let ring = a.ring();
    let m = MaximalIdeal::new(ring);
    let mut tried = Vec::new();
    for n in [2u32, 4, 8, 16, 32, cap] {
        let n = n.min(cap);
        if tried.contains(&n) {
            continue;
        }
        tried.push(n);
        let cut = a.intersection(&m.power(n))?;
        if !cut.is_subset_of(b)? {
            continue;
        }
        let at = |n: u32| -> Result<u64> {
            let mn = m.power(n);
            Ok(colength(&b.sum(&mn)?)? - colength(&a.sum(&mn)?)?)
        };
        let v = at(n)?;
        if at(n + 1)? != v {
            return Err(Error::invalid("truncated length changed between N and N+1"));
        }
        return Ok(v);
    }
    Err(Error::PossiblyInfiniteLength { cap, context: None })
}

/// Samples `k ↦ λ(R/(A + 𝔪^k))`, the Hilbert–Samuel function of `R/A`
/// at the origin. Homogeneous ideals use one full basis and partial sums of
/// the Hilbert function.
pub fn samuel_function(a: &Ideal, k_range: RangeInclusive<u32>) -> Result<FunctionTable> {
    if a.is_homogeneous() {
        let gb = a.groebner(&MonomialOrder::GrevLex)?;
        let hn = HilbertNumerator::of_monomial_ideal(&gb.leading_monomials(), a.ring().nvars());
        let mut acc = 0u64;
        let mut next = 0u32;
        let mut out = Vec::new();
        for k in k_range {
            while next < k {
                acc += hn.value(next);
                next += 1;
            }
            out.push(LengthSample { index: k, value: acc });
        }
        return Ok(out);
    }
    let m = MaximalIdeal::new(a.ring());
    k_range
        .map(|k| Ok(LengthSample { index: k, value: colength(&a.sum(&m.power(k))?)? }))
        .collect()
}

/// Samples `k ↦ λ(A/(B + 𝔪^k A))` for `k` in `k_range`.
pub fn hs_samples(a: &Ideal, b: &Ideal, k_range: RangeInclusive<u32>) -> Result<FunctionTable> {
    if !b.is_subset_of(a)? {
        return Err(Error::NotContained("the second ideal is not contained in the first".into()));
    }
    let m = MaximalIdeal::new(a.ring());
    let mut out = Vec::new();
    for k in k_range {
        let lower = b.sum(&m.power(k).product(a)?)?;
        out.push(LengthSample { index: k, value: subquotient_length(a, &lower)? });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;
    use crate::session::parse_ideal;

    fn r2() -> Ring {
        RingDescriptor::rationals(&["x", "y"]).unwrap()
    }

    #[test]
    fn colength_examples() {
        let r = r2();
        assert_eq!(colength(&parse_ideal(&r, "x, y").unwrap()).unwrap(), 1);
        assert_eq!(colength(&parse_ideal(&r, "x, y").unwrap().power(2).unwrap()).unwrap(), 3);
        assert_eq!(colength(&parse_ideal(&r, "x^2, y^2").unwrap()).unwrap(), 4);
        assert!(matches!(colength(&parse_ideal(&r, "x").unwrap()), Err(Error::NotMPrimary { .. })));
    }

    #[test]
    fn colength_non_homogeneous() {
        let r = r2();
        // y = x^2 locally: R/(y - x^2, x^3) has basis 1, x, x^2
        assert_eq!(colength(&parse_ideal(&r, "y - x^2, x^3").unwrap()).unwrap(), 3);
        // the point (1, 0) lies outside the origin
        assert!(matches!(
            colength(&parse_ideal(&r, "x^2 - x, y").unwrap()),
            Err(Error::NotMPrimary { .. })
        ));
    }

    #[test]
    fn subquotient_examples() {
        let r = r2();
        let a = parse_ideal(&r, "x, y").unwrap();
        let b = parse_ideal(&r, "x, y^2").unwrap();
        assert_eq!(subquotient_length(&a, &b).unwrap(), 1);
        assert_eq!(subquotient_length(&a, &a).unwrap(), 0);
        for m in 1..=4 {
            let a = parse_ideal(&r, &format!("x^{m}")).unwrap();
            let b = parse_ideal(&r, &format!("x^{}, x^{m}*y", m + 1)).unwrap();
            assert_eq!(subquotient_length(&a, &b).unwrap(), 1);
        }
        assert!(matches!(subquotient_length(&b, &a), Err(Error::NotContained(_))));
        let a = parse_ideal(&r, "x").unwrap();
        let b = parse_ideal(&r, "x^2").unwrap();
        assert!(matches!(subquotient_length(&a, &b), Err(Error::PossiblyInfiniteLength { .. })));
    }

    #[test]
    fn subquotient_non_homogeneous() {
        let r = r2();
        let a = parse_ideal(&r, "x + y^2, y^3").unwrap();
        let b = parse_ideal(&r, "x + y^2, y^4").unwrap();
        assert_eq!(subquotient_length(&a, &b).unwrap(), 1);
    }

    #[test]
    fn hs_sample_examples() {
        let r = r2();
        // λ(R/𝔪^k) = k(k+1)/2
        let unit = Ideal::unit(&r);
        let s: Vec<u64> = hs_samples(&unit, &Ideal::zero(&r), 1..=4).unwrap().iter().map(|s| s.value).collect();
        assert_eq!(s, [1, 3, 6, 10]);
        // λ(𝔪/𝔪^{k+1}) = (k+1)(k+2)/2 − 1
        let a = parse_ideal(&r, "x, y").unwrap();
        let s: Vec<u64> = hs_samples(&a, &Ideal::zero(&r), 1..=4).unwrap().iter().map(|s| s.value).collect();
        assert_eq!(s, [2, 5, 9, 14]);
        let s: Vec<u64> = hs_samples(&a, &a, 1..=3).unwrap().iter().map(|s| s.value).collect();
        assert_eq!(s, [0, 0, 0]);
        let a = parse_ideal(&r, "x, y").unwrap().power(2).unwrap();
        let b = parse_ideal(&r, "x^2, y^2").unwrap();
        let s: Vec<u64> = hs_samples(&a, &b, 1..=4).unwrap().iter().map(|s| s.value).collect();
        assert_eq!(s, [1, 1, 1, 1]);
    }

    #[test]
    fn hilbert_function_of_quadrics() {
        let r = RingDescriptor::rationals(&["x", "y", "z"]).unwrap();
        let q = parse_ideal(&r, "x^2 - y*z, y^2 - x*z").unwrap();
        assert_eq!(hilbert_function(&q, 4).unwrap(), [1, 3, 4, 4, 4]);
    }
}
