//! Filtrations at desk scale: products of powers of several pairs, explicit
//! finite filtrations, and normalized-limit estimates.
//!
//! Verdicts drawn from finitely many levels are observations, never proofs.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::asymptotics::{fit_eventual_polynomial, EventualPolynomial, FitDegree};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::length::{subquotient_length, FunctionTable, LengthSample};
use crate::limits::Limits;
use crate::reduction::{grade_cm, reduction_test, ReductionVerdict, DEFAULT_WINDOW};
use crate::ring::same_ring;

/// Pairs `J(l) ⊆ I(l)` with weights `n_l`; level `m` is
/// `∏ I(l)^{m·n_l}` over `∏ J(l)^{m·n_l}`.
#[derive(Clone, Debug)]
pub struct PowerFiltrationFamily {
    pairs: Vec<(Ideal, Ideal)>,
    weights: Vec<u32>,
}

impl PowerFiltrationFamily {
    pub fn new(pairs: Vec<(Ideal, Ideal)>, weights: Vec<u32>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::invalid("a family needs at least one pair"));
        }
        if pairs.len() != weights.len() {
            return Err(Error::invalid(format!("{} pairs but {} weights", pairs.len(), weights.len())));
        }
        if weights.contains(&0) {
            return Err(Error::invalid("weights must be positive"));
        }
        let ring = pairs[0].0.ring().clone();
        for (k, (i, j)) in pairs.iter().enumerate() {
            if !same_ring(i.ring(), &ring) || !same_ring(j.ring(), &ring) {
                return Err(Error::RingMismatch);
            }
            if !j.is_subset_of(i)? {
                return Err(Error::NotContained(format!("J({}) is not contained in I({})", k + 1, k + 1)));
            }
        }
        Ok(PowerFiltrationFamily { pairs, weights })
    }

    pub fn pairs(&self) -> &[(Ideal, Ideal)] {
        &self.pairs
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// The same pairs with every weight multiplied by `u`.
    pub fn scaled(&self, u: u32) -> Self {
        PowerFiltrationFamily { pairs: self.pairs.clone(), weights: self.weights.iter().map(|w| w * u).collect() }
    }

    /// `(∏ I(l)^{m·n_l}, ∏ J(l)^{m·n_l})`.
    pub fn level(&self, m: u32) -> Result<(Ideal, Ideal)> {
        let ring = self.pairs[0].0.ring();
        let mut top = Ideal::unit(ring);
        let mut bottom = Ideal::unit(ring);
        for ((i, j), &w) in self.pairs.iter().zip(&self.weights) {
            top = top.product(&i.power(m * w)?)?;
            bottom = bottom.product(&j.power(m * w)?)?;
        }
        Ok((top, bottom))
    }
}

fn lengths(levels: Vec<(u32, Ideal, Ideal)>) -> Result<FunctionTable> {
    let limits = Limits::current();
    levels
        .par_iter()
        .map(|(m, a, b)| {
            let value = limits.scoped(|| subquotient_length(a, b)).map_err(|e| match e {
                Error::PossiblyInfiniteLength { cap, .. } => {
                    Error::PossiblyInfiniteLength { cap, context: Some(format!("at m = {m}")) }
                }
                e => e,
            })?;
            Ok(LengthSample { index: *m, value })
        })
        .collect()
}

/// `m ↦ λ(∏ I(l)^{m·n_l} / ∏ J(l)^{m·n_l})`.
pub fn product_power_table(family: &PowerFiltrationFamily, m_range: RangeInclusive<u32>) -> Result<FunctionTable> {
    let mut levels = Vec::new();
    for m in m_range {
        let (a, b) = family.level(m)?;
        levels.push((m, a, b));
    }
    lengths(levels)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitVerdict {
    /// Fitted degree below `d`: `λ(m)/m^d → 0` is observed.
    Vanishes,
    /// Fitted degree equal to `d`.
    Grows,
}

impl fmt::Display for LimitVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LimitVerdict::Vanishes => "VANISHES",
            LimitVerdict::Grows => "GROWS",
        })
    }
}

#[derive(Clone, Debug)]
pub struct LimitEstimate {
    /// `(m, λ(m)/m^d)`.
    pub values: Vec<(u32, BigRational)>,
    pub fit: EventualPolynomial,
    pub d: u32,
    pub verdict: LimitVerdict,
}

/// Estimates `lim λ(m)/m^d` from a table of at least five samples.
pub fn normalized_limit_estimate(table: &[LengthSample], d: u32) -> Result<LimitEstimate> {
    if table.len() < 5 {
        return Err(Error::invalid(format!("need at least 5 samples, got {}", table.len())));
    }
    let fit = fit_eventual_polynomial(table, DEFAULT_WINDOW)?;
    let verdict = match fit.degree() {
        FitDegree::Zero => LimitVerdict::Vanishes,
        FitDegree::Finite(t) if t < d => LimitVerdict::Vanishes,
        FitDegree::Finite(t) if t == d => LimitVerdict::Grows,
        FitDegree::Finite(t) => {
            return Err(Error::invalid(format!("fitted degree {t} exceeds d = {d}")));
        }
    };
    let values = table
        .iter()
        .map(|s| {
            let den = BigInt::from(s.index.max(1)).pow(d);
            (s.index, BigRational::new(BigInt::from(s.value), den))
        })
        .collect();
    Ok(LimitEstimate { values, fit, d, verdict })
}

#[derive(Clone, Debug)]
pub struct MultiReduction {
    pub per_pair: Vec<ReductionVerdict>,
    /// `∏ J(l)^{n_l}` against `∏ I(l)^{n_l}`.
    pub product: ReductionVerdict,
    /// `grade(∏ J(l)) ≥ 1`, the hypothesis of the converse direction.
    pub grade_at_least_one: bool,
    /// No pair fails while the product succeeds.
    pub consistent: bool,
}

impl MultiReduction {
    pub fn all_pairs_reduce(&self) -> bool {
        self.per_pair.iter().all(|v| v.is_reduction)
    }
}

/// Per-pair and product reduction tests.
pub fn multi_reduction_test(family: &PowerFiltrationFamily, n_max: u32) -> Result<MultiReduction> {
    let per_pair = family
        .pairs
        .iter()
        .map(|(i, j)| reduction_test(i, j, n_max))
        .collect::<Result<Vec<_>>>()?;
    let (top, bottom) = family.level(1)?;
    let product = reduction_test(&top, &bottom, n_max)?;
    let ring = family.pairs[0].0.ring();
    let mut jprod = Ideal::unit(ring);
    for (_, j) in &family.pairs {
        jprod = jprod.product(j)?;
    }
    let grade_at_least_one = if jprod.generators().iter().all(|g| g.constant_term().is_zero()) {
        grade_cm(&jprod)? >= 1
    } else {
        true
    };
    let consistent = !(per_pair.iter().any(|v| !v.is_reduction) && product.is_reduction);
    Ok(MultiReduction { per_pair, product, grade_at_least_one, consistent })
}

/// Finitely many levels `I_1 ⊇ I_2 ⊇ … ⊇ I_M` of a filtration.
#[derive(Clone, Debug)]
pub struct ExplicitFiltration {
    levels: Vec<Ideal>,
}

impl ExplicitFiltration {
    /// Checks `I_m ⊇ I_{m+1}` and `I_m·I_n ⊆ I_{m+n}` wherever both exist.
    pub fn new(levels: Vec<Ideal>) -> Result<Self> {
        let Some(first) = levels.first() else {
            return Err(Error::invalid("a filtration needs at least one level"));
        };
        let ring = first.ring().clone();
        if levels.iter().any(|l| !same_ring(l.ring(), &ring)) {
            return Err(Error::RingMismatch);
        }
        for m in 1..levels.len() {
            if !levels[m].is_subset_of(&levels[m - 1])? {
                return Err(Error::invalid(format!("level {} is not contained in level {m}", m + 1)));
            }
        }
        let top = levels.len();
        for a in 1..=top {
            for b in a..=top - a {
                if !levels[a - 1].product(&levels[b - 1])?.is_subset_of(&levels[a + b - 1])? {
                    return Err(Error::invalid(format!(
                        "level {a} times level {b} is not contained in level {}",
                        a + b
                    )));
                }
            }
        }
        Ok(ExplicitFiltration { levels })
    }

    /// Level `m`, 1-based.
    pub fn level(&self, m: usize) -> Option<&Ideal> {
        m.checked_sub(1).and_then(|k| self.levels.get(k))
    }

    pub fn levels(&self) -> &[Ideal] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}

/// `m ↦ λ(FI_m / FJ_m)` over the common levels.
pub fn explicit_filtration_table(fi: &ExplicitFiltration, fj: &ExplicitFiltration) -> Result<FunctionTable> {
    if fi.len() != fj.len() {
        return Err(Error::invalid(format!("{} levels against {}", fi.len(), fj.len())));
    }
    let mut levels = Vec::new();
    for (m, (a, b)) in fi.levels.iter().zip(&fj.levels).enumerate() {
        if !b.is_subset_of(a)? {
            return Err(Error::NotContained(format!("level {} of the second filtration", m + 1)));
        }
        levels.push((m as u32 + 1, a.clone(), b.clone()));
    }
    lengths(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Monomial, Ring, RingDescriptor};
    use crate::session::parse_ideal;

    fn ring(vars: &[&str]) -> Ring {
        RingDescriptor::rationals(vars).unwrap()
    }

    fn values(t: &FunctionTable) -> Vec<u64> {
        t.iter().map(|s| s.value).collect()
    }

    fn counter(r: &Ring, top: u32) -> (ExplicitFiltration, ExplicitFiltration) {
        let fi = (1..=top).map(|m| parse_ideal(r, &format!("x^{m}")).unwrap()).collect();
        let fj = (1..=top).map(|m| parse_ideal(r, &format!("x^{}, x^{m}*y", m + 1)).unwrap()).collect();
        (ExplicitFiltration::new(fi).unwrap(), ExplicitFiltration::new(fj).unwrap())
    }

    #[test]
    fn product_tables() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "x^4, x*y^2, x^3*y").unwrap();
        let j = parse_ideal(&r, "x*y^2, x^4").unwrap();
        let fam = PowerFiltrationFamily::new(vec![(i.clone(), j.clone())], vec![1]).unwrap();
        let t = product_power_table(&fam, 1..=6).unwrap();
        assert_eq!(t, crate::reduction::rees_function(&i, &j, 1..=6).unwrap());
        assert_eq!(fit_eventual_polynomial(&t, 3).unwrap().degree(), FitDegree::Finite(1));

        let fam = PowerFiltrationFamily::new(vec![(i.clone(), i.clone()), (j.clone(), j.clone())], vec![1, 2]).unwrap();
        assert_eq!(values(&product_power_table(&fam, 1..=3).unwrap()), [0, 0, 0]);

        let m = parse_ideal(&r, "x, y").unwrap();
        let sq = parse_ideal(&r, "x^2, y^2").unwrap();
        let x = parse_ideal(&r, "x").unwrap();
        let fam = PowerFiltrationFamily::new(vec![(m, sq), (x.clone(), x)], vec![1, 1]).unwrap();
        assert_eq!(values(&product_power_table(&fam, 1..=5).unwrap()), [3, 9, 18, 30, 45]);

        assert!(PowerFiltrationFamily::new(vec![(j.clone(), i.clone())], vec![1]).is_err());
    }

    #[test]
    fn veronese_sampling() {
        let r = ring(&["x", "y"]);
        let m = parse_ideal(&r, "x, y").unwrap();
        let sq = parse_ideal(&r, "x^2, y^2").unwrap();
        let fam = PowerFiltrationFamily::new(vec![(m.clone(), sq.clone()), (m.clone(), m)], vec![1, 1]).unwrap();
        let fine = product_power_table(&fam, 1..=4).unwrap();
        let coarse = product_power_table(&fam.scaled(2), 1..=2).unwrap();
        assert_eq!(coarse[0].value, fine[1].value);
        assert_eq!(coarse[1].value, fine[3].value);
    }

    #[test]
    fn limit_estimates() {
        let ones: FunctionTable = (1..=5).map(|m| LengthSample { index: m, value: 1 }).collect();
        assert_eq!(normalized_limit_estimate(&ones, 2).unwrap().verdict, LimitVerdict::Vanishes);
        let quad: FunctionTable = (1..=6u64).map(|m| LengthSample { index: m as u32, value: (3 * m * m + 3 * m) / 2 }).collect();
        let est = normalized_limit_estimate(&quad, 2).unwrap();
        assert_eq!(est.verdict, LimitVerdict::Grows);
        assert_eq!(est.values[1].1, BigRational::new(9.into(), 4.into()));
        let zeros: FunctionTable = (1..=5).map(|m| LengthSample { index: m, value: 0 }).collect();
        assert_eq!(normalized_limit_estimate(&zeros, 2).unwrap().verdict, LimitVerdict::Vanishes);
        assert!(normalized_limit_estimate(&quad, 1).is_err());
        assert!(normalized_limit_estimate(&ones[..4], 2).is_err());
    }

    #[test]
    fn multi_reduction_examples() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "x").unwrap();
        let j = parse_ideal(&r, "x^2, x*y").unwrap();
        let fam = PowerFiltrationFamily::new(vec![(i.clone(), i.clone())], vec![1]).unwrap();
        let mr = multi_reduction_test(&fam, 4).unwrap();
        assert!(mr.all_pairs_reduce() && mr.product.is_reduction && mr.consistent);

        let fam = PowerFiltrationFamily::new(vec![(i, j)], vec![1]).unwrap();
        let mr = multi_reduction_test(&fam, 8).unwrap();
        assert!(!mr.per_pair[0].is_reduction && !mr.product.is_reduction && mr.consistent);

        let r = ring(&["x", "y", "u", "v"]);
        let i1 = parse_ideal(&r, "x, y").unwrap().power(2).unwrap();
        let j1 = parse_ideal(&r, "x^2, y^2").unwrap();
        let i2 = parse_ideal(&r, "u, v").unwrap().power(2).unwrap();
        let j2 = parse_ideal(&r, "u^2, v^2").unwrap();
        let fam = PowerFiltrationFamily::new(vec![(i1, j1), (i2, j2)], vec![1, 1]).unwrap();
        let mr = multi_reduction_test(&fam, 4).unwrap();
        assert!(mr.all_pairs_reduce() && mr.product.is_reduction && mr.consistent && mr.grade_at_least_one);
    }

    #[test]
    fn counter_filtration() {
        let r = ring(&["x", "y"]);
        let (fi, fj) = counter(&r, 8);
        let t = explicit_filtration_table(&fi, &fj).unwrap();
        assert_eq!(values(&t), [1; 8]);
        assert_eq!(normalized_limit_estimate(&t, 2).unwrap().verdict, LimitVerdict::Vanishes);
        let v = reduction_test(fi.level(1).unwrap(), fj.level(1).unwrap(), 8).unwrap();
        assert!(!v.is_reduction);
        assert_eq!(values(&explicit_filtration_table(&fi, &fi).unwrap()), [0; 8]);
    }

    #[test]
    fn explicit_filtrations_are_checked() {
        let r = ring(&["x", "y"]);
        let bad = vec![parse_ideal(&r, "x^2").unwrap(), parse_ideal(&r, "x").unwrap()];
        assert!(ExplicitFiltration::new(bad).is_err());
        // y⁵ escapes level 2
        let bad = vec![parse_ideal(&r, "x, y").unwrap(), parse_ideal(&r, "x^3").unwrap(), parse_ideal(&r, "x^3, y^5").unwrap()];
        assert!(ExplicitFiltration::new(bad).is_err());
    }

    #[test]
    fn interleaved_filtration_matches_lattice_count() {
        let r = ring(&["x", "y"]);
        let m = parse_ideal(&r, "x, y").unwrap();
        let sq = parse_ideal(&r, "x^2, y^2").unwrap();
        let top = 6u32;
        let fi: Vec<Ideal> = (1..=top).map(|k| m.power(k).unwrap()).collect();
        let fj: Vec<Ideal> = (1..=top)
            .map(|k| sq.power(k.div_ceil(2)).unwrap().intersection(&m.power(k).unwrap()).unwrap())
            .collect();
        let fi = ExplicitFiltration::new(fi).unwrap();
        let fj = ExplicitFiltration::new(fj).unwrap();
        let t = explicit_filtration_table(&fi, &fj).unwrap();
        // x^a y^b ∈ (x²,y²)^c iff ⌊a/2⌋ + ⌊b/2⌋ ≥ c
        let oracle: Vec<u64> = (1..=top)
            .map(|k| {
                let c = k.div_ceil(2);
                let mut count = 0;
                for a in 0..4 * top {
                    for b in 0..4 * top {
                        let mono = Monomial::from_exponents(&[a as u16, b as u16]);
                        if mono.degree() >= k && a / 2 + b / 2 < c {
                            count += 1;
                        }
                    }
                }
                count
            })
            .collect();
        assert_eq!(values(&t), oracle);
    }
}
