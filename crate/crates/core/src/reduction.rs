//! Reductions of ideals: direct tests `J·Iⁿ = Iⁿ⁺¹`, Rees' length criterion,
//! analytic spread, local dimension and grade, d-sequences and the
//! stabilization of `√(Jⁿ : Iⁿ)`.
//!
//! The ambient ring is always the polynomial ring localized at the origin.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::asymptotics::{fit_eventual_polynomial, EventualPolynomial, FitDegree};
use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::hilbert::{monomial_dimension, HilbertNumerator};
use crate::length::{samuel_function, subquotient_length, FunctionTable, LengthSample, MaximalIdeal};
use crate::limits::Limits;
use crate::ring::{same_ring, MonomialOrder, Polynomial, Ring, RingDescriptor};

/// Default search depth for `J·Iⁿ = Iⁿ⁺¹`.
pub const DEFAULT_N_MAX: u32 = 10;
/// Default fit window.
pub const DEFAULT_WINDOW: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionMethod {
    Direct,
    ReesCriterion,
}

impl fmt::Display for ReductionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionMethod::Direct => "direct",
            ReductionMethod::ReesCriterion => "rees_criterion",
        })
    }
}

/// Outcome of a reduction search.
///
/// A `Direct` negative only means no `n ≤ n_max_searched` worked; a negative
/// with method `ReesCriterion` is certified by the length criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionVerdict {
    pub is_reduction: bool,
    pub reduction_number: Option<u32>,
    pub method: ReductionMethod,
    pub n_max_searched: u32,
}

impl ReductionVerdict {
    pub fn is_certified(&self) -> bool {
        self.is_reduction || self.method == ReductionMethod::ReesCriterion
    }

    /// `REDUCTION`, `NOT_REDUCTION` (certified) or `NOT_FOUND`.
    pub fn label(&self) -> &'static str {
        match (self.is_reduction, self.method) {
            (true, _) => "REDUCTION",
            (false, ReductionMethod::ReesCriterion) => "NOT_REDUCTION",
            (false, ReductionMethod::Direct) => "NOT_FOUND",
        }
    }
}

fn check_pair(i: &Ideal, j: &Ideal) -> Result<()> {
    if !same_ring(i.ring(), j.ring()) {
        return Err(Error::RingMismatch);
    }
    if !j.is_subset_of(i)? {
        return Err(Error::NotContained("J is not contained in I".into()));
    }
    Ok(())
}

/// `n ↦ λ(Iⁿ/Jⁿ)` over `n_range`.
pub fn rees_function(i: &Ideal, j: &Ideal, n_range: RangeInclusive<u32>) -> Result<FunctionTable> {
    check_pair(i, j)?;
    let ns: Vec<u32> = n_range.collect();
    // powers are built incrementally and cached, so build them in order
    let mut pairs = Vec::with_capacity(ns.len());
    for &n in &ns {
        pairs.push((n, i.power(n)?, j.power(n)?));
    }
    let limits = Limits::current();
    pairs
        .par_iter()
        .map(|(n, a, b)| {
            let value = limits.scoped(|| subquotient_length(a, b)).map_err(|e| match e {
                Error::PossiblyInfiniteLength { cap, .. } => {
                    Error::PossiblyInfiniteLength { cap, context: Some(format!("at n = {n}")) }
                }
                e => e,
            })?;
            Ok(LengthSample { index: *n, value })
        })
        .collect()
}

/// Smallest `n ≤ n_max` with `J·Iⁿ = Iⁿ⁺¹`.
pub fn reduction_test(i: &Ideal, j: &Ideal, n_max: u32) -> Result<ReductionVerdict> {
    check_pair(i, j)?;
    for n in 0..=n_max {
        let lower = j.product(&i.power(n)?)?;
        if i.power(n + 1)?.is_subset_of(&lower)? {
            return Ok(ReductionVerdict {
                is_reduction: true,
                reduction_number: Some(n),
                method: ReductionMethod::Direct,
                n_max_searched: n,
            });
        }
    }
    Ok(ReductionVerdict {
        is_reduction: false,
        reduction_number: None,
        method: ReductionMethod::Direct,
        n_max_searched: n_max,
    })
}

/// Rees' criterion on a fitted length table.
#[derive(Clone, Debug)]
pub struct ReesCriterion {
    pub table: FunctionTable,
    pub fit: EventualPolynomial,
    pub dim: usize,
    /// `deg P(I/J) ≤ dim R − 1` (or the zero function).
    pub is_reduction: bool,
    pub direct: ReductionVerdict,
    /// Whether the direct search agrees; `None` when it found nothing and
    /// the criterion says reduction (inconclusive, not a contradiction).
    pub agrees_with_direct: Option<bool>,
}

impl ReesCriterion {
    pub fn label(&self) -> &'static str {
        if self.is_reduction {
            "REDUCTION"
        } else {
            "NOT_REDUCTION"
        }
    }
}

/// Fits `n ↦ λ(Iⁿ/Jⁿ)` and applies the degree test. An unstable fit
/// extends the range by `window` samples, at most three times.
pub fn rees_criterion(
    i: &Ideal,
    j: &Ideal,
    n_range: RangeInclusive<u32>,
    window: usize,
    n_max: u32,
) -> Result<ReesCriterion> {
    let mut end = *n_range.end();
    let mut table = rees_function(i, j, n_range)?;
    let mut attempts = 0;
    let fit = loop {
        match fit_eventual_polynomial(&table, window) {
            Ok(fit) => break fit,
            Err(Error::NotStabilized(_)) if attempts < 3 => {
                attempts += 1;
                let more = rees_function(i, j, end + 1..=end + window as u32)?;
                end += window as u32;
                table.extend(more);
            }
            Err(e) => return Err(e),
        }
    };
    let dim = i.ring().nvars();
    let is_reduction = fit.degree().at_most(dim as i64 - 1);
    let direct = reduction_test(i, j, n_max)?;
    let agrees_with_direct = match (direct.is_reduction, is_reduction) {
        (true, r) => Some(r),
        (false, false) => Some(true),
        (false, true) => None,
    };
    Ok(ReesCriterion { table, fit, dim, is_reduction, direct, agrees_with_direct })
}

/// Direct search, upgraded to a certified negative when the length
/// criterion concurs.
pub fn certified_reduction_test(i: &Ideal, j: &Ideal, n_max: u32, n_range: RangeInclusive<u32>) -> Result<ReductionVerdict> {
    let direct = reduction_test(i, j, n_max)?;
    if direct.is_reduction {
        return Ok(direct);
    }
    match rees_criterion(i, j, n_range, DEFAULT_WINDOW, n_max) {
        Ok(rc) if !rc.is_reduction => Ok(ReductionVerdict { method: ReductionMethod::ReesCriterion, ..direct }),
        Ok(_) => Ok(direct),
        // infinite or unstable lengths leave the direct answer standing
        Err(Error::PossiblyInfiniteLength { .. } | Error::NotStabilized(_)) => Ok(direct),
        Err(e) => Err(e),
    }
}

/// Whether `u` is integral over `J`, i.e. `J` is a reduction of `J + (u)`.
pub fn integral_dependence(u: &Polynomial, j: &Ideal, n_max: u32) -> Result<bool> {
    let i = j.sum(&Ideal::new(j.ring(), vec![u.clone()])?)?;
    Ok(reduction_test(&i, j, n_max)?.is_reduction)
}

/// Analytic spread `l(J)`: the Krull dimension of the fiber cone
/// `⊕ Jⁿ/𝔪Jⁿ`.
pub fn analytic_spread(j: &Ideal) -> Result<usize> {
    if j.is_zero_ideal() {
        return Err(Error::invalid("analytic spread of the zero ideal"));
    }
    let fiber = fiber_cone_relations(j)?;
    let gb = fiber.groebner(&MonomialOrder::GrevLex)?;
    monomial_dimension(&gb.leading_monomials(), fiber.ring().nvars())
        .ok_or_else(|| Error::invalid("fiber cone presentation is the unit ideal"))
}

/// Relations among the generators of `J` in the fiber cone, as an ideal of
/// `K[y_1..y_s]`.
pub fn fiber_cone_relations(j: &Ideal) -> Result<Ideal> {
    let ring = j.ring();
    let n = ring.nvars();
    let gens = j.generators();
    let s = gens.len();
    // variables: t, x_1..x_n, y_1..y_s
    let ynames: Vec<String> = (1..=s).map(|k| fresh_name(ring, &format!("y{k}"))).collect();
    let mut names = vec![fresh_name(ring, "t")];
    names.extend(ring.variables().iter().cloned());
    names.extend(ynames.iter().cloned());
    let big = RingDescriptor::from_parts(names, ring.field());
    let shift: Vec<usize> = (1..=n).collect();
    let t = Polynomial::variable(&big, 0);
    let rels: Vec<Polynomial> = gens
        .iter()
        .enumerate()
        .map(|(k, f)| &Polynomial::variable(&big, 1 + n + k) - &(&t * &f.embed(&big, &shift)))
        .collect();
    let grading: Option<Vec<u32>> = if j.is_homogeneous() {
        let mut w = vec![1u32; 1 + n];
        w.extend(gens.iter().map(|f| f.min_degree().unwrap_or(0) + 1));
        Some(w)
    } else {
        None
    };
    let gb = GroebnerBasis::compute(&big, &rels, &MonomialOrder::BlockElimination(1), grading.as_deref(), None)?;
    // R(J)/𝔪R(J) = K[x,y]/(P + (x)) = K[y]/P|_{x=0}
    let xs: Vec<usize> = (1..=n).collect();
    let yring = RingDescriptor::from_parts(ynames, ring.field());
    let ys: Vec<usize> = (1 + n..1 + n + s).collect();
    let mut out = Vec::new();
    for p in gb.basis() {
        if p.involves_any(&[0]) {
            continue;
        }
        let q = p.substitute_zero(&xs);
        if let Some(q) = q.contract(&yring, &ys) {
            if !q.is_zero() {
                out.push(q);
            }
        }
    }
    Ideal::new(&yring, out)
}

fn fresh_name(ring: &Ring, base: &str) -> String {
    let mut name = base.to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

fn is_proper_at_origin(a: &Ideal) -> bool {
    a.generators().iter().all(|g| g.constant_term().is_zero())
}

/// Dimension of `(R/A)` at the origin, read off as the degree of the fitted
/// Hilbert–Samuel function `k ↦ λ(R/(A + 𝔪ᵏ))`.
pub fn local_dimension(a: &Ideal) -> Result<usize> {
    local_dimension_fit(a).map(|(d, _)| d)
}

/// `local_dimension` together with the samples it was read from.
pub fn local_dimension_fit(a: &Ideal) -> Result<(usize, EventualPolynomial)> {
    if !is_proper_at_origin(a) {
        return Err(Error::invalid("ideal is not proper at the origin"));
    }
    let n = a.ring().nvars() as u32;
    let window = DEFAULT_WINDOW;
    let fit = if a.is_homogeneous() {
        // past the numerator's degree the Hilbert function is polynomial
        let gb = a.groebner(&MonomialOrder::GrevLex)?;
        let hn = HilbertNumerator::of_monomial_ideal(&gb.leading_monomials(), n as usize);
        let top = hn.coefficients().len() as u32 + n + window as u32 + 2;
        fit_eventual_polynomial(&samuel_function(a, 1..=top)?, window)?
    } else {
        let cap = Limits::current().length_cap;
        let mut top = (n + window as u32 + 4).min(cap);
        loop {
            match fit_eventual_polynomial(&samuel_function(a, 1..=top)?, window) {
                Ok(fit) => break fit,
                Err(Error::NotStabilized(_)) if top < cap => top = (top * 2).min(cap),
                Err(e) => return Err(e),
            }
        }
    };
    match fit.degree() {
        FitDegree::Finite(d) => Ok((d as usize, fit)),
        FitDegree::Zero => Err(Error::invalid("ideal is not proper at the origin")),
    }
}

/// Grade of `A`, equal to its height in the Cohen–Macaulay ambient ring.
pub fn grade_cm(a: &Ideal) -> Result<usize> {
    Ok(a.ring().nvars() - local_dimension(a)?)
}

/// First failure found by [`d_sequence_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DSequenceWitness {
    /// `((x_0..x_i) : x_{i+1}x_k) ≠ ((x_0..x_i) : x_k)`, 1-based `k`.
    Colon { i: usize, k: usize },
    /// `x_index` (1-based) lies in the ideal of the other elements.
    Redundant { index: usize },
}

impl fmt::Display for DSequenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DSequenceWitness::Colon { i, k } => write!(f, "colon condition fails at i={i}, k={k}"),
            DSequenceWitness::Redundant { index } => write!(f, "element {index} lies in the ideal of the others"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSequenceCheck {
    /// The colon conditions alone.
    pub weak: bool,
    /// Colon conditions and no element redundant.
    pub strict: bool,
    pub failing_witness: Option<DSequenceWitness>,
}

/// Checks `((x_0..x_i) : x_{i+1}x_k) = ((x_0..x_i) : x_k)` for
/// `0 ≤ i < k ≤ n` (with `x_0 = 0`) and, for the strict form, that no
/// `x_i` lies in the ideal of the others.
pub fn d_sequence_check(seq: &[Polynomial]) -> Result<DSequenceCheck> {
    let Some(first) = seq.first() else {
        return Err(Error::invalid("empty sequence"));
    };
    let ring = first.ring();
    if seq.iter().any(|p| !same_ring(p.ring(), ring)) {
        return Err(Error::RingMismatch);
    }
    let n = seq.len();
    let mut colon_witness = None;
    'outer: for i in 0..n {
        let base = Ideal::new(ring, seq[..i].to_vec())?;
        for k in i + 1..=n {
            let xk = &seq[k - 1];
            let prod = &seq[i] * xk;
            let holds = if xk.is_zero() {
                true
            } else if prod.is_zero() {
                // (base : 0) = R must equal (base : x_k)
                base.contains(xk)?
            } else {
                base.colon_poly(&prod)?.is_subset_of(&base.colon_poly(xk)?)?
            };
            if !holds {
                colon_witness = Some(DSequenceWitness::Colon { i, k });
                break 'outer;
            }
        }
    }
    let weak = colon_witness.is_none();
    let mut redundant = None;
    for idx in 0..n {
        let others: Vec<Polynomial> = seq.iter().enumerate().filter(|&(k, _)| k != idx).map(|(_, p)| p.clone()).collect();
        if Ideal::new(ring, others)?.contains(&seq[idx])? {
            redundant = Some(DSequenceWitness::Redundant { index: idx + 1 });
            break;
        }
    }
    let strict = weak && redundant.is_none();
    Ok(DSequenceCheck { weak, strict, failing_witness: colon_witness.or(redundant) })
}

/// `depth R/J > 0` at the origin: `J : 𝔪 = J`.
pub fn depth_positive(j: &Ideal) -> Result<bool> {
    if !is_proper_at_origin(j) {
        return Err(Error::invalid("ideal is not proper at the origin"));
    }
    let m = MaximalIdeal::new(j.ring());
    j.colon(m.ideal())?.is_subset_of(j)
}

#[derive(Clone, Debug)]
pub struct RadicalColonStability {
    /// First `r` with `√C_r = √C_{r+1} = … = √C_{n_max}`.
    pub stable_from: u32,
    /// `C_r = J^r : I^r`, standing in for `K = √C_r`.
    pub k_proxy: Ideal,
    /// `C_1, …, C_{n_max}`.
    pub colons: Vec<Ideal>,
}

/// Same radical, tested by radical membership of generators both ways.
pub fn same_radical(a: &Ideal, b: &Ideal) -> Result<bool> {
    for (x, y) in [(a, b), (b, a)] {
        for g in x.generators() {
            if !y.radical_contains(g)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Tracks `√(Jⁿ : Iⁿ)` for `n = 1..n_max`.
pub fn radical_colon_stability(i: &Ideal, j: &Ideal, n_max: u32) -> Result<RadicalColonStability> {
    check_pair(i, j)?;
    if n_max == 0 {
        return Err(Error::invalid("n_max must be at least 1"));
    }
    let mut colons = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        colons.push(j.power(n)?.colon(&i.power(n)?)?);
    }
    let mut stable_from = n_max;
    while stable_from > 1 && same_radical(&colons[stable_from as usize - 2], &colons[stable_from as usize - 1])? {
        stable_from -= 1;
    }
    let k_proxy = colons[stable_from as usize - 1].clone();
    Ok(RadicalColonStability { stable_from, k_proxy, colons })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagStatus {
    /// Hypotheses machine-checked and the conclusion holds.
    Verified,
    /// Conclusion holds; some hypothesis is taken on trust.
    Assumed,
    /// Hypotheses hold but the conclusion does not.
    Failed,
    /// A hypothesis fails or could not be decided.
    NotApplicable,
}

impl fmt::Display for FlagStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlagStatus::Verified => "verified",
            FlagStatus::Assumed => "assumed",
            FlagStatus::Failed => "failed",
            FlagStatus::NotApplicable => "not_applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremFlag {
    pub name: &'static str,
    pub status: FlagStatus,
    pub detail: String,
}

impl TheoremFlag {
    pub(crate) fn new(name: &'static str, status: FlagStatus, detail: impl Into<String>) -> Self {
        TheoremFlag { name, status, detail: detail.into() }
    }

    pub(crate) fn check(name: &'static str, holds: bool, detail: impl Into<String>) -> Self {
        let status = if holds { FlagStatus::Verified } else { FlagStatus::Failed };
        TheoremFlag::new(name, status, detail)
    }
}

/// Everything known about a pair `J ⊆ I`.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub ring: Ring,
    pub i: Ideal,
    pub j: Ideal,
    pub lambda_table: FunctionTable,
    pub p_fit: EventualPolynomial,
    pub reduction: ReductionVerdict,
    pub spread_j: usize,
    pub grade_j: usize,
    pub dim_r: usize,
    pub d_sequence: DSequenceCheck,
    pub theorem_flags: Vec<TheoremFlag>,
}

/// Computes a [`PairReport`].
pub fn pair_report(i: &Ideal, j: &Ideal, n_range: RangeInclusive<u32>, n_max: u32) -> Result<PairReport> {
    check_pair(i, j)?;
    let rc = rees_criterion(i, j, n_range, DEFAULT_WINDOW, n_max)?;
    let reduction = if rc.direct.is_reduction || rc.is_reduction {
        rc.direct.clone()
    } else {
        ReductionVerdict { method: ReductionMethod::ReesCriterion, ..rc.direct.clone() }
    };
    let dim_r = i.ring().nvars();
    let spread_j = analytic_spread(j)?;
    let grade_j = grade_cm(j)?;
    let d_sequence = d_sequence_check(j.generators())?;
    let proper = !i.is_subset_of(j)?;
    let deg = rc.fit.degree();
    let deg_str = deg.to_string();
    let mut flags = Vec::new();

    flags.push(match (rc.direct.is_reduction, rc.is_reduction) {
        (true, r) => TheoremFlag::check(
            "rees_criterion",
            r,
            format!("direct reduction found; deg P = {deg_str}, dim R − 1 = {}", dim_r - 1),
        ),
        (false, false) => TheoremFlag::new(
            "rees_criterion",
            FlagStatus::Verified,
            format!("deg P = {deg_str} = dim R certifies non-reduction"),
        ),
        (false, true) => TheoremFlag::new(
            "rees_criterion",
            FlagStatus::NotApplicable,
            format!("deg P = {deg_str} predicts a reduction not found up to n = {n_max}"),
        ),
    });

    let reduction_witnessed = rc.direct.is_reduction;
    flags.push(if reduction_witnessed {
        TheoremFlag::check(
            "degree_upper_bound",
            deg.at_most(spread_j as i64 - 1),
            format!("deg P = {deg_str}, l(J) − 1 = {}", spread_j as i64 - 1),
        )
    } else {
        TheoremFlag::new("degree_upper_bound", FlagStatus::NotApplicable, "J is not a witnessed reduction")
    });

    let base_ok = reduction_witnessed && proper;
    let why_not = if !reduction_witnessed {
        "J is not a witnessed reduction"
    } else {
        "I = J"
    };

    flags.push(if !base_ok {
        TheoremFlag::new("grade_lower_bound", FlagStatus::NotApplicable, why_not)
    } else if !d_sequence.strict {
        TheoremFlag::new(
            "grade_lower_bound",
            FlagStatus::NotApplicable,
            "generators of J are not a d-sequence, so grade G(J)+ is unknown",
        )
    } else {
        // grade G(J)+ = grade J for d-sequences
        TheoremFlag::check(
            "grade_lower_bound",
            !deg.at_most(grade_j as i64 - 2),
            format!("grade G(J)+ − 1 = grade J − 1 = {}, deg P = {deg_str}", grade_j as i64 - 1),
        )
    });

    let ci = grade_j == j.generators().len();
    flags.push(if !base_ok {
        TheoremFlag::new("complete_intersection_degree", FlagStatus::NotApplicable, why_not)
    } else if !ci {
        TheoremFlag::new(
            "complete_intersection_degree",
            FlagStatus::NotApplicable,
            format!("grade J = {grade_j} < {} generators", j.generators().len()),
        )
    } else {
        TheoremFlag::check(
            "complete_intersection_degree",
            deg == FitDegree::Finite(spread_j as u32 - 1),
            format!("deg P = {deg_str}, l(J) − 1 = {}", spread_j - 1),
        )
    });

    flags.push(d_sequence_lower_bound(i, j, base_ok, why_not, &d_sequence, grade_j, deg)?);

    Ok(PairReport {
        ring: i.ring().clone(),
        i: i.clone(),
        j: j.clone(),
        lambda_table: rc.table,
        p_fit: rc.fit,
        reduction,
        spread_j,
        grade_j,
        dim_r,
        d_sequence,
        theorem_flags: flags,
    })
}

/// `grade J ≤ deg P` when the generators of `J`, in the given order, are a
/// d-sequence `a_1..a_s, b_1..b_t` with `s = grade J`, `t ≥ 1` and
/// `I ∩ ((a) : b_1) = (a)`.
fn d_sequence_lower_bound(
    i: &Ideal,
    j: &Ideal,
    base_ok: bool,
    why_not: &str,
    dseq: &DSequenceCheck,
    grade_j: usize,
    deg: FitDegree,
) -> Result<TheoremFlag> {
    const NAME: &str = "d_sequence_lower_bound";
    if !base_ok {
        return Ok(TheoremFlag::new(NAME, FlagStatus::NotApplicable, why_not));
    }
    if !dseq.strict {
        return Ok(TheoremFlag::new(NAME, FlagStatus::NotApplicable, "generators of J are not a d-sequence"));
    }
    let gens = j.generators();
    if gens.len() <= grade_j {
        return Ok(TheoremFlag::new(NAME, FlagStatus::NotApplicable, "no generator beyond the first grade J"));
    }
    let a = Ideal::new(j.ring(), gens[..grade_j].to_vec())?;
    let capped = i.intersection(&a.colon_poly(&gens[grade_j])?)?;
    if !capped.is_subset_of(&a)? {
        return Ok(TheoremFlag::new(
            NAME,
            FlagStatus::NotApplicable,
            format!("I ∩ ((a_1..a_{grade_j}) : b_1) is larger than (a_1..a_{grade_j})"),
        ));
    }
    Ok(TheoremFlag::check(
        NAME,
        !deg.at_most(grade_j as i64 - 1),
        format!("grade J = {grade_j}, deg P = {deg}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::session::{parse_ideal, parse_polynomial, parse_polynomials};

    fn ring(vars: &[&str]) -> Ring {
        RingDescriptor::rationals(vars).unwrap()
    }

    fn values(t: &FunctionTable) -> Vec<u64> {
        t.iter().map(|s| s.value).collect()
    }

    #[test]
    fn rees_function_examples() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "x^4, x*y^2, x^3*y").unwrap();
        let j = parse_ideal(&r, "x*y^2, x^4").unwrap();
        let t = rees_function(&i, &j, 1..=6).unwrap();
        let fit = fit_eventual_polynomial(&t, DEFAULT_WINDOW).unwrap();
        assert_eq!(fit.degree(), FitDegree::Finite(1));

        let m = parse_ideal(&r, "x, y").unwrap();
        assert_eq!(values(&rees_function(&m, &m, 1..=4).unwrap()), [0, 0, 0, 0]);

        let sq = parse_ideal(&r, "x^2, y^2").unwrap();
        let t = rees_function(&m, &sq, 1..=6).unwrap();
        // staircase counts: λ(R/(x²,y²)ⁿ) = 2n²+2n, λ(R/𝔪ⁿ) = n(n+1)/2
        let oracle: Vec<u64> = (1..=6u64).map(|n| 2 * n * n + 2 * n - n * (n + 1) / 2).collect();
        assert_eq!(values(&t), oracle);
        assert_eq!(values(&t), [3, 9, 18, 30, 45, 63]);
        let fit = fit_eventual_polynomial(&t, DEFAULT_WINDOW).unwrap();
        assert_eq!(fit.display_in_n(), "3/2*n^2 + 3/2*n");
    }

    #[test]
    fn rees_function_names_failing_n() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "x").unwrap();
        let j = parse_ideal(&r, "x^2").unwrap();
        let err = Limits { length_cap: 8, ..Limits::default() }.scoped(|| rees_function(&i, &j, 1..=2).unwrap_err());
        assert!(err.to_string().contains("n = 1"), "{err}");
    }

    #[test]
    fn reduction_test_examples() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "x, y").unwrap().power(2).unwrap();
        let j = parse_ideal(&r, "x^2, y^2").unwrap();
        let v = reduction_test(&i, &j, DEFAULT_N_MAX).unwrap();
        assert!(v.is_reduction);
        assert_eq!(v.reduction_number, Some(1));
        // J·I = 𝔪⁴ monomial by monomial
        let ji = j.product(&i).unwrap();
        for m in crate::ring::Monomial::all_of_degree(2, 4) {
            assert!(ji.contains(&Polynomial::monomial(&r, m, r.field().one())).unwrap());
        }

        let v = reduction_test(&j, &j, DEFAULT_N_MAX).unwrap();
        assert_eq!(v.reduction_number, Some(0));

        let i = parse_ideal(&r, "x").unwrap();
        let j = parse_ideal(&r, "x^2, x*y").unwrap();
        let v = reduction_test(&i, &j, 8).unwrap();
        assert!(!v.is_reduction);
        assert_eq!(v.method, ReductionMethod::Direct);
        assert_eq!(v.n_max_searched, 8);
        assert_eq!(v.label(), "NOT_FOUND");

        assert!(matches!(reduction_test(&j, &i, 2), Err(Error::NotContained(_))));
    }

    #[test]
    fn rees_criterion_examples() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "x^4, x*y^2, x^3*y").unwrap();
        let j = parse_ideal(&r, "x*y^2, x^4").unwrap();
        let rc = rees_criterion(&i, &j, 1..=6, DEFAULT_WINDOW, DEFAULT_N_MAX).unwrap();
        assert!(rc.is_reduction);
        assert_eq!(rc.agrees_with_direct, Some(true));

        let m = parse_ideal(&r, "x, y").unwrap();
        let sq = parse_ideal(&r, "x^2, y^2").unwrap();
        let rc = rees_criterion(&m, &sq, 1..=6, DEFAULT_WINDOW, 4).unwrap();
        assert_eq!(rc.fit.degree(), FitDegree::Finite(2));
        assert!(!rc.is_reduction);
        assert_eq!(rc.agrees_with_direct, Some(true));
        let v = certified_reduction_test(&m, &sq, 4, 1..=6).unwrap();
        assert_eq!(v.method, ReductionMethod::ReesCriterion);
        assert_eq!(v.label(), "NOT_REDUCTION");

        let rc = rees_criterion(&m, &m, 1..=5, DEFAULT_WINDOW, 2).unwrap();
        assert_eq!(rc.fit.degree(), FitDegree::Zero);
        assert!(rc.is_reduction);
    }

    #[test]
    fn integral_dependence_examples() {
        let r = ring(&["x", "y", "z", "w"]);
        let j = parse_ideal(&r, "x*y*w^2, x*y*z^2, x*w^2 + y*z^2").unwrap();
        let u = parse_polynomial(&r, "x*y*z*w").unwrap();
        assert!(!j.contains(&u).unwrap());
        assert!(integral_dependence(&u, &j, DEFAULT_N_MAX).unwrap());

        let r = ring(&["x", "y"]);
        let j = parse_ideal(&r, "x^2, y^2").unwrap();
        let xy = parse_polynomial(&r, "x*y").unwrap();
        assert!(j.power(2).unwrap().contains(&xy.pow(2)).unwrap());
        assert!(integral_dependence(&xy, &j, DEFAULT_N_MAX).unwrap());
        let j = parse_ideal(&r, "x^2").unwrap();
        assert!(!integral_dependence(&parse_polynomial(&r, "x").unwrap(), &j, 6).unwrap());
    }

    #[test]
    fn analytic_spread_examples() {
        let r = ring(&["x", "y", "z", "w"]);
        let j = parse_ideal(&r, "x*z, y*w, x*w + y*z").unwrap();
        assert_eq!(analytic_spread(&j).unwrap(), 3);
        // the four products satisfy one quadric: dim K[xz,xw,yz,yw] = 3
        let i = parse_ideal(&r, "x*z, x*w, y*z, y*w").unwrap();
        assert_eq!(analytic_spread(&i).unwrap(), 3);
        assert_eq!(fiber_cone_relations(&i).unwrap().generators().len(), 1);

        let r = ring(&["x", "y"]);
        assert_eq!(analytic_spread(&parse_ideal(&r, "x").unwrap()).unwrap(), 1);
        let m = parse_ideal(&r, "x, y").unwrap();
        assert_eq!(analytic_spread(&m).unwrap(), 2);
        assert!(fiber_cone_relations(&m).unwrap().is_zero_ideal());
        // a unit at the origin has fiber cone K[t]
        assert_eq!(analytic_spread(&parse_ideal(&r, "x - 1").unwrap()).unwrap(), 1);
        // 𝔪² needs two generators for a minimal reduction
        assert_eq!(analytic_spread(&m.power(2).unwrap()).unwrap(), 2);
    }

    #[test]
    fn local_dimension_and_grade_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(local_dimension(&parse_ideal(&r, "x").unwrap()).unwrap(), 1);
        assert_eq!(local_dimension(&parse_ideal(&r, "x, y").unwrap()).unwrap(), 0);
        assert_eq!(grade_cm(&parse_ideal(&r, "x, y").unwrap()).unwrap(), 2);
        assert_eq!(grade_cm(&parse_ideal(&r, "x*y^2, x^4").unwrap()).unwrap(), 1);
        assert_eq!(local_dimension(&Ideal::zero(&r)).unwrap(), 2);
        // (x − 1) is the unit ideal at the origin
        assert!(local_dimension(&parse_ideal(&r, "x - 1").unwrap()).is_err());
        // a non-homogeneous curve through the origin
        assert_eq!(local_dimension(&parse_ideal(&r, "y - x^2").unwrap()).unwrap(), 1);
        assert_eq!(local_dimension(&parse_ideal(&r, "y - x^2, x^3").unwrap()).unwrap(), 0);

        let r = ring(&["x", "y", "z", "w"]);
        let j = parse_ideal(&r, "x*z, y*w, x*w + y*z").unwrap();
        assert_eq!(local_dimension(&j).unwrap(), 2);
        assert_eq!(grade_cm(&j).unwrap(), 2);
    }

    #[test]
    fn d_sequence_examples() {
        let r = ring(&["x", "y", "z", "w"]);
        let seq = parse_polynomials(&r, "x*z, y*w, x*w + y*z").unwrap();
        let c = d_sequence_check(&seq).unwrap();
        assert!(c.weak && c.strict, "{c:?}");

        let r = ring(&["x", "y"]);
        let c = d_sequence_check(&parse_polynomials(&r, "x, y").unwrap()).unwrap();
        assert!(c.strict);
        let c = d_sequence_check(&parse_polynomials(&r, "x, x").unwrap()).unwrap();
        assert!(c.weak && !c.strict);
        assert_eq!(c.failing_witness, Some(DSequenceWitness::Redundant { index: 1 }));
        // (x²) : (xy)² = (1) but (x²) : xy = (x)
        let c = d_sequence_check(&parse_polynomials(&r, "x^2, x*y").unwrap()).unwrap();
        assert!(!c.weak);
        assert_eq!(c.failing_witness, Some(DSequenceWitness::Colon { i: 1, k: 2 }));
    }

    #[test]
    fn depth_examples() {
        let r = ring(&["x", "y"]);
        assert!(depth_positive(&parse_ideal(&r, "x").unwrap()).unwrap());
        assert!(!depth_positive(&parse_ideal(&r, "x^2, x*y").unwrap()).unwrap());
        let r = ring(&["x", "y", "z", "w"]);
        assert!(!depth_positive(&parse_ideal(&r, "x*z, y*w, x*w + y*z").unwrap()).unwrap());
    }

    #[test]
    fn radical_colon_examples() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = parse_ideal(&r, "x*z, x*w, y*z, y*w").unwrap();
        let j = parse_ideal(&r, "x*z, y*w, x*w + y*z").unwrap();
        let st = radical_colon_stability(&i, &j, 2).unwrap();
        assert_eq!(st.stable_from, 1);
        for v in 0..4 {
            assert!(st.k_proxy.radical_contains(&Polynomial::variable(&r, v)).unwrap());
        }

        let r = ring(&["x", "y"]);
        let j = parse_ideal(&r, "x^2, y^2").unwrap();
        let st = radical_colon_stability(&j, &j, 3).unwrap();
        assert_eq!(st.stable_from, 1);
        assert!(st.colons.iter().all(|c| c.is_unit().unwrap()));

        let m = parse_ideal(&r, "x, y").unwrap();
        let st = radical_colon_stability(&m, &j, 3).unwrap();
        assert_eq!(st.stable_from, 1);
        for c in &st.colons {
            assert!(c.radical_contains(&Polynomial::variable(&r, 0)).unwrap());
            assert!(c.radical_contains(&Polynomial::variable(&r, 1)).unwrap());
        }
    }

    #[test]
    fn pair_report_flags() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "x, y").unwrap().power(2).unwrap();
        let j = parse_ideal(&r, "x^2, y^2").unwrap();
        let rep = pair_report(&i, &j, 1..=6, DEFAULT_N_MAX).unwrap();
        assert_eq!(rep.p_fit.degree(), FitDegree::Finite(1));
        assert_eq!((rep.spread_j, rep.grade_j, rep.dim_r), (2, 2, 2));
        for f in &rep.theorem_flags {
            assert_ne!(f.status, FlagStatus::Failed, "{f:?}");
        }
        let ci = rep.theorem_flags.iter().find(|f| f.name == "complete_intersection_degree").unwrap();
        assert_eq!(ci.status, FlagStatus::Verified);

        let m = parse_ideal(&r, "x, y").unwrap();
        let rep = pair_report(&m, &j, 1..=6, 3).unwrap();
        assert_eq!(rep.reduction.label(), "NOT_REDUCTION");
        let rees = rep.theorem_flags.iter().find(|f| f.name == "rees_criterion").unwrap();
        assert_eq!(rees.status, FlagStatus::Verified);
    }
}
