//! The multiplicity function `n ↦ e(Iⁿ/Jⁿ)`: the stabilized colon radical
//! `K`, its dimension `t`, module multiplicities relative to `t`, and the
//! degree verdicts built on them.

use std::ops::RangeInclusive;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::asymptotics::{fit_eventual_polynomial, normalized_leading_coefficient, EventualPolynomial, FitDegree};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::length::{hs_samples, FunctionTable, LengthSample};
use crate::limits::Limits;
use crate::reduction::{
    analytic_spread, certified_reduction_test, depth_positive, grade_cm, local_dimension, radical_colon_stability,
    FlagStatus, ReductionVerdict, TheoremFlag, DEFAULT_N_MAX, DEFAULT_WINDOW,
};
use crate::ring::Polynomial;

/// Colon powers inspected when looking for the stable radical.
pub const DEFAULT_STABILITY_N: u32 = 3;

/// Note attached to every flag that relies on `l(J_p) < l(J)`.
pub const ASSUMED_SPREAD_NOTE: &str = "l(J_p) < l(J) for primes of height l(J) is assumed, not checked";

#[derive(Clone, Debug)]
pub struct MultiplicityOptions {
    /// Colon powers `n = 1..n_stability` used to find `K`.
    pub n_stability: u32,
    /// Search depth for `J·Iⁿ = Iⁿ⁺¹`.
    pub n_max: u32,
    pub window: usize,
}

impl Default for MultiplicityOptions {
    fn default() -> Self {
        MultiplicityOptions { n_stability: DEFAULT_STABILITY_N, n_max: DEFAULT_N_MAX, window: DEFAULT_WINDOW }
    }
}

#[derive(Clone, Debug)]
pub struct MultiplicityReport {
    /// `Jʳ : Iʳ`, whose radical is `K`.
    pub k_proxy: Ideal,
    pub r: u32,
    /// `dim R/K` at the origin; `None` when `K` is the unit ideal there
    /// (then every `Iⁿ/Jⁿ` vanishes locally).
    pub t: Option<usize>,
    pub e_table: FunctionTable,
    pub e_fit: EventualPolynomial,
    pub verdicts: Vec<TheoremFlag>,
}

/// The stable colon `Jʳ : Iʳ` and the first stable index `r`.
pub fn stabilized_k(i: &Ideal, j: &Ideal, n_max: u32) -> Result<(Ideal, u32)> {
    let st = radical_colon_stability(i, j, n_max)?;
    if n_max < 2 || st.stable_from >= n_max {
        return Err(Error::NotStabilized(format!(
            "√(Jⁿ : Iⁿ) not observed stable for n ≤ {n_max}; increase n_max"
        )));
    }
    Ok((st.k_proxy, st.stable_from))
}

fn proper_at_origin(a: &Ideal) -> bool {
    a.generators().iter().all(|g| g.constant_term().is_zero())
}

/// `e_t(Iⁿ/Jⁿ)`: `t!` times the `k^t` coefficient of
/// `k ↦ λ(Iⁿ/(Jⁿ + 𝔪ᵏIⁿ))`, zero when that function has lower degree.
/// The `k` range grows by `window` up to the inner cap until the fit is
/// stable.
pub fn e_module(i: &Ideal, j: &Ideal, n: u32, t: usize, k_range: RangeInclusive<u32>, window: usize) -> Result<BigRational> {
    let a = i.power(n)?;
    let b = j.power(n)?;
    if a.is_subset_of(&b)? {
        return Ok(BigRational::from_integer(0.into()));
    }
    let cap = Limits::current().inner_k_cap;
    let mut end = *k_range.end();
    let mut samples = hs_samples(&a, &b, k_range)?;
    // a degree above t means the function has not reached its polynomial yet
    let fit = loop {
        let fit = fit_eventual_polynomial(&samples, window);
        let early = match &fit {
            Ok(f) => !f.degree().at_most(t as i64),
            Err(Error::NotStabilized(_)) => true,
            Err(_) => false,
        };
        if early && end < cap {
            let next = (end + window as u32).min(cap);
            samples.extend(hs_samples(&a, &b, end + 1..=next)?);
            end = next;
            continue;
        }
        let fit = fit?;
        if let FitDegree::Finite(d) = fit.degree() {
            if d as usize > t {
                return Err(Error::NotStabilized(format!(
                    "inner function still has degree {d} > t = {t} at n = {n} with k ≤ {cap}"
                )));
            }
        }
        break fit;
    };
    normalized_leading_coefficient(&fit, t as u32)
}

/// Tabulates `n ↦ e(Iⁿ/Jⁿ)` for `n ≥ r` in `n_range`, fits it and fills
/// the verdicts whose hypotheses can be checked.
pub fn e_function(i: &Ideal, j: &Ideal, n_range: RangeInclusive<u32>) -> Result<MultiplicityReport> {
    e_function_with(i, j, n_range, &MultiplicityOptions::default())
}

pub fn e_function_with(
    i: &Ideal,
    j: &Ideal,
    n_range: RangeInclusive<u32>,
    opts: &MultiplicityOptions,
) -> Result<MultiplicityReport> {
    let (k_proxy, r) = stabilized_k(i, j, opts.n_stability)?;
    let t = if proper_at_origin(&k_proxy) { Some(local_dimension(&k_proxy)?) } else { None };
    let ns: Vec<u32> = n_range.filter(|&n| n >= r).collect();
    let e_table: FunctionTable = match t {
        None => ns.iter().map(|&n| LengthSample { index: n, value: 0 }).collect(),
        Some(t) => {
            for &n in &ns {
                i.power(n)?;
                j.power(n)?;
            }
            let limits = Limits::current();
            let window = opts.window;
            ns.par_iter()
                .map(|&n| {
                    let e = limits.scoped(|| e_module(i, j, n, t, 1..=t as u32 + 6, window))?;
                    let value = e
                        .is_integer()
                        .then(|| e.to_integer())
                        .filter(|v| !v.is_negative())
                        .and_then(|v| v.to_u64())
                        .ok_or_else(|| Error::invalid(format!("multiplicity {e} at n = {n} is not a nonnegative integer")))?;
                    Ok(LengthSample { index: n, value })
                })
                .collect::<Result<_>>()?
        }
    };
    let e_fit = fit_eventual_polynomial(&e_table, opts.window)?;
    let mut report = MultiplicityReport { k_proxy, r, t, e_table, e_fit, verdicts: Vec::new() };
    let facts = PairFacts::gather(i, j, opts)?;
    report.verdicts.push(degree_cap(&report, i));
    report.verdicts.push(verdict_prop_d1_with(&report, j, &facts));
    report.verdicts.extend(verdict_thm_ad1_with(&report, i, j, &facts, opts)?);
    report.verdicts.push(verdict_lemma_impreq(&report, i, j)?);
    Ok(report)
}

/// Facts about the pair shared by the verdicts.
struct PairFacts {
    proper: bool,
    reduction: ReductionVerdict,
    spread: usize,
    grade: usize,
}

impl PairFacts {
    fn gather(i: &Ideal, j: &Ideal, opts: &MultiplicityOptions) -> Result<PairFacts> {
        let proper = !i.is_subset_of(j)?;
        let reduction = certified_reduction_test(i, j, opts.n_max, 1..=(opts.window as u32 + 3))?;
        let spread = analytic_spread(j)?;
        let grade = if proper_at_origin(j) { grade_cm(j)? } else { 0 };
        Ok(PairFacts { proper, reduction, spread, grade })
    }
}

fn degree_cap(report: &MultiplicityReport, i: &Ideal) -> TheoremFlag {
    let dim = i.ring().nvars() as i64;
    let deg = report.e_fit.degree();
    match report.t {
        Some(t) => TheoremFlag::check(
            "degree_cap",
            deg.at_most(dim - t as i64),
            format!("deg e = {deg}, dim R − t = {}", dim - t as i64),
        ),
        None => TheoremFlag::check("degree_cap", deg == FitDegree::Zero, "K is the unit ideal"),
    }
}

/// Complete-intersection verdict: a reduction has `deg e = l(J) − 1`, a
/// non-reduction `deg e = l(J)`.
pub fn verdict_prop_d1(report: &MultiplicityReport, i: &Ideal, j: &Ideal) -> Result<TheoremFlag> {
    let facts = PairFacts::gather(i, j, &MultiplicityOptions::default())?;
    Ok(verdict_prop_d1_with(report, j, &facts))
}

fn verdict_prop_d1_with(report: &MultiplicityReport, j: &Ideal, facts: &PairFacts) -> TheoremFlag {
    const NAME: &str = "prop_d1";
    let ngens = j.generators().len();
    if !facts.proper {
        return TheoremFlag::new(NAME, FlagStatus::NotApplicable, "I = J");
    }
    if facts.grade != ngens {
        return TheoremFlag::new(
            NAME,
            FlagStatus::NotApplicable,
            format!("J is not a complete intersection: grade {} < {ngens} generators", facts.grade),
        );
    }
    if !facts.reduction.is_certified() {
        return TheoremFlag::new(NAME, FlagStatus::NotApplicable, "reduction status undecided");
    }
    let deg = report.e_fit.degree();
    let l = facts.spread as u32;
    let (want, case) = if facts.reduction.is_reduction {
        (l - 1, "reduction")
    } else {
        (l, "not a reduction")
    };
    TheoremFlag::check(NAME, deg == FitDegree::Finite(want), format!("{case}: deg e = {deg}, expected {want}"))
}

/// Verdicts for analytic deviation one: part 1 (a non-reduction has
/// `deg e = l(J) − 1`) and part 2 (with `l(J) = dim R − 1`, positive depth
/// and a stable colon radical from `n = 1`: reduction iff
/// `deg e ≤ l(J) − 2`).
pub fn verdict_thm_ad1(report: &MultiplicityReport, i: &Ideal, j: &Ideal) -> Result<Vec<TheoremFlag>> {
    let opts = MultiplicityOptions::default();
    let facts = PairFacts::gather(i, j, &opts)?;
    verdict_thm_ad1_with(report, i, j, &facts, &opts)
}

fn verdict_thm_ad1_with(
    report: &MultiplicityReport,
    i: &Ideal,
    j: &Ideal,
    facts: &PairFacts,
    opts: &MultiplicityOptions,
) -> Result<Vec<TheoremFlag>> {
    const P1: &str = "thm_ad1_part1";
    const P2: &str = "thm_ad1_part2";
    let dim = i.ring().nvars();
    let l = facts.spread;
    let deg = report.e_fit.degree();
    let mut gate = None;
    if dim < 2 {
        gate = Some("dim R < 2".to_string());
    } else if !facts.proper {
        gate = Some("I = J".to_string());
    } else if l != facts.grade + 1 {
        gate = Some(format!("analytic deviation is {} (l(J) = {l}, ht J = {})", l as i64 - facts.grade as i64, facts.grade));
    } else if !facts.reduction.is_certified() {
        gate = Some("reduction status undecided".to_string());
    }
    if let Some(why) = gate {
        return Ok(vec![
            TheoremFlag::new(P1, FlagStatus::NotApplicable, why.clone()),
            TheoremFlag::new(P2, FlagStatus::NotApplicable, why),
        ]);
    }
    let assumed = |holds: bool, detail: String| {
        let status = if holds { FlagStatus::Assumed } else { FlagStatus::Failed };
        TheoremFlag::new(P1, status, format!("{detail}; {ASSUMED_SPREAD_NOTE}"))
    };

    let part1 = if facts.reduction.is_reduction {
        TheoremFlag::new(P1, FlagStatus::NotApplicable, "J is a reduction of I")
    } else {
        assumed(
            deg == FitDegree::Finite(l as u32 - 1),
            format!("not a reduction: deg e = {deg}, l(J) − 1 = {}", l - 1),
        )
    };

    let observed = format!("deg e = {deg}, l(J) − 2 = {}", l as i64 - 2);
    let part2 = if l + 1 != dim {
        TheoremFlag::new(P2, FlagStatus::NotApplicable, format!("l(J) = {l} ≠ dim R − 1; {observed}"))
    } else if !depth_positive(j)? {
        TheoremFlag::new(P2, FlagStatus::NotApplicable, format!("depth R/J = 0; {observed}"))
    } else if radical_colon_stability(i, j, opts.n_stability)?.stable_from != 1 {
        TheoremFlag::new(P2, FlagStatus::NotApplicable, format!("√(J:I) ≠ √(Jⁿ:Iⁿ) for some n ≤ {}", opts.n_stability))
    } else {
        let small = deg.at_most(l as i64 - 2);
        let holds = small == facts.reduction.is_reduction;
        let status = if holds { FlagStatus::Assumed } else { FlagStatus::Failed };
        TheoremFlag::new(
            P2,
            status,
            format!("{}: {observed}; {ASSUMED_SPREAD_NOTE}", facts.reduction.label().to_lowercase()),
        )
    };
    Ok(vec![part1, part2])
}

/// For monomial `J`: a monomial prime `Q ⊇ J` of height `ht J` with
/// `I ⊄ Q` forces `deg e = ht J`. Other inputs are not applicable.
pub fn verdict_lemma_impreq(report: &MultiplicityReport, i: &Ideal, j: &Ideal) -> Result<TheoremFlag> {
    const NAME: &str = "lemma_impreq";
    if !j.is_monomial() || j.is_zero_ideal() || !proper_at_origin(j) {
        return Ok(TheoremFlag::new(NAME, FlagStatus::NotApplicable, "J is not a proper monomial ideal"));
    }
    let n = j.ring().nvars();
    let supports: Vec<u64> = j
        .generators()
        .iter()
        .map(|g| g.terms().next().map(|(m, _)| m.support_mask()).unwrap_or(0))
        .collect();
    let covers = |s: u64| supports.iter().all(|&m| m & s != 0);
    let height = (0..=n).find(|&h| subsets_of_size(n, h).any(|s| covers(s))).unwrap_or(n);
    let outside = |s: u64, f: &Polynomial| f.terms().any(|(m, _)| m.support_mask() & s == 0);
    let witness = subsets_of_size(n, height).find(|&s| covers(s) && i.generators().iter().any(|f| outside(s, f)));
    let Some(s) = witness else {
        return Ok(TheoremFlag::new(
            NAME,
            FlagStatus::NotApplicable,
            "I lies in every minimal prime of J of maximal dimension",
        ));
    };
    let names: Vec<&str> = (0..n).filter(|k| s >> k & 1 == 1).map(|k| j.ring().variables()[k].as_str()).collect();
    let deg = report.e_fit.degree();
    Ok(TheoremFlag::check(
        NAME,
        deg == FitDegree::Finite(height as u32),
        format!("Q = ({}) ⊉ I; deg e = {deg}, ht J = {height}", names.join(", ")),
    ))
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).filter(move |s| s.count_ones() as usize == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::length::subquotient_length;
    use crate::ring::{Ring, RingDescriptor};
    use crate::session::parse_ideal;

    fn ring(vars: &[&str]) -> Ring {
        RingDescriptor::rationals(vars).unwrap()
    }

    fn flag<'a>(r: &'a MultiplicityReport, name: &str) -> &'a TheoremFlag {
        r.verdicts.iter().find(|f| f.name == name).unwrap()
    }

    #[test]
    fn stabilized_k_examples() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "x^2, x*y, y^2").unwrap();
        let j = parse_ideal(&r, "x^2, y^2").unwrap();
        let (k, r1) = stabilized_k(&i, &j, 3).unwrap();
        assert_eq!(r1, 1);
        assert!(k.is_m_primary().unwrap());
        // (x²,y²) : (xy) = (x, y) by hand
        let xy = Ideal::new(&r, vec![crate::session::parse_polynomial(&r, "x*y").unwrap()]).unwrap();
        assert!(j.colon(&xy).unwrap().equals(&parse_ideal(&r, "x, y").unwrap()).unwrap());

        let j2 = parse_ideal(&r, "x^2, y^2").unwrap();
        let i2 = j2.sum(&parse_ideal(&r, "x^2*y").unwrap()).unwrap();
        let (k, r1) = stabilized_k(&i2, &j2, 3).unwrap();
        assert_eq!(r1, 1);
        assert!(k.is_unit().unwrap());
        assert!(stabilized_k(&i, &j, 1).is_err());
    }

    #[test]
    fn e_module_examples() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "x^2, x*y, y^2").unwrap();
        let j = parse_ideal(&r, "x^2, y^2").unwrap();
        // 2·2² + 2·2 − 4·5/2 from the staircase counts
        assert_eq!(e_module(&i, &j, 2, 0, 1..=6, 3).unwrap(), BigRational::from_integer(2.into()));
        assert_eq!(e_module(&j, &j, 3, 1, 1..=6, 3).unwrap(), BigRational::from_integer(0.into()));

        let r = ring(&["x", "y", "z", "w"]);
        let i = parse_ideal(&r, "x*z, x*w, y*z, y*w").unwrap();
        let j = parse_ideal(&r, "x*z, y*w, x*w + y*z").unwrap();
        let e = e_module(&i, &j, 1, 0, 1..=6, 3).unwrap();
        let len = subquotient_length(&i, &j).unwrap();
        assert!(len > 0);
        assert_eq!(e, BigRational::from_integer(len.into()));
    }

    #[test]
    fn e_function_complete_intersection() {
        let r = ring(&["x", "y"]);
        let i = parse_ideal(&r, "x^2, x*y, y^2").unwrap();
        let j = parse_ideal(&r, "x^2, y^2").unwrap();
        let rep = e_function(&i, &j, 1..=6).unwrap();
        assert_eq!(rep.t, Some(0));
        let vals: Vec<u64> = rep.e_table.iter().map(|s| s.value).collect();
        // λ(𝔪²ⁿ/(x²,y²)ⁿ) = (2n²+2n) − n(2n+1) = n
        assert_eq!(vals, [1, 2, 3, 4, 5, 6]);
        assert_eq!(rep.e_fit.degree(), FitDegree::Finite(1));
        assert_eq!(flag(&rep, "prop_d1").status, FlagStatus::Verified);
        assert_eq!(flag(&rep, "degree_cap").status, FlagStatus::Verified);

        let m = parse_ideal(&r, "x, y").unwrap();
        let rep = e_function(&m, &j, 1..=6).unwrap();
        let vals: Vec<u64> = rep.e_table.iter().map(|s| s.value).collect();
        assert_eq!(vals, [3, 9, 18, 30, 45, 63]);
        assert_eq!(flag(&rep, "prop_d1").status, FlagStatus::Verified);
    }

    #[test]
    fn e_function_degenerate() {
        let r = ring(&["x", "y"]);
        let j = parse_ideal(&r, "x^2, y^2").unwrap();
        let i = j.sum(&parse_ideal(&r, "x^2*y").unwrap()).unwrap();
        let rep = e_function(&i, &j, 1..=5).unwrap();
        assert_eq!(rep.t, None);
        assert_eq!(rep.e_fit.degree(), FitDegree::Zero);
        assert_eq!(flag(&rep, "prop_d1").status, FlagStatus::NotApplicable);
        assert_eq!(flag(&rep, "thm_ad1_part1").status, FlagStatus::NotApplicable);
    }

    #[test]
    fn unmixed_separation() {
        let r = ring(&["x", "y"]);
        let j = parse_ideal(&r, "x*y").unwrap();
        let i = parse_ideal(&r, "x").unwrap();
        let rep = e_function(&i, &j, 1..=5).unwrap();
        assert_eq!(rep.t, Some(1));
        // Iⁿ/Jⁿ ≅ R/(yⁿ) has multiplicity n
        let vals: Vec<u64> = rep.e_table.iter().map(|s| s.value).collect();
        assert_eq!(vals, [1, 2, 3, 4, 5]);
        assert_eq!(flag(&rep, "lemma_impreq").status, FlagStatus::Verified);
    }

    #[test]
    fn deviation_one_example_without_depth() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = parse_ideal(&r, "x*z, x*w, y*z, y*w").unwrap();
        let j = parse_ideal(&r, "x*z, y*w, x*w + y*z").unwrap();
        let rep = e_function(&i, &j, 1..=5).unwrap();
        assert_eq!(rep.t, Some(0));
        assert_eq!(rep.e_fit.degree(), FitDegree::Finite(2));
        let p2 = flag(&rep, "thm_ad1_part2");
        assert_eq!(p2.status, FlagStatus::NotApplicable);
        assert!(p2.detail.contains("depth"), "{}", p2.detail);
        assert!(p2.detail.contains("deg e = 2"), "{}", p2.detail);
    }
}
