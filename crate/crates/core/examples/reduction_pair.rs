//! Reductions, the Rees length criterion, analytic spread and d-sequences.
//!
//! cargo run --example reduction_pair

use reeslab::reduction::{
    analytic_spread, d_sequence_check, grade_cm, integral_dependence, pair_report, radical_colon_stability,
    reduction_test, rees_criterion, DEFAULT_WINDOW,
};
use reeslab::session::{parse_ideal, parse_polynomial};
use reeslab::RingDescriptor;

fn main() -> reeslab::Result<()> {
    let r = RingDescriptor::rationals(&["x", "y", "z", "w"])?;
    let i = parse_ideal(&r, "x*z, x*w, y*z, y*w")?;
    let j = parse_ideal(&r, "x*z, y*w, x*w + y*z")?;

    let v = reduction_test(&i, &j, 10)?;
    println!("J·Iⁿ = Iⁿ⁺¹: {} (reduction number {:?})", v.label(), v.reduction_number);

    let rc = rees_criterion(&i, &j, 1..=6, DEFAULT_WINDOW, 10)?;
    let table: Vec<u64> = rc.table.iter().map(|s| s.value).collect();
    println!("λ(Iⁿ/Jⁿ) = {table:?}, fit {} of degree {}", rc.fit.display_in_n(), rc.fit.degree());
    println!("length criterion: {}", rc.label());

    println!("l(J) = {}, grade J = {}", analytic_spread(&j)?, grade_cm(&j)?);
    let d = d_sequence_check(j.generators())?;
    println!("d-sequence: weak {}, strict {}", d.weak, d.strict);

    let report = pair_report(&i, &j, 1..=6, 10)?;
    for f in &report.theorem_flags {
        println!("  {:<28} {:<14} {}", f.name, f.status, f.detail);
    }

    let j1 = parse_ideal(&r, "x*y*w^2, x*y*z^2, x*w^2 + y*z^2")?;
    let u = parse_polynomial(&r, "x*y*z*w")?;
    println!("{u} integral over J: {}", integral_dependence(&u, &j1, 10)?);
    let i1 = j1.sum(&reeslab::Ideal::new(&r, vec![u])?)?;
    let rs = radical_colon_stability(&i1, &j1, 3)?;
    println!("√(Jⁿ:Iⁿ) stable from n = {}, K = ({})", rs.stable_from, rs.k_proxy.generators_string());
    Ok(())
}
