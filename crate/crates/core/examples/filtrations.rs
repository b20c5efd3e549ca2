//! Product-power filtrations and an explicit non-Noetherian pair.
//!
//! cargo run --example filtrations

use reeslab::filtration::{
    explicit_filtration_table, multi_reduction_test, normalized_limit_estimate, product_power_table,
    ExplicitFiltration, PowerFiltrationFamily,
};
use reeslab::session::parse_ideal;
use reeslab::RingDescriptor;

fn main() -> reeslab::Result<()> {
    let r = RingDescriptor::rationals(&["x", "y"])?;
    let pairs = vec![
        (parse_ideal(&r, "x, y")?, parse_ideal(&r, "x^2, y")?),
        (parse_ideal(&r, "x^2, y")?, parse_ideal(&r, "x^2, y^2")?),
    ];
    let family = PowerFiltrationFamily::new(pairs, vec![1, 2])?;
    let table = product_power_table(&family, 1..=6)?;
    let values: Vec<u64> = table.iter().map(|s| s.value).collect();
    println!("λ(∏Iₖ^(a_k m) / ∏Jₖ^(a_k m)) = {values:?}");
    let est = normalized_limit_estimate(&table, 2)?;
    println!("λ/m²: {} (fit {})", est.verdict, est.fit.display_in_n());
    let mr = multi_reduction_test(&family, 8)?;
    for (k, v) in mr.per_pair.iter().enumerate() {
        println!("  pair {}: {}", k + 1, v.label());
    }
    println!("  product: {}, consistent: {}", mr.product.label(), mr.consistent);

    let fi = ExplicitFiltration::new((1..=8).map(|m| parse_ideal(&r, &format!("x^{m}"))).collect::<Result<_, _>>()?)?;
    let fj = ExplicitFiltration::new(
        (1..=8).map(|m| parse_ideal(&r, &format!("x^{}, x^{m}*y", m + 1))).collect::<Result<_, _>>()?,
    )?;
    let t = explicit_filtration_table(&fi, &fj)?;
    let est = normalized_limit_estimate(&t, 2)?;
    let values: Vec<u64> = t.iter().map(|s| s.value).collect();
    println!("(xᵐ) over (xᵐ⁺¹, xᵐy): {values:?}, λ/m² {}", est.verdict);
    let v = reeslab::reduction::reduction_test(fi.level(1).unwrap(), fj.level(1).unwrap(), 8)?;
    println!("level one reduction: {}", v.label());
    Ok(())
}
