//! The multiplicity function n ↦ e_t(Iⁿ/Jⁿ) and its theorem checks.
//!
//! cargo run --example multiplicity

use reeslab::multiplicity::e_function;
use reeslab::session::parse_ideal;
use reeslab::RingDescriptor;

fn show(label: &str, i: &str, j: &str, vars: &[&str]) -> reeslab::Result<()> {
    let r = RingDescriptor::rationals(vars)?;
    let (i, j) = (parse_ideal(&r, i)?, parse_ideal(&r, j)?);
    let rep = e_function(&i, &j, 1..=5)?;
    let table: Vec<u64> = rep.e_table.iter().map(|s| s.value).collect();
    println!("{label}: K = ({}), r = {}, t = {:?}", rep.k_proxy.generators_string(), rep.r, rep.t);
    println!("  e table {table:?}, fit {} (degree {})", rep.e_fit.display_in_n(), rep.e_fit.degree());
    for f in &rep.verdicts {
        println!("  {:<14} {:<14} {}", f.name, f.status, f.detail);
    }
    Ok(())
}

fn main() -> reeslab::Result<()> {
    show("(x,y)² over (x²,y²)", "x^2, x*y, y^2", "x^2, y^2", &["x", "y"])?;
    show("deviation one", "x*z, x*w, y*z, y*w", "x*z, y*w, x*w + y*z", &["x", "y", "z", "w"])?;
    show("unmixed height one", "x", "x*y", &["x", "y"])?;
    Ok(())
}
