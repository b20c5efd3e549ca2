//! Gröbner bases, normal forms and ideal operations.
//!
//! cargo run --example groebner_basics

use reeslab::session::{parse_ideal, parse_polynomial};
use reeslab::{MonomialOrder, RingDescriptor};

fn main() -> reeslab::Result<()> {
    let r = RingDescriptor::rationals(&["x", "y", "z"])?;
    let i = parse_ideal(&r, "x^2 - y*z, x*y - z^2, y^2 - x*z")?;

    for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
        let gb = i.groebner(&order)?;
        println!("{order:?} basis ({} elements):", gb.len());
        for g in gb.basis() {
            println!("  {g}");
        }
    }

    let f = parse_polynomial(&r, "x^3 - z^3")?;
    let gb = i.groebner(&MonomialOrder::GrevLex)?;
    println!("normal form of {f}: {}", gb.normal_form(&f)?);
    println!("{f} in I: {}", i.contains(&f)?);

    let m = parse_ideal(&r, "x, y")?;
    println!("I ∩ (x,y) = ({})", i.intersection(&m)?.generators_string());
    println!("I : x = ({})", i.colon_poly(&parse_polynomial(&r, "x")?)?.generators_string());
    let (sat, steps) = parse_ideal(&r, "x^2*y, x*y^2")?.saturation(&m)?;
    println!("(x²y, xy²) : (x,y)^∞ = ({}) after {steps} steps", sat.generators_string());
    let elim = i.eliminate(&[0])?;
    println!("I ∩ ℚ[y,z] = ({})", elim.generators_string());
    Ok(())
}
