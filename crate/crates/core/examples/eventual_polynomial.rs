//! Fitting eventual polynomials to integer sequences.
//!
//! cargo run --example eventual_polynomial

use reeslab::asymptotics::{fit_eventual_polynomial, normalized_leading_coefficient, samples_from};

fn main() -> reeslab::Result<()> {
    // λ(R/𝔪ⁿ) in three variables, with a noisy start
    let values = [7, 2, 10, 20, 35, 56, 84, 120, 165];
    let fit = fit_eventual_polynomial(&samples_from(1, &values), 3)?;
    println!("fit: {}", fit.display_in_n());
    println!("degree {}, agrees from n = {}", fit.degree(), fit.stabilization_index());
    let coeffs: Vec<String> = fit.binomial_coeffs().iter().map(|c| c.to_string()).collect();
    println!("binomial coefficients e_i: {}", coeffs.join(", "));
    println!("e_0 relative to t = 3: {}", normalized_leading_coefficient(&fit, 3)?);
    println!("P(20) = {}", fit.evaluate(20));

    let zero = fit_eventual_polynomial(&samples_from(1, &[3, 1, 0, 0, 0, 0]), 3)?;
    println!("eventually zero: degree {}", zero.degree());

    match fit_eventual_polynomial(&samples_from(1, &[1, 2, 4, 8, 16, 32]), 3) {
        Ok(p) => println!("unexpected fit {}", p.display_in_n()),
        Err(e) => println!("2ⁿ: {e}"),
    }
    Ok(())
}
