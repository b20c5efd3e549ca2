//! Colengths, subquotient lengths and Hilbert–Samuel samples.
//!
//! cargo run --example lengths

use reeslab::length::{colength, hilbert_function, hs_samples, samuel_function, subquotient_length};
use reeslab::session::parse_ideal;
use reeslab::{Ideal, RingDescriptor};

fn main() -> reeslab::Result<()> {
    let r = RingDescriptor::rationals(&["x", "y"])?;
    let q = parse_ideal(&r, "x^3, x*y, y^4")?;
    println!("λ(R/({})) = {}", q.generators_string(), colength(&q)?);
    println!("Hilbert function up to degree 5: {:?}", hilbert_function(&q, 5)?);

    // a non-homogeneous ideal: the length is computed at the origin
    let nh = parse_ideal(&r, "x^2 + y^3, x*y")?;
    println!("λ(R/({})) = {}", nh.generators_string(), colength(&nh)?);

    let i = parse_ideal(&r, "x^4, x*y^2, x^3*y")?;
    let j = parse_ideal(&r, "x*y^2, x^4")?;
    println!("λ(I/J) = {}", subquotient_length(&i, &j)?);

    let samuel: Vec<u64> = samuel_function(&Ideal::zero(&r), 1..=6)?.iter().map(|s| s.value).collect();
    println!("k ↦ λ(R/𝔪ᵏ): {samuel:?}");
    let curve: Vec<u64> = samuel_function(&parse_ideal(&r, "y^2 - x^3")?, 1..=6)?.iter().map(|s| s.value).collect();
    println!("k ↦ λ(R/((y² − x³) + 𝔪ᵏ)): {curve:?}");
    let hs: Vec<u64> = hs_samples(&i, &j, 1..=8)?.iter().map(|s| s.value).collect();
    println!("k ↦ λ(I/(J + 𝔪ᵏI)): {hs:?}");

    // a quotient of infinite length is reported, not looped on
    let line = parse_ideal(&r, "x")?;
    match colength(&line) {
        Ok(n) => println!("unexpected length {n}"),
        Err(e) => println!("λ(R/(x)): {e}"),
    }
    Ok(())
}
