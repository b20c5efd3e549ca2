//! Eventual polynomials of integer sequences, detected by finite differences.
//!
//! A fitted polynomial of degree `t` is reported in the binomial basis
//! `P(n) = Σ_{i=0}^{t} (−1)^i e_i C(n+t−1−i, t−i)`, so `e_0` is the
//! normalized leading coefficient.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::length::LengthSample;

/// Degree of an eventual polynomial; `Zero` marks the eventually-zero
/// function, which satisfies every upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FitDegree {
    Zero,
    Finite(u32),
}

impl FitDegree {
    /// `deg ≤ c`, true for the zero function whatever `c`.
    pub fn at_most(self, c: i64) -> bool {
        match self {
            FitDegree::Zero => true,
            FitDegree::Finite(d) => (d as i64) <= c,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            FitDegree::Zero => None,
            FitDegree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for FitDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitDegree::Zero => write!(f, "ZERO"),
            FitDegree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial agreeing with the samples from `stabilization_index` on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventualPolynomial {
    degree: FitDegree,
    /// `e_0, …, e_t` in the binomial basis above; empty for the zero function.
    binomial_coeffs: Vec<BigRational>,
    stabilization_index: u32,
    window: usize,
    // Newton form at `base`: P(n) = Σ_k newton[k] C(n − base, k)
    base: i64,
    newton: Vec<BigRational>,
}

impl EventualPolynomial {
    pub fn degree(&self) -> FitDegree {
        self.degree
    }

    pub fn binomial_coeffs(&self) -> &[BigRational] {
        &self.binomial_coeffs
    }

    pub fn stabilization_index(&self) -> u32 {
        self.stabilization_index
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn evaluate(&self, n: i64) -> BigRational {
        let x = n - self.base;
        self.newton
            .iter()
            .enumerate()
            .map(|(k, c)| c * binomial_poly(x, k as u32))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Ordinary coefficients `c_0, …, c_t` of `Σ c_i n^i`.
    pub fn power_coeffs(&self) -> Vec<BigRational> {
        let t = self.newton.len();
        if t == 0 {
            return Vec::new();
        }
        // interpolate at n = 0..t-1 and solve the Vandermonde system by Newton division
        let xs: Vec<BigRational> = (0..t as i64).map(|i| BigRational::from_integer(i.into())).collect();
        let ys: Vec<BigRational> = (0..t as i64).map(|i| self.evaluate(i)).collect();
        let mut dd = ys.clone();
        for j in 1..t {
            for i in (j..t).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        let mut coeffs = vec![BigRational::zero(); t];
        for i in (0..t).rev() {
            // coeffs = coeffs * (n - xs[i]) + dd[i]
            let mut next = vec![BigRational::zero(); t];
            for k in 0..t {
                if coeffs[k].is_zero() {
                    continue;
                }
                if k + 1 < t {
                    next[k + 1] += &coeffs[k];
                }
                next[k] -= &coeffs[k] * &xs[i];
            }
            next[0] += &dd[i];
            coeffs = next;
        }
        coeffs
    }

    /// Human-readable form in the variable `n`, e.g. `3/2*n^2 + 3/2*n`.
    pub fn display_in_n(&self) -> String {
        let coeffs = self.power_coeffs();
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (i, mag.is_one()) {
                (0, _) => format!("{mag}"),
                (1, true) => "n".into(),
                (1, false) => format!("{mag}*n"),
                (_, true) => format!("n^{i}"),
                (_, false) => format!("{mag}*n^{i}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ")
        }
    }
}

/// Generalized binomial coefficient `x(x−1)…(x−k+1)/k!` for any integer `x`.
fn binomial_poly(x: i64, k: u32) -> BigRational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(x - i);
        den *= BigInt::from(i + 1);
    }
    BigRational::new(num, den)
}

/// Fits the eventual polynomial of consecutive integer samples.
///
/// The degree is the first difference order that is constant over its last
/// `window` entries; the polynomial is rebuilt from the last `degree + 1`
/// samples and the stabilization index is the first index from which every
/// sample agrees with it.
pub fn fit_eventual_polynomial(samples: &[LengthSample], window: usize) -> Result<EventualPolynomial> {
    if window < 3 {
        return Err(Error::invalid("fit window must be at least 3"));
    }
    if samples.len() < window + 2 {
        return Err(Error::invalid(format!(
            "fit needs at least {} samples, got {}",
            window + 2,
            samples.len()
        )));
    }
    if samples.windows(2).any(|w| w[1].index != w[0].index + 1) {
        return Err(Error::invalid("fit samples must have consecutive indices"));
    }
    let vals: Vec<BigInt> = samples.iter().map(|s| BigInt::from(s.value)).collect();
    let first = samples[0].index;
    let len = vals.len();

    if vals[len - window..].iter().all(|v| v.is_zero()) {
        let zeros = vals.iter().rev().take_while(|v| v.is_zero()).count();
        return Ok(EventualPolynomial {
            degree: FitDegree::Zero,
            binomial_coeffs: Vec::new(),
            stabilization_index: first + (len - zeros) as u32,
            window,
            base: 0,
            newton: Vec::new(),
        });
    }

    let mut diff = vals.clone();
    let mut degree = None;
    for j in 0..=len - window {
        if diff[diff.len() - window..].windows(2).all(|w| w[0] == w[1]) {
            degree = Some(j);
            break;
        }
        diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let Some(t) = degree else {
        return Err(Error::NotStabilized(format!(
            "no difference order is constant over the last {window} of {len} samples"
        )));
    };

    // Newton forward coefficients at the start of the last t+1 samples
    let start = len - 1 - t;
    let mut column: Vec<BigInt> = vals[start..].to_vec();
    let mut newton = Vec::with_capacity(t + 1);
    for _ in 0..=t {
        newton.push(BigRational::from_integer(column[0].clone()));
        column = column.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut poly = EventualPolynomial {
        degree: FitDegree::Finite(t as u32),
        binomial_coeffs: Vec::new(),
        stabilization_index: 0,
        window,
        base: (first as usize + start) as i64,
        newton,
    };
    let mut stab = len;
    while stab > 0 && poly.evaluate((first as usize + stab - 1) as i64) == BigRational::from_integer(vals[stab - 1].clone()) {
        stab -= 1;
    }
    poly.stabilization_index = first + stab as u32;
    poly.binomial_coeffs = binomial_basis(&poly, t as u32);
    Ok(poly)
}

/// `e_i = (−1)^i ∇^{t−i} P(0)` where `∇` is the backward difference.
fn binomial_basis(p: &EventualPolynomial, t: u32) -> Vec<BigRational> {
    (0..=t)
        .map(|i| {
            let m = t - i;
            let mut acc = BigRational::zero();
            for l in 0..=m {
                let c = BigRational::from_integer(crate::hilbert::binomial(m as u64, l as u64).into());
                let term = c * p.evaluate(-(l as i64));
                if l % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            if i % 2 == 1 {
                -acc
            } else {
                acc
            }
        })
        .collect()
}

/// `t!` times the coefficient of `n^t`: `e_0` when `deg P = t`, zero below.
pub fn normalized_leading_coefficient(p: &EventualPolynomial, t: u32) -> Result<BigRational> {
    match p.degree {
        FitDegree::Zero => Ok(BigRational::zero()),
        FitDegree::Finite(d) if d < t => Ok(BigRational::zero()),
        FitDegree::Finite(d) if d == t => Ok(p.binomial_coeffs[0].clone()),
        FitDegree::Finite(d) => Err(Error::invalid(format!("polynomial degree {d} exceeds t = {t}"))),
    }
}

/// Samples `(index, value)` from a slice starting at `first`.
pub fn samples_from(first: u32, values: &[u64]) -> Vec<LengthSample> {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| LengthSample { index: first + i as u32, value: v })
        .collect()
}
