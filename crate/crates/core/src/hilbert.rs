//! Hilbert functions of monomial ideals via the pivot recursion on the
//! numerator of the Hilbert series.

use crate::ring::Monomial;

/// Numerator `N(t)` of the Hilbert series `N(t)/(1−t)^n` of `K[x_1..x_n]/I`
/// for a monomial ideal `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertNumerator {
    nvars: usize,
    coeffs: Vec<i64>,
}

impl HilbertNumerator {
    pub fn of_monomial_ideal(gens: &[Monomial], nvars: usize) -> HilbertNumerator {
        let gens = minimalize(gens.to_vec());
        let mut coeffs = numerator(gens, nvars);
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertNumerator { nvars, coeffs }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    /// Number of monomials of degree `k` outside the ideal.
    pub fn value(&self, k: u32) -> u64 {
        let n = self.nvars as u64;
        let mut total: i128 = 0;
        for (j, &a) in self.coeffs.iter().enumerate() {
            if j as u32 > k || a == 0 {
                continue;
            }
            total += a as i128 * binomial(k as u64 - j as u64 + n - 1, n - 1) as i128;
        }
        debug_assert!(total >= 0);
        total as u64
    }

    /// Values for degrees `0..=upto`.
    pub fn values(&self, upto: u32) -> Vec<u64> {
        (0..=upto).map(|k| self.value(k)).collect()
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub(crate) fn minimalize(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(ms.len());
    for m in ms {
        if !out.iter().any(|u| u.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = vec![0i64; acc.len() + d];
            for (j, &c) in acc.iter().enumerate() {
                next[j] += c;
                next[j + d] -= c;
            }
            acc = next;
        }
        return acc;
    }
    // pivot on the variable occurring in the most non-pure generators
    let mut count = vec![0usize; nvars];
    for g in gens.iter().filter(|g| g.pure_power_variable().is_none()) {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                count[i] += 1;
            }
        }
    }
    let var = (0..nvars).max_by_key(|&i| (count[i], std::cmp::Reverse(i))).unwrap();
    let mut exps: Vec<u16> = gens.iter().map(|g| g.exponents()[var]).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let pivot = Monomial::variable(nvars, var, e);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let plus = numerator(minimalize(with_pivot), nvars);

    let quotient: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex = g.exponents().to_vec();
            ex[var] = ex[var].saturating_sub(e);
            Monomial::from_exponents(&ex)
        })
        .collect();
    let colon = numerator(minimalize(quotient), nvars);

    let d = e as usize;
    let mut out = vec![0i64; plus.len().max(colon.len() + d)];
    for (j, &c) in plus.iter().enumerate() {
        out[j] += c;
    }
    for (j, &c) in colon.iter().enumerate() {
        out[j + d] += c;
    }
    out
}

/// Number of monomials outside a monomial ideal that contains a pure power of
/// every variable; `None` when some variable has no pure power.
pub fn staircase_size(gens: &[Monomial], nvars: usize) -> Option<u64> {
    let mut bound = vec![None; nvars];
    for g in gens {
        if let Some(i) = g.pure_power_variable() {
            let d = g.degree();
            bound[i] = Some(bound[i].map_or(d, |b: u32| b.min(d)));
        }
    }
    let top: u32 = bound.iter().map(|b| b.map(|d| d - 1)).sum::<Option<u32>>()?;
    let hn = HilbertNumerator::of_monomial_ideal(gens, nvars);
    Some((0..=top).map(|k| hn.value(k)).sum())
}

/// Krull dimension of `K[x_1..x_n]/I` for a monomial ideal: the largest set
/// of variables whose monomials avoid `I`. `None` for the unit ideal.
pub fn monomial_dimension(gens: &[Monomial], nvars: usize) -> Option<usize> {
    assert!(nvars <= 64, "at most 64 variables");
    let masks: Vec<u64> = minimalize(gens.to_vec()).iter().map(|g| g.support_mask()).collect();
    if masks.contains(&0) {
        return None;
    }
    fn search(i: usize, nvars: usize, set: u64, size: usize, masks: &[u64], best: &mut usize) {
        if size > *best {
            *best = size;
        }
        if i == nvars || size + (nvars - i) <= *best {
            return;
        }
        let with = set | (1 << i);
        if !masks.iter().any(|&m| m & !with == 0) {
            search(i + 1, nvars, with, size + 1, masks, best);
        }
        search(i + 1, nvars, set, size, masks, best);
    }
    let mut best = 0;
    search(0, nvars, 0, 0, &masks, &mut best);
    Some(best)
}
