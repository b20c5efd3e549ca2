//! Brute-force monomial ideal oracle, independent of the Gröbner and Hilbert code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use reeslab::{Ideal, Monomial, Polynomial, Ring};

pub type Exps = Vec<u32>;

/// A monomial ideal as a list of generator exponent vectors.
#[derive(Clone, Debug)]
pub struct MonIdeal {
    pub nvars: usize,
    pub gens: Vec<Exps>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

impl MonIdeal {
    /// Keeps only the minimal generators.
    pub fn new(nvars: usize, mut gens: Vec<Exps>) -> Self {
        gens.sort();
        gens.dedup();
        let min = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        MonIdeal { nvars, gens: min }
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, m))
    }

    pub fn product(&self, other: &MonIdeal) -> MonIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        MonIdeal::new(self.nvars, gens)
    }

    pub fn power(&self, n: u32) -> MonIdeal {
        let mut p = MonIdeal::new(self.nvars, vec![vec![0; self.nvars]]);
        for _ in 0..n {
            p = p.product(self);
        }
        p
    }

    pub fn intersection(&self, other: &MonIdeal) -> MonIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(lcm(a, b));
            }
        }
        MonIdeal::new(self.nvars, gens)
    }

    /// `self : (u)` for a monomial `u`.
    pub fn colon_monomial(&self, u: &[u32]) -> MonIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.iter().zip(u).map(|(x, y)| x.saturating_sub(*y)).collect())
            .collect();
        MonIdeal::new(self.nvars, gens)
    }

    /// `self : other`, the intersection of the colons by each generator.
    pub fn colon(&self, other: &MonIdeal) -> MonIdeal {
        let mut out = MonIdeal::new(self.nvars, vec![vec![0; self.nvars]]);
        for u in &other.gens {
            out = out.intersection(&self.colon_monomial(u));
        }
        out
    }

    /// `self : other^∞`, iterating colons until the ideal stops growing.
    pub fn saturation(&self, other: &MonIdeal, bound: &[u32]) -> MonIdeal {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(other);
            if box_monomials(bound).iter().all(|m| next.contains(m) == cur.contains(m)) {
                return next;
            }
            cur = next;
        }
    }

    /// Largest pure power exponent per variable, if every variable has one.
    pub fn pure_power_bounds(&self) -> Option<Exps> {
        (0..self.nvars)
            .map(|i| {
                self.gens
                    .iter()
                    .filter(|g| g.iter().enumerate().all(|(k, e)| k == i || *e == 0))
                    .map(|g| g[i])
                    .min()
            })
            .collect()
    }

    pub fn to_ideal(&self, ring: &Ring) -> Ideal {
        let gens = self.gens.iter().map(|g| monomial_poly(ring, g)).collect();
        Ideal::new(ring, gens).unwrap()
    }

    /// Same membership on every monomial of the box `0..=bound`.
    pub fn agrees_on_box(&self, other: &Ideal, bound: &[u32]) -> bool {
        let ring = other.ring().clone();
        box_monomials(bound)
            .iter()
            .all(|m| self.contains(m) == other.contains(&monomial_poly(&ring, m)).unwrap())
    }
}

pub fn monomial_poly(ring: &Ring, e: &[u32]) -> Polynomial {
    let exps: Vec<u16> = e.iter().map(|&x| x as u16).collect();
    Polynomial::monomial(ring, Monomial::from_exponents(&exps), ring.field().one())
}

/// All exponent vectors with `e_i ≤ bound_i`.
pub fn box_monomials(bound: &[u32]) -> Vec<Exps> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|m: Exps| {
                (0..=b).map(move |e| {
                    let mut m = m.clone();
                    m.push(e);
                    m
                })
            })
            .collect();
    }
    out
}

/// `λ(A/B)` by counting monomials in `A` outside `B`; `B` must contain a
/// pure power of every variable.
pub fn subquotient_length(a: &MonIdeal, b: &MonIdeal) -> u64 {
    let bound: Exps = b.pure_power_bounds().expect("B is not m-primary").iter().map(|e| e - 1).collect();
    box_monomials(&bound).iter().filter(|m| a.contains(m) && !b.contains(m)).count() as u64
}

pub fn colength(b: &MonIdeal) -> u64 {
    subquotient_length(&MonIdeal::new(b.nvars, vec![vec![0; b.nvars]]), b)
}

/// Distinct monomials, exponents in `1..=max_deg` total degree.
pub fn random_monomials(rng: &mut impl Rng, nvars: usize, count: usize, max_deg: u32) -> Vec<Exps> {
    let mut set = BTreeSet::new();
    while set.len() < count {
        let deg = rng.gen_range(1..=max_deg);
        let mut e = vec![0u32; nvars];
        for _ in 0..deg {
            e[rng.gen_range(0..nvars)] += 1;
        }
        set.insert(e);
    }
    set.into_iter().collect()
}

/// Random ideal with pure powers `x_i^{p_i}`, `p_i ≤ max_pure`.
pub fn random_primary(rng: &mut impl Rng, nvars: usize, extra: usize, max_deg: u32, max_pure: u32) -> MonIdeal {
    let mut gens = random_monomials(rng, nvars, extra, max_deg);
    for i in 0..nvars {
        let mut e = vec![0; nvars];
        e[i] = rng.gen_range(1..=max_pure);
        gens.push(e);
    }
    MonIdeal::new(nvars, gens)
}

pub fn var_names(n: usize) -> Vec<String> {
    ["x", "y", "z", "w"].iter().take(n).map(|s| s.to_string()).collect()
}

pub fn ring(n: usize) -> Ring {
    let names = var_names(n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    reeslab::RingDescriptor::rationals(&refs).unwrap()
}
