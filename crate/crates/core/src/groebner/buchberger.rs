//! Buchberger's algorithm with the Gebauer–Möller pair update.
//!
//! Pairs (and the input generators, which are treated as pseudo-pairs) are
//! selected by the normal strategy: smallest degree of the lcm under the
//! active grading, ties broken by the monomial order on lcms and then by
//! generator index. When every input is homogeneous for the grading, a degree
//! bound turns the run into a truncated computation whose output agrees with
//! the true basis in all degrees up to the bound.

use std::cmp::Ordering;

use super::sparse::{reduce, Reducer, SortedPoly};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::{Monomial, MonomialOrder};

pub(crate) struct Config<'a> {
    pub order: &'a MonomialOrder,
    /// Weights of the grading driving pair selection; `None` means total degree.
    pub grading: Option<&'a [u32]>,
    pub degree_bound: Option<u64>,
    pub limits: Limits,
}

pub(crate) struct Output {
    /// Reduced, monic, sorted ascending by leading monomial.
    pub basis: Vec<SortedPoly>,
    /// False when pairs above the degree bound were left unprocessed.
    pub complete: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Item {
    Input(usize),
    Pair(usize, usize),
}

impl Item {
    fn key(&self) -> (u8, usize, usize) {
        match *self {
            Item::Input(k) => (0, k, 0),
            Item::Pair(i, j) => (1, i, j),
        }
    }
}

struct Work {
    deg: u64,
    lcm: Monomial,
    item: Item,
}

struct Elem {
    red: Reducer,
    redundant: bool,
}

fn grade(m: &Monomial, grading: Option<&[u32]>) -> u64 {
    match grading {
        None => m.degree() as u64,
        Some(w) => m.weighted_degree(w),
    }
}

pub(crate) fn buchberger(inputs: Vec<SortedPoly>, cfg: &Config<'_>) -> Result<Output> {
    let order = cfg.order;
    let inputs: Vec<SortedPoly> = inputs
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|mut p| {
            p.make_monic();
            p
        })
        .collect();
    let mut pending: Vec<Work> = inputs
        .iter()
        .enumerate()
        .map(|(k, p)| Work { deg: grade(p.lm(), cfg.grading), lcm: p.lm().clone(), item: Item::Input(k) })
        .collect();
    let mut elems: Vec<Elem> = Vec::new();
    let mut complete = true;

    while !pending.is_empty() {
        let idx = select(&pending, order);
        if let Some(bound) = cfg.degree_bound {
            if pending[idx].deg > bound {
                complete = false;
                break;
            }
        }
        let work = pending.swap_remove(idx);
        let poly = match work.item {
            Item::Input(k) => inputs[k].clone(),
            Item::Pair(i, j) => SortedPoly::s_poly(&elems[i].red.poly, &elems[j].red.poly, order),
        };
        let mut h = reduce(
            poly,
            || elems.iter().filter(|e| !e.redundant).map(|e| &e.red),
            order,
            false,
        );
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if elems.len() >= cfg.limits.max_basis {
            return Err(Error::Resource(format!(
                "Gröbner basis exceeded {} elements",
                cfg.limits.max_basis
            )));
        }
        elems.push(Elem { red: Reducer::new(h), redundant: false });
        update(&mut elems, &mut pending, cfg);
        if pending.len() > cfg.limits.max_pairs {
            return Err(Error::Resource(format!(
                "critical pair queue exceeded {} pairs",
                cfg.limits.max_pairs
            )));
        }
    }

    Ok(Output { basis: interreduce(elems, order), complete })
}

fn select(pending: &[Work], order: &MonomialOrder) -> usize {
    let mut best = 0;
    for k in 1..pending.len() {
        let (a, b) = (&pending[k], &pending[best]);
        let ord = a
            .deg
            .cmp(&b.deg)
            .then_with(|| order.compare(&a.lcm, &b.lcm))
            .then_with(|| a.item.key().cmp(&b.item.key()));
        if ord == Ordering::Less {
            best = k;
        }
    }
    best
}

fn update(elems: &mut [Elem], pending: &mut Vec<Work>, cfg: &Config<'_>) {
    let h = elems.len() - 1;
    let h_lm = elems[h].red.lm().clone();

    struct Cand {
        g: usize,
        lcm: Monomial,
        disjoint: bool,
    }
    let cands: Vec<Cand> = elems[..h]
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.redundant)
        .map(|(g, e)| Cand {
            g,
            lcm: e.red.lm().lcm(&h_lm),
            disjoint: e.red.lm().is_coprime(&h_lm),
        })
        .collect();

    let mut in_c = vec![true; cands.len()];
    let mut kept: Vec<usize> = Vec::new();
    for k in 0..cands.len() {
        in_c[k] = false;
        let c = &cands[k];
        let dominated = cands
            .iter()
            .enumerate()
            .any(|(l, x)| in_c[l] && x.lcm.divides(&c.lcm))
            || kept.iter().any(|&l| cands[l].lcm.divides(&c.lcm));
        if c.disjoint || !dominated {
            kept.push(k);
        }
    }

    pending.retain(|w| match w.item {
        Item::Input(_) => true,
        Item::Pair(i, j) => {
            !h_lm.divides(&w.lcm)
                || elems[i].red.lm().lcm(&h_lm) == w.lcm
                || elems[j].red.lm().lcm(&h_lm) == w.lcm
        }
    });

    for k in kept {
        let c = &cands[k];
        if !c.disjoint {
            pending.push(Work { deg: grade(&c.lcm, cfg.grading), lcm: c.lcm.clone(), item: Item::Pair(c.g, h) });
        }
    }

    for e in elems[..h].iter_mut() {
        if !e.redundant && h_lm.divides(e.red.lm()) {
            e.redundant = true;
        }
    }
}

/// Minimalizes and tail-reduces a set that is already a Gröbner basis.
pub(crate) fn reduce_known_basis(polys: Vec<SortedPoly>, order: &MonomialOrder) -> Vec<SortedPoly> {
    let mut polys: Vec<SortedPoly> = polys
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|mut p| {
            p.make_monic();
            p
        })
        .collect();
    // a divisor of a monomial never exceeds it, so ascending order visits divisors first
    polys.sort_by(|a, b| order.compare(a.lm(), b.lm()));
    let mut kept: Vec<Reducer> = Vec::new();
    for p in polys {
        if !kept.iter().any(|r| r.lm().divides(p.lm())) {
            kept.push(Reducer::new(p));
        }
    }
    tail_reduce(kept, order)
}

fn interreduce(elems: Vec<Elem>, order: &MonomialOrder) -> Vec<SortedPoly> {
    let active: Vec<Reducer> = elems.into_iter().filter(|e| !e.redundant).map(|e| e.red).collect();
    tail_reduce(active, order)
}

fn tail_reduce(active: Vec<Reducer>, order: &MonomialOrder) -> Vec<SortedPoly> {
    let mut out: Vec<SortedPoly> = Vec::with_capacity(active.len());
    for (i, r) in active.iter().enumerate() {
        let mut p = reduce(
            r.poly.clone(),
            || active.iter().enumerate().filter(move |(k, _)| *k != i).map(|(_, x)| x),
            order,
            true,
        );
        p.make_monic();
        out.push(p);
    }
    out.sort_by(|a, b| order.compare(a.lm(), b.lm()));
    out
}
