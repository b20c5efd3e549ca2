use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::ring::{same_ring, Degree, Monomial, MonomialOrder, Polynomial, Ring};

/// An ideal given by generators, with lazily computed Gröbner bases.
///
/// Cloning is cheap and clones share caches. Cache entries are
/// reproducible from the generators, so concurrent insertion is idempotent.
#[derive(Clone)]
pub struct Ideal {
    inner: Arc<Inner>,
}

struct Inner {
    ring: Ring,
    generators: Vec<Polynomial>,
    homogeneous: bool,
    bases: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
    // degree-truncated grevlex basis of a homogeneous ideal
    truncated: Mutex<Option<Arc<GroebnerBasis>>>,
    powers: Mutex<HashMap<u32, Ideal>>,
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Self::from_generators(ring, generators))
    }

    pub(crate) fn from_generators(ring: &Ring, generators: Vec<Polynomial>) -> Ideal {
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = generators.iter().all(|g| g.is_homogeneous());
        Ideal {
            inner: Arc::new(Inner {
                ring: ring.clone(),
                generators,
                homogeneous,
                bases: Mutex::new(HashMap::new()),
                truncated: Mutex::new(None),
                powers: Mutex::new(HashMap::new()),
            }),
        }
    }

    /// An ideal whose generators are known to form a Gröbner basis for `order`.
    pub(crate) fn with_known_basis(ring: &Ring, polys: Vec<Polynomial>, order: &MonomialOrder) -> Ideal {
        let gb = GroebnerBasis::from_known_basis(ring, &polys, order);
        let gens = gb.basis();
        let ideal = Self::from_generators(ring, gens);
        ideal.inner.bases.lock().unwrap().insert(order.clone(), Arc::new(gb));
        ideal
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Self::from_generators(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Self::from_generators(ring, vec![Polynomial::one(ring)])
    }

    /// The ideal of all variables.
    pub fn maximal(ring: &Ring) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Polynomial::variable(ring, i)).collect();
        Self::from_generators(ring, gens)
    }

    /// The ideal generated by all monomials of degree `k` (`𝔪^k`).
    pub fn maximal_power(ring: &Ring, k: u32) -> Ideal {
        let one = ring.field().one();
        let gens = Monomial::all_of_degree(ring.nvars(), k)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m, one.clone()))
            .collect();
        Self::from_generators(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.inner.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.inner.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inner.homogeneous
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.inner.generators.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.inner.generators.iter().all(|g| g.is_monomial())
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.inner
            .generators
            .iter()
            .map(|g| match g.total_degree() {
                Degree::Finite(d) => d,
                Degree::NegInfinity => 0,
            })
            .max()
            .unwrap_or(0)
    }

    /// Reduced Gröbner basis under `order`.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.inner.bases.lock().unwrap().get(order) {
            return Ok(gb.clone());
        }
        let grading: Option<Vec<u32>> = match order {
            MonomialOrder::WeightedGrevLex(w) if self.generators().iter().all(|g| g.is_weighted_homogeneous(w)) => {
                Some(w.clone())
            }
            _ => None,
        };
        let gb = Arc::new(GroebnerBasis::compute(
            self.ring(),
            self.generators(),
            order,
            grading.as_deref(),
            None,
        )?);
        self.inner
            .bases
            .lock()
            .unwrap()
            .entry(order.clone())
            .or_insert_with(|| gb.clone());
        Ok(gb)
    }

    /// A grevlex basis valid at least through `degree`. For homogeneous
    /// ideals this is a degree-truncated run; otherwise the full basis.
    pub fn graded_basis(&self, degree: u32) -> Result<Arc<GroebnerBasis>> {
        let order = MonomialOrder::GrevLex;
        if !self.is_homogeneous() {
            return self.groebner(&order);
        }
        if let Some(gb) = self.inner.bases.lock().unwrap().get(&order) {
            return Ok(gb.clone());
        }
        if let Some(gb) = self.inner.truncated.lock().unwrap().as_ref() {
            if gb.degree_bound().is_none_or(|b| b >= degree as u64) {
                return Ok(gb.clone());
            }
        }
        let gb = Arc::new(GroebnerBasis::compute(
            self.ring(),
            self.generators(),
            &order,
            None,
            Some(degree as u64),
        )?);
        if gb.is_complete() {
            self.inner.bases.lock().unwrap().entry(order).or_insert_with(|| gb.clone());
        } else {
            let mut slot = self.inner.truncated.lock().unwrap();
            let better = slot
                .as_ref()
                .is_none_or(|old| old.degree_bound() < gb.degree_bound());
            if better {
                *slot = Some(gb.clone());
            }
        }
        Ok(gb)
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), self.ring()) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        if self.is_zero_ideal() {
            return Ok(false);
        }
        if self.is_homogeneous() {
            // a homogeneous ideal contains f iff it contains each graded piece
            for piece in homogeneous_components(f) {
                let d = piece.min_degree().unwrap_or(0);
                let gb = self.graded_basis(d)?;
                if !gb.reduces_to_zero(&piece)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        self.groebner(&MonomialOrder::GrevLex)?.reduces_to_zero(f)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(self.ring(), other.ring()) {
            return Err(Error::RingMismatch);
        }
        for g in self.generators() {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals by mutual containment.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    /// Whether `1` lies in the ideal.
    pub fn is_unit(&self) -> Result<bool> {
        if self.generators().iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        if self.is_homogeneous() {
            return Ok(false);
        }
        Ok(self.groebner(&MonomialOrder::GrevLex)?.is_unit())
    }

    /// Canonical session-syntax listing of the generators.
    pub fn generators_string(&self) -> String {
        if self.is_zero_ideal() {
            return "0".into();
        }
        self.generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub(crate) fn cached_power(&self, n: u32) -> Option<Ideal> {
        self.inner.powers.lock().unwrap().get(&n).cloned()
    }

    pub(crate) fn store_power(&self, n: u32, p: &Ideal) {
        self.inner.powers.lock().unwrap().entry(n).or_insert_with(|| p.clone());
    }
}

/// Splits a polynomial into its homogeneous components, lowest degree first.
pub(crate) fn homogeneous_components(f: &Polynomial) -> Vec<Polynomial> {
    let mut by_degree: std::collections::BTreeMap<u32, Vec<(Monomial, crate::ring::Coeff)>> = Default::default();
    for (m, c) in f.terms() {
        by_degree.entry(m.degree()).or_default().push((m.clone(), c.clone()));
    }
    by_degree
        .into_values()
        .map(|terms| Polynomial::from_terms(f.ring(), terms))
        .collect()
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generators_string())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generators_string())
    }
}
