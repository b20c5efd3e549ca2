//! Exact computations with ideals in polynomial rings over ℚ or a prime
//! field: Gröbner bases, lengths of quotients, fitted eventual polynomials,
//! reduction and multiplicity tests for pairs of ideals.

pub mod asymptotics;
pub mod error;
pub mod filtration;
pub mod groebner;
pub mod hilbert;
pub mod length;
pub mod reduction;
pub mod limits;
pub mod multiplicity;
pub mod ring;
pub mod session;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
pub use limits::Limits;
pub use ring::{Coeff, CoefficientField, Monomial, MonomialOrder, Polynomial, Ring, RingDescriptor};
