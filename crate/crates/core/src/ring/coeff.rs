use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rationals,
    PrimeField(u64),
}

impl CoefficientField {
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(CoefficientField::PrimeField(p))
        } else {
            Err(Error::InvalidRing(format!("{p} is not prime")))
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            CoefficientField::Rationals => Coeff::Rational(BigRational::from_integer(n.into())),
            CoefficientField::PrimeField(p) => {
                Coeff::Modular { value: (n as i128).rem_euclid(p as i128) as u64, modulus: p }
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match *self {
            CoefficientField::Rationals => Coeff::Rational(BigRational::from_integer(n.clone())),
            CoefficientField::PrimeField(p) => {
                let m = BigInt::from(p);
                let r = ((n % &m) + &m) % &m;
                Coeff::Modular { value: r.to_u64().unwrap(), modulus: p }
            }
        }
    }

    /// Embeds a rational number; fails in characteristic p when the
    /// denominator vanishes.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coeff> {
        match *self {
            CoefficientField::Rationals => Ok(Coeff::Rational(q.clone())),
            CoefficientField::PrimeField(_) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(&num * &den.inverse()?)
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            CoefficientField::Rationals => 0,
            CoefficientField::PrimeField(p) => p,
        }
    }
}

/// A field element: an exact rational or a residue modulo a prime.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Modular { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> CoefficientField {
        match self {
            Coeff::Rational(_) => CoefficientField::Rationals,
            Coeff::Modular { modulus, .. } => CoefficientField::PrimeField(*modulus),
        }
    }

    pub fn inverse(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Coeff::Rational(q) => Coeff::Rational(q.recip()),
            Coeff::Modular { value, modulus } => Coeff::Modular {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Whether the printed form needs a leading minus sign.
    pub fn is_negative_display(&self) -> bool {
        matches!(self, Coeff::Rational(q) if q.is_negative())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rational(q) => Some(q),
            Coeff::Modular { .. } => None,
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

macro_rules! binop {
    ($trait:ident, $method:ident, $qop:tt, $modop:expr) => {
        impl<'a> std::ops::$trait<&'a Coeff> for &'a Coeff {
            type Output = Coeff;
            fn $method(self, rhs: &'a Coeff) -> Coeff {
                match (self, rhs) {
                    (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a $qop b),
                    (Coeff::Modular { value: a, modulus: p }, Coeff::Modular { value: b, modulus: q })
                        if p == q =>
                    {
                        let f: fn(u64, u64, u64) -> u64 = $modop;
                        Coeff::Modular { value: f(*a, *b, *p), modulus: *p }
                    }
                    _ => panic!("coefficient field mismatch"),
                }
            }
        }
    };
}

binop!(Add, add, +, |a, b, p| ((a as u128 + b as u128) % p as u128) as u64);
binop!(Sub, sub, -, |a, b, p| ((a as u128 + p as u128 - b as u128) % p as u128) as u64);
binop!(Mul, mul, *, mul_mod);

impl std::ops::Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Rational(q) => Coeff::Rational(-q),
            Coeff::Modular { value, modulus } => Coeff::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(32003));
        assert!(is_prime(2147483647));
        assert!(!is_prime(2147483647 * 3));
        assert!(CoefficientField::prime_field(91).is_err());
    }

    #[test]
    fn modular_arithmetic() {
        let f = CoefficientField::PrimeField(7);
        let a = f.from_i64(-3);
        assert_eq!(a, f.from_i64(4));
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_one());
        assert!((&a - &a).is_zero());
        let half = f
            .from_rational(&BigRational::new(1.into(), 2.into()))
            .unwrap();
        assert_eq!(&half * &f.from_i64(2), f.one());
        let bad = CoefficientField::PrimeField(2).from_rational(&BigRational::new(1.into(), 2.into()));
        assert_eq!(bad, Err(Error::DivisionByZero));
    }
}
