//! Exact scalars over the rationals or a prime field.
//!
//! Every computation in this crate runs over one of these two ground
//! fields, chosen per session. There is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The ground field of a session: `Q` or `GF(p)` for a prime `p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn is_prime_field(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An element of the active ground field.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Self {
        match field {
            Field::Rationals => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { p, v: 0 },
        }
    }

    pub fn one(field: Field) -> Self {
        match field {
            Field::Rationals => Scalar::Q(BigRational::one()),
            Field::Prime(p) => Scalar::Fp { p, v: 1 % p },
        }
    }

    pub fn from_i64(field: Field, n: i64) -> Self {
        match field {
            Field::Rationals => Scalar::Q(BigRational::from(BigInt::from(n))),
            Field::Prime(p) => {
                let v = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, v }
            }
        }
    }

    /// Parses "a" or "a/b" into a rational, or reduces mod p in prime mode.
    pub fn parse(field: Field, s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let n: BigInt = num.parse().map_err(|_| format!("bad numerator {num:?}"))?;
        let d: BigInt = den.parse().map_err(|_| format!("bad denominator {den:?}"))?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        match field {
            Field::Rationals => Ok(Scalar::Q(BigRational::new(n, d))),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let nm = ((n % &pm) + &pm) % &pm;
                let dm = ((d % &pm) + &pm) % &pm;
                let nv: u64 = nm.try_into().unwrap();
                let dv: u64 = dm.try_into().unwrap();
                if dv == 0 {
                    return Err(format!("denominator divisible by {p}"));
                }
                let inv = fp_inv(dv, p);
                Ok(Scalar::Fp { p, v: mul_mod(nv, inv, p) })
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { p, v } => *v == 1 % p,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, v }, Scalar::Fp { p: q, v: w }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { p: *p, v: (v + w) % p }
            }
            _ => panic!("mixed ground fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, v }, Scalar::Fp { p: q, v: w }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { p: *p, v: mul_mod(*v, *w, *p) }
            }
            _ => panic!("mixed ground fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: if *v == 0 { 0 } else { p - v } },
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Q(a.recip())
            }
            Scalar::Fp { p, v } => {
                assert!(*v != 0, "inverse of zero");
                Scalar::Fp { p: *p, v: fp_inv(*v, *p) }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// True when the rational is an integer (always true in prime mode).
    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_integer(),
            Scalar::Fp { .. } => true,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p)
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        let r = r0 - q * r1;
        r0 = r1;
        r1 = r;
        let s = s0 - q * s1;
        s0 = s1;
        s1 = s;
    }
    assert_eq!(r0, 1, "not invertible mod {p}");
    s0.rem_euclid(p as i128) as u64
}

/// Returns true when `p` is prime. Trial division; the specs only use small primes.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Signed magnitude helper used by fraction-free elimination.
pub fn rational_abs(r: &BigRational) -> BigRational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops_q() {
        let f = Field::Rationals;
        let a = Scalar::parse(f, "2/3").unwrap();
        let b = Scalar::parse(f, "-1/6").unwrap();
        assert_eq!(a.add(&b), Scalar::parse(f, "1/2").unwrap());
        assert_eq!(a.mul(&b), Scalar::parse(f, "-1/9").unwrap());
        assert!(a.mul(&a.inv()).is_one());
    }

    #[test]
    fn field_ops_fp() {
        let f = Field::Prime(7);
        let a = Scalar::from_i64(f, 3);
        let b = Scalar::from_i64(f, 5);
        assert_eq!(a.add(&b), Scalar::from_i64(f, 1));
        assert_eq!(a.mul(&b), Scalar::from_i64(f, 1));
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(Scalar::parse(f, "1/3").unwrap(), Scalar::from_i64(f, 5));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(11));
        assert!(!is_prime(1));
        assert!(!is_prime(15));
    }
}
