use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::LinAlgError;

/// The ground field: rationals or a prime field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

impl FieldSpec {
    /// A prime field, validated.
    pub fn fp(p: u64) -> Result<Self, LinAlgError> {
        if is_prime(p) {
            Ok(FieldSpec::Fp(p))
        } else {
            Err(LinAlgError::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::zero()),
            FieldSpec::Fp(p) => Scalar::Fp { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::one()),
            FieldSpec::Fp(p) => Scalar::Fp { v: 1 % p, p },
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::from(BigInt::from(n))),
            FieldSpec::Fp(p) => Scalar::Fp {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }
}

fn is_prime(p: u64) -> bool {
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

/// An exact field element. Arithmetic never rounds; mixing fields panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Q,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
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
            Scalar::Fp { v, p } => *v == 1 % p,
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Scalar::Q(r) => Scalar::Q(r.recip()),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: mod_inv(*v, *p),
                p: *p,
            },
        }
    }

    pub fn ratio(num: i64, den: i64) -> Scalar {
        assert!(den != 0);
        Scalar::Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mod_mul(result, base, p);
        }
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    result
}

fn check_fields(a: &Scalar, b: &Scalar) {
    assert!(a.field() == b.field(), "mixed ground fields");
}

impl<'a> Add for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        check_fields(self, rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: (a + b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        check_fields(self, rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: (a + p - b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        check_fields(self, rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, .. }) => Scalar::Fp {
                v: mod_mul(*a, *b, *p),
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Div for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (p - v) % p,
                p: *p,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse "a" or "a/b" into a rational scalar.
pub fn parse_rational(s: &str) -> Result<Scalar, LinAlgError> {
    let bad = || LinAlgError::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.trim().parse().map_err(|_| bad())?;
    let d: BigInt = den.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::Q(BigRational::new(n, d)))
}

/// Signed integer value of a rational scalar, if it is one.
pub fn as_integer(s: &Scalar) -> Option<BigInt> {
    match s {
        Scalar::Q(r) if r.denom().is_one() => Some(r.numer().clone()),
        _ => None,
    }
}

pub fn scalar_abs(s: &Scalar) -> Scalar {
    match s {
        Scalar::Q(r) => Scalar::Q(r.abs()),
        other => other.clone(),
    }
}
