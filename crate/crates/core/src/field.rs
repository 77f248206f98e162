//! Ground fields and exact scalars.
//!
//! Two fields are supported: the rationals (arbitrary precision) and prime
//! fields `F_p` with `p < 2^31`. A [`Scalar`] carries its field with it, so
//! mixing fields inside one arithmetic expression is a logic error and panics.
//! Public entry points validate fields before doing arithmetic.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The ground field of an algebra or matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
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

impl FieldSpec {
    /// Prime field `F_p`; fails unless `p` is a prime below `2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn is_rationals(self) -> bool {
        self == FieldSpec::Rationals
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Maps a rational into this field. Fails over `F_p` when `p` divides the
    /// denominator.
    pub fn rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rat(q.clone())),
            FieldSpec::Prime(p) => {
                let m = BigInt::from(p);
                let num = q.numer().mod_floor(&m).to_u32().unwrap_or(0);
                let den = q.denom().mod_floor(&m).to_u32().unwrap_or(0);
                if den == 0 {
                    return Err(Error::Parse(format!("denominator of {q} vanishes mod {p}")));
                }
                let n = Scalar::Mod { value: num, modulus: p };
                let d = Scalar::Mod { value: den, modulus: p };
                Ok(n * d.inv().expect("nonzero residue"))
            }
        }
    }

    /// Parses `"n"` or `"n/d"` into this field.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let q = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
                let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                BigRational::new(n, d)
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
                BigRational::from_integer(n)
            }
        };
        self.rational(&q)
    }

    /// Iterates over all field elements in residue order; `None` over the rationals.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some((0..p).map(move |value| Scalar::Mod { value, modulus: p })),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" => Ok(FieldSpec::Rationals),
            other => {
                let p = other
                    .strip_prefix("Fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidField(format!("unknown field {other:?}")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

/// An exact field element.
///
/// Rationals are kept reduced with a positive denominator (guaranteed by
/// `BigRational`); residues are canonical in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(q) => Scalar::Rat(q.recip()),
            Scalar::Mod { value, modulus } => {
                // Fermat: a^(p-2)
                let p = *modulus as u64;
                let mut base = *value as u64;
                let mut exp = p - 2;
                let mut acc = 1u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Scalar::Mod { value: acc as u32, modulus: *modulus }
            }
        })
    }

    /// `"num/den"` over Q, the canonical residue over `F_p`.
    pub fn to_fraction_string(&self) -> String {
        match self {
            Scalar::Rat(q) => format!("{}/{}", q.numer(), q.denom()),
            Scalar::Mod { value, .. } => format!("{value}/1"),
        }
    }

    /// Integer value if this is an integral rational or any residue.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rat(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Rat(_) => None,
            Scalar::Mod { value, .. } => Some(*value as i64),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Mod { .. } => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rat(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

#[track_caller]
fn same_modulus(a: u32, b: u32) -> u64 {
    assert_eq!(a, b, "scalar field mismatch: F_{a} vs F_{b}");
    a as u64
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $modop:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            #[track_caller]
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat($rat(a, b)),
                    (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                        let m = same_modulus(*p, *q);
                        Scalar::Mod { value: $modop(*a as u64, *b as u64, m) as u32, modulus: *p }
                    }
                    _ => panic!("scalar field mismatch: Q vs F_p"),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            #[track_caller]
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            #[track_caller]
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: u64, b: u64, m: u64| (a + b) % m);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: u64, b: u64, m: u64| (a + m - b) % m);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, |a: u64, b: u64, m: u64| a * b % m);

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[track_caller]
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    #[track_caller]
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    #[track_caller]
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    #[track_caller]
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}
