//! Exact arithmetic over the two supported discrete fields, the rationals and
//! prime fields `GF(p)`.
//!
//! A [`Field`] is a small copyable context; a [`Scalar`] carries enough of it
//! (the modulus, for residues) that the arithmetic operators work without
//! threading the context through every call. Mixing scalars of different
//! fields in one operation is a logic error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    modulus: Option<u64>,
}

impl Field {
    pub const RATIONALS: Field = Field { modulus: None };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    /// The prime field of order `p`. Primality is checked by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field { modulus: Some(p) })
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus.unwrap_or(0)
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn is_finite(&self) -> bool {
        self.modulus.is_some()
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self.modulus {
            None => Scalar::Rational(BigRational::from_integer(n.clone())),
            Some(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Residue {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den` in this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        Ok(&self.from_bigint(num) * &d.inv()?)
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        a.modulus() == self.modulus
    }

    /// Deterministic duplicate-free stream of scalars: `0, 1, -1, 2, -2, ...`
    /// over the rationals, `0, 1, ..., p - 1` (truncated at `count`) over `GF(p)`.
    pub fn enumerate_scalars(&self, count: usize) -> Vec<Scalar> {
        match self.modulus {
            None => (0..count)
                .map(|k| {
                    let k = k as i64;
                    let v = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
                    self.from_i64(v)
                })
                .collect(),
            Some(p) => (0..(count as u64).min(p))
                .map(|v| Scalar::Residue { value: v, modulus: p })
                .collect(),
        }
    }

    /// Every element when the field is finite, `None` otherwise.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.modulus
            .map(|p| self.enumerate_scalars(usize::try_from(p).unwrap_or(usize::MAX)))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => write!(f, "Q"),
            Some(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::rationals());
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("unknown field `{s}`, expected `Q` or `GF(p)`"))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| format!("bad modulus `{inner}`"))?;
        Field::prime(p).map_err(|e| e.to_string())
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`]. Rationals are kept in lowest terms with a positive
/// denominator and residues in `[0, p)`, so derived equality is semantic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        Field {
            modulus: self.modulus(),
        }
    }

    fn modulus(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Residue { modulus, .. } => Some(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::ZeroNotInvertible);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => {
                let (g, x, _) = ext_gcd_i128(*value as i128, *modulus as i128);
                debug_assert_eq!(g, 1);
                let m = *modulus as i128;
                Scalar::Residue {
                    value: x.rem_euclid(m) as u64,
                    modulus: *modulus,
                }
            }
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// A `p`-th root in characteristic `p`. Over `GF(p)` Frobenius is the
    /// identity, so every element is its own root.
    pub fn pth_root(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(_) => Err(Error::CharacteristicZero),
            Scalar::Residue { .. } => Ok(self.clone()),
        }
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(
            self.modulus(),
            other.modulus(),
            "scalar arithmetic across different fields"
        );
    }
}

fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd_i128(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

/// Renders `sum c_i * m_i` in the usual `a - b + c` style. Each monomial
/// string is empty for the constant term.
pub(crate) fn format_sum(terms: &[(Scalar, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (abs.is_one(), mono.is_empty()) {
            (_, true) => out.push_str(&abs.to_string()),
            (true, false) => out.push_str(mono),
            (false, false) => {
                out.push_str(&abs.to_string());
                out.push('*');
                out.push_str(mono);
            }
        }
    }
    out
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
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

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
