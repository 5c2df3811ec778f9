//! Exact scalars: arbitrary-precision rationals and prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The ground field shared by every scalar of one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    PrimeField { p: u64 },
}

/// Largest modulus accepted; keeps products of residues inside `u64`.
const MAX_MODULUS: u64 = 1 << 31;

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, Error> {
        if !(2..MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField { p })
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(Rational::Small(Ratio::from_integer(n))),
            FieldSpec::PrimeField { p } => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num/den` in this field; fails when `den` vanishes.
    pub fn ratio(&self, num: i64, den: i64) -> Result<Scalar, Error> {
        let d = self.int(den);
        let inv = d
            .inverse()
            .ok_or_else(|| Error::InvalidScalar(format!("{num}/{den}: denominator is zero in {self}")))?;
        Ok(&self.int(num) * &inv)
    }

    /// Parses `"3"`, `"-3/2"` and similar. Arbitrarily large integers are accepted.
    pub fn parse(&self, text: &str) -> Result<Scalar, Error> {
        let text = text.trim();
        let bad = || Error::InvalidScalar(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(text).map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::InvalidScalar(format!("{text}: zero denominator")));
        }
        match *self {
            FieldSpec::Rationals => Ok(Scalar::Rational(Rational::from_big(BigRational::new(num, den)))),
            FieldSpec::PrimeField { p } => {
                let reduce = |n: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((n % &m) + &m) % &m;
                    r.to_u64().expect("residue fits in u64")
                };
                let n = Scalar::Modular { value: reduce(&num), modulus: p };
                let d = Scalar::Modular { value: reduce(&den), modulus: p };
                let inv = d
                    .inverse()
                    .ok_or_else(|| Error::InvalidScalar(format!("{text}: denominator vanishes mod {p}")))?;
                Ok(&n * &inv)
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::PrimeField { p }, Scalar::Modular { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { p } => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rational number with an allocation-free fast path.
///
/// Canonical form: `Big` is used only when the value does not fit `Ratio<i64>`,
/// so derived equality and hashing are value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rational {
    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Rational::Small(Ratio::new_raw(n, d)),
            _ => Rational::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rational::Big(r) => r.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_zero(),
            Rational::Big(r) => r.is_zero(),
        }
    }

    fn add(&self, other: &Self) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, other) {
            if let Some(c) = a.checked_add(b) {
                return Rational::Small(c);
            }
        }
        Rational::from_big(self.to_big() + other.to_big())
    }

    fn sub(&self, other: &Self) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, other) {
            if let Some(c) = a.checked_sub(b) {
                return Rational::Small(c);
            }
        }
        Rational::from_big(self.to_big() - other.to_big())
    }

    fn mul(&self, other: &Self) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (self, other) {
            if let Some(c) = a.checked_mul(b) {
                return Rational::Small(c);
            }
        }
        Rational::from_big(self.to_big() * other.to_big())
    }

    fn neg(&self) -> Self {
        match self {
            Rational::Small(r) => match r.numer().checked_neg() {
                Some(n) => Rational::Small(Ratio::new_raw(n, *r.denom())),
                None => Rational::from_big(-self.to_big()),
            },
            Rational::Big(r) => Rational::from_big(-r.clone()),
        }
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rational::Small(r) => {
                let (n, d) = (*r.numer(), *r.denom());
                if n < 0 {
                    match (d.checked_neg(), n.checked_neg()) {
                        (Some(d), Some(n)) => Rational::Small(Ratio::new_raw(d, n)),
                        _ => Rational::from_big(self.to_big().recip()),
                    }
                } else {
                    Rational::Small(Ratio::new_raw(d, n))
                }
            }
            Rational::Big(r) => Rational::from_big(r.recip()),
        })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(r) => write!(f, "{r}"),
            Rational::Big(r) => write!(f, "{r}"),
        }
    }
}

/// An element of a [`FieldSpec`]. Arithmetic between different fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::PrimeField { p: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => r.inverse().map(Scalar::Rational),
            Scalar::Modular { value, modulus } => {
                if *value == 0 {
                    return None;
                }
                // Fermat: v^(p-2)
                let (mut base, mut exp, mut acc) = (*value, modulus - 2, 1u64);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % modulus;
                    }
                    base = base * base % modulus;
                    exp >>= 1;
                }
                Some(Scalar::Modular { value: acc, modulus: *modulus })
            }
        }
    }

    /// Sign of a rational scalar; residues are treated as non-negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(Rational::Small(r)) => r.is_negative(),
            Scalar::Rational(Rational::Big(r)) => r.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalars from different fields: {} and {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.add(b)),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                Scalar::Modular { value: (a + b) % p, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.sub(b)),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                Scalar::Modular { value: (a + p - b) % p, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a.mul(b)),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                Scalar::Modular { value: a * b % p, modulus: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(a.neg()),
            Scalar::Modular { value, modulus } => Scalar::Modular { value: (modulus - value) % modulus, modulus: *modulus },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_scalars_mod_five() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(&f5.int(3) * &f5.int(4), f5.int(2));
        assert_eq!(f5.int(2).inverse(), Some(f5.int(3)));
        assert_eq!(f5.parse("1/2").unwrap(), f5.int(3));
        assert_eq!(f5.parse("-1").unwrap(), f5.int(4));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(matches!(FieldSpec::prime(9), Err(Error::NotPrime(9))));
        assert!(FieldSpec::prime(2).is_ok());
    }

    #[test]
    fn small_path_overflows_into_bigint() {
        let q = FieldSpec::Rationals;
        let big = q.int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Rational(Rational::Big(_))));
        let back = &sq * &big.inverse().unwrap();
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Rational(Rational::Small(_))));
        assert_eq!(q.parse("170141183460469231731687303715884105727").unwrap().to_string(), "170141183460469231731687303715884105727");
    }

    #[test]
    fn parse_fractions() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse("6/4").unwrap(), q.ratio(3, 2).unwrap());
        assert_eq!(q.parse(" -1/2 ").unwrap().to_string(), "-1/2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(f3.parse("1/3").is_err());
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixing_fields_panics() {
        let _ = &FieldSpec::Rationals.one() + &FieldSpec::prime(3).unwrap().one();
    }
}
