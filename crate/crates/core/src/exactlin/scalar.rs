//! Exact scalars: arbitrary-precision rationals and residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Largest modulus accepted for `F_p`; products of two residues must fit in a `u128` with room
/// to spare, and primality is checked by trial division.
pub const MAX_PRIME: u64 = 1 << 31;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FieldRepr", into = "FieldRepr")]
pub enum Field {
    /// The rationals.
    Rational,
    /// The prime field `F_p`.
    Prime(u64),
}

#[derive(Serialize, Deserialize)]
enum FieldRepr {
    Q,
    Fp(u64),
}

impl From<Field> for FieldRepr {
    fn from(f: Field) -> Self {
        match f {
            Field::Rational => FieldRepr::Q,
            Field::Prime(p) => FieldRepr::Fp(p),
        }
    }
}

impl TryFrom<FieldRepr> for Field {
    type Error = LinalgError;
    fn try_from(r: FieldRepr) -> Result<Self, Self::Error> {
        match r {
            FieldRepr::Q => Ok(Field::Rational),
            FieldRepr::Fp(p) => Field::prime(p),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// `F_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// Short name used in corpus identifiers: `Q`, `F2`, `F3`, ...
    pub fn short_name(&self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("F{p}"),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = LinalgError;

    /// Accepts `Q`, `Fp:<p>` and `F<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" || s == "q" {
            return Ok(Field::Rational);
        }
        let digits = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("F"))
            .ok_or_else(|| LinalgError::Parse(format!("unknown field `{s}`")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| LinalgError::Parse(format!("bad modulus in field `{s}`")))?;
        Field::prime(p)
    }
}

/// An element of a [`Field`].
///
/// Rationals are kept in lowest terms with positive denominator (guaranteed by
/// [`BigRational`]); residues lie in `[0, modulus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc = 1u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue {
                value: 0,
                modulus: p,
            },
        }
    }

    pub fn one(field: Field) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::one()),
            Field::Prime(p) => Scalar::Residue {
                value: 1 % p,
                modulus: p,
            },
        }
    }

    pub fn from_i64(field: Field, n: i64) -> Scalar {
        Scalar::from_bigint(field, &BigInt::from(n))
    }

    pub fn from_bigint(field: Field, n: &BigInt) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => Scalar::Residue {
                value: reduce_bigint(n, p),
                modulus: p,
            },
        }
    }

    /// `num/den` in `field`; `None` when `den` vanishes in the field.
    pub fn from_fraction(field: Field, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        if den.is_zero() {
            return None;
        }
        match field {
            Field::Rational => Some(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(_) => {
                let d = Scalar::from_bigint(field, den).inv()?;
                Some(&Scalar::from_bigint(field, num) * &d)
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Parses `n`, `-n`, or `n/d`, reducing into the field.
    pub fn parse(field: Field, s: &str) -> Result<Scalar, LinalgError> {
        let s = s.trim();
        let bad = || LinalgError::Parse(format!("`{s}` is not a scalar"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<BigInt>().map_err(|_| bad())?,
                d.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        Scalar::from_fraction(field, &num, &den)
            .ok_or_else(|| LinalgError::Parse(format!("denominator of `{s}` vanishes in {field}")))
    }

    /// Serialized form: `num/den` over `Q`, a decimal residue over `F_p`.
    pub fn to_wire(&self) -> String {
        match self {
            Scalar::Rational(q) => format!("{}/{}", q.numer(), q.denom()),
            Scalar::Residue { value, .. } => value.to_string(),
        }
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "scalar arithmetic across different fields"
        );
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
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

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
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
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Scalar {
    /// `self += a * b` without intermediate clones for the rational case.
    pub(crate) fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::Rational(acc), Scalar::Rational(x), Scalar::Rational(y)) => {
                if x.is_one() {
                    *acc += y;
                } else if y.is_one() {
                    *acc += x;
                } else {
                    *acc += x * y;
                }
            }
            (
                Scalar::Residue { value, modulus },
                Scalar::Residue { value: x, .. },
                Scalar::Residue { value: y, .. },
            ) => {
                let m = *modulus as u128;
                *value = ((*value as u128 + (*x as u128 * *y as u128) % m) % m) as u64;
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let q = Scalar::parse(Field::Rational, "6/-4").unwrap();
        assert_eq!(q.to_wire(), "-3/2");
        assert_eq!(q.to_string(), "-3/2");
    }

    #[test]
    fn residues_stay_reduced() {
        let f = Field::prime(3).unwrap();
        let a = Scalar::from_i64(f, -1);
        assert_eq!(
            a,
            Scalar::Residue {
                value: 2,
                modulus: 3
            }
        );
        assert!((&a + &Scalar::one(f)).is_zero());
        assert_eq!(a.inv().unwrap(), a);
        assert_eq!(Scalar::parse(f, "1/2").unwrap(), a);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!("Fp:9".parse::<Field>().is_err());
        assert_eq!("Fp:5".parse::<Field>().unwrap(), Field::Prime(5));
        assert_eq!("F2".parse::<Field>().unwrap(), Field::Prime(2));
    }

    #[test]
    fn zero_denominator_in_fp() {
        let f = Field::prime(2).unwrap();
        assert!(Scalar::parse(f, "1/2").is_err());
    }

    #[test]
    fn field_serde_shape() {
        assert_eq!(serde_json::to_string(&Field::Rational).unwrap(), "\"Q\"");
        assert_eq!(
            serde_json::to_string(&Field::Prime(3)).unwrap(),
            "{\"Fp\":3}"
        );
        let f: Field = serde_json::from_str("{\"Fp\":7}").unwrap();
        assert_eq!(f, Field::Prime(7));
        assert!(serde_json::from_str::<Field>("{\"Fp\":8}").is_err());
    }
}
