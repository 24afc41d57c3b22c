//! Exact scalars over ℚ and 𝔽_p.
//!
//! A [`Scalar`] is a reduced fraction. Small values live inline as a pair of
//! machine integers; anything that overflows is promoted to a big rational
//! and demoted again as soon as it fits. Elements of 𝔽_p are stored as the
//! canonical residue in `[0, p)` with denominator 1, and every operation goes
//! through a [`Field`] value which performs the reduction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported prime modulus; products of two residues must fit in i64.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    // numerator, denominator > 0, gcd 1
    Small(i64, i64),
    // only used when one of the parts does not fit in i64
    Big(BigRational),
}

impl Scalar {
    pub const fn zero() -> Self {
        Scalar(Repr::Small(0, 1))
    }

    pub const fn one() -> Self {
        Scalar(Repr::Small(1, 1))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(Repr::Small(n, 1))
    }

    /// Builds `num/den` in lowest terms. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    /// Returns the value as an integer if the denominator is 1 and it fits.
    pub fn as_i64(&self) -> Option<i64> {
        match self.0 {
            Repr::Small(n, 1) => Some(n),
            _ => None,
        }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let (mut n, mut d) = (num, den);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(BigRational::new(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    fn q_add(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Self::from_i128(a + c, b)
                } else {
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    fn q_mul(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    fn q_neg(&self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Scalar(Repr::Small(m, *d)),
                None => Self::from_big(-self.to_big()),
            },
            Repr::Big(r) => Self::from_big(-r.clone()),
        }
    }

    fn q_inv(&self) -> Option<Scalar> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(r) => Some(Self::from_big(r.recip())),
        }
    }

    fn parse_rational(literal: &str) -> Result<Scalar> {
        let bad = |reason: &str| Error::ParseScalar {
            literal: literal.to_string(),
            reason: reason.to_string(),
        };
        let s = literal.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("numerator is not an integer"))?;
        let den: BigInt = den.parse().map_err(|_| bad("denominator is not an integer"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(Self::from_big(BigRational::new(num, den)))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// The ground field: ℚ or 𝔽_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u32),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p > MAX_PRIME {
            return Err(Error::InvalidField(format!("{p} exceeds the supported modulus {MAX_PRIME}")));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p as u64,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::from_int(n),
            Field::Prime(p) => Scalar::from_int(n.rem_euclid(*p as i64)),
        }
    }

    /// Maps an arbitrary rational into this field (fails if the denominator
    /// vanishes mod p).
    pub fn embed(&self, x: &Scalar) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(x.clone()),
            Field::Prime(p) => {
                let big = x.to_big();
                let p_big = BigInt::from(*p);
                let num = big.numer().mod_floor(&p_big).to_i64().unwrap();
                let den = big.denom().mod_floor(&p_big).to_i64().unwrap();
                if den == 0 {
                    return Err(Error::ParseScalar {
                        literal: x.to_string(),
                        reason: format!("denominator divisible by {p}"),
                    });
                }
                let inv = self.inv(&Scalar::from_int(den)).expect("nonzero residue");
                Ok(self.mul(&Scalar::from_int(num), &inv))
            }
        }
    }

    /// Parses an exact literal `"n"` or `"n/d"`.
    pub fn parse(&self, literal: &str) -> Result<Scalar> {
        let q = Scalar::parse_rational(literal)?;
        self.embed(&q)
    }

    fn residue(x: &Scalar) -> i64 {
        match x.0 {
            Repr::Small(n, 1) => n,
            _ => panic!("non-canonical prime field element {x}"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a.q_add(b),
            Field::Prime(p) => {
                let s = Self::residue(a) + Self::residue(b);
                let p = *p as i64;
                Scalar::from_int(if s >= p { s - p } else { s })
            }
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a.q_neg(),
            Field::Prime(p) => {
                let r = Self::residue(a);
                Scalar::from_int(if r == 0 { 0 } else { *p as i64 - r })
            }
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => {
                if a.is_zero() || b.is_zero() {
                    Scalar::zero()
                } else if a.is_one() {
                    b.clone()
                } else if b.is_one() {
                    a.clone()
                } else {
                    a.q_mul(b)
                }
            }
            Field::Prime(p) => Scalar::from_int(Self::residue(a) * Self::residue(b) % *p as i64),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match self {
            Field::Rationals => a.q_inv(),
            Field::Prime(p) => {
                let r = Self::residue(a);
                if r == 0 {
                    return None;
                }
                let p = *p as i64;
                // extended Euclid on (r, p)
                let (mut t, mut new_t) = (0i64, 1i64);
                let (mut rr, mut new_r) = (p, r);
                while new_r != 0 {
                    let q = rr / new_r;
                    (t, new_t) = (new_t, t - q * new_t);
                    (rr, new_r) = (new_r, rr - q * new_r);
                }
                Some(Scalar::from_int(t.rem_euclid(p)))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `acc += coef * x`
    pub fn add_mul_assign(&self, acc: &mut Scalar, coef: &Scalar, x: &Scalar) {
        let prod = self.mul(coef, x);
        *acc = self.add(acc, &prod);
    }

    pub fn label(&self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => format!("Fp:{p}"),
        }
    }

    /// Parses `Q` or `Fp:p` (also accepts `F2`-style shorthands).
    pub fn from_label(label: &str) -> Result<Field> {
        let s = label.trim();
        if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("rationals") {
            return Ok(Field::Rationals);
        }
        let digits = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("fp:"))
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| Error::InvalidField(s.to_string()))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(s.to_string()))?;
        Field::prime(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_overflow_promotes_and_demotes() {
        let q = Field::Rationals;
        let big = Scalar::from_int(i64::MAX);
        let sq = q.mul(&big, &big);
        assert!(sq.as_i64().is_none());
        let back = q.div(&sq, &big).unwrap();
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(_, _)));
    }

    #[test]
    fn rational_literals() {
        let q = Field::Rationals;
        assert_eq!(q.parse("6/4").unwrap(), Scalar::ratio(3, 2));
        assert_eq!(q.parse("-3").unwrap(), Scalar::from_int(-3));
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
        assert_eq!(Scalar::ratio(-6, 4).to_string(), "-3/2");
    }

    #[test]
    fn prime_field_inverse_and_literals() {
        let f = Field::prime(7).unwrap();
        for a in 1..7 {
            let x = f.from_int(a);
            let inv = f.inv(&x).unwrap();
            assert!(f.mul(&x, &inv).is_one());
        }
        assert_eq!(f.parse("1/2").unwrap(), f.from_int(4));
        assert!(Field::prime(2).unwrap().parse("1/2").is_err());
        assert_eq!(f.neg(&f.from_int(3)), f.from_int(4));
    }

    #[test]
    fn field_labels() {
        assert_eq!(Field::from_label("Q").unwrap(), Field::Rationals);
        assert_eq!(Field::from_label("Fp:5").unwrap(), Field::Prime(5));
        assert_eq!(Field::from_label("F2").unwrap(), Field::Prime(2));
        assert!(Field::from_label("Fp:4").is_err());
        assert!(Field::prime(MAX_PRIME + 2).is_err());
    }

    #[test]
    fn char_two_skew_is_symmetric() {
        let f = Field::prime(2).unwrap();
        let one = f.one();
        assert_eq!(f.neg(&one), one);
        assert!(f.add(&one, &one).is_zero());
    }
}
