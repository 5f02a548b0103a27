//! Exact scalars over `Q` or a prime field `GF(p)`.
//!
//! A [`Scalar`] always knows which field it lives in. Arithmetic between
//! scalars of different fields is rejected: the `checked_*` methods return
//! [`LinalgError::FieldMismatch`], and the operator impls panic. Matrix and
//! algebra code validates fields at construction time and then uses the
//! operators freely.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::LinalgError;

/// Largest modulus accepted for `GF(p)`. Residue products are formed in
/// `u128`, and primality is decided by trial division.
pub const MAX_MODULUS: u64 = 1 << 32;

/// A validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if !(2..=MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Modulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
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

/// The ground field: the rationals or `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(Modulus),
}

impl Field {
    pub fn gf(p: u64) -> Result<Self, LinalgError> {
        Modulus::new(p).map(Field::Prime)
    }

    /// Zero for `Q`, `p` for `GF(p)`.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(m) => m.get(),
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_int(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_int(self, 1)
    }

    /// Every element of a prime field, in residue order. `None` over `Q`.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(m) => Some(
                (0..m.get())
                    .map(|residue| Scalar::Prime { residue, modulus: m })
                    .collect(),
            ),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(m) => write!(f, "GF({})", m.get()),
        }
    }
}

/// An element of [`Field`]. Rationals are kept in lowest terms with a
/// positive denominator (guaranteed by `BigRational`); residues lie in
/// `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { residue: u64, modulus: Modulus },
}

impl Scalar {
    pub fn from_int(field: Field, n: i64) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(m) => Scalar::Prime {
                residue: n.rem_euclid(m.get() as i64) as u64,
                modulus: m,
            },
        }
    }

    pub fn from_bigint(field: Field, n: &BigInt) -> Scalar {
        match field {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(m) => {
                let r = n.mod_floor(&BigInt::from(m.get()));
                Scalar::Prime {
                    residue: r.to_u64().expect("residue below modulus"),
                    modulus: m,
                }
            }
        }
    }

    /// `num / den` in `field`. Fails when `den` vanishes in the field, which
    /// over `GF(p)` includes every multiple of `p`.
    pub fn from_ratio(field: Field, num: &BigInt, den: &BigInt) -> Result<Scalar, LinalgError> {
        if den.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        match field {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(_) => {
                Scalar::from_bigint(field, num).checked_div(&Scalar::from_bigint(field, den))
            }
        }
    }

    /// Parses `"3"`, `"-1/2"` and similar. Decimal points and exponents are
    /// rejected so that every accepted literal denotes an exact value.
    pub fn parse(field: Field, text: &str) -> Result<Scalar, LinalgError> {
        let parse_err = |reason: &str| LinalgError::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let s = text.trim();
        if s.is_empty() {
            return Err(parse_err("empty scalar"));
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let int = |part: &str| -> Result<BigInt, LinalgError> {
            let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err("expected an integer or a ratio of integers"));
            }
            part.parse::<BigInt>()
                .map_err(|_| parse_err("expected an integer or a ratio of integers"))
        };
        let num = int(num)?;
        let den = int(den)?;
        if den.is_zero() {
            return Err(parse_err("zero denominator"));
        }
        Scalar::from_ratio(field, &num, &den).map_err(|_| parse_err("denominator vanishes in the field"))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { residue, .. } => *residue == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), LinalgError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(LinalgError::FieldMismatch {
                left: self.field(),
                right: other.field(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { residue: a, modulus }, Scalar::Prime { residue: b, .. }) => {
                let p = modulus.get();
                Scalar::Prime {
                    residue: ((*a as u128 + *b as u128) % p as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        self.same_field(other)?;
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { residue: a, modulus }, Scalar::Prime { residue: b, .. }) => {
                Scalar::Prime {
                    residue: ((*a as u128 * *b as u128) % modulus.get() as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, LinalgError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Prime { residue, modulus } => {
                // Fermat: r^(p-2) = r^-1
                let p = modulus.get();
                let mut base = *residue as u128;
                let mut exp = p - 2;
                let mut acc = 1u128;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p as u128;
                    }
                    base = base * base % p as u128;
                    exp >>= 1;
                }
                Scalar::Prime {
                    residue: acc as u64,
                    modulus: *modulus,
                }
            }
        })
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Integer value when the scalar is a rational integer, `None` otherwise.
    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { residue, .. } => write!(f, "{residue}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime { residue, modulus } => Scalar::Prime {
                residue: (modulus.get() - residue) % modulus.get(),
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

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$checked(&rhs).expect("scalar field mismatch")
            }
        }

        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$checked(rhs).expect("scalar field mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Scalar {
        Scalar::parse(Field::Rational, s).unwrap()
    }

    #[test]
    fn rationals_stay_reduced() {
        let sum = q("1/6") + q("1/3");
        assert_eq!(sum.to_string(), "1/2");
        assert_eq!(q("4/-8").to_string(), "-1/2");
        assert_eq!(q("-3/-9").to_string(), "1/3");
    }

    #[test]
    fn parse_rejects_inexact_literals() {
        for bad in ["1.5", "1e3", "", "/2", "3/", "1/0", "0x10", "--1"] {
            assert!(Scalar::parse(Field::Rational, bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn prime_field_parsing_reduces() {
        let f = Field::gf(7).unwrap();
        assert_eq!(Scalar::parse(f, "-1").unwrap().to_string(), "6");
        // 1/2 = 4 in GF(7)
        assert_eq!(Scalar::parse(f, "1/2").unwrap().to_string(), "4");
        assert!(Scalar::parse(f, "1/14").is_err());
    }

    #[test]
    fn non_primes_are_rejected() {
        for p in [0, 1, 4, 9, 15, 91] {
            assert_eq!(Field::gf(p), Err(LinalgError::NotPrime(p)));
        }
        assert!(Field::gf(2).is_ok());
        assert!(Field::gf(101).is_ok());
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let a = Field::gf(5).unwrap().one();
        let b = Field::gf(7).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(LinalgError::FieldMismatch { .. })));
        assert!(Field::Rational.one().checked_mul(&a).is_err());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Field::Rational.zero().inv(), Err(LinalgError::DivisionByZero));
        assert_eq!(Field::gf(3).unwrap().zero().inv(), Err(LinalgError::DivisionByZero));
    }

    #[test]
    fn gf_matches_integer_arithmetic_on_seeded_triples() {
        // 1000 triples from a fixed LCG, compared against i128 arithmetic mod p.
        let mut state: u64 = 0x2545_f491_4f6c_dd1d;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for _ in 0..1000 {
            let p = [2u64, 3, 5, 7, 11, 101, 65521][(next() % 7) as usize];
            let f = Field::gf(p).unwrap();
            let (a, b, c) = (next() as i64 - (1 << 30), next() as i64, next() as i64 - (1 << 29));
            let (sa, sb, sc) = (Scalar::from_int(f, a), Scalar::from_int(f, b), Scalar::from_int(f, c));
            let m = p as i128;
            let expect = |v: i128| Scalar::from_int(f, v.rem_euclid(m) as i64);
            assert_eq!(&(&sa * &sb) + &sc, expect(a as i128 * b as i128 + c as i128));
            assert_eq!(&sa - &sc, expect(a as i128 - c as i128));
            if !sb.is_zero() {
                assert_eq!(&(&sa * &sb).checked_div(&sb).unwrap(), &sa);
            }
        }
    }

    proptest! {
        #[test]
        fn rational_sums_are_reduced(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let x = Scalar::from_ratio(Field::Rational, &a.into(), &b.into()).unwrap();
            let y = Scalar::from_ratio(Field::Rational, &c.into(), &d.into()).unwrap();
            let Scalar::Rational(s) = &x + &y else { unreachable!() };
            prop_assert!(s.denom().is_positive());
            prop_assert!(s.numer().gcd(s.denom()).is_one());
            prop_assert_eq!(Scalar::parse(Field::Rational, &(&x + &y).to_string()).unwrap(), &x + &y);
        }
    }
}
