//! Exact scalars: arbitrary-precision rationals and residues modulo a prime.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest prime modulus accepted; residues are multiplied in `u128`.
pub const MAX_PRIME: u64 = 1 << 31;

/// The base field of every structure in the kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime { p: u64 },
}

impl Field {
    /// Builds `F_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::input(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime { p })
    }

    /// Zero for rationals, `p` otherwise.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::zero()),
            Field::Prime { p } => Scalar::Residue { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime { p } => Scalar::Residue {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// `num / den`; panics on a zero denominator (or one divisible by `p`).
    pub fn frac(&self, num: i64, den: i64) -> Scalar {
        let d = self.from_i64(den).inv().expect("denominator must be invertible");
        self.from_i64(num) * d
    }

    /// Parses the shared scalar string format: `"3"`, `"-1/2"`, or a residue.
    /// Over `F_p` any integer or fraction is reduced to its canonical residue.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num = BigInt::from_str(num).map_err(|_| Error::input(format!("bad scalar {s:?}")))?;
        let den = match den {
            Some(d) => BigInt::from_str(d).map_err(|_| Error::input(format!("bad scalar {s:?}")))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::input(format!("zero denominator in {s:?}")));
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime { p } => {
                let reduce = |x: &BigInt| -> u64 {
                    let m = BigInt::from(*p);
                    (((x % &m) + &m) % &m).to_u64().expect("residue fits")
                };
                let n = Scalar::Residue {
                    value: reduce(&num),
                    modulus: *p,
                };
                let d = Scalar::Residue {
                    value: reduce(&den),
                    modulus: *p,
                };
                let d = d
                    .inv()
                    .ok_or_else(|| Error::input(format!("denominator of {s:?} vanishes mod {p}")))?;
                Ok(n * d)
            }
        }
    }

    /// Parses `"Q"`, `"rational"`, `"F5"` or `"p5"`.
    pub fn from_name(name: &str) -> Result<Field> {
        let n = name.trim();
        match n {
            "Q" | "q" | "rational" | "QQ" => Ok(Field::Rational),
            _ => {
                let digits = n
                    .strip_prefix('F')
                    .or_else(|| n.strip_prefix("GF"))
                    .or_else(|| n.strip_prefix('p'))
                    .ok_or_else(|| Error::input(format!("unknown field {name:?}")))?;
                let p: u64 = digits
                    .parse()
                    .map_err(|_| Error::input(format!("unknown field {name:?}")))?;
                Field::prime(p)
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime { p } => format!("F{p}"),
        }
    }

    /// True when `s` lives in this field.
    pub fn owns(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rational, Scalar::Rational(_)) => true,
            (Field::Prime { p }, Scalar::Residue { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
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

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime { p: *modulus },
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

    /// Borrowing accumulate: `self += a * b`.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (self, a, b) {
            (Scalar::Rational(s), Scalar::Rational(x), Scalar::Rational(y)) => {
                *s += x * y;
            }
            (
                Scalar::Residue { value, modulus },
                Scalar::Residue { value: x, .. },
                Scalar::Residue { value: y, .. },
            ) => {
                let m = *modulus as u128;
                *value = ((*value as u128 + (*x as u128 * *y as u128) % m) % m) as u64;
            }
            _ => panic!("field mismatch"),
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, modulus: m2 }) => {
                assert_eq!(modulus, m2, "field mismatch");
                Scalar::Residue {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => panic!("field mismatch"),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, modulus: m2 }) => {
                assert_eq!(modulus, m2, "field mismatch");
                Scalar::Residue {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => panic!("field mismatch"),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Sign of a rational scalar (residues count as non-negative).
pub fn is_negative(s: &Scalar) -> bool {
    matches!(s, Scalar::Rational(q) if q.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_display_is_canonical() {
        let q = Field::Rational;
        assert_eq!(q.frac(2, -4).to_string(), "-1/2");
        assert_eq!(q.frac(6, 3).to_string(), "2");
        assert_eq!(q.parse("4/6").unwrap().to_string(), "2/3");
        assert_eq!(q.parse(" -3 ").unwrap(), q.from_i64(-3));
    }

    #[test]
    fn residues_reduce_mod_p() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.from_i64(-1).to_string(), "4");
        assert_eq!(f5.parse("1/2").unwrap().to_string(), "3");
        assert_eq!(f5.parse("7").unwrap().to_string(), "2");
        assert!(f5.parse("1/5").is_err());
        assert_eq!(f5.from_i64(2).inv().unwrap(), f5.from_i64(3));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::from_name("F9").is_err());
        assert_eq!(Field::from_name("F7").unwrap(), Field::Prime { p: 7 });
        assert_eq!(Field::from_name("Q").unwrap(), Field::Rational);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Field::Rational.zero().inv().is_none());
        assert!(Field::prime(3).unwrap().zero().inv().is_none());
    }

    #[test]
    fn add_mul_accumulates() {
        let q = Field::Rational;
        let mut acc = q.from_i64(1);
        acc.add_mul(&q.frac(1, 2), &q.from_i64(4));
        assert_eq!(acc, q.from_i64(3));
        let f3 = Field::prime(3).unwrap();
        let mut acc = f3.from_i64(2);
        acc.add_mul(&f3.from_i64(2), &f3.from_i64(2));
        assert_eq!(acc, f3.zero());
    }
}
