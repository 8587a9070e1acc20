//! Exact scalar fields: prime fields GF(p) and the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{FoveaError, Result};

pub const DEFAULT_PRIME: u64 = 32749;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u64),
    Rational,
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(DEFAULT_PRIME)
    }
}

/// A field element. Prime-field elements carry their modulus so arithmetic
/// needs no context; mixing elements of different fields panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { v: u64, p: u64 },
    Q(BigRational),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(FoveaError::Field(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `q`, `gf <p>`, `gf:<p>` or a bare prime.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(Field::Rational);
        }
        let rest = s
            .strip_prefix("gf:")
            .or_else(|| s.strip_prefix("gf "))
            .or_else(|| s.strip_prefix("gf"))
            .unwrap_or(s)
            .trim();
        let p: u64 = rest
            .parse()
            .map_err(|_| FoveaError::Field(format!("cannot parse field `{s}`")))?;
        Field::prime(p)
    }

    /// Characteristic, 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp { v: 0, p: *p },
            Field::Rational => Scalar::Q(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp { v: 1 % p, p: *p },
            Field::Rational => Scalar::Q(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Fp {
                v: n.rem_euclid(*p as i64) as u64,
                p: *p,
            },
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// Parses an integer or a fraction `a/b`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || FoveaError::Field(format!("cannot parse scalar `{s}`"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let red = |x: &BigInt| -> u64 {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u64().unwrap()
                };
                let d = Scalar::Fp {
                    v: red(&den),
                    p: *p,
                };
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Fp {
                    v: red(&num),
                    p: *p,
                } * d.inv())
            }
            Field::Rational => Ok(Scalar::Q(BigRational::new(num, den))),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Field::Prime(p) => format!("gf:{p}"),
            Field::Rational => "q".to_string(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "gf {p}"),
            Field::Rational => write!(f, "q"),
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Fp { p, .. } => Field::Prime(*p),
            Scalar::Q(_) => Field::Rational,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Fp { v, p } => {
                assert!(*v != 0, "inverse of zero");
                Scalar::Fp {
                    v: pow_mod(*v, p - 2, *p),
                    p: *p,
                }
            }
            Scalar::Q(q) => Scalar::Q(q.recip()),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut r = self.field().one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        r
    }

    /// Rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp { .. } => None,
        }
    }

    /// Integer value of a prime-field element in `[0, p)`.
    pub fn as_residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp { v, .. } => Some(*v),
            Scalar::Q(_) => None,
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { v, .. } => write!(f, "{v}"),
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $fp:expr, $q:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                        assert_eq!(p, q, "mixed prime fields");
                        Scalar::Fp {
                            v: $fp(*a, *b, *p),
                            p: *p,
                        }
                    }
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q($q(a, b)),
                    _ => panic!("mixed fields in arithmetic"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: u64, b: u64, p: u64| (a + b) % p,
    |a: &BigRational, b: &BigRational| a + b
);
binop!(
    Sub,
    sub,
    |a: u64, b: u64, p: u64| (a + p - b) % p,
    |a: &BigRational, b: &BigRational| a - b
);
binop!(
    Mul,
    mul,
    |a: u64, b: u64, p: u64| a * b % p,
    |a: &BigRational, b: &BigRational| a * b
);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Fp { v, p } => Scalar::Fp {
                v: (p - v) % p,
                p: *p,
            },
            Scalar::Q(q) => Scalar::Q(-q),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(&a + &b, f.from_i64(1));
        assert_eq!(&a * &b, f.from_i64(1));
        assert_eq!((&a * &a.inv()), f.one());
        assert_eq!(-&a, f.from_i64(4));
        assert_eq!(f.parse_scalar("1/3").unwrap(), f.from_i64(5));
    }

    #[test]
    fn rejects_composite() {
        assert!(Field::prime(15).is_err());
        assert!(Field::parse("gf:32749").is_ok());
        assert_eq!(Field::parse("q").unwrap(), Field::Rational);
    }

    #[test]
    fn rational_display() {
        let f = Field::Rational;
        let x = f.parse_scalar("-2/4").unwrap();
        assert_eq!(x.to_string(), "-1/2");
        assert_eq!((&x * &f.from_i64(-2)).to_string(), "1");
    }
}
