//! Exact field elements over ℚ or a prime field.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 101;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(Rat::Small(Ratio::from_integer(0))),
            Field::Prime(p) => Scalar::Mod { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(Rat::Small(Ratio::from_integer(n))),
            Field::Prime(p) => Scalar::Mod { v: n.rem_euclid(p as i64) as u32, p },
        }
    }

    /// `num / den`; `den` must be nonzero (and invertible mod p).
    pub fn ratio(self, num: i64, den: i64) -> Scalar {
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// Parses the serialized form: `"n"` or `"n/d"` for ℚ, a decimal for F_p.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let bad = || Error::ValidationError {
            object: "scalar".into(),
            detail: format!("cannot parse `{s}` over {self}"),
        };
        match self {
            Field::Rationals => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s.trim(), "1"),
                };
                let n = BigInt::from_str(n).map_err(|_| bad())?;
                let d = BigInt::from_str(d).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rat(Rat::from_big(BigRational::new(n, d))))
            }
            Field::Prime(p) => {
                let n = i128::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Scalar::Mod { v: n.rem_euclid(p as i128) as u32, p })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Field> {
        match s {
            "q" | "Q" => Ok(Field::Rationals),
            _ => match s.strip_prefix("fp:") {
                Some(p) => {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::Usage(format!("bad field `{s}`")))?;
                    Field::prime(p)
                }
                None => Err(Error::Usage(format!("bad field `{s}`; expected q or fp:<p>"))),
            },
        }
    }
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

/// Rational with a machine-word fast path. `Big` is only used when the value
/// does not fit in `Ratio<i64>`, so representations are canonical.
#[derive(Clone, Debug)]
pub enum Rat {
    Small(Ratio<i64>),
    Big(Box<BigRational>),
}

impl Rat {
    fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(r) => BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rat::Big(b) => (**b).clone(),
        }
    }

    fn from_big(b: BigRational) -> Rat {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(Ratio::new_raw(n, d)),
            _ => Rat::Big(Box::new(b)),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_zero(),
            Rat::Big(_) => false,
        }
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Rat) -> bool {
        match (self, other) {
            (Rat::Small(a), Rat::Small(b)) => a.numer() == b.numer() && a.denom() == b.denom(),
            (Rat::Big(a), Rat::Big(b)) => a == b,
            _ => false,
        }
    }
}
impl Eq for Rat {}

macro_rules! rat_op {
    ($name:ident, $checked:ident, $op:tt) => {
        fn $name(a: &Rat, b: &Rat) -> Rat {
            if let (Rat::Small(x), Rat::Small(y)) = (a, b) {
                if let Some(r) = x.$checked(y) {
                    return Rat::Small(r);
                }
            }
            Rat::from_big(a.to_big() $op b.to_big())
        }
    };
}
rat_op!(rat_add, checked_add, +);
rat_op!(rat_sub, checked_sub, -);
rat_op!(rat_mul, checked_mul, *);
rat_op!(rat_div, checked_div, /);

/// An exact scalar tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rat(Rat),
    Mod { v: u32, p: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(Rat::Small(r)) => r.is_one(),
            Scalar::Rat(Rat::Big(_)) => false,
            Scalar::Mod { v, .. } => *v == 1,
        }
    }

    #[inline]
    fn mismatch(&self, other: &Scalar) -> ! {
        panic!("field mismatch: {} vs {}", self.field(), other.field())
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(rat_add(a, b)),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => {
                Scalar::Mod { v: ((*a as u64 + *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => self.mismatch(o),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(rat_sub(a, b)),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => Scalar::Mod {
                v: ((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32,
                p: *p,
            },
            _ => self.mismatch(o),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(rat_mul(a, b)),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => {
                Scalar::Mod { v: ((*a as u64 * *b as u64) % *p as u64) as u32, p: *p }
            }
            _ => self.mismatch(o),
        }
    }

    /// Panics on division by zero.
    pub fn div(&self, o: &Scalar) -> Scalar {
        assert!(!o.is_zero(), "division by zero");
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(rat_div(a, b)),
            (Scalar::Mod { .. }, Scalar::Mod { .. }) => self.mul(&o.inv()),
            _ => self.mismatch(o),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(rat_sub(&Rat::Small(Ratio::from_integer(0)), a)),
            Scalar::Mod { v, p } => Scalar::Mod { v: (*p - *v) % *p, p: *p },
        }
    }

    /// Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rat(a) => Scalar::Rat(rat_div(&Rat::Small(Ratio::from_integer(1)), a)),
            Scalar::Mod { v, p } => {
                let (mut a, mut m) = (*v as i64, *p as i64);
                let (mut x0, mut x1) = (1i64, 0i64);
                while m != 0 {
                    let q = a / m;
                    (a, m) = (m, a - q * m);
                    (x0, x1) = (x1, x0 - q * x1);
                }
                Scalar::Mod { v: x0.rem_euclid(*p as i64) as u32, p: *p }
            }
        }
    }

    /// Serialized form: `"n"`/`"n/d"` over ℚ, decimal over F_p.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl PartialOrd for Scalar {
    /// Only meaningful over ℚ; used for deterministic output ordering.
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Some(a.to_big().cmp(&b.to_big())),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) if p == q => Some(a.cmp(b)),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(Rat::Small(r)) => {
                if *r.denom() == 1 {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Rat(Rat::Big(b)) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
            Scalar::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let q = Field::Rationals;
        let x = q.ratio(6, -4);
        assert_eq!(x.to_text(), "-3/2");
        assert_eq!(q.parse("4/2").unwrap().to_text(), "2");
    }

    #[test]
    fn overflow_falls_back_to_big() {
        let q = Field::Rationals;
        let big = q.from_i64(i64::MAX);
        let sq = big.mul(&big);
        assert_eq!(sq.div(&big), big);
        assert_eq!(sq.to_text(), "85070591730234615847396907784232501249");
        assert_eq!(sq.sub(&sq), q.zero());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(101).unwrap();
        for n in 1..101 {
            let x = f.from_i64(n);
            assert!(x.mul(&x.inv()).is_one());
        }
        assert_eq!(f.from_i64(-1).to_text(), "100");
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("fp:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("fp:8".parse::<Field>().is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = Field::Rationals.one().add(&Field::Prime(5).one());
    }
}
