use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact signed integer: a machine word while it fits, arbitrary precision
/// once a checked operation would overflow. Never wraps.
///
/// The representation is normalized (`Big` only holds values outside the
/// `i64` range), so derived equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CharValue {
    Small(i64),
    Big(BigInt),
}

impl CharValue {
    pub const ZERO: CharValue = CharValue::Small(0);
    pub const ONE: CharValue = CharValue::Small(1);

    pub fn from_bigint(v: BigInt) -> Self {
        match v.to_i64() {
            Some(s) => CharValue::Small(s),
            None => CharValue::Big(v),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            CharValue::Small(s) => BigInt::from(*s),
            CharValue::Big(b) => b.clone(),
        }
    }

    /// The value as an `i64`, or `Overflow` if it does not fit.
    pub fn to_i64(&self) -> Result<i64> {
        match self {
            CharValue::Small(s) => Ok(*s),
            CharValue::Big(b) => Err(Error::Overflow(b.to_string())),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CharValue::Small(0))
    }

    /// True for 0, 1 and -1.
    pub fn is_unit_or_zero(&self) -> bool {
        matches!(self, CharValue::Small(-1..=1))
    }

    pub fn abs(&self) -> CharValue {
        match self {
            CharValue::Small(s) => match s.checked_abs() {
                Some(a) => CharValue::Small(a),
                None => CharValue::from_bigint(BigInt::from(*s).abs()),
            },
            CharValue::Big(b) => CharValue::from_bigint(b.abs()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            CharValue::Small(s) => *s < 0,
            CharValue::Big(b) => b.is_negative(),
        }
    }

    /// `±self` according to a sign of `+1` or `-1`.
    pub fn signed(self, sign: i32) -> CharValue {
        if sign < 0 {
            -self
        } else {
            self
        }
    }
}

impl From<i64> for CharValue {
    fn from(v: i64) -> Self {
        CharValue::Small(v)
    }
}

impl From<BigInt> for CharValue {
    fn from(v: BigInt) -> Self {
        CharValue::from_bigint(v)
    }
}

impl PartialEq<i64> for CharValue {
    fn eq(&self, other: &i64) -> bool {
        matches!(self, CharValue::Small(s) if s == other)
    }
}

impl PartialOrd for CharValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CharValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (CharValue::Small(a), CharValue::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl Add for CharValue {
    type Output = CharValue;

    fn add(self, rhs: CharValue) -> CharValue {
        if let (CharValue::Small(a), CharValue::Small(b)) = (&self, &rhs) {
            if let Some(s) = a.checked_add(*b) {
                return CharValue::Small(s);
            }
        }
        CharValue::from_bigint(self.to_bigint() + rhs.to_bigint())
    }
}

impl Mul for CharValue {
    type Output = CharValue;

    fn mul(self, rhs: CharValue) -> CharValue {
        if let (CharValue::Small(a), CharValue::Small(b)) = (&self, &rhs) {
            if let Some(s) = a.checked_mul(*b) {
                return CharValue::Small(s);
            }
        }
        CharValue::from_bigint(self.to_bigint() * rhs.to_bigint())
    }
}

impl Neg for CharValue {
    type Output = CharValue;

    fn neg(self) -> CharValue {
        match self {
            CharValue::Small(s) => match s.checked_neg() {
                Some(v) => CharValue::Small(v),
                None => CharValue::from_bigint(-BigInt::from(s)),
            },
            CharValue::Big(b) => CharValue::from_bigint(-b),
        }
    }
}

impl std::iter::Sum for CharValue {
    fn sum<I: Iterator<Item = CharValue>>(iter: I) -> CharValue {
        iter.fold(CharValue::ZERO, |acc, v| acc + v)
    }
}

impl Zero for CharValue {
    fn zero() -> Self {
        CharValue::ZERO
    }

    fn is_zero(&self) -> bool {
        CharValue::is_zero(self)
    }
}

impl fmt::Display for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharValue::Small(s) => write!(f, "{s}"),
            CharValue::Big(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for CharValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse::<BigInt>()
            .map(CharValue::from_bigint)
            .map_err(|_| Error::Parse {
                token: s.to_string(),
                reason: "expected an integer",
            })
    }
}

/// Serialized as a JSON number when it fits in an `i64`, as a decimal string otherwise.
impl Serialize for CharValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CharValue::Small(s) => serializer.serialize_i64(*s),
            CharValue::Big(b) => serializer.collect_str(b),
        }
    }
}
