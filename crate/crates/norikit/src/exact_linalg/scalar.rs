use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The base ring of a computation. The whole crate works over the
/// rationals or the integers, nothing else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Q,
    Z,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Q => write!(f, "Q"),
            Ring::Z => write!(f, "Z"),
        }
    }
}

/// An exact scalar, tagged by its ring through the variant.
///
/// Rationals are kept in lowest terms with positive denominator
/// (`BigRational` maintains that on construction); integer-ring values
/// are plain `BigInt`s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Int(_) => Ring::Z,
            Scalar::Rat(_) => Ring::Q,
        }
    }

    pub fn zero(ring: Ring) -> Self {
        Self::from_int(ring, 0)
    }

    pub fn one(ring: Ring) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn from_int(ring: Ring, value: i64) -> Self {
        match ring {
            Ring::Z => Scalar::Int(BigInt::from(value)),
            Ring::Q => Scalar::Rat(BigRational::from_integer(BigInt::from(value))),
        }
    }

    pub fn from_bigint(ring: Ring, value: BigInt) -> Self {
        match ring {
            Ring::Z => Scalar::Int(value),
            Ring::Q => Scalar::Rat(BigRational::from_integer(value)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_one(),
            Scalar::Rat(v) => v.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_negative(),
            Scalar::Rat(v) => v.is_negative(),
        }
    }

    /// The value as a rational, regardless of ring.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Int(v) => BigRational::from_integer(v.clone()),
            Scalar::Rat(v) => v.clone(),
        }
    }

    /// The underlying integer; panics on a non-integral rational.
    pub fn expect_integer(&self) -> BigInt {
        match self {
            Scalar::Int(v) => v.clone(),
            Scalar::Rat(v) => {
                assert!(v.is_integer(), "scalar {v} is not an integer");
                v.to_integer()
            }
        }
    }

    /// Exact division. Over Q this is plain division; over Z the result
    /// must be an integer. `None` if the divisor is zero or the quotient
    /// does not exist in the ring.
    pub fn try_div(&self, rhs: &Scalar) -> Option<Scalar> {
        if rhs.is_zero() {
            return None;
        }
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => {
                let (q, r) = num_integer::Integer::div_rem(a, b);
                if r.is_zero() {
                    Some(Scalar::Int(q))
                } else {
                    None
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Some(Scalar::Rat(a / b)),
            _ => panic!("ring mismatch in scalar division"),
        }
    }

    /// Parses an optional sign, an integer, or `p/q`, into the given ring.
    /// A fraction is accepted over Z only if it reduces to an integer.
    pub fn parse(text: &str, ring: Ring) -> Result<Scalar> {
        let rat = parse_rational(text)?;
        match ring {
            Ring::Q => Ok(Scalar::Rat(rat)),
            Ring::Z => {
                if rat.is_integer() {
                    Ok(Scalar::Int(rat.to_integer()))
                } else {
                    Err(Error::RingMismatch {
                        expected: Ring::Z,
                        found: Ring::Q,
                    })
                }
            }
        }
    }
}

/// Parses `p` or `p/q` with an optional leading sign on either part.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let bad = |_| Error::Parse(format!("invalid scalar `{s}`"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(bad)?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(bad)?;
            let d: BigInt = den.trim().parse().map_err(bad)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(v) => {
                if v.is_integer() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a.$method(b)),
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a.$method(b)),
                    _ => panic!("ring mismatch in scalar arithmetic"),
                }
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_integer_and_fraction() {
        assert_eq!(Scalar::parse("7", Ring::Z).unwrap(), Scalar::from_int(Ring::Z, 7));
        assert_eq!(Scalar::parse("-3", Ring::Q).unwrap(), Scalar::from_int(Ring::Q, -3));
        let half = Scalar::parse("1/2", Ring::Q).unwrap();
        assert_eq!(&half + &half, Scalar::one(Ring::Q));
        // reduced fractions are accepted over Z when integral
        assert_eq!(Scalar::parse("4/2", Ring::Z).unwrap(), Scalar::from_int(Ring::Z, 2));
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(matches!(Scalar::parse("1/0", Ring::Q), Err(Error::Parse(_))));
    }

    #[test]
    fn parse_rejects_fraction_over_z() {
        assert!(matches!(
            Scalar::parse("1/2", Ring::Z),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn lowest_terms_invariant() {
        let s = Scalar::parse("6/-4", Ring::Q).unwrap();
        match s {
            Scalar::Rat(r) => {
                assert_eq!(r.numer(), &BigInt::from(-3));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn exact_division() {
        let six = Scalar::from_int(Ring::Z, 6);
        let two = Scalar::from_int(Ring::Z, 2);
        let four = Scalar::from_int(Ring::Z, 4);
        assert_eq!(six.try_div(&two), Some(Scalar::from_int(Ring::Z, 3)));
        assert_eq!(six.try_div(&four), None);
        assert_eq!(six.try_div(&Scalar::zero(Ring::Z)), None);
    }
}
