use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::{QuadExtElem, QuadField, Rational};
use crate::error::Error;

/// A field element that is either rational or lives in one quadratic
/// extension.
///
/// Quadratic values whose generator coefficient vanishes are demoted to
/// `Rational`, so equality is structural: a rational never compares equal
/// to a genuinely irrational element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Quad(QuadExtElem),
}

impl Scalar {
    pub fn from_quad(x: QuadExtElem) -> Self {
        match x.as_rational() {
            Some(r) => Scalar::Rational(r),
            None => Scalar::Quad(x),
        }
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rational(Rational::from(n))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Quad(_) => None,
        }
    }

    pub fn field(&self) -> Option<&QuadField> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Quad(x) => Some(x.field()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    fn binop(
        &self,
        rhs: &Scalar,
        rat: impl Fn(&Rational, &Rational) -> Rational,
        quad: impl Fn(&QuadExtElem, &QuadExtElem) -> Result<QuadExtElem, Error>,
    ) -> Result<Scalar, Error> {
        Ok(match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(rat(a, b)),
            (Scalar::Quad(a), Scalar::Quad(b)) => Scalar::from_quad(quad(a, b)?),
            (Scalar::Rational(a), Scalar::Quad(b)) => {
                Scalar::from_quad(quad(&b.field().embed(a.clone()), b)?)
            }
            (Scalar::Quad(a), Scalar::Rational(b)) => {
                Scalar::from_quad(quad(a, &a.field().embed(b.clone()))?)
            }
        })
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        self.binop(rhs, |a, b| a + b, QuadExtElem::try_add)
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        self.binop(rhs, |a, b| a - b, QuadExtElem::try_sub)
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        self.binop(rhs, |a, b| a * b, QuadExtElem::try_mul)
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.binop(rhs, |a, b| a / b, QuadExtElem::try_div)
    }

    pub fn recip(&self) -> Result<Scalar, Error> {
        Scalar::int(1).try_div(self)
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        (0..exp).fold(Scalar::int(1), |acc, _| &acc * self)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<QuadExtElem> for Scalar {
    fn from(x: QuadExtElem) -> Self {
        Scalar::from_quad(x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Quad(x) => write!(f, "{x}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Quad(x) => write!(f, "{x:?}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rational(r) => r.serialize(serializer),
            Scalar::Quad(x) => x.serialize(serializer),
        }
    }
}

// Panicking operator forms for code that keeps every value in one field.

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("quadratic field mismatch")
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("quadratic field mismatch")
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("quadratic field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quad(x) => Scalar::Quad(-x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_arithmetic_promotes_and_demotes() {
        let k = QuadField::sqrt(Rational::from(3)).unwrap();
        let r3 = Scalar::from(k.generator());
        let three = &r3 * &r3;
        assert_eq!(three, Scalar::int(3));
        let x = &r3 + &Scalar::int(1);
        assert!(matches!(x, Scalar::Quad(_)));
        assert_eq!(&x - &r3, Scalar::int(1));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Scalar::int(1).try_div(&Scalar::int(0)), Err(Error::DivisionByZero));
    }
}
