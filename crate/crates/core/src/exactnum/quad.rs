use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::Rational;
use crate::error::Error;

/// A quadratic extension of Q, fixed by the minimal polynomial of its
/// generator `g`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum QuadField {
    /// `g^2 = d` with `d` not a rational square.
    Sqrt(Rational),
    /// `g^2 = g - 1`, i.e. `g` is a primitive sixth root of unity
    /// (`g^2 - g + 1 = 0`).
    Omega,
}

impl QuadField {
    /// Q(sqrt d). Rejects rational squares (including 0), which would make
    /// the algebra split and introduce zero divisors.
    pub fn sqrt(d: Rational) -> Result<Self, Error> {
        if d.is_square() {
            return Err(Error::NotAField(d.to_string()));
        }
        Ok(QuadField::Sqrt(d))
    }

    pub fn omega() -> Self {
        QuadField::Omega
    }

    /// The generator `g` as a field element.
    pub fn generator(&self) -> QuadExtElem {
        QuadExtElem {
            a: Rational::zero(),
            b: Rational::one(),
            field: self.clone(),
        }
    }

    pub fn element(&self, a: Rational, b: Rational) -> QuadExtElem {
        QuadExtElem {
            a,
            b,
            field: self.clone(),
        }
    }

    pub fn embed(&self, a: Rational) -> QuadExtElem {
        self.element(a, Rational::zero())
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadField::Sqrt(d) => write!(f, "Q(sqrt({d}))"),
            QuadField::Omega => write!(f, "Q(w), w^2 = w - 1"),
        }
    }
}

/// `a + b*g` in a [`QuadField`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExtElem {
    a: Rational,
    b: Rational,
    field: QuadField,
}

/// Arithmetic operator for [`qx_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic: fails on mismatched fields or a zero divisor.
pub fn qx_arith(x: &QuadExtElem, y: &QuadExtElem, op: QuadOp) -> Result<QuadExtElem, Error> {
    match op {
        QuadOp::Add => x.try_add(y),
        QuadOp::Sub => x.try_sub(y),
        QuadOp::Mul => x.try_mul(y),
        QuadOp::Div => x.try_div(y),
    }
}

/// `Some(value)` exactly when the generator coefficient vanishes.
pub fn qx_is_rational(x: &QuadExtElem) -> Option<Rational> {
    x.as_rational()
}

impl QuadExtElem {
    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn field(&self) -> &QuadField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    fn same_field(&self, other: &QuadExtElem) -> Result<(), Error> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            })
        }
    }

    pub fn try_add(&self, other: &QuadExtElem) -> Result<QuadExtElem, Error> {
        self.same_field(other)?;
        Ok(self.field.element(&self.a + &other.a, &self.b + &other.b))
    }

    pub fn try_sub(&self, other: &QuadExtElem) -> Result<QuadExtElem, Error> {
        self.same_field(other)?;
        Ok(self.field.element(&self.a - &other.a, &self.b - &other.b))
    }

    pub fn try_mul(&self, other: &QuadExtElem) -> Result<QuadExtElem, Error> {
        self.same_field(other)?;
        let (a, b, c, e) = (&self.a, &self.b, &other.a, &other.b);
        let be = b * e;
        let (re, im) = match &self.field {
            // (a + b g)(c + e g) = ac + be d + (ae + bc) g
            QuadField::Sqrt(d) => (a * c + &be * d, a * e + b * c),
            // g^2 = g - 1
            QuadField::Omega => (a * c - &be, a * e + b * c + be),
        };
        Ok(self.field.element(re, im))
    }

    /// Galois conjugate: `g -> -g` for square roots, `w -> 1 - w` for omega.
    pub fn conjugate(&self) -> QuadExtElem {
        match &self.field {
            QuadField::Sqrt(_) => self.field.element(self.a.clone(), -&self.b),
            QuadField::Omega => self.field.element(&self.a + &self.b, -&self.b),
        }
    }

    /// Field norm `x * conj(x)`, a rational.
    pub fn norm(&self) -> Rational {
        let (a, b) = (&self.a, &self.b);
        match &self.field {
            QuadField::Sqrt(d) => a * a - &(b * b) * d,
            QuadField::Omega => a * a + a * b + b * b,
        }
    }

    pub fn inverse(&self) -> Result<QuadExtElem, Error> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conjugate();
        Ok(self.field.element(&c.a / &n, &c.b / &n))
    }

    pub fn try_div(&self, other: &QuadExtElem) -> Result<QuadExtElem, Error> {
        self.same_field(other)?;
        self.try_mul(&other.inverse()?)
    }
}

impl fmt::Display for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gen = match &self.field {
            QuadField::Sqrt(d) => format!("sqrt({d})"),
            QuadField::Omega => "w".to_string(),
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})*{gen}", self.b),
            (false, false) => write!(f, "{} + ({})*{gen}", self.a, self.b),
        }
    }
}

impl fmt::Debug for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.field)
    }
}

/// `{"a": "p/q", "b": "p/q", "d": "p/q"}`; omega elements carry
/// `"mode": "omega"` instead of `"d"`.
impl Serialize for QuadExtElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("a", &self.a)?;
        map.serialize_entry("b", &self.b)?;
        match &self.field {
            QuadField::Sqrt(d) => map.serialize_entry("d", d)?,
            QuadField::Omega => map.serialize_entry("mode", "omega")?,
        }
        map.end()
    }
}

// Operator forms panic on mismatched fields; the `try_*` methods are the
// checked interface.

impl Add<&QuadExtElem> for &QuadExtElem {
    type Output = QuadExtElem;
    fn add(self, rhs: &QuadExtElem) -> QuadExtElem {
        self.try_add(rhs).expect("quadratic field mismatch")
    }
}

impl Sub<&QuadExtElem> for &QuadExtElem {
    type Output = QuadExtElem;
    fn sub(self, rhs: &QuadExtElem) -> QuadExtElem {
        self.try_sub(rhs).expect("quadratic field mismatch")
    }
}

impl Mul<&QuadExtElem> for &QuadExtElem {
    type Output = QuadExtElem;
    fn mul(self, rhs: &QuadExtElem) -> QuadExtElem {
        self.try_mul(rhs).expect("quadratic field mismatch")
    }
}

impl Neg for &QuadExtElem {
    type Output = QuadExtElem;
    fn neg(self) -> QuadExtElem {
        self.field.element(-&self.a, -&self.b)
    }
}
