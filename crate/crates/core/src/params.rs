//! Parameters of tubular quotients. Orbits Γ(λ) of the cross-ratio group
//! are compared through the j-invariant; square-root transforms relate the
//! parameter of P^1(2,2,2,2; λ) to that of its quotients.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{QuadField, Rational, Scalar};

/// The Γ-orbit of a parameter with its common j-invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamOrbit {
    #[serde(rename = "orbit")]
    representatives: Vec<Scalar>,
    #[serde(rename = "j")]
    j_value: Scalar,
}

impl ParamOrbit {
    /// Distinct orbit elements in the order λ, 1/λ, 1−λ, 1/(1−λ),
    /// λ/(λ−1), (λ−1)/λ.
    pub fn representatives(&self) -> &[Scalar] {
        &self.representatives
    }

    pub fn j_value(&self) -> &Scalar {
        &self.j_value
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        self.representatives.contains(x)
    }

    /// Equality as sets.
    pub fn same_orbit(&self, other: &ParamOrbit) -> bool {
        self.len() == other.len() && self.representatives.iter().all(|x| other.contains(x))
    }
}

fn check(lambda: &Scalar) -> Result<()> {
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::DegenerateParameter(lambda.to_string()));
    }
    Ok(())
}

pub fn gamma_orbit(lambda: &Scalar) -> Result<ParamOrbit> {
    check(lambda)?;
    let one = Scalar::int(1);
    let inv = lambda.recip()?;
    let comp = one.try_sub(lambda)?;
    let comp_inv = comp.recip()?;
    let l_minus_1 = lambda.try_sub(&one)?;
    let images = [
        lambda.clone(),
        inv.clone(),
        comp,
        comp_inv,
        lambda.try_div(&l_minus_1)?,
        l_minus_1.try_mul(&inv)?,
    ];
    let mut representatives: Vec<Scalar> = Vec::with_capacity(6);
    for x in images {
        if !representatives.contains(&x) {
            representatives.push(x);
        }
    }
    Ok(ParamOrbit {
        representatives,
        j_value: j_invariant(lambda)?,
    })
}

/// `j = 256 (λ² − λ + 1)³ / (λ² (λ − 1)²)`.
pub fn j_invariant(lambda: &Scalar) -> Result<Scalar> {
    check(lambda)?;
    let one = Scalar::int(1);
    let l2 = lambda.pow(2);
    let num = l2.try_sub(lambda)?.try_add(&one)?.pow(3).try_mul(&Scalar::int(256))?;
    let den = l2.try_mul(&lambda.try_sub(&one)?.pow(2))?;
    num.try_div(&den)
}

/// Whether μ lies in Γ(λ). On rational inputs the answer is cross-checked
/// against equality of j-invariants.
pub fn same_gamma_orbit(lambda: &Scalar, mu: &Scalar) -> Result<bool> {
    check(mu)?;
    let member = gamma_orbit(lambda)?.contains(mu);
    if lambda.as_rational().is_some() && mu.as_rational().is_some() {
        let same_j = j_invariant(lambda)? == j_invariant(mu)?;
        assert_eq!(member, same_j, "orbit membership and j disagree for {lambda}, {mu}");
    }
    Ok(member)
}

/// Rows of the (2,2,2,2; λ) block of the tubular classification, by the
/// shape of H.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum TubularRow {
    /// `<x1 - x2>` or `<x3 - x4>`
    X12,
    /// `<x1 - x3>` or `<x2 - x4>`
    X13,
    /// `<x1 - x4>` or `<x2 - x3>`
    X14,
    /// `<xi - xj, xi - xk>`
    Triple,
    /// Subgroups containing the dualizing element.
    Omega,
}

impl TubularRow {
    pub const ALL: [TubularRow; 5] = [
        TubularRow::X12,
        TubularRow::X13,
        TubularRow::X14,
        TubularRow::Triple,
        TubularRow::Omega,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TubularRow::X12 => "x1-x2",
            TubularRow::X13 => "x1-x3",
            TubularRow::X14 => "x1-x4",
            TubularRow::Triple => "xi-xj,xi-xk",
            TubularRow::Omega => "omega",
        }
    }
}

impl fmt::Display for TubularRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for TubularRow {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

impl FromStr for TubularRow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Ok(match key.to_ascii_lowercase().as_str() {
            "x1-x2" | "x3-x4" | "x2-x1" | "x4-x3" => TubularRow::X12,
            "x1-x3" | "x2-x4" | "x3-x1" | "x4-x2" => TubularRow::X13,
            "x1-x4" | "x2-x3" | "x4-x1" | "x3-x2" => TubularRow::X14,
            "xi-xj,xi-xk" | "triple" => TubularRow::Triple,
            "omega" | "zw" | "xi-xj,xk-xl" | "tl" => TubularRow::Omega,
            _ => return Err(Error::UnknownRow(s.to_string())),
        })
    }
}

/// `sqrt(r)` as a rational when possible, otherwise the generator of Q(sqrt r).
fn sqrt_of(r: &Rational) -> Result<Scalar> {
    match r.sqrt_exact() {
        Some(s) => Ok(Scalar::Rational(s)),
        None => Ok(Scalar::from_quad(QuadField::sqrt(r.clone())?.generator())),
    }
}

/// `((s + 1) / (s - 1))²`.
fn cayley_square(s: &Scalar) -> Result<Scalar> {
    let one = Scalar::int(1);
    Ok(s.try_add(&one)?.try_div(&s.try_sub(&one)?)?.pow(2))
}

/// The transformed parameter μ before taking its orbit.
pub fn transformed_parameter(row: TubularRow, lambda: &Rational) -> Result<Scalar> {
    let l = Scalar::Rational(lambda.clone());
    check(&l)?;
    let one = Rational::one();
    match row {
        TubularRow::X12 => cayley_square(&sqrt_of(lambda)?),
        TubularRow::X13 => cayley_square(&sqrt_of(&(&one - lambda))?),
        TubularRow::X14 => {
            // ((√λ + √(λ−1)) / (√λ − √(λ−1)))² = ((2λ − 1) + 2√(λ² − λ))²
            let s = sqrt_of(&(lambda * lambda - lambda))?;
            let base = Scalar::Rational(lambda + lambda - one).try_add(&s.try_mul(&Scalar::int(2))?)?;
            Ok(base.pow(2))
        }
        TubularRow::Triple | TubularRow::Omega => Ok(l),
    }
}

pub fn tubular_param_transform(row: TubularRow, lambda: &Rational) -> Result<ParamOrbit> {
    gamma_orbit(&transformed_parameter(row, lambda)?)
}
