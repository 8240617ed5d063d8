//! The domestic/tubular/wild type of a weight type and the kind of curve a
//! quotient produces.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::exactnum::Rational;
use crate::lgroup::{Subgroup, WeightType};
use crate::quotient::{quotient_curve, QuotientCurve};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WplType {
    Domestic,
    Tubular,
    Wild,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CurveKind {
    WplDomestic,
    WplTubular,
    SmoothElliptic,
    WeightedElliptic,
    HigherGenus(u64),
    WplWild,
}

impl fmt::Display for WplType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WplType::Domestic => "domestic",
            WplType::Tubular => "tubular",
            WplType::Wild => "wild",
        })
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveKind::WplDomestic => f.write_str("wpl_domestic"),
            CurveKind::WplTubular => f.write_str("wpl_tubular"),
            CurveKind::SmoothElliptic => f.write_str("smooth_elliptic"),
            CurveKind::WeightedElliptic => f.write_str("weighted_elliptic"),
            CurveKind::HigherGenus(g) => write!(f, "higher_genus:{g}"),
            CurveKind::WplWild => f.write_str("wpl_wild"),
        }
    }
}

impl Serialize for CurveKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `chi = 2 - sum (1 - 1/p_i)`.
pub fn euler_char(p: &WeightType) -> Rational {
    p.weights().iter().fold(Rational::from(2), |acc, &w| {
        let w = i64::from(w);
        acc - Rational::new(w - 1, w).expect("weight >= 2")
    })
}

pub fn wpl_type(p: &WeightType) -> WplType {
    let chi = euler_char(p);
    let by_sign = if chi.is_positive() {
        WplType::Domestic
    } else if chi.is_zero() {
        WplType::Tubular
    } else {
        WplType::Wild
    };
    assert_eq!(by_sign, listed_type(p), "type lists disagree with chi = {chi} for {p}");
    by_sign
}

/// Type read off the explicit lists of domestic and tubular weight types.
pub fn listed_type(p: &WeightType) -> WplType {
    let s = p.sorted();
    match s.weights() {
        [] | [_] | [_, _] | [2, 2, _] | [2, 3, 3] | [2, 3, 4] | [2, 3, 5] => WplType::Domestic,
        [2, 2, 2, 2] | [3, 3, 3] | [2, 4, 4] | [2, 3, 6] => WplType::Tubular,
        _ => WplType::Wild,
    }
}

/// Whether the dualizing element lies in H. False when it has infinite
/// order.
pub fn contains_dualizing(p: &WeightType, h: &Subgroup) -> bool {
    let w = p.dualizing_element();
    p.is_torsion(&w) && h.contains(&w)
}

pub fn curve_kind(q: &QuotientCurve) -> CurveKind {
    match q.genus() {
        0 => match wpl_type(&WeightType::from_slice(q.reduced_weights())) {
            WplType::Domestic => CurveKind::WplDomestic,
            WplType::Tubular => CurveKind::WplTubular,
            WplType::Wild => CurveKind::WplWild,
        },
        1 if q.reduced_weights().is_empty() => CurveKind::SmoothElliptic,
        1 => CurveKind::WeightedElliptic,
        g => CurveKind::HigherGenus(g),
    }
}

/// Checks the branch structure: domestic sources give domestic lines,
/// tubular sources give a tubular line or (exactly when H contains the
/// dualizing element) a smooth elliptic curve, wild sources give wild
/// lines, weighted elliptic curves or higher genus.
pub fn trichotomy_check(p: &WeightType, h: &Subgroup) -> Result<bool> {
    let kind = curve_kind(&quotient_curve(p, h)?);
    Ok(match wpl_type(p) {
        WplType::Domestic => kind == CurveKind::WplDomestic,
        WplType::Tubular => {
            if contains_dualizing(p, h) {
                kind == CurveKind::SmoothElliptic
            } else {
                kind == CurveKind::WplTubular
            }
        }
        WplType::Wild => matches!(
            kind,
            CurveKind::WplWild | CurveKind::WeightedElliptic | CurveKind::HigherGenus(_)
        ),
    })
}
