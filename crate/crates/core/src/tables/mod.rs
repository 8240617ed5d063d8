//! Exhaustive searches producing classification tables of quotients.
//!
//! Each search enumerates weight types, all nontrivial subgroups of their
//! torsion groups, and the resulting quotient curves. Except for the tubular
//! table, rows are deduplicated up to permutation of equal weights.

mod genus;
mod render;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::classify::{contains_dualizing, curve_kind, CurveKind};
use crate::error::Result;
use crate::exec::Execution;
use crate::exactnum::{QuadField, Rational, Scalar};
use crate::lgroup::{
    enumerate_subgroups, permutation_canonical, CanonicalKey, Subgroup, WeightType,
    DEFAULT_TORSION_BOUND,
};
use crate::params::{gamma_orbit, tubular_param_transform, ParamOrbit, TubularRow};
use crate::quotient::{quotient_curve, QuotientCurve};

pub use genus::{candidate_weight_types, smooth_genus_search, table_genus2, GenusSearch};
pub use render::{render_json, render_markdown};
pub use sweep::{sweep_trichotomy, sweep_weight_types, SweepReport};

/// One row: a source weight type, a subgroup, and the quotient it yields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    source_weights: WeightType,
    subgroup: Subgroup,
    key: CanonicalKey,
    quotient: QuotientCurve,
    kind: CurveKind,
    param_note: Option<ParamNote>,
}

/// Where the parameter of a tubular or elliptic quotient comes from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ParamNote {
    /// Depends on λ through the given transform.
    Lambda(TubularRow),
    /// Γ(−1), independent of any parameter.
    MinusOne,
    /// Γ(ω) with ω² − ω + 1 = 0.
    Omega,
}

impl ParamNote {
    /// The parameter orbit, with `lambda` used only by [`ParamNote::Lambda`].
    pub fn orbit(self, lambda: &Rational) -> Result<ParamOrbit> {
        match self {
            ParamNote::Lambda(row) => tubular_param_transform(row, lambda),
            ParamNote::MinusOne => gamma_orbit(&Scalar::int(-1)),
            ParamNote::Omega => gamma_orbit(&Scalar::from_quad(QuadField::omega().generator())),
        }
    }
}

impl fmt::Display for ParamNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamNote::Lambda(TubularRow::Triple | TubularRow::Omega) => f.write_str("gamma(lambda)"),
            ParamNote::Lambda(row) => write!(f, "transform[{row}](lambda)"),
            ParamNote::MinusOne => f.write_str("gamma(-1)"),
            ParamNote::Omega => f.write_str("gamma(omega)"),
        }
    }
}

impl Serialize for ParamNote {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl TableRow {
    fn new(p: &WeightType, h: Subgroup, key: CanonicalKey) -> Result<TableRow> {
        let quotient = quotient_curve(p, &h)?;
        let kind = curve_kind(&quotient);
        Ok(TableRow {
            source_weights: p.clone(),
            subgroup: h,
            key,
            quotient,
            kind,
            param_note: None,
        })
    }

    pub fn source_weights(&self) -> &WeightType {
        &self.source_weights
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn key(&self) -> &CanonicalKey {
        &self.key
    }

    pub fn quotient(&self) -> &QuotientCurve {
        &self.quotient
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn param_note(&self) -> Option<ParamNote> {
        self.param_note
    }
}

impl Serialize for TableRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TableRow", 5)?;
        s.serialize_field("weights", &self.source_weights)?;
        s.serialize_field("subgroup", &self.subgroup)?;
        s.serialize_field("quotient", &self.quotient)?;
        s.serialize_field("kind", &self.kind)?;
        s.serialize_field("param", &self.param_note)?;
        s.end()
    }
}

/// One row per permutation class of nontrivial subgroups of tL(p), with the
/// representative taken in L(sorted p).
pub fn classes_for(p: &WeightType) -> Result<Vec<TableRow>> {
    let sorted = p.sorted();
    let mut classes: BTreeMap<CanonicalKey, ()> = BTreeMap::new();
    for h in enumerate_subgroups(p, DEFAULT_TORSION_BOUND)? {
        if !h.is_trivial() {
            classes.insert(permutation_canonical(p, &h), ());
        }
    }
    let mut rows = classes
        .into_keys()
        .map(|key| TableRow::new(&sorted, key.subgroup(), key))
        .collect::<Result<Vec<_>>>()?;
    sort_rows(&mut rows);
    Ok(rows)
}

fn sort_rows(rows: &mut [TableRow]) {
    rows.sort_by(|a, b| {
        a.key
            .weights
            .cmp(&b.key.weights)
            .then(a.subgroup.order().cmp(&b.subgroup.order()))
            .then_with(|| a.key.cmp(&b.key))
    });
}

fn rows_over(types: Vec<WeightType>, exec: Execution) -> Result<Vec<TableRow>> {
    let per_type = exec.map(types, |p| classes_for(&p));
    let mut rows = Vec::new();
    for r in per_type {
        rows.extend(r?);
    }
    sort_rows(&mut rows);
    Ok(rows)
}

/// Domestic weight types covered by [`table_domestic`]: (2,3,3), (2,3,4),
/// (2,3,5), (2,2,m) for `2 <= m <= n_max`, (2,2,2n) for `1 <= n <= n_max`,
/// and (n*a, n*b) for `1 <= n <= n_max` and coprime `1 <= a <= b <= k_params`.
/// Sorted and without repetition.
pub fn domestic_weight_types(n_max: u32, k_params: u32) -> Vec<WeightType> {
    use num_integer::Integer;
    let mut out = std::collections::BTreeSet::new();
    for w in [[2, 3, 3], [2, 3, 4], [2, 3, 5]] {
        out.insert(w.to_vec());
    }
    for n in 1..=n_max {
        if n >= 2 {
            out.insert(vec![2, 2, n]);
        }
        out.insert(vec![2, 2, 2 * n]);
        for a in 1..=k_params {
            for b in a..=k_params {
                if a.gcd(&b) == 1 && n * a >= 2 {
                    out.insert(vec![n * a, n * b]);
                }
            }
        }
    }
    out.into_iter().map(|w| WeightType::from_slice(&w)).collect()
}

pub fn table_domestic(n_max: u32, k_params: u32, exec: Execution) -> Result<Vec<TableRow>> {
    rows_over(domestic_weight_types(n_max, k_params), exec)
}

/// The tubular weight types in the order the tubular table lists them.
pub const TUBULAR_TYPES: [&[u32]; 4] = [&[2, 2, 2, 2], &[4, 4, 2], &[6, 3, 2], &[3, 3, 3]];

/// Every nontrivial subgroup of each tubular type, without permutation
/// deduplication: subgroups exchanged by relabeling can still carry
/// different parameter transforms.
pub fn table_tubular(exec: Execution) -> Result<Vec<TableRow>> {
    let types: Vec<WeightType> = TUBULAR_TYPES.iter().map(|w| WeightType::from_slice(w)).collect();
    let per_type = exec.map(types, |p| -> Result<Vec<TableRow>> {
        let mut rows = Vec::new();
        for h in enumerate_subgroups(&p, DEFAULT_TORSION_BOUND)? {
            if h.is_trivial() {
                continue;
            }
            let key = permutation_canonical(&p, &h);
            let mut row = TableRow::new(&p, h.with_small_generators(), key)?;
            row.param_note = tubular_param_note(&p, &row);
            rows.push(row);
        }
        Ok(rows)
    });
    let mut rows = Vec::new();
    for r in per_type {
        rows.extend(r?);
    }
    Ok(rows)
}

fn tubular_param_note(p: &WeightType, row: &TableRow) -> Option<ParamNote> {
    let h = &row.subgroup;
    if p.weights() == [2, 2, 2, 2] {
        if contains_dualizing(p, h) {
            return Some(ParamNote::Lambda(TubularRow::Omega));
        }
        if h.order() == 4 {
            return Some(ParamNote::Lambda(TubularRow::Triple));
        }
        let g = h.elements().iter().find(|x| !x.is_zero())?;
        let row = match g.coeffs() {
            [1, 1, 0, 0] | [0, 0, 1, 1] => TubularRow::X12,
            [1, 0, 1, 0] | [0, 1, 0, 1] => TubularRow::X13,
            [1, 0, 0, 1] | [0, 1, 1, 0] => TubularRow::X14,
            _ => return None,
        };
        return Some(ParamNote::Lambda(row));
    }
    let four_points = row.kind == CurveKind::WplTubular && row.quotient.reduced_weights() == [2, 2, 2, 2];
    if !(four_points || row.kind == CurveKind::SmoothElliptic) {
        return None;
    }
    match p.sorted().weights() {
        [2, 4, 4] => Some(ParamNote::MinusOne),
        [2, 3, 6] | [3, 3, 3] => Some(ParamNote::Omega),
        _ => None,
    }
}

/// Weight triples of Arnold's 14 exceptional unimodal singularities.
pub const ARNOLD_TRIPLES: [[u32; 3]; 14] = [
    [2, 3, 7],
    [2, 3, 8],
    [2, 3, 9],
    [2, 4, 5],
    [2, 4, 6],
    [2, 4, 7],
    [2, 5, 5],
    [2, 5, 6],
    [3, 3, 4],
    [3, 3, 5],
    [3, 3, 6],
    [3, 4, 4],
    [3, 4, 5],
    [4, 4, 4],
];

pub fn table_arnold(exec: Execution) -> Result<Vec<TableRow>> {
    let types = ARNOLD_TRIPLES.iter().map(|w| WeightType::from_slice(w)).collect();
    rows_over(types, exec)
}
