//! Hand-transcribed classification tables and small helpers shared by the
//! integration tests. Everything here is written out independently of the
//! search code it is compared against.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use wpc_core::classify::CurveKind;
use wpc_core::exactnum::Rational;
use wpc_core::expr::parse_generators;
use wpc_core::lgroup::{permutation_canonical, CanonicalKey, Subgroup, WeightType};
use wpc_core::tables::ParamNote;
use wpc_core::params::TubularRow;

pub fn wt(w: &[u32]) -> WeightType {
    WeightType::from_slice(w)
}

/// `"tL"` for the whole torsion group, otherwise a comma-separated
/// generator list.
pub fn subgroup(p: &WeightType, gens: &str) -> Subgroup {
    if gens == "tL" {
        return Subgroup::whole_torsion(p);
    }
    Subgroup::generate(p, &parse_generators(gens, p).expect("valid generators")).expect("torsion")
}

pub fn key(p: &[u32], gens: &str) -> CanonicalKey {
    let p = wt(p);
    permutation_canonical(&p, &subgroup(&p, gens))
}

pub fn q(s: &str) -> Rational {
    s.parse().expect("rational literal")
}

/// `2 - sum (1 - 1/p_i)`, computed from scratch.
pub fn chi(weights: &[u32]) -> Rational {
    let mut acc = Rational::from(2);
    for &w in weights {
        acc = acc - Rational::one() + Rational::new(1, i64::from(w)).unwrap();
    }
    acc
}

fn reduced(w: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = w.iter().copied().filter(|&x| x > 1).collect();
    v.sort_unstable();
    v
}

// Domestic table, as row patterns matched against a sorted weight type.

/// Predicted `(class, reduced quotient weights)` for a sorted domestic type,
/// from every row pattern of the domestic table that matches it.
pub fn domestic_predictions(p: &[u32]) -> BTreeSet<(CanonicalKey, Vec<u32>)> {
    let mut out = BTreeSet::new();
    let mut add = |gens: String, q: Vec<u32>| {
        out.insert((key(p, &gens), reduced(&q)));
    };
    match *p {
        [2, 3, 3] => add("x2-x3".into(), vec![2, 2, 2]),
        [2, 3, 4] => add("x1-2*x3".into(), vec![2, 3, 3]),
        _ => {}
    }
    if let [2, 2, n] = *p {
        // (2,2,n), <x1 - x2>  ->  (n,n)
        add("x1-x2".into(), vec![n, n]);
        if n % 2 == 0 {
            // (2,2,2m), <x1 - m x3> -> (2,2,m); <x1 - x2, x1 - m x3> -> (m,m)
            let m = n / 2;
            add(format!("x1-{m}*x3"), vec![2, 2, m]);
            add(format!("x1-x2, x1-{m}*x3"), vec![m, m]);
        }
    }
    if let [a, b] = *p {
        // (n p1, n p2), <k p1 x1 - k p2 x2>, k | n  ->  (k p1, k p2)
        let n = a.gcd(&b);
        let (p1, p2) = (a / n, b / n);
        for k in (1..n).filter(|k| n % k == 0) {
            add(format!("{}*x1-{}*x2", k * p1, k * p2), vec![k * p1, k * p2]);
        }
    }
    out
}

// Tubular table, fully expanded over index choices.

pub struct TubularExpect {
    pub weights: &'static [u32],
    pub subgroup: String,
    pub quotient: Vec<u32>,
    pub kind: CurveKind,
    pub param: Option<ParamNote>,
}

fn omega_multiple(p: &WeightType, k: i64) -> String {
    let w = p.dualizing_element();
    p.scale(k, &w).to_string()
}

pub fn tubular_reference() -> Vec<TubularExpect> {
    let mut out = Vec::new();
    let mut row = |weights: &'static [u32], gens: String, quotient: &[u32], kind, param| {
        out.push(TubularExpect {
            weights,
            subgroup: gens,
            quotient: quotient.to_vec(),
            kind,
            param,
        })
    };
    use CurveKind::{SmoothElliptic as E, WplTubular as T};
    use ParamNote::{Lambda, MinusOne, Omega};

    let p: &'static [u32] = &[2, 2, 2, 2];
    let q4 = [2, 2, 2, 2];
    for (gens, r) in [
        ("x1-x2", TubularRow::X12),
        ("x3-x4", TubularRow::X12),
        ("x1-x3", TubularRow::X13),
        ("x2-x4", TubularRow::X13),
        ("x1-x4", TubularRow::X14),
        ("x2-x3", TubularRow::X14),
    ] {
        row(p, gens.into(), &q4, T, Some(Lambda(r)));
    }
    for (i, j, k) in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)] {
        row(p, format!("x{i}-x{j}, x{i}-x{k}"), &q4, T, Some(Lambda(TubularRow::Triple)));
    }
    row(p, omega_multiple(&wt(p), 1), &[], E, Some(Lambda(TubularRow::Omega)));
    for (i, j, k, l) in [(1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3)] {
        row(p, format!("x{i}-x{j}, x{k}-x{l}"), &[], E, Some(Lambda(TubularRow::Omega)));
    }
    row(p, "tL".into(), &[], E, Some(Lambda(TubularRow::Omega)));

    let p: &'static [u32] = &[4, 4, 2];
    row(p, "2*x1-x3".into(), &[2, 4, 4], T, None);
    row(p, "2*x2-x3".into(), &[2, 4, 4], T, None);
    row(p, omega_multiple(&wt(p), 2), &q4, T, Some(MinusOne));
    row(p, "x1-x2".into(), &q4, T, Some(MinusOne));
    row(p, "2*x1-x3, 2*x1-2*x2".into(), &q4, T, Some(MinusOne));
    row(p, omega_multiple(&wt(p), 1), &[], E, Some(MinusOne));
    row(p, "tL".into(), &[], E, Some(MinusOne));

    let p: &'static [u32] = &[6, 3, 2];
    row(p, omega_multiple(&wt(p), 3), &[3, 3, 3], T, None);
    row(p, omega_multiple(&wt(p), 2), &q4, T, Some(Omega));
    row(p, omega_multiple(&wt(p), 1), &[], E, Some(Omega));

    let p: &'static [u32] = &[3, 3, 3];
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        row(p, format!("x{i}-x{j}"), &[3, 3, 3], T, None);
    }
    row(p, omega_multiple(&wt(p), 1), &[], E, Some(Omega));
    row(p, "tL".into(), &[], E, Some(Omega));
    out
}

// Genus-2 table.

pub const GENUS2_REFERENCE: [(&[u32], &str); 10] = [
    (&[2, 5, 10], "tL"),
    (&[2, 6, 6], "tL"),
    (&[2, 8, 8], "x1+x2+3*x3-c"),
    (&[3, 6, 6], "x1+5*x2+5*x3-2*c"),
    (&[5, 5, 5], "x1+x2+3*x3-c"),
    (&[2, 2, 3, 3], "tL"),
    (&[2, 2, 4, 4], "x1+x2+x3+3*x4-2*c"),
    (&[3, 3, 3, 3], "x1+x2+2*x3+2*x4-2*c"),
    (&[2, 2, 2, 2, 2], "x1+x2+x3+x4-2*c, x4+x5-c"),
    (&[2, 2, 2, 2, 2, 2], "x1+x2+x3+x4+x5+x6-3*c"),
];

pub fn genus2_keys() -> BTreeSet<CanonicalKey> {
    GENUS2_REFERENCE.iter().map(|(p, g)| key(p, g)).collect()
}

// Arnold table: (weights, H, reduced quotient weights, genus).

pub const ARNOLD_REFERENCE: [(&[u32], &str, &[u32], u64); 24] = [
    (&[2, 3, 8], "x1-4*x3", &[3, 3, 4], 0),
    (&[2, 3, 9], "x2-3*x3", &[2, 2, 2, 3], 0),
    (&[2, 4, 5], "x1-2*x2", &[2, 5, 5], 0),
    (&[2, 4, 6], "x1-2*x2", &[2, 6, 6], 0),
    (&[2, 4, 6], "x1-3*x3", &[3, 4, 4], 0),
    (&[2, 4, 6], "2*x2-3*x3", &[2, 2, 2, 3], 0),
    (&[2, 4, 6], "tL", &[2, 2, 3, 3], 0),
    (&[2, 4, 7], "x1-2*x2", &[2, 7, 7], 0),
    (&[2, 5, 5], "x2-x3", &[2, 2, 2, 2, 2], 0),
    (&[2, 5, 6], "x1-3*x3", &[3, 5, 5], 0),
    (&[3, 3, 4], "x1-x2", &[4, 4, 4], 0),
    (&[3, 3, 5], "x1-x2", &[5, 5, 5], 0),
    (&[3, 3, 6], "x1-x2", &[6, 6, 6], 0),
    (&[3, 3, 6], "x2-2*x3", &[2, 3, 3, 3], 0),
    (&[3, 3, 6], "x1+x2-4*x3", &[2], 1),
    (&[3, 3, 6], "tL", &[2, 2, 2], 1),
    (&[3, 4, 4], "2*x2-2*x3", &[2, 2, 3, 3], 0),
    (&[3, 4, 4], "x2-x3", &[3, 3, 3, 3], 0),
    (&[4, 4, 4], "2*x1-2*x2", &[2, 2, 4, 4], 0),
    (&[4, 4, 4], "x1-x2", &[4, 4, 4, 4], 0),
    (&[4, 4, 4], "x1+x2-2*x3", &[2, 2], 1),
    (&[4, 4, 4], "2*x1-2*x2, 2*x2-2*x3", &[2, 2, 2, 2, 2, 2], 0),
    (&[4, 4, 4], "x1-x2, 2*x2-2*x3", &[2, 2, 2, 2], 1),
    (&[4, 4, 4], "tL", &[], 3),
];

pub fn arnold_expected() -> BTreeMap<CanonicalKey, (Vec<u32>, u64)> {
    ARNOLD_REFERENCE
        .iter()
        .map(|(p, g, q, genus)| (key(p, g), (q.to_vec(), *genus)))
        .collect()
}
