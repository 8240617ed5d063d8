//! The string group L(p): the rank-one abelian group on x1, ..., xt subject
//! to p1*x1 = ... = pt*xt =: c.
//!
//! Every element is stored in normal form `l1*x1 + ... + lt*xt + l*c` with
//! `0 <= li < pi`, so the derived comparisons are structural.

mod canonical;
mod enumerate;
mod subgroup;
mod torsion;

use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use canonical::{permutation_canonical, CanonicalKey};
pub use enumerate::{enumerate_subgroups, DEFAULT_TORSION_BOUND};
pub(crate) use enumerate::prime_factors;
pub use subgroup::{Subgroup, SubgroupSpec};
pub(crate) use torsion::TorsionGroup;

/// A weight sequence `(p1, ..., pt)`, every entry at least 2. `t = 0` is
/// allowed and gives L = Z.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightType {
    weights: Vec<u32>,
}

/// Order of an element of L(p).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

/// An element of L(p) in normal form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LElement {
    coeffs: Vec<u32>,
    c: i64,
}

impl LElement {
    /// The `x_i` coefficients `l_i`, each in `[0, p_i)`.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// The coefficient of the canonical element `c`.
    pub fn c_coeff(&self) -> i64 {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c == 0 && self.coeffs.iter().all(|&l| l == 0)
    }

    pub(crate) fn from_parts(coeffs: Vec<u32>, c: i64) -> Self {
        LElement { coeffs, c }
    }
}

/// Renders as an expression in the element grammar, e.g. `x1+2*x3-c`.
impl fmt::Display for LElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i64, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != 0)
            .map(|(i, &l)| (i64::from(l), format!("x{}", i + 1)))
            .collect();
        if self.c != 0 {
            terms.push((self.c, "c".to_string()));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (coef, sym)) in terms.iter().enumerate() {
            let sign = if *coef < 0 { "-" } else if k > 0 { "+" } else { "" };
            let mag = coef.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{sym}")?;
            } else {
                write!(f, "{sign}{mag}*{sym}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.coeffs.iter().map(u32::to_string).collect();
        write!(f, "({}; {})", coeffs.join(","), self.c)
    }
}

impl Serialize for LElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl WeightType {
    pub fn new(weights: impl IntoIterator<Item = i64>) -> Result<Self> {
        let weights = weights
            .into_iter()
            .map(|w| {
                u32::try_from(w)
                    .ok()
                    .filter(|&w| w >= 2)
                    .ok_or(Error::InvalidWeight(w))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightType { weights })
    }

    /// Builds from weights already known to be valid. Panics otherwise.
    pub fn from_slice(weights: &[u32]) -> Self {
        assert!(weights.iter().all(|&w| w >= 2), "weights must be >= 2");
        WeightType {
            weights: weights.to_vec(),
        }
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Number of weights `t`.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    /// `lcm(p1, ..., pt)`, 1 for the empty type.
    pub fn lcm(&self) -> u64 {
        self.weights.iter().fold(1u64, |acc, &w| acc.lcm(&u64::from(w)))
    }

    /// `|tL(p)| = (p1 * ... * pt) / lcm`, saturating at `u64::MAX`.
    pub fn torsion_order(&self) -> u64 {
        let prod = self
            .weights
            .iter()
            .try_fold(1u128, |acc, &w| acc.checked_mul(u128::from(w)));
        match prod {
            Some(p) => u64::try_from(p / u128::from(self.lcm())).unwrap_or(u64::MAX),
            None => u64::MAX,
        }
    }

    pub fn sorted(&self) -> WeightType {
        let mut weights = self.weights.clone();
        weights.sort_unstable();
        WeightType { weights }
    }

    pub fn is_sorted(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] <= w[1])
    }

    /// Normal form of `sum a_i x_i + a c`, failing only on `i64` overflow of
    /// the `c` coefficient.
    pub fn try_normal_form(&self, raw: &[i64], a: i64) -> Result<LElement> {
        if raw.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: raw.len(),
            });
        }
        let mut c = a;
        let mut coeffs = Vec::with_capacity(raw.len());
        for (&ai, &p) in raw.iter().zip(&self.weights) {
            let p = i64::from(p);
            coeffs.push(ai.rem_euclid(p) as u32);
            c = c
                .checked_add(ai.div_euclid(p))
                .ok_or_else(|| Error::Overflow("normal form".into()))?;
        }
        Ok(LElement { coeffs, c })
    }

    /// The unique normal form of `sum a_i x_i + a c`.
    ///
    /// Panics if `raw.len() != t` or if the `c` coefficient overflows `i64`.
    pub fn normal_form(&self, raw: &[i64], a: i64) -> LElement {
        self.try_normal_form(raw, a).expect("normal_form")
    }

    /// Whether `x` is a normal-form element of this group.
    pub fn owns(&self, x: &LElement) -> bool {
        x.coeffs.len() == self.len() && x.coeffs.iter().zip(&self.weights).all(|(&l, &p)| l < p)
    }

    pub(crate) fn check_owns(&self, x: &LElement) -> Result<()> {
        if x.coeffs.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: x.coeffs.len(),
            });
        }
        assert!(self.owns(x), "element {x:?} is not in normal form for {self}");
        Ok(())
    }

    pub fn zero(&self) -> LElement {
        LElement {
            coeffs: vec![0; self.len()],
            c: 0,
        }
    }

    /// The generator `x_i`, with `i` counted from 1 as in the notation.
    pub fn x(&self, i: usize) -> LElement {
        assert!(i >= 1 && i <= self.len(), "x{i} out of range");
        let mut raw = vec![0i64; self.len()];
        raw[i - 1] = 1;
        self.normal_form(&raw, 0)
    }

    /// The canonical element `c`.
    pub fn c(&self) -> LElement {
        LElement {
            coeffs: vec![0; self.len()],
            c: 1,
        }
    }

    fn raw(x: &LElement) -> Vec<i64> {
        x.coeffs.iter().map(|&l| i64::from(l)).collect()
    }

    pub fn add(&self, x: &LElement, y: &LElement) -> LElement {
        let raw: Vec<i64> = x
            .coeffs
            .iter()
            .zip(&y.coeffs)
            .map(|(&a, &b)| i64::from(a) + i64::from(b))
            .collect();
        self.normal_form(&raw, x.c + y.c)
    }

    pub fn neg(&self, x: &LElement) -> LElement {
        let raw: Vec<i64> = x.coeffs.iter().map(|&l| -i64::from(l)).collect();
        self.normal_form(&raw, -x.c)
    }

    pub fn sub(&self, x: &LElement, y: &LElement) -> LElement {
        self.add(x, &self.neg(y))
    }

    /// `k * x`.
    pub fn scale(&self, k: i64, x: &LElement) -> LElement {
        let raw: Vec<i64> = Self::raw(x).into_iter().map(|l| l * k).collect();
        self.normal_form(&raw, x.c * k)
    }

    /// The degree map: `delta(x_i) = lcm / p_i`, `delta(c) = lcm`.
    pub fn delta(&self, x: &LElement) -> i64 {
        let p = self.lcm() as i64;
        let coeff_part: i64 = x
            .coeffs
            .iter()
            .zip(&self.weights)
            .map(|(&l, &w)| i64::from(l) * (p / i64::from(w)))
            .sum();
        coeff_part + x.c * p
    }

    /// Least `k > 0` with `k*x = 0`, using only normal-form arithmetic: `x`
    /// is torsion exactly when `lcm * x = 0`, and then its order divides
    /// the lcm.
    pub fn element_order(&self, x: &LElement) -> ElementOrder {
        let p = self.lcm();
        if !self.scale(p as i64, x).is_zero() {
            return ElementOrder::Infinite;
        }
        let k = (1..=p)
            .filter(|k| p.is_multiple_of(*k))
            .find(|&k| self.scale(k as i64, x).is_zero())
            .expect("lcm kills every torsion element");
        ElementOrder::Finite(k)
    }

    pub fn is_torsion(&self, x: &LElement) -> bool {
        self.scale(self.lcm() as i64, x).is_zero()
    }

    /// All elements of the torsion subgroup tL(p), sorted.
    pub fn torsion_elements(&self) -> Vec<LElement> {
        TorsionGroup::new(self).elements().collect()
    }

    /// `(p_i/d_ij) x_i - (p_j/d_ij) x_j` for every `i < j`, where
    /// `d_ij = gcd(p_i, p_j)`. Zero entries are kept.
    pub fn torsion_generators(&self) -> Vec<LElement> {
        let t = self.len();
        let mut out = Vec::new();
        for i in 0..t {
            for j in i + 1..t {
                let (pi, pj) = (i64::from(self.weights[i]), i64::from(self.weights[j]));
                let d = pi.gcd(&pj);
                let mut raw = vec![0i64; t];
                raw[i] = pi / d;
                raw[j] = -(pj / d);
                out.push(self.normal_form(&raw, 0));
            }
        }
        out
    }

    /// `omega = (t - 2) c - sum x_i`.
    pub fn dualizing_element(&self) -> LElement {
        let raw = vec![-1i64; self.len()];
        self.normal_form(&raw, self.len() as i64 - 2)
    }
}

impl fmt::Display for WeightType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for WeightType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.weights.serialize(serializer)
    }
}
