//! Weight data and genus of the quotient curve Y of P^1(p) by a finite
//! subgroup H of L(p), plus the smoothness criteria built on it.

use num_integer::Integer;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::classify::euler_char;
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::lgroup::{prime_factors, LElement, Subgroup, WeightType};

/// Genus, weights and group order of a quotient curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientCurve {
    genus: u64,
    full_weights: Vec<(u32, u64)>,
    reduced_weights: Vec<u32>,
    group_order: u64,
    smooth: bool,
}

impl QuotientCurve {
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// One `(d_j, n_j)` pair per index j of the source weight type,
    /// including `d_j = 1`.
    pub fn full_weights(&self) -> &[(u32, u64)] {
        &self.full_weights
    }

    /// The weights exceeding 1, each repeated `n_j` times, sorted.
    pub fn reduced_weights(&self) -> &[u32] {
        &self.reduced_weights
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth
    }

    /// Orbifold Euler characteristic `2(1 - g) - sum n_j (1 - 1/d_j)`.
    pub fn euler_char(&self) -> Rational {
        let mut chi = Rational::from(2 - 2 * self.genus as i64);
        for &(d, n) in &self.full_weights {
            let d = i64::from(d);
            chi = chi - Rational::from(n as i64) * Rational::new(d - 1, d).expect("d >= 1");
        }
        chi
    }
}

impl Serialize for QuotientCurve {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("QuotientCurve", 5)?;
        s.serialize_field("genus", &self.genus)?;
        s.serialize_field("weights", &self.reduced_weights)?;
        s.serialize_field("full_weights", &self.full_weights)?;
        s.serialize_field("order", &self.group_order)?;
        s.serialize_field("smooth", &self.smooth)?;
        s.end()
    }
}

/// `d_j = gcd(p_j, j-th coefficient of every element of H)`.
pub fn coordinate_gcds(p: &WeightType, h: &Subgroup) -> Vec<u32> {
    gcds_over(p, h.elements())
}

/// The same gcds taken over an arbitrary list of elements, e.g. a generating
/// set of H.
pub fn gcds_over(p: &WeightType, elements: &[LElement]) -> Vec<u32> {
    (0..p.len())
        .map(|j| {
            elements
                .iter()
                .fold(p.weight(j), |acc, x| acc.gcd(&x.coeffs()[j]))
        })
        .collect()
}

pub fn quotient_curve(p: &WeightType, h: &Subgroup) -> Result<QuotientCurve> {
    let n = h.order() as i64;
    let d = coordinate_gcds(p, h);

    let mut full_weights = Vec::with_capacity(p.len());
    let mut sum = Rational::zero();
    for (j, &dj) in d.iter().enumerate() {
        let pj = i64::from(p.weight(j));
        let nj = Rational::new(n * i64::from(dj), pj)?;
        let nj = nj
            .to_i64()
            .filter(|_| nj.is_integer())
            .ok_or_else(|| Error::NonIntegralMultiplicity(nj.to_string()))?;
        full_weights.push((dj, nj as u64));
        sum = sum + Rational::one() - Rational::new(i64::from(dj), pj)?;
    }

    let genus = Rational::new(n, 2)? * sum - Rational::from(n) + Rational::one();
    let genus = match genus.to_i64() {
        Some(g) if genus.is_integer() && g >= 0 => g as u64,
        _ => return Err(Error::NonIntegralGenus(genus.to_string())),
    };

    let mut reduced_weights: Vec<u32> = full_weights
        .iter()
        .filter(|&&(dj, _)| dj > 1)
        .flat_map(|&(dj, nj)| std::iter::repeat_n(dj, nj as usize))
        .collect();
    reduced_weights.sort_unstable();

    let curve = QuotientCurve {
        genus,
        smooth: d.iter().all(|&dj| dj == 1),
        full_weights,
        reduced_weights,
        group_order: n as u64,
    };

    let lhs = Rational::from(n) * euler_char(p);
    let rhs = curve.euler_char();
    if lhs != rhs {
        return Err(Error::HurwitzViolation {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(curve)
}

/// Whether every `d_j` is 1, i.e. Y has no weighted points.
pub fn is_smooth_quotient(p: &WeightType, h: &Subgroup) -> bool {
    coordinate_gcds(p, h).iter().all(|&d| d == 1)
}

/// Number of indices whose weight has the largest q-adic valuation.
pub fn index_q(p: &WeightType, q: u64) -> Result<usize> {
    if q < 2 || prime_factors(q) != [q] {
        return Err(Error::NotPrime(q));
    }
    let vals: Vec<u32> = p
        .weights()
        .iter()
        .map(|&w| {
            let (mut w, mut b) = (u64::from(w), 0);
            while w % q == 0 {
                w /= q;
                b += 1;
            }
            b
        })
        .collect();
    let max = vals.iter().copied().max().unwrap_or(0);
    Ok(vals.iter().filter(|&&b| b == max).count())
}

/// `Some(tL(p))` when a subgroup with smooth quotient exists, decided by
/// `index_q(p) >= 2` for every prime q dividing a weight.
pub fn exists_smooth_subgroup(p: &WeightType) -> Option<Subgroup> {
    let primes = p.weights().iter().fold(Vec::new(), |mut acc, &w| {
        for q in prime_factors(u64::from(w)) {
            if !acc.contains(&q) {
                acc.push(q);
            }
        }
        acc
    });
    let ok = primes
        .into_iter()
        .all(|q| index_q(p, q).expect("prime factor") >= 2);
    ok.then(|| Subgroup::whole_torsion(p))
}

/// The weight type `(2, ..., 2)` of length `g + 3` and the subgroup
/// `<x1 - x2, [g even] x2 + sum_{i=3}^{g+3} (-1)^i x_i>`, whose quotient
/// is a smooth hyperelliptic curve of genus g.
pub fn hyperelliptic_subgroup(g: u64) -> Result<(WeightType, Subgroup)> {
    if g == 0 {
        return Err(Error::InvalidGenus(g));
    }
    let t = usize::try_from(g)
        .ok()
        .and_then(|g| g.checked_add(3))
        .ok_or_else(|| Error::Overflow("genus".into()))?;
    let p = WeightType::from_slice(&vec![2; t]);
    let first = p.sub(&p.x(1), &p.x(2));
    let mut raw = vec![0i64; t];
    if g.is_multiple_of(2) {
        raw[1] = 1;
    }
    for (i, r) in raw.iter_mut().enumerate().skip(2) {
        // 1-based index i + 1
        *r = if (i + 1) % 2 == 0 { 1 } else { -1 };
    }
    let second = p.normal_form(&raw, 0);
    let h = Subgroup::generate(&p, &[first, second])?;
    Ok((p, h))
}
