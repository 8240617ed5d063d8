use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use super::{sort_rows, TableRow};
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::exec::Execution;
use crate::lgroup::{enumerate_subgroups, permutation_canonical, CanonicalKey, WeightType, DEFAULT_TORSION_BOUND};
use crate::quotient::is_smooth_quotient;

/// Result of a smooth-quotient search: the weight types that pass the
/// numerical conditions and the rows found for them.
#[derive(Clone, Debug, Serialize)]
pub struct GenusSearch {
    pub genus: u64,
    pub candidates: Vec<WeightType>,
    pub rows: Vec<TableRow>,
}

/// Sorted weight types `p` with `n = (2g − 2) / (t − 2 − sum 1/p_i)` a
/// positive integer, `p_t <= n` and `n` dividing `|tL(p)|`, paired with n.
///
/// From `t − 2 = sum 1/p_i + (2g − 2)/n` and `p_i <= p_t <= n`, the first
/// m weights leave `R_m = t − 2 − sum_{i<=m} 1/p_i` and force
/// `p_{m+1} <= (t − m + 2g − 2) / R_m`; in particular `t <= 2g + 2`.
/// `slack` widens every one of these bounds (including the one on t).
pub fn candidate_weight_types(g: u64, slack: u32) -> Result<Vec<(WeightType, u64)>> {
    if g < 2 {
        return Err(Error::InvalidGenus(g));
    }
    let t_max = 2 * g + 2 + u64::from(slack);
    let mut out = Vec::new();
    for t in 3..=t_max {
        let mut prefix = Vec::with_capacity(t as usize);
        extend(g, t, slack, &mut prefix, Rational::from(t as i64 - 2), &mut out);
    }
    Ok(out)
}

fn extend(
    g: u64,
    t: u64,
    slack: u32,
    prefix: &mut Vec<u32>,
    rest: Rational,
    out: &mut Vec<(WeightType, u64)>,
) {
    let m = prefix.len() as u64;
    if !rest.is_positive() {
        return;
    }
    let two_g_2 = Rational::from(2 * g as i64 - 2);
    if m == t {
        // rest = (2g − 2)/n
        let n = &two_g_2 / &rest;
        let Some(n) = n.to_i64() else {
            return;
        };
        let p = WeightType::from_slice(prefix);
        let n = n as u64;
        if u64::from(*prefix.last().expect("t >= 3")) <= n && p.torsion_order().is_multiple_of(n) {
            out.push((p, n));
        }
        return;
    }
    let bound = Rational::from((t - m) as i64) + two_g_2;
    let bound = (&bound / &rest).floor() + BigInt::from(slack);
    let lo = prefix.last().copied().unwrap_or(2);
    let hi: u32 = u32::try_from(bound).unwrap_or(u32::MAX);
    for w in lo..=hi {
        prefix.push(w);
        let next = &rest - &Rational::new(1, i64::from(w)).expect("w >= 2");
        extend(g, t, slack, prefix, next, out);
        prefix.pop();
    }
}

/// All permutation classes `(p, H)` whose quotient is a smooth curve of
/// genus g.
pub fn smooth_genus_search(g: u64, slack: u32, exec: Execution) -> Result<GenusSearch> {
    let candidates = candidate_weight_types(g, slack)?;
    let found = exec.map(candidates.clone(), |(p, n)| -> Result<Vec<TableRow>> {
        let mut keys: BTreeSet<CanonicalKey> = BTreeSet::new();
        for h in enumerate_subgroups(&p, DEFAULT_TORSION_BOUND)? {
            if h.order() as u64 == n && is_smooth_quotient(&p, &h) {
                keys.insert(permutation_canonical(&p, &h));
            }
        }
        keys.into_iter()
            .map(|key| {
                let row = TableRow::new(&p, key.subgroup(), key)?;
                assert_eq!(row.quotient().genus(), g, "Hurwitz forces genus {g} for {p}");
                Ok(row)
            })
            .collect()
    });
    let mut rows = Vec::new();
    for r in found {
        rows.extend(r?);
    }
    sort_rows(&mut rows);
    Ok(GenusSearch {
        genus: g,
        candidates: candidates.into_iter().map(|(p, _)| p).collect(),
        rows,
    })
}

pub fn table_genus2(exec: Execution) -> Result<Vec<TableRow>> {
    Ok(smooth_genus_search(2, 0, exec)?.rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_candidates_satisfy_the_equation() {
        for (p, n) in candidate_weight_types(2, 0).unwrap() {
            let lhs = Rational::from(p.len() as i64 - 2);
            let rhs = p
                .weights()
                .iter()
                .map(|&w| Rational::new(1, i64::from(w)).unwrap())
                .sum::<Rational>()
                + Rational::new(2, n as i64).unwrap();
            assert_eq!(lhs, rhs, "{p}");
        }
    }

    #[test]
    fn rejects_small_genus() {
        assert_eq!(candidate_weight_types(1, 0).unwrap_err(), Error::InvalidGenus(1));
    }
}
