use std::collections::HashSet;

use super::subgroup::extend_span;
use super::{LElement, Subgroup, TorsionGroup, WeightType};
use crate::error::{Error, Result};

/// Default cap on `|tL(p)|` for [`enumerate_subgroups`].
pub const DEFAULT_TORSION_BOUND: u64 = 1 << 16;

/// Every subgroup of tL(p) exactly once, sorted by (order, element list).
///
/// Subgroups are found by closing "known subgroup + one element" and
/// deduplicating by element set. The search runs separately inside each
/// Sylow subgroup (a subgroup of a finite abelian group is the direct sum of
/// its Sylow parts), then the parts are combined.
pub fn enumerate_subgroups(p: &WeightType, bound: u64) -> Result<Vec<Subgroup>> {
    let order = p.torsion_order();
    if order > bound {
        return Err(Error::TorsionTooLarge { order, bound });
    }
    let tg = TorsionGroup::new(p);
    debug_assert_eq!(tg.len() as u64, order);

    let parts: Vec<Vec<Found>> = prime_factors(order)
        .into_iter()
        .map(|q| sylow_subgroups(&tg, q))
        .collect();

    let mut combined = vec![Found {
        elements: vec![0],
        generators: Vec::new(),
    }];
    for part in &parts {
        let mut next = Vec::with_capacity(combined.len() * part.len());
        for a in &combined {
            for b in part {
                let mut elements: Vec<u32> = a
                    .elements
                    .iter()
                    .flat_map(|&x| b.elements.iter().map(move |&y| (x, y)))
                    .map(|(x, y)| tg.add(x, y))
                    .collect();
                elements.sort_unstable();
                let mut generators = a.generators.clone();
                generators.extend_from_slice(&b.generators);
                next.push(Found {
                    elements,
                    generators,
                });
            }
        }
        combined = next;
    }

    combined.sort_by(|a, b| {
        a.elements
            .len()
            .cmp(&b.elements.len())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(combined
        .into_iter()
        .map(|f| {
            let gens: Vec<LElement> = f.generators.iter().map(|&g| tg.element(g)).collect();
            let elems: Vec<LElement> = f.elements.iter().map(|&x| tg.element(x)).collect();
            Subgroup::from_sorted_elements(p, gens, elems)
        })
        .collect())
}

struct Found {
    elements: Vec<u32>,
    generators: Vec<u32>,
}

/// All subgroups of the Sylow q-subgroup, as sorted index lists.
fn sylow_subgroups(tg: &TorsionGroup, q: u64) -> Vec<Found> {
    let members: Vec<u32> = (0..tg.len() as u32)
        .filter(|&i| is_power_of(tg.order(i), q))
        .collect();

    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut found = vec![Found {
        elements: vec![0],
        generators: Vec::new(),
    }];
    seen.insert(vec![0]);

    let mut in_span = vec![false; tg.len()];
    let mut covered = vec![false; tg.len()];
    let mut cursor = 0;
    while cursor < found.len() {
        let span = found[cursor].elements.clone();
        for &s in &span {
            in_span[s as usize] = true;
        }
        covered.copy_from_slice(&in_span);
        for &x in &members {
            if covered[x as usize] {
                continue;
            }
            // <S, x> depends only on the coset x + S.
            for &s in &span {
                covered[tg.add(s, x) as usize] = true;
            }
            let mut ext = extend_span(tg, &in_span, &span, x);
            ext.sort_unstable();
            if seen.insert(ext.clone()) {
                let mut generators = found[cursor].generators.clone();
                generators.push(x);
                found.push(Found {
                    elements: ext,
                    generators,
                });
            }
        }
        for &s in &span {
            in_span[s as usize] = false;
        }
        cursor += 1;
    }
    found
}

fn is_power_of(mut n: u64, q: u64) -> bool {
    while n.is_multiple_of(q) {
        n /= q;
    }
    n == 1
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
