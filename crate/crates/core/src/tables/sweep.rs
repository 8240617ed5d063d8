use serde::Serialize;

use crate::classify::trichotomy_check;
use crate::error::Result;
use crate::exec::Execution;
use crate::lgroup::{enumerate_subgroups, Subgroup, WeightType, DEFAULT_TORSION_BOUND};

/// Outcome of checking the trichotomy on every subgroup of many weight types.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepReport {
    pub types: usize,
    pub pairs: usize,
    pub failures: Vec<(WeightType, Subgroup)>,
}

/// Weight types with `t <= t_max` and `2 <= p_i <= p_max`, including the
/// empty type. With `ordered` every sequence is listed; otherwise only
/// nondecreasing ones.
pub fn sweep_weight_types(t_max: usize, p_max: u32, ordered: bool) -> Vec<WeightType> {
    let mut out = vec![WeightType::from_slice(&[])];
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..t_max {
        let mut next = Vec::new();
        for w in &layer {
            let lo = if ordered { 2 } else { w.last().copied().unwrap_or(2) };
            for p in lo..=p_max {
                let mut v = w.clone();
                v.push(p);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|w| WeightType::from_slice(w)));
        layer = next;
    }
    out
}

pub fn sweep_trichotomy(types: Vec<WeightType>, exec: Execution) -> Result<SweepReport> {
    let n_types = types.len();
    let parts = exec.map(types, |p| -> Result<(usize, Vec<(WeightType, Subgroup)>)> {
        let subgroups = enumerate_subgroups(&p, DEFAULT_TORSION_BOUND)?;
        let mut failures = Vec::new();
        for h in &subgroups {
            if !trichotomy_check(&p, h)? {
                failures.push((p.clone(), h.clone()));
            }
        }
        Ok((subgroups.len(), failures))
    });
    let mut report = SweepReport {
        types: n_types,
        ..SweepReport::default()
    };
    for part in parts {
        let (pairs, failures) = part?;
        report.pairs += pairs;
        report.failures.extend(failures);
    }
    Ok(report)
}
