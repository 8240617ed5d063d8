//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;
use wpc_core::classify::{contains_dualizing, trichotomy_check, CurveKind};
use wpc_core::exactnum::{QuadField, Rational, Scalar};
use wpc_core::lgroup::{enumerate_subgroups, permutation_canonical, Subgroup, WeightType, DEFAULT_TORSION_BOUND};
use wpc_core::params::{gamma_orbit, j_invariant, transformed_parameter, TubularRow};
use wpc_core::quotient::{
    exists_smooth_subgroup, gcds_over, hyperelliptic_subgroup, index_q, is_smooth_quotient, quotient_curve,
};
use wpc_core::tables::{
    domestic_weight_types, smooth_genus_search, sweep_trichotomy, sweep_weight_types, table_arnold,
    table_domestic, table_genus2, table_tubular, ParamNote, TableRow,
};
use wpc_core::tube::{tube_quotient, tube_quotient_oracle, TubeAction};
use wpc_core::Execution;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn exec() -> Execution {
    Execution::from_env()
}

fn within(limit_secs: u64, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    if took > Duration::from_secs(limit_secs) {
        return Err(format!("took {took:.2?}, limit {limit_secs}s"));
    }
    Ok(())
}

/// `n * chi(p) == 2(1 - g) - sum n_j (1 - 1/d_j)` with `d_j` recomputed
/// from the element list.
fn hurwitz_holds(p: &WeightType, h: &Subgroup) -> Result<(), String> {
    let q = quotient_curve(p, h).map_err(|e| format!("{p} {h:?}: {e}"))?;
    let n = h.order() as u64;
    let mut rhs = Rational::from(2 - 2 * q.genus() as i64);
    for j in 0..p.len() {
        let pj = p.weight(j);
        let dj = h.elements().iter().fold(pj, |acc, x| acc.gcd(&x.coeffs()[j]));
        let nj = n * u64::from(dj) / u64::from(pj);
        ensure!((n * u64::from(dj)).is_multiple_of(u64::from(pj)), "{p}: n_{j} not integral");
        ensure!(q.full_weights()[j] == (dj, nj), "{p}: weight data at {j}");
        rhs = rhs - Rational::from(nj as i64) * (Rational::one() - Rational::new(1, i64::from(dj)).unwrap());
    }
    let lhs = Rational::from(n as i64) * chi(p.weights());
    ensure!(lhs == rhs, "{p} {h:?}: {lhs} != {rhs}");
    Ok(())
}

fn c1_domestic() -> Outcome {
    let start = Instant::now();
    let (n_max, k_params) = (6, 5);
    let rows = table_domestic(n_max, k_params, exec()).map_err(|e| e.to_string())?;
    let mut by_type: BTreeMap<Vec<u32>, BTreeSet<_>> = BTreeMap::new();
    for r in &rows {
        ensure!(r.kind() == CurveKind::WplDomestic, "{}: quotient not domestic", r.source_weights());
        by_type
            .entry(r.source_weights().weights().to_vec())
            .or_default()
            .insert((r.key().clone(), r.quotient().reduced_weights().to_vec()));
    }
    let types = domestic_weight_types(n_max, k_params);
    for p in &types {
        let expected = domestic_predictions(p.weights());
        let got = by_type.remove(p.weights()).unwrap_or_default();
        ensure!(got == expected, "{p}: {} rows emitted, {} predicted", got.len(), expected.len());
    }
    ensure!(by_type.is_empty(), "rows for unexpected types");
    let x = rows
        .iter()
        .find(|r| r.source_weights().weights() == [2, 3, 4])
        .ok_or("no (2,3,4) row")?;
    ensure!(x.quotient().reduced_weights() == [2, 3, 3], "(2,3,4) quotient");
    within(5, start)?;
    Ok(format!("{} types, {} rows", types.len(), rows.len()))
}

fn c2_tubular() -> Outcome {
    let start = Instant::now();
    let rows = table_tubular(exec()).map_err(|e| e.to_string())?;
    let reference = tubular_reference();
    ensure!(rows.len() == reference.len(), "{} rows vs {} listed", rows.len(), reference.len());
    for e in &reference {
        let p = wt(e.weights);
        let h = subgroup(&p, &e.subgroup);
        let matches: Vec<&TableRow> = rows
            .iter()
            .filter(|r| r.source_weights() == &p && r.subgroup() == &h)
            .collect();
        ensure!(matches.len() == 1, "{p} <{}>: {} matching rows", e.subgroup, matches.len());
        let r = matches[0];
        ensure!(r.quotient().reduced_weights() == e.quotient.as_slice(), "{p} <{}>: quotient", e.subgroup);
        ensure!(r.kind() == e.kind, "{p} <{}>: kind {}", e.subgroup, r.kind());
        ensure!(
            contains_dualizing(&p, &h) == (r.kind() == CurveKind::SmoothElliptic),
            "{p} <{}>: kind not decided by omega",
            e.subgroup
        );
        ensure!(r.param_note() == e.param, "{p} <{}>: parameter cell", e.subgroup);
    }

    let minus_one = ParamNote::MinusOne.orbit(&q("2")).map_err(|e| e.to_string())?;
    let want: Vec<Scalar> = ["-1", "2", "1/2"].iter().map(|s| Scalar::Rational(q(s))).collect();
    ensure!(minus_one.len() == 3 && want.iter().all(|x| minus_one.contains(x)), "gamma(-1)");
    ensure!(ParamNote::Omega.orbit(&q("2")).map_err(|e| e.to_string())?.len() == 2, "gamma(omega) size");

    let rat = |s: &str| Scalar::Rational(q(s));
    let quad = |d: &str, a: &str, b: &str| Scalar::from_quad(QuadField::sqrt(q(d)).unwrap().element(q(a), q(b)));
    let oracles = [
        (TubularRow::X12, "4", rat("9")),
        (TubularRow::X12, "25/16", rat("81")),
        (TubularRow::X13, "4", quad("-3", "-1/2", "-1/2")),
        (TubularRow::X13, "25/16", quad("-9/16", "-527/625", "448/625")),
        (TubularRow::X14, "4", quad("12", "97", "28")),
        (TubularRow::X14, "25/16", rat("16")),
        (TubularRow::Triple, "4", rat("4")),
        (TubularRow::Omega, "25/16", rat("25/16")),
    ];
    let n_oracles = oracles.len();
    for (row, lambda, mu) in oracles {
        let got = transformed_parameter(row, &q(lambda)).map_err(|e| e.to_string())?;
        ensure!(got == mu, "{row} at {lambda}: {got} != {mu}");
        let orbit = ParamNote::Lambda(row).orbit(&q(lambda)).map_err(|e| e.to_string())?;
        ensure!(orbit.same_orbit(&gamma_orbit(&mu).unwrap()), "{row} at {lambda}: orbit");
    }
    within(5, start)?;
    Ok(format!("{} rows, {} transform evaluations", rows.len(), n_oracles))
}

fn c3_genus2() -> Outcome {
    let start = Instant::now();
    let rows = table_genus2(exec()).map_err(|e| e.to_string())?;
    let got: BTreeSet<_> = rows.iter().map(|r| r.key().clone()).collect();
    ensure!(rows.len() == got.len(), "duplicate classes");
    ensure!(got == genus2_keys(), "{} classes, expected the 10 listed", got.len());
    for r in &rows {
        ensure!(r.quotient().genus() == 2 && r.quotient().is_smooth(), "{}: not smooth genus 2", r.source_weights());
    }
    let wide = smooth_genus_search(2, 2, exec()).map_err(|e| e.to_string())?;
    let wide_keys: BTreeSet<_> = wide.rows.iter().map(|r| r.key().clone()).collect();
    ensure!(wide_keys == got, "widened bounds found {} classes", wide_keys.len());
    within(30, start)?;
    Ok(format!("10 classes, stable with slack 2 ({} candidates)", wide.candidates.len()))
}

fn c4_arnold() -> Outcome {
    let start = Instant::now();
    let rows = table_arnold(exec()).map_err(|e| e.to_string())?;
    let got: BTreeMap<_, _> = rows
        .iter()
        .map(|r| (r.key().clone(), (r.quotient().reduced_weights().to_vec(), r.quotient().genus())))
        .collect();
    ensure!(got.len() == rows.len(), "duplicate classes");
    ensure!(got == arnold_expected(), "{} rows differ from the 24 listed", rows.len());
    for w in [[2, 3, 7], [3, 4, 5]] {
        ensure!(rows.iter().all(|r| r.source_weights().weights() != w), "{w:?} not empty");
    }
    let top = rows
        .iter()
        .find(|r| r.source_weights().weights() == [4, 4, 4] && r.subgroup().is_whole_torsion())
        .ok_or("no (4,4,4) tL row")?;
    ensure!(top.quotient().genus() == 3 && top.quotient().is_smooth(), "(4,4,4) tL");
    within(10, start)?;
    Ok(format!("{} rows", rows.len()))
}

fn small_types() -> Vec<WeightType> {
    sweep_weight_types(5, 8, true)
}

fn c5_torsion() -> Outcome {
    let start = Instant::now();
    let types = small_types();
    let checked = exec().map(types.clone(), |p| -> Result<(), String> {
        let product: u64 = p.weights().iter().map(|&w| u64::from(w)).product();
        let lcm = p.weights().iter().fold(1u64, |a, &w| a.lcm(&u64::from(w)));
        let torsion = p.torsion_elements();
        ensure!(torsion.len() as u64 == product / lcm, "{p}: |tL| = {}", torsion.len());
        let distinct: BTreeSet<_> = torsion.iter().collect();
        ensure!(distinct.len() == torsion.len(), "{p}: repeated torsion elements");
        for x in &torsion {
            ensure!(p.delta(x) == 0 && p.is_torsion(x), "{p}: {x} torsion with nonzero degree");
        }
        let mut rng = StdRng::seed_from_u64(product ^ p.len() as u64);
        for _ in 0..8 {
            let raw: Vec<i64> = (0..p.len()).map(|_| rng.gen_range(-20..=20)).collect();
            let x = p.normal_form(&raw, rng.gen_range(-5..=5));
            ensure!(p.is_torsion(&x) == (p.delta(&x) == 0), "{p}: {x}");
        }
        let span = Subgroup::generate(&p, &p.torsion_generators()).map_err(|e| e.to_string())?;
        ensure!(span.order() == torsion.len(), "{p}: generators span {} elements", span.order());
        ensure!(torsion.iter().all(|x| span.contains(x)), "{p}: generators miss torsion");
        Ok(())
    });
    checked.into_iter().collect::<Result<Vec<()>, String>>()?;
    within(10, start)?;
    Ok(format!("{} ordered weight types", types.len()))
}

fn c6_hurwitz() -> Outcome {
    let mut pairs: Vec<(WeightType, Subgroup)> = Vec::new();
    let tables = [
        table_domestic(6, 5, exec()),
        table_tubular(exec()),
        table_genus2(exec()),
        table_arnold(exec()),
    ];
    for t in tables {
        for r in t.map_err(|e| e.to_string())? {
            pairs.push((r.source_weights().clone(), r.subgroup().clone()));
        }
    }
    for p in small_types() {
        pairs.push((p.clone(), Subgroup::trivial(&p)));
        pairs.push((p.clone(), Subgroup::whole_torsion(&p)));
        for g in p.torsion_generators() {
            pairs.push((p.clone(), Subgroup::generate(&p, &[g]).unwrap()));
        }
    }
    let n = pairs.len();
    let checked = exec().map(pairs, |(p, h)| hurwitz_holds(&p, &h));
    checked.into_iter().collect::<Result<Vec<()>, String>>()?;
    Ok(format!("{n} pairs"))
}

fn c7_generator_independence() -> Outcome {
    // d_j permutes with the weights, so nondecreasing types suffice
    let types: Vec<WeightType> = sweep_weight_types(5, 8, false)
        .into_iter()
        .filter(|p| p.torsion_order() <= 64)
        .collect();
    let n_types = types.len();
    let counts = exec().map(types, |p| -> Result<usize, String> {
        let subgroups = enumerate_subgroups(&p, DEFAULT_TORSION_BOUND).map_err(|e| e.to_string())?;
        let mut rng = StdRng::seed_from_u64(p.weights().iter().fold(7, |a, &w| a * 31 + u64::from(w)));
        for h in &subgroups {
            let from_elements = gcds_over(&p, h.elements());
            for _ in 0..10 {
                let mut gens = Vec::new();
                let k = rng.gen_range(1..=3);
                loop {
                    gens.push(h.elements()[rng.gen_range(0..h.order())].clone());
                    if gens.len() >= k && Subgroup::generate(&p, &gens).unwrap() == *h {
                        break;
                    }
                }
                ensure!(gcds_over(&p, &gens) == from_elements, "{p} {h:?} via {gens:?}");
            }
        }
        Ok(subgroups.len())
    });
    let total: usize = counts.into_iter().collect::<Result<Vec<_>, _>>()?.into_iter().sum();
    Ok(format!("{total} subgroups over {n_types} sorted weight types"))
}

fn c8_tube() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for rank in 1..=12u64 {
        for order in 1..=24u64 {
            for k in (1..=rank).filter(|k| rank % k == 0 && (order * k) % rank == 0) {
                let a = TubeAction::new(rank, order, k).map_err(|e| e.to_string())?;
                let oracle = tube_quotient_oracle(&a).map_err(|e| e.to_string())?;
                ensure!(tube_quotient(&a) == oracle, "rank {rank}, order {order}, k {k}");
                cases += 1;
            }
        }
    }
    within(2, start)?;
    Ok(format!("{cases} actions"))
}

fn c9_smooth_existence() -> Outcome {
    let p = wt(&[2, 6, 12]);
    ensure!(index_q(&p, 2).unwrap() == 1, "(2,6,12): index_2");
    ensure!(exists_smooth_subgroup(&p).is_none(), "(2,6,12): index criterion");
    let all = enumerate_subgroups(&p, DEFAULT_TORSION_BOUND).map_err(|e| e.to_string())?;
    ensure!(all.iter().all(|h| !is_smooth_quotient(&p, h)), "(2,6,12): a subgroup has smooth quotient");

    let p = wt(&[4, 6, 12]);
    let h = exists_smooth_subgroup(&p).ok_or("(4,6,12): no smooth subgroup")?;
    ensure!(h.is_whole_torsion(), "(4,6,12): witness is not tL");
    let y = quotient_curve(&p, &h).map_err(|e| e.to_string())?;
    ensure!(y.is_smooth() && y.genus() == 7, "(4,6,12): genus {}", y.genus());
    let scanned = enumerate_subgroups(&p, DEFAULT_TORSION_BOUND)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|h| is_smooth_quotient(&p, h))
        .count();
    Ok(format!("(2,6,12) has none of {} subgroups; (4,6,12) has {scanned}", all.len()))
}

fn c10_hyperelliptic() -> Outcome {
    let start = Instant::now();
    for g in 1..=8 {
        let (p, h) = hyperelliptic_subgroup(g).map_err(|e| e.to_string())?;
        ensure!(p.weights() == vec![2; g as usize + 3].as_slice(), "g = {g}: weights");
        let y = quotient_curve(&p, &h).map_err(|e| e.to_string())?;
        ensure!(y.is_smooth() && y.genus() == g, "g = {g}: got genus {}", y.genus());
    }
    let (p, h) = hyperelliptic_subgroup(1).unwrap();
    ensure!(permutation_canonical(&p, &h) == key(&[2, 2, 2, 2], "x1-x2, x3-x4"), "g = 1 key");
    let (p, h) = hyperelliptic_subgroup(2).unwrap();
    ensure!(
        permutation_canonical(&p, &h) == key(&[2, 2, 2, 2, 2], "x1+x2+x3+x4-2*c, x4+x5-c"),
        "g = 2 key"
    );
    ensure!(h.order() == 4, "g = 2 order");
    within(2, start)?;
    Ok("g = 1..8".into())
}

fn c11_trichotomy() -> Outcome {
    let start = Instant::now();
    let types = sweep_weight_types(5, 6, true);
    let report = sweep_trichotomy(types, exec()).map_err(|e| e.to_string())?;
    ensure!(report.failures.is_empty(), "{} failures, first {:?}", report.failures.len(), report.failures[0]);
    ensure!(trichotomy_check(&wt(&[4, 4, 4]), &Subgroup::whole_torsion(&wt(&[4, 4, 4]))).unwrap(), "(4,4,4)");
    within(20, start)?;
    Ok(format!("{} pairs over {} ordered weight types", report.pairs, report.types))
}

fn c12_j_invariant() -> Outcome {
    let omega = Scalar::from_quad(QuadField::omega().generator());
    let j = j_invariant(&omega).map_err(|e| e.to_string())?;
    ensure!(j.is_zero(), "j(omega) = {j}");
    let j = j_invariant(&Scalar::int(-1)).map_err(|e| e.to_string())?;
    ensure!(j == Scalar::int(1728), "j(-1) = {j}");
    let mut rng = StdRng::seed_from_u64(12);
    let mut tried = 0;
    while tried < 50 {
        let lambda = Rational::new(rng.gen_range(-500i64..=500), rng.gen_range(1i64..=97)).unwrap();
        if lambda.is_zero() || lambda.is_one() {
            continue;
        }
        tried += 1;
        let l = Scalar::Rational(lambda.clone());
        let j0 = j_invariant(&l).map_err(|e| e.to_string())?;
        for mu in gamma_orbit(&l).map_err(|e| e.to_string())?.representatives() {
            ensure!(j_invariant(mu).unwrap() == j0, "j not constant on gamma({lambda})");
        }
    }
    Ok("50 random parameters".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("domestic table", c1_domestic),
        ("tubular table", c2_tubular),
        ("genus-2 table", c3_genus2),
        ("Arnold table", c4_arnold),
        ("torsion group structure", c5_torsion),
        ("Hurwitz formula", c6_hurwitz),
        ("generator independence of d_j", c7_generator_independence),
        ("tube oracle", c8_tube),
        ("smooth quotient existence", c9_smooth_existence),
        ("hyperelliptic family", c10_hyperelliptic),
        ("trichotomy sweep", c11_trichotomy),
        ("j-invariant", c12_j_invariant),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
