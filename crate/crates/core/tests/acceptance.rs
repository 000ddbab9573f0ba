//! The eight acceptance criteria, each reported on one PASS/FAIL line.

mod common;

use std::io::Write;
use std::thread;
use std::time::{Duration, Instant};

use geis_core::bun::{aut_order, gaussian_binomial, hecke_modifications_at, BundleCounter, RationalPoint, SplitBundle};
use geis_core::curve::{l_series, point_counts, UnramifiedCharacter};
use geis_core::eis::{check_comparefinite, check_fullcompare, check_hecke_eigen, fe_cocycle, EisEngine, EisKind};
use geis_core::repcomb::{kostant_partition_count, KostantCounter, RepEngine};
use geis_core::ringtools::{series_equal, ConeSeries, Scalar};
use geis_core::rootdata::{BasedRootDatum, Coweight};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{bundle_range, dominant_below, dominant_weights, random_regular, Freudenthal};

type Outcome = Result<String, String>;

const SEED: u64 = 0x5eed_2024;

fn gl2_characters(q: u64) -> Vec<UnramifiedCharacter> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = vec![UnramifiedCharacter::parse(q, "3,1/2").unwrap()];
    out.extend((0..10).map(|_| random_regular(&mut rng, q, 2)));
    out
}

fn gl3_characters(q: u64) -> Vec<UnramifiedCharacter> {
    ["2,-1,1/3", "3,1/2,5"].iter().map(|s| UnramifiedCharacter::parse(q, s).unwrap()).collect()
}

fn gl3_bundles() -> Vec<SplitBundle> {
    vec![SplitBundle::new(vec![0, 0, 0]), SplitBundle::new(vec![1, 0, -1])]
}

fn c1_zeta() -> Outcome {
    let mut checked = 0;
    for q in [2u64, 3, 4] {
        let ctx = point_counts(q, 1).map_err(|e| e.to_string())?;
        for s in ["1", "-1", "3", "1/2"] {
            let s = Scalar::parse(q, s).map_err(|e| e.to_string())?;
            for n in [2, 3] {
                let datum = BasedRootDatum::gl(n).unwrap();
                for alpha in datum.positive_coroots() {
                    let l = l_series(&ctx, &datum, &s, alpha, 12).map_err(|e| e.to_string())?;
                    let mut f = ConeSeries::one(&datum, q, 12);
                    for c in [s.clone(), s.checked_div(&Scalar::from_int(q, q as i64)).unwrap()] {
                        let mut factor = ConeSeries::one(&datum, q, 12);
                        factor.add_term(alpha.clone(), &-c).unwrap();
                        f = f.mul(&factor).unwrap();
                    }
                    let prod = f.mul(&l).unwrap();
                    let cmp = series_equal(&prod, &ConeSeries::one(&datum, q, 12), 12).unwrap();
                    if !cmp.equal {
                        return Err(format!("q={q} s={s} alpha={alpha}: {:?}", cmp.first_discrepancy));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} series to height 12"))
}

fn c2_comparefinite_gl2() -> Outcome {
    let bundles = bundle_range(2, 6, 3);
    let mut checked = 0;
    for q in [2u64, 3] {
        let mut engine = EisEngine::new(2, q).unwrap();
        for chi in gl2_characters(q) {
            let r = check_comparefinite(&mut engine, &chi, &bundles, 8).map_err(|e| e.to_string())?;
            if !r.passed {
                return Err(format!("q={q} chi={chi}: {r}"));
            }
            checked += r.coefficients_checked;
        }
    }
    Ok(format!("{} bundles, 11 characters, {checked} components", bundles.len()))
}

fn c3_comparefinite_gl3() -> Outcome {
    let mut engine = EisEngine::new(3, 2).unwrap();
    let mut checked = 0;
    for chi in gl3_characters(2) {
        let r = check_comparefinite(&mut engine, &chi, &gl3_bundles(), 4).map_err(|e| e.to_string())?;
        if !r.passed {
            return Err(format!("chi={chi}: {r}"));
        }
        checked += r.coefficients_checked;
    }
    Ok(format!("{checked} components, both routes"))
}

fn c4_fullcompare() -> Outcome {
    let mut checked = 0;
    for q in [2u64, 3] {
        let mut engine = EisEngine::new(2, q).unwrap();
        for chi in gl2_characters(q) {
            let r = check_fullcompare(&mut engine, &chi, &bundle_range(2, 6, 3), 8).map_err(|e| e.to_string())?;
            if !r.passed {
                return Err(format!("GL2 q={q} chi={chi}: {r}"));
            }
            checked += r.coefficients_checked;
        }
    }
    let mut engine = EisEngine::new(3, 2).unwrap();
    for chi in gl3_characters(2) {
        let r = check_fullcompare(&mut engine, &chi, &gl3_bundles(), 4).map_err(|e| e.to_string())?;
        if !r.passed {
            return Err(format!("GL3 chi={chi}: {r}"));
        }
        checked += r.coefficients_checked;
    }
    Ok(format!("{checked} coefficients"))
}

fn c5_functional_equation() -> Outcome {
    let mut summary = Vec::new();
    let mut cases: Vec<(usize, u64, UnramifiedCharacter, Vec<SplitBundle>, u32)> = Vec::new();
    for q in [2u64, 3] {
        for chi in gl2_characters(q).into_iter().take(4) {
            cases.push((2, q, chi, bundle_range(2, 6, 3), 8));
        }
    }
    for chi in gl3_characters(2) {
        cases.push((3, 2, chi, gl3_bundles(), 12));
    }
    for (n, q, chi, bundles, height) in cases {
        let mut engine = EisEngine::new(n, q).unwrap();
        let r = fe_cocycle(&mut engine, &chi, &bundles, height).map_err(|e| e.to_string())?;
        if !r.passed {
            return Err(format!("GL{n} q={q} chi={chi}: {}", r.failure.unwrap_or_default()));
        }
        let mut constants: Vec<String> = r.constants.iter().map(|c| c.2.to_string()).collect();
        constants.sort();
        constants.dedup();
        summary.push(format!("GL{n}:{}", constants.join("/")));
    }
    summary.dedup();
    Ok(format!("cocycle holds, constants {}", summary.join(" ")))
}

fn c6_hecke() -> Outcome {
    let mut checked = 0;
    let points = [RationalPoint::Affine(0), RationalPoint::Affine(1), RationalPoint::Infinity];
    for q in [2u64, 3] {
        for (n, ks, bundles, chis) in [
            (2, vec![1], bundle_range(2, 4, 1), gl2_characters(q).into_iter().take(3).collect::<Vec<_>>()),
            (3, vec![1, 2], gl3_bundles(), gl3_characters(q)),
        ] {
            let mut engine = EisEngine::new(n, q).unwrap();
            for chi in &chis {
                for &k in &ks {
                    for kind in [EisKind::Classical, EisKind::Modified] {
                        let point = points[(k + checked) % points.len()];
                        let r = check_hecke_eigen(&mut engine, kind, chi, k, point, &bundles, 6).map_err(|e| e.to_string())?;
                        if !r.passed {
                            return Err(format!("GL{n} q={q} chi={chi} {kind}: {r}"));
                        }
                        checked += r.coefficients_checked;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} components"))
}

fn c7_multiplicities() -> Outcome {
    let mut checked = 0;
    for n in [2usize, 3] {
        let datum = BasedRootDatum::gl(n).unwrap();
        let mut rep = RepEngine::new(&datum).unwrap();
        let levis: Vec<Vec<usize>> = if n == 2 { vec![vec![]] } else { vec![vec![], vec![0], vec![1]] };
        for lambda in dominant_weights(n, 12) {
            let lw = Coweight(lambda.clone());
            let mut oracle = Freudenthal::new(&lambda);
            for mu in dominant_below(&lambda) {
                let ours = rep.weight_multiplicity(&lw, &Coweight(mu.clone())).map_err(|e| e.to_string())?;
                if ours as i64 != oracle.multiplicity(&mu) {
                    return Err(format!("V^{lw}({mu:?}): Kostant {ours}, Freudenthal {}", oracle.multiplicity(&mu)));
                }
                checked += 1;
            }
            let character = rep.character_of(&lw).map_err(|e| e.to_string())?;
            for levi in &levis {
                let sub = datum.levi_subdatum(levi).unwrap();
                let mut levi_rep = RepEngine::new(&sub).unwrap();
                let branching = geis_core::repcomb::branch_to_levi(&datum, levi, &lw).map_err(|e| e.to_string())?;
                for (mu, &m) in character.entries() {
                    let mut total = 0u64;
                    for (nu, &h) in &branching {
                        total += h * levi_rep.weight_multiplicity(nu, mu).map_err(|e| e.to_string())?;
                    }
                    if total != m {
                        return Err(format!("branching of {lw} to levi {levi:?} at {mu}: {total} != {m}"));
                    }
                }
            }
        }
        let mut kost = KostantCounter::new(&datum);
        for lambda in geis_core::eis::degree_window(&vec![0; n], 10) {
            let lam = Coweight(lambda.iter().map(|x| -x).collect());
            let total = kost.q_kostant(&lam).map_err(|e| e.to_string())?.total();
            let count = kostant_partition_count(&datum, &lam).map_err(|e| e.to_string())?;
            if total != count {
                return Err(format!("q_kostant({lam}) sums to {total}, partitions {count}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} multiplicities and partition counts"))
}

fn c8_counting() -> Outcome {
    let mut checked = 0;
    for q in [2u64, 3] {
        let mut counter = BundleCounter::new(q);
        for n in [2usize, 3] {
            // degrees 0..n cover every type up to twist
            let types: Vec<SplitBundle> = (0..n as i64).flat_map(|d| geis_core::bun::enumerate_split(n, d, 6)).collect();
            for m in &types {
                let inj = counter.inj_count(m, m).map_err(|e| e.to_string())?;
                if inj != aut_order(m, q) {
                    return Err(format!("q={q}: inj({m},{m}) = {inj}, |Aut| = {}", aut_order(m, q)));
                }
                for k in 1..=n {
                    let total = hecke_modifications_at(m, k, q, RationalPoint::Affine(0)).map_err(|e| e.to_string())?.total();
                    if BigInt::from(total) != gaussian_binomial(n, k, q) {
                        return Err(format!("q={q}: Hecke total for {m}, k={k} is {total}"));
                    }
                }
                // every subsheaf has a unique saturation
                let top = m.degrees()[0];
                for r in 1..n {
                    let upper: Vec<i64> = m.degrees()[..r].to_vec();
                    let low = m.degrees()[n - 1] - 3;
                    for deg in low * r as i64..=upper.iter().sum() {
                        for sub in geis_core::bun::types_between(deg, &upper, &vec![low; r]) {
                            let direct = counter.subsheaf_type_count(m, &sub).map_err(|e| e.to_string())?;
                            let mut via = BigInt::from(0);
                            for d2 in deg..=upper.iter().sum() {
                                for sat in geis_core::bun::types_between(d2, &upper, sub.degrees()) {
                                    let s = counter.saturated_subbundle_count(m, &sat).map_err(|e| e.to_string())?;
                                    via += s * counter.subsheaf_type_count(&sat, &sub).map_err(|e| e.to_string())?;
                                }
                            }
                            if direct != via {
                                return Err(format!("q={q}: saturation sum for {sub} in {m}: {via} != {direct}"));
                            }
                            checked += 1;
                        }
                    }
                }
                // rank-1 subbundles by divisor inversion agree with type inversion
                for d in top - 4..=top {
                    let line = SplitBundle::new(vec![d]);
                    let a = counter.line_subbundle_count(m, d);
                    let b = counter.saturated_subbundle_count(m, &line).map_err(|e| e.to_string())?;
                    if a != b {
                        return Err(format!("q={q}: line subbundles O({d}) of {m}: {a} vs {b}"));
                    }
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} identities"))
}

/// Written straight to the stderr handle so the lines show up without
/// `--nocapture`.
fn report(line: String) {
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{line}");
}

#[test]
fn primary_criteria() {
    let criteria: Vec<(&str, u64, fn() -> Outcome)> = vec![
        ("1 zeta/L sanity", 1, c1_zeta),
        ("2 comparefinite GL2", 30, c2_comparefinite_gl2),
        ("3 comparefinite GL3 (Kostant route)", 120, c3_comparefinite_gl3),
        ("4 fullcompare GL2/GL3", 120, c4_fullcompare),
        ("5 functional equation + cocycle", 120, c5_functional_equation),
        ("6 Hecke eigenvalues", 120, c6_hecke),
        ("7 multiplicity suite", 30, c7_multiplicities),
        ("8 counting oracles", 30, c8_counting),
    ];
    let handles: Vec<_> = criteria
        .iter()
        .map(|&(name, budget, f)| {
            thread::Builder::new()
                .stack_size(64 << 20)
                .spawn(move || {
                    let start = Instant::now();
                    let outcome = f();
                    (name, budget, start.elapsed(), outcome)
                })
                .unwrap()
        })
        .collect();
    let mut failures = Vec::new();
    for h in handles {
        let (name, budget, elapsed, outcome) = h.join().expect("criterion panicked");
        let over = elapsed > Duration::from_secs(budget);
        match &outcome {
            Ok(detail) => report(format!(
                "PASS criterion {name}: {detail} [{:.2}s, budget {budget}s{}]",
                elapsed.as_secs_f64(),
                if over { ", over budget" } else { "" }
            )),
            Err(why) => {
                report(format!("FAIL criterion {name}: {why} [{:.2}s]", elapsed.as_secs_f64()));
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
