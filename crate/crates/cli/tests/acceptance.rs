//! Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::Parser;
use csmlap_cli::fuzz::{self, Check, FuzzConfig};
use csmlap_cli::{run, RunConfig};
use csmlap_core::csm::{initialized_det_expansion, initialized_det_factored};
use csmlap_core::{
    build_doubled, build_initialized, build_tilde, condense, csm_lhs, csm_rhs, csm_terms,
    laplace_det, CsmPartition, Label, LabeledMatrix, RingContext, RingValue, Sign, SignVariant,
    Subset,
};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Verdict {
    Verdict {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Verdict {
    Verdict {
        ok: false,
        detail: detail.into(),
    }
}

fn criterion(id: u8, title: &str, limit: Option<Duration>, body: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let mut v = body();
    let elapsed = start.elapsed();
    let timing = match limit {
        Some(l) if elapsed >= l => {
            v.ok = false;
            format!(
                "{:.2}s, limit {}s exceeded",
                elapsed.as_secs_f64(),
                l.as_secs()
            )
        }
        Some(l) => format!("{:.2}s < {}s", elapsed.as_secs_f64(), l.as_secs()),
        None => format!("{:.2}s", elapsed.as_secs_f64()),
    };
    println!(
        "{} criterion {id}: {title}: {} ({timing})",
        if v.ok { "PASS" } else { "FAIL" },
        v.detail
    );
    v.ok
}

fn labels(v: &[i64]) -> Vec<Label> {
    v.iter().copied().map(Label::int).collect()
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize, zero_share: f64) -> LabeledMatrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.random_bool(zero_share) {
                        0
                    } else {
                        rng.random_range(-9..=9)
                    }
                })
                .collect()
        })
        .collect();
    LabeledMatrix::integers(&rows).unwrap()
}

fn random_partition(rng: &mut ChaCha8Rng, a: &LabeledMatrix) -> CsmPartition {
    let n = a.nrows();
    let all: Vec<usize> = (0..n).collect();
    let pick = |rng: &mut ChaCha8Rng, pool: &[usize], k: usize| {
        Subset::from_positions(pool.choose_multiple(rng, k).copied().collect(), n).unwrap()
    };
    let fk = rng.random_range(0..n);
    let f = pick(rng, &all, fk);
    let g = pick(rng, &all, fk);
    let rest: Vec<usize> = all.iter().copied().filter(|&p| !f.contains(p)).collect();
    let ik = rng.random_range(0..=rest.len());
    let i = pick(rng, &rest, ik);
    CsmPartition::new(a.rows(), a.cols(), f, g, i).unwrap()
}

fn symbolic_expansion() -> Verdict {
    let config = RunConfig::try_parse_from([
        "csmlap",
        "expand",
        "--symbolic",
        "3",
        "--F",
        "2",
        "--G",
        "2",
        "--I",
        "1",
    ])
    .unwrap();
    let out = match run(&config) {
        Ok(o) => o,
        Err(e) => return fail(e.to_string()),
    };
    let v = &out.structured;
    let products = v["products"].as_array().map_or(0, Vec::len);
    let pairs = v["canceling_pairs"].as_array().map_or(0, Vec::len);
    let a = LabeledMatrix::symbolic(3);
    let ctx = a.context();
    let target = ctx
        .indeterminate("a22")
        .unwrap()
        .mul(&a.det_leibniz().unwrap())
        .unwrap();
    let rhs = ctx.parse_value(v["rhs"].as_str().unwrap_or("")).ok();
    let ok =
        products == 8 && pairs == 1 && rhs.as_ref() == Some(&target) && v["common_factor"] == "a22";
    let detail = format!(
        "{products} products, {pairs} canceling pair, rhs = a22*det(A): {}",
        rhs.as_ref() == Some(&target)
    );
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn binary_sweep() -> Verdict {
    let config = FuzzConfig {
        trials: 1,
        seed: 0,
        min_n: 3,
        max_n: 3,
        ring: RingContext::Integer,
        exhaustive: Some(3),
    };
    let report = match fuzz::run(&config) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let expected = 512 * 63;
    let (pos, rank) = (
        report.tally(Check::CsmPosition),
        report.tally(Check::CsmRank),
    );
    let detail = format!(
        "{} (matrix, partition) pairs, position {}/{} rank {}/{}",
        report.cases, pos.passed, pos.failed, rank.passed, rank.failed
    );
    if report.cases == expected && pos.passed == expected as u64 && rank.passed == expected as u64 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn random_fuzz(report: &fuzz::FuzzReport) -> Verdict {
    let checks = [
        Check::LaplacePosition,
        Check::LaplaceRank,
        Check::LaplaceComplement,
        Check::CsmPosition,
        Check::CsmRank,
        Check::CsmComplement,
        Check::DesnanotJacobi,
    ];
    let bad: Vec<&str> = checks
        .iter()
        .filter(|&&c| {
            let t = report.tally(c);
            t.failed != 0 || t.passed != report.cases as u64
        })
        .map(|c| c.name())
        .collect();
    let detail = format!(
        "{} trials, {} failures",
        report.cases,
        report.failures.len()
    );
    if report.cases == 1000 && bad.is_empty() {
        pass(detail)
    } else {
        fail(format!("{detail}; failing checks {bad:?}"))
    }
}

fn pattern(a: &LabeledMatrix, rows: &[&str]) -> Vec<Vec<RingValue>> {
    let ctx = a.context();
    rows.iter()
        .map(|r| {
            r.split_whitespace()
                .map(|e| {
                    if e == "0" {
                        ctx.zero()
                    } else {
                        ctx.indeterminate(&format!("a{e}")).unwrap()
                    }
                })
                .collect()
        })
        .collect()
}

fn entries(a: &LabeledMatrix) -> Vec<Vec<RingValue>> {
    (0..a.nrows()).map(|r| a.row(r).to_vec()).collect()
}

fn construction_fidelity() -> Verdict {
    let a = LabeledMatrix::symbolic(6);
    let p = CsmPartition::from_labels(
        a.rows(),
        a.cols(),
        &labels(&[2, 4]),
        &labels(&[3, 5]),
        &labels(&[1, 6]),
    )
    .unwrap();
    let hat = build_doubled(&a, p.f(), p.g()).unwrap();
    let avec = build_initialized(&a, &p).unwrap();
    let tilde = build_tilde(&avec, &labels(&[2, 4]), &labels(&[3, 5])).unwrap();
    let doubled_ok = entries(&hat)
        == pattern(
            &a,
            &[
                "11 12 13 13 14 15 15 16",
                "21 22 23 23 24 25 25 26",
                "21 22 23 23 24 25 25 26",
                "31 32 33 33 34 35 35 36",
                "41 42 43 43 44 45 45 46",
                "41 42 43 43 44 45 45 46",
                "51 52 53 53 54 55 55 56",
                "61 62 63 63 64 65 65 66",
            ],
        );
    let initialized_ok = entries(&avec)
        == pattern(
            &a,
            &[
                "11 12 13 0 14 15 0 16",
                "21 22 23 0 24 25 0 26",
                "21 22 0 23 24 0 25 26",
                "31 32 0 33 34 0 35 36",
                "41 42 43 0 44 45 0 46",
                "41 42 0 43 44 0 45 46",
                "51 52 0 53 54 0 55 56",
                "61 62 63 0 64 65 0 66",
            ],
        );
    let reduced_ok = entries(&tilde)
        == pattern(
            &a,
            &[
                "11 12 13 0 14 15 0 16",
                "21 22 23 0 24 25 0 26",
                "0 0 0 23 0 0 25 0",
                "31 32 33 33 34 35 35 36",
                "41 42 43 0 44 45 0 46",
                "0 0 0 43 0 0 45 0",
                "51 52 53 53 54 55 55 56",
                "61 62 63 0 64 65 0 66",
            ],
        );
    let labels_ok = avec.rows().to_string() == "(1,2,2+,3,4,4+,5,6)"
        && avec.cols().to_string() == "(1,2,3,3+,4,5,5+,6)";
    // rank sums: F = {2,4} against rows {1,3,5,6} gives 1 + 2, G = {3,5} against
    // columns {1,2,4,6} gives 2 + 3
    let sign = Sign::from_exponent((1 + 2) + (2 + 3));
    let signed = sign.apply(&csm_lhs(&a, p.f(), p.g()).unwrap());
    let det_vec = avec.det_leibniz().unwrap();
    let det_tilde = tilde.det_leibniz().unwrap();
    let dets_ok = det_vec == signed && det_tilde == signed;
    let detail = format!(
        "doubled {doubled_ok}, initialized {initialized_ok}, reduced {reduced_ok}, labels {labels_ok}, det(reduced) = det(initialized) = ({sign}1)*lhs {dets_ok}"
    );
    if doubled_ok && initialized_ok && reduced_ok && labels_ok && dets_ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn closed_forms() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let mut agree = 0;
    for _ in 0..100 {
        let a = random_matrix(&mut rng, 5, 0.0);
        let p = random_partition(&mut rng, &a);
        let det = build_initialized(&a, &p).unwrap().det_leibniz().unwrap();
        if initialized_det_expansion(&a, &p).unwrap() == det
            && initialized_det_factored(&a, &p).unwrap() == det
        {
            agree += 1;
        }
    }
    let detail = format!("{agree}/100 matrices agree with both closed forms");
    if agree == 100 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn condensation() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(600);
    let (mut agree, mut fallback) = (0, 0);
    for t in 0..500 {
        let n = rng.random_range(2..=7);
        let zero_share = if t % 3 == 0 { 0.6 } else { 0.0 };
        let a = random_matrix(&mut rng, n, zero_share);
        let trace = condense(&a).unwrap();
        if !trace.fallback_events.is_empty() {
            fallback += 1;
        }
        if trace.determinant() == &a.det_leibniz().unwrap() {
            agree += 1;
        }
    }
    let detail = format!("{agree}/500 agree, {fallback} used the fallback");
    if agree == 500 && fallback >= 50 {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn degenerations(report: &fuzz::FuzzReport) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(700);
    let mut bad = 0;
    for _ in 0..50 {
        let a = random_matrix(&mut rng, 5, 0.0);
        for mask in 0u32..32 {
            let i = Subset::from_positions((0..5).filter(|b| mask & (1 << b) != 0).collect(), 5)
                .unwrap();
            let p = CsmPartition::new(
                a.rows(),
                a.cols(),
                Subset::empty(5),
                Subset::empty(5),
                i.clone(),
            )
            .unwrap();
            for v in SignVariant::ALL {
                if csm_rhs(&a, &p, v).unwrap() != laplace_det(&a, &i, v).unwrap() {
                    bad += 1;
                }
            }
        }
        let q = random_partition(&mut rng, &a);
        let p = CsmPartition::new(
            a.rows(),
            a.cols(),
            q.f().clone(),
            q.g().clone(),
            Subset::empty(5),
        )
        .unwrap();
        let lhs = csm_lhs(&a, p.f(), p.g()).unwrap();
        for v in SignVariant::ALL {
            let (outer, terms) = csm_terms(&a, &p, v).unwrap();
            if outer != Sign::Plus
                || terms.len() != 1
                || terms[0].sign != Sign::Plus
                || terms[0].product != lhs
            {
                bad += 1;
            }
        }
    }
    let common = report.tally(Check::EmptyCommonBlock);
    let free = report.tally(Check::EmptyFreeRows);
    let fuzz_ok =
        common.failed == 0 && free.failed == 0 && common.passed == 1000 && free.passed == 1000;
    let detail = format!(
        "{bad} mismatches on random 5x5; fuzz empty-common-block {}/{}, empty-free-rows {}/{}",
        common.passed, common.failed, free.passed, free.failed
    );
    if bad == 0 && fuzz_ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut all = true;
    all &= criterion(
        1,
        "symbolic 3x3 expansion",
        Some(secs(1)),
        symbolic_expansion,
    );
    all &= criterion(
        2,
        "every {0,1} 3x3 matrix and partition",
        Some(secs(60)),
        binary_sweep,
    );
    let mut report = None;
    all &= criterion(
        3,
        "1000 seeded random trials",
        Some(secs(120)),
        || match fuzz::run(&FuzzConfig::integers(1000, 20240601, 6)) {
            Ok(r) => {
                let v = random_fuzz(&r);
                report = Some(r);
                v
            }
            Err(e) => fail(e.to_string()),
        },
    );
    all &= criterion(
        4,
        "running example construction",
        None,
        construction_fidelity,
    );
    all &= criterion(
        5,
        "initialized determinant closed forms",
        None,
        closed_forms,
    );
    all &= criterion(
        6,
        "condensation against the permutation sum",
        Some(secs(120)),
        condensation,
    );
    all &= criterion(7, "degenerate partitions", None, || match &report {
        Some(r) => degenerations(r),
        None => fail("fuzz report unavailable"),
    });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
