//! Randomized and exhaustive checking of every identity.
//!
//! Trial `t` draws from a ChaCha8 generator seeded with the run seed on stream
//! `t`, so results do not depend on how trials are scheduled across threads.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use csmlap_core::csm::{initialized_det_expansion, initialized_det_factored};
use csmlap_core::matrix::LEIBNIZ_CAP;
use csmlap_core::{
    build_initialized, csm_lhs, csm_rhs, csm_rhs_complement, csm_terms, desnanot_jacobi,
    det_condensation, laplace_det, laplace_det_dropped, CsmPartition, LabeledMatrix, RingContext,
    RingValue, Sign, SignVariant, Subset,
};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::FuzzArgs;
use crate::error::{CliError, Result};

/// Largest number of matrices an exhaustive sweep will enumerate.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub trials: usize,
    pub seed: u64,
    pub min_n: usize,
    pub max_n: usize,
    pub ring: RingContext,
    pub exhaustive: Option<usize>,
}

impl TryFrom<&FuzzArgs> for FuzzConfig {
    type Error = CliError;

    fn try_from(args: &FuzzArgs) -> Result<Self> {
        let config = Self {
            trials: args.trials,
            seed: args.seed,
            min_n: args.min_n,
            max_n: args.max_n,
            ring: args.ring.clone(),
            exhaustive: args.exhaustive,
        };
        config.validate()?;
        Ok(config)
    }
}

impl FuzzConfig {
    /// Random trials over the integers with sizes `2..=max_n`.
    pub fn integers(trials: usize, seed: u64, max_n: usize) -> Self {
        Self {
            trials,
            seed,
            min_n: 2,
            max_n,
            ring: RingContext::Integer,
            exhaustive: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let usage = |m: String| Err(CliError::Usage(m));
        if matches!(self.ring, RingContext::Polynomial(_)) {
            return usage("fuzz draws integer, rational or modular entries; polynomial rings are not supported".into());
        }
        if let Some(n) = self.exhaustive {
            if n == 0 || n > LEIBNIZ_CAP {
                return usage(format!("--exhaustive needs a size in 1..={LEIBNIZ_CAP}"));
            }
            let count = (alphabet(&self.ring).len() as u64).checked_pow((n * n) as u32);
            if count.is_none_or(|c| c > EXHAUSTIVE_LIMIT) {
                return usage(format!(
                    "an exhaustive sweep at size {n} over {} exceeds {EXHAUSTIVE_LIMIT} matrices",
                    self.ring
                ));
            }
            return Ok(());
        }
        if self.trials == 0 {
            return usage("--trials must be at least 1".into());
        }
        if self.min_n == 0 || self.min_n > self.max_n || self.max_n > LEIBNIZ_CAP {
            return usage(format!(
                "sizes must satisfy 1 <= min-n <= max-n <= {LEIBNIZ_CAP}, got {}..{}",
                self.min_n, self.max_n
            ));
        }
        Ok(())
    }
}

/// One identity checked per case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    LaplacePosition,
    LaplaceRank,
    LaplaceComplement,
    CsmPosition,
    CsmRank,
    CsmComplement,
    InitializedExpansion,
    InitializedFactored,
    DesnanotJacobi,
    EmptyCommonBlock,
    EmptyFreeRows,
    Condensation,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::LaplacePosition,
        Check::LaplaceRank,
        Check::LaplaceComplement,
        Check::CsmPosition,
        Check::CsmRank,
        Check::CsmComplement,
        Check::InitializedExpansion,
        Check::InitializedFactored,
        Check::DesnanotJacobi,
        Check::EmptyCommonBlock,
        Check::EmptyFreeRows,
        Check::Condensation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::LaplacePosition => "laplace-position",
            Check::LaplaceRank => "laplace-rank",
            Check::LaplaceComplement => "laplace-complement",
            Check::CsmPosition => "csm-position",
            Check::CsmRank => "csm-rank",
            Check::CsmComplement => "csm-complement",
            Check::InitializedExpansion => "initialized-expansion",
            Check::InitializedFactored => "initialized-factored",
            Check::DesnanotJacobi => "desnanot-jacobi",
            Check::EmptyCommonBlock => "empty-common-block",
            Check::EmptyFreeRows => "empty-free-rows",
            Check::Condensation => "condensation",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Verdict {
    Pass,
    Fail(String),
    Skip,
}

/// A matrix, a partition, and the rows for the plain Laplace checks.
#[derive(Clone, Debug)]
pub struct Case {
    pub matrix: LabeledMatrix,
    pub partition: CsmPartition,
    pub rows: Subset,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub check: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: usize,
    pub check: &'static str,
    pub partition: String,
    pub matrix: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub mode: &'static str,
    pub seed: u64,
    pub ring: String,
    pub cases: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub checks: Vec<CheckTally>,
    /// Sorted by case index.
    pub failures: Vec<Failure>,
}

impl FuzzReport {
    pub fn tally(&self, check: Check) -> CheckTally {
        self.checks
            .iter()
            .copied()
            .find(|t| t.check == check.name())
            .unwrap_or_default()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "fuzz: {} cases ({}), ring {}, sizes {}..{}, seed {}",
            self.cases, self.mode, self.ring, self.min_n, self.max_n, self.seed
        );
        for t in &self.checks {
            let _ = writeln!(
                s,
                "  {:<22} passed {:>8}  failed {:>6}  skipped {:>6}",
                t.check, t.passed, t.failed, t.skipped
            );
        }
        for f in self.failures.iter().take(20) {
            let _ = writeln!(
                s,
                "FAIL case {} {}: {} ({})\n{}",
                f.case, f.check, f.detail, f.partition, f.matrix
            );
        }
        if self.failures.len() > 20 {
            let _ = writeln!(s, "... {} more failures", self.failures.len() - 20);
        }
        let _ = writeln!(s, "failures: {}", self.failures.len());
        s
    }
}

fn compare(got: csmlap_core::Result<RingValue>, want: &RingValue) -> Verdict {
    match got {
        Ok(v) if &v == want => Verdict::Pass,
        Ok(v) => Verdict::Fail(format!("got {v}, expected {want}")),
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

fn all_of(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    let mut skipped = false;
    for v in verdicts {
        match v {
            Verdict::Fail(_) => return v,
            Verdict::Skip => skipped = true,
            Verdict::Pass => {}
        }
    }
    if skipped {
        Verdict::Skip
    } else {
        Verdict::Pass
    }
}

/// Runs every check on one case.
fn check_case(case: &Case) -> Vec<(Check, Verdict)> {
    let Case {
        matrix: a,
        partition: p,
        rows: k,
    } = case;
    let n = a.nrows();
    let (det, lhs) = match (a.det_leibniz(), csm_lhs(a, p.f(), p.g())) {
        (Ok(d), Ok(l)) => (d, l),
        (Err(e), _) | (_, Err(e)) => {
            return Check::ALL
                .iter()
                .map(|&c| (c, Verdict::Fail(e.to_string())))
                .collect()
        }
    };
    let mut out = vec![
        (
            Check::LaplacePosition,
            compare(laplace_det(a, k, SignVariant::Position), &det),
        ),
        (
            Check::LaplaceRank,
            compare(laplace_det(a, k, SignVariant::Rank), &det),
        ),
        (
            Check::LaplaceComplement,
            all_of(SignVariant::ALL.map(|v| compare(laplace_det_dropped(a, k, v), &det))),
        ),
        (
            Check::CsmPosition,
            compare(csm_rhs(a, p, SignVariant::Position), &lhs),
        ),
        (
            Check::CsmRank,
            compare(csm_rhs(a, p, SignVariant::Rank), &lhs),
        ),
        (
            Check::CsmComplement,
            all_of(SignVariant::ALL.map(|v| compare(csm_rhs_complement(a, p, v), &lhs))),
        ),
    ];

    if n + p.f().len() <= LEIBNIZ_CAP {
        match build_initialized(a, p).and_then(|m| m.det_leibniz()) {
            Ok(d) => {
                out.push((
                    Check::InitializedExpansion,
                    compare(initialized_det_expansion(a, p), &d),
                ));
                out.push((
                    Check::InitializedFactored,
                    compare(initialized_det_factored(a, p), &d),
                ));
            }
            Err(e) => {
                out.push((Check::InitializedExpansion, Verdict::Fail(e.to_string())));
                out.push((Check::InitializedFactored, Verdict::Fail(e.to_string())));
            }
        }
    } else {
        out.push((Check::InitializedExpansion, Verdict::Skip));
        out.push((Check::InitializedFactored, Verdict::Skip));
    }

    let dj = if n < 2 {
        Verdict::Skip
    } else {
        match desnanot_jacobi(a) {
            Ok(r) if r.equal => Verdict::Pass,
            Ok(r) => Verdict::Fail(format!("lhs {} rhs {}", r.lhs, r.rhs)),
            Err(e) => Verdict::Fail(e.to_string()),
        }
    };
    out.push((Check::DesnanotJacobi, dj));

    let empty = Subset::empty(n);
    let empty_common = CsmPartition::new(
        a.rows(),
        a.cols(),
        empty.clone(),
        empty.clone(),
        p.i().clone(),
    )
    .map_err(|e| Verdict::Fail(e.to_string()))
    .map(|q| {
        all_of(SignVariant::ALL.map(|v| {
            all_of([
                compare(csm_rhs(a, &q, v), &det),
                compare(laplace_det(a, p.i(), v), &det),
            ])
        }))
    })
    .unwrap_or_else(|v| v);
    out.push((Check::EmptyCommonBlock, empty_common));

    let empty_free = CsmPartition::new(a.rows(), a.cols(), p.f().clone(), p.g().clone(), empty)
        .map_err(|e| Verdict::Fail(e.to_string()))
        .map(|q| {
            all_of(SignVariant::ALL.map(|v| match csm_terms(a, &q, v) {
                Ok((outer, terms)) => {
                    if outer != Sign::Plus || terms.len() != 1 || terms[0].sign != Sign::Plus {
                        Verdict::Fail(format!("{} terms, outer sign {outer}", terms.len()))
                    } else {
                        compare(Ok(terms[0].product.clone()), &lhs)
                    }
                }
                Err(e) => Verdict::Fail(e.to_string()),
            }))
        })
        .unwrap_or_else(|v| v);
    out.push((Check::EmptyFreeRows, empty_free));

    let cond = if a.context().is_integral_domain() {
        compare(det_condensation(a), &det)
    } else {
        Verdict::Skip
    };
    out.push((Check::Condensation, cond));
    out
}

fn random_entry(rng: &mut ChaCha8Rng, ring: &RingContext) -> RingValue {
    match ring {
        RingContext::Modular(m) => ring.from_integer(rng.random_range(0..m.get())),
        RingContext::Rational => {
            let (num, den) = (rng.random_range(-9..=9_i64), rng.random_range(1..=9_i64));
            ring.parse_value(&format!("{num}/{den}"))
                .expect("well-formed fraction")
        }
        _ => ring.from_integer(rng.random_range(-9..=9_i64)),
    }
}

fn random_subset(rng: &mut ChaCha8Rng, pool: &[usize], k: usize, universe: usize) -> Subset {
    let picked = pool.choose_multiple(rng, k).copied().collect();
    Subset::from_positions(picked, universe).expect("positions drawn from the universe")
}

/// Draws a matrix, then `|F|` uniform in `0..n`, `|I|` uniform in `0..=n-|F|`,
/// then uniform label sets, and finally an independent Laplace row set.
pub fn random_case(config: &FuzzConfig, trial: usize) -> Case {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial as u64);
    let n = rng.random_range(config.min_n..=config.max_n);
    let entries = (0..n * n)
        .map(|_| random_entry(&mut rng, &config.ring))
        .collect();
    let a = LabeledMatrix::new(
        csmlap_core::OrderedIndexSet::natural(n),
        csmlap_core::OrderedIndexSet::natural(n),
        config.ring.clone(),
        entries,
    )
    .expect("entries fit the shape");
    let all: Vec<usize> = (0..n).collect();
    let fk = rng.random_range(0..n);
    let f = random_subset(&mut rng, &all, fk, n);
    let g = random_subset(&mut rng, &all, fk, n);
    let rest: Vec<usize> = all.iter().copied().filter(|&x| !f.contains(x)).collect();
    let ik = rng.random_range(0..=rest.len());
    let i = random_subset(&mut rng, &rest, ik, n);
    let kk = rng.random_range(0..=n);
    let rows = random_subset(&mut rng, &all, kk, n);
    let partition = CsmPartition::new(a.rows(), a.cols(), f, g, i).expect("valid by construction");
    Case {
        matrix: a,
        partition,
        rows,
    }
}

fn alphabet(ring: &RingContext) -> Vec<RingValue> {
    match ring {
        RingContext::Modular(m) => (0..m.get()).map(|v| ring.from_integer(v)).collect(),
        _ => vec![ring.zero(), ring.one()],
    }
}

/// The `index`-th matrix of the sweep, reading `index` in base `|alphabet|`.
fn enumerated_matrix(
    ring: &RingContext,
    symbols: &[RingValue],
    n: usize,
    mut index: u64,
) -> LabeledMatrix {
    let base = symbols.len() as u64;
    let entries = (0..n * n)
        .map(|_| {
            let d = (index % base) as usize;
            index /= base;
            symbols[d].clone()
        })
        .collect();
    LabeledMatrix::new(
        csmlap_core::OrderedIndexSet::natural(n),
        csmlap_core::OrderedIndexSet::natural(n),
        ring.clone(),
        entries,
    )
    .expect("entries fit the shape")
}

fn describe(a: &LabeledMatrix, p: &CsmPartition, k: &Subset) -> String {
    let list = |set: &csmlap_core::OrderedIndexSet, s: &Subset| {
        set.labels_of(s)
            .map(|ls| {
                ls.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .unwrap_or_default()
    };
    format!(
        "F={{{}}} G={{{}}} I={{{}}} K={{{}}}",
        list(a.rows(), p.f()),
        list(a.cols(), p.g()),
        list(a.rows(), p.i()),
        list(a.rows(), k)
    )
}

type CaseResult = (Vec<(Check, Verdict)>, Vec<Failure>);

fn evaluate(index: usize, case: &Case) -> CaseResult {
    let verdicts = check_case(case);
    let failures = verdicts
        .iter()
        .filter_map(|(c, v)| match v {
            Verdict::Fail(detail) => Some(Failure {
                case: index,
                check: c.name(),
                partition: describe(&case.matrix, &case.partition, &case.rows),
                matrix: case.matrix.to_file_string(),
                detail: detail.clone(),
            }),
            _ => None,
        })
        .collect();
    (verdicts, failures)
}

/// Runs the configured trials (or sweep) in parallel and tallies every check.
pub fn run(config: &FuzzConfig) -> Result<FuzzReport> {
    config.validate()?;
    let results: Vec<CaseResult> = match config.exhaustive {
        None => (0..config.trials)
            .into_par_iter()
            .map(|t| evaluate(t, &random_case(config, t)))
            .collect(),
        Some(n) => {
            let symbols = alphabet(&config.ring);
            let count = (symbols.len() as u64).pow((n * n) as u32);
            let per_matrix = CsmPartition::enumerate(
                &csmlap_core::OrderedIndexSet::natural(n),
                &csmlap_core::OrderedIndexSet::natural(n),
            )?;
            let stride = per_matrix.len();
            (0..count)
                .into_par_iter()
                .flat_map_iter(|m| {
                    let a = enumerated_matrix(&config.ring, &symbols, n, m);
                    let per_matrix = &per_matrix;
                    per_matrix.iter().enumerate().map(move |(j, p)| {
                        let rows = p.f().union(p.i()).expect("same universe");
                        let case = Case {
                            matrix: a.clone(),
                            partition: p.clone(),
                            rows,
                        };
                        evaluate(m as usize * stride + j, &case)
                    })
                })
                .collect()
        }
    };
    let mut tallies: BTreeMap<Check, CheckTally> = Check::ALL
        .iter()
        .map(|&c| {
            (
                c,
                CheckTally {
                    check: c.name(),
                    ..CheckTally::default()
                },
            )
        })
        .collect();
    let mut failures = Vec::new();
    let cases = results.len();
    for (verdicts, fails) in results {
        for (c, v) in verdicts {
            let t = tallies.get_mut(&c).expect("every check is tallied");
            match v {
                Verdict::Pass => t.passed += 1,
                Verdict::Fail(_) => t.failed += 1,
                Verdict::Skip => t.skipped += 1,
            }
        }
        failures.extend(fails);
    }
    failures.sort_by_key(|f| f.case);
    let (min_n, max_n) = match config.exhaustive {
        Some(n) => (n, n),
        None => (config.min_n, config.max_n),
    };
    Ok(FuzzReport {
        mode: if config.exhaustive.is_some() {
            "exhaustive"
        } else {
            "random"
        },
        seed: config.seed,
        ring: config.ring.to_string(),
        cases,
        min_n,
        max_n,
        checks: tallies.into_values().collect(),
        failures,
    })
}
