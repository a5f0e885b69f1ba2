//! One function per subcommand.

use csmlap_core::condensation::FallbackEvent;
use csmlap_core::laplace::determinant;
use csmlap_core::matrix::LEIBNIZ_CAP;
use csmlap_core::{
    build_doubled, build_initialized, build_tilde, condense, csm_lhs, laplace_terms, ring,
    verify_csm, CsmReport, ExpansionTerm, Label, LabeledMatrix, RingValue, Sign, SignVariant,
    Subset,
};
use serde::Serialize;

use crate::config::{Algorithm, Command, LabelList, MatrixArgs, PartitionArgs, RunConfig};
use crate::error::Result;
use crate::output::{push_line, MatrixView, Outcome, Status};
use crate::{expand, fuzz};

/// Runs the configured command.
pub fn run(config: &RunConfig) -> Result<Outcome> {
    match &config.command {
        Command::Det {
            matrix,
            algo,
            rows,
            variant,
        } => cmd_det(matrix, *algo, rows.as_ref(), *variant),
        Command::VerifyCsm {
            matrix,
            partition,
            variant,
        } => cmd_verify_csm(matrix, partition, *variant),
        Command::VerifyLaplace {
            matrix,
            rows,
            variant,
        } => cmd_verify_laplace(matrix, rows, *variant),
        Command::Expand {
            matrix,
            partition,
            variant,
        } => {
            let a = matrix.load()?;
            let p = partition.resolve(&a)?;
            let report = expand::expand(&a, &p, *variant)?;
            Ok(Outcome::new(
                Status::from_check(report.equal && report.quotient_matches),
                report.to_text(),
                &report,
            ))
        }
        Command::Fuzz(args) => {
            let report = fuzz::run(&fuzz::FuzzConfig::try_from(args)?)?;
            Ok(Outcome::new(
                Status::from_check(report.failures.is_empty()),
                report.to_text(),
                &report,
            ))
        }
        Command::BuildInitialized { matrix, partition } => cmd_build_initialized(matrix, partition),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DetReport {
    pub algorithm: &'static str,
    pub ring: String,
    pub determinant: RingValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Label>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fallback_events: Option<Vec<FallbackEvent>>,
}

pub fn cmd_det(
    matrix: &MatrixArgs,
    algo: Algorithm,
    rows: Option<&LabelList>,
    variant: SignVariant,
) -> Result<Outcome> {
    let a = matrix.load()?;
    a.require_square()?;
    let ring = a.context().to_string();
    let report = match algo {
        Algorithm::Leibniz => DetReport {
            algorithm: "leibniz",
            ring,
            determinant: a.det_leibniz()?,
            rows: None,
            fallback_events: None,
        },
        Algorithm::Laplace => {
            let k = match rows {
                Some(list) => list.subset_of(a.rows())?,
                None if a.nrows() == 0 => Subset::empty(0),
                None => Subset::from_positions(vec![0], a.nrows())?,
            };
            let terms = laplace_terms(&a, &k, variant)?;
            DetReport {
                algorithm: "laplace",
                ring,
                determinant: ring::sum(a.context(), terms.iter().map(|t| &t.product))?,
                rows: Some(a.rows().labels_of(&k)?),
                fallback_events: None,
            }
        }
        Algorithm::Condensation => {
            let trace = condense(&a)?;
            DetReport {
                algorithm: "condensation",
                ring,
                determinant: trace.determinant().clone(),
                rows: None,
                fallback_events: Some(trace.fallback_events),
            }
        }
    };
    Ok(Outcome::new(
        Status::Ok,
        format!("{}\n", report.determinant),
        &report,
    ))
}

pub fn cmd_verify_csm(
    matrix: &MatrixArgs,
    partition: &PartitionArgs,
    variant: SignVariant,
) -> Result<Outcome> {
    let a = matrix.load()?;
    let p = partition.resolve(&a)?;
    Ok(csm_outcome(&verify_csm(&a, &p, variant)?))
}

/// Exit status and both renderings of a common-submatrix report.
pub fn csm_outcome(report: &CsmReport) -> Outcome {
    Outcome::new(Status::from_check(report.holds()), report.to_text(), report)
}

#[derive(Clone, Debug, Serialize)]
pub struct LaplaceReport {
    pub rows: Vec<Label>,
    pub variant: SignVariant,
    pub terms: Vec<ExpansionTerm>,
    pub value: RingValue,
    pub reference_algorithm: &'static str,
    pub reference: RingValue,
    pub equal: bool,
}

impl LaplaceReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let list: Vec<String> = self.rows.iter().map(ToString::to_string).collect();
        push_line(
            &mut s,
            format_args!(
                "Laplace expansion along rows {{{}}} ({} variant)",
                list.join(","),
                self.variant
            ),
        );
        push_line(&mut s, format_args!("terms: {}", self.terms.len()));
        for t in &self.terms {
            let cols: Vec<String> = t.labels.iter().map(ToString::to_string).collect();
            push_line(
                &mut s,
                format_args!(
                    "  L = {{{}}}  sign {}  det(A[K|L]) = {}  det(A[K'|L']) = {}  term = {}",
                    cols.join(","),
                    t.sign,
                    t.minor_first,
                    t.minor_second,
                    t.product
                ),
            );
        }
        push_line(&mut s, format_args!("expansion = {}", self.value));
        push_line(
            &mut s,
            format_args!("{} = {}", self.reference_algorithm, self.reference),
        );
        push_line(
            &mut s,
            format_args!(
                "verdict: {}",
                if self.equal { "EQUAL" } else { "NOT-EQUAL" }
            ),
        );
        s
    }
}

/// Determinant by a route independent of the Laplace code where possible.
fn reference_det(a: &LabeledMatrix) -> Result<(&'static str, RingValue)> {
    if a.nrows() <= LEIBNIZ_CAP {
        Ok(("leibniz", a.det_leibniz()?))
    } else if a.context().is_integral_domain() {
        Ok(("condensation", condense(a)?.determinant().clone()))
    } else {
        Ok(("row-expansion", determinant(a)?))
    }
}

pub fn cmd_verify_laplace(
    matrix: &MatrixArgs,
    rows: &LabelList,
    variant: SignVariant,
) -> Result<Outcome> {
    let a = matrix.load()?;
    let k = rows.subset_of(a.rows())?;
    let terms = laplace_terms(&a, &k, variant)?;
    let value = ring::sum(a.context(), terms.iter().map(|t| &t.product))?;
    let (reference_algorithm, reference) = reference_det(&a)?;
    let report = LaplaceReport {
        rows: rows.0.clone(),
        variant,
        terms,
        equal: value == reference,
        value,
        reference_algorithm,
        reference,
    };
    Ok(Outcome::new(
        Status::from_check(report.equal),
        report.to_text(),
        &report,
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedMatrix {
    pub name: &'static str,
    pub matrix: MatrixView,
    #[serde(skip)]
    display: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct InitializedDeterminants {
    pub initialized: RingValue,
    pub reduced: RingValue,
    pub sign: Sign,
    /// `sign * det A[F|G] * det A`.
    pub signed_lhs: RingValue,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InitializedReport {
    pub matrices: Vec<NamedMatrix>,
    /// Present when the enlarged matrix is within the permutation-sum cap.
    pub determinants: Option<InitializedDeterminants>,
}

impl InitializedReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for m in &self.matrices {
            push_line(&mut s, format_args!("{}:", m.name));
            push_line(&mut s, &m.display);
        }
        if let Some(d) = &self.determinants {
            push_line(&mut s, format_args!("det(initialized) = {}", d.initialized));
            push_line(&mut s, format_args!("det(reduced)     = {}", d.reduced));
            push_line(
                &mut s,
                format_args!("({}1) * det(A[F|G]) * det(A) = {}", d.sign, d.signed_lhs),
            );
            push_line(
                &mut s,
                format_args!("verdict: {}", if d.equal { "EQUAL" } else { "NOT-EQUAL" }),
            );
        }
        s
    }
}

pub fn cmd_build_initialized(matrix: &MatrixArgs, partition: &PartitionArgs) -> Result<Outcome> {
    let a = matrix.load()?;
    let p = partition.resolve(&a)?;
    let report = initialized_report(&a, &p)?;
    let status = Status::from_check(report.determinants.as_ref().is_none_or(|d| d.equal));
    Ok(Outcome::new(status, report.to_text(), &report))
}

pub fn initialized_report(
    a: &LabeledMatrix,
    p: &csmlap_core::CsmPartition,
) -> Result<InitializedReport> {
    let hat = build_doubled(a, p.f(), p.g())?;
    let avec = build_initialized(a, p)?;
    let f = a.rows().labels_of(p.f())?;
    let g = a.cols().labels_of(p.g())?;
    let cols_added = build_tilde(&avec, &[], &g)?;
    let tilde = build_tilde(&avec, &f, &g)?;
    let named = |name: &'static str, m: &LabeledMatrix| NamedMatrix {
        name,
        matrix: m.into(),
        display: m.to_string(),
    };
    let determinants = if avec.nrows() <= LEIBNIZ_CAP {
        let sign = a
            .rows()
            .sign_of_sum(&p.relative_rows(), p.f(), SignVariant::Rank)?
            * a.cols()
                .sign_of_sum(&p.relative_cols(), p.g(), SignVariant::Rank)?;
        let initialized = avec.det_leibniz()?;
        let reduced = tilde.det_leibniz()?;
        let signed_lhs = sign.apply(&csm_lhs(a, p.f(), p.g())?);
        Some(InitializedDeterminants {
            equal: initialized == signed_lhs && reduced == signed_lhs,
            initialized,
            reduced,
            sign,
            signed_lhs,
        })
    } else {
        None
    };
    Ok(InitializedReport {
        matrices: vec![
            named("A", a),
            named("doubled (rows f+ and columns g+ repeat f and g)", &hat),
            named("initialized", &avec),
            named("initialized, column g+ added to column g", &cols_added),
            named("reduced (then row f subtracted from row f+)", &tilde),
        ],
        determinants,
    })
}
