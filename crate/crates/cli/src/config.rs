//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use csmlap_core::index::parse_label_list;
use csmlap_core::{
    CsmPartition, Label, LabeledMatrix, OrderedIndexSet, RingContext, SignVariant, Subset,
};

use crate::error::{CliError, Result};

/// Exact determinants and common-submatrix Laplace expansions.
#[derive(Clone, Debug, Parser)]
#[command(name = "csmlap", version, about)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// `text` for people, `structured` for JSON.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Leibniz,
    Laplace,
    Condensation,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Print the determinant.
    Det {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, value_enum, default_value_t = Algorithm::Leibniz)]
        algo: Algorithm,
        /// Row labels to expand along with `--algo laplace` (default: the first row).
        #[arg(long, value_parser = parse_labels)]
        rows: Option<LabelList>,
        #[arg(long, value_parser = parse_variant, default_value = "rank")]
        variant: SignVariant,
    },
    /// Check `det A[F|G] * det A` against the common-submatrix expansion.
    VerifyCsm {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[command(flatten)]
        partition: PartitionArgs,
        #[arg(long, value_parser = parse_variant, default_value = "rank")]
        variant: SignVariant,
    },
    /// Check a Laplace expansion along the given rows against the reference determinant.
    VerifyLaplace {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, value_parser = parse_labels)]
        rows: LabelList,
        #[arg(long, value_parser = parse_variant, default_value = "rank")]
        variant: SignVariant,
    },
    /// Expand both sides of the common-submatrix identity into monomials.
    Expand {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[command(flatten)]
        partition: PartitionArgs,
        #[arg(long, value_parser = parse_variant, default_value = "rank")]
        variant: SignVariant,
    },
    /// Check every identity on random (or all) matrices and partitions.
    Fuzz(FuzzArgs),
    /// Print A, the doubled matrix, the initialization matrix and its reduced form.
    BuildInitialized {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[command(flatten)]
        partition: PartitionArgs,
    },
}

#[derive(Clone, Debug, Args)]
pub struct MatrixArgs {
    /// Matrix file (header lines `ring`, `rows`, `cols`, then one row per line).
    #[arg(
        long,
        conflicts_with = "symbolic",
        required_unless_present = "symbolic"
    )]
    pub matrix: Option<PathBuf>,
    /// Use the `N x N` matrix of indeterminates `a11 .. aNN` instead of a file.
    #[arg(long, value_name = "N")]
    pub symbolic: Option<usize>,
    /// Reinterpret the entries in this ring (`integer`, `rational`, `mod:M`, `poly:x,y`).
    #[arg(long, value_parser = parse_ring)]
    pub ring: Option<RingContext>,
}

#[derive(Clone, Debug, Default, Args)]
pub struct PartitionArgs {
    /// Fixed rows of the common submatrix.
    #[arg(long = "F", value_parser = parse_labels, default_value = "")]
    pub f: LabelList,
    /// Fixed columns of the common submatrix.
    #[arg(long = "G", value_parser = parse_labels, default_value = "")]
    pub g: LabelList,
    /// Rows paired with the varying columns; the remaining rows form `I'`.
    #[arg(long = "I", value_parser = parse_labels, default_value = "")]
    pub i: LabelList,
}

#[derive(Clone, Debug, Args)]
pub struct FuzzArgs {
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub min_n: usize,
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    #[arg(long, value_parser = parse_ring, default_value = "integer")]
    pub ring: RingContext,
    /// Sweep every matrix of this size over `{0, 1}` (every residue for `mod:M`)
    /// with every partition, instead of random trials.
    #[arg(long, value_name = "N")]
    pub exhaustive: Option<usize>,
}

/// A comma or whitespace separated label list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelList(pub Vec<Label>);

fn parse_labels(s: &str) -> std::result::Result<LabelList, String> {
    parse_label_list(s)
        .map(LabelList)
        .map_err(|e| e.to_string())
}

fn parse_variant(s: &str) -> std::result::Result<SignVariant, String> {
    s.parse().map_err(|e: csmlap_core::Error| e.to_string())
}

fn parse_ring(s: &str) -> std::result::Result<RingContext, String> {
    s.parse().map_err(|e: csmlap_core::Error| e.to_string())
}

impl MatrixArgs {
    pub fn load(&self) -> Result<LabeledMatrix> {
        match (&self.matrix, self.symbolic) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                Ok(LabeledMatrix::parse_file(&text, self.ring.as_ref())?)
            }
            (None, Some(n)) => {
                let a = LabeledMatrix::symbolic(n);
                match &self.ring {
                    None => Ok(a),
                    Some(r) => Err(CliError::Usage(format!(
                        "--symbolic builds a polynomial matrix; --ring {r} does not apply"
                    ))),
                }
            }
            (None, None) => Err(CliError::Usage("give --matrix PATH or --symbolic N".into())),
        }
    }
}

impl PartitionArgs {
    pub fn resolve(&self, a: &LabeledMatrix) -> Result<CsmPartition> {
        Ok(CsmPartition::from_labels(
            a.rows(),
            a.cols(),
            &self.f.0,
            &self.g.0,
            &self.i.0,
        )?)
    }
}

impl LabelList {
    pub fn subset_of(&self, set: &OrderedIndexSet) -> Result<Subset> {
        Ok(set.subset(&self.0)?)
    }
}
