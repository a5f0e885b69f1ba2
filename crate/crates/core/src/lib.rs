//! Exact determinant identities over commutative rings.
//!
//! * [`ring`]: integers, rationals, `Z/mZ` and integer polynomials, with exact equality.
//! * [`index`]: ordered label sets, position/rank functions, successor extensions and
//!   the partitions that drive the expansions.
//! * [`matrix`]: label-indexed dense matrices, submatrices, elementary operations and the
//!   permutation-sum determinant used as the reference oracle.
//! * [`laplace`]: Laplace expansion along any row subset.
//! * [`csm`]: the common-submatrix Laplace expansion, the enlarged matrices used to
//!   prove it, and a verifier.
//! * [`condensation`]: the Desnanot–Jacobi identity and Dodgson condensation.

pub mod condensation;
pub mod csm;
pub mod error;
pub mod index;
pub mod laplace;
pub mod matrix;
pub mod ring;

pub use condensation::{
    condense, desnanot_jacobi, det_condensation, CondensationTrace, DesnanotJacobi,
};
pub use csm::{
    build_doubled, build_initialized, build_tilde, csm_lhs, csm_rhs, csm_rhs_complement, csm_terms,
    verify_csm, CsmReport,
};
pub use error::{Error, Result};
pub use index::{CsmPartition, Label, OrderedIndexSet, Sign, SignVariant, Subset};
pub use laplace::{laplace_det, laplace_det_dropped, laplace_terms, ExpansionTerm};
pub use matrix::{LabeledMatrix, Select};
pub use ring::{RingContext, RingValue};
