use thiserror::Error;

use crate::orbit::ActionType;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid basis index pair ({0}, {1})")]
    InvalidIndex(usize, usize),

    #[error("invalid V axis {0}, expected 1..=7")]
    InvalidAxis(usize),

    #[error("matrix is not symmetric (defect {0:e})")]
    Asymmetric(f64),

    #[error("matrix is not orthogonal (defect {0:e})")]
    NotOrthogonal(f64),

    #[error("generator is not in so(7) (alpha-defect {0:e})")]
    NotInSo7(f64),

    #[error("subspace is not contained in the ambient space (residual {0:e})")]
    NotASubspace(f64),

    #[error("unknown subalgebra '{0}'")]
    UnknownSubalgebra(String),

    #[error("t = {t} lies outside the parameter range [{lo}, {hi}]")]
    OutOfRange { t: f64, lo: f64, hi: f64 },

    #[error("t = {t} is within {guard:e} of the singular parameter {singular}")]
    NearSingular { t: f64, singular: f64, guard: f64 },

    #[error("orbit through g({t}) is singular (codimension {codimension})")]
    SingularOrbit { t: f64, codimension: usize },

    #[error("normal is not a unit normal: |norm - 1| = {norm_defect:e}, tangential part {tangential:e}")]
    InvalidNormal { norm_defect: f64, tangential: f64 },

    #[error("tangent lift residual {0:e} exceeds tolerance")]
    LiftFailed(f64),

    #[error("raw shape operator asymmetry {0:e} exceeds tolerance")]
    ShapeAsymmetry(f64),

    #[error("no reflection isometry is available for action type {0}")]
    UnsupportedAction(ActionType),

    #[error("no sign change found for {0}")]
    NoRoot(String),

    #[error("expected a single root, found {0:?}")]
    MultipleRoots(Vec<f64>),

    #[error("spectrum structure mismatch: engine {engine:?} vs closed form {closed_form:?}")]
    StructuralMismatch {
        engine: Vec<(f64, usize)>,
        closed_form: Vec<(f64, usize)>,
    },
}
