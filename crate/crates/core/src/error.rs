use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix entry is not finite")]
    InvalidElement,
    #[error("matrix determinant is {det} (expected 1)")]
    NotUnitDeterminant { det: f64 },
    #[error("central element: every direction is fixed")]
    CentralElement,
    #[error("element class mismatch: expected {expected}, found {found}")]
    ClassMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("ambiguous classification: {0}")]
    AmbiguousClassification(String),
    #[error("no conjugator exists: {0}")]
    NoConjugator(String),
    #[error("invalid boundary: peripheral image #{index} is {class}")]
    InvalidBoundary { index: usize, class: &'static str },
    #[error("inconsistent representation: {0}")]
    InconsistentRepresentation(String),
    #[error("restriction undefined: boundary curve maps to {class}")]
    RestrictionUndefined { class: &'static str },
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("component ({n}, {s}) of surface (g={g}, p={p}) is empty: bound {lo} <= n <= {hi} violated and triple is not exceptional")]
    InfeasibleComponent {
        g: usize,
        p: usize,
        n: i64,
        s: String,
        lo: i64,
        hi: i64,
    },
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error("continuation step too large: angle moved by {step} >= pi/4")]
    StepSize { step: f64 },
    #[error("unsupported in exact mode: {0}")]
    ExactUnsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
