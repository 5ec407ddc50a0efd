use std::fmt;

use crate::dsl::Diagnostic;

pub type Result<T> = std::result::Result<T, Error>;

/// What a truncated table would need to support a requested check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationNeed {
    pub what: String,
    pub depth: u32,
    pub window: (i64, i64),
    pub degree: u32,
}

impl fmt::Display for TruncationNeed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} needs degree >= {}, depth >= {}, window covering [{}, {}]",
            self.what, self.degree, self.depth, self.window.0, self.window.1
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("n-th product with negative n = {0} is not defined on the conformal algebra")]
    NegativeIndex(i64),
    #[error("axioms fail: {0}")]
    AxiomFailure(String),
    #[error("not nilpotent: lower central series stabilizes at {stable}")]
    NotNilpotent { stable: String },
    #[error("truncation insufficient: {0}")]
    TruncationInsufficient(TruncationNeed),
    #[error("{}", render_diagnostics(.0))]
    Parse(Vec<Diagnostic>),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

fn render_diagnostics(ds: &[Diagnostic]) -> String {
    ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n")
}
