//! Error types shared across the crate.

use std::path::PathBuf;
use thiserror::Error;

/// Errors produced while loading or validating lexicon resources.
#[derive(Debug, Error)]
pub enum LexiconError {
    /// A required resource file is missing from the lexicon directory.
    #[error("missing lexicon file: {0}")]
    MissingFile(PathBuf),

    /// An I/O failure while reading a resource file.
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A malformed record, reported with file and line number.
    #[error("{file}:{line}: {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },

    /// Cross-file validation failure (e.g. a lemma map referencing an
    /// unknown pattern).
    #[error("lexicon consistency error: {0}")]
    Consistency(String),
}

/// Errors raised by analysis operations.
#[derive(Debug, Error)]
pub enum AnalysisError {
    /// A pattern was instantiated with a root of the wrong length.
    #[error("root `{root}` has {got} consonants but pattern `{pattern}` expects {expected}")]
    ArityMismatch {
        pattern: String,
        root: String,
        expected: usize,
        got: usize,
    },

    /// An operation was called on an analysis of an incompatible category.
    #[error("operation not defined for category {0}")]
    CategoryContract(String),
}

/// Errors raised by the evaluation harness.
#[derive(Debug, Error)]
pub enum EvalError {
    /// Prediction and gold sequences differ in length.
    #[error("prediction/gold length mismatch: {predictions} vs {gold}")]
    LengthMismatch { predictions: usize, gold: usize },

    /// Surfaces diverge at the given position.
    #[error("alignment error at position {position}: prediction `{prediction}` vs gold `{gold}`")]
    SurfaceMismatch {
        position: usize,
        prediction: String,
        gold: String,
    },

    /// A malformed gold record.
    #[error("{file}:{line}: {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },
}
