//! Phishing-vs-legitimate email classification through document embeddings.
//!
//! The crate covers the full experimental pipeline:
//!
//! - [`corpus`] — rule-constrained generation, validation, and JSONL persistence
//!   of a 24-email stimulus set (12 phishing / 12 legitimate), including
//!   suspicious-URL feature analysis.
//! - [`textprep`] — punctuation/URL/email/stopword removal plus Porter stemming.
//! - [`embeddings`] — a PV-DM document-embedding trainer with negative sampling,
//!   producing one 20-dimensional vector per email.
//! - [`projection`] — linear PCA and RBF-kernel PCA down to 2-D, with
//!   explained-variance curves.
//! - [`classifiers`] — native SVM (SMO), logistic regression, random forest,
//!   and Gaussian naive Bayes with a uniform fit/predict contract.
//! - [`evaluation`] — stratified 10-fold cross-validation, exhaustive grid
//!   search, metric computation, scenario orchestration, and decision-boundary
//!   grids.
//! - [`report`] — CSV/SVG/JSON export of results, embeddings, projections, and
//!   boundary plots.
//!
//! Everything is seed-deterministic: the same corpus, configuration, and seed
//! reproduce byte-identical results.

pub mod classifiers;
pub mod corpus;
pub mod embeddings;
mod error;
pub mod evaluation;
pub mod linalg;
pub mod projection;
pub mod report;
pub mod textprep;

pub use error::{Error, Result};
