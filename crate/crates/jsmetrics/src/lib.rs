//! Static complexity metrics for JavaScript source.
//!
//! Parses an ES5 + arrow-function grammar and computes the feature set used
//! to fingerprint in-browser mining scripts: Halstead operator/operand
//! counts and derived measures, cyclomatic complexity over a per-function
//! control-flow summary, line accounting, and a 0-100 maintainability
//! score. Everything is a pure function of the source text.

pub mod ast;
pub mod cfg;
pub mod csv;
pub mod error;
pub mod features;
pub mod fixture;
pub mod gen;
pub mod halstead;
pub mod lexer;
pub mod lines;
pub mod parser;

pub use cfg::{build_cfg_summary, CfgSummary};
pub use csv::{export_feature_matrix, parse_feature_matrix};
pub use error::ParseError;
pub use features::{compute_features, maintainability_score, FeatureVector, FEATURE_NAMES};
pub use halstead::{tokenize_and_count, TokenAccounting};
pub use lines::{count_lines, LineCounts};
