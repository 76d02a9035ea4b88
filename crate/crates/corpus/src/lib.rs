//! Corpus analysis of mining scripts embedded in web pages: signature-based
//! scanning, site records, and dataset-level distribution reports.

mod aggregate;
mod record;
mod scan;
mod signatures;
pub mod synthetic;

pub use aggregate::{aggregate, CountRow, DistributionReport, TldRow};
pub use record::{classify_tld, records_to_jsonl, Currency, Platform, ScanResult, SiteRecord, TldType};
pub use scan::scan_html;
pub use signatures::{default_signature_db, PlatformSignature, SignatureDb};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("bad signature database: {0}")]
    BadSignatureDb(String),
}
