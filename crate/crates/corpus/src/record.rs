//! Per-site scan records and top-level-domain classification.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Platform {
    Coinhive,
    Hashing,
    DeepMiner,
    Freecontent,
    CryptoLoot,
    Miner,
    Authedmine,
    JseCoin,
}

impl Platform {
    pub fn label(&self) -> &'static str {
        match self {
            Platform::Coinhive => "coinhive",
            Platform::Hashing => "hashing",
            Platform::DeepMiner => "deepminer",
            Platform::Freecontent => "freecontent",
            Platform::CryptoLoot => "cryptoloot",
            Platform::Miner => "miner",
            Platform::Authedmine => "authedmine",
            Platform::JseCoin => "jsecoin",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Currency {
    Monero,
    JseCoin,
}

impl Currency {
    pub fn label(&self) -> &'static str {
        match self {
            Currency::Monero => "monero",
            Currency::JseCoin => "jsecoin",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TldType {
    Generic,
    Country,
    New,
}

/// Classify a top-level domain. Known entries come from the studied
/// dataset's table; otherwise two-letter domains are country codes and the
/// rest default to generic.
pub fn classify_tld(tld: &str) -> TldType {
    match tld {
        "com" | "net" | "online" | "org" | "info" => TldType::Generic,
        "si" | "ru" | "sk" | "br" => TldType::Country,
        "site" => TldType::New,
        t if t.len() == 2 => TldType::Country,
        _ => TldType::Generic,
    }
}

/// What a scan of one page yields before it is attached to a domain.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ScanResult {
    pub platform: Option<Platform>,
    pub currency: Option<Currency>,
    pub site_key: Option<String>,
    pub throttle: Option<f64>,
    /// A template match without a usable key cannot actually mine.
    pub active: bool,
}

/// One scanned site of a corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SiteRecord {
    pub domain: String,
    pub tld: String,
    pub tld_type: TldType,
    pub platform: Option<Platform>,
    pub currency: Option<Currency>,
    pub site_key: Option<String>,
    pub throttle: Option<f64>,
    pub active: bool,
}

impl SiteRecord {
    pub fn from_scan(domain: &str, scan: ScanResult) -> SiteRecord {
        let tld = domain.rsplit('.').next().unwrap_or_default().to_lowercase();
        SiteRecord {
            domain: domain.to_string(),
            tld_type: classify_tld(&tld),
            tld,
            platform: scan.platform,
            currency: scan.currency,
            site_key: scan.site_key,
            throttle: scan.throttle,
            active: scan.active,
        }
    }
}

/// Serialize records as JSONL.
pub fn records_to_jsonl(records: &[SiteRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tld_classification_covers_the_dataset_table() {
        assert_eq!(classify_tld("com"), TldType::Generic);
        assert_eq!(classify_tld("net"), TldType::Generic);
        assert_eq!(classify_tld("si"), TldType::Country);
        assert_eq!(classify_tld("online"), TldType::Generic);
        assert_eq!(classify_tld("ru"), TldType::Country);
        assert_eq!(classify_tld("org"), TldType::Generic);
        assert_eq!(classify_tld("sk"), TldType::Country);
        assert_eq!(classify_tld("info"), TldType::Generic);
        assert_eq!(classify_tld("br"), TldType::Country);
        assert_eq!(classify_tld("site"), TldType::New);
        // fallbacks
        assert_eq!(classify_tld("de"), TldType::Country);
        assert_eq!(classify_tld("museum"), TldType::Generic);
    }

    #[test]
    fn record_extracts_tld_from_domain() {
        let r = SiteRecord::from_scan("mining.example.si", ScanResult::default());
        assert_eq!(r.tld, "si");
        assert_eq!(r.tld_type, TldType::Country);
        assert!(!r.active);
    }
}
