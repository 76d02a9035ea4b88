//! HTML scanning: find mining templates, pull out keys and throttles.

use crate::record::ScanResult;
use crate::signatures::SignatureDb;
use crate::CorpusError;

/// Scan one page. Platforms are tried in database order; the first whose
/// script marker or constructor pattern appears wins. A match without a
/// non-empty key is recorded as inactive: the page carries the template but
/// cannot attribute work to anyone.
pub fn scan_html(html: &str, db: &SignatureDb) -> Result<ScanResult, CorpusError> {
    let compiled = db.compile()?;
    for sig in &compiled {
        let marker_hit = sig.script_markers.iter().any(|m| html.contains(m.as_str()));
        let ctor_hit = sig.constructor.is_match(html);
        if !(marker_hit || ctor_hit) {
            continue;
        }
        let site_key = sig
            .key
            .captures(html)
            .and_then(|c| c.get(1))
            .map(|m| m.as_str().to_string())
            .filter(|k| !k.is_empty());
        let throttle = sig
            .throttle
            .captures(html)
            .and_then(|c| c.get(1))
            .and_then(|m| m.as_str().parse::<f64>().ok())
            .map(|t| t.clamp(0.0, 1.0));
        return Ok(ScanResult {
            platform: Some(sig.platform),
            currency: Some(sig.currency),
            active: site_key.is_some(),
            site_key,
            throttle,
        });
    }
    Ok(ScanResult::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::{Currency, Platform};
    use crate::signatures::default_signature_db;

    const MINER_PAGE: &str = r#"
        <html><head>
        <script src="./Welcome_files/coinhive.min.js"></script>
        <script>
            var miner = new coinhive.Anonymous("owner key",
                {throttle: 0.1});
            miner.start();
        </script>
        </head><body>welcome</body></html>
    "#;

    #[test]
    fn miner_template_yields_platform_currency_key_and_throttle() {
        let db = default_signature_db();
        let r = scan_html(MINER_PAGE, &db).unwrap();
        assert_eq!(r.platform, Some(Platform::Coinhive));
        assert_eq!(r.currency, Some(Currency::Monero));
        assert_eq!(r.site_key.as_deref(), Some("owner key"));
        assert_eq!(r.throttle, Some(0.1));
        assert!(r.active);
    }

    #[test]
    fn page_without_scripts_is_clean() {
        let db = default_signature_db();
        let r = scan_html("<html><body><p>nothing here</p></body></html>", &db).unwrap();
        assert_eq!(r, ScanResult::default());
    }

    #[test]
    fn keyless_template_is_detected_but_inactive() {
        let db = default_signature_db();
        let page = r#"<script src="coinhive.min.js"></script>
            <script>var miner = new CoinHive.Anonymous("", {throttle: 0.5}); miner.start();</script>"#;
        let r = scan_html(page, &db).unwrap();
        assert_eq!(r.platform, Some(Platform::Coinhive));
        assert!(!r.active);
        assert_eq!(r.site_key, None);
        assert_eq!(r.throttle, Some(0.5));
    }

    #[test]
    fn marker_alone_suffices_for_detection() {
        let db = default_signature_db();
        let r = scan_html(r#"<script src="https://load.jsecoin.com/load/x/"></script>"#, &db)
            .unwrap();
        assert_eq!(r.platform, Some(Platform::JseCoin));
        assert_eq!(r.currency, Some(Currency::JseCoin));
        assert!(!r.active);
    }

    #[test]
    fn first_match_wins_in_database_order() {
        let db = default_signature_db();
        let page = r#"<script src="coinhive.min.js"></script><script src="deepminer.js"></script>"#;
        let r = scan_html(page, &db).unwrap();
        assert_eq!(r.platform, Some(Platform::Coinhive));
    }

    #[test]
    fn scanning_is_deterministic() {
        let db = default_signature_db();
        assert_eq!(scan_html(MINER_PAGE, &db).unwrap(), scan_html(MINER_PAGE, &db).unwrap());
    }
}
