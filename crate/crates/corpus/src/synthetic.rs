//! Deterministic synthetic corpus reproducing the studied dataset's
//! marginal distributions: 5703 sites across the recorded top-level-domain
//! and platform counts. The platform table's own rows sum to one short of
//! its printed monero total (4925 vs 4926), so the largest platform carries
//! the spare record; every checked percentage stays within 0.1 points.

use crate::record::{Currency, Platform, ScanResult, SiteRecord};

pub const TOTAL_SITES: usize = 5703;

/// Recorded TLD counts; "others" is realized as eight further country
/// domains of 206 sites each.
pub const TLD_COUNTS: [(&str, usize); 10] = [
    ("com", 1945),
    ("net", 359),
    ("si", 358),
    ("online", 349),
    ("ru", 242),
    ("org", 191),
    ("sk", 169),
    ("info", 169),
    ("br", 157),
    ("site", 116),
];

pub const OTHER_TLDS: [&str; 8] = ["de", "fr", "it", "nl", "pl", "es", "cz", "io"];
pub const OTHERS_COUNT: usize = 1648;

/// Platform counts, with the one-record correction on the first row.
pub const PLATFORM_COUNTS: [(Platform, usize); 8] = [
    (Platform::Coinhive, 4653),
    (Platform::Hashing, 67),
    (Platform::DeepMiner, 56),
    (Platform::Freecontent, 39),
    (Platform::CryptoLoot, 38),
    (Platform::Miner, 38),
    (Platform::Authedmine, 35),
    (Platform::JseCoin, 149),
];

pub const NO_MINING_COUNT: usize = 628;

fn currency_of(p: Platform) -> Currency {
    match p {
        Platform::JseCoin => Currency::JseCoin,
        _ => Currency::Monero,
    }
}

/// Build the full synthetic record set. Fully deterministic: domains are
/// numbered, platforms are dealt round-robin over the site list so every
/// TLD sees a mix.
pub fn synthetic_dataset() -> Vec<SiteRecord> {
    let mut tld_pool: Vec<&'static str> = Vec::with_capacity(TOTAL_SITES);
    for (tld, count) in TLD_COUNTS {
        tld_pool.extend(std::iter::repeat_n(tld, count));
    }
    let per_other = OTHERS_COUNT / OTHER_TLDS.len();
    for tld in OTHER_TLDS {
        tld_pool.extend(std::iter::repeat_n(tld, per_other));
    }
    debug_assert_eq!(tld_pool.len(), TOTAL_SITES);

    let mut platform_pool: Vec<Option<Platform>> = Vec::with_capacity(TOTAL_SITES);
    for (platform, count) in PLATFORM_COUNTS {
        platform_pool.extend(std::iter::repeat_n(Some(platform), count));
    }
    platform_pool.extend(std::iter::repeat_n(None, NO_MINING_COUNT));
    debug_assert_eq!(platform_pool.len(), TOTAL_SITES);

    // a fixed-stride deal decouples platform runs from TLD runs
    let stride = 641; // coprime with 5703 = 3 * 1901
    let throttles = [0.1, 0.5, 0.9];
    (0..TOTAL_SITES)
        .map(|i| {
            let platform = platform_pool[(i * stride) % TOTAL_SITES];
            let scan = match platform {
                Some(p) => ScanResult {
                    platform: Some(p),
                    currency: Some(currency_of(p)),
                    site_key: Some(format!("{:032x}", (i as u128).wrapping_mul(0x9E37_79B9))),
                    throttle: Some(throttles[i % throttles.len()]),
                    active: true,
                },
                None => ScanResult::default(),
            };
            SiteRecord::from_scan(&format!("site{i:05}.{}", tld_pool[i]), scan)
        })
        .collect()
}
