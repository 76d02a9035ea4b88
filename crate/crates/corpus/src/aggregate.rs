//! Corpus-level distributions: sites per top-level domain, per platform,
//! and per mined currency.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::record::{SiteRecord, TldType};

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CountRow {
    pub name: String,
    pub count: u64,
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TldRow {
    pub tld: String,
    pub tld_type: TldType,
    pub count: u64,
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct DistributionReport {
    pub total: u64,
    /// Descending by count, ties broken alphabetically.
    pub tlds: Vec<TldRow>,
    pub platforms: Vec<CountRow>,
    pub currencies: Vec<CountRow>,
    /// Sites with no mining template at all.
    pub no_mining: CountRow,
}

fn pct(count: u64, total: u64) -> f64 {
    if total == 0 {
        0.0
    } else {
        100.0 * count as f64 / total as f64
    }
}

/// Fold a record set into its distribution report. Permutation-invariant:
/// rows are keyed and sorted, never order-dependent.
pub fn aggregate(records: &[SiteRecord]) -> DistributionReport {
    let total = records.len() as u64;
    if total == 0 {
        return DistributionReport::default();
    }

    let mut tlds: BTreeMap<(String, TldType), u64> = BTreeMap::new();
    let mut platforms: BTreeMap<&'static str, u64> = BTreeMap::new();
    let mut currencies: BTreeMap<&'static str, u64> = BTreeMap::new();
    let mut none = 0u64;
    for r in records {
        *tlds.entry((r.tld.clone(), r.tld_type)).or_insert(0) += 1;
        match r.platform {
            Some(p) => *platforms.entry(p.label()).or_insert(0) += 1,
            None => none += 1,
        }
        if let Some(c) = r.currency {
            *currencies.entry(c.label()).or_insert(0) += 1;
        }
    }

    let mut tld_rows: Vec<TldRow> = tlds
        .into_iter()
        .map(|((tld, tld_type), count)| TldRow {
            tld,
            tld_type,
            count,
            percent: pct(count, total),
        })
        .collect();
    tld_rows.sort_by(|a, b| b.count.cmp(&a.count).then(a.tld.cmp(&b.tld)));

    let to_rows = |m: BTreeMap<&'static str, u64>| -> Vec<CountRow> {
        let mut rows: Vec<CountRow> = m
            .into_iter()
            .map(|(name, count)| CountRow {
                name: name.to_string(),
                count,
                percent: pct(count, total),
            })
            .collect();
        rows.sort_by(|a, b| b.count.cmp(&a.count).then(a.name.cmp(&b.name)));
        rows
    };

    DistributionReport {
        total,
        tlds: tld_rows,
        platforms: to_rows(platforms),
        currencies: to_rows(currencies),
        no_mining: CountRow {
            name: "no_mining".to_string(),
            count: none,
            percent: pct(none, total),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::{ScanResult, SiteRecord};

    #[test]
    fn empty_input_gives_an_empty_report() {
        let r = aggregate(&[]);
        assert_eq!(r.total, 0);
        assert!(r.tlds.is_empty());
        assert!(r.platforms.is_empty());
    }

    #[test]
    fn percentages_sum_to_one_hundred() {
        let records: Vec<SiteRecord> = ["a.com", "b.com", "c.ru", "d.si", "e.net"]
            .iter()
            .map(|d| SiteRecord::from_scan(d, ScanResult::default()))
            .collect();
        let r = aggregate(&records);
        let sum: f64 = r.tlds.iter().map(|t| t.percent).sum();
        assert!((sum - 100.0).abs() < 0.1);
        assert_eq!(r.tlds[0].tld, "com");
        assert_eq!(r.tlds[0].count, 2);
    }

    #[test]
    fn aggregation_is_permutation_invariant() {
        let mut records: Vec<SiteRecord> = (0..40)
            .map(|i| {
                SiteRecord::from_scan(
                    &format!("s{i}.{}", if i % 3 == 0 { "com" } else { "ru" }),
                    ScanResult::default(),
                )
            })
            .collect();
        let forward = aggregate(&records);
        records.reverse();
        assert_eq!(aggregate(&records), forward);
    }
}
