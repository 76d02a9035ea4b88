//! The 17-feature static complexity vector for one script.

use crate::cfg::build_cfg_summary;
use crate::error::ParseError;
use crate::halstead::tokenize_and_count;
use crate::lines::count_lines;

/// Canonical feature order, matching the exported CSV header.
pub const FEATURE_NAMES: [&str; 17] = [
    "M", "M_d", "B", "D", "E", "c_l", "T", "eta", "V", "eta1", "n1", "eta2", "n2", "params",
    "sloc", "physical", "M_s",
];

/// One script's static complexity fingerprint.
///
/// `e_h`/`t_h` are Halstead effort and time; the control-flow edge count
/// lives in `CfgSummary`, keeping the two `E`/`T` meanings apart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeatureVector {
    /// Cyclomatic complexity.
    pub m: f64,
    /// Cyclomatic complexity density, percent of logical lines.
    pub m_d: f64,
    /// Halstead delivered bugs.
    pub b: f64,
    /// Halstead difficulty.
    pub d: f64,
    /// Halstead effort.
    pub e_h: f64,
    /// Logical lines.
    pub c_l: f64,
    /// Halstead time, seconds.
    pub t_h: f64,
    /// Halstead vocabulary.
    pub eta: f64,
    /// Halstead volume.
    pub v: f64,
    pub eta1: f64,
    pub n1: f64,
    pub eta2: f64,
    pub n2: f64,
    pub params: f64,
    pub sloc: f64,
    pub physical: f64,
    /// Maintainability score, clamped to [0, 100].
    pub m_s: f64,
}

impl FeatureVector {
    pub fn as_array(&self) -> [f64; 17] {
        [
            self.m, self.m_d, self.b, self.d, self.e_h, self.c_l, self.t_h, self.eta, self.v,
            self.eta1, self.n1, self.eta2, self.n2, self.params, self.sloc, self.physical,
            self.m_s,
        ]
    }

    pub fn from_array(a: [f64; 17]) -> Self {
        FeatureVector {
            m: a[0],
            m_d: a[1],
            b: a[2],
            d: a[3],
            e_h: a[4],
            c_l: a[5],
            t_h: a[6],
            eta: a[7],
            v: a[8],
            eta1: a[9],
            n1: a[10],
            eta2: a[11],
            n2: a[12],
            params: a[13],
            sloc: a[14],
            physical: a[15],
            m_s: a[16],
        }
    }
}

/// `ln` with non-positive arguments treated as a zero term.
fn ln_or_zero(x: f64) -> f64 {
    if x > 0.0 {
        x.ln()
    } else {
        0.0
    }
}

/// Maintainability score on the 0-100 scale from volume, cyclomatic
/// complexity and logical lines.
pub fn maintainability_score(volume: f64, cyclomatic: f64, logical_lines: f64) -> f64 {
    let raw = 171.0 - 5.2 * ln_or_zero(volume) - 0.23 * cyclomatic - 16.2 * ln_or_zero(logical_lines);
    (100.0 * raw / 171.0).clamp(0.0, 100.0)
}

/// Parse `source` and compute the full 17-feature vector.
pub fn compute_features(source: &str) -> Result<FeatureVector, ParseError> {
    let tokens = tokenize_and_count(source)?;
    let cfg = build_cfg_summary(source)?;
    let lines = count_lines(source)?;

    let eta1 = tokens.eta1 as f64;
    let eta2 = tokens.eta2 as f64;
    let n1 = tokens.n1 as f64;
    let n2 = tokens.n2 as f64;
    let eta = eta1 + eta2;
    let length = n1 + n2;
    let volume = if eta > 0.0 { length * eta.log2() } else { 0.0 };
    let difficulty = if eta2 > 0.0 { (eta1 / 2.0) * (n2 / eta2) } else { 0.0 };
    let effort = difficulty * volume;
    let time = effort / 18.0;
    let bugs = effort.powf(2.0 / 3.0) / 3000.0;

    let m = cfg.cyclomatic() as f64;
    let c_l = lines.logical as f64;
    let m_d = if c_l > 0.0 { 100.0 * m / c_l } else { 0.0 };

    Ok(FeatureVector {
        m,
        m_d,
        b: bugs,
        d: difficulty,
        e_h: effort,
        c_l,
        t_h: time,
        eta,
        v: volume,
        eta1,
        n1,
        eta2,
        n2,
        params: lines.params as f64,
        sloc: lines.sloc as f64,
        physical: lines.physical as f64,
        m_s: maintainability_score(volume, m, c_l),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1e-12)
    }

    #[test]
    fn empty_program_is_all_zero_except_score() {
        let f = compute_features("").unwrap();
        assert_eq!(f.m, 0.0);
        assert_eq!(f.v, 0.0);
        assert_eq!(f.m_d, 0.0);
        // 171/171 * 100 clamps to 100
        assert_eq!(f.m_s, 100.0);
    }

    #[test]
    fn halstead_identities_hold() {
        let f = compute_features("function f(a, b) { if (a && b) { return a / b; } return 0; }")
            .unwrap();
        assert!(close(f.eta, f.eta1 + f.eta2, 1e-9));
        assert!(close(f.e_h, f.d * f.v, 1e-9));
        assert!(close(f.t_h, f.e_h / 18.0, 1e-9));
        assert!(close(f.b, f.e_h.powf(2.0 / 3.0) / 3000.0, 1e-9));
        assert!(close(f.v, (f.n1 + f.n2) * (f.eta).log2(), 1e-9));
    }

    #[test]
    fn density_is_definitional() {
        // M = 1 and 1 logical line -> density 100
        let f = compute_features("a = 1;").unwrap();
        assert_eq!(f.m, 1.0);
        assert_eq!(f.c_l, 1.0);
        assert_eq!(f.m_d, 100.0);
    }

    #[test]
    fn score_matches_direct_evaluation() {
        // V=1000, M=10, c_l=50 plugged straight into the normalized formula
        let v: f64 = 1000.0;
        let c: f64 = 50.0;
        let expected = 100.0 * (171.0 - 5.2 * v.ln() - 0.23 * 10.0 - 16.2 * c.ln()) / 171.0;
        assert!(close(maintainability_score(1000.0, 10.0, 50.0), expected, 1e-12));
        assert!((0.0..=100.0).contains(&expected));
    }

    #[test]
    fn score_is_clamped() {
        assert_eq!(maintainability_score(0.0, 0.0, 0.0), 100.0);
        // gigantic volume drives the raw score negative
        assert_eq!(maintainability_score(1e30, 10000.0, 1e9), 0.0);
    }

    #[test]
    fn deterministic_across_calls() {
        let src = "var miner = new coinhive.Anonymous('key', {throttle: 0.1}); miner.start();";
        assert_eq!(compute_features(src).unwrap(), compute_features(src).unwrap());
    }
}
