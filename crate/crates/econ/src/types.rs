//! Parameters and device profiles for the mining economics model.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EconError {
    #[error("hash rate must be positive")]
    ZeroHashRate,
    #[error("target must be positive")]
    ZeroTarget,
    #[error("target exceeds 2^256")]
    TargetTooLarge,
    #[error("requested duration outlives the battery")]
    BatteryExhausted,
    #[error("unknown device '{0}'")]
    UnknownDevice(String),
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
}

/// Market and payout constants. All overridable; the defaults are the
/// reference values the bundled fixtures were computed with.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EconParams {
    /// XMR paid per million hashes.
    pub payout_xmr_per_mhash: f64,
    /// USD per XMR.
    pub xmr_price_usd: f64,
    /// Electricity cost in USD per watt-hour.
    pub electricity_usd_per_wh: f64,
}

impl Default for EconParams {
    fn default() -> Self {
        EconParams {
            payout_xmr_per_mhash: 2.894e-5,
            xmr_price_usd: 200.0,
            electricity_usd_per_wh: 6.418e-5,
        }
    }
}

impl EconParams {
    pub fn usd_per_hash(&self) -> f64 {
        self.payout_xmr_per_mhash * self.xmr_price_usd / 1e6
    }
}

/// One measured operating point of a device: throttle setting, observed
/// hash rate, and battery level at the end of the standard session.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThrottlePoint {
    pub alpha: f64,
    pub hash_rate_hps: f64,
    pub end_battery_pct: f64,
}

/// A battery-powered device calibrated from session measurements. Between
/// the calibration points, hash rate and battery drain are interpolated
/// linearly in the throttle parameter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeviceProfile {
    pub name: String,
    /// Power draw in watts.
    pub power_watts: f64,
    /// Hours to recharge one percent of battery.
    pub recharge_hours_per_pct: f64,
    /// Reference session length in minutes.
    pub session_minutes: f64,
    /// Battery percent at session start.
    pub start_battery_pct: f64,
    /// Battery percent after the reference session without mining.
    pub baseline_end_battery_pct: f64,
    /// Measured operating points, ascending in alpha.
    pub throttle_points: Vec<ThrottlePoint>,
}

impl DeviceProfile {
    pub fn validate(&self) -> Result<(), EconError> {
        if self.throttle_points.is_empty() {
            return Err(EconError::InvalidProfile("no throttle points".into()));
        }
        if self
            .throttle_points
            .windows(2)
            .any(|w| w[0].alpha >= w[1].alpha)
        {
            return Err(EconError::InvalidProfile(
                "throttle points must ascend in alpha".into(),
            ));
        }
        let bs = self.start_battery_pct;
        let bn = self.baseline_end_battery_pct;
        if !(0.0..=100.0).contains(&bs) || bn > bs {
            return Err(EconError::InvalidProfile(
                "battery endpoints out of order".into(),
            ));
        }
        for p in &self.throttle_points {
            if p.end_battery_pct > bn {
                return Err(EconError::InvalidProfile(format!(
                    "mining endpoint {} exceeds baseline {bn}",
                    p.end_battery_pct
                )));
            }
        }
        Ok(())
    }

    fn interp(&self, alpha: f64, f: impl Fn(&ThrottlePoint) -> f64) -> f64 {
        let pts = &self.throttle_points;
        if pts.len() == 1 {
            return f(&pts[0]);
        }
        // pick the surrounding segment, extending the end segments outward
        let seg = pts
            .windows(2)
            .position(|w| alpha <= w[1].alpha)
            .unwrap_or(pts.len() - 2);
        let (a, b) = (&pts[seg], &pts[seg + 1]);
        let t = (alpha - a.alpha) / (b.alpha - a.alpha);
        f(a) + t * (f(b) - f(a))
    }

    /// Effective hash rate at the given throttle, linear between points.
    pub fn hash_rate(&self, alpha: f64) -> f64 {
        self.interp(alpha, |p| p.hash_rate_hps).max(0.0)
    }

    /// Battery percent left after the reference session while mining.
    pub fn mining_end_battery(&self, alpha: f64) -> f64 {
        self.interp(alpha, |p| p.end_battery_pct)
            .clamp(0.0, self.baseline_end_battery_pct)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile() -> DeviceProfile {
        DeviceProfile {
            name: "test".into(),
            power_watts: 50.0,
            recharge_hours_per_pct: 0.02,
            session_minutes: 60.0,
            start_battery_pct: 100.0,
            baseline_end_battery_pct: 80.0,
            throttle_points: vec![
                ThrottlePoint { alpha: 0.1, hash_rate_hps: 20.0, end_battery_pct: 10.0 },
                ThrottlePoint { alpha: 0.5, hash_rate_hps: 12.0, end_battery_pct: 30.0 },
                ThrottlePoint { alpha: 0.9, hash_rate_hps: 4.0, end_battery_pct: 60.0 },
            ],
        }
    }

    #[test]
    fn interpolation_hits_knots_exactly() {
        let p = profile();
        assert_eq!(p.hash_rate(0.1), 20.0);
        assert_eq!(p.hash_rate(0.5), 12.0);
        assert_eq!(p.hash_rate(0.9), 4.0);
        assert_eq!(p.mining_end_battery(0.5), 30.0);
    }

    #[test]
    fn interpolation_is_linear_between_knots() {
        let p = profile();
        assert_eq!(p.hash_rate(0.3), 16.0);
        assert_eq!(p.mining_end_battery(0.7), 45.0);
    }

    #[test]
    fn extension_beyond_knots_is_clamped_sanely() {
        let p = profile();
        // extending the last segment linearly, floored at zero
        assert_eq!(p.hash_rate(1.0), 2.0);
        assert!(p.mining_end_battery(0.0) >= 0.0);
        assert!(p.mining_end_battery(1.0) <= p.baseline_end_battery_pct);
    }

    #[test]
    fn hash_rate_is_non_increasing_and_battery_non_decreasing_in_alpha() {
        let p = profile();
        let mut last_h = f64::INFINITY;
        let mut last_b = -1.0;
        for i in 0..=20 {
            let a = i as f64 / 20.0;
            let h = p.hash_rate(a);
            let b = p.mining_end_battery(a);
            assert!(h <= last_h + 1e-12);
            assert!(b >= last_b - 1e-12);
            last_h = h;
            last_b = b;
        }
    }

    #[test]
    fn validation_rejects_disordered_profiles() {
        let mut p = profile();
        p.throttle_points[2].alpha = 0.2;
        assert!(p.validate().is_err());
        let mut q = profile();
        q.baseline_end_battery_pct = 101.0;
        assert!(q.validate().is_err());
    }
}
